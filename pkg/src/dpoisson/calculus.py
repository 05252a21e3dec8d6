"""Noncommutative 1-forms and double derivations over a free algebra.

Omega carries one form generator per algebra generator, same degree, so the
universal derivation d has degree 0 and needs no signs.  Der carries one
double derivation generator per algebra generator with degree -|x_i| - r;
its pairing against algebra words is the two-sided partial derivative.

koszul_bracket turns a double Poisson bracket on A into double
Lie-Rinehart data on Omega by differentiating the table legwise.
sn_bracket equips A + Der with its Schouten-Nijenhuis-type bracket; the
vanishing of the bracket of two generating derivations is evaluated from
the defining composites, not assumed.
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from typing import Callable, Dict, Optional, Union

from .core import (
    Colour,
    FreeAlgebra,
    Generator,
    NCPoly,
    ShiftContext,
    Tensor2,
    Tensor3,
    Word,
    sign_exp,
)
from .brackets import (
    BracketSpec,
    check_antisymmetry,
    check_double_jacobi,
)
from .dlr import BimoduleSpec, DLRData, _split_module_word
from .reports import CheckReport


def _prefixed_bimodule(base: FreeAlgebra, prefix: str, degree_of) -> BimoduleSpec:
    names = {g.name for g in base.gens}
    mgens = []
    for g in base.gens:
        nm = prefix + g.name
        if nm in names:
            raise ValueError(f"generator name collision: '{nm}'")
        names.add(nm)
        mgens.append(Generator(nm, degree_of(g), Colour.MODULE))
    return BimoduleSpec(base, mgens)


class OmegaPresentation:
    """Bimodule of noncommutative 1-forms on a free base algebra."""

    def __init__(self, base: FreeAlgebra):
        for g in base.gens:
            if g.colour is not Colour.BASE:
                raise ValueError("base algebra must have BASE generators only")
        self.base = base
        self.bimodule = _prefixed_bimodule(base, "d", lambda g: g.degree)
        n = len(base.gens)
        # ambient index of dx_i for base index i
        self.form_of = {i: n + i for i in range(n)}


def universal_derivation(omega: OmegaPresentation, x: Union[NCPoly, Word]) -> NCPoly:
    """d(w) replaces each letter of w by its form generator in turn."""
    alg = omega.bimodule.ambient
    if isinstance(x, NCPoly):
        items = x.terms.items()
    else:
        items = [(tuple(x), Fraction(1))]
    out: dict = {}
    for w, c in items:
        for j, letter in enumerate(w):
            if alg.is_module(letter):
                raise ValueError(f"not a base word: {alg.render_word(w)}")
            key = w[:j] + (omega.form_of[letter],) + w[j + 1:]
            out[key] = out.get(key, Fraction(0)) + c
    return NCPoly(alg, out)


def lift_derivation(omega: OmegaPresentation, h: Dict,
                    source_degree: int = 0) -> Callable:
    """Contraction against a table on the form generators.

    h maps base generators either to Tensor2 values (a double derivation)
    or to NCPoly values (a plain M-valued derivation).  In the Tensor2
    branch the contraction picks up (-1)^(source_degree * |prefix|) when
    sliding past the letters before the form; source_degree r + |a| makes
    the contraction of d against {{a, -}} reproduce the bracket exactly.
    """
    alg = omega.bimodule.ambient
    table: dict = {}
    kinds = set()
    for key, val in h.items():
        i = alg.index(key) if isinstance(key, str) else key
        kinds.add(type(val).__name__)
        table[omega.form_of[i]] = val
    if len(kinds) > 1:
        raise ValueError("mixed value kinds in derivation table")
    tensor_valued = kinds == {"Tensor2"}

    def contract(p: NCPoly):
        if p.algebra != alg:
            raise ValueError("incompatible algebras")
        out: dict = {}
        for w, c in p.terms.items():
            pos = [k for k, i in enumerate(w) if alg.is_module(i)]
            if not pos:
                continue
            if len(pos) > 1:
                raise ValueError(f"not a weight-one word: {alg.render_word(w)}")
            k = pos[0]
            pre, form, post = w[:k], w[k], w[k + 1:]
            val = table.get(form)
            if val is None:
                continue
            if tensor_valued:
                s = sign_exp(source_degree, alg.degree(pre))
                for (t1, t2), c2 in val.terms.items():
                    key = (pre + t1, t2 + post)
                    out[key] = out.get(key, Fraction(0)) + s * c * c2
            else:
                for wv, c2 in val.terms.items():
                    key = pre + wv + post
                    out[key] = out.get(key, Fraction(0)) + c * c2
        if tensor_valued:
            return Tensor2(alg, out)
        return NCPoly(alg, out)

    return contract


def _legwise_d(omega: OmegaPresentation, t: Tensor2, leg: int) -> Tensor2:
    alg = omega.bimodule.ambient
    out: dict = {}
    for (u, v), c in t.terms.items():
        w = (u, v)[leg]
        for j, letter in enumerate(w):
            dw = w[:j] + (omega.form_of[letter],) + w[j + 1:]
            key = (dw, v) if leg == 0 else (u, dw)
            out[key] = out.get(key, Fraction(0)) + c
    return Tensor2(alg, out)


def koszul_bracket(spec: BracketSpec, verify_len: int = 2) -> DLRData:
    """Double Lie-Rinehart data on 1-forms induced by a double Poisson
    bracket: the anchor is the bracket table itself, the form bracket its
    legwise derivative."""
    if not check_antisymmetry(spec, verify_len).ok or not check_double_jacobi(spec, verify_len).ok:
        raise ValueError("input is not double Poisson")
    base = spec.algebra
    if base.module_indices:
        raise ValueError("base algebra must have BASE generators only")
    omega = OmegaPresentation(base)
    amb = omega.bimodule.ambient

    def relift(t: Tensor2) -> Tensor2:
        # base words keep their indices in the ambient algebra
        return Tensor2(amb, dict(t.terms))

    anchor: dict = {}
    mbracket: dict = {}
    for i in range(len(base.gens)):
        for j in range(len(base.gens)):
            val = spec.elem(i, j)
            if not val:
                continue
            lifted = relift(val)
            anchor[(omega.form_of[i], j)] = lifted
            l = _legwise_d(omega, lifted, 0)
            r = _legwise_d(omega, lifted, 1)
            if l or r:
                mbracket[(omega.form_of[i], omega.form_of[j])] = (l, r)
    data = DLRData(omega.bimodule, spec.shift, anchor, mbracket)
    data.omega = omega
    return data


def koszul_square_check(spec: BracketSpec, data: Optional[DLRData] = None,
                        max_len: int = 3) -> CheckReport:
    """Differentiating the bracket legwise agrees with bracketing the
    differentials, on all base word pairs."""
    if data is None:
        data = koszul_bracket(spec)
    omega = getattr(data, "omega", None)
    if omega is None:
        omega = OmegaPresentation(spec.algebra)
        if omega.bimodule != data.bimodule:
            raise ValueError("data does not present the forms of this algebra")
    amb = omega.bimodule.ambient
    rep = CheckReport("koszul-square", max_len)
    words = list(spec.algebra.words_up_to(max_len))
    for u, v in itertools.product(words, words):
        t = Tensor2(amb, dict(spec.eval_words(u, v).terms))
        lhs = _legwise_d(omega, t, 0) + _legwise_d(omega, t, 1)
        du = universal_derivation(omega, u)
        dv = universal_derivation(omega, v)
        acc: dict = {}
        for w1, c1 in du.terms.items():
            for w2, c2 in dv.terms.items():
                L, R = data.mb_eval(w1, w2)
                for key, c in itertools.chain(L.terms.items(), R.terms.items()):
                    acc[key] = acc.get(key, Fraction(0)) + c1 * c2 * c
        diff = lhs - Tensor2(amb, acc)
        if diff:
            rep.add(
                "koszul-square",
                False,
                witness=f"({spec.algebra.render_word(u)}, {spec.algebra.render_word(v)})",
                residual=diff.render(),
            )
            return rep
    rep.add("koszul-square", True)
    return rep


class DerPresentation:
    """Bimodule of generating double derivations, degree -|x_i| - r."""

    def __init__(self, base: FreeAlgebra, shift: ShiftContext = ShiftContext(0)):
        for g in base.gens:
            if g.colour is not Colour.BASE:
                raise ValueError("base algebra must have BASE generators only")
        self.base = base
        self.shift = shift
        self.bimodule = _prefixed_bimodule(
            base, "D", lambda g: -g.degree - shift.r
        )
        n = len(base.gens)
        self.der_of = {i: n + i for i in range(n)}
        self.base_of = {n + i: i for i in range(n)}


def double_partial(der: DerPresentation, i: int, w: Word) -> Tensor2:
    """Two-sided partial with respect to base generator i."""
    alg = der.bimodule.ambient
    dD = alg.gens[der.der_of[i]].degree
    terms: dict = {}
    for j, letter in enumerate(w):
        if letter != i:
            continue
        key = (w[:j], w[j + 1:])
        s = sign_exp(dD, alg.degree(w[:j]))
        terms[key] = terms.get(key, Fraction(0)) + s
    return Tensor2(alg, terms)


def ev_pairing(der: DerPresentation, xi, w) -> Tensor2:
    """Evaluate a weight-one derivation word p D_i q on algebra words:
    the partial acts inside, p and q close around it, and q pays the sign
    for sliding past the argument."""
    alg = der.bimodule.ambient
    if isinstance(xi, NCPoly):
        xi_items = xi.terms.items()
    else:
        xi_items = [(tuple(xi), Fraction(1))]
    if isinstance(w, NCPoly):
        w_items = w.terms.items()
    else:
        w_items = [(tuple(w), Fraction(1))]
    out: dict = {}
    for wx, cx in xi_items:
        p, D, q = _split_module_word(alg, wx)
        i = der.base_of[D]
        dq = alg.degree(q)
        for ww, cw in w_items:
            s0 = sign_exp(dq, alg.degree(ww))
            for (t1, t2), c in double_partial(der, i, ww).terms.items():
                key = (p + t1, t2 + q)
                out[key] = out.get(key, Fraction(0)) + s0 * cx * cw * c
    return Tensor2(alg, out)


def phi_composite(der: DerPresentation, theta: Word, eta: Word, wa: Word) -> Tensor3:
    """First closure composite: both orders of contracting theta and eta
    into a word, compared after swapping the last two output legs."""
    alg = der.bimodule.ambient
    deg = alg.degree
    dth, det = deg(theta), deg(eta)
    raw: dict = {}
    for (u, v), c in ev_pairing(der, eta, wa).terms.items():
        for (s1, t1), c2 in ev_pairing(der, theta, u).terms.items():
            key = (s1, t1, v)
            raw[key] = raw.get(key, Fraction(0)) + c * c2
    s0 = -sign_exp(dth, det)
    for (u, v), c in ev_pairing(der, theta, wa).terms.items():
        se = s0 * sign_exp(det, deg(u))
        for (s1, t1), c2 in ev_pairing(der, eta, v).terms.items():
            key = (u, s1, t1)
            raw[key] = raw.get(key, Fraction(0)) + se * c * c2
    out: dict = {}
    for (a, b, c3), coef in raw.items():
        s = sign_exp(deg(b), deg(c3))
        key = (a, c3, b)
        out[key] = out.get(key, Fraction(0)) + s * coef
    return Tensor3(alg, out)


def psi_composite(der: DerPresentation, theta: Word, eta: Word, wa: Word) -> Tensor3:
    """Second closure composite, with the swap on the first two legs."""
    alg = der.bimodule.ambient
    deg = alg.degree
    dth, det = deg(theta), deg(eta)
    raw: dict = {}
    for (w1, w2), c in ev_pairing(der, eta, wa).terms.items():
        s = sign_exp(dth, deg(w1))
        for (s1, t1), c2 in ev_pairing(der, theta, w2).terms.items():
            key = (w1, s1, t1)
            raw[key] = raw.get(key, Fraction(0)) + s * c * c2
    s0 = -sign_exp(dth, det)
    for (u, v), c in ev_pairing(der, theta, wa).terms.items():
        for (s1, t1), c2 in ev_pairing(der, eta, u).terms.items():
            key = (s1, t1, v)
            raw[key] = raw.get(key, Fraction(0)) + s0 * c * c2
    out: dict = {}
    for (a, b, c3), coef in raw.items():
        s = sign_exp(deg(a), deg(b))
        key = (b, a, c3)
        out[key] = out.get(key, Fraction(0)) + s * coef
    return Tensor3(alg, out)


def sn_bracket(base: FreeAlgebra, shift: ShiftContext = ShiftContext(0)) -> BracketSpec:
    """Schouten-Nijenhuis-type bracket on the algebra of base generators
    and generating double derivations.

    The pairing table {{D_i, x_j}} is computed from the derivation
    evaluation; the vanishing of {{D_i, D_j}} is certified by evaluating
    the closure composites on every generator and refusing to proceed if
    any survives.
    """
    der = DerPresentation(base, shift)
    alg = der.bimodule.ambient
    n = len(base.gens)
    for i, j in itertools.product(range(n), range(n)):
        th = (der.der_of[i],)
        et = (der.der_of[j],)
        for k in range(n):
            wa = (k,)
            for name, t in (("phi", phi_composite(der, th, et, wa)),
                            ("psi", psi_composite(der, th, et, wa))):
                if t:
                    raise RuntimeError(
                        f"closure composite {name}({alg.gens[th[0]].name}, "
                        f"{alg.gens[et[0]].name}, {base.gens[k].name}) "
                        f"does not vanish: {t.render()}"
                    )
    table: dict = {}
    for i in range(n):
        for j in range(n):
            val = ev_pairing(der, (der.der_of[i],), (j,))
            if val:
                table[(der.der_of[i], j)] = val
    spec = BracketSpec(alg, shift, table)
    spec.der = der
    return spec
