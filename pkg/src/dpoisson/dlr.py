"""Double Lie-Rinehart data on free bimodules and the linear-bracket
correspondence.

A free A-bimodule M on MODULE generators embeds its tensor algebra T_A(M)
into the free algebra on base-plus-module generators; words of weight one
are the elements of M.  DLRData stores the anchor table rho(m, a) with
base-coloured legs and the module bracket {{m, m'}} split into its M (x) A
and A (x) M components.

The evaluators here extend those tables themselves, by the bimodule and
derivation rules below; they deliberately do not reuse the word evaluator
of brackets.BracketSpec, so agreement between dlr_check and the double
Poisson suite of the merged bracket is a comparison of two independent
computation paths.

Extension rules (|w| means degree, r the shift):

  anchor, second slot split at its first letter g, wa = g v:
    rho(w, g v) = rho(w, g) with v appended to leg 2
                + (-1)^(|g|(r+|w|)) g prepended to leg 1 of rho(w, v)
  anchor, first slot p m q (p, q base words):
    start from the table entry for (m, c), then
      append q to leg 1 with sign (-1)^(|q|(r+|c|) + |q||leg2|),
      prepend p to leg 2 with sign (-1)^(|p||leg1|)
    (legs read in their current state, q first).

  module bracket, second slot starts with base letter a, w2 = a n:
    l:  (-1)^(|a|(r+|w1|)) a prepended to leg 1 of {{w1, n}}_l
    r:  rho(w1, a) with n appended to leg 2
      + (-1)^(|a|(r+|w1|)) a prepended to leg 1 of {{w1, n}}_r
  module bracket, second slot m g..., tail of base letters:
    l:  {{w1, m}}_l with tail appended to leg 2
      + (-1)^(|m|(r+|w1|)) m prepended to leg 1 of rho(w1, tail)
    r:  {{w1, m}}_r with tail appended to leg 2
  antisymmetry used to flip a bare-generator second slot into the first.
"""

from __future__ import annotations

import enum
import itertools
from fractions import Fraction
from typing import Dict, Optional, Tuple

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
from .brackets import BracketSpec, antisym_partner
from .reports import CheckReport


class BimoduleSpec:
    """Free A-bimodule on MODULE generators over a free base algebra."""

    def __init__(self, base: FreeAlgebra, mgens):
        for g in base.gens:
            if g.colour is not Colour.BASE:
                raise ValueError("base algebra must have BASE generators only")
        mgens = tuple(
            g if g.colour is Colour.MODULE else Generator(g.name, g.degree, Colour.MODULE)
            for g in mgens
        )
        self.base = base
        self.mgens = mgens
        self.ambient = FreeAlgebra(base.gens + mgens)

    def __eq__(self, other):
        return (
            isinstance(other, BimoduleSpec)
            and self.base == other.base
            and self.mgens == other.mgens
        )

    def __repr__(self):
        return f"BimoduleSpec(base={self.base!r}, mgens={[g.name for g in self.mgens]})"

    def base_words(self, max_len: int):
        return self.ambient.words_up_to(max_len, letters=self.ambient.base_indices)

    def module_words(self, max_len: int):
        """Weight-one words up to max_len: p m q with p, q base."""
        base = [w for w in self.base_words(max_len - 1)]
        for total in range(1, max_len + 1):
            for pl in range(total):
                ql = total - 1 - pl
                for p in base:
                    if len(p) != pl:
                        continue
                    for m in self.ambient.module_indices:
                        for q in base:
                            if len(q) == ql:
                                yield p + (m,) + q


def _split_module_word(alg: FreeAlgebra, w: Word) -> Tuple[Word, int, Word]:
    pos = [k for k, i in enumerate(w) if alg.is_module(i)]
    if len(pos) != 1:
        raise ValueError(f"not a weight-one word: {alg.render_word(w)}")
    k = pos[0]
    return w[:k], w[k], w[k + 1:]


class DLRData:
    """Anchor and module-bracket tables for a shifted double Lie-Rinehart
    structure, with their derivation-rule extension."""

    def __init__(self, bimodule: BimoduleSpec, shift: ShiftContext,
                 anchor: Dict, mbracket: Dict):
        self.bimodule = bimodule
        self.shift = shift
        alg = bimodule.ambient
        self.anchor: Dict[Tuple[int, int], Tensor2] = {}
        for key, val in anchor.items():
            i, j = (alg.index(k) if isinstance(k, str) else k for k in key)
            if not val:
                continue
            self.anchor[(i, j)] = val
        self.mbracket: Dict[Tuple[int, int], Tuple[Tensor2, Tensor2]] = {}
        for key, val in mbracket.items():
            i, j = (alg.index(k) if isinstance(k, str) else k for k in key)
            l, r = val
            if not l and not r:
                continue
            self.mbracket[(i, j)] = (l, r)
        self._validate()
        self._anchor_cache: dict = {}
        self._mb_cache: dict = {}

    def _validate(self):
        alg, r = self.bimodule.ambient, self.shift.r
        for (i, j), val in self.anchor.items():
            if not alg.is_module(i) or alg.is_module(j):
                raise ValueError("anchor keys must pair a MODULE with a BASE generator")
            if val.algebra != alg:
                raise ValueError("incompatible algebras")
            if not val.leg_weights() <= {(0, 0)}:
                raise ValueError(
                    f"anchor value for ({alg.gens[i].name}, {alg.gens[j].name}) "
                    "must have base-coloured legs"
                )
            want = alg.gens[i].degree + alg.gens[j].degree + r
            if not val.is_homogeneous_of(want):
                raise ValueError(
                    f"anchor value for ({alg.gens[i].name}, {alg.gens[j].name}) "
                    f"must be homogeneous of degree {want}"
                )
        for (i, j), (l, rr) in self.mbracket.items():
            if not (alg.is_module(i) and alg.is_module(j)):
                raise ValueError("module bracket keys must pair MODULE generators")
            for t in (l, rr):
                if t.algebra != alg:
                    raise ValueError("incompatible algebras")
            if not l.leg_weights() <= {(1, 0)}:
                raise ValueError("left component must land in M (x) A")
            if not rr.leg_weights() <= {(0, 1)}:
                raise ValueError("right component must land in A (x) M")
            want = alg.gens[i].degree + alg.gens[j].degree + r
            for t in (l, rr):
                if not t.is_homogeneous_of(want):
                    raise ValueError(
                        f"bracket value for ({alg.gens[i].name}, {alg.gens[j].name}) "
                        f"must be homogeneous of degree {want}"
                    )

    def __eq__(self, other):
        return (
            isinstance(other, DLRData)
            and self.bimodule == other.bimodule
            and self.shift == other.shift
            and self.anchor == other.anchor
            and self.mbracket == other.mbracket
        )

    # -- anchor extension -------------------------------------------------

    def anchor_gen(self, i: int, j: int) -> Tensor2:
        return self.anchor.get((i, j), Tensor2(self.bimodule.ambient, {}))

    def anchor_eval(self, wm: Word, wa: Word) -> Tensor2:
        """rho(wm, wa) for a weight-one word wm and a base word wa."""
        key = (wm, wa)
        hit = self._anchor_cache.get(key)
        if hit is not None:
            return hit
        alg, r = self.bimodule.ambient, self.shift.r
        deg = alg.degree
        if not wa:
            out = Tensor2(alg, {})
        elif len(wa) > 1:
            g, v = wa[0], wa[1:]
            terms: dict = {}
            for (t1, t2), c in self.anchor_eval(wm, (g,)).terms.items():
                k2 = (t1, t2 + v)
                terms[k2] = terms.get(k2, Fraction(0)) + c
            s0 = sign_exp(deg((g,)), r + deg(wm))
            for (t1, t2), c in self.anchor_eval(wm, v).terms.items():
                k2 = ((g,) + t1, t2)
                terms[k2] = terms.get(k2, Fraction(0)) + s0 * c
            out = Tensor2(alg, terms)
        else:
            p, m, q = _split_module_word(alg, wm)
            dc = deg(wa)
            terms = {}
            for (t1, t2), c in self.anchor_gen(m, wa[0]).terms.items():
                s = sign_exp(deg(q), r + dc) * sign_exp(deg(q), deg(t2))
                t1q = t1 + q
                s *= sign_exp(deg(p), deg(t1q))
                k2 = (t1q, p + t2)
                terms[k2] = terms.get(k2, Fraction(0)) + s * c
            out = Tensor2(alg, terms)
        self._anchor_cache[key] = out
        return out

    def rho_tau(self, wa: Word, wm: Word) -> Tensor2:
        """Swapped anchor -tau rho tau, computed on demand."""
        alg, r = self.bimodule.ambient, self.shift.r
        deg = alg.degree
        s0 = -sign_exp(r + deg(wa), r + deg(wm))
        terms: dict = {}
        for (t1, t2), c in self.anchor_eval(wm, wa).terms.items():
            s = s0 * sign_exp(deg(t1), deg(t2))
            key = (t2, t1)
            terms[key] = terms.get(key, Fraction(0)) + s * c
        return Tensor2(alg, terms)

    # -- module bracket extension ----------------------------------------

    def mb_gen(self, i: int, j: int) -> Tuple[Tensor2, Tensor2]:
        alg = self.bimodule.ambient
        if (i, j) in self.mbracket:
            return self.mbracket[(i, j)]
        if (j, i) in self.mbracket:
            return self._partner(
                self.mbracket[(j, i)], alg.gens[i].degree, alg.gens[j].degree
            )
        zero = Tensor2(alg, {})
        return (zero, zero)

    def _partner(self, pair: Tuple[Tensor2, Tensor2], d_first: int,
                 d_second: int) -> Tuple[Tensor2, Tensor2]:
        """{{m,n}} from {{n,m}}: swap the components and their legs, with
        the antisymmetry sign."""
        alg, r = self.bimodule.ambient, self.shift.r
        deg = alg.degree
        L, R = pair
        s0 = -sign_exp(r + d_first, r + d_second)
        lt: dict = {}
        for (p, q), c in R.terms.items():
            s = s0 * sign_exp(deg(p), deg(q))
            lt[(q, p)] = lt.get((q, p), Fraction(0)) + s * c
        rt: dict = {}
        for (u, v), c in L.terms.items():
            s = s0 * sign_exp(deg(u), deg(v))
            rt[(v, u)] = rt.get((v, u), Fraction(0)) + s * c
        return (Tensor2(alg, lt), Tensor2(alg, rt))

    def mb_eval(self, w1: Word, w2: Word) -> Tuple[Tensor2, Tensor2]:
        """{{w1, w2}} for weight-one words, as its (l, r) components."""
        key = (w1, w2)
        hit = self._mb_cache.get(key)
        if hit is not None:
            return hit
        alg, r = self.bimodule.ambient, self.shift.r
        deg = alg.degree
        if not alg.is_module(w2[0]):
            # second slot a n with a a base letter
            a, n = w2[0], w2[1:]
            s0 = sign_exp(deg((a,)), r + deg(w1))
            L, R = self.mb_eval(w1, n)
            lt: dict = {}
            for (u, v), c in L.terms.items():
                lt[((a,) + u, v)] = lt.get(((a,) + u, v), Fraction(0)) + s0 * c
            rt: dict = {}
            for (p, q), c in R.terms.items():
                rt[((a,) + p, q)] = rt.get(((a,) + p, q), Fraction(0)) + s0 * c
            for (t1, t2), c in self.anchor_eval(w1, (a,)).terms.items():
                rt[(t1, t2 + n)] = rt.get((t1, t2 + n), Fraction(0)) + c
            out = (Tensor2(alg, lt), Tensor2(alg, rt))
        elif len(w2) > 1:
            # second slot m tail with a pure base tail
            n, tail = (w2[0],), w2[1:]
            L, R = self.mb_eval(w1, n)
            lt = {}
            for (u, v), c in L.terms.items():
                lt[(u, v + tail)] = lt.get((u, v + tail), Fraction(0)) + c
            rt = {}
            for (p, q), c in R.terms.items():
                rt[(p, q + tail)] = rt.get((p, q + tail), Fraction(0)) + c
            s0 = sign_exp(deg(n), r + deg(w1))
            for (t1, t2), c in self.anchor_eval(w1, tail).terms.items():
                lt[(n + t1, t2)] = lt.get((n + t1, t2), Fraction(0)) + s0 * c
            out = (Tensor2(alg, lt), Tensor2(alg, rt))
        elif len(w1) == 1:
            out = self.mb_gen(w1[0], w2[0])
        else:
            # bare generator in the second slot only: flip through
            # antisymmetry, which puts the bare generator first
            pair = self.mb_eval(w2, w1)
            out = self._partner(pair, deg(w1), deg(w2))
        self._mb_cache[key] = out
        return out


# -- axiom checks ---------------------------------------------------------


def _pair_residual(got: Tuple[Tensor2, Tensor2], want: Tuple[Tensor2, Tensor2]):
    dl = got[0] - want[0]
    dr = got[1] - want[1]
    if dl or dr:
        return f"l: {dl.render()}  r: {dr.render()}"
    return None


def dlr_check(d: DLRData, max_len: int = 3) -> CheckReport:
    """The four defining conditions, plus coherence of the anchor extension.

    Conditions (a), (c), (d) carry the data content; the anchor-properties
    and derivation-compatibility entries re-derive the evaluators' output
    from whole-block splits and catch inconsistent sign bookkeeping.
    """
    alg, r = d.bimodule.ambient, d.shift.r
    deg = alg.degree
    rep = CheckReport("dlr", max_len)
    mwords = list(d.bimodule.module_words(max_len))
    bwords = list(d.bimodule.base_words(max_len))

    # (a) antisymmetry of the module bracket
    fail = None
    for w1, w2 in itertools.product(mwords, mwords):
        got = d.mb_eval(w1, w2)
        want = d._partner(d.mb_eval(w2, w1), deg(w1), deg(w2))
        res = _pair_residual(got, want)
        if res is not None:
            fail = (w1, w2, res)
            break
    if fail:
        rep.add("a-antisymmetry", False,
                witness=f"({alg.render_word(fail[0])}, {alg.render_word(fail[1])})",
                residual=fail[2])
    else:
        rep.add("a-antisymmetry", True)

    # anchor coherence: derivation in the second slot and bimodule morphism
    # in the first, re-derived at every split point
    fail = None
    for wm, wa in itertools.product(mwords, bwords):
        for cut in range(1, len(wa)):
            u, v = wa[:cut], wa[cut:]
            terms: dict = {}
            for (t1, t2), c in d.anchor_eval(wm, u).terms.items():
                terms[(t1, t2 + v)] = terms.get((t1, t2 + v), Fraction(0)) + c
            s = sign_exp(deg(u), r + deg(wm))
            for (t1, t2), c in d.anchor_eval(wm, v).terms.items():
                terms[(u + t1, t2)] = terms.get((u + t1, t2), Fraction(0)) + s * c
            diff = Tensor2(alg, terms) - d.anchor_eval(wm, wa)
            if diff:
                fail = (wm, wa, f"split {cut}", diff.render())
                break
        if fail:
            break
        p, m, q = _split_module_word(alg, wm)
        # left action: wm = p (m q); prepend p to leg 2
        if p:
            inner = d.anchor_eval(wm[len(p):], wa)
            terms = {}
            for (t1, t2), c in inner.terms.items():
                s = sign_exp(deg(p), deg(t1))
                terms[(t1, p + t2)] = terms.get((t1, p + t2), Fraction(0)) + s * c
            diff = Tensor2(alg, terms) - d.anchor_eval(wm, wa)
            if diff:
                fail = (wm, wa, "left action", diff.render())
                break
        # right action: wm = (p m) q; append q to leg 1
        if q:
            inner = d.anchor_eval(wm[: len(wm) - len(q)], wa)
            terms = {}
            for (t1, t2), c in inner.terms.items():
                s = sign_exp(deg(q), r + deg(wa)) * sign_exp(deg(q), deg(t2))
                terms[(t1 + q, t2)] = terms.get((t1 + q, t2), Fraction(0)) + s * c
            diff = Tensor2(alg, terms) - d.anchor_eval(wm, wa)
            if diff:
                fail = (wm, wa, "right action", diff.render())
                break
    if fail:
        rep.add("anchor-properties", False,
                witness=f"({alg.render_word(fail[0])}, {alg.render_word(fail[1])}) {fail[2]}",
                residual=fail[3])
    else:
        rep.add("anchor-properties", True)

    # (b) derivation compatibility: the bracket of wm with a product,
    # re-derived from whole-block splits of the second slot
    fail = None
    for w1, w2 in itertools.product(mwords, mwords):
        L2, R2 = d.mb_eval(w1, w2)
        pos = next(k for k, i in enumerate(w2) if alg.is_module(i))
        for cut in range(1, len(w2)):
            if cut <= pos:
                # w2 = a n with a = w2[:cut] base, n weight one
                a, n = w2[:cut], w2[cut:]
                Ln, Rn = d.mb_eval(w1, n)
                s = sign_exp(deg(a), r + deg(w1))
                lt: dict = {}
                for (u, v), c in Ln.terms.items():
                    lt[(a + u, v)] = lt.get((a + u, v), Fraction(0)) + s * c
                rt: dict = {}
                for (p, q), c in Rn.terms.items():
                    rt[(a + p, q)] = rt.get((a + p, q), Fraction(0)) + s * c
                for (t1, t2), c in d.anchor_eval(w1, a).terms.items():
                    rt[(t1, t2 + n)] = rt.get((t1, t2 + n), Fraction(0)) + c
                res = _pair_residual((L2, R2), (Tensor2(alg, lt), Tensor2(alg, rt)))
                if res is not None:
                    fail = (w1, w2, f"left split {cut}", res)
                    break
            else:
                # w2 = n a with a = w2[cut:] base, n weight one
                n, a = w2[:cut], w2[cut:]
                Ln, Rn = d.mb_eval(w1, n)
                lt = {}
                for (u, v), c in Ln.terms.items():
                    lt[(u, v + a)] = lt.get((u, v + a), Fraction(0)) + c
                rt = {}
                for (p, q), c in Rn.terms.items():
                    rt[(p, q + a)] = rt.get((p, q + a), Fraction(0)) + c
                s = sign_exp(deg(n), r + deg(w1))
                for (t1, t2), c in d.anchor_eval(w1, a).terms.items():
                    lt[(n + t1, t2)] = lt.get((n + t1, t2), Fraction(0)) + s * c
                res = _pair_residual((L2, R2), (Tensor2(alg, lt), Tensor2(alg, rt)))
                if res is not None:
                    fail = (w1, w2, f"right split {cut}", res)
                    break
        if fail:
            break
    if fail:
        rep.add("b-derivation-compat", False,
                witness=f"({alg.render_word(fail[0])}, {alg.render_word(fail[1])}) {fail[2]}",
                residual=fail[3])
    else:
        rep.add("b-derivation-compat", True)

    # (c) second anchor compatibility, on (base, module, module) triples
    fail = None
    for wa, wm, wn in itertools.product(bwords, mwords, mwords):
        da, dm, dn = deg(wa), deg(wm), deg(wn)
        terms: dict = {}
        L, _R = d.mb_eval(wm, wn)
        for (u, v), c in L.terms.items():
            for (t1, t2), c2 in d.rho_tau(wa, u).terms.items():
                k3 = (t1, t2, v)
                terms[k3] = terms.get(k3, Fraction(0)) + c * c2
        s2 = sign_exp(da + r, (dm + r) + (dn + r))
        for (p, q), c in d.anchor_eval(wn, wa).terms.items():
            for (t1, t2), c2 in d.anchor_eval(wm, p).terms.items():
                s = s2 * sign_exp(deg(t1) + deg(t2), deg(q))
                k3 = (q, t1, t2)
                terms[k3] = terms.get(k3, Fraction(0)) + s * c * c2
        s3 = sign_exp((da + r) + (dm + r), dn + r)
        for (p, q), c in d.rho_tau(wa, wm).terms.items():
            for (t1, t2), c2 in d.anchor_eval(wn, p).terms.items():
                s = s3 * sign_exp(deg(t1), deg(t2) + deg(q))
                k3 = (t2, q, t1)
                terms[k3] = terms.get(k3, Fraction(0)) + s * c * c2
        res = Tensor3(alg, terms)
        if res:
            fail = (wa, wm, wn, res.render())
            break
    if fail:
        rep.add("c-anchor-jacobi", False,
                witness=f"({alg.render_word(fail[0])}, {alg.render_word(fail[1])}, {alg.render_word(fail[2])})",
                residual=fail[3])
    else:
        rep.add("c-anchor-jacobi", True)

    # (d) double Jacobi on module-word triples
    fail = None
    for w1, w2, w3 in itertools.product(mwords, mwords, mwords):
        d1, d2, d3 = deg(w1), deg(w2), deg(w3)
        terms = {}
        L23, _ = d.mb_eval(w2, w3)
        for (u, v), c in L23.terms.items():
            Lu, _ = d.mb_eval(w1, u)
            for (s1, t1), c2 in Lu.terms.items():
                k3 = (s1, t1, v)
                terms[k3] = terms.get(k3, Fraction(0)) + c * c2
        s2 = sign_exp((d1 + r) + (d2 + r), d3 + r)
        L12, _ = d.mb_eval(w1, w2)
        for (u, v), c in L12.terms.items():
            _, Ru = d.mb_eval(w3, u)
            for (p, q), c2 in Ru.terms.items():
                s = s2 * sign_exp(deg(p), deg(q) + deg(v))
                k3 = (q, v, p)
                terms[k3] = terms.get(k3, Fraction(0)) + s * c * c2
        s3 = sign_exp(d1 + r, (d2 + r) + (d3 + r))
        _, R31 = d.mb_eval(w3, w1)
        for (p, q), c in R31.terms.items():
            for (t1, t2), c2 in d.anchor_eval(w2, p).terms.items():
                s = s3 * sign_exp(deg(t1) + deg(t2), deg(q))
                k3 = (q, t1, t2)
                terms[k3] = terms.get(k3, Fraction(0)) + s * c * c2
        res = Tensor3(alg, terms)
        if res:
            fail = (w1, w2, w3, res.render())
            break
    if fail:
        rep.add("d-double-jacobi", False,
                witness=f"({alg.render_word(fail[0])}, {alg.render_word(fail[1])}, {alg.render_word(fail[2])})",
                residual=fail[3])
    else:
        rep.add("d-double-jacobi", True)
    return rep


# -- linear bracket correspondence ---------------------------------------


def dlr_to_linear(d: DLRData) -> BracketSpec:
    """Assemble the bracket table of T_A(M): zero on base pairs, the anchor
    on (module, base) pairs, the merged components on module pairs."""
    alg = d.bimodule.ambient
    table: dict = {}
    for (i, j), val in d.anchor.items():
        table[(i, j)] = val
    for (i, j), (l, r) in d.mbracket.items():
        table[(i, j)] = l + r
    return BracketSpec(alg, d.shift, table)


def linear_to_dlr(spec: BracketSpec, bimodule: BimoduleSpec) -> DLRData:
    """Split a linear bracket table back into anchor and module components."""
    alg = bimodule.ambient
    if spec.algebra != alg:
        raise ValueError("incompatible algebras")
    cls = classify_bracket(spec)
    if cls is not BracketClass.LINEAR and not bracket_is_zero(spec):
        raise ValueError("not a linear bracket")
    anchor: dict = {}
    mbracket: dict = {}
    for (i, j), val in spec.table.items():
        mi, mj = alg.is_module(i), alg.is_module(j)
        if mi and mj:
            lt, rt = {}, {}
            for (u, v), c in val.terms.items():
                if alg.weight(u) == 1:
                    lt[(u, v)] = c
                else:
                    rt[(u, v)] = c
            mbracket[(i, j)] = (Tensor2(alg, lt), Tensor2(alg, rt))
        elif mi:
            anchor[(i, j)] = val
        elif mj:
            # stored in (base, module) orientation; flip to anchor form
            if (j, i) not in spec.table:
                anchor[(j, i)] = antisym_partner(
                    val, alg.gens[j].degree, alg.gens[i].degree, spec.shift.r
                )
        # base pairs are zero for a linear bracket
    return DLRData(bimodule, spec.shift, anchor, mbracket)


class BracketClass(enum.Enum):
    CONSTANT = "constant"
    LINEAR = "linear"
    QUADRATIC = "quadratic"
    GENERAL = "general"


def bracket_is_zero(spec: BracketSpec) -> bool:
    return not any(spec.table.values())


def classify_bracket(spec: BracketSpec) -> BracketClass:
    """Colour-profile classification of a bracket on T_A(M).

    The base-pair restriction must vanish for all three named classes; the
    zero bracket sits in every class and reports as CONSTANT (see
    bracket_is_zero).
    """
    alg = spec.algebra
    if not alg.module_indices:
        raise ValueError("algebra has no module generators")
    mm_profiles = set()
    ma_profiles = set()
    for (i, j), val in spec.table.items():
        mi, mj = alg.is_module(i), alg.is_module(j)
        if not mi and not mj:
            if val:
                return BracketClass.GENERAL
        elif mi and mj:
            mm_profiles |= val.leg_weights()
        else:
            ma_profiles |= val.leg_weights()
    if mm_profiles <= {(0, 0)} and not ma_profiles:
        return BracketClass.CONSTANT
    if mm_profiles <= {(1, 0), (0, 1)} and ma_profiles <= {(0, 0)}:
        return BracketClass.LINEAR
    if mm_profiles <= {(1, 1)} and not ma_profiles:
        return BracketClass.QUADRATIC
    return BracketClass.GENERAL


def quadratic_as_double_lie(spec: BracketSpec) -> BracketSpec:
    """Restrict a quadratic bracket on T_1(M) to its module table; the
    derivation extension of the result reproduces the input."""
    alg = spec.algebra
    if alg.base_indices:
        raise ValueError("base algebra must be trivial")
    if classify_bracket(spec) is not BracketClass.QUADRATIC and not bracket_is_zero(spec):
        raise ValueError("not a quadratic bracket")
    table = {k: v for k, v in spec.table.items()}
    return BracketSpec(alg, spec.shift, table)


def assoc_product_check(bimodule: BimoduleSpec, f: Dict) -> CheckReport:
    """Associativity of a tabulated product on the module generators of a
    bimodule over the trivial base."""
    if bimodule.base.gens:
        raise ValueError("base algebra must be trivial")
    alg = bimodule.ambient
    table: Dict[Tuple[int, int], NCPoly] = {}
    for key, val in f.items():
        i, j = (alg.index(k) if isinstance(k, str) else k for k in key)
        if isinstance(val, str):
            val = alg.gen(val)
        table[(i, j)] = val

    def prod(x: NCPoly, y: NCPoly) -> NCPoly:
        out = alg.zero()
        for wx, cx in x.terms.items():
            for wy, cy in y.terms.items():
                entry = table.get((wx[0], wy[0]))
                if entry is not None:
                    out = out + entry.scale(cx * cy)
        return out

    rep = CheckReport("product-associativity", 1)
    gens = [NCPoly(alg, {(i,): Fraction(1)}) for i in range(len(alg.gens))]
    names = [g.name for g in alg.gens]
    for a, b, c in itertools.product(range(len(gens)), repeat=3):
        lhs = prod(prod(gens[a], gens[b]), gens[c])
        rhs = prod(gens[a], prod(gens[b], gens[c]))
        res = lhs - rhs
        if res:
            rep.add("associativity", False,
                    witness=f"({names[a]}, {names[b]}, {names[c]})",
                    residual=res.render())
            return rep
    rep.add("associativity", True)
    return rep
