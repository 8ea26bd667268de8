"""Fixed-point localization functions psi^v(w) and GKM verification.

psi^v is the functional on the K-NilHecke ring dual to T_v; its value at a
group element w localizes the structure sheaf of the codimension-l(v)
Schubert variety at the fixed point w.  Three independent algorithms are
provided (right recurrence, left recurrence, reduced-word sum) plus the
Kostant-Kumar variant by Moebius inversion, big- and small-torus GKM
divisibility checks, closed forms for affine SL_2, and the wrong-way map.

Flavors: "big" works over the datum's own lattice (R(T) or R(T_af));
"level-zero" (affine data only) projects every root to the finite lattice
before exponentiating, which commutes with the division-free recurrences.
"""

from __future__ import annotations

from math import comb

from .cartan import (LaurentPoly, RootDatum, divisible_by_one_minus_e, eta,
                     exact_divide_one_minus_e, weyl_reflect_poly)
from . import weyl
from .weyl import WeylElt


class PsiEngine:
    """Memoized psi^v(w) values for one datum and flavor."""

    def __init__(self, datum: RootDatum, flavor: str = "big"):
        if flavor not in ("big", "level-zero"):
            raise ValueError(f"unknown flavor {flavor!r}")
        if flavor == "level-zero" and datum.flavor != "affine":
            raise ValueError("level-zero flavor needs an affine datum")
        self.datum = datum
        self.flavor = flavor
        self.coeffs = datum if flavor == "big" else datum.finite
        self._right: dict = {}
        self._left: dict = {}

    # -- helpers ---------------------------------------------------------------

    def _zero(self):
        return LaurentPoly.zero(self.coeffs)

    def _one(self):
        return LaurentPoly.one(self.coeffs)

    def root_image(self, w: WeylElt, i) -> "Weight":
        """w(alpha_i) in the coefficient lattice."""
        if self.flavor == "big":
            return weyl.apply(w, self.datum.simple_root(i))
        return weyl.apply(w, self.datum.projected_root(i))

    def act(self, i, p: LaurentPoly) -> LaurentPoly:
        return weyl_reflect_poly(self.datum, i, p)

    def act_elt(self, w: WeylElt, p: LaurentPoly) -> LaurentPoly:
        for i in reversed(w.word):
            p = self.act(i, p)
        return p

    # -- the three algorithms -----------------------------------------------------

    def psi_right(self, v: WeylElt, w: WeylElt) -> LaurentPoly:
        """Right-hand recurrence on (v, w), smallest right descent of w."""
        key = (v, w)
        val = self._right.get(key)
        if val is not None:
            return val
        if w.is_identity():
            val = self._one() if v.is_identity() else self._zero()
        else:
            i = next(i for i in self.datum.nodes if weyl.has_right_descent(w, i))
            wri = weyl.multiply(w, weyl.simple(self.datum, i))
            vri = weyl.multiply(v, weyl.simple(self.datum, i))
            if vri.length > v.length:
                val = self.psi_right(v, wri)
            else:
                # (1 - e^{-w(alpha_i)}) psi^{vr_i}(w) + e^{-w(alpha_i)} psi^v(wr_i)
                m = LaurentPoly.monomial(-self.root_image(w, i))
                val = (self._one() - m) * self.psi_right(vri, w) \
                    + m * self.psi_right(v, wri)
        self._right[key] = val
        return val

    def psi_left(self, v: WeylElt, w: WeylElt) -> LaurentPoly:
        """Left-hand recurrence on (v, w), smallest left descent of w."""
        key = (v, w)
        val = self._left.get(key)
        if val is not None:
            return val
        if w.is_identity():
            val = self._one() if v.is_identity() else self._zero()
        else:
            i = w.word[0]
            riw = weyl.multiply(weyl.simple(self.datum, i), w)
            riv = weyl.multiply(weyl.simple(self.datum, i), v)
            if riv.length > v.length:
                val = self.act(i, self.psi_left(v, riw))
            else:
                alpha = self.datum.simple_root(i) if self.flavor == "big" \
                    else self.datum.projected_root(i)
                ea = LaurentPoly.monomial(alpha)
                val = ea * self.act(i, self.psi_left(v, riw)) \
                    + (self._one() - ea) * self.act(i, self.psi_left(riv, riw))
        self._left[key] = val
        return val

    def psi_graham_willems(self, v: WeylElt, w: WeylElt, word=None) -> LaurentPoly:
        """Reduced-word subword sum (Graham/Willems localization formula)."""
        if word is None:
            word = w.word
        else:
            word = tuple(word)
            if weyl.from_word(self.datum, word) != w or len(word) != w.length:
                raise ValueError("word is not a reduced word for w")
        datum = self.datum
        # beta_k = r_{i_1}...r_{i_{k-1}}(alpha_{i_k}), independent of the subword
        betas = []
        for k in range(len(word)):
            beta = datum.simple_root(word[k])
            for j in range(k - 1, -1, -1):
                beta = datum.reflect(word[j], beta)
            if self.flavor == "level-zero":
                beta = datum.project(beta)
            betas.append(LaurentPoly.monomial(beta))
        one = self._one()
        total = self._zero()
        n = len(word)
        for mask in range(1 << n):
            # subword's 0-Hecke fold must hit +-T_v; the fold sign
            # (-1)^{|b| - l(v)} is the summand sign
            sign, elt = 1, weyl.identity(datum)
            for k in range(n):
                if mask >> k & 1:
                    nxt = weyl.multiply(elt, weyl.simple(datum, word[k]))
                    if nxt.length > elt.length:
                        elt = nxt
                    else:
                        sign = -sign
            if elt != v:
                continue
            prod = LaurentPoly.const(self.coeffs, sign)
            for k in range(n):
                if mask >> k & 1:
                    prod = prod * (one - betas[k])
            total = total + prod
        return total

    # -- derived functions ----------------------------------------------------------

    def psi_kk(self, v: WeylElt, w: WeylElt) -> LaurentPoly:
        """Kostant-Kumar variant: sum_{v <= u <= w} (-1)^{l(u)-l(v)} psi^u(w)."""
        total = self._zero()
        for u in weyl.bruhat_ideal(w):
            if weyl.bruhat_leq(v, u):
                term = self.psi_right(u, w)
                total = total + (term if (u.length - v.length) % 2 == 0 else -term)
        return total

    def psi_kk_closed(self, v: WeylElt, w: WeylElt) -> LaurentPoly:
        """(-1)^{l(v)} e^{rho - w rho} eta(psi^v(w))  (finite flavor)."""
        rho = self.datum.rho
        shift = LaurentPoly.monomial(rho - weyl.apply(w, rho))
        val = shift * eta(self.psi_right(v, w))
        return val if v.length % 2 == 0 else -val

    def diagonal(self, v: WeylElt) -> LaurentPoly:
        """psi^v(v) = prod over Inv(v) of (1 - e^alpha)."""
        out = self._one()
        for alpha in weyl.inversions(v):
            if self.flavor == "level-zero":
                alpha = self.datum.project(alpha)
            out = out * (self._one() - LaurentPoly.monomial(alpha))
        return out

    def eval_combination(self, psi_of, terms) -> LaurentPoly:
        """Evaluate a functional linearly on sum c_w w (terms: {WeylElt: int})."""
        total = self._zero()
        for w, c in terms.items():
            total = total + psi_of(w).scaled(c)
        return total

    def table_json(self, max_len: int) -> list[dict]:
        """All values psi^v(w) for l(v), l(w) <= max_len as JSON records."""
        els = weyl.all_elements(self.datum, max_len)
        out = []
        for v in els:
            for w in els:
                val = self.psi_right(v, w)
                if not val.is_zero():
                    out.append({"v": weyl.word_str(v.word),
                                "w": weyl.word_str(w.word),
                                "value": val.to_json()})
        return out


# -- GKM conditions ------------------------------------------------------------------


def gkm_check_big(psi_of, datum: RootDatum, pairs) -> bool:
    """Big-torus GKM: psi(r_alpha w) - psi(w) in (1 - e^alpha) R(T).

    ``pairs`` iterates over (alpha: Weight, w: WeylElt) with alpha a positive
    real root of ``datum``; psi_of maps WeylElt -> LaurentPoly.
    """
    for alpha, w in pairs:
        r_alpha = weyl.reflection_for_root(datum, alpha)
        diff = psi_of(weyl.multiply(r_alpha, w)) - psi_of(w)
        if not divisible_by_one_minus_e(diff, alpha, 1):
            return False
    return True


def small_gkm_grassmannian_check(psi_of, datum: RootDatum, alpha_vee, alpha,
                                 d: int, w: WeylElt) -> bool:
    """psi((1 - t_{alpha^vee})^d w) in (1 - e^alpha)^d R(T) (level zero).

    ``alpha_vee`` is the coroot as an integer vector (sum zero), ``alpha``
    the corresponding finite root weight.
    """
    if d < 1:
        raise ValueError("d must be >= 1")
    total = LaurentPoly.zero(alpha.datum)
    for k in range(d + 1):
        t = weyl.translation(datum, tuple(k * c for c in alpha_vee))
        val = psi_of(weyl.multiply(t, w))
        total = total + val.scaled(comb(d, k) if k % 2 == 0 else -comb(d, k))
    return divisible_by_one_minus_e(total, alpha, d)


def small_gkm_check(psi_of, datum: RootDatum, alpha_vee, alpha, d: int,
                    w: WeylElt) -> bool:
    """psi((1 - t_{alpha^vee})^{d-1} (1 - r_alpha) w) in (1-e^alpha)^d R(T)."""
    if d < 1:
        raise ValueError("d must be >= 1")
    r_alpha_fin = _finite_reflection(datum, alpha_vee)
    total = LaurentPoly.zero(alpha.datum)
    for k in range(d):
        t = weyl.translation(datum, tuple(k * c for c in alpha_vee))
        sign = comb(d - 1, k) if k % 2 == 0 else -comb(d - 1, k)
        tw = weyl.multiply(t, w)
        trw = weyl.multiply(t, weyl.multiply(r_alpha_fin, w))
        total = total + psi_of(tw).scaled(sign) - psi_of(trw).scaled(sign)
    return divisible_by_one_minus_e(total, alpha, d)


def _finite_reflection(datum: RootDatum, alpha_vee) -> WeylElt:
    """The finite reflection r_alpha embedded in the affine group (type A:
    alpha^vee = e_i - e_j gives the transposition (i j))."""
    n = len(alpha_vee)
    i = next(k for k, c in enumerate(alpha_vee) if c == 1)
    j = next(k for k, c in enumerate(alpha_vee) if c == -1)
    win = list(range(1, n + 1))
    win[i], win[j] = win[j], win[i]
    word = weyl._win_canonical_word(tuple(win))
    return weyl.from_word(datum, word)


# -- affine SL_2 closed forms -------------------------------------------------------


def sl2_sigma(datum: RootDatum, j: int) -> WeylElt:
    """sigma_j: sigma_{2i} = (r1 r0)^i, sigma_{-2i} = (r0 r1)^i,
    sigma_{2i+1} = r0 sigma_{2i}, sigma_{-(2i+1)} = r1 sigma_{-2i}."""
    if datum.window_n != 2:
        raise ValueError("sigma elements live in affine SL_2")
    word = []
    if j >= 0:
        word = [1, 0] * (j // 2)
        if j % 2:
            word = [0] + word
    else:
        j = -j
        word = [0, 1] * (j // 2)
        if j % 2:
            word = [1] + word
    return weyl.from_word(datum, word)


def sl2_index(w: WeylElt) -> int:
    """Inverse of sl2_sigma (every affine SL_2 element is some sigma_j)."""
    ell = w.length
    if ell == 0:
        return 0
    # positive sigma_j: odd words start with 0, even words with 1
    positive = (w.word[0] == 0) if ell % 2 else (w.word[0] == 1)
    return ell if positive else -ell


def _geom_sum_binom(coeffs_datum, alpha, a: int, m: int, inverse: bool) -> LaurentPoly:
    """S^m_{<=a}(x) = sum_{t=0}^a binom(t+m-1, m-1) x^t with x = e^{alpha}
    (or e^{-alpha} when ``inverse``)."""
    step = -alpha if inverse else alpha
    terms = {}
    for t in range(a + 1):
        c = comb(t + m - 1, m - 1) if m > 0 else (1 if t == 0 else 0)
        if c:
            terms[coeffs_datum.weight(tuple(t * s for s in step.coords))] = c
    return LaurentPoly(coeffs_datum, terms)


def sl2_psi_closed(m: int, j: int, fin: RootDatum | None = None) -> LaurentPoly:
    """Closed form for psi^{sigma_m}(sigma_j) over level-zero R(T), x = e^alpha."""
    if fin is None:
        fin = RootDatum.sl(2)
    alpha = fin.simple_root(1)
    one = LaurentPoly.one(fin)
    if m < 0:
        return eta(sl2_psi_closed(-m, -j, fin))
    if m == 0:
        return one
    if j < 0:
        return sl2_psi_closed(m, -j - 1, fin)
    if j < m:
        return LaurentPoly.zero(fin)
    # (1-x)^m S^m_{<=a}(x) on one parity family, the x -> 1/x mirror on the other
    d = j - m
    a = d // 2
    straight = (m % 2 == 0) == (d % 2 == 0)
    if straight:
        base = one - LaurentPoly.monomial(alpha)
        s = _geom_sum_binom(fin, alpha, a, m, inverse=False)
    else:
        base = one - LaurentPoly.monomial(-alpha)
        s = _geom_sum_binom(fin, alpha, a, m, inverse=True)
    out = s
    for _ in range(m):
        out = out * base
    return out


# -- wrong-way map -------------------------------------------------------------------


def wrongway(psi_of, datum: RootDatum):
    """varpi(psi)(w) = psi(t_lam) where wW = t_lam W; constant on cosets."""
    def value(w: WeylElt) -> LaurentPoly:
        return psi_of(weyl.translation_of_coset(w))
    return value


def grassmannian_expansion(engine: PsiEngine, psi_of, max_len: int):
    """Expand a coset-constant function over {psi^u : u Grassmannian}.

    Solves triangularly on Grassmannian points by increasing length, using
    exact division by psi^u(u); raises if a division fails.  Returns
    {u: LaurentPoly} for l(u) <= max_len.
    """
    datum = engine.datum
    grass = [u for u in weyl.all_elements(datum, max_len) if weyl.is_grassmannian(u)]
    grass.sort(key=lambda u: (u.length, u.word))
    coeffs: dict[WeylElt, LaurentPoly] = {}
    for u in grass:
        residual = psi_of(u)
        for v, c in coeffs.items():
            residual = residual - c * engine.psi_right(v, u)
        diag = engine.psi_right(u, u)
        q = _exact_quotient(residual, diag)
        if not q.is_zero():
            coeffs[u] = q
    return coeffs


def _exact_quotient(p: LaurentPoly, d: LaurentPoly) -> LaurentPoly:
    """Exact division p / d when d factors as monomial * prod (1 - e^alpha)."""
    if p.is_zero():
        return p
    # peel factors of d: repeatedly divide by (1 - e^alpha) read off from d
    # d is a product of such binomials times a unit monomial; recover it by
    # factoring: divide p and d in lockstep by each binomial of d.
    q, rem_d = p, d
    while len(rem_d.terms) > 1:
        alpha = _binomial_direction(rem_d)
        q = exact_divide_one_minus_e(q, alpha)
        rem_d = exact_divide_one_minus_e(rem_d, alpha)
    [(mu, c)] = rem_d.terms.items()
    if c not in (1, -1):
        raise ValueError("denominator is not a unit times cyclotomic binomials")
    return LaurentPoly(p.datum, {w - mu: cc * c for w, cc in q.terms.items()})


def _binomial_direction(d: LaurentPoly):
    """A direction alpha with (1 - e^alpha) dividing d, found from d's support."""
    terms = d.sorted_terms()
    base = terms[0][0]
    for w, _ in terms[1:]:
        alpha = w - base
        if divisible_by_one_minus_e(d, alpha, 1):
            return alpha
        alpha = base - w
        if divisible_by_one_minus_e(d, alpha, 1):
            return alpha
    raise ValueError("no binomial factor found")
