"""The 0-Hecke ring and the (affine) K-NilHecke ring sum_w R(T) T_w.

Elements are finitely supported maps WeylElt -> LaurentPoly with the scalar
on the left.  Products fold one generator at a time through the two rules

    T_i T_w = T_{r_i w}  (r_i w > w)   or   -T_w  (r_i w < w)
    T_i q   = (T_i . q) + (r_i . q) T_i

In affine flavor the coefficient ring defaults to the level-zero R(T)
(finite weight lattice); pass the affine lattice itself for the big-torus
variant used by localization.
"""

from __future__ import annotations

from .cartan import (DatumMismatchError, LaurentPoly, RootDatum, demazure,
                     phi0, weyl_reflect_poly)
from . import weyl
from .weyl import WeylElt


def coefficient_datum(datum: RootDatum, flavor: str = "level-zero") -> RootDatum:
    """The lattice the coefficients live over."""
    if datum.flavor == "finite":
        return datum
    if flavor == "level-zero":
        if datum.finite is None:
            raise ValueError("datum has no finite companion for level-zero work")
        return datum.finite
    if flavor == "big":
        return datum
    raise ValueError(f"unknown flavor {flavor!r}")


class HeckeElt:
    """sum_w a_w T_w with a_w in Z[P] over ``coeffs`` lattice."""

    __slots__ = ("datum", "coeffs", "terms")

    def __init__(self, datum, coeffs, terms=None):
        self.datum = datum
        self.coeffs = coeffs
        self.terms = {}
        if terms:
            for w, p in terms.items():
                if not p.is_zero():
                    self.terms[w] = p

    # -- constructors ----------------------------------------------------------

    @staticmethod
    def zero(datum, coeffs) -> "HeckeElt":
        return HeckeElt(datum, coeffs)

    @staticmethod
    def one(datum, coeffs) -> "HeckeElt":
        return HeckeElt(datum, coeffs, {weyl.identity(datum): LaurentPoly.one(coeffs)})

    @staticmethod
    def T(w: WeylElt, coeffs) -> "HeckeElt":
        return HeckeElt(w.datum, coeffs, {w: LaurentPoly.one(coeffs)})

    @staticmethod
    def scalar(datum, coeffs, p: LaurentPoly) -> "HeckeElt":
        return HeckeElt(datum, coeffs, {weyl.identity(datum): p})

    @staticmethod
    def from_int_terms(datum, coeffs, table) -> "HeckeElt":
        return HeckeElt(datum, coeffs,
                        {w: LaurentPoly.const(coeffs, c) for w, c in table.items()})

    # -- linear structure --------------------------------------------------------

    def _compat(self, other):
        if self.datum is not other.datum or self.coeffs is not other.coeffs:
            raise DatumMismatchError("HeckeElts over different rings")

    def __add__(self, other):
        self._compat(other)
        out = dict(self.terms)
        for w, p in other.terms.items():
            s = out.get(w)
            s = p if s is None else s + p
            if s.is_zero():
                out.pop(w, None)
            else:
                out[w] = s
        return HeckeElt(self.datum, self.coeffs, out)

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return HeckeElt(self.datum, self.coeffs,
                        {w: -p for w, p in self.terms.items()})

    def scaled(self, c) -> "HeckeElt":
        if isinstance(c, int):
            if c == 0:
                return HeckeElt.zero(self.datum, self.coeffs)
            return HeckeElt(self.datum, self.coeffs,
                            {w: p.scaled(c) for w, p in self.terms.items()})
        return HeckeElt(self.datum, self.coeffs,
                        {w: c * p for w, p in self.terms.items()})

    def __eq__(self, other):
        return (isinstance(other, HeckeElt) and self.datum is other.datum
                and self.coeffs is other.coeffs and self.terms == other.terms)

    def __hash__(self):
        return hash((id(self.datum), frozenset(
            (w, frozenset(p.terms.items())) for w, p in self.terms.items())))

    def is_zero(self) -> bool:
        return not self.terms

    def coefficient(self, w: WeylElt) -> LaurentPoly:
        return self.terms.get(w, LaurentPoly.zero(self.coeffs))

    def support(self) -> list[WeylElt]:
        return sorted(self.terms, key=lambda w: (w.length, w.word))

    def max_length(self) -> int:
        return max((w.length for w in self.terms), default=0)

    def is_integer(self) -> bool:
        return all(p.is_constant() for p in self.terms.values())

    def int_terms(self) -> dict[WeylElt, int]:
        return {w: p.constant_value() for w, p in self.terms.items()}

    def __repr__(self):
        bits = [f"({p!r})T[{weyl.word_str(w.word) or 'id'}]"
                for w, p in sorted(self.terms.items(), key=lambda t: (t[0].length, t[0].word))]
        return " + ".join(bits) if bits else "0"

    def to_json(self) -> list[dict]:
        return [{"word": list(w.word), "coefficient": p.to_json()}
                for w, p in sorted(self.terms.items(),
                                   key=lambda t: (t[0].length, t[0].word))]

    @staticmethod
    def from_json(datum, coeffs, data) -> "HeckeElt":
        return HeckeElt(datum, coeffs, {
            weyl.from_word(datum, rec["word"]):
                LaurentPoly.from_json(coeffs, rec["coefficient"])
            for rec in data})


# -- products -------------------------------------------------------------------


def _gen_mul(datum, coeffs, i, a: HeckeElt) -> HeckeElt:
    """T_i * a."""
    out = {}

    def add(w, p):
        s = out.get(w)
        s = p if s is None else s + p
        if s.is_zero():
            out.pop(w, None)
        else:
            out[w] = s

    ri = weyl.simple(datum, i)
    for w, q in a.terms.items():
        if q.is_constant():
            tq, rq = None, q
        else:
            tq = demazure(datum, i, q)
            rq = weyl_reflect_poly(datum, i, q)
        if tq is not None and not tq.is_zero():
            add(w, tq)
        riw = weyl.multiply(ri, w)
        if riw.length > w.length:
            add(riw, rq)
        else:
            add(w, -rq)
    return HeckeElt(datum, coeffs, out)


def t_word_mul(datum, coeffs, word, a: HeckeElt) -> HeckeElt:
    """T_{word} * a (word need not be canonical but must be reduced)."""
    for i in reversed(word):
        a = _gen_mul(datum, coeffs, i, a)
    return a


def t_mul(a: HeckeElt, b: HeckeElt) -> HeckeElt:
    a._compat(b)
    result = HeckeElt.zero(a.datum, a.coeffs)
    for u, p in a.terms.items():
        part = t_word_mul(a.datum, a.coeffs, u.word, b)
        result = result + part.scaled(p)
    return result


def demazure_act(a: HeckeElt, p: LaurentPoly) -> LaurentPoly:
    """Apply sum a_w T_w to p in R(T)."""
    out = LaurentPoly.zero(a.coeffs)
    for w, q in a.terms.items():
        cur = p
        for i in reversed(w.word):
            cur = demazure(a.datum, i, cur)
            if cur.is_zero():
                break
        if not cur.is_zero():
            out = out + q * cur
    return out


def group_elt_to_T(w: WeylElt, coeffs=None) -> HeckeElt:
    """Expansion of the group element w via r_i = 1 + (1 - e^{alpha_i}) T_i."""
    datum = w.datum
    if coeffs is None:
        coeffs = coefficient_datum(datum)
    acc = HeckeElt.one(datum, coeffs)
    for i in reversed(w.word):
        factor = LaurentPoly.one(coeffs) - _alpha_poly(datum, coeffs, i)
        acc = acc + _gen_mul(datum, coeffs, i, acc).scaled(factor)
    return acc


def _alpha_poly(datum, coeffs, i) -> LaurentPoly:
    if coeffs is datum:
        return LaurentPoly.monomial(datum.simple_root(i))
    return LaurentPoly.monomial(datum.projected_root(i))


def y_elt(w: WeylElt, coeffs=None) -> HeckeElt:
    """y_w = sum_{v <= w} T_v."""
    datum = w.datum
    if coeffs is None:
        coeffs = coefficient_datum(datum)
    return HeckeElt(datum, coeffs,
                    {v: LaurentPoly.one(coeffs) for v in weyl.bruhat_ideal(w)})


def phi0_hecke(a: HeckeElt) -> HeckeElt:
    """Coefficientwise evaluation at 0 (integer coefficients)."""
    return HeckeElt(a.datum, a.coeffs,
                    {w: LaurentPoly.const(a.coeffs, phi0(p))
                     for w, p in a.terms.items()})


# -- coproduct --------------------------------------------------------------------


class TensorElt:
    """sum c_{u,v} T_u (x) T_v over R(T), scalars pulled to the left slot."""

    __slots__ = ("datum", "coeffs", "terms")

    def __init__(self, datum, coeffs, terms=None):
        self.datum = datum
        self.coeffs = coeffs
        self.terms = {}
        if terms:
            for uv, p in terms.items():
                if not p.is_zero():
                    self.terms[uv] = p

    @staticmethod
    def zero(datum, coeffs):
        return TensorElt(datum, coeffs)

    @staticmethod
    def one(datum, coeffs):
        e = weyl.identity(datum)
        return TensorElt(datum, coeffs, {(e, e): LaurentPoly.one(coeffs)})

    def _compat(self, other):
        if self.datum is not other.datum or self.coeffs is not other.coeffs:
            raise DatumMismatchError("TensorElts over different rings")

    def __add__(self, other):
        self._compat(other)
        out = dict(self.terms)
        for uv, p in other.terms.items():
            s = out.get(uv)
            s = p if s is None else s + p
            if s.is_zero():
                out.pop(uv, None)
            else:
                out[uv] = s
        return TensorElt(self.datum, self.coeffs, out)

    def __neg__(self):
        return TensorElt(self.datum, self.coeffs, {uv: -p for uv, p in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def scaled(self, p: LaurentPoly) -> "TensorElt":
        return TensorElt(self.datum, self.coeffs,
                         {uv: p * q for uv, q in self.terms.items()})

    def __eq__(self, other):
        return (isinstance(other, TensorElt) and self.datum is other.datum
                and self.terms == other.terms)

    def coefficient(self, u, v) -> LaurentPoly:
        return self.terms.get((u, v), LaurentPoly.zero(self.coeffs))

    def apply_counit_left(self) -> HeckeElt:
        """Contract the left slot with psi^id (coefficient of T_id)."""
        e = weyl.identity(self.datum)
        return HeckeElt(self.datum, self.coeffs,
                        {v: p for (u, v), p in self.terms.items() if u == e})

    def apply_counit_right(self) -> HeckeElt:
        e = weyl.identity(self.datum)
        return HeckeElt(self.datum, self.coeffs,
                        {u: p for (u, v), p in self.terms.items() if v == e})

    def __repr__(self):
        bits = [f"({p!r})T[{weyl.word_str(u.word) or 'id'}]xT[{weyl.word_str(v.word) or 'id'}]"
                for (u, v), p in sorted(
                    self.terms.items(),
                    key=lambda t: (t[0][0].length, t[0][0].word, t[0][1].length, t[0][1].word))]
        return " + ".join(bits) if bits else "0"


def _sign_mul_T(u: WeylElt, v: WeylElt) -> tuple[int, WeylElt]:
    """0-Hecke product of pure T's: T_u T_v = sign * T_w."""
    sign = 1
    w = v
    datum = u.datum
    for i in reversed(u.word):
        ri = weyl.simple(datum, i)
        riw = weyl.multiply(ri, w)
        if riw.length > w.length:
            w = riw
        else:
            sign = -sign
    return sign, w


def tensor_mul(A: TensorElt, B: TensorElt) -> TensorElt:
    """Componentwise product on canonical left-reduced representatives.

    The right factor's scalar sits in its left slot, so the left-slot
    product T_u (q T_{u2}) is a genuine K-product (the scalar twists through
    T_u via the commutation rule); the right slot multiplies as pure T's.
    """
    A._compat(B)
    out = {}
    for (u, v), p in A.terms.items():
        for (u2, v2), q in B.terms.items():
            s2, vv = _sign_mul_T(v, v2)
            left = t_word_mul(A.datum, A.coeffs,
                              u.word, HeckeElt(A.datum, A.coeffs, {u2: q}))
            for z, c in left.terms.items():
                term = (p * c).scaled(s2)
                key = (z, vv)
                s = out.get(key)
                s = term if s is None else s + term
                if s.is_zero():
                    out.pop(key, None)
                else:
                    out[key] = s
    return TensorElt(A.datum, A.coeffs, out)


def coproduct_T_simple(datum, coeffs, i) -> TensorElt:
    """Delta(T_i) = 1 (x) T_i + T_i (x) 1 + (1 - e^{alpha_i}) T_i (x) T_i."""
    e = weyl.identity(datum)
    ri = weyl.simple(datum, i)
    one = LaurentPoly.one(coeffs)
    return TensorElt(datum, coeffs, {
        (e, ri): one,
        (ri, e): one,
        (ri, ri): one - _alpha_poly(datum, coeffs, i),
    })


def coproduct(a: HeckeElt) -> TensorElt:
    """Delta on K: fold Delta(T_i) along canonical words, R(T)-linear on the left."""
    out = TensorElt.zero(a.datum, a.coeffs)
    for w, p in a.terms.items():
        acc = TensorElt.one(a.datum, a.coeffs)
        for i in w.word:
            acc = tensor_mul(acc, coproduct_T_simple(a.datum, a.coeffs, i))
        out = out + acc.scaled(p)
    return out


def structure_constants_c(w: WeylElt, coeffs=None) -> dict:
    """c_w^{uv} with Delta(T_w) = sum c_w^{uv} T_u (x) T_v."""
    if coeffs is None:
        coeffs = coefficient_datum(w.datum)
    return dict(coproduct(HeckeElt.T(w, coeffs)).terms)


def phi0_tensor(A: TensorElt) -> TensorElt:
    return TensorElt(A.datum, A.coeffs,
                     {uv: LaurentPoly.const(A.coeffs, phi0(p))
                      for uv, p in A.terms.items()})
