"""Partitions and symmetric functions in the m, h, s bases over Z.

Transition matrices go through Kostka numbers (semistandard tableau counts,
cached per degree); all changes of basis are exact integer unitriangular
solves.  The Hall pairing is the h/m duality <h_lam, m_mu> = delta.

The quotient Lambda^(n) kills m_lam with lam_1 >= n; the subalgebra
Lambda_(n) = Z[h_1, ..., h_{n-1}] uses h_lam with parts < n.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Iterable, Mapping

Partition = tuple  # weakly decreasing positive ints


def make_partition(parts: Iterable[int]) -> Partition:
    parts = tuple(sorted((p for p in parts if p != 0), reverse=True))
    if any(p < 0 for p in parts):
        raise ValueError("partition parts must be positive")
    return parts


def partitions_of(n: int, max_part: int | None = None) -> list[Partition]:
    """Partitions of n (parts <= max_part), lex-descending."""
    cap = n if max_part is None else min(max_part, n)
    out = []

    def rec(rem, bound, prefix):
        if rem == 0:
            out.append(tuple(prefix))
            return
        for p in range(min(bound, rem), 0, -1):
            rec(rem - p, p, prefix + [p])

    rec(n, cap, [])
    return out


def partitions_up_to(n: int, max_part: int | None = None) -> list[Partition]:
    return [lam for d in range(n + 1) for lam in partitions_of(d, max_part)]


def dominates(lam: Partition, mu: Partition) -> bool:
    """lam >= mu in dominance order (same size)."""
    if sum(lam) != sum(mu):
        return False
    a = b = 0
    for k in range(max(len(lam), len(mu))):
        a += lam[k] if k < len(lam) else 0
        b += mu[k] if k < len(mu) else 0
        if a < b:
            return False
    return True


def conjugate(lam: Partition) -> Partition:
    if not lam:
        return ()
    return tuple(sum(1 for p in lam if p >= k) for k in range(1, lam[0] + 1))


@lru_cache(maxsize=None)
def kostka(lam: Partition, mu: Partition) -> int:
    """Number of SSYT of shape lam and content mu."""
    if sum(lam) != sum(mu):
        return 0
    if not lam:
        return 1
    if not dominates(lam, mu):
        return 0
    # peel a horizontal strip of size mu[-1] for the largest entry
    last = mu[-1]
    rest = mu[:-1]
    total = 0
    for nu in _horizontal_strips_below(lam, last):
        total += kostka(nu, rest)
    return total


def _horizontal_strips_below(lam: Partition, size: int):
    """Shapes nu <= lam with lam/nu a horizontal strip of the given size."""
    rows = len(lam)

    def rec(i, rem, prev_nu, acc):
        if i == rows:
            if rem == 0:
                yield make_partition(acc)
            return
        low = lam[i + 1] if i + 1 < rows else 0
        hi = min(lam[i], prev_nu)  # nu interlaces: lam_{i+1} <= nu_i <= lam_i
        for nu_i in range(hi, low - 1, -1):
            take = lam[i] - nu_i
            if take <= rem:
                yield from rec(i + 1, rem - take, nu_i, acc + [nu_i])

    yield from rec(0, size, 10 ** 9, [])


_BASES = ("m", "h", "s", "F", "G", "g", "kschur")


class SymFunc:
    """Basis-tagged finitely supported integer map on partitions."""

    __slots__ = ("basis", "terms", "n")

    def __init__(self, basis: str, terms: Mapping[Partition, int] | None = None,
                 n: int | None = None):
        if basis not in _BASES:
            raise ValueError(f"unknown basis {basis!r}")
        self.basis = basis
        self.n = n
        self.terms = {}
        if terms:
            for lam, c in terms.items():
                if c:
                    self.terms[make_partition(lam)] = c

    @staticmethod
    def zero(basis="m", n=None) -> "SymFunc":
        return SymFunc(basis, {}, n)

    @staticmethod
    def one(basis="m", n=None) -> "SymFunc":
        return SymFunc(basis, {(): 1}, n)

    @staticmethod
    def gen(basis, lam, n=None) -> "SymFunc":
        return SymFunc(basis, {make_partition(lam): 1}, n)

    def _compat(self, other):
        if self.basis != other.basis:
            raise ValueError(f"basis mismatch {self.basis!r} vs {other.basis!r}"
                             " (convert explicitly)")
        if self.n != other.n and self.n is not None and other.n is not None:
            raise ValueError("bound-context mismatch")

    def __add__(self, other):
        self._compat(other)
        out = dict(self.terms)
        for lam, c in other.terms.items():
            s = out.get(lam, 0) + c
            if s:
                out[lam] = s
            else:
                out.pop(lam, None)
        return SymFunc(self.basis, out, self.n or other.n)

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return SymFunc(self.basis, {lam: -c for lam, c in self.terms.items()}, self.n)

    def scaled(self, k: int) -> "SymFunc":
        if k == 0:
            return SymFunc.zero(self.basis, self.n)
        return SymFunc(self.basis, {lam: k * c for lam, c in self.terms.items()}, self.n)

    def __eq__(self, other):
        return (isinstance(other, SymFunc) and self.basis == other.basis
                and self.terms == other.terms)

    def __hash__(self):
        return hash((self.basis, frozenset(self.terms.items())))

    def is_zero(self):
        return not self.terms

    def max_degree(self) -> int:
        return max((sum(lam) for lam in self.terms), default=0)

    def min_degree(self) -> int:
        return min((sum(lam) for lam in self.terms), default=0)

    def degree_part(self, d: int) -> "SymFunc":
        return SymFunc(self.basis,
                       {lam: c for lam, c in self.terms.items() if sum(lam) == d},
                       self.n)

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda t: (sum(t[0]), t[0]))

    def __repr__(self):
        if not self.terms:
            return "0"
        bits = []
        for lam, c in self.sorted_terms():
            label = f"{self.basis}{''.join(map(str, lam)) or '()'}"
            bits.append(f"{c}*{label}" if c != 1 else label)
        return " + ".join(bits)

    def to_json(self):
        return {"basis": self.basis, "n": self.n,
                "terms": [{"partition": list(lam), "coeff": c}
                          for lam, c in self.sorted_terms()]}

    @staticmethod
    def from_json(data) -> "SymFunc":
        return SymFunc(data["basis"],
                       {tuple(rec["partition"]): rec["coeff"]
                        for rec in data["terms"]}, data.get("n"))


# -- transition matrices -------------------------------------------------------


@lru_cache(maxsize=None)
def _h_to_m_row(mu: Partition) -> tuple:
    """h_mu = sum_nu (sum_lam K_{lam mu} K_{lam nu}) m_nu, as item tuple."""
    d = sum(mu)
    out = {}
    for nu in partitions_of(d):
        c = sum(kostka(lam, mu) * kostka(lam, nu) for lam in partitions_of(d))
        if c:
            out[nu] = c
    return tuple(sorted(out.items()))


@lru_cache(maxsize=None)
def _s_to_m_row(lam: Partition) -> tuple:
    d = sum(lam)
    return tuple(sorted((mu, kostka(lam, mu)) for mu in partitions_of(d)
                        if kostka(lam, mu)))


@lru_cache(maxsize=None)
def _h_to_s_row(mu: Partition) -> tuple:
    """h_mu = sum_lam K_{lam mu} s_lam."""
    d = sum(mu)
    return tuple(sorted((lam, kostka(lam, mu)) for lam in partitions_of(d)
                        if kostka(lam, mu)))


def _expand_rows(f: SymFunc, row, target) -> SymFunc:
    out = SymFunc.zero(target, f.n)
    for lam, c in f.terms.items():
        out = out + SymFunc(target, dict(row(lam)), f.n).scaled(c)
    return out


def _invert_to(f: SymFunc, row, target, pivot_max: bool) -> SymFunc:
    """Solve f = sum c_lam * row(lam) by unitriangular peeling.

    ``pivot_max`` when row(lam) = lam + dominance-smaller terms (pick the
    maximal residual term), False when row(lam) = lam + dominance-larger
    terms (pick the minimal one).  Lex order refines dominance both ways.
    """
    residual = dict(f.terms)
    out = {}
    chooser = max if pivot_max else min
    while residual:
        lam = chooser(residual, key=lambda t: (sum(t), t))
        c = residual[lam]
        out[lam] = c
        for mu, a in row(lam):
            s = residual.get(mu, 0) - c * a
            if s:
                residual[mu] = s
            else:
                residual.pop(mu, None)
    return SymFunc(target, out, f.n)


def convert(f: SymFunc, target: str) -> SymFunc:
    """Exact change of basis among m, h, s."""
    if target not in ("m", "h", "s"):
        raise ValueError("convert targets m, h, s only")
    if f.basis == target:
        return f
    if f.basis == "h" and target == "m":
        return _expand_rows(f, _h_to_m_row, "m")
    if f.basis == "s" and target == "m":
        return _expand_rows(f, _s_to_m_row, "m")
    if f.basis == "h" and target == "s":
        return _expand_rows(f, _h_to_s_row, "s")
    if f.basis == "m" and target == "s":
        return _invert_to(f, _s_to_m_row, "s", pivot_max=True)
    if f.basis == "s" and target == "h":
        return _invert_to(f, _h_to_s_row, "h", pivot_max=False)
    if f.basis == "m" and target == "h":
        return convert(convert(f, "s"), "h")
    raise ValueError(f"cannot convert basis {f.basis!r}")


# -- products, pairing, quotient, coproduct ---------------------------------------


def multiply(f: SymFunc, g: SymFunc) -> SymFunc:
    """Product; h x h concatenates parts, anything else goes through h."""
    if f.basis == "h" and g.basis == "h":
        out = {}
        for lam, a in f.terms.items():
            for mu, b in g.terms.items():
                nu = make_partition(lam + mu)
                s = out.get(nu, 0) + a * b
                if s:
                    out[nu] = s
                else:
                    del out[nu]
        return SymFunc("h", out, f.n or g.n)
    fh, gh = convert(f, "h"), convert(g, "h")
    prod = multiply(fh, gh)
    if f.basis == g.basis and f.basis in ("m", "s"):
        return convert(prod, f.basis)
    return prod


def truncate(f: SymFunc, n: int) -> SymFunc:
    """Image in Lambda^(n): drop m_lam with lam_1 >= n."""
    fm = convert(f, "m") if f.basis != "m" else f
    return SymFunc("m", {lam: c for lam, c in fm.terms.items()
                         if not lam or lam[0] < n}, n)


def hall_pair(f: SymFunc, g: SymFunc) -> int:
    """<f, g> with f in the h basis and g in the m basis (dual bases)."""
    if f.basis != "h" or g.basis != "m":
        raise ValueError("hall_pair expects (h-basis, m-basis); convert explicitly")
    return sum(c * g.terms.get(lam, 0) for lam, c in f.terms.items())


class TensorSym:
    """Finitely supported integer map on pairs of partitions, fixed bases."""

    __slots__ = ("bases", "terms", "n")

    def __init__(self, bases, terms=None, n=None):
        self.bases = bases
        self.n = n
        self.terms = {}
        if terms:
            for key, c in terms.items():
                if c:
                    self.terms[(make_partition(key[0]), make_partition(key[1]))] = c

    def __add__(self, other):
        if self.bases != other.bases:
            raise ValueError("tensor basis mismatch")
        out = dict(self.terms)
        for key, c in other.terms.items():
            s = out.get(key, 0) + c
            if s:
                out[key] = s
            else:
                out.pop(key, None)
        return TensorSym(self.bases, out, self.n or other.n)

    def __neg__(self):
        return TensorSym(self.bases, {k: -c for k, c in self.terms.items()}, self.n)

    def __sub__(self, other):
        return self + (-other)

    def scaled(self, k: int):
        if k == 0:
            return TensorSym(self.bases, {}, self.n)
        return TensorSym(self.bases, {key: k * c for key, c in self.terms.items()}, self.n)

    def __eq__(self, other):
        return (isinstance(other, TensorSym) and self.bases == other.bases
                and self.terms == other.terms)

    def is_zero(self):
        return not self.terms

    def sorted_terms(self):
        return sorted(self.terms.items(),
                      key=lambda t: (sum(t[0][0]), t[0][0], sum(t[0][1]), t[0][1]))

    def __repr__(self):
        b1, b2 = self.bases
        bits = [f"{c}*{b1}{''.join(map(str, l))}(x){b2}{''.join(map(str, r))}"
                for (l, r), c in self.sorted_terms()]
        return " + ".join(bits) if bits else "0"


def coproduct_h(f: SymFunc) -> TensorSym:
    """Delta on Z[h_1, h_2, ...]: Delta(h_r) = sum_j h_j (x) h_{r-j},
    extended multiplicatively."""
    if f.basis != "h":
        raise ValueError("coproduct_h expects the h basis")
    total = TensorSym(("h", "h"), {}, f.n)
    for lam, c in f.terms.items():
        acc = {((), ()): c}
        for r in lam:
            nxt = {}
            for (left, right), a in acc.items():
                for j in range(r + 1):
                    key = (make_partition(left + ((j,) if j else ())),
                           make_partition(right + ((r - j,) if r - j else ())))
                    nxt[key] = nxt.get(key, 0) + a
            acc = nxt
        total = total + TensorSym(("h", "h"), acc, f.n)
    return total
