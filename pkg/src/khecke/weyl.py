"""Weyl-group elements for any symmetrizable GCM, with a fast affine type A path.

Elements are stored by their canonical reduced word (greedy smallest left
descent).  In affine type A the primary representation is the affine
permutation window [w(1), ..., w(n)] (entries distinct mod n, summing to
n(n+1)/2 + 0); products, lengths and descents are O(n) there.  For generic
data the element's action matrix on the lattice is kept alongside.

Words in tables and CLI output are read left to right: "210" is r2*r1*r0.
"""

from __future__ import annotations

import itertools
from functools import lru_cache

from .cartan import DatumMismatchError, RootDatum, Weight


def _mat_identity(r):
    return tuple(tuple(1 if i == j else 0 for j in range(r)) for i in range(r))


def _mat_mul(a, b):
    rb = len(b)
    cols = range(len(b[0]))
    return tuple(tuple(sum(arow[k] * b[k][j] for k in range(rb)) for j in cols)
                 for arow in a)


def _mat_apply(m, v):
    return tuple(sum(row[k] * v[k] for k in range(len(v))) for row in m)


class _DatumOps:
    """Per-datum cached machinery: reflection matrices, element interning."""

    _registry: dict[int, "_DatumOps"] = {}

    def __init__(self, datum: RootDatum):
        self.datum = datum
        self.refl = {}
        for i in datum.nodes:
            cols = []
            for k in range(datum.rank):
                basis = datum.weight(tuple(1 if t == k else 0 for t in range(datum.rank)))
                cols.append(datum.reflect(i, basis).coords)
            # matrix with column k = r_i(e_k); stored row-major
            self.refl[i] = tuple(tuple(cols[k][r] for k in range(datum.rank))
                                 for r in range(datum.rank))
        self.window_n = datum.window_n
        self.interned: dict = {}
        self.partition_inverse: dict = {}

    @classmethod
    def of(cls, datum) -> "_DatumOps":
        ops = cls._registry.get(id(datum))
        if ops is None:
            ops = cls(datum)
            cls._registry[id(datum)] = ops
        return ops


# -- window arithmetic (affine type A) ----------------------------------------


def _win_identity(n):
    return tuple(range(1, n + 1))


def _win_simple(n, i):
    if i == 0:
        return (0,) + tuple(range(2, n)) + (n + 1,) if n > 1 else None
    w = list(range(1, n + 1))
    w[i - 1], w[i] = w[i], w[i - 1]
    return tuple(w)


def _win_eval(win, j):
    n = len(win)
    q, r = divmod(j - 1, n)
    return win[r] + q * n


def _win_compose(u, v):
    """Window of the product u*v (u after v)."""
    return tuple(_win_eval(u, x) for x in v)


def _win_inverse(win):
    n = len(win)
    pos = {}
    for idx, val in enumerate(win, start=1):
        q, r = divmod(val - 1, n)
        pos[r + 1] = idx - q * n
    return tuple(pos[r] for r in range(1, n + 1))


def _win_length(win):
    n = len(win)
    total = 0
    for i in range(n):
        for j in range(i + 1, n):
            d = win[j] - win[i]
            total += abs(d // n) if d < 0 else d // n
    return total


def _win_right_descent(win, i):
    n = len(win)
    if i == 0:
        return win[n - 1] - n > win[0]
    return win[i - 1] > win[i]


def _win_left_descent(win, i):
    return _win_right_descent(_win_inverse(win), i)


def _win_mult_simple_left(win, i):
    """Window of r_i * w: swap values i, i+1 (mod n) everywhere."""
    n = len(win)
    out = []
    for val in win:
        q, r = divmod(val - 1, n)
        r += 1
        if r == i or (i == 0 and r == n):
            out.append(val + 1)
        elif r == i + 1 or (i == 0 and r == 1):
            out.append(val - 1)
        else:
            out.append(val)
    return tuple(out)


def _win_canonical_word(win):
    word = []
    win = tuple(win)
    n = len(win)
    while True:
        i = next((i for i in range(n) if _win_left_descent(win, i)), None)
        if i is None:
            break
        word.append(i)
        win = _win_mult_simple_left(win, i)
    if win != _win_identity(n):
        raise ValueError("window did not reduce to the identity")
    return tuple(word)


class WeylElt:
    """Immutable Weyl group element (canonical word + faithful key)."""

    __slots__ = ("datum", "word", "window", "_matrix", "_inv_matrix", "_key", "_hash")

    def __init__(self, datum, word, window=None, matrix=None, inv_matrix=None):
        self.datum = datum
        self.word = tuple(word)
        self.window = window
        self._matrix = matrix
        self._inv_matrix = inv_matrix
        self._key = None
        self._hash = hash((id(datum), self.word))

    # -- identity / generators ------------------------------------------------

    @property
    def length(self) -> int:
        return len(self.word)

    def __eq__(self, other):
        return (isinstance(other, WeylElt) and self.datum is other.datum
                and self.word == other.word)

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return f"W[{''.join(map(str, self.word)) or 'id'}]"

    def is_identity(self) -> bool:
        return not self.word

    # -- lazy action -----------------------------------------------------------

    @property
    def matrix(self):
        if self._matrix is None:
            ops = _DatumOps.of(self.datum)
            m = _mat_identity(self.datum.rank)
            for i in self.word:
                m = _mat_mul(m, ops.refl[i])
            self._matrix = m
        return self._matrix

    @property
    def inv_matrix(self):
        if self._inv_matrix is None:
            ops = _DatumOps.of(self.datum)
            m = _mat_identity(self.datum.rank)
            for i in reversed(self.word):
                m = _mat_mul(m, ops.refl[i])
            self._inv_matrix = m
        return self._inv_matrix

    @property
    def key(self):
        """Image of rho (rho_af in affine flavor) under the element."""
        if self._key is None:
            self._key = apply(self, self.datum.rho).coords
        return self._key

    def to_json(self) -> dict:
        out = {"word": list(self.word)}
        if self.window is not None:
            out["window"] = list(self.window)
        return out


def identity(datum) -> WeylElt:
    return _intern(datum, (), _win_identity(_window_n(datum)) if _window_n(datum) else None)


def _window_n(datum):
    return _DatumOps.of(datum).window_n


def _intern(datum, word, window) -> WeylElt:
    ops = _DatumOps.of(datum)
    elt = ops.interned.get(word)
    if elt is None:
        elt = WeylElt(datum, word, window)
        ops.interned[word] = elt
    return elt


def simple(datum, i) -> WeylElt:
    if i not in datum.nodes:
        raise ValueError(f"{i} is not a node of {datum.name}")
    n = _window_n(datum)
    return _intern(datum, (i,), _win_simple(n, i) if n else None)


def from_word(datum, word) -> WeylElt:
    """Element of an arbitrary (possibly non-reduced) word."""
    w = identity(datum)
    for i in word:
        w = multiply(w, simple(datum, i))
    return w


def parse_word(text: str):
    """Digit-string word: '210' -> (2, 1, 0).  Commas allowed for nodes > 9."""
    text = text.strip()
    if not text:
        return ()
    if "," in text:
        return tuple(int(t) for t in text.split(","))
    return tuple(int(ch) for ch in text)


def word_str(word) -> str:
    return "".join(str(i) for i in word) if all(i < 10 for i in word) else \
        ",".join(str(i) for i in word)


# -- descents ------------------------------------------------------------------


def has_left_descent(w: WeylElt, i) -> bool:
    """True iff l(r_i w) < l(w), i.e. w^{-1}(alpha_i) < 0."""
    if w.window is not None:
        return _win_left_descent(w.window, i)
    if not w.word:
        return False
    v = _mat_apply(w.inv_matrix, w.datum.simple_root(i).coords)
    c = w.datum.root_coords(w.datum.weight(v))
    return any(x < 0 for x in c)


def has_right_descent(w: WeylElt, i) -> bool:
    if w.window is not None:
        return _win_right_descent(w.window, i)
    if not w.word:
        return False
    v = _mat_apply(w.matrix, w.datum.simple_root(i).coords)
    c = w.datum.root_coords(w.datum.weight(v))
    return any(x < 0 for x in c)


def _canonical_from_matrix(datum, matrix, inv_matrix):
    ops = _DatumOps.of(datum)
    word = []
    m, mi = matrix, inv_matrix
    while True:
        found = None
        for i in datum.nodes:
            v = _mat_apply(mi, datum.simple_root(i).coords)
            c = datum.root_coords(datum.weight(v))
            if any(x < 0 for x in c):
                found = i
                break
        if found is None:
            break
        word.append(found)
        m = _mat_mul(ops.refl[found], m)
        mi = _mat_mul(mi, ops.refl[found])
    if m != _mat_identity(datum.rank):
        raise ValueError("matrix did not reduce to the identity")
    return tuple(word)


# -- group operations ----------------------------------------------------------


def multiply(u: WeylElt, v: WeylElt) -> WeylElt:
    if u.datum is not v.datum:
        raise DatumMismatchError("elements of different Weyl groups")
    if u.is_identity():
        return v
    if v.is_identity():
        return u
    if u.window is not None:
        win = _win_compose(u.window, v.window)
        word = _win_canonical_word(win)
        return _intern(u.datum, word, win)
    m = _mat_mul(u.matrix, v.matrix)
    mi = _mat_mul(v.inv_matrix, u.inv_matrix)
    word = _canonical_from_matrix(u.datum, m, mi)
    elt = _intern(u.datum, word, None)
    if elt._matrix is None:
        elt._matrix, elt._inv_matrix = m, mi
    return elt


def inverse(w: WeylElt) -> WeylElt:
    if w.window is not None:
        win = _win_inverse(w.window)
        return _intern(w.datum, _win_canonical_word(win), win)
    elt = _intern(w.datum, _canonical_from_matrix(w.datum, w.inv_matrix, w.matrix), None)
    if elt._matrix is None:
        elt._matrix, elt._inv_matrix = w.inv_matrix, w.matrix
    return elt


def apply(w: WeylElt, lam: Weight) -> Weight:
    """Action on weights; level-zero when w is affine and lam is finite."""
    datum = w.datum
    if lam.datum is datum:
        return datum.weight(_mat_apply(w.matrix, lam.coords))
    if datum.flavor == "affine" and lam.datum is datum.finite:
        if w.window is not None:
            # w = t_lam u acts level-zero through its finite part u
            n = len(w.window)
            perm = [((val - 1) % n) for val in w.window]  # u(i)-1 for i=1..n
            out = [0] * n
            for i in range(n):
                out[perm[i]] = lam.coords[i]
            return datum.finite.weight(out)
        v = lam.coords
        for i in reversed(w.word):
            m = datum.projected_pairing(i, datum.finite.weight(v))
            if m:
                a = datum.projected_root(i).coords
                v = tuple(c - m * ac for c, ac in zip(v, a))
        return datum.finite.weight(v)
    raise DatumMismatchError("weight does not belong to this group's lattices")


# -- Bruhat order ---------------------------------------------------------------


@lru_cache(maxsize=1 << 20)
def _bruhat_leq_cached(v: WeylElt, w: WeylElt) -> bool:
    if v.is_identity():
        return True
    if v.length > w.length:
        return False
    if v.length == w.length:
        return v == w
    i = w.word[0]  # smallest-left-descent generator of the canonical word
    rw = multiply(simple(w.datum, i), w)
    rv = multiply(simple(w.datum, i), v)
    if rv.length < v.length:
        return _bruhat_leq_cached(rv, rw)
    return _bruhat_leq_cached(v, rw)


def bruhat_leq(v: WeylElt, w: WeylElt) -> bool:
    """Bruhat order by the lifting recursion."""
    if v.datum is not w.datum:
        raise DatumMismatchError("elements of different Weyl groups")
    return _bruhat_leq_cached(v, w)


def bruhat_ideal(w: WeylElt) -> list[WeylElt]:
    """All v <= w, via subwords of the canonical word."""
    seen = {identity(w.datum)}
    for mask in range(1, 1 << w.length):
        sub = [w.word[k] for k in range(w.length) if mask >> k & 1]
        seen.add(from_word(w.datum, sub))
    return sorted(seen, key=lambda v: (v.length, v.word))


def inversions(v: WeylElt) -> set[Weight]:
    """Inv(v) = {alpha > 0 : r_alpha v < v} via prefix roots of the word."""
    out = set()
    datum = v.datum
    for k in range(v.length):
        beta = datum.simple_root(v.word[k])
        for j in range(k - 1, -1, -1):
            beta = datum.reflect(v.word[j], beta)
        out.add(beta)
    return out


def reflection_for_root(datum, alpha: Weight) -> WeylElt:
    """r_alpha for a positive real root alpha = u(alpha_i), as u r_i u^{-1}."""
    coords = datum.root_coords(alpha)
    if coords is None:
        raise ValueError("not in the root lattice")
    for i in datum.nodes:
        if alpha == datum.simple_root(i):
            return simple(datum, i)
    for i in datum.nodes:
        if datum.pairing(i, alpha) > 0:
            beta = datum.reflect(i, alpha)
            ri = simple(datum, i)
            return multiply(multiply(ri, reflection_for_root(datum, beta)), ri)
    raise ValueError("root did not reduce to a simple root")


# -- enumeration -----------------------------------------------------------------


def elements_up_to_length(datum, max_len: int) -> list[list[WeylElt]]:
    """Elements grouped by length 0..max_len (BFS over right products)."""
    layers = [[identity(datum)]]
    for ell in range(1, max_len + 1):
        nxt = {}
        for w in layers[ell - 1]:
            for i in datum.nodes:
                if not has_right_descent(w, i):
                    wi = multiply(w, simple(datum, i))
                    nxt[wi.word] = wi
        layers.append(sorted(nxt.values(), key=lambda v: v.word))
    return layers


def all_elements(datum, max_len: int) -> list[WeylElt]:
    return [w for layer in elements_up_to_length(datum, max_len) for w in layer]


# -- affine type A specials --------------------------------------------------------


def _require_window(datum):
    if _window_n(datum) is None:
        raise ValueError("operation needs an affine type A (window) datum")
    return _window_n(datum)


def translation(datum, lam) -> WeylElt:
    """t_lam for lam in the coroot lattice (sum zero), affine type A."""
    n = _require_window(datum)
    lam = tuple(lam)
    if len(lam) != n or sum(lam) != 0:
        raise ValueError("translation needs a length-n integer vector summing to 0")
    win = tuple(i + n * lam[i - 1] for i in range(1, n + 1))
    return _intern(datum, _win_canonical_word(win), win)


def is_grassmannian(w: WeylElt) -> bool:
    """Minimal in its coset wW: no right descent at a finite node."""
    if w.window is not None:
        return all(w.window[i] < w.window[i + 1] for i in range(len(w.window) - 1))
    return not any(has_right_descent(w, i) for i in w.datum.nodes if i != 0)


def grassmannian_part(w: WeylElt):
    """(Grassmannian representative of wW, lam with wW = t_lam W)."""
    n = _require_window(w.datum)
    win = tuple(sorted(w.window))
    rep = _intern(w.datum, _win_canonical_word(win), win)
    lam = [0] * n
    for val in win:
        q, r = divmod(val - 1, n)
        lam[r] = q
    return rep, tuple(lam)


def translation_of_coset(w: WeylElt) -> WeylElt:
    """t_lam with wW = t_lam W."""
    _, lam = grassmannian_part(w)
    return translation(w.datum, lam)


def grassmannian_from_partition(datum, partition) -> WeylElt:
    """Element of the (n-1)-bounded partition: cell (i,j) has residue j-i mod n,
    read bottom row to top, right to left, multiplied left to right."""
    n = _require_window(datum)
    parts = tuple(partition)
    if any(parts[k] < parts[k + 1] for k in range(len(parts) - 1)) or \
            any(p <= 0 for p in parts):
        raise ValueError("not a partition")
    if parts and parts[0] >= n:
        raise ValueError(f"partition must be {n-1}-bounded")
    word = []
    for i in range(len(parts), 0, -1):          # bottom row to top
        for j in range(parts[i - 1], 0, -1):    # right to left
            word.append((j - i) % n)
    return from_word(datum, word)


def bounded_partitions(size: int, max_part: int) -> list[tuple]:
    """Partitions of ``size`` with parts <= max_part, lex-descending."""
    out = []

    def rec(rem, cap, prefix):
        if rem == 0:
            out.append(tuple(prefix))
            return
        for p in range(min(cap, rem), 0, -1):
            rec(rem - p, p, prefix + [p])

    rec(size, max_part, [])
    return out


def partition_of_grassmannian(w: WeylElt):
    """Inverse of grassmannian_from_partition (|partition| = length)."""
    if not is_grassmannian(w):
        raise ValueError("element is not Grassmannian")
    n = _require_window(w.datum)
    cache = _DatumOps.of(w.datum).partition_inverse
    if w not in cache:
        for lam in bounded_partitions(w.length, n - 1):
            cache[grassmannian_from_partition(w.datum, lam)] = lam
    if w not in cache:
        raise ValueError("no bounded partition matches this element")
    return cache[w]


def cyclically_decreasing(datum, ell: int) -> list[WeylElt]:
    """One element per size-ell subset of Z/nZ, indices multiplied in
    cyclically decreasing order."""
    n = _require_window(datum)
    if not 0 <= ell <= n - 1:
        raise ValueError("need 0 <= ell <= n-1")
    out = []
    for subset in itertools.combinations(range(n), ell):
        out.append(from_word(datum, cyclically_decreasing_word(n, subset)))
    return out


def cyclically_decreasing_word(n: int, subset) -> tuple:
    """The cyclically decreasing word with letter set ``subset`` of Z/nZ."""
    subset = set(subset)
    if len(subset) >= n:
        raise ValueError("subset must be proper")
    start = min(set(range(n)) - subset)
    word = []
    for k in range(1, n + 1):
        j = (start - k) % n
        if j in subset:
            word.append(j)
    return tuple(word)
