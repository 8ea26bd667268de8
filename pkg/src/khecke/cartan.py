"""Root data, weight lattices, and the Laurent coefficient ring Z[P].

Three kinds of root datum are supported:

* ``RootDatum.sl(n)`` -- finite type A_{n-1} with weights in Z^n modulo the
  all-ones vector, canonicalized so the last coordinate is zero.  This keeps
  pairings against simple coroots as coordinate differences.
* ``RootDatum.affine_sl(n)`` -- untwisted affine type A_{n-1}^(1).  Weights
  carry coordinates (finite part in Z^n mod all-ones, level, degree), i.e.
  lambda = fin + level*Lambda_0 + degree*delta.
* ``RootDatum.from_cartan(...)`` -- a generic symmetrizable GCM, weights in
  the fundamental-weight basis (finite), optionally affinized with an extra
  delta coordinate.

LaurentPoly is the integer group algebra of the weight lattice: a finitely
supported map Weight -> nonzero int.  All arithmetic is exact; there is no
rational-function arithmetic anywhere in the package.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Mapping


class DatumMismatchError(ValueError):
    """Raised when weights/elements from different root data are mixed."""


class RootDatum:
    """A symmetrizable generalized Cartan matrix embedded in a lattice.

    ``nodes`` is the ordered Dynkin index set; ``cartan[i][j]`` is
    <alpha_i^vee, alpha_j>.  ``flavor`` is ``"finite"`` or ``"affine"``;
    affine data carry marks a_i with delta = sum a_i alpha_i.
    """

    def __init__(self, name, nodes, cartan, rank, simple_roots, coroot_rows,
                 fundamental_weights, flavor, quotient_vector=None,
                 marks=None, finite=None):
        self.name = name
        self.nodes = tuple(nodes)
        self.cartan = {i: dict(row) for i, row in cartan.items()}
        self.rank = rank
        self._simple_roots = {i: tuple(v) for i, v in simple_roots.items()}
        # row vectors: <alpha_i^vee, lam> = dot(coroot_rows[i], lam.coords)
        self._coroot_rows = {i: tuple(v) for i, v in coroot_rows.items()}
        self._fundamental = {i: tuple(v) for i, v in fundamental_weights.items()}
        self.flavor = flavor
        self.quotient_vector = tuple(quotient_vector) if quotient_vector else None
        self._qlast = None
        if self.quotient_vector is not None:
            self._qlast = max(k for k, c in enumerate(self.quotient_vector) if c)
        self.marks = dict(marks) if marks else None
        self.finite = finite  # companion finite datum (affine flavor only)
        self.window_n = None  # set for affine_sl data (window representation)
        self._check_gcm()
        self._root_solver = None

    # -- construction ------------------------------------------------------
    # sl / affine_sl / of_type return canonical shared instances: weights and
    # Weyl elements compare by datum identity.

    _sl_cache: dict = {}
    _affine_cache: dict = {}
    _type_cache: dict = {}

    @staticmethod
    def sl(n: int) -> "RootDatum":
        """SL_n root datum: Z^n mod the all-ones vector."""
        if n in RootDatum._sl_cache:
            return RootDatum._sl_cache[n]
        if n < 2:
            raise ValueError("sl(n) needs n >= 2")
        nodes = tuple(range(1, n))
        cartan = {i: {j: (2 if i == j else (-1 if abs(i - j) == 1 else 0))
                      for j in nodes} for i in nodes}
        e = lambda k: tuple(1 if t == k else 0 for t in range(n))
        roots = {i: tuple(a - b for a, b in zip(e(i - 1), e(i))) for i in nodes}
        coroots = dict(roots)  # pairing <alpha_i^vee, .> = x_i - x_{i+1}
        fund = {i: tuple(1 if t < i else 0 for t in range(n)) for i in nodes}
        datum = RootDatum(f"A{n-1}:sl{n}", nodes, cartan, n, roots, coroots,
                          fund, "finite", quotient_vector=(1,) * n)
        RootDatum._sl_cache[n] = datum
        return datum

    @staticmethod
    def affine_sl(n: int) -> "RootDatum":
        """Affine SL_n datum on coordinates (Z^n mod ones, level, degree)."""
        if n in RootDatum._affine_cache:
            return RootDatum._affine_cache[n]
        if n < 2:
            raise ValueError("affine_sl(n) needs n >= 2")
        fin = RootDatum.sl(n)
        nodes = tuple(range(n))
        cartan = {}
        for i in nodes:
            row = {}
            for j in nodes:
                d = (i - j) % n
                if i == j:
                    row[j] = 2
                elif d in (1, n - 1):
                    row[j] = -2 if n == 2 else -1
                else:
                    row[j] = 0
            cartan[i] = row
        rank = n + 2
        ext = lambda v, lev, deg: tuple(v) + (lev, deg)
        roots = {i: ext(fin._simple_roots[i], 0, 0) for i in fin.nodes}
        # alpha_0 = delta - theta, theta = e_1 - e_n
        theta = tuple((1 if t == 0 else 0) - (1 if t == n - 1 else 0) for t in range(n))
        roots[0] = ext(tuple(-x for x in theta), 0, 1)
        coroots = {i: ext(fin._coroot_rows[i], 0, 0) for i in fin.nodes}
        # <alpha_0^vee, lam> = level - <theta^vee, fin(lam)>
        coroots[0] = ext(tuple(-x for x in theta), 1, 0)
        fund = {i: ext(fin._fundamental[i], 1, 0) for i in fin.nodes}
        fund[0] = ext((0,) * n, 1, 0)
        marks = {i: 1 for i in nodes}
        datum = RootDatum(f"A{n-1}~:sl{n}", nodes, cartan, rank, roots, coroots,
                          fund, "affine", quotient_vector=(1,) * n + (0, 0),
                          marks=marks, finite=fin)
        datum.window_n = n
        RootDatum._affine_cache[n] = datum
        return datum

    @staticmethod
    def from_cartan(matrix, labels=None, name=None) -> "RootDatum":
        """Finite datum from a GCM, weights in the omega basis."""
        r = len(matrix)
        labels = tuple(labels) if labels else tuple(range(1, r + 1))
        cartan = {labels[i]: {labels[j]: matrix[i][j] for j in range(r)}
                  for i in range(r)}
        roots = {labels[j]: tuple(matrix[i][j] for i in range(r)) for j in range(r)}
        coroots = {labels[i]: tuple(1 if t == i else 0 for t in range(r))
                   for i in range(r)}
        fund = {labels[i]: tuple(1 if t == i else 0 for t in range(r))
                for i in range(r)}
        return RootDatum(name or f"gcm{matrix}", labels, cartan, r, roots,
                         coroots, fund, "finite")

    @staticmethod
    def affinize_cartan(matrix, marks, labels=None, name=None) -> "RootDatum":
        """Affine datum from an affine GCM (node 0 first), Lambda basis + delta.

        ``marks`` are the a_i with sum_j a_ij a_j = 0; alpha_0 carries the
        delta coordinate.  Used to cross-check the window representation.
        """
        r = len(matrix)
        labels = tuple(labels) if labels else tuple(range(r))
        cartan = {labels[i]: {labels[j]: matrix[i][j] for j in range(r)}
                  for i in range(r)}
        roots = {labels[j]: tuple(matrix[i][j] for i in range(r))
                 + ((1,) if j == 0 else (0,)) for j in range(r)}
        coroots = {labels[i]: tuple(1 if t == i else 0 for t in range(r)) + (0,)
                   for i in range(r)}
        fund = {labels[i]: tuple(1 if t == i else 0 for t in range(r)) + (0,)
                for i in range(r)}
        return RootDatum(name or f"gcm~{matrix}", labels, cartan, r + 1, roots,
                         coroots, fund, "affine",
                         marks={labels[i]: marks[i] for i in range(r)})

    _NAMED = {
        "A1": [[2]],
        "A2": [[2, -1], [-1, 2]],
        "A3": [[2, -1, 0], [-1, 2, -1], [0, -1, 2]],
        "B2": [[2, -1], [-2, 2]],
        "C2": [[2, -2], [-1, 2]],
        "G2": [[2, -1], [-3, 2]],
    }

    @staticmethod
    def of_type(typ: str) -> "RootDatum":
        """Datum by name: 'A2', 'B2', 'G2', ... or 'A2~' for affine SL_3."""
        typ = typ.strip()
        if typ in RootDatum._type_cache:
            return RootDatum._type_cache[typ]
        datum = RootDatum._of_type_uncached(typ)
        RootDatum._type_cache[typ] = datum
        return datum

    @staticmethod
    def _of_type_uncached(typ: str) -> "RootDatum":
        if typ.endswith("~"):
            base = typ[:-1]
            if base.startswith("A") and base[1:].isdigit():
                return RootDatum.affine_sl(int(base[1:]) + 1)
            raise ValueError(f"unsupported affine type {typ!r}")
        if typ in RootDatum._NAMED:
            return RootDatum.from_cartan(RootDatum._NAMED[typ], name=typ)
        if typ.startswith("A") and typ[1:].isdigit():
            n = int(typ[1:])
            m = [[2 if i == j else (-1 if abs(i - j) == 1 else 0)
                  for j in range(n)] for i in range(n)]
            return RootDatum.from_cartan(m, name=typ)
        raise ValueError(f"unknown Cartan type {typ!r}")

    # -- invariants ----------------------------------------------------------

    def _check_gcm(self):
        for i in self.nodes:
            if self.cartan[i][i] != 2:
                raise ValueError("GCM diagonal must be 2")
            for j in self.nodes:
                if i != j and self.cartan[i][j] > 0:
                    raise ValueError("off-diagonal GCM entries must be <= 0")
                if (self.cartan[i][j] == 0) != (self.cartan[j][i] == 0):
                    raise ValueError("GCM zero pattern must be symmetric")
        for i in self.nodes:
            for j in self.nodes:
                got = self._dot(self._coroot_rows[i], self._simple_roots[j])
                if got != self.cartan[i][j]:
                    raise ValueError("stored pairing does not match GCM")
                want = 1 if i == j else 0
                if self._dot(self._coroot_rows[i], self._fundamental[j]) != want:
                    raise ValueError("fundamental weights not dual to coroots")
        if self.flavor == "affine":
            for i in self.nodes:
                if sum(self.cartan[i][j] * self.marks[j] for j in self.nodes) != 0:
                    raise ValueError("marks do not annihilate the affine GCM")

    @staticmethod
    def _dot(row, vec):
        return sum(a * b for a, b in zip(row, vec))

    # -- weights -------------------------------------------------------------

    def canon(self, coords):
        coords = tuple(coords)
        if len(coords) != self.rank:
            raise DatumMismatchError(
                f"coords of length {len(coords)} in rank-{self.rank} datum")
        if self.quotient_vector is None:
            return coords
        # subtract (last finite coordinate) * quotient vector
        t = coords[self._qlast]
        if t == 0:
            return coords
        return tuple(c - t * q for c, q in zip(coords, self.quotient_vector))

    def weight(self, coords) -> "Weight":
        return Weight(self, self.canon(coords))

    def zero(self) -> "Weight":
        return Weight(self, (0,) * self.rank)

    def simple_root(self, i) -> "Weight":
        return self.weight(self._simple_roots[i])

    def fundamental_weight(self, i) -> "Weight":
        return self.weight(self._fundamental[i])

    @property
    def rho(self) -> "Weight":
        v = [0] * self.rank
        for i in self.nodes:
            v = [a + b for a, b in zip(v, self._fundamental[i])]
        return self.weight(v)

    def null_root(self) -> "Weight":
        if self.flavor != "affine":
            raise ValueError("delta only exists in affine flavor")
        v = [0] * self.rank
        for i in self.nodes:
            v = [a + self.marks[i] * b for a, b in zip(v, self._simple_roots[i])]
        return self.weight(v)

    def pairing(self, i, lam: "Weight") -> int:
        """<alpha_i^vee, lam>."""
        self._own(lam)
        return self._dot(self._coroot_rows[i], lam.coords)

    def reflect(self, i, lam: "Weight") -> "Weight":
        """r_i(lam) = lam - <alpha_i^vee, lam> alpha_i."""
        self._own(lam)
        m = self._dot(self._coroot_rows[i], lam.coords)
        if m == 0:
            return lam
        a = self._simple_roots[i]
        return self.weight(tuple(c - m * ac for c, ac in zip(lam.coords, a)))

    def _own(self, lam):
        if lam.datum is not self:
            raise DatumMismatchError(
                f"weight of {lam.datum.name} used with {self.name}")

    # -- level-zero projection (affine flavor) -------------------------------

    def project(self, lam: "Weight") -> "Weight":
        """Drop the delta and Lambda_0 coordinates: P_af -> P."""
        if self.flavor != "affine" or self.finite is None:
            raise ValueError("projection needs an affine sl datum")
        self._own(lam)
        return self.finite.weight(lam.coords[:-2])

    def projected_root(self, i) -> "Weight":
        """Image of alpha_i in finite P (alpha_0 -> -theta)."""
        return self.project(self.simple_root(i))

    def projected_pairing(self, i, lam: "Weight") -> int:
        """<alpha_i^vee, lam> for a level-zero weight lam over the finite datum."""
        if self.flavor != "affine":
            raise ValueError("level-zero pairing needs an affine datum")
        if lam.datum is not self.finite:
            raise DatumMismatchError("level-zero pairing expects a finite weight")
        row = self._coroot_rows[i]
        return self._dot(row[:-2], lam.coords)

    def levelzero_reflect(self, i, lam: "Weight") -> "Weight":
        m = self.projected_pairing(i, lam)
        if m == 0:
            return lam
        a = self.projected_root(i)
        return self.finite.weight(
            tuple(c - m * ac for c, ac in zip(lam.coords, a.coords)))

    # -- roots in the simple-root basis --------------------------------------

    def root_coords(self, lam: "Weight"):
        """Coordinates of lam in the alpha basis, or None if lam not in QQ."""
        self._own(lam)
        if self._root_solver is None:
            self._root_solver = _RootSolver(self)
        return self._root_solver.solve(lam.coords)

    def is_positive_root(self, lam: "Weight") -> bool:
        c = self.root_coords(lam)
        if c is None or all(x == 0 for x in c):
            return False
        return all(x >= 0 for x in c)


class _RootSolver:
    """Exact solve of lam = sum c_i alpha_i, allowing the stored quotient."""

    def __init__(self, datum: RootDatum):
        self.datum = datum
        cols = [list(datum._simple_roots[i]) for i in datum.nodes]
        if datum.quotient_vector is not None:
            cols.append(list(datum.quotient_vector))
        self.cols = cols

    def solve(self, coords):
        rows = len(coords)
        ncols = len(self.cols)
        aug = [[Fraction(self.cols[c][r]) for c in range(ncols)] + [Fraction(coords[r])]
               for r in range(rows)]
        piv = []
        r = 0
        for c in range(ncols):
            p = next((k for k in range(r, rows) if aug[k][c] != 0), None)
            if p is None:
                continue
            aug[r], aug[p] = aug[p], aug[r]
            inv = aug[r][c]
            aug[r] = [x / inv for x in aug[r]]
            for k in range(rows):
                if k != r and aug[k][c] != 0:
                    f = aug[k][c]
                    aug[k] = [x - f * y for x, y in zip(aug[k], aug[r])]
            piv.append(c)
            r += 1
            if r == rows:
                break
        for k in range(r, rows):
            if aug[k][-1] != 0:
                return None
        sol = [Fraction(0)] * ncols
        for ri, c in enumerate(piv):
            sol[c] = aug[ri][-1]
        out = sol[:len(self.datum.nodes)]
        if any(x.denominator != 1 for x in out):
            return None
        return tuple(int(x) for x in out)


class Weight:
    """An element of the weight lattice of one RootDatum."""

    __slots__ = ("datum", "coords", "_hash")

    def __init__(self, datum: RootDatum, coords):
        self.datum = datum
        self.coords = tuple(coords)
        self._hash = hash((id(datum), self.coords))

    def __eq__(self, other):
        return (isinstance(other, Weight) and self.datum is other.datum
                and self.coords == other.coords)

    def __hash__(self):
        return self._hash

    def _compat(self, other):
        if not isinstance(other, Weight) or other.datum is not self.datum:
            raise DatumMismatchError("weights from different data")

    def __add__(self, other):
        self._compat(other)
        return self.datum.weight(tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other):
        self._compat(other)
        return self.datum.weight(tuple(a - b for a, b in zip(self.coords, other.coords)))

    def __neg__(self):
        return self.datum.weight(tuple(-a for a in self.coords))

    def scaled(self, k: int) -> "Weight":
        return self.datum.weight(tuple(k * a for a in self.coords))

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coords)

    def __repr__(self):
        return f"Weight{self.coords}"


class LaurentPoly:
    """Finitely supported integer map on a weight lattice: sum c_lam e^lam."""

    __slots__ = ("datum", "terms")

    def __init__(self, datum: RootDatum, terms: Mapping[Weight, int] | None = None):
        self.datum = datum
        self.terms = {}
        if terms:
            for w, c in terms.items():
                if c:
                    if w.datum is not datum:
                        raise DatumMismatchError("term over a different lattice")
                    self.terms[w] = c

    # -- constructors --------------------------------------------------------

    @staticmethod
    def zero(datum) -> "LaurentPoly":
        return LaurentPoly(datum)

    @staticmethod
    def one(datum) -> "LaurentPoly":
        return LaurentPoly(datum, {datum.zero(): 1})

    @staticmethod
    def monomial(lam: Weight, coeff: int = 1) -> "LaurentPoly":
        return LaurentPoly(lam.datum, {lam: coeff})

    @staticmethod
    def const(datum, c: int) -> "LaurentPoly":
        return LaurentPoly(datum, {datum.zero(): c})

    # -- ring ops -------------------------------------------------------------

    def _compat(self, other):
        if other.datum is not self.datum:
            raise DatumMismatchError("polynomials over different lattices")

    def __add__(self, other):
        self._compat(other)
        out = dict(self.terms)
        for w, c in other.terms.items():
            s = out.get(w, 0) + c
            if s:
                out[w] = s
            else:
                out.pop(w, None)
        return LaurentPoly(self.datum, out)

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return LaurentPoly(self.datum, {w: -c for w, c in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, int):
            return self.scaled(other)
        self._compat(other)
        out = {}
        for w1, c1 in self.terms.items():
            for w2, c2 in other.terms.items():
                w = w1 + w2
                s = out.get(w, 0) + c1 * c2
                if s:
                    out[w] = s
                else:
                    del out[w]
        return LaurentPoly(self.datum, out)

    __rmul__ = __mul__

    def scaled(self, k: int) -> "LaurentPoly":
        if k == 0:
            return LaurentPoly.zero(self.datum)
        return LaurentPoly(self.datum, {w: k * c for w, c in self.terms.items()})

    def shifted(self, lam: Weight) -> "LaurentPoly":
        """Multiply by e^lam."""
        return LaurentPoly(self.datum, {w + lam: c for w, c in self.terms.items()})

    def __eq__(self, other):
        return (isinstance(other, LaurentPoly) and self.datum is other.datum
                and self.terms == other.terms)

    def __hash__(self):
        return hash((id(self.datum), frozenset(self.terms.items())))

    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return all(w.is_zero() for w in self.terms)

    def constant_value(self) -> int:
        if not self.terms:
            return 0
        [(w, c)] = self.terms.items()
        if not w.is_zero():
            raise ValueError("not a constant")
        return c

    def sorted_terms(self) -> list[tuple[Weight, int]]:
        return sorted(self.terms.items(), key=lambda t: t[0].coords)

    def __repr__(self):
        if not self.terms:
            return "LaurentPoly(0)"
        bits = [f"{c}*e^{w.coords}" for w, c in self.sorted_terms()]
        return "LaurentPoly(" + " + ".join(bits) + ")"

    def to_json(self) -> list[dict]:
        return [{"exponent": list(w.coords), "coeff": c}
                for w, c in self.sorted_terms()]

    @staticmethod
    def from_json(datum, data) -> "LaurentPoly":
        return LaurentPoly(datum, {datum.weight(rec["exponent"]): rec["coeff"]
                                   for rec in data})


# -- the operators of the coefficient ring ------------------------------------


def phi0(p: LaurentPoly) -> int:
    """Evaluation R(T) -> Z, e^lam -> 1 (sum of coefficients)."""
    return sum(p.terms.values())


def eta(p: LaurentPoly) -> LaurentPoly:
    """The ring involution e^lam -> e^{-lam}."""
    return LaurentPoly(p.datum, {-w: c for w, c in p.terms.items()})


def demazure(datum: RootDatum, i, p: LaurentPoly) -> LaurentPoly:
    """Action of T_i on Z[P], extended linearly from

        T_i . e^lam = e^{r_i lam} (1 + e^{a_i} + ... + e^{(m-1) a_i})   m > 0
                    = 0                                                 m = 0
                    = -e^lam (1 + e^{a_i} + ... + e^{(-m-1) a_i})       m < 0

    with m = <alpha_i^vee, lam>.  When ``datum`` is affine and ``p`` lives
    over the companion finite lattice, the level-zero action is used
    (alpha_0 -> -theta).
    """
    if p.datum is datum:
        pair = lambda lam: datum.pairing(i, lam)
        alpha = datum.simple_root(i)
    elif datum.flavor == "affine" and p.datum is datum.finite:
        pair = lambda lam: datum.projected_pairing(i, lam)
        alpha = datum.projected_root(i)
    else:
        raise DatumMismatchError("polynomial lattice does not match datum")
    out = {}

    def add(w, c):
        s = out.get(w, 0) + c
        if s:
            out[w] = s
        else:
            out.pop(w, None)

    for lam, c in p.terms.items():
        m = pair(lam)
        if m == 0:
            continue
        if m > 0:
            w = lam - alpha.scaled(m)  # e^{r_i lam}
            for k in range(m):
                add(w + alpha.scaled(k), c)
        else:
            for k in range(-m):
                add(lam + alpha.scaled(k), -c)
    return LaurentPoly(p.datum, out)


def weyl_reflect_poly(datum: RootDatum, i, p: LaurentPoly) -> LaurentPoly:
    """Action of r_i on Z[P] (level-zero when p is over the finite lattice)."""
    if p.datum is datum:
        refl = lambda lam: datum.reflect(i, lam)
    elif datum.flavor == "affine" and p.datum is datum.finite:
        refl = lambda lam: datum.levelzero_reflect(i, lam)
    else:
        raise DatumMismatchError("polynomial lattice does not match datum")
    out = {}
    for lam, c in p.terms.items():
        w = refl(lam)
        out[w] = out.get(w, 0) + c
    return LaurentPoly(p.datum, out)


def level_zero_project(p: LaurentPoly, affine_datum: RootDatum) -> LaurentPoly:
    """Push a polynomial over P_af down to finite P (delta, Lambda_0 -> 0)."""
    out = {}
    for lam, c in p.terms.items():
        w = affine_datum.project(lam)
        s = out.get(w, 0) + c
        if s:
            out[w] = s
        else:
            del out[w]
    return LaurentPoly(affine_datum.finite, out)


# -- exact divisibility by (1 - e^alpha)^d ------------------------------------


def _alpha_lines(p: LaurentPoly, alpha: Weight) -> dict[Weight, dict[int, int]]:
    """Split p into cosets lam_0 + Z*alpha; returns {line key: {t: coeff}}.

    The key of a term lam is lam - t*alpha with t chosen so the key's
    coordinate at the first nonzero position of alpha is the canonical
    residue; weights share a key iff they differ by a multiple of alpha.
    """
    nz = next((k for k, c in enumerate(alpha.coords) if c), None)
    if nz is None:
        raise ValueError("cannot slice along the zero weight")
    a = alpha.coords[nz]
    lines: dict[Weight, dict[int, int]] = {}
    for lam, c in p.terms.items():
        t = lam.coords[nz] // a
        key = lam - alpha.scaled(t)
        lines.setdefault(key, {})[t] = c
    return lines


def _divide_line_once(coeffs: dict[int, int]) -> dict[int, int] | None:
    """Divide sum c_t z^t exactly by (1 - z); None if not divisible.

    c_t = b_t - b_{t-1} forces b_t = sum_{s <= t} c_s, exact iff the total
    coefficient sum vanishes.
    """
    if not coeffs:
        return {}
    lo, hi = min(coeffs), max(coeffs)
    out = {}
    acc = 0
    for t in range(lo, hi):
        acc += coeffs.get(t, 0)
        if acc:
            out[t] = acc
    acc += coeffs.get(hi, 0)
    if acc != 0:
        return None
    return out


def divisible_by_one_minus_e(p: LaurentPoly, alpha: Weight, d: int = 1) -> bool:
    """Exact membership test p in (1 - e^alpha)^d Z[P]."""
    if d < 1:
        raise ValueError("d must be >= 1")
    if p.is_zero():
        return True
    for coeffs in _alpha_lines(p, alpha).values():
        for _ in range(d):
            coeffs = _divide_line_once(coeffs)
            if coeffs is None:
                return False
    return True


def exact_divide_one_minus_e(p: LaurentPoly, alpha: Weight) -> LaurentPoly:
    """Return q with p = (1 - e^alpha) q, or raise ValueError."""
    if p.is_zero():
        return LaurentPoly.zero(p.datum)
    out = {}
    for key, coeffs in _alpha_lines(p, alpha).items():
        q = _divide_line_once(coeffs)
        if q is None:
            raise ValueError("not divisible by 1 - e^alpha")
        for t, c in q.items():
            out[key + alpha.scaled(t)] = c
    return LaurentPoly(p.datum, out)
