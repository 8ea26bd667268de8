"""The K-theoretic Fomin-Stanley layer: phi_0(k_w) elements, membership in
the centralizer-at-0 subalgebra, the K-homology Pieri rule, structure
constants, equivariant k_w for affine SL_2, and conjecture scans.

phi_0(k_w) is produced through the symmetric-function route (the Hopf lift
of g_w); an independent integer linear-system solver is kept as an oracle.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction

from .cartan import LaurentPoly, RootDatum
from . import weyl
from .grothendieck import GrothendieckEngine
from .hecke import HeckeElt, phi0_hecke, t_mul
from .localization import (PsiEngine, grassmannian_expansion, sl2_sigma,
                           wrongway)
from .symfunc import make_partition


# -- phi_0(k_w) --------------------------------------------------------------------


def fomin_stanley_elt(engine: GrothendieckEngine, lam) -> HeckeElt:
    """phi_0(k_w) for the Grassmannian w of partition lam: the Hopf lift of g_lam."""
    return engine.varphi(engine.g_of(lam))


def l0_membership(b: HeckeElt, n: int) -> bool:
    """phi_0(b (e^{+-omega_j} - 1)) = 0 for j = 1..n-1 certifies b in L_0."""
    fin = b.coeffs
    base = phi0_hecke(b)
    for j in range(1, n):
        for sign in (1, -1):
            om = fin.fundamental_weight(j)
            scal = HeckeElt.scalar(b.datum, fin,
                                   LaurentPoly.monomial(om.scaled(sign)))
            if phi0_hecke(t_mul(b, scal)) != base:
                return False
    return True


def expand_in_fs_basis(engine: GrothendieckEngine, b: HeckeElt) -> dict:
    """Coordinates of b in the phi_0(k_w) basis, by Grassmannian peeling."""
    if not b.is_integer():
        raise ValueError("expansion needs integer coefficients")
    residual = dict(b.int_terms())
    out = {}
    while True:
        grass = [w for w in residual if weyl.is_grassmannian(w)]
        if not grass:
            break
        w = min(grass, key=lambda w: (w.length, w.word))
        c = residual[w]
        lam = engine.partition_of(w)
        out[lam] = c
        for x, a in fomin_stanley_elt(engine, lam).int_terms().items():
            s = residual.get(x, 0) - c * a
            if s:
                residual[x] = s
            else:
                residual.pop(x, None)
    if residual:
        raise ValueError("element is not in the Fomin-Stanley subalgebra "
                         f"(residue on {sorted(w.word for w in residual)})")
    return out


def fomin_stanley_via_linear_system(engine: GrothendieckEngine, lam) -> HeckeElt:
    """Independent oracle: solve for the unique element T_w + sum c_v T_v
    (v non-Grassmannian, l(v) <= |lam|) satisfying the L_0 conditions."""
    n = engine.n
    datum, fin = engine.datum, engine.fin
    lam = make_partition(lam)
    w0 = engine.grassmannian(lam)
    unknowns = [v for v in weyl.all_elements(datum, sum(lam))
                if not weyl.is_grassmannian(v)]
    # phi_0((T_w0 + sum c_v T_v)(e^mu - 1)) = 0 for mu = +-omega_j
    rows = []
    rhs = []
    mus = [fin.fundamental_weight(j).scaled(s)
           for j in range(1, n) for s in (1, -1)]
    support = weyl.all_elements(datum, sum(lam) + 1)
    for mu in mus:
        scal = HeckeElt.scalar(datum, fin, LaurentPoly.monomial(mu))
        cols = {}
        for vi, v in enumerate([w0] + unknowns):
            prod = phi0_hecke(t_mul(HeckeElt.T(v, fin), scal))
            for x, c in prod.int_terms().items():
                cols.setdefault(x, {})[vi] = c
        for x in support:
            row = cols.get(x, {})
            base = row.get(0, 0) - (1 if x == w0 else 0)
            coeffs = [row.get(vi, 0) - (1 if unknowns[vi - 1] == x else 0)
                      for vi in range(1, len(unknowns) + 1)]
            if any(coeffs) or base:
                rows.append(coeffs)
                rhs.append(-base)
    sol = _solve_exact(rows, rhs)
    terms = {w0: 1}
    for v, c in zip(unknowns, sol):
        if c:
            terms[v] = c
    return HeckeElt.from_int_terms(datum, fin, terms)


def _solve_exact(rows, rhs):
    """Unique integer solution of an overdetermined consistent system."""
    m = [[Fraction(x) for x in row] + [Fraction(b)] for row, b in zip(rows, rhs)]
    ncols = len(rows[0]) if rows else 0
    piv = []
    r = 0
    for c in range(ncols):
        p = next((k for k in range(r, len(m)) if m[k][c] != 0), None)
        if p is None:
            continue
        m[r], m[p] = m[p], m[r]
        m[r] = [x / m[r][c] for x in m[r]]
        for k in range(len(m)):
            if k != r and m[k][c] != 0:
                f = m[k][c]
                m[k] = [x - f * y for x, y in zip(m[k], m[r])]
        piv.append(c)
        r += 1
    for k in range(r, len(m)):
        if m[k][-1] != 0:
            raise ValueError("inconsistent system")
    if len(piv) != ncols:
        raise ValueError("system is underdetermined")
    sol = [0] * ncols
    for ri, c in enumerate(piv):
        val = m[ri][-1]
        if val.denominator != 1:
            raise ValueError("solution is not integral")
        sol[c] = int(val)
    return sol


# -- Pieri rule and structure constants ------------------------------------------------


def pieri(engine: GrothendieckEngine, i: int, lam) -> dict:
    """phi_0(d^w_{sigma_i, v}) for v of partition lam: signed counts of
    cyclically decreasing x with T_x T_v = +-T_w."""
    if not 1 <= i <= engine.n - 1:
        raise ValueError("pieri needs 1 <= i <= n-1")
    v = engine.grassmannian(lam)
    counts: dict = {}
    for x in weyl.cyclically_decreasing(engine.datum, i):
        _, w = _fold_T(x, v)
        if weyl.is_grassmannian(w):
            counts[w] = counts.get(w, 0) + 1
    out = {}
    for w, c in counts.items():
        sign = -1 if (w.length - v.length - i) % 2 else 1
        out[engine.partition_of(w)] = sign * c
    return out


def _fold_T(x: weyl.WeylElt, v: weyl.WeylElt):
    """T_x T_v = sign * T_w."""
    sign, w = 1, v
    for j in reversed(x.word):
        rj = weyl.simple(x.datum, j)
        nxt = weyl.multiply(rj, w)
        if nxt.length > w.length:
            w = nxt
        else:
            sign = -sign
    return sign, w


def structure_d(engine: GrothendieckEngine, lam, mu) -> dict:
    """phi_0(d^w_{u v}) for u, v Grassmannian, by two routes that must agree:
    the product expansion and the k^x_u formula over T_x T_v = +-T_w."""
    lam, mu = make_partition(lam), make_partition(mu)
    fs_u = fomin_stanley_elt(engine, lam)
    fs_v = fomin_stanley_elt(engine, mu)
    via_product = expand_in_fs_basis(engine, t_mul(fs_u, fs_v))

    v = engine.grassmannian(mu)
    via_formula: dict = {}
    for x, kxu in fs_u.int_terms().items():
        _, w = _fold_T(x, v)
        if weyl.is_grassmannian(w):
            sign = -1 if (w.length - v.length - x.length) % 2 else 1
            key = engine.partition_of(w)
            s = via_formula.get(key, 0) + sign * kxu
            if s:
                via_formula[key] = s
            else:
                del via_formula[key]
    if via_formula != via_product:
        raise AssertionError(
            f"structure constant routes disagree for {lam} * {mu}: "
            f"{via_formula} vs {via_product}")
    return via_product


# -- equivariant k_w for affine SL_2 ------------------------------------------------------


class SupportTruncationError(RuntimeError):
    """The requested cutoff cannot certify that the T-support of k_w closed."""


def equivariant_k_sl2(lam_or_r, cutoff: int = 8) -> HeckeElt:
    """k_w over R(T) for w = sigma_r in affine SL_2.

    Coefficients k^x_w are read off the Grassmannian expansion of the
    wrong-way image of psi^x.  Raises SupportTruncationError unless the two
    top support layers below the cutoff are empty.
    """
    if isinstance(lam_or_r, (tuple, list)):
        if any(p != 1 for p in lam_or_r):
            raise ValueError("affine SL_2 partitions are columns 1^r")
        r = len(lam_or_r)
    else:
        r = int(lam_or_r)
    datum = RootDatum.affine_sl(2)
    engine = PsiEngine(datum, "level-zero")
    if cutoff < r + 2:
        raise SupportTruncationError(f"cutoff {cutoff} too small for sigma_{r}")
    w = sl2_sigma(datum, r)
    terms = {}
    for x in weyl.all_elements(datum, cutoff):
        pw = wrongway(lambda y, x=x: engine.psi_right(x, y), datum)
        coeffs = grassmannian_expansion(engine, pw, r)
        c = coeffs.get(w)
        if c is not None:
            terms[x] = c
    top = [x for x in terms if x.length >= cutoff - 1]
    if top:
        raise SupportTruncationError(
            f"support of k_sigma_{r} reaches length {max(x.length for x in top)}; "
            f"raise the cutoff above {cutoff}")
    elt = HeckeElt(datum, datum.finite, terms)
    _check_centralizer(elt)
    return elt


def _check_centralizer(elt: HeckeElt):
    fin = elt.coeffs
    om = LaurentPoly.monomial(fin.fundamental_weight(1))
    scal = HeckeElt.scalar(elt.datum, fin, om)
    if t_mul(elt, scal) != t_mul(scal, elt):
        raise AssertionError("equivariant element does not centralize R(T)")


# -- conjecture scans ---------------------------------------------------------------------


@dataclass
class ConjectureReport:
    """Outcome of a positivity/alternation scan."""
    conjectures: list
    n: int
    max_length: int
    cross_n: int | None = None
    max_degree: int | None = None
    checked: int = 0
    violations: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.violations

    def record(self, conjecture, label, detail):
        self.violations.append(
            {"conjecture": conjecture, "label": label, "detail": detail})

    def to_json(self) -> str:
        return json.dumps({
            "conjectures": self.conjectures, "n": self.n,
            "max_length": self.max_length, "cross_n": self.cross_n,
            "max_degree": self.max_degree, "checked": self.checked,
            "passed": self.passed, "violations": self.violations,
        }, indent=2, sort_keys=True)

    def summary(self) -> str:
        status = "PASS" if self.passed else f"FAIL ({len(self.violations)} violations)"
        lines = [f"conjecture scan n={self.n} max_length={self.max_length}"
                 + (f" cross_n={self.cross_n} max_degree={self.max_degree}"
                    if self.cross_n else "")
                 + f": {status} [{self.checked} values checked]"]
        for v in self.violations:
            lines.append(f"  {v['conjecture']} at {v['label']}: {v['detail']}")
        return "\n".join(lines)


def _alternating(sign_exponent: int, value: int) -> bool:
    return value * (-1 if sign_exponent % 2 else 1) >= 0


def conjecture_scan(n: int, max_len: int, include_products: bool = True) -> ConjectureReport:
    """Scan CJ:sign, C:g(1)(2), C:G(1)(2) (and products = C:G(3)) up to max_len."""
    engine = GrothendieckEngine.get(n)
    report = ConjectureReport(
        conjectures=["CJ:sign-k", "CJ:sign-d/C:G3", "C:g1", "C:g2", "C:G1", "C:G2"],
        n=n, max_length=max_len)
    labels = engine.bounded(max_len)

    for lam in labels:
        ell = sum(lam)
        # coefficients of phi_0(k_w) alternate: (-1)^{l(x)-l(u)} phi_0(k^x_u) >= 0
        for x, c in fomin_stanley_elt(engine, lam).int_terms().items():
            report.checked += 1
            if not _alternating(x.length - ell, c):
                report.record("CJ:sign-k", f"lam={lam}, x={weyl.word_str(x.word)}", c)
        # C:g(1): g_lam is a nonnegative sum of k-Schur functions
        for mu, c in engine.g_in_kschur_basis(lam).items():
            report.checked += 1
            if c < 0:
                report.record("C:g1", f"lam={lam}, kschur={mu}", c)
        # C:g(2): coproduct constants alternate and respect the degree bound
        for (mu, nu), c in engine.g_coproduct(lam).terms.items():
            report.checked += 1
            if sum(mu) + sum(nu) > ell:
                report.record("C:g2", f"lam={lam}, ({mu},{nu})", f"degree bound, c={c}")
            elif not _alternating(ell - sum(mu) - sum(nu), c):
                report.record("C:g2", f"lam={lam}, ({mu},{nu})", c)
        # C:G(2): G_lam is alternating in the affine Schur functions
        G = engine.G_of(engine.grassmannian(lam), max_len)
        for mu, c in engine.m_to_F(G).terms.items():
            report.checked += 1
            if not _alternating(sum(mu) - ell, c):
                report.record("C:G2", f"lam={lam}, F={mu}", c)

    # C:G(1): every G_w is alternating over the Grassmannian G's
    for w in weyl.all_elements(engine.datum, max_len):
        for lam, c in engine.G_in_G_basis(w, max_len).items():
            report.checked += 1
            if not _alternating(sum(lam) - w.length, c):
                report.record("C:G1", f"w={weyl.word_str(w.word)}, lam={lam}", c)

    if include_products:
        # CJ first statement = C:G(3): signs of phi_0(d^w_{uv})
        for i, lam in enumerate(labels):
            for mu in labels[i:]:
                if sum(lam) + sum(mu) > max_len:
                    continue
                for nu, c in structure_d(engine, lam, mu).items():
                    report.checked += 1
                    if not _alternating(sum(nu) - sum(lam) - sum(mu), c):
                        report.record("CJ:sign-d/C:G3",
                                      f"u={lam}, v={mu}, w={nu}", c)
    return report


def cross_k_scan(n: int, max_degree: int) -> ConjectureReport:
    """C:g(3) / C:G(4): the pairing matrix <g^(k)_lam, G^(k+1)_mu> alternates."""
    small = GrothendieckEngine.get(n)
    big = GrothendieckEngine.get(n + 1)
    report = ConjectureReport(conjectures=["C:g3/C:G4"], n=n,
                              max_length=max_degree, cross_n=n + 1,
                              max_degree=max_degree)
    for lam in small.bounded(max_degree):
        g_small = small.g_of(lam)  # parts < n <= n+1, valid in Lambda_(n+1)
        for mu, c in big.expand_in_g(g_small).items():
            report.checked += 1
            if not _alternating(sum(lam) - sum(mu), c):
                report.record("C:g3/C:G4", f"lam={lam}, mu={mu}", c)
    return report
