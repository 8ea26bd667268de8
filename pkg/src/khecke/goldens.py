"""Regeneration of the shipped golden tables and exact diffing against them.

The JSON files under ``tables/`` freeze the reference values every release
must reproduce (element-level term sets for the 0-Hecke tables; partitions
label everything else).  ``diff_table`` recomputes a table from scratch and
reports every discrepancy; an empty report is the acceptance condition.
"""

from __future__ import annotations

import json
from importlib import resources

from . import weyl
from .grothendieck import GrothendieckEngine
from .peterson import fomin_stanley_elt

TABLE_KINDS = ("bijection", "k", "g", "coproduct", "G")

_FILES = {
    "bijection": "grass_kbounded.json",
    "k": "fs_k.json",
    "g": "g.json",
    "coproduct": "g_coproduct.json",
    "G": "G_F.json",
}


def load_golden(kind: str) -> dict:
    path = resources.files("khecke.tables").joinpath(_FILES[kind])
    return json.loads(path.read_text("utf-8"))


def _parse_partition(label: str) -> tuple:
    return tuple(int(ch) for ch in label) if label else ()


def _partition_label(lam) -> str:
    return "".join(str(p) for p in lam)


# -- regeneration -----------------------------------------------------------------


def generate_bijection(n: int, labels) -> dict:
    engine = GrothendieckEngine.get(n)
    out = {}
    for label in labels:
        w = engine.grassmannian(_parse_partition(label))
        out[label] = weyl.word_str(w.word)
    return out


def generate_k(n: int, labels) -> dict:
    """phi_0(k_w) rows keyed by the golden row label, terms by canonical word."""
    engine = GrothendieckEngine.get(n)
    out = {}
    for label in labels:
        w = weyl.from_word(engine.datum, weyl.parse_word(label))
        lam = engine.partition_of(w)
        elt = fomin_stanley_elt(engine, lam)
        out[label] = {weyl.word_str(x.word): c for x, c in elt.int_terms().items()}
    return out


def generate_g(n: int, labels) -> dict:
    engine = GrothendieckEngine.get(n)
    out = {}
    for label in labels:
        lam = _parse_partition(label)
        s = engine.g_in_s_basis(lam)
        k = engine.g_in_kschur_basis(lam)
        out[label] = {
            "s": {_partition_label(mu): c for mu, c in s.terms.items()},
            "kschur": {_partition_label(mu): c for mu, c in k.items()},
        }
    return out


def generate_coproduct(n: int, labels) -> dict:
    engine = GrothendieckEngine.get(n)
    out = {}
    for label in labels:
        delta = engine.g_coproduct(_parse_partition(label))
        out[label] = sorted(
            [[_partition_label(mu), _partition_label(nu), c]
             for (mu, nu), c in delta.terms.items()])
    return out


def generate_G(n: int, rows) -> dict:
    engine = GrothendieckEngine.get(n)
    out = {}
    for label, row in rows.items():
        lam = _parse_partition(label)
        v = engine.grassmannian(lam)
        F = engine.m_to_F(engine.G_of(v, row["max_degree"]))
        out[label] = {
            "F": {_partition_label(mu): c for mu, c in F.terms.items()},
            "max_degree": row["max_degree"],
        }
    return out


# -- diffing ----------------------------------------------------------------------


def _canon_word_map(datum, table: dict) -> dict:
    """Re-key a {word: coeff} map by canonical words (element-level)."""
    out = {}
    for word, c in table.items():
        w = weyl.from_word(datum, weyl.parse_word(word))
        if w in out:
            raise ValueError(f"duplicate element {word} in table row")
        out[w] = c
    return out


def diff_table(kind: str, n: int) -> list[str]:
    """Recompute table ``kind`` for rank n and diff; returns mismatch strings."""
    golden_all = load_golden(kind)
    key = str(n)
    if key not in golden_all:
        raise ValueError(f"no golden {kind} table for n={n}")
    golden = golden_all[key]
    problems = []
    if kind == "bijection":
        got = generate_bijection(n, golden.keys())
        datum = GrothendieckEngine.get(n).datum
        for label, word in golden.items():
            w_want = weyl.from_word(datum, weyl.parse_word(word))
            w_got = weyl.from_word(datum, weyl.parse_word(got[label]))
            if w_want != w_got:
                problems.append(f"bijection n={n} {label}: {got[label]} != {word}")
    elif kind == "k":
        got = generate_k(n, golden.keys())
        datum = GrothendieckEngine.get(n).datum
        for label, terms in golden.items():
            want = _canon_word_map(datum, terms)
            have = _canon_word_map(datum, got[label])
            if want != have:
                problems.append(f"k n={n} row {label}: "
                                f"{_fmt_wmap(have)} != {_fmt_wmap(want)}")
    elif kind == "g":
        got = generate_g(n, golden.keys())
        for label, cols in golden.items():
            for col in ("s", "kschur"):
                if got[label][col] != cols[col]:
                    problems.append(f"g n={n} row {label} [{col}]: "
                                    f"{got[label][col]} != {cols[col]}")
    elif kind == "coproduct":
        got = generate_coproduct(n, golden.keys())
        for label, rows in golden.items():
            want = sorted([list(r) for r in rows])
            if got[label] != want:
                problems.append(f"coproduct n={n} row {label}: "
                                f"{got[label]} != {want}")
    elif kind == "G":
        got = generate_G(n, golden)
        for label, row in golden.items():
            # compare degree-complete blocks: every degree the golden row
            # displays must match exactly, including absent (zero) entries
            degrees = sorted({len(mu) and sum(_parse_partition(mu))
                              for mu in row["F"]})
            for d in degrees:
                want = {mu: c for mu, c in row["F"].items()
                        if sum(_parse_partition(mu)) == d}
                have = {mu: c for mu, c in got[label]["F"].items()
                        if sum(_parse_partition(mu)) == d}
                if want != have:
                    problems.append(f"G n={n} row {label} degree {d}: "
                                    f"{have} != {want}")
    else:
        raise ValueError(f"unknown table kind {kind!r}")
    return problems


def _fmt_wmap(m: dict) -> str:
    return "{" + ", ".join(f"{weyl.word_str(w.word) or 'id'}:{c}"
                           for w, c in sorted(m.items(),
                                              key=lambda t: (t[0].length, t[0].word))) + "}"


def available_ranks(kind: str) -> list[int]:
    return sorted(int(k) for k in load_golden(kind))
