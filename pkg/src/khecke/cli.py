"""Command-line front end.

Subcommands: psi, expand-group, kappa, g, G, kschur, pieri, coproduct,
structure, k-sl2, tables, check-conjectures, gkm-check.  Words are digit
strings read left to right ("210" = r2 r1 r0); partitions are comma lists
("2,1") or digit strings ("21").  Exit codes: 0 success, 1 domain error,
2 verification failure (conjecture violation or golden-table mismatch).
"""

from __future__ import annotations

import argparse
import json
import sys

from . import goldens, weyl
from .cache import ResultCache
from .cartan import RootDatum
from .grothendieck import GrothendieckEngine
from .hecke import group_elt_to_T
from .localization import (PsiEngine, gkm_check_big, small_gkm_check,
                           small_gkm_grassmannian_check)
from .peterson import (conjecture_scan, cross_k_scan, equivariant_k_sl2,
                       pieri, structure_d)
from .render import (render_hecke, render_int_map, render_poly,
                     render_symfunc, render_tensor)
from .symfunc import SymFunc, convert

USAGE_ERROR, VERIFY_ERROR = 1, 2


class DomainError(ValueError):
    pass


def parse_partition(text: str) -> tuple:
    text = text.strip()
    if not text or text in ("0", "-"):
        return ()
    try:
        if "," in text:
            parts = tuple(int(t) for t in text.split(","))
        else:
            parts = tuple(int(ch) for ch in text)
    except ValueError:
        raise DomainError(f"malformed partition {text!r}")
    if any(p <= 0 for p in parts) or any(parts[i] < parts[i + 1]
                                         for i in range(len(parts) - 1)):
        raise DomainError(f"{text!r} is not a partition")
    return parts


def parse_word_arg(text: str) -> tuple:
    try:
        return weyl.parse_word(text)
    except ValueError:
        raise DomainError(f"malformed word {text!r}")


def partition_label(lam) -> str:
    return ",".join(map(str, lam)) if lam else "-"


def _validate_bounds(args):
    if getattr(args, "n", None) is not None and args.n < 2:
        raise DomainError("--n must be >= 2")
    for attr in ("max_len", "max_degree", "max_d", "cutoff"):
        bound = getattr(args, attr, None)
        if bound is not None and bound < 0:
            raise DomainError(f"--{attr.replace('_', '-')} must be >= 0")


def _engine(args) -> GrothendieckEngine:
    return GrothendieckEngine.get(args.n)


def _emit(args, text_value, json_value, latex_value=None):
    if args.format == "json":
        print(json.dumps(json_value, sort_keys=True))
    elif args.format == "latex-table" and latex_value is not None:
        print(latex_value)
    else:
        print(text_value)


# -- subcommand bodies --------------------------------------------------------------


def _datum_for(args) -> RootDatum:
    if args.type:
        return RootDatum.of_type(args.type)
    if args.n is None:
        raise DomainError("need --type or --n")
    return RootDatum.affine_sl(args.n)


def cmd_psi(args):
    datum = _datum_for(args)
    flavor = args.flavor
    if datum.flavor == "finite":
        flavor = "big"
    engine = PsiEngine(datum, flavor)
    v = weyl.from_word(datum, parse_word_arg(args.v))
    w = weyl.from_word(datum, parse_word_arg(args.w))
    fn = {"right": engine.psi_right, "left": engine.psi_left,
          "gw": engine.psi_graham_willems}[args.algorithm]
    val = fn(v, w)
    _emit(args, render_poly(val, datum), val.to_json())


def cmd_expand_group(args):
    datum = _datum_for(args)
    w = weyl.from_word(datum, parse_word_arg(args.word))
    elt = group_elt_to_T(w)
    _emit(args, render_hecke(elt, elt.coeffs), elt.to_json())


def cmd_kappa(args):
    engine = _engine(args)
    if not 0 <= args.i <= engine.n - 1:
        raise DomainError("kappa index must satisfy 0 <= i <= n-1")
    elt = engine.kappa(args.i)
    _emit(args, render_hecke(elt), elt.to_json())


def _cached_symfunc(args, kind, lam, degree, compute):
    cache = ResultCache(args.cache_dir)
    label = "".join(map(str, lam)) or "empty"
    payload = cache.load(args.n, kind, label, degree)
    if payload is not None:
        return SymFunc.from_json(payload)
    f = compute()
    cache.store(args.n, kind, label, degree, f.to_json())
    return f


def cmd_g(args):
    engine = _engine(args)
    lam = parse_partition(args.partition)
    if lam and lam[0] >= args.n:
        raise DomainError(f"partition must be {args.n - 1}-bounded")
    if args.basis == "kschur":
        out = SymFunc("kschur", engine.g_in_kschur_basis(lam), args.n)
    elif args.basis in ("m", "h", "s"):
        g = _cached_symfunc(args, "g", lam, sum(lam), lambda: engine.g_of(lam))
        out = convert(g, args.basis)
    else:
        raise DomainError(f"unsupported basis {args.basis!r} for g")
    _emit(args, render_symfunc(out), out.to_json(), render_symfunc(out, latex=True))


def cmd_kschur(args):
    engine = _engine(args)
    lam = parse_partition(args.partition)
    if lam and lam[0] >= args.n:
        raise DomainError(f"partition must be {args.n - 1}-bounded")
    f = engine.kschur_of(lam)
    basis = args.basis or "s"
    if basis not in ("m", "h", "s"):
        raise DomainError("kschur renders in m, h or s")
    out = convert(f, basis)
    _emit(args, render_symfunc(out), out.to_json(), render_symfunc(out, latex=True))


def cmd_G(args):
    engine = _engine(args)
    lam = parse_partition(args.partition)
    if lam and lam[0] >= args.n:
        raise DomainError(f"partition must be {args.n - 1}-bounded")
    degree = args.max_degree
    v = engine.grassmannian(lam)
    if degree < v.length:
        raise DomainError("--max-degree is below the partition size")
    G = _cached_symfunc(args, "G", lam, degree, lambda: engine.G_of(v, degree))
    basis = args.basis or "F"
    if basis == "F":
        out = engine.m_to_F(G)
    elif basis == "m":
        out = G
    else:
        raise DomainError("G renders in the F or m basis")
    _emit(args, render_symfunc(out), out.to_json(), render_symfunc(out, latex=True))


def cmd_pieri(args):
    engine = _engine(args)
    lam = parse_partition(args.partition)
    if not 1 <= args.i <= args.n - 1:
        raise DomainError("pieri needs 1 <= i <= n-1")
    out = pieri(engine, args.i, lam)
    pairs = sorted(out.items(), key=lambda t: (sum(t[0]), t[0]))
    _emit(args, render_int_map(pairs, partition_label),
          [{"partition": list(k), "coeff": c} for k, c in pairs])


def cmd_coproduct(args):
    engine = _engine(args)
    lam = parse_partition(args.partition)
    delta = engine.g_coproduct(lam)
    _emit(args, render_tensor(delta),
          [{"left": list(mu), "right": list(nu), "coeff": c}
           for (mu, nu), c in delta.sorted_terms()],
          render_tensor(delta, latex=True))


def cmd_structure(args):
    engine = _engine(args)
    u = parse_partition(args.u)
    v = parse_partition(args.v)
    out = structure_d(engine, u, v)
    pairs = sorted(out.items(), key=lambda t: (sum(t[0]), t[0]))
    _emit(args, render_int_map(pairs, partition_label),
          [{"partition": list(k), "coeff": c} for k, c in pairs])


def cmd_k_sl2(args):
    lam = parse_partition(args.partition) if args.partition else (1,) * args.r
    if any(p != 1 for p in lam):
        raise DomainError("affine SL_2 partitions are columns 1^r")
    elt = equivariant_k_sl2(len(lam), cutoff=args.cutoff)
    _emit(args, render_hecke(elt, elt.coeffs), elt.to_json())


def cmd_tables(args):
    kinds = goldens.TABLE_KINDS if args.which == "all" else (args.which,)
    failures = 0
    for kind in kinds:
        ranks = [args.n] if args.n else goldens.available_ranks(kind)
        for n in ranks:
            if args.diff:
                problems = goldens.diff_table(kind, n)
                if problems:
                    failures += len(problems)
                    print(f"tables {kind} n={n}: MISMATCH")
                    for p in problems:
                        print("  " + p)
                else:
                    print(f"tables {kind} n={n}: OK")
            else:
                _print_table(args, kind, n)
    if failures:
        raise VerificationFailure(f"{failures} golden-table mismatches")


def _print_table(args, kind, n):
    golden = goldens.load_golden(kind)[str(n)]
    gen = {"bijection": goldens.generate_bijection,
           "k": goldens.generate_k,
           "g": goldens.generate_g,
           "coproduct": goldens.generate_coproduct}.get(kind)
    table = goldens.generate_G(n, golden) if kind == "G" else gen(n, golden.keys())
    if args.format == "json":
        print(json.dumps({kind: {str(n): table}}, sort_keys=True))
        return
    latex = args.format == "latex-table"
    if latex:
        print(f"% {kind} table, n={n}")
        print("\\begin{array}{|l|l|}\\hline")
    for label in sorted(table, key=lambda s: (len(s), s)):
        value = table[label]
        row = json.dumps(value, sort_keys=True)
        if latex:
            head = label or "\\emptyset"
            print(f"{head} & {row} \\\\")
        else:
            print(f"{kind} n={n} {label or '-'}: {row}")
    if latex:
        print("\\hline\\end{array}")


def cmd_check_conjectures(args):
    cache = ResultCache(args.cache_dir)
    label = f"maxlen{args.max_len}" + ("-cross" if args.cross else "")
    payload = cache.load(args.n, "conjectures", label, args.max_len)
    if payload is None:
        report = conjecture_scan(args.n, args.max_len)
        payload = json.loads(report.to_json())
        if args.cross:
            cross = cross_k_scan(args.n, min(args.max_len, args.max_degree or args.max_len))
            payload["cross"] = json.loads(cross.to_json())
        cache.store(args.n, "conjectures", label, args.max_len, payload)
    if args.format == "json":
        print(json.dumps(payload, sort_keys=True))
    else:
        print(_report_text(payload))
        if "cross" in payload:
            print(_report_text(payload["cross"]))
    bad = payload["violations"] or payload.get("cross", {}).get("violations")
    if bad:
        raise VerificationFailure("conjecture violations found")


def _report_text(payload) -> str:
    status = "PASS" if payload["passed"] else \
        f"FAIL ({len(payload['violations'])} violations)"
    head = (f"conjecture scan n={payload['n']} max_length={payload['max_length']}"
            + (f" cross_n={payload['cross_n']}" if payload.get("cross_n") else "")
            + f": {status} [{payload['checked']} values checked]")
    lines = [head]
    for v in payload["violations"]:
        lines.append(f"  {v['conjecture']} at {v['label']}: {v['detail']}")
    return "\n".join(lines)


def cmd_gkm_check(args):
    if args.mode == "big":
        datum = _datum_for(args)
        engine = PsiEngine(datum, "big")
        els = weyl.all_elements(datum, args.max_len)
        roots = sorted({a for v in els for a in weyl.inversions(v)},
                       key=lambda a: a.coords)
        pairs = [(a, w) for a in roots for w in els]
        ok = all(gkm_check_big(lambda x, v=v: engine.psi_right(v, x), datum, pairs)
                 for v in els)
        checked = len(els) ** 2 * len(roots)
    else:
        datum = RootDatum.affine_sl(args.n)
        engine = PsiEngine(datum, "level-zero")
        fin = datum.finite
        ok = True
        checked = 0
        els = weyl.all_elements(datum, args.max_len)
        grass = [v for v in els if weyl.is_grassmannian(v)]
        roots = [(tuple((1 if t == i else 0) - (1 if t == j else 0)
                        for t in range(args.n)), i, j)
                 for i in range(args.n) for j in range(args.n) if i != j]
        for v in grass:
            psi_of = lambda x, v=v: engine.psi_right(v, x)
            for avee, i, j in roots:
                alpha = fin.weight(avee)
                for d in range(1, args.max_d + 1):
                    for w in els:
                        checked += 1
                        if not small_gkm_grassmannian_check(psi_of, datum, avee,
                                                            alpha, d, w):
                            ok = False
                        if not small_gkm_check(psi_of, datum, avee, alpha, d, w):
                            ok = False
    _emit(args, f"gkm {args.mode}: {'PASS' if ok else 'FAIL'} [{checked} checks]",
          {"mode": args.mode, "passed": ok, "checked": checked})
    if not ok:
        raise VerificationFailure("GKM condition violated")


class VerificationFailure(RuntimeError):
    pass


# -- parser ------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="khecke",
        description="Exact K-theoretic Schubert calculus for the affine Grassmannian")
    sub = ap.add_subparsers(dest="command", required=True)

    def common(p, n_default=None):
        p.add_argument("--n", type=int, default=n_default,
                       help="rank parameter (affine SL_n)")
        p.add_argument("--format", choices=("text", "json", "latex-table"),
                       default="text")
        p.add_argument("--cache-dir", default=None,
                       help=f"cache directory (or ${'{'}KHECKE_CACHE{'}'})")

    p = sub.add_parser("psi", help="localization value psi^v(w)")
    common(p)
    p.add_argument("--type", help="Cartan type, e.g. A2 or A1~")
    p.add_argument("--v", required=True, help="word for v")
    p.add_argument("--w", required=True, help="word for w")
    p.add_argument("--algorithm", choices=("right", "left", "gw"), default="right")
    p.add_argument("--flavor", choices=("big", "level-zero"), default="level-zero")
    p.set_defaults(fn=cmd_psi)

    p = sub.add_parser("expand-group", help="expand a group element over T_v")
    common(p)
    p.add_argument("--type", help="Cartan type")
    p.add_argument("--word", required=True)
    p.set_defaults(fn=cmd_expand_group)

    p = sub.add_parser("kappa", help="kappa_i (cyclically decreasing sum)")
    common(p, n_default=3)
    p.add_argument("--i", type=int, required=True)
    p.set_defaults(fn=cmd_kappa)

    p = sub.add_parser("g", help="K-k-Schur function g_lambda")
    common(p, n_default=3)
    p.add_argument("--partition", required=True)
    p.add_argument("--basis", default="s", choices=("m", "h", "s", "kschur"))
    p.set_defaults(fn=cmd_g)

    p = sub.add_parser("G", help="affine stable Grothendieck polynomial")
    common(p, n_default=3)
    p.add_argument("--partition", required=True)
    p.add_argument("--max-degree", type=int, default=8)
    p.add_argument("--basis", default="F", choices=("F", "m"))
    p.set_defaults(fn=cmd_G)

    p = sub.add_parser("kschur", help="k-Schur function")
    common(p, n_default=3)
    p.add_argument("--partition", required=True)
    p.add_argument("--basis", default="s", choices=("m", "h", "s"))
    p.set_defaults(fn=cmd_kschur)

    p = sub.add_parser("pieri", help="K-homology Pieri rule kappa_i * g_v")
    common(p, n_default=3)
    p.add_argument("--i", type=int, required=True)
    p.add_argument("--partition", required=True, help="partition of v")
    p.set_defaults(fn=cmd_pieri)

    p = sub.add_parser("coproduct", help="coproduct of g_lambda over g (x) g")
    common(p, n_default=3)
    p.add_argument("--partition", required=True)
    p.set_defaults(fn=cmd_coproduct)

    p = sub.add_parser("structure", help="K-homology structure constants")
    common(p, n_default=3)
    p.add_argument("--u", required=True, help="partition of u")
    p.add_argument("--v", required=True, help="partition of v")
    p.set_defaults(fn=cmd_structure)

    p = sub.add_parser("k-sl2", help="equivariant k_w for affine SL_2")
    common(p, n_default=2)
    p.add_argument("--r", type=int, default=None, help="index of sigma_r")
    p.add_argument("--partition", default=None, help="column partition 1^r")
    p.add_argument("--cutoff", type=int, default=8)
    p.set_defaults(fn=cmd_k_sl2)

    p = sub.add_parser("tables", help="regenerate / diff the golden tables")
    common(p)
    p.add_argument("--which", default="all",
                   choices=("all",) + goldens.TABLE_KINDS)
    p.add_argument("--diff", action="store_true",
                   help="compare against the shipped golden files")
    p.set_defaults(fn=cmd_tables)

    p = sub.add_parser("check-conjectures", help="scan the positivity conjectures")
    common(p, n_default=3)
    p.add_argument("--max-len", type=int, default=6)
    p.add_argument("--max-degree", type=int, default=None,
                   help="degree bound for the cross-k scan")
    p.add_argument("--cross", action="store_true",
                   help="also scan the (n, n+1) cross expansions")
    p.set_defaults(fn=cmd_check_conjectures)

    p = sub.add_parser("gkm-check", help="verify GKM divisibility conditions")
    common(p, n_default=2)
    p.add_argument("--type", help="Cartan type for big-torus mode")
    p.add_argument("--mode", choices=("big", "small"), default="small")
    p.add_argument("--max-len", type=int, default=4)
    p.add_argument("--max-d", type=int, default=3)
    p.set_defaults(fn=cmd_gkm_check)

    return ap


def main(argv=None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return USAGE_ERROR if exc.code not in (0, None) else 0
    if args.command == "k-sl2" and args.r is None and args.partition is None:
        print("error: k-sl2 needs --r or --partition", file=sys.stderr)
        return USAGE_ERROR
    try:
        _validate_bounds(args)
        args.fn(args)
    except VerificationFailure as exc:
        print(f"verification failed: {exc}", file=sys.stderr)
        return VERIFY_ERROR
    except (DomainError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_ERROR
    return 0


if __name__ == "__main__":
    sys.exit(main())
