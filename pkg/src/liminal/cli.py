"""Command-line front end.

Exit codes: 0 success, 1 domain error (message carries the error class
name), 2 usage error or unreadable input.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Any

from . import report
from .core import WeightSystem, classify
from .diagonal import enumerate_diagonal_liminal, family_report
from .dualcx import (
    DualComplexData,
    check_zero_liminal_constraints,
    dual_complex_cohomology,
    e1_page,
    euler_characteristic,
)
from .errors import LiminalError
from .registry import ExampleRegistry
from .suite import DEFAULT_N_MAX, series_report

EXIT_OK, EXIT_DOMAIN, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


class _ArgError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _ArgError(f"{self.format_usage()}{self.prog}: error: {message}")


def _int_list(text: str) -> list[int]:
    try:
        return [int(t) for t in text.split(",")]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def _n_range(text: str) -> tuple[int, int]:
    lo, sep, hi = text.partition("..")
    try:
        return (int(lo), int(hi)) if sep else (int(lo), int(lo))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected N or A..B, got {text!r}")


def _add_output(p: argparse.ArgumentParser) -> None:
    p.add_argument("--json", nargs="?", const="-", metavar="DEST",
                   help="machine-readable output; DEST is a file or '-' for stdout")
    p.add_argument("--out", metavar="FILE", help="also write the output to FILE")


def _add_ws(p: argparse.ArgumentParser) -> None:
    p.add_argument("--weights", type=_int_list, metavar="A1,...,Ak")
    p.add_argument("--degree", type=int, metavar="D")
    p.add_argument("--ws", metavar="'A1,...,Ak;D'", help="weights and degree in one string")
    p.add_argument("--example", metavar="LABEL", help="registry entry")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="liminal", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    for name, help_ in [
        ("classify", "liminal defect, minimal exponent and Du Bois/rational levels"),
        ("spectrum", "Poincare polynomial, Milnor number, spectrum and s_p"),
        ("t1", "C*-weight decomposition of T^1"),
    ]:
        p = sub.add_parser(name, help=help_)
        _add_ws(p)
        _add_output(p)

    p = sub.add_parser("enumerate", help="diagonal families with sum 1/p_i = 1")
    p.add_argument("--dim", type=int, required=True)
    p.add_argument("--reports", action="store_true", help="include per-family invariants")
    _add_output(p)

    p = sub.add_parser("suite", help="degree n+2 hypersurface series table")
    p.add_argument("--n", type=_n_range, default=(3, 10), metavar="A..B")
    p.add_argument("--cap", type=int, default=DEFAULT_N_MAX)
    _add_output(p)

    p = sub.add_parser("dual-complex", help="E_1 page and dual-complex cohomology")
    p.add_argument("file", nargs="?", help="dual-complex JSON file")
    p.add_argument("--example", metavar="LABEL")
    p.add_argument("--m", type=int, help="assert h^i(E;O) = 0 for 0 < i < M")
    _add_output(p)

    p = sub.add_parser("registry", help="built-in examples")
    rsub = p.add_subparsers(dest="action", required=True, parser_class=_Parser)
    lp = rsub.add_parser("list")
    lp.add_argument("--verify", action="store_true")
    _add_output(lp)

    p = sub.add_parser("batch", help="full reports for a JSON array of weight systems")
    p.add_argument("file")
    _add_output(p)
    return parser


def _weight_system(args) -> WeightSystem:
    given = [args.ws is not None, args.example is not None, args.weights is not None]
    if sum(given) != 1:
        raise UsageError("give exactly one of --weights/--degree, --ws, --example")
    if args.example is not None:
        try:
            entry = ExampleRegistry.default().get(args.example)
        except KeyError:
            raise UsageError(f"--example: unknown label {args.example!r}")
        if not isinstance(entry, WeightSystem):
            raise UsageError(f"--example: {args.example!r} is not a weight system")
        return entry
    if args.ws is not None:
        return WeightSystem.parse(args.ws)
    if args.degree is None:
        raise UsageError("--weights requires --degree")
    return WeightSystem(args.weights, args.degree)


def _fmt_frac(x) -> str:
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def _cmd_classify(args) -> tuple[Any, str, int]:
    ws = _weight_system(args)
    rec = report.classify_record(ws)
    sc = classify(ws)
    alpha = rec["minimal_exponent"]
    lines = [
        f"weights:           {ws}",
        f"dimension:         {ws.dim}",
        f"N = {rec['liminal_defect']}",
        f"minimal exponent:  {alpha['num']}/{alpha['den']}" if alpha["den"] != 1
        else f"minimal exponent:  {alpha['num']}",
        f"class:             {sc.label()}",
        f"log canonical:     {sc.log_canonical}",
        f"rational:          {sc.rational}",
        f"max k-Du Bois:     {sc.max_du_bois}",
        f"max k-rational:    {sc.max_rational}",
    ]
    return rec, "\n".join(lines) + "\n", EXIT_OK


def _cmd_spectrum(args):
    ws = _weight_system(args)
    rec = report.spectrum_record(ws)
    lines = [
        f"weights:        {ws}",
        f"milnor number:  {rec['milnor_number']}",
        "poincare:       " + " ".join(map(str, rec["poincare"])),
        "spectrum:       " + ", ".join(
            f"{e['num']}/{e['den']} x{e['mult']}" if e["den"] != 1 else f"{e['num']} x{e['mult']}"
            for e in rec["spectrum"]),
        "s_0..s_n:       " + " ".join(map(str, rec["s_vector"])),
    ]
    return rec, "\n".join(lines) + "\n", EXIT_OK


def _cmd_t1(args):
    ws = _weight_system(args)
    rec = report.t1_record(ws)
    t = rec["t1"]
    lines = [f"weights: {ws}", "weight  dim"]
    lines += [f"{a:>6}  {d}" for a, d in sorted(((int(k), v) for k, v in t["weights"].items()))]
    lines += [
        f"K  = {t['K']}",
        f"K' = t_- = b^(1,n-2) = {t['Kprime']}",
        f"Gr^(n-1)_F H^n(L) = {t['Gr']}",
        f"H^1(log)          = {t['H1log']}",
        f"Im H^1(log(-E))   = {t['H1logminusE']}",
    ]
    if not t["valid"]:
        lines.append("note: not 0-liminal; cohomological labels do not apply")
    return rec, "\n".join(lines) + "\n", EXIT_OK


def _cmd_enumerate(args):
    fams = enumerate_diagonal_liminal(args.dim)
    if args.reports:
        data: Any = [family_report(f) for f in fams]
    else:
        data = [list(f.exponents) for f in fams]
    text = "".join("(" + ",".join(map(str, f.exponents)) + ")\n" for f in fams)
    return data, text, EXIT_OK


def _cmd_suite(args):
    lo, hi = args.n
    try:
        reps = series_report(lo, hi, cap=args.cap)
    except ValueError as exc:
        raise UsageError(f"--n: {exc}")
    data = [r.to_dict() for r in reps]
    cols = ["n", "global_t1", "dim_A_system", "moduli_E", "t_minus", "pair_moduli",
            "identity_holds", "local_full", "local_image", "local_codim"]
    rows = [[str(row[c]) for c in cols] for row in data]
    widths = [max(len(c), *(len(r[i]) for r in rows)) for i, c in enumerate(cols)]
    out = ["  ".join(c.rjust(w) for c, w in zip(cols, widths))]
    out += ["  ".join(v.rjust(w) for v, w in zip(r, widths)) for r in rows]
    if any(r.special_case for r in reps):
        out.append("n = 3: H^2(Omega^2(log E)) != 0; the count still closes as 101 = 51 + 19 + 31")
    return data, "\n".join(out) + "\n", EXIT_OK


def _cmd_dual_complex(args):
    if (args.file is None) == (args.example is None):
        raise UsageError("give exactly one of FILE or --example")
    if args.example is not None:
        try:
            D = ExampleRegistry.default().get(args.example)
        except KeyError:
            raise UsageError(f"--example: unknown label {args.example!r}")
        if not isinstance(D, DualComplexData):
            raise UsageError(f"--example: {args.example!r} is not a dual complex")
    else:
        D = DualComplexData.from_json(_read(args.file))
    page = e1_page(D)
    betti = dual_complex_cohomology(D)
    viol = check_zero_liminal_constraints(D, args.m)
    data = {
        "n": D.n,
        "components": list(D.components),
        "e1": page,
        "cohomology": betti,
        "euler_characteristic": euler_characteristic(D),
        "violations": [v.to_dict() for v in viol],
    }
    lines = ["E_1^{p,q} (rows q = n-1 .. 0, columns p = 0 .. n-1):"]
    for q in range(D.n - 1, -1, -1):
        lines.append("  " + " ".join(f"{page[p][q]:>4}" for p in range(D.n)))
    lines.append("h^i(|Gamma|): " + " ".join(map(str, betti)))
    lines += [f"violation ({v.clause}): {v.message}" for v in viol] or ["no violations"]
    return data, "\n".join(lines) + "\n", EXIT_OK


def _cmd_registry(args):
    reg = ExampleRegistry.default()
    data: dict[str, Any] = {
        "entries": [
            {"label": k, "kind": "weight_system", **v.to_dict()} if isinstance(v, WeightSystem)
            else {"label": k, "kind": "dual_complex", "n": v.n, "components": list(v.components)}
            for k, v in reg.entries.items()
        ]
    }
    lines = [f"{k:<28} {reg.describe(k)}" for k in reg.entries]
    code = EXIT_OK
    if args.verify:
        bad = reg.verify()
        data["failed"] = bad
        lines.append(f"verify: {len(reg.entries) - len(bad)}/{len(reg.entries)} ok")
        code = EXIT_DOMAIN if bad else EXIT_OK
    return data, "\n".join(lines) + "\n", code


def _cmd_batch(args):
    try:
        items = json.loads(_read(args.file))
    except json.JSONDecodeError as exc:
        raise UsageError(f"{args.file}: not valid JSON ({exc})")
    if not isinstance(items, list):
        raise UsageError(f"{args.file}: expected a JSON array")
    entries, skipped = [], []
    for i, obj in enumerate(items):
        try:
            rec = report.full_record(WeightSystem.from_dict(obj))
        except LiminalError as exc:
            skipped.append({"index": i, "error": type(exc).__name__, "message": str(exc)})
            continue
        entries.append({"index": i, **rec})
    summary = {
        "total": len(items),
        "reported": len(entries),
        "skipped": len(skipped),
        "zero_liminal": sum(e["classification"]["zero_liminal"] for e in entries),
    }
    data = {"entries": entries, "skipped": skipped, "summary": summary}
    lines = [
        f"[{e['index']}] {','.join(map(str, e['weight_system']['weights']))};{e['weight_system']['degree']}  "
        f"{e['classification']['label']}  mu={e['milnor_number']}  s={e['s_vector']}"
        for e in entries
    ]
    lines += [f"[{s['index']}] skipped: {s['error']}: {s['message']}" for s in skipped]
    lines.append(f"summary: {summary['reported']} reported, {summary['skipped']} skipped, "
                 f"{summary['zero_liminal']} zero-liminal")
    return data, "\n".join(lines) + "\n", EXIT_DOMAIN if skipped else EXIT_OK


def _read(path: str) -> str:
    try:
        return Path(path).read_text()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}")


_COMMANDS = {
    "classify": _cmd_classify,
    "spectrum": _cmd_spectrum,
    "t1": _cmd_t1,
    "enumerate": _cmd_enumerate,
    "suite": _cmd_suite,
    "dual-complex": _cmd_dual_complex,
    "registry": _cmd_registry,
    "batch": _cmd_batch,
}


def run(argv: list[str] | None = None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except _ArgError as exc:
        print(exc, file=stderr)
        return EXIT_USAGE
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        data, text, code = _COMMANDS[args.command](args)
    except UsageError as exc:
        print(f"liminal {args.command}: usage error: {exc}", file=stderr)
        return EXIT_USAGE
    except LiminalError as exc:
        print(f"liminal {args.command}: {type(exc).__name__}: {exc}", file=stderr)
        return EXIT_DOMAIN

    if args.json is not None:
        text = report.dumps(data)
        if args.json != "-":
            Path(args.json).write_text(text)
            text = ""
    if args.out:
        Path(args.out).write_text(text or report.dumps(data))
    stdout.write(text)
    return code


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
