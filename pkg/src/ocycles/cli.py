"""
ocycles command line.

    ocycles gen --family perms --n 3 --s 1
    ocycles verify cycle.txt
    ocycles check all
    ocycles siteswap 0 1 5
    ocycles diagram 0 1 5 --periods 3 --format svg

Exit codes: 0 ok, 1 usage or parse error, 2 infeasible, 3 verification failure.
"""

from __future__ import annotations

import argparse
import csv
import json
import math
import sys
from pathlib import Path

from . import core, cyclefile, diagram, harness
from .core import ParameterError
from .engine import InfeasibleError, construct_ocycle, existence_predicate, verify_ocycle
from .families import FAMILIES, has_gcd_criterion, objects_for

EXIT_OK, EXIT_USAGE, EXIT_INFEASIBLE, EXIT_VERIFY = 0, 1, 2, 3


class UsageError(Exception):
    pass


def _emit(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def _params(args) -> dict:
    names = {
        "perms": ("n",),
        "msetperms": ("multiset",),
        "kperms": ("n", "k"),
        "surjections": ("n", "h"),
        "juggling": ("n", "b"),
    }[args.family]
    params = {}
    for name in names:
        value = getattr(args, name)
        if value is None:
            raise UsageError(f"--{name} is required for family {args.family}")
        params[name] = value
    return params


def _multiset(text: str) -> list[int]:
    try:
        return [int(x) for x in text.replace(",", " ").split()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a list of integers: {text!r}") from None


def _caps(text: str) -> dict:
    caps = {}
    for item in filter(None, text.replace(" ", "").split(",")):
        key, sep, value = item.partition("=")
        if not sep:
            raise argparse.ArgumentTypeError(f"caps entry {item!r} is not key=value")
        try:
            caps[key] = int(value)
        except ValueError:
            raise argparse.ArgumentTypeError(f"cap {key} must be an integer") from None
    return caps


def _digits(values: list[str]) -> core.Word:
    if len(values) == 1:
        return core.JugglingSequence.parse(values[0]).heights
    return core.as_word(int(v) for v in values)


def cmd_gen(args) -> int:
    params = _params(args)
    objects, n = objects_for(args.family, params)
    if not 1 <= args.s <= n - 1:
        raise UsageError(f"--s must lie in [1, {n - 1}] for words of length {n}")
    try:
        cycle = construct_ocycle(objects, args.s)
    except InfeasibleError as exc:
        msg = f"infeasible: {exc}"
        if has_gcd_criterion(args.family) and not existence_predicate(n, args.s):
            d = math.gcd(n, args.s)
            msg = f"infeasible: n-s = gcd(n,s) = {d} (n={n}, s={args.s}); {exc}"
        print(msg, file=sys.stderr)
        print(json.dumps({"reason": exc.reason, **exc.witness}, sort_keys=True), file=sys.stderr)
        return EXIT_INFEASIBLE
    cf = cyclefile.CycleFile.from_cycle(cycle, args.family, params, expand=args.expand)
    _emit(cf.dumps(args.format), args.out)
    return EXIT_OK


def cmd_verify(args) -> int:
    text = sys.stdin.read() if args.cycle_file == "-" else Path(args.cycle_file).read_text()
    cf = cyclefile.loads(text)
    family = args.family or cf.family
    params = dict(cf.params)
    for name in ("n", "k", "h", "b", "multiset"):
        if getattr(args, name) is not None:
            params[name] = getattr(args, name)
    s = args.s if args.s is not None else cf.s
    expected, n = objects_for(family, params)
    cycle = cf.to_cycle()
    report = verify_ocycle(cycle, expected, s)
    if n != cf.n:
        report.add("length", (), f"file has word length {cf.n}, family gives {n}")
    if args.format == "json":
        doc = {
            "passed": report.passed,
            "objects": report.checked,
            "findings": [{"kind": f.kind, "positions": list(f.positions), "detail": f.detail}
                         for f in report.findings],
        }
        _emit(json.dumps(doc, sort_keys=True) + "\n", args.out)
    else:
        lines = [f"{'PASS' if report.passed else 'FAIL'}: {report.checked} objects, "
                 f"{len(report.findings)} findings"]
        lines += [f"{f.kind}\t{','.join(map(str, f.positions))}\t{f.detail}" for f in report.findings]
        _emit("\n".join(lines) + "\n", args.out)
    return EXIT_OK if report.passed else EXIT_VERIFY


COLUMNS = ("family", "n", "s", "params", "predicted", "observed", "agreement", "category", "objects", "verified")


def _cell(value) -> str:
    if isinstance(value, dict):
        return ";".join(f"{k}={v if not isinstance(v, list) else ''.join(map(str, v))}"
                        for k, v in sorted(value.items()))
    if value is None:
        return "-"
    return str(value).lower() if isinstance(value, bool) else str(value)


def _write_report(results, suite: str, report_dir: str) -> None:
    from .plotting import plot_sweep

    out = Path(report_dir)
    out.mkdir(parents=True, exist_ok=True)
    with open(out / f"{suite}.csv", "w", newline="") as fh:
        w = csv.writer(fh)
        w.writerow(COLUMNS)
        for r in results:
            d = r.as_dict()
            w.writerow([_cell(d[c]) for c in COLUMNS])
    plot_sweep(results, out / f"{suite}.png", title=f"{suite} sweep")


def cmd_check(args) -> int:
    suites = harness.SUITES if args.suite == "all" else (args.suite,)
    caps = args.caps or {}
    ok = True
    text, doc = [], {}
    for suite in suites:
        # a shared n_max would shrink or blow up other suites under "all"
        suite_caps = {k: v for k, v in caps.items() if args.suite != "all" or k in ("seed", "trials")}
        result = harness.run_suite(suite, suite_caps)
        if isinstance(result, harness.VerificationReport):
            ok &= result.passed
            doc[suite] = {"passed": result.passed, "checked": result.checked,
                          "findings": [f.__dict__ | {"positions": list(f.positions)} for f in result.findings]}
            text.append(f"# {suite}: {'PASS' if result.passed else 'FAIL'} "
                        f"({result.checked} checks, {len(result.findings)} counterexamples)")
            text += [f"{f.kind}\t{f.detail}" for f in result.findings]
            continue
        failures = [r for r in result if not r.ok]
        ok &= not failures
        doc[suite] = [r.as_dict() for r in result]
        text.append(f"# {suite}: {'PASS' if not failures else 'FAIL'} "
                    f"({len(result)} rows, {len(failures)} failures)")
        text.append("\t".join(COLUMNS))
        for r in result:
            d = r.as_dict()
            text.append("\t".join(_cell(d[c]) for c in COLUMNS))
        for r in result:
            if r.predicted is False or r.category != "theorem":
                text.append(f"#   witness n={r.n} s={r.s} {_cell(r.params)}: "
                            f"{json.dumps(r.witness, sort_keys=True)}")
        if args.report_dir:
            _write_report(result, suite, args.report_dir)
    if args.format == "json":
        _emit(json.dumps(doc, sort_keys=True) + "\n", args.out)
    else:
        _emit("\n".join(text) + "\n", args.out)
    return EXIT_OK if ok else EXIT_VERIFY


def cmd_siteswap(args) -> int:
    t = _digits(args.digits)
    valid = core.validate_juggling(t)
    info = {
        "sequence": list(t),
        "period": len(t),
        "valid": valid,
        "balls": core.ball_count(t) if valid else None,
        "permutation": list(core.permutation_sequence(t)),
    }
    if args.format == "json":
        _emit(json.dumps(info, sort_keys=True) + "\n", args.out)
    else:
        lines = [
            f"sequence: {' '.join(map(str, t))}",
            f"valid: {'yes' if valid else 'no'}",
        ]
        if valid:
            lines.append(f"balls: {info['balls']}")
        lines.append(f"permutation: {' '.join(map(str, info['permutation']))}")
        for slot, beats in diagram.collisions(t):
            lines.append(f"collision: beats {', '.join(map(str, beats))} land at {slot} (mod {len(t)})")
        _emit("\n".join(lines) + "\n", args.out)
    return EXIT_OK


def cmd_diagram(args) -> int:
    t = _digits(args.digits)
    if args.periods < 1:
        raise UsageError("--periods must be at least 1")
    if args.format == "png":
        if not args.out:
            raise UsageError("--format png needs --out")
        from .plotting import plot_juggling_diagram

        plot_juggling_diagram(t, args.periods, args.out)
        return EXIT_OK
    render = diagram.render_svg if args.format == "svg" else diagram.render_ascii
    _emit(render(t, args.periods), args.out)
    return EXIT_OK


def _family_flags(p, required_family=True):
    p.add_argument("--family", choices=FAMILIES, required=required_family)
    p.add_argument("--n", type=int)
    p.add_argument("--k", type=int)
    p.add_argument("--h", type=int)
    p.add_argument("--b", type=int)
    p.add_argument("--multiset", type=_multiset, help="symbols of the multiset, e.g. '0,0,1,2'")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="ocycles", description="Construct and verify s-overlap cycles.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", help="construct an s-ocycle for an object family")
    _family_flags(p)
    p.add_argument("--s", type=int, required=True)
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--expand", action="store_true", help="also list the objects one per line")
    p.add_argument("--out")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("verify", help="verify a cycle file")
    p.add_argument("cycle_file", help="path, or - for stdin")
    _family_flags(p, required_family=False)
    p.add_argument("--s", type=int)
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--out")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("check", help="run exhaustive theorem sweeps")
    p.add_argument("suite", nargs="?", default="all", choices=harness.SUITES + ("all",))
    p.add_argument("--caps", type=_caps, help="e.g. n_max=4,b_max=1 or trials=1000")
    p.add_argument("--seed", type=int)
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--report-dir", help="write <suite>.csv and <suite>.png here")
    p.add_argument("--out")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("siteswap", help="validate a juggling sequence")
    p.add_argument("digits", nargs="+")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--out")
    p.set_defaults(func=cmd_siteswap)

    p = sub.add_parser("diagram", help="draw a juggling diagram")
    p.add_argument("digits", nargs="+")
    p.add_argument("--periods", type=int, default=3)
    p.add_argument("--format", choices=("ascii", "svg", "png"), default="ascii")
    p.add_argument("--out")
    p.set_defaults(func=cmd_diagram)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    if getattr(args, "seed", None) is not None:
        args.caps = {**(args.caps or {}), "seed": args.seed}
    try:
        return args.func(args)
    except (UsageError, ParameterError, core.DomainError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
