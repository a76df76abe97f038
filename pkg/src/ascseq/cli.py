"""Command-line interface.

Exit codes: 0 success, 1 verification mismatch, 2 usage error,
3 node budget exhausted.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

from . import bijections as bij
from . import closedforms, extremal, gentree
from .core import PatternSet, format_word, parse_word
from .enumeration import DEFAULT_BUDGET, count_levels, generate
from .errors import DomainError, NodeBudgetExceeded

EXIT_OK, EXIT_MISMATCH, EXIT_USAGE, EXIT_BUDGET = 0, 1, 2, 3

CONFIG_KEYS = {"budget": int, "jobs": int, "format": str, "cache": str}


class UsageError(Exception):
    pass


def read_config(path: str | None) -> dict:
    """``key=value`` lines; ``#`` starts a comment."""
    if not path:
        return {}
    cfg = {}
    for lineno, raw in enumerate(Path(path).read_text().splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        key, sep, value = line.partition("=")
        key = key.strip().replace("-", "_")
        if not sep or key not in CONFIG_KEYS:
            raise UsageError(f"{path}:{lineno}: bad config line {raw!r}")
        try:
            cfg[key] = CONFIG_KEYS[key](value.strip())
        except ValueError:
            raise UsageError(f"{path}:{lineno}: bad value for {key}") from None
    return cfg


class CountCache:
    """JSON map ``"patterns|n_max" -> [a(0), ..., a(n_max)]``."""

    def __init__(self, path: str | None):
        self.path = Path(path) if path else None
        self.data: dict[str, list[int]] = {}
        if self.path and self.path.exists():
            self.data = json.loads(self.path.read_text())

    def levels(self, B: PatternSet, n_max: int, budget: int, jobs: int) -> list[int]:
        for key, counts in self.data.items():
            pats, _, n = key.rpartition("|")
            if pats == B.key() and int(n) >= n_max:
                return counts[: n_max + 1]
        counts = count_levels(n_max, B, budget, jobs)
        if self.path:
            self.data[f"{B.key()}|{n_max}"] = counts
            self.path.write_text(json.dumps(self.data, indent=1, sort_keys=True))
        return counts


def _emit(args, text: str) -> None:
    if args.output:
        Path(args.output).write_text(text)
    else:
        sys.stdout.write(text)


def _patterns(text: str) -> PatternSet:
    try:
        return PatternSet.parse(text)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def cmd_enumerate(args) -> int:
    B = _patterns(args.patterns)
    cls = generate(args.n, B, args.budget, args.jobs)
    if args.format == "json":
        _emit(args, json.dumps([format_word(w) for w in cls]) + "\n")
    else:
        _emit(args, cls.to_lines())
    return EXIT_OK


def cmd_count(args) -> int:
    B = _patterns(args.patterns)
    counts = args.cache.levels(B, args.nmax, args.budget, args.jobs)[1:]
    fmt = args.format or "bfile"
    if fmt == "json":
        text = json.dumps(counts) + "\n"
    elif fmt == "csv":
        text = "n,count\n" + "".join(f"{n},{c}\n" for n, c in enumerate(counts, 1))
    elif fmt == "text":
        text = ",".join(map(str, counts)) + "\n"
    else:
        text = "".join(f"{n} {c}\n" for n, c in enumerate(counts, 1))
    _emit(args, text)
    return EXIT_OK


_KNOWN_NOTES = {
    "101,110": "F_9 = 34 at n=5 (a published table of this row skips that term)",
}


def cmd_verify(args) -> int:
    if args.all:
        keys = list(closedforms.REGISTRY)
    elif args.patterns is not None:
        B = _patterns(args.patterns)
        if B.key() not in closedforms.REGISTRY:
            raise UsageError(f"unregistered pair: {args.patterns!r}")
        keys = [B.key()]
    else:
        raise UsageError("verify needs --patterns or --all")
    rows = []
    for key in keys:
        f = closedforms.REGISTRY[key]
        oracle = args.cache.levels(f.patterns, args.nmax, args.budget, args.jobs)[1:]
        formula = [f.evaluate(n) for n in range(1, args.nmax + 1)]
        bad = [n for n, (o, v) in enumerate(zip(oracle, formula), 1) if o != v]
        rows.append({"patterns": key, "name": f.name, "formula": f.description,
                     "pass": not bad, "mismatch_at": bad, "oracle": oracle,
                     "note": _KNOWN_NOTES.get(key)})
    passed = sum(r["pass"] for r in rows)
    if args.format == "json":
        text = json.dumps({"passed": passed, "total": len(rows), "results": rows}, indent=2) + "\n"
    else:
        lines = []
        for r in rows:
            status = "PASS" if r["pass"] else f"FAIL at n={r['mismatch_at']}"
            lines.append(f"{status:<6} {r['patterns']:<8} {r['name']:<34} n=1..{args.nmax}")
            if r["note"]:
                lines.append(f"       note: {r['note']}")
        lines.append(f"{passed}/{len(rows)} pass")
        text = "\n".join(lines) + "\n"
    _emit(args, text)
    return EXIT_OK if passed == len(rows) else EXIT_MISMATCH


def roundtrip_report(n_max: int) -> dict:
    """Exhaustive round-trip and image audit of both bijections."""
    out = {}
    total = ok = image_ok = 0
    for n in range(1, n_max + 1):
        target = set(generate(n, "100,101").members)
        for d in bij.dyck_words(n):
            if not bij.avoids_dduu(d):
                continue
            x = bij.phi(d)
            total += 1
            ok += bij.phi_inverse(x) == d
            image_ok += x in target
    out["phi"] = {"checked": total, "roundtrip_ok": ok, "image_ok": image_ok}
    total = ok = image_ok = 0
    for n in range(1, n_max + 1):
        for x in generate(n, "100,101"):
            d = bij.phi_inverse(x)
            total += 1
            ok += bij.phi(d) == x
            image_ok += bij.is_dyck(d) and bij.avoids_dduu(d) and len(d) == 2 * n
    out["phi_inverse"] = {"checked": total, "roundtrip_ok": ok, "image_ok": image_ok}
    total = ok = image_ok = 0
    for n in range(1, n_max + 1):
        for x in generate(n, "101,210"):
            wd = bij.cb_encode(x)
            total += 1
            ok += bij.cb_decode(wd) == x
            image_ok += bij.is_cb_alternating(wd)
    out["cb"] = {"checked": total, "roundtrip_ok": ok, "image_ok": image_ok}
    return out


def cmd_bijection(args) -> int:
    op = args.op
    if op == "roundtrip":
        report = roundtrip_report(args.nmax)
        good = all(r["checked"] == r["roundtrip_ok"] == r["image_ok"] for r in report.values())
        if args.format == "json":
            _emit(args, json.dumps({"pass": good, **report}, indent=2) + "\n")
        else:
            lines = [f"{k:<12} {v['roundtrip_ok']}/{v['checked']} round trips, "
                     f"{v['image_ok']}/{v['checked']} images" for k, v in report.items()]
            lines.append("all pass" if good else "FAILURES")
            _emit(args, "\n".join(lines) + "\n")
        return EXIT_OK if good else EXIT_MISMATCH
    if args.value is None:
        raise UsageError(f"bijection {op} needs an argument")
    if op == "phi":
        result = format_word(bij.phi(bij.parse_dyck(args.value)))
    elif op == "phi-inv":
        result = bij.phi_inverse(parse_word(args.value))
    elif op == "cb-encode":
        result = bij.cb_encode(parse_word(args.value))
    elif op == "cb-decode":
        result = format_word(bij.cb_decode(args.value.strip().upper()))
    elif op == "ternary":
        result = bij.cb_to_ternary(bij.cb_encode(parse_word(args.value)))
    else:  # pragma: no cover - argparse restricts choices
        raise UsageError(op)
    _emit(args, result + "\n")
    return EXIT_OK


def _load_tree(args) -> gentree.GeneratingTree:
    if args.tree_file:
        return gentree.GeneratingTree.from_text(Path(args.tree_file).read_text())
    if not args.name:
        raise UsageError("tree name or --tree-file required")
    return gentree.builtin_tree(args.name)


def cmd_tree(args) -> int:
    op = args.op
    if op == "fib-triangle":
        if args.format == "csv":
            _emit(args, gentree.fib_triangle_csv(args.nmax))
        else:
            rows = gentree.fib_tree_distribution(args.nmax)
            lines = []
            for n, row in enumerate(rows, 1):
                vals = [row.get(k, 0) for k in range(2, args.nmax + 2)]
                lines.append(f"{n:>3} | " + " ".join(f"{v:>6}" for v in vals)
                             + f" || {sum(vals)}")
            _emit(args, "\n".join(lines) + "\n")
        return EXIT_OK
    t = _load_tree(args)
    if op == "levels":
        counts = gentree.level_counts(t, args.nmax)
        _emit(args, (json.dumps(counts) if args.format == "json"
                     else ",".join(map(str, counts))) + "\n")
        return EXIT_OK
    if op == "matrix":
        P = gentree.production_matrix(t)
        if args.format == "json":
            _emit(args, json.dumps(P) + "\n")
        else:
            _emit(args, "".join(" ".join(str(v) for v in row) + "\n" for row in P))
        return EXIT_OK
    if op == "show":
        _emit(args, t.to_text())
        return EXIT_OK
    if op == "gfcheck":
        if args.name not in gentree.BUILTIN_GFS:
            raise UsageError("gfcheck needs a builtin tree name")
        ok = gentree.gf_check(t, gentree.BUILTIN_GFS[args.name], args.nmax)
        _emit(args, f"{'pass' if ok else 'FAIL'} {args.name} "
                    f"{gentree.BUILTIN_GFS[args.name]} to order {args.nmax}\n")
        return EXIT_OK if ok else EXIT_MISMATCH
    raise UsageError(op)  # pragma: no cover


def cmd_extremal(args) -> int:
    try:
        p = extremal.ExtremalParams(args.a, args.b)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    report = extremal.confirm_threshold(p, args.probe, args.budget, args.jobs)
    _emit(args, report.to_json() + "\n")
    fine = report.witness_valid and report.empty_at_general_bound is not False
    return EXIT_OK if fine else EXIT_MISMATCH


def cmd_formulas(args) -> int:
    if args.format == "json":
        _emit(args, closedforms.registry_report_json(args.nmax) + "\n")
    else:
        _emit(args, closedforms.registry_report_text(args.nmax))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--budget", type=int, default=None,
                        help="node budget (default: $ASCSEQ_NODE_BUDGET or 10^8)")
    common.add_argument("--jobs", type=int, default=None, help="worker processes")
    common.add_argument("--format", choices=["text", "json", "bfile", "csv"], default=None)
    common.add_argument("--output", "-o", default=None, help="write to file instead of stdout")
    common.add_argument("--config", default=None, help="key=value config file")
    common.add_argument("--cache", default=None, help="JSON count cache")

    parser = argparse.ArgumentParser(prog="ascseq", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("enumerate", parents=[common], help="list an avoidance class")
    p.add_argument("--patterns", required=True)
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("count", parents=[common], help="count table for n = 1..nmax")
    p.add_argument("--patterns", required=True)
    p.add_argument("--nmax", type=int, required=True)
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("verify", parents=[common], help="formula vs brute force")
    p.add_argument("--patterns", default=None)
    p.add_argument("--all", action="store_true")
    p.add_argument("--nmax", type=int, default=10)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("bijection", parents=[common], help="apply or audit a bijection")
    p.add_argument("op", choices=["phi", "phi-inv", "cb-encode", "cb-decode", "ternary", "roundtrip"])
    p.add_argument("value", nargs="?")
    p.add_argument("--nmax", type=int, default=8)
    p.set_defaults(func=cmd_bijection)

    p = sub.add_parser("tree", parents=[common], help="generating trees")
    p.add_argument("op", choices=["levels", "matrix", "gfcheck", "fib-triangle", "show"])
    p.add_argument("name", nargs="?")
    p.add_argument("--nmax", type=int, default=12)
    p.add_argument("--tree-file", default=None)
    p.set_defaults(func=cmd_tree)

    p = sub.add_parser("extremal", parents=[common], help="emptiness threshold report")
    p.add_argument("--a", type=int, required=True)
    p.add_argument("--b", type=int, required=True, help="largest letter of 01...b")
    p.add_argument("--probe", type=int, default=None)
    p.set_defaults(func=cmd_extremal)

    p = sub.add_parser("formulas", parents=[common], help="registered formulas and first terms")
    p.add_argument("--nmax", type=int, default=12)
    p.set_defaults(func=cmd_formulas)
    return parser


def _resolve(args) -> None:
    cfg = read_config(args.config)
    for key in CONFIG_KEYS:
        if getattr(args, key, None) is None and key in cfg:
            setattr(args, key, cfg[key])
    if args.budget is None:
        args.budget = int(os.environ.get("ASCSEQ_NODE_BUDGET", DEFAULT_BUDGET))
    if args.jobs is None:
        args.jobs = 1
    if args.budget <= 0:
        raise UsageError("budget must be positive")
    if getattr(args, "nmax", 1) < 1:
        raise UsageError("--nmax must be >= 1")
    if getattr(args, "n", 0) < 0:
        raise UsageError("--n must be >= 0")
    args.cache = CountCache(args.cache)


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        _resolve(args)
        return args.func(args)
    except (UsageError, DomainError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except NodeBudgetExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BUDGET


if __name__ == "__main__":
    sys.exit(main())
