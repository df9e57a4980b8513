"""Command line front end.

Exit codes: 0 success, 1 failed verification, 2 usage error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys
import time
from dataclasses import dataclass
from fractions import Fraction

from . import genfunc, oracle, trees
from .series import TruncatedSeries, exp_series, format_rational, log_series

SERIES_ORDER_CAP = 30
CENSUS_EDGE_CAP = 5

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


@dataclass
class RunConfig:
    command: str
    order: int | None = 3
    max_edges: int = 4
    max_rank: int = 5
    max_leaves: int = 7
    format: str = "table"
    threads: int = 1
    output_path: str | None = None
    force: bool = False
    decimal: bool = False

    def __post_init__(self):
        if self.order is not None and self.order < 0:
            raise UsageError("order must be nonnegative")
        if self.threads < 1:
            raise UsageError("threads must be positive")


# ---------------------------------------------------------------------------
# rendering
# ---------------------------------------------------------------------------


def _render(header: list[str], rows: list[list], fmt: str, decimal_col: int | None = None, doc: dict | None = None) -> str:
    if decimal_col is not None:
        header = header + ["approx (decimal, rounded)"]
        rows = [r + [f"{float(r[decimal_col]):.12g}"] for r in rows]
    if fmt == "json":
        return json.dumps(doc, ensure_ascii=False, indent=2) + "\n"
    cells = [[format_rational(c) if isinstance(c, Fraction) else str(c) for c in r] for r in rows]
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(header)
        w.writerows(cells)
        return buf.getvalue()
    widths = [max(len(h), *(len(r[i]) for r in cells)) if cells else len(h) for i, h in enumerate(header)]
    lines = ["  ".join(h.ljust(w) for h, w in zip(header, widths))]
    lines += ["  ".join(c.rjust(w) for c, w in zip(r, widths)) for r in cells]
    return "\n".join(lines) + "\n"


def _emit(text: str, cfg: RunConfig):
    if cfg.output_path:
        with open(cfg.output_path, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


# ---------------------------------------------------------------------------
# commands
# ---------------------------------------------------------------------------


def _series_report(name: str, order: int) -> genfunc.SeriesReport:
    if name == "F":
        return genfunc.compute_F(order)
    if name == "E":
        return genfunc.compute_E(order)
    if name == "X":
        return genfunc.compute_X(order)
    if name == "Y":
        return trees.compute_Y(max(order, 1))
    raise UsageError(f"unknown series {name!r}")


def cmd_series(name: str, cfg: RunConfig) -> tuple[str, int]:
    if cfg.order is None:
        raise UsageError("--order is required")
    if cfg.order > SERIES_ORDER_CAP and not cfg.force:
        raise UsageError(f"order {cfg.order} exceeds the safety cap {SERIES_ORDER_CAP}; pass --force")
    report = _series_report(name, cfg.order)
    rows = [[n, c] for n, c in enumerate(report.coefficients)]
    dec = 1 if cfg.decimal else None
    return _render(["n", f"[hbar^n] {name}"], rows, cfg.format, dec, report.to_json()), EXIT_OK


def cmd_gc2(cfg: RunConfig, verify: bool = False) -> tuple[str, int]:
    if cfg.max_rank < 2:
        raise UsageError("max-rank must be at least 2")
    rows = [[rank, genfunc.chi_gc2(rank - 1)] for rank in range(2, cfg.max_rank + 1)]
    status = EXIT_OK
    doc: dict = {"rows": [{"rank": r, "chi": format_rational(c)} for r, c in rows]}
    if verify:
        x = genfunc.compute_X(cfg.max_rank - 1)
        mismatches = [r for r, c in rows if x[r - 1] != c]
        doc["verified"] = not mismatches
        if mismatches:
            doc["mismatch_ranks"] = mismatches
            status = EXIT_FAIL
    dec = 1 if cfg.decimal else None
    text = _render(["rank", "chi(GC_2^(rank))"], rows, cfg.format, dec, doc)
    if verify and cfg.format != "json":
        text += f"# verified against log E: {'pass' if status == EXIT_OK else 'FAIL'}\n"
    return text, status


def cmd_outfn(cfg: RunConfig) -> tuple[str, int]:
    if cfg.max_rank < 2:
        raise UsageError("max-rank must be at least 2")
    if cfg.max_rank - 1 > SERIES_ORDER_CAP and not cfg.force:
        raise UsageError(f"max-rank {cfg.max_rank} exceeds the safety cap; pass --force")
    y = trees.compute_Y(cfg.max_rank - 1)
    rows = [[rank, y[rank - 1]] for rank in range(2, cfg.max_rank + 1)]
    doc = {"rows": [{"rank": r, "chi": format_rational(c)} for r, c in rows]}
    dec = 1 if cfg.decimal else None
    return _render(["rank", "chi(Out(F_rank))"], rows, cfg.format, dec, doc), EXIT_OK


def _check(name: str, fn) -> dict:
    t0 = time.perf_counter()
    try:
        failure = fn()
    except Exception as exc:  # a crashing check is a failed check
        failure = {"error": f"{type(exc).__name__}: {exc}"}
    out = {"name": name, "passed": failure is None, "seconds": round(time.perf_counter() - t0, 3)}
    if failure is not None:
        out["failure"] = failure
    return out


def _report_failure(report: genfunc.VerificationReport):
    return None if report.passed else report.to_json().get("failure", {})


def _suite_gc2(cfg):
    order = 25 if cfg.order is None else cfg.order
    return [_check(f"gc2 closed form vs log E through hbar^{order}", lambda: _report_failure(genfunc.verify_gc2(order)))]


def _suite_renorm(cfg):
    order = 6 if cfg.order is None else max(cfg.order, 1)
    return [_check(f"renormalized identity through hbar^{order}", lambda: _report_failure(trees.renorm_check(order)))]


def _suite_trees(cfg):
    checks = []

    def rooted_is_log():
        deg = 30
        r = trees.rooted_gf(deg, -1)
        one_plus_x = TruncatedSeries([1, 1], deg)
        if r != log_series(one_plus_x):
            return {"detail": "R(-1,x) != log(1+x)"}
        if exp_series(r) != one_plus_x:
            return {"detail": "exp R(-1,x) != 1+x"}
        return None

    def census():
        n_max = cfg.max_leaves
        rooted_series = trees.rooted_gf(n_max, -1)
        tree_series = trees.tree_gf(max(n_max, 3))
        for n in range(1, n_max + 1):
            got = oracle.tree_census(n, rooted=True, cap=max(n_max, oracle.TREE_LEAF_CAP))
            if got != trees.signed_rooted_count(n) or got != rooted_series[n] * math.factorial(n):
                return {"n": n, "rooted": True, "census": got}
        for n in range(3, n_max + 1):
            got = oracle.tree_census(n, rooted=False, cap=max(n_max, oracle.TREE_LEAF_CAP))
            if got != trees.signed_tree_count(n) or got != tree_series[n] * math.factorial(n):
                return {"n": n, "rooted": False, "census": got}
        return None

    checks.append(_check("R(-1,x) = log(1+x) to x^30", rooted_is_log))
    checks.append(_check(f"tree census through {cfg.max_leaves} leaves", census))
    return checks


def _suite_oracle(cfg):
    checks = []

    def census_vs_pm():
        for m in range(1, cfg.max_edges + 1):
            rows = {r.k: r for r in oracle.count_labeled_graphs(m, cfg.threads)}
            p = genfunc.p_m(m)
            for k in range(0, p.cap + 1):
                got = rows[k].weight() if k in rows else Fraction(0)
                if got != p[k]:
                    return {"m": m, "k": k, "census": got, "p_m": p[k]}
        return None

    def iso():
        for m in range(1, min(cfg.max_edges, oracle.ISO_EDGE_CAP) + 1):
            for row in oracle.iso_census(m, cfg.threads):
                if sum(c.weight for c in row.iso_classes) != row.weight():
                    return {"m": m, "k": row.k}
        return None

    def pairs():
        n_max = min(cfg.max_rank, oracle.PAIR_RANK_CAP)
        y = trees.compute_Y(n_max)
        for n in range(1, n_max + 1):
            got = oracle.pair_sum(n, cfg.threads)
            if got != y[n]:
                return {"n": n, "pair_sum": got, "Y": y[n]}
        return None

    checks.append(_check(f"|LG(m,k)|/(2m)! = [λ^k] p_m for m <= {cfg.max_edges}", census_vs_pm))
    checks.append(_check("orbit-stabilizer in the isomorphism census", iso))
    checks.append(_check("pair enumeration matches Y", pairs))
    return checks


SUITES = {"gc2": _suite_gc2, "trees": _suite_trees, "oracle": _suite_oracle, "renorm": _suite_renorm}


def cmd_verify(suite: str, cfg: RunConfig) -> tuple[str, int]:
    names = list(SUITES) if suite == "all" else [suite]
    checks = []
    for name in names:
        checks.extend(SUITES[name](cfg))
    passed = all(c["passed"] for c in checks)
    doc = {"suite": suite, "passed": passed, "checks": checks}
    if cfg.format == "json":
        text = json.dumps(doc, ensure_ascii=False, indent=2) + "\n"
    else:
        lines = [f"{'PASS' if c['passed'] else 'FAIL'}  {c['name']}  ({c['seconds']}s)" for c in checks]
        for c in checks:
            if not c["passed"]:
                lines.append("failure: " + json.dumps({"check": c["name"], **c["failure"]}, ensure_ascii=False))
        text = "\n".join(lines) + "\n"
    return text, EXIT_OK if passed else EXIT_FAIL


def cmd_census(edges: int, cfg: RunConfig, iso: bool = False) -> tuple[str, int]:
    cap = oracle.ISO_EDGE_CAP if iso else CENSUS_EDGE_CAP
    if edges > cap and not cfg.force:
        raise UsageError(f"--edges {edges} exceeds the safety cap {cap}; pass --force")
    if iso:
        rows = oracle.iso_census(edges, cfg.threads, cap=max(edges, oracle.ISO_EDGE_CAP))
    else:
        rows = oracle.count_labeled_graphs(edges, cfg.threads, cap=max(2 * edges, oracle.MATCHING_CAP))
    if cfg.format == "json":
        return oracle.census_to_json(rows) + "\n", EXIT_OK
    if cfg.format == "csv":
        return oracle.census_to_csv(rows), EXIT_OK
    table = [[r.m, r.k, r.labeled_count, r.connected_count, r.signed_count] for r in rows]
    text = _render(list(oracle.CSV_COLUMNS), table, "table")
    if iso:
        for r in rows:
            auts = ", ".join(f"{c.aut}{'' if c.connected else ' (disconnected)'}" for c in r.iso_classes)
            text += f"# m={r.m} k={r.k}: |Aut| = {auts}\n"
    return text, EXIT_OK


# ---------------------------------------------------------------------------
# argument parsing
# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("table", "json", "csv"), default="table")
    common.add_argument("--threads", type=int, default=1, help="worker processes for enumeration")
    common.add_argument("--output", dest="output_path", help="write to this file instead of stdout")
    common.add_argument("--force", action="store_true", help="allow sizes above the safety caps")
    common.add_argument("--decimal", action="store_true", help="add a rounded decimal column")

    p = argparse.ArgumentParser(prog="graphchi", description=__doc__)
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("series", parents=[common], help="coefficients of F, E, X or Y")
    s.add_argument("name", choices=("F", "E", "X", "Y"))
    s.add_argument("--order", type=int, default=3)

    g = sub.add_parser("gc2", parents=[common], help="χ(GC_2^(n)) by rank")
    g.add_argument("--max-rank", type=int, default=6)
    g.add_argument("--verify", action="store_true")

    o = sub.add_parser("outfn", parents=[common], help="χ(Out(F_n)) by rank")
    o.add_argument("--max-rank", type=int, default=6)

    v = sub.add_parser("verify", parents=[common], help="run cross-checks")
    v.add_argument("suite", choices=("all", "gc2", "trees", "oracle", "renorm"))
    v.add_argument("--order", type=int, default=None)
    v.add_argument("--max-edges", type=int, default=4)
    v.add_argument("--max-rank", type=int, default=2)
    v.add_argument("--max-leaves", type=int, default=7)

    c = sub.add_parser("census", parents=[common], help="labeled graph census export")
    c.add_argument("--edges", type=int, required=True)
    c.add_argument("--iso", action="store_true", help="group into isomorphism classes")
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        cfg = RunConfig(
            command=args.command,
            order=getattr(args, "order", 3),
            max_edges=getattr(args, "max_edges", 4),
            max_rank=getattr(args, "max_rank", 5),
            max_leaves=getattr(args, "max_leaves", 7),
            format=args.format,
            threads=args.threads,
            output_path=args.output_path,
            force=args.force,
            decimal=args.decimal,
        )
        if args.command == "series":
            text, code = cmd_series(args.name, cfg)
        elif args.command == "gc2":
            text, code = cmd_gc2(cfg, verify=args.verify)
        elif args.command == "outfn":
            text, code = cmd_outfn(cfg)
        elif args.command == "verify":
            text, code = cmd_verify(args.suite, cfg)
        else:
            text, code = cmd_census(args.edges, cfg, iso=args.iso)
    except (UsageError, oracle.CapExceededError) as exc:
        print(f"graphchi: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    _emit(text, cfg)
    return code


if __name__ == "__main__":
    sys.exit(main())
