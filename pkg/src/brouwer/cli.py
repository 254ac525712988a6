"""Command-line interface.

Subcommands::

    check     verify the conjectured inequality on graphs from a file
    bounds    evaluate every closed-form bound at one (n, m, k)
    tables    k-interval tables for the named presets
    sweep     exhaustively check all labeled graphs on n <= 7 vertices
    ensemble  seeded random-graph report with margins and bound slacks

Output is CSV on stdout by default; ``--json`` switches to JSON lines
and ``--out`` redirects to a file.  Floats print with 6 significant
digits unless ``--full-precision``.  Exit status: 0 all checks pass,
1 a conjecture check failed, 2 usage or input error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import bounds as bnd
from . import verify
from .formats import Graph6ParseError, parse_edgelist, parse_graph6
from .graphs import EXHAUSTIVE_CAP, Graph, _SplitMix64, is_connected, random_gnm
from .spectra import eigenvalues_sym, laplacian

TABLE_PRESETS = {
    # preset id -> (regime, default m grid at the preset's reference n)
    "remark6": ("sparse", tuple(range(100, 701, 100))),
    "remark8": ("dense", tuple(range(1500, 2101, 100))),
}


def _fmt(value, full: bool) -> str:
    if value is None:
        return ""
    if isinstance(value, bool):
        return "yes" if value else "no"
    if isinstance(value, int):
        return str(value)
    if isinstance(value, float):
        return repr(value) if full else format(value, ".6g")
    return str(value)


class _Writer:
    """Collects rows and renders CSV or JSON lines to stdout or a file."""

    def __init__(self, columns, as_json: bool, full: bool, out: str | None):
        self.columns = columns
        self.as_json = as_json
        self.full = full
        self.out = out
        self.lines: list[str] = []
        if not as_json:
            self.lines.append(",".join(columns))

    def comment(self, text: str):
        if self.as_json:
            self.lines.insert(0, json.dumps({"comment": text}))
        else:
            self.lines.insert(len(self.lines) - 1, f"# {text}")

    def row(self, values: dict):
        if self.as_json:
            payload = {c: values.get(c) for c in self.columns}
            for key, val in values.items():
                if key not in payload:
                    payload[key] = val
            self.lines.append(json.dumps(payload))
        else:
            self.lines.append(
                ",".join(_fmt(values.get(c), self.full) for c in self.columns)
            )

    def flush(self):
        text = "\n".join(self.lines) + "\n"
        if self.out:
            with open(self.out, "w") as fh:
                fh.write(text)
        else:
            sys.stdout.write(text)


def _read_graphs(path: str, fmt: str):
    """Yield (label, Graph) pairs from a file, stdin when path is '-'."""
    if path == "-":
        text = sys.stdin.read()
    else:
        with open(path) as fh:
            text = fh.read()
    if fmt == "edgelist":
        yield path, parse_edgelist(text)
        return
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line:
            continue
        try:
            yield f"{path}:{lineno}", parse_graph6(line)
        except Graph6ParseError as exc:
            raise ValueError(f"{path}:{lineno}: {exc}") from exc


def cmd_check(args) -> int:
    writer = _Writer(
        ["graph", "n", "m", "k", "s_k", "rhs", "margin", "status", "connected"],
        args.json, args.full_precision, args.out,
    )
    failed = False
    for label, g in _read_graphs(args.path, args.format):
        if args.k is not None and not 1 <= args.k <= g.n:
            raise ValueError(f"{label}: k={args.k} outside [1, {g.n}]")
        spectrum = eigenvalues_sym(laplacian(g))
        if args.k is None:
            records = verify.check_all_k(g, spectrum)
        else:
            records = [verify.check_conjecture(g, args.k, spectrum)]
        connected = is_connected(g)
        for rec in records:
            failed = failed or rec.status == "FAIL"
            writer.row({
                "graph": rec.graph_id, "n": rec.n, "m": rec.m, "k": rec.k,
                "s_k": rec.s_k, "rhs": rec.rhs, "margin": rec.margin,
                "status": rec.status, "connected": connected,
            })
    writer.flush()
    return 1 if failed else 0


def cmd_bounds(args) -> int:
    ev = bnd.evaluate_bounds(args.n, args.m, args.k)
    writer = _Writer(
        ["n", "m", "k", "brouwer_rhs", "sk_bound", "profile_at_1", "zhou",
         "de_caen_m1"],
        args.json, args.full_precision, args.out,
    )
    writer.row({
        "n": ev.n, "m": ev.m, "k": ev.k, "brouwer_rhs": ev.brouwer_rhs,
        "sk_bound": ev.sk_bound, "profile_at_1": ev.profile_at_1,
        "zhou": ev.zhou, "de_caen_m1": ev.de_caen_m1,
    })
    writer.flush()
    return 0


def cmd_tables(args) -> int:
    regime, default_grid = TABLE_PRESETS[args.which]
    n = args.n
    ms = args.m_list if args.m_list is not None else list(default_grid)
    writer = _Writer(["m", "k_lo", "k_hi"], args.json, args.full_precision, args.out)
    if regime == "sparse":
        cap = bnd.snap_floor(bnd.sparse_m_cap(n))
        writer.comment(f"applicable: {n} <= m <= {cap}")
        intervals = [bnd.sparse_interval(n, m) for m in ms]
    else:
        threshold = bnd.dense_threshold_m(n)
        shown = f"m >= {threshold}" if threshold is not None else "none"
        writer.comment(f"applicable: {shown}")
        intervals = [bnd.dense_interval(n, m) for m in ms]
    for m, itv in zip(ms, intervals):
        if itv.applicable:
            writer.row({"m": m, "k_lo": itv.lo, "k_hi": itv.hi})
        elif args.json:
            writer.row({"m": m, "k_lo": None, "k_hi": None, "reason": itv.reason})
        else:
            writer.row({"m": m, "k_lo": "-", "k_hi": "-"})
    writer.flush()
    return 0


def cmd_sweep(args) -> int:
    summary = verify.exhaustive_sweep(args.n, workers=args.workers)
    payload = {
        "n": summary.n,
        "graphs_checked": summary.graphs_checked,
        "checks_performed": summary.checks_performed,
        "failures": [rec.dump() for rec in summary.failures],
        "near_ties": summary.near_ties,
        "wall_time": summary.wall_time,
    }
    text = json.dumps(payload, indent=2) + "\n"
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
        if summary.failures:
            with open(args.out + ".failures.jsonl", "w") as fh:
                for rec in summary.failures:
                    fh.write(json.dumps(rec.dump()) + "\n")
    else:
        sys.stdout.write(text)
    return 1 if summary.failures else 0


def cmd_ensemble(args) -> int:
    writer = _Writer(
        ["index", "graph6", "n", "m", "connected", "min_margin",
         "sk_slack_min", "zhou_slack_min", "identity_max_rel",
         "interval_checks"],
        args.json, args.full_precision, args.out,
    )
    rng = _SplitMix64(args.seed)
    sub_seeds = [rng.next64() for _ in range(args.count)]
    failed = False
    for index, sub_seed in enumerate(sub_seeds):
        g = random_gnm(args.n, args.m, sub_seed)
        spectrum = eigenvalues_sym(laplacian(g))
        records = verify.check_all_k(g, spectrum)
        failed = failed or any(r.status == "FAIL" for r in records)
        sk_slacks = [verify.check_sk_bound(g, k, spectrum) for k in range(1, g.n + 1)]
        zhou_slacks = [verify.check_zhou(g, k, spectrum) for k in range(1, g.n - 1)]
        report = verify.verify_identities(g)
        interval_records = verify.interval_cross_check(g, spectrum)
        writer.row({
            "index": index,
            "graph6": records[0].graph_id,
            "n": g.n,
            "m": g.m,
            "connected": is_connected(g),
            "min_margin": min(r.margin for r in records),
            "sk_slack_min": min(sk_slacks),
            "zhou_slack_min": min(zhou_slacks) if zhou_slacks else None,
            "identity_max_rel": report.max_relative,
            "interval_checks": len(interval_records),
        })
    writer.flush()
    return 1 if failed else 0


def _add_output_flags(p):
    p.add_argument("--json", action="store_true", help="emit JSON lines instead of CSV")
    p.add_argument("--full-precision", action="store_true",
                   help="print floats with full repr precision")
    p.add_argument("--out", metavar="PATH", default=None,
                   help="write output to PATH instead of stdout")


def _int_list(text: str) -> list[int]:
    try:
        return [int(part) for part in text.split(",") if part.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad integer list {text!r}") from None


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="brouwer",
        description="Check sums of Laplacian eigenvalues against m + k(k+1)/2.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", help="check graphs from a file (or '-' for stdin)")
    p.add_argument("path")
    p.add_argument("--format", choices=("graph6", "edgelist"), default="graph6")
    p.add_argument("--k", type=int, default=None,
                   help="check a single k instead of every k = 1..n")
    _add_output_flags(p)
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("bounds", help="evaluate all bounds at one (n, m, k)")
    p.add_argument("n", type=int)
    p.add_argument("m", type=int)
    p.add_argument("k", type=int)
    _add_output_flags(p)
    p.set_defaults(func=cmd_bounds)

    p = sub.add_parser("tables", help="k-interval tables for a named preset")
    p.add_argument("which", choices=sorted(TABLE_PRESETS))
    p.add_argument("--n", type=int, default=100)
    p.add_argument("--m-list", type=_int_list, default=None, metavar="A,B,C",
                   help="override the preset's m grid")
    _add_output_flags(p)
    p.set_defaults(func=cmd_tables)

    p = sub.add_parser("sweep", help=f"exhaustive check for n <= {EXHAUSTIVE_CAP}")
    p.add_argument("n", type=int)
    p.add_argument("--workers", type=int,
                   default=int(os.environ.get("WORKER_COUNT", "1")))
    p.add_argument("--out", metavar="PATH", default=None)
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("ensemble", help="seeded random-graph verification report")
    p.add_argument("n", type=int)
    p.add_argument("m", type=int)
    p.add_argument("--count", type=int, default=100)
    p.add_argument("--seed", type=int, default=0)
    _add_output_flags(p)
    p.set_defaults(func=cmd_ensemble)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except verify.InternalConsistencyError as exc:
        print(f"brouwer {args.command}: {exc}", file=sys.stderr)
        return 1
    except (ValueError, OSError) as exc:
        print(f"brouwer {args.command}: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
