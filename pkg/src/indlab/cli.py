"""Command-line driver: generation, counting, searching, tuple probing,
bound tables and the verification suite.

Reports are machine-readable (JSON or CSV), carry a schema version, and
contain no timestamps or worker-count echoes, so identical configurations
produce byte-identical output.  Exit codes: 0 success, 1 a verification
check failed, 2 usage or configuration error, 3 resource guard.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from fractions import Fraction
from math import comb

from . import bounds as bounds_mod
from . import verify as verify_mod
from .census import (
    ResourceGuardError,
    count_induced,
    search_corpus,
    search_exhaustive,
)
from .graph6 import Graph6Error, decode_graph6, encode_graph6
from .graphs import (
    Graph,
    make_chain,
    make_circulant,
    make_complete,
    make_complete_multipartite,
    make_cycle,
    make_dlg,
    make_paley,
    make_path,
    random_graph,
)
from .loopy import (
    copy_labelings,
    correspondence_check,
    enumerate_loopy,
    lemma_sum,
    rotation_bound_check,
    theorem_bound_check,
)

SCHEMA = 1

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_USAGE = 2
EXIT_RESOURCE = 3


def parse_graph_spec(spec: str, seed: int = 0) -> Graph:
    """Build a graph from a family specifier.

    Families: ``dlg:k``, ``circulant:n:j1,j2``, ``chain:t``, ``kmmm:m``,
    ``paley:q``, ``cycle:n``, ``complete:n``, ``path:n``,
    ``random:n:p`` (uses --seed), ``g6:<path>`` (first line), plus short
    aliases like ``K5``, ``C4``, ``P3``.
    """
    spec = spec.strip()
    if ":" in spec:
        head, _, rest = spec.partition(":")
        if head == "dlg":
            return make_dlg(int(rest))
        if head == "circulant":
            n_str, _, jumps_str = rest.partition(":")
            jumps = {int(j) for j in jumps_str.split(",") if j}
            return make_circulant(int(n_str), jumps)
        if head == "chain":
            return make_chain(int(rest))
        if head == "kmmm":
            m = int(rest)
            return make_complete_multipartite([m, m, m])
        if head == "paley":
            return make_paley(int(rest))
        if head == "cycle":
            return make_cycle(int(rest))
        if head == "complete":
            return make_complete(int(rest))
        if head == "path":
            return make_path(int(rest))
        if head == "random":
            n_str, _, p_str = rest.partition(":")
            return random_graph(int(n_str), Fraction(p_str), seed)
        if head == "g6":
            with open(rest, "r", encoding="ascii") as fh:
                for line in fh:
                    line = line.strip()
                    if line:
                        return decode_graph6(line)
            raise ValueError(f"no graph6 line found in {rest}")
        raise ValueError(f"unknown graph family {head!r}")
    if len(spec) >= 2 and spec[0] in "KCP" and spec[1:].isdigit():
        n = int(spec[1:])
        return {"K": make_complete, "C": make_cycle, "P": make_path}[spec[0]](n)
    raise ValueError(f"cannot parse graph specifier {spec!r}")


def _emit(text: str, out: str | None) -> None:
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _json_report(payload: dict) -> str:
    return json.dumps(payload, sort_keys=True, indent=2) + "\n"


def _csv_report(fieldnames: list[str], rows: list[dict]) -> str:
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=fieldnames, lineterminator="\n")
    writer.writeheader()
    for row in rows:
        writer.writerow(row)
    return buf.getvalue()


def _resolve_workers(args) -> int | None:
    if getattr(args, "workers", None):
        return args.workers
    env = os.environ.get("INDLAB_WORKERS")
    if env:
        return max(1, int(env))
    return None


# ---------------------------------------------------------------------------
# Subcommands


def cmd_gen(args) -> int:
    g = parse_graph_spec(args.family, args.seed)
    _emit(encode_graph6(g) + "\n", args.out)
    return EXIT_OK


def cmd_count(args) -> int:
    pattern = parse_graph_spec(args.pattern, args.seed)
    host = parse_graph_spec(args.host, args.seed)
    res = count_induced(pattern, host)
    payload = {
        "schema": SCHEMA,
        "pattern": args.pattern,
        "host": args.host,
        "copies": res.copies,
        "subsets_examined": res.subsets_examined,
        "density_num": res.density.numerator,
        "density_den": res.density.denominator,
        "density": f"{float(res.density):.6g}",
    }
    if args.format == "csv":
        fields = list(payload)
        _emit(_csv_report(fields, [payload]), args.out)
    else:
        _emit(_json_report(payload), args.out)
    return EXIT_OK


def cmd_search(args) -> int:
    pattern = parse_graph_spec(args.pattern, args.seed)
    workers = _resolve_workers(args)
    if args.exhaustive is not None:
        res = search_exhaustive(
            pattern, args.exhaustive, witness_cap=args.witness_cap, workers=workers
        )
        denom = comb(args.exhaustive, pattern.n)
    else:
        with open(args.corpus, "r", encoding="ascii") as fh:
            res = search_corpus(
                pattern,
                fh,
                population=f"g6:{args.corpus}",
                witness_cap=args.witness_cap,
            )
        denom = comb(decode_graph6(res.witnesses[0]).n, pattern.n) if res.witnesses else 1
    dens = Fraction(res.max_copies, denom) if denom else Fraction(0)
    payload = {
        "schema": SCHEMA,
        "pattern": args.pattern,
        "population": res.population,
        "max_copies": res.max_copies,
        "density_num": dens.numerator,
        "density_den": dens.denominator,
        "density": f"{float(dens):.6g}",
        "graphs_examined": res.graphs_examined,
        "maximizer_count": res.maximizer_count,
        "witnesses": list(res.witnesses),
    }
    if args.format == "csv":
        flat = dict(payload, witnesses=";".join(res.witnesses))
        _emit(_csv_report(list(flat), [flat]), args.out)
    else:
        _emit(_json_report(payload), args.out)
    return EXIT_OK


def cmd_loopy(args) -> int:
    host = parse_graph_spec(args.host, args.seed)
    k, mode = args.k, args.mode
    tuples = enumerate_loopy(host, k, mode)
    mass = lemma_sum(host, k, mode)
    tb = theorem_bound_check(host, k)
    findings: list[str] = []
    if mode == "strict" and not tuples:
        findings.append("strict-rules-admit-no-complete-tuple")
    checks: dict = {
        "lemma": mass <= 1,
        "theorem_bound": tb.holds,
    }
    if k >= 6:
        corr = correspondence_check(host, k, mode) if mode == "amended" else None
        if corr is not None:
            checks["correspondence"] = corr.matches
            copy_count = corr.copy_count
            if not corr.matches:
                findings.append("copy-correspondence-mismatch")
        else:
            checks["correspondence"] = None
            copy_count = tb.copies
    else:
        checks["correspondence"] = None
        copy_count = tb.copies
        findings.append("k5-copies-are-complete-graphs-every-ordering-admissible")
    rot_k = True
    rot_2k = True
    for lab in copy_labelings(host, k):
        rep = rotation_bound_check(host, lab, mode)
        rot_k = rot_k and rep.forward_ok
        rot_2k = rot_2k and rep.total_ok
        if rep.degenerate and "rotation-family-entirely-inadmissible" not in findings:
            findings.append("rotation-family-entirely-inadmissible")
    checks["rotation_k"] = rot_k
    checks["rotation_2k"] = rot_2k
    payload = {
        "schema": SCHEMA,
        "mode": mode,
        "k": k,
        "host": args.host,
        "host_graph6": encode_graph6(host),
        "loopy_count": len(tuples),
        "copy_count": copy_count,
        "lemma_sum_num": mass.numerator,
        "lemma_sum_den": mass.denominator,
        "checks": checks,
        "findings": findings,
    }
    _emit(_json_report(payload), args.out)
    return EXIT_OK


def cmd_bounds(args) -> int:
    reports = bounds_mod.bound_table(args.k, args.n)
    rows = []
    for r in reports:
        rows.append(
            {
                "name": r.name,
                "k": r.params.get("k", ""),
                "n": r.params.get("n", ""),
                "num": r.value.numerator if r.value is not None else "",
                "den": r.value.denominator if r.value is not None else "",
                "decimal": r.decimal,
                "kind": r.kind,
            }
        )
    if args.format == "csv":
        _emit(_csv_report(["name", "k", "n", "num", "den", "decimal", "kind"], rows), args.out)
    else:
        _emit(_json_report({"schema": SCHEMA, "bounds": rows}), args.out)
    return EXIT_OK


def cmd_verify(args) -> int:
    report = verify_mod.run_all(workers=_resolve_workers(args))
    _emit(verify_mod.render_report(report), args.out)
    for check in report["checks"]:
        status = "pass" if check["passed"] else "FAIL"
        print(f"[{status}] {check['name']}", file=sys.stderr)
    return EXIT_OK if report["passed"] else EXIT_VERIFY_FAILED


# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="indlab",
        description="Induced-copy census and bound checks for double loop graphs",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, seed=True, workers=False, fmt=None):
        p.add_argument("--out", "-o", help="output path (default stdout)")
        if seed:
            p.add_argument("--seed", type=int, default=0, help="seed for random: specs")
        if workers:
            p.add_argument(
                "--workers", type=int, default=0,
                help="worker threads (default: INDLAB_WORKERS or all cores)",
            )
        if fmt:
            p.add_argument("--format", choices=fmt, default=fmt[0])

    p = sub.add_parser("gen", help="emit a generated graph as graph6")
    p.add_argument("--family", required=True)
    common(p)
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("count", help="exact induced-copy count")
    p.add_argument("--pattern", required=True)
    p.add_argument("--host", required=True)
    common(p, fmt=["json", "csv"])
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("search", help="maximize induced copies over a population")
    p.add_argument("--pattern", required=True)
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--exhaustive", type=int, metavar="N",
                       help="all labeled graphs of order N (N <= 7)")
    group.add_argument("--corpus", metavar="PATH", help="graph6 file")
    p.add_argument("--witness-cap", type=int, default=10)
    common(p, workers=True, fmt=["json", "csv"])
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("loopy", help="tuple census, mass and copy checks")
    p.add_argument("--host", required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--mode", choices=["amended", "strict"], default="amended")
    common(p)
    p.set_defaults(func=cmd_loopy)

    p = sub.add_parser("bounds", help="closed-form bound tables")
    p.add_argument("--k", type=int, nargs="+", default=[5, 6, 7])
    p.add_argument("--n", type=int, default=None)
    common(p, seed=False, fmt=["csv", "json"])
    p.set_defaults(func=cmd_bounds)

    p = sub.add_parser("verify", help="run every acceptance check")
    common(p, seed=False, workers=True)
    p.set_defaults(func=cmd_verify)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ResourceGuardError as exc:
        print(f"resource guard: {exc}", file=sys.stderr)
        return EXIT_RESOURCE
    except (Graph6Error, ValueError, KeyError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
