"""Command-line surface: index computation, construction, connectivity,
extremal search and maximizer verification.

Exit codes: 0 success, 1 verification mismatch, 2 usage or parse error.
The ``ZEX_THREADS`` environment variable caps the sweep worker count for
``search`` and ``verify`` (0 = one worker per CPU; unset = serial).
Reports are reproducible byte for byte except for the ``elapsed`` timing
fields.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass

from .connectivity import edge_connectivity, vertex_connectivity
from .families import (
    FamilyParams,
    build_family,
    complete_bipartite,
    family_m1,
    family_m2,
    predicted_extremal,
)
from .graphs import (
    Graph,
    GraphFormatError,
    encode_graph6,
    format_edge_list,
    m1,
    m2,
    read_graph_file,
)
from .search import SearchReport, SearchSpec, search_max

VERIFY_MIN_ORDER = 6
VERIFY_MAX_ORDER = 10

_CSV_COLUMNS = ("n", "mode", "c", "index", "max", "predicted", "match", "num_maximizers")


@dataclass(frozen=True)
class VerifyRunConfig:
    """Grid of verification cells: order range, modes and indices."""

    n_min: int
    n_max: int
    modes: tuple[str, ...] = ("vertex", "edge")
    indices: tuple[str, ...] = ("M1", "M2")
    out: str | None = None
    fmt: str = "json"

    def __post_init__(self):
        if not VERIFY_MIN_ORDER <= self.n_min <= self.n_max <= VERIFY_MAX_ORDER:
            raise ValueError(
                f"verification orders must satisfy {VERIFY_MIN_ORDER} <= n_min <= "
                f"n_max <= {VERIFY_MAX_ORDER}"
            )
        for mode in self.modes:
            if mode not in ("vertex", "edge"):
                raise ValueError(f"unknown mode {mode!r}")
        for index in self.indices:
            if index not in ("M1", "M2"):
                raise ValueError(f"unknown index {index!r}")
        if self.fmt not in ("json", "csv"):
            raise ValueError(f"unknown report format {self.fmt!r}")


def _workers_from_env() -> int:
    raw = os.environ.get("ZEX_THREADS")
    if raw is None:
        return 1
    try:
        value = int(raw)
    except ValueError:
        raise ValueError(f"ZEX_THREADS must be an integer, got {raw!r}") from None
    if value < 0:
        raise ValueError("ZEX_THREADS must be nonnegative")
    return value if value > 0 else (os.cpu_count() or 1)


def _write_graph(g: Graph, out: str | None, fmt: str) -> None:
    if fmt == "graph6":
        payload = encode_graph6(g) + b"\n"
    else:
        payload = format_edge_list(g).encode("ascii")
    if out is None:
        sys.stdout.write(payload.decode("ascii"))
    else:
        with open(out, "wb") as fh:
            fh.write(payload)


def cmd_index(args: argparse.Namespace) -> int:
    g = read_graph_file(args.input, args.format)
    print(f"M1={m1(g)} M2={m2(g)}")
    print(f"n={g.n} m={g.num_edges}")
    print("degrees=" + " ".join(str(d) for d in g.degrees()))
    return 0


def cmd_construct(args: argparse.Namespace) -> int:
    if args.kind == "family":
        p = FamilyParams(args.n, args.k, args.r)
        g = build_family(p)
        print(
            f"family n={p.n} k={p.k}: core parts {p.a_count} x {p.b_count}"
            f" (r={p.r})"
        )
        print(f"M1={family_m1(p)} M2={family_m2(p)}")
    elif args.kind == "complete-bipartite":
        g = complete_bipartite(args.p, args.q)
        print(f"complete bipartite {args.p} x {args.q}")
        print(f"M1={m1(g)} M2={m2(g)}")
    else:  # predicted
        g = predicted_extremal(args.n, args.c, args.mode)
        print(f"predicted maximizer n={args.n} c={args.c} mode={args.mode}")
        print(f"M1={m1(g)} M2={m2(g)}")
    print("degrees=" + " ".join(str(d) for d in g.degrees()))
    _write_graph(g, args.out, args.format)
    return 0


def cmd_connectivity(args: argparse.Namespace) -> int:
    g = read_graph_file(args.input, args.format)
    if args.mode == "vertex":
        value, witness = vertex_connectivity(g)
    else:
        value, witness = edge_connectivity(g)
    if witness.complete:
        print(f"{value} (complete graph: no cut exists)")
    elif not witness.members:
        print(f"{value}")
    elif args.mode == "vertex":
        print(f"{value}, cut={{{', '.join(str(v) for v in witness.members)}}}")
    else:
        print(f"{value}, cut={{{', '.join(f'({u}, {v})' for u, v in witness.members)}}}")
    return 0


def cmd_search(args: argparse.Namespace) -> int:
    spec = SearchSpec(args.n, args.mode, args.c, args.index)
    report = search_max(spec, workers=_workers_from_env(), at_least=args.at_least)
    payload = json.dumps(report.to_dict(), indent=2) + "\n"
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(payload)
    sys.stdout.write(payload)
    return 0


def _verify_cells(config: VerifyRunConfig, workers: int) -> list[SearchReport]:
    reports = []
    for n in range(config.n_min, config.n_max + 1):
        for mode in config.modes:
            for c in range(1, n // 2 + 1):
                for index in config.indices:
                    spec = SearchSpec(n, mode, c, index)
                    reports.append(search_max(spec, workers=workers))
    reports.sort(key=lambda r: (r.spec.n, r.spec.mode, r.spec.c, r.spec.index))
    return reports


def _verify_rows(reports: list[SearchReport]) -> list[dict]:
    rows = []
    for r in reports:
        rows.append(
            {
                "n": r.spec.n,
                "mode": r.spec.mode,
                "c": r.spec.c,
                "index": r.spec.index,
                "max": r.max_value,
                "predicted": r.predicted_value,
                "match": r.matches,
                "num_maximizers": len(r.maximizers),
            }
        )
    return rows


def cmd_verify(args: argparse.Namespace) -> int:
    config = VerifyRunConfig(
        n_min=args.n_min,
        n_max=args.n_max,
        modes=tuple(args.modes.split(",")),
        indices=tuple(args.indices.split(",")),
        out=args.out,
        fmt=args.format,
    )
    reports = _verify_cells(config, _workers_from_env())
    nonempty = [r for r in reports if r.max_value is not None]
    all_match = all(r.matches for r in nonempty)
    for r in reports:
        status = "empty" if r.max_value is None else ("ok" if r.matches else "MISMATCH")
        print(
            f"n={r.spec.n} mode={r.spec.mode} c={r.spec.c} index={r.spec.index} "
            f"max={r.max_value} predicted={r.predicted_value} "
            f"maximizers={len(r.maximizers)} [{status}]"
        )
    print(f"all_match={all_match}")
    if config.out:
        if config.fmt == "json":
            payload = json.dumps(
                {"cells": [r.to_dict() for r in reports], "all_match": all_match},
                indent=2,
            ) + "\n"
        else:
            lines = [",".join(_CSV_COLUMNS)]
            for row in _verify_rows(reports):
                lines.append(",".join(str(row[col]) for col in _CSV_COLUMNS))
            payload = "\n".join(lines) + "\n"
        with open(config.out, "w") as fh:
            fh.write(payload)
    return 0 if all_match else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="zex",
        description=(
            "Degree-power indices, connectivity, extremal constructions and "
            "exhaustive maximizer verification for bipartite graphs."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_index = sub.add_parser("index", help="print index values of a graph file")
    p_index.add_argument("input")
    p_index.add_argument("--format", choices=("auto", "graph6", "edgelist"), default="auto")
    p_index.set_defaults(func=cmd_index)

    p_con = sub.add_parser("construct", help="build a named graph and write it out")
    con_sub = p_con.add_subparsers(dest="kind", required=True)
    p_fam = con_sub.add_parser("family", help="the parametric extremal family")
    p_fam.add_argument("--n", type=int, required=True)
    p_fam.add_argument("--k", type=int, required=True)
    p_fam.add_argument("--r", type=int, required=True)
    p_cb = con_sub.add_parser("complete-bipartite")
    p_cb.add_argument("--p", type=int, required=True)
    p_cb.add_argument("--q", type=int, required=True)
    p_pred = con_sub.add_parser("predicted", help="the predicted index maximizer")
    p_pred.add_argument("--n", type=int, required=True)
    p_pred.add_argument("--c", type=int, required=True)
    p_pred.add_argument("--mode", choices=("vertex", "edge"), default="vertex")
    for sp in (p_fam, p_cb, p_pred):
        sp.add_argument("--out", default=None)
        sp.add_argument("--format", choices=("graph6", "edgelist"), default="graph6")
        sp.set_defaults(func=cmd_construct)

    p_conn = sub.add_parser("connectivity", help="connectivity value and cut witness")
    p_conn.add_argument("input")
    p_conn.add_argument("--mode", choices=("vertex", "edge"), default="vertex")
    p_conn.add_argument("--format", choices=("auto", "graph6", "edgelist"), default="auto")
    p_conn.set_defaults(func=cmd_connectivity)

    p_search = sub.add_parser("search", help="maximize an index over one class")
    p_search.add_argument("--n", type=int, required=True)
    p_search.add_argument("--mode", choices=("vertex", "edge"), required=True)
    p_search.add_argument("--c", type=int, required=True)
    p_search.add_argument("--index", choices=("M1", "M2"), required=True)
    p_search.add_argument(
        "--at-least",
        action="store_true",
        help="union the classes with connectivity at least c",
    )
    p_search.add_argument("--out", default=None)
    p_search.set_defaults(func=cmd_search)

    p_verify = sub.add_parser("verify", help="check predicted maximizers over a grid")
    p_verify.add_argument("--n-min", type=int, default=VERIFY_MIN_ORDER)
    p_verify.add_argument("--n-max", type=int, default=8)
    p_verify.add_argument("--modes", default="vertex,edge")
    p_verify.add_argument("--indices", default="M1,M2")
    p_verify.add_argument("--out", default=None)
    p_verify.add_argument("--format", choices=("json", "csv"), default="json")
    p_verify.set_defaults(func=cmd_verify)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (GraphFormatError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
