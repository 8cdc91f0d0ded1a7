"""Command-line entry point: ``nga <command> ...``."""

from __future__ import annotations

import argparse
import json
import random
import sys
from pathlib import Path

from .algebra import InvariantViolation
from .graphs import (
    Graph,
    Graph6Error,
    REGULAR_BOUND,
    UNRESTRICTED_BOUND,
    bipartite_structure,
    census,
    is_connected,
    iter_random_graphs,
    parse_edge_list,
    parse_graph6,
    to_graph6,
)
from .petersen import fingerprint, report_json, verify
from .shortweight import (
    annihilator_basis,
    incidence_rank,
    incidence_rank_formula,
    oracle_short_functionals,
)
from .structure import (
    DoublyOddPaddle,
    EvenCycle,
    TwoOddCycles,
    check_posa_witness,
    classify_edge_square,
    classify_minimal_coherent,
    classify_pair_square,
    is_edge_square,
    is_mc_edge_connected,
    minimal_coherent_subgraphs,
    posa_witness,
)

DEFAULT_SEED = 20240607


class InputError(Exception):
    pass


def _load_graph(args) -> Graph:
    if args.graph6 is not None:
        try:
            return parse_graph6(args.graph6)
        except Graph6Error as exc:
            raise InputError(f"bad graph6 input: {exc}") from exc
    try:
        text = Path(args.edges).read_text()
    except OSError as exc:
        raise InputError(f"cannot read {args.edges}: {exc.strerror}") from exc
    try:
        return parse_edge_list(text)
    except ValueError as exc:
        raise InputError(f"bad edge list in {args.edges}: {exc}") from exc


def _edges_of(G: Graph, ks) -> list[list[int]]:
    return [list(G.edges[k]) for k in sorted(ks)]


def analyze(G: Graph) -> dict:
    bs = bipartite_structure(G)
    rI, rJ = incidence_rank(G), incidence_rank(G, oriented=True)
    if rI != incidence_rank_formula(G) or rJ != incidence_rank_formula(G, oriented=True):
        raise InvariantViolation("incidence_rank", "rank differs from the component count formula")
    return {
        "p": G.p,
        "q": G.q,
        "k": bs.k,
        "k_b": bs.k_b,
        "rank_I": rI,
        "rank_I_oriented": rJ,
        "ann_dim": len(annihilator_basis(G)),
        "short_functionals": len(oracle_short_functionals(G)),
    }


def classify(G: Graph, with_iso: bool = False) -> dict:
    if not is_connected(G):
        raise InputError("classification needs a connected graph")
    if is_edge_square(G):
        rep = classify_edge_square(G)
    else:
        rep = classify_pair_square(G)
    return rep.to_dict(include_iso=with_iso)


def _kind(obj) -> dict:
    if isinstance(obj, EvenCycle):
        return {"kind": "even_cycle", "m": obj.length}
    if isinstance(obj, DoublyOddPaddle):
        return {"kind": "doubly_odd_paddle", "m": obj.m, "n": obj.n, "path_len": obj.path_len}
    raise TypeError(obj)


def coherence(G: Graph, max_circuit: int | None) -> dict:
    bound = G.q if max_circuit is None else min(max_circuit, G.q)
    circuits = minimal_coherent_subgraphs(G, bound)
    out = {
        "p": G.p,
        "q": G.q,
        "max_circuit": bound,
        "circuits": [dict(edges=_edges_of(G, c), **_kind(classify_minimal_coherent(G, c))) for c in circuits],
    }
    if bound == G.q:
        out["mc_edge_connected"] = is_mc_edge_connected(G, circuits)
    if G.p >= 4 and G.q >= G.p + 1:
        w = posa_witness(G)
        if not check_posa_witness(G, w):
            raise InvariantViolation("posa_witness", "witness fails its own check")
        if isinstance(w, TwoOddCycles):
            out["posa"] = {"kind": "two_odd_cycles", "cycles": [_edges_of(G, w.first), _edges_of(G, w.second)]}
        else:
            out["posa"] = {"kind": "even_cycle", "cycle": _edges_of(G, w.edges)}
    return out


def census_rows(order: int, cubic: bool, connected: bool):
    graphs = census(order, connected=connected, regular_degree=3 if cubic else None)
    for G in graphs:
        yield {"graph6": to_graph6(G), "p": G.p, "q": G.q, "fingerprint": list(fingerprint(G))}


def sweep(count: int, max_order: int, seed: int):
    """Random graphs checked against the rank formulas and the short-functional count."""
    rng = random.Random(seed)
    for G in iter_random_graphs(rng, count, max_order):
        row = analyze(G)
        if row["short_functionals"] != G.q:
            raise InvariantViolation("short_functionals", f"{row['short_functionals']} found for q = {G.q}")
        row["graph6"] = to_graph6(G)
        yield row


def _text(obj, indent: int = 0) -> str:
    pad = "  " * indent
    if isinstance(obj, dict):
        lines = []
        for k, v in obj.items():
            if isinstance(v, (dict, list)) and v and not all(isinstance(x, (int, str)) for x in v):
                lines.append(f"{pad}{k}:")
                lines.append(_text(v, indent + 1))
            else:
                lines.append(f"{pad}{k}: {v}")
        return "\n".join(lines)
    if isinstance(obj, list):
        lines = []
        for x in obj:
            if isinstance(x, dict):
                body = _text(x, indent + 1)
                lines.append(f"{pad}- " + body[len(pad) + 2:])
            else:
                lines.append(f"{pad}- {x}")
        return "\n".join(lines)
    return f"{pad}{obj}"


def _emit(obj, fmt: str, out) -> None:
    if fmt == "json":
        out.write(json.dumps(obj) + "\n")
    else:
        out.write(_text(obj) + "\n")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="nga", description="Normal graph algebras over the rationals.")
    sub = ap.add_subparsers(dest="command", required=True)

    def with_graph(p):
        src = p.add_mutually_exclusive_group(required=True)
        src.add_argument("--graph6", help="graph in graph6 format")
        src.add_argument("--edges", help="edge-list file: 'p q' then one 'i j' per line")

    def with_format(p):
        p.add_argument("--format", choices=("json", "text"), default="json")

    a = sub.add_parser("analyze", help="orders, incidence ranks, annihilator, short functionals")
    with_graph(a)
    with_format(a)

    c = sub.add_parser("classify", help="edge-square / pair-square classification")
    with_graph(c)
    with_format(c)
    c.add_argument("--with-iso", action="store_true", help="include the isomorphism in the report")

    h = sub.add_parser("coherence", help="minimally coherent edge sets and a Posa witness")
    with_graph(h)
    with_format(h)
    h.add_argument("--max-circuit", type=int, default=None, help="largest circuit size to list")

    n = sub.add_parser("census", help="isomorphism classes of a given order, one JSON line each")
    n.add_argument("--order", type=int, required=True)
    n.add_argument("--cubic", action="store_true")
    n.add_argument("--connected", action="store_true")
    with_format(n)

    s = sub.add_parser("sweep", help="randomized rank and short-functional checks")
    s.add_argument("--count", type=int, default=200)
    s.add_argument("--max-order", type=int, default=10)
    s.add_argument("--seed", type=int, default=DEFAULT_SEED)
    with_format(s)

    pt = sub.add_parser("petersen", help="Petersen graph case study")
    pt.add_argument("action", choices=("verify",))
    pt.add_argument("--skip-census", action="store_true", help="omit the cubic census check")
    with_format(pt)
    return ap


def _check_bounds(args) -> None:
    if args.command == "census":
        limit = REGULAR_BOUND if args.cubic else UNRESTRICTED_BOUND
        if not 1 <= args.order <= limit:
            raise InputError(f"--order must lie in 1..{limit}")
        if not args.connected and not args.cubic and args.order > UNRESTRICTED_BOUND - 1:
            raise InputError(f"unrestricted census is limited to order {UNRESTRICTED_BOUND - 1}")
    if args.command == "coherence" and args.max_circuit is not None and args.max_circuit < 1:
        raise InputError("--max-circuit must be positive")
    if args.command == "sweep" and (args.count < 0 or not 1 <= args.max_order <= 16):
        raise InputError("--count must be >= 0 and --max-order in 1..16")


def main(argv=None, out=None) -> int:
    out = out if out is not None else sys.stdout
    args = build_parser().parse_args(argv)
    try:
        _check_bounds(args)
        if args.command == "petersen":
            report = verify(include_census=not args.skip_census)
            if args.format == "json":
                out.write(report_json(report) + "\n")
            else:
                for r in report:
                    out.write(f"{r['status'].upper():4}  {r['name']}\n")
            return 0 if all(r["status"] == "pass" for r in report) else 1
        if args.command == "census":
            for row in census_rows(args.order, args.cubic, args.connected):
                _emit(row, args.format, out)
            return 0
        if args.command == "sweep":
            for row in sweep(args.count, args.max_order, args.seed):
                _emit(row, args.format, out)
            return 0
        G = _load_graph(args)
        if args.command == "analyze":
            _emit(analyze(G), args.format, out)
        elif args.command == "classify":
            _emit(classify(G, args.with_iso), args.format, out)
        else:
            _emit(coherence(G, args.max_circuit), args.format, out)
        return 0
    except InputError as exc:
        print(f"nga: {exc}", file=sys.stderr)
        return 2
    except InvariantViolation as exc:
        print(f"nga: invariant violation in {exc.check}: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
