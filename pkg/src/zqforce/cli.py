"""Command-line front end: solver dispatch, cross-verification, strategy
printing, and benchmark tables.

Exit codes: 0 success, 2 parse/validation, 3 scope or cap refusal,
4 cross-method disagreement.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from dataclasses import asdict, dataclass

from . import closed_forms
from .certificates import certificate_from_tokens, check_certificate, format_certificate
from .errors import (
    EdgeListParseError,
    GraphValidationError,
    OracleProtocolError,
    ResourceLimitError,
    ScopeError,
    VerificationMismatch,
    ZqError,
)
from .forcing import BRUTE_FORCE_CAP, brute_force_Z
from .game import (
    MODE_CLOSURE,
    MODE_SINGLE_FORCE,
    GameConfig,
    extract_player_trace,
    solution_report,
    solve_zq,
)
from .generators import FamilyParams, generate_family
from .graphs import (
    Graph,
    connected_components,
    find_blocks,
    induced_subgraph,
    is_block_graph,
    is_cactus,
    is_connected,
    parse_edge_list,
)
from .structured import block_graph_Z, cactus_Z0

_FAMILY_ALIASES = {
    "path": "path",
    "cycle": "cycle",
    "clique": "clique",
    "star": "generalized_star",
    "generalized_star": "generalized_star",
    "windmill1": "windmill_I",
    "windmill_I": "windmill_I",
    "windmill2": "windmill_II",
    "windmill_II": "windmill_II",
    "random_block_graph": "random_block_graph",
    "random_cactus": "random_cactus",
}

_FORMULA_FAMILIES = ("generalized_star", "windmill_I", "windmill_II")

METHODS = ("auto", "exact", "block", "cactus", "formula", "brute")


@dataclass
class RunReport:
    source: str
    detected_class: str
    method: str
    q: int | None
    value: int | None
    certificate_path: str | None
    wall_time: float
    params: dict | None

    def to_dict(self) -> dict:
        return asdict(self)

    @classmethod
    def from_dict(cls, data: dict) -> "RunReport":
        return cls(**data)


def detect_class(g: Graph) -> str:
    if not is_connected(g):
        return "disconnected"
    tags = []
    if is_block_graph(g, 3):
        tags.append("block-graph")
    if is_cactus(g):
        tags.append("cactus")
    return "+".join(tags) if tags else "general"


def _warn(message: str):
    print(f"warning: {message}", file=sys.stderr)


def _parse_int_list(text: str) -> list:
    text = text.strip()
    if not text:
        return []
    return [int(tok) for tok in text.split(",") if tok.strip()]


def _rule3_mode(flag: str) -> str:
    return MODE_CLOSURE if flag == "closure" else MODE_SINGLE_FORCE


def _family_params(args) -> FamilyParams:
    arms = tuple(_parse_int_list(args.arms)) if args.arms else None
    return FamilyParams(
        eta=args.eta,
        k=args.k,
        l=args.l,
        path_lengths=arms,
        n=args.n,
        blocks=args.blocks,
    )


def _load_graph(args):
    """Returns (graph, source string, family kind or None, params dict)."""
    if args.file and args.family:
        raise GraphValidationError("give either --file or --family, not both")
    if args.file:
        with open(args.file, "r", encoding="utf-8") as fh:
            return parse_edge_list(fh.read()), args.file, None, None
    if args.family:
        kind = _FAMILY_ALIASES.get(args.family)
        if kind is None:
            raise GraphValidationError(f"unknown family {args.family!r}")
        params = _family_params(args)
        g = generate_family(kind, params, seed=args.seed)
        shown = {k: v for k, v in asdict(params).items() if v is not None}
        if args.seed is not None:
            shown["seed"] = args.seed
        return g, f"family:{kind}", kind, shown
    raise GraphValidationError("an input graph is required: --file or --family")


def _formula_value(kind: str, params: FamilyParams, q: int) -> int:
    if kind == "generalized_star":
        if not params.path_lengths:
            raise GraphValidationError("generalized_star needs --arms")
        return closed_forms.star_Zq(params.path_lengths, q)
    if None in (params.eta, params.k, params.l):
        raise GraphValidationError("windmill formulas need --eta, --k and --l")
    if kind == "windmill_I":
        return closed_forms.windmill_I_Zq(params.eta, params.k, params.l, q)
    return closed_forms.windmill_II_Zq(params.eta, params.k, params.l, q)


def _solve_connected(g: Graph, q: int, method: str, args):
    """Value of a connected graph by a concrete non-formula method.

    Returns (value, certificate or None, solution or None).
    """
    if method == "block":
        value, cert = block_graph_Z(g)
        return value, cert, None
    if method == "cactus":
        if q != 0:
            raise ScopeError("the cactus solver computes Z_0 only; use it with q=0")
        return cactus_Z0(g), None, None
    if method == "exact":
        cfg = GameConfig(q=q, rule3_mode=_rule3_mode(args.rule3), vertex_cap=args.cap)
        sol = solve_zq(g, cfg)
        return sol.value, extract_player_trace(g, sol), sol
    if method == "brute":
        if q < g.n:
            _warn(f"brute force computes plain Z, which equals Z_q only for q >= n={g.n}")
        value, witness = brute_force_Z(g)
        return value, certificate_from_tokens(g, sorted(witness)), None
    raise ScopeError(f"method {method!r} cannot run here")


def _auto_method(g: Graph, q: int, cap: int) -> str:
    if is_block_graph(g, 3):
        return "block"
    if q == 0 and is_cactus(g):
        return "cactus"
    if g.n <= cap:
        return "exact"
    raise ScopeError(
        f"no solver for this class/size: n={g.n} exceeds the exact cap {cap} and the "
        "graph is neither a block graph with blocks >= 3 nor (at q=0) a cactus"
    )


def cmd_compute(args) -> int:
    started = time.perf_counter()
    g, source, family_kind, shown_params = _load_graph(args)
    q = args.q
    method = args.method
    value = None
    cert = None
    sol = None
    used = None

    if method in ("auto", "formula") and family_kind in _FORMULA_FAMILIES:
        params = _family_params(args)
        try:
            value = _formula_value(family_kind, params, q)
            used = "formula"
        except ScopeError:
            if method == "formula":
                raise
    elif method == "formula":
        raise ScopeError("--method formula needs a --family with a closed form (star/windmill)")

    if used is None:
        comps = connected_components(g)
        if len(comps) == 1:
            used = _auto_method(g, q, args.cap) if method == "auto" else method
            value, cert, sol = _solve_connected(g, q, used, args)
        else:
            _warn(
                f"input has {len(comps)} components; reporting the sum of per-component "
                "values (a CLI convention, defined for connected graphs otherwise)"
            )
            value = 0
            for comp in comps:
                sub, _ = induced_subgraph(g, comp)
                used = _auto_method(sub, q, args.cap) if method == "auto" else method
                part, _, _ = _solve_connected(sub, q, used, args)
                value += part
            shown_params = dict(shown_params or {}, components=len(comps))

    cert_path = None
    if args.trace:
        if cert is None:
            _warn(f"method {used!r} does not produce a certificate; --trace ignored")
        else:
            with open(args.trace, "w", encoding="utf-8") as fh:
                fh.write(format_certificate(cert))
            cert_path = args.trace
            if not check_certificate(g, q, cert):
                raise ZqError("internal error: emitted certificate failed verification")

    report = RunReport(
        source=source,
        detected_class=detect_class(g),
        method=used,
        q=q,
        value=value,
        certificate_path=cert_path,
        wall_time=time.perf_counter() - started,
        params=shown_params,
    )
    if args.json:
        payload = report.to_dict()
        if sol is not None:
            payload["solver"] = solution_report(sol, cert)
        _emit(json.dumps(payload, indent=2), args.output)
    else:
        lines = [
            f"source: {report.source}",
            f"class: {report.detected_class}",
            f"method: {report.method}",
            f"q: {report.q}",
            f"value: {report.value}",
        ]
        if cert_path:
            lines.append(f"certificate: {cert_path}")
        _emit("\n".join(lines), args.output)
    return 0


def cmd_verify(args) -> int:
    g, source, family_kind, _ = _load_graph(args)
    if not is_connected(g):
        raise GraphValidationError("verify requires a connected graph")
    q_list = _parse_int_list(args.q_list)
    if not q_list:
        raise GraphValidationError("--q-list must name at least one q")

    block_value = None
    if is_block_graph(g, 3):
        block_value, _ = block_graph_Z(g)
    cactus_value = None
    if 0 in q_list and is_cactus(g):
        cactus_value = cactus_Z0(g)
    brute_value = None
    if g.n <= BRUTE_FORCE_CAP and any(q >= g.n for q in q_list):
        brute_value, _ = brute_force_Z(g)
    if g.n > args.cap:
        _warn(f"n={g.n} exceeds the exact cap {args.cap}; skipping the exact solver")

    rows = []
    mismatch = False
    for q in q_list:
        row = {}
        if g.n <= args.cap:
            cfg = GameConfig(q=q, rule3_mode=_rule3_mode(args.rule3), vertex_cap=args.cap)
            row["exact"] = solve_zq(g, cfg).value
        if family_kind in _FORMULA_FAMILIES:
            row["formula"] = _formula_value(family_kind, _family_params(args), q)
        if block_value is not None:
            row["block"] = block_value
        if q == 0 and cactus_value is not None:
            row["cactus"] = cactus_value
        if q >= g.n and brute_value is not None:
            row["brute"] = brute_value
        agreed = len(set(row.values())) <= 1
        mismatch = mismatch or not agreed
        rows.append({"q": q, "values": row, "agree": agreed})

    if args.json:
        _emit(json.dumps({"source": source, "rows": rows}, indent=2), args.output)
    else:
        lines = [f"source: {source}"]
        for row in rows:
            cells = ", ".join(f"{name}={val}" for name, val in sorted(row["values"].items()))
            status = "ok" if row["agree"] else "MISMATCH"
            lines.append(f"q={row['q']}: {cells} [{status}]")
        _emit("\n".join(lines), args.output)
    if mismatch:
        raise VerificationMismatch(f"methods disagree on {source}")
    return 0


def cmd_bench(args) -> int:
    kind = _FAMILY_ALIASES.get(args.family)
    if kind not in ("random_block_graph", "random_cactus"):
        raise GraphValidationError("bench supports --family random_block_graph or random_cactus")
    sizes = _parse_int_list(args.n) if args.n else []
    block_family = kind == "random_block_graph"
    header = ("n", "m", "blocks" if block_family else "cycles", "time_s", "Z" if block_family else "Z0")
    lines = ["\t".join(header)]
    for index, n in enumerate(sizes):
        instance_seed = args.seed * 1_000_003 + 7919 * index + n
        params = FamilyParams(n=n, blocks=args.blocks)
        g = generate_family(kind, params, seed=instance_seed)
        blocks = find_blocks(g)
        started = time.perf_counter()
        if block_family:
            value, _ = block_graph_Z(g)
            count = len(blocks)
        else:
            value = cactus_Z0(g)
            count = sum(1 for b in blocks if len(b.vertices) >= 3)
        elapsed = time.perf_counter() - started
        lines.append(f"{g.n}\t{g.m}\t{count}\t{elapsed:.6f}\t{value}")
    _emit("\n".join(lines), args.output)
    return 0


def cmd_strategy(args) -> int:
    g, source, _, _ = _load_graph(args)
    if not is_connected(g):
        raise GraphValidationError("strategy requires a connected graph")
    cfg = GameConfig(q=args.q, rule3_mode=_rule3_mode(args.rule3), vertex_cap=args.cap)
    sol = solve_zq(g, cfg)
    cert = extract_player_trace(g, sol)
    lines = [f"source: {source} (n={g.n}, m={g.m}), q={args.q}, rule3={cfg.rule3_mode}"]
    for i, mv in enumerate(cert.trace, start=1):
        name = type(mv).__name__
        if name == "TokenMove":
            lines.append(f"move {i}: token on {mv.vertex}")
        elif name == "ForceMove":
            lines.append(f"move {i}: force {mv.source} -> {mv.target}")
        elif name == "AnnounceMove":
            body = " | ".join("{" + ",".join(map(str, sorted(c))) + "}" for c in mv.components)
            lines.append(f"move {i}: announce {body}")
        else:
            body = " | ".join("{" + ",".join(map(str, sorted(c))) + "}" for c in mv.components)
            lines.append(f"move {i}: oracle reveals {body}")
    lines.append(f"tokens spent: {len(cert.tokens)} (game value {sol.value})")
    _emit("\n".join(lines), args.output)
    return 0


def _emit(text: str, output: str | None):
    if output:
        with open(output, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
    else:
        print(text)


def _add_graph_source(parser: argparse.ArgumentParser):
    parser.add_argument("--file", help="edge-list input file")
    parser.add_argument("--family", help="generate a family instance instead of reading a file")
    parser.add_argument("--eta", type=int, help="windmill: number of clique copies")
    parser.add_argument("--k", type=int, help="windmill: clique size")
    parser.add_argument("--l", type=int, help="windmill: center size")
    parser.add_argument("--arms", help="generalized star arm lengths, comma separated")
    parser.add_argument("--blocks", type=int, help="random_block_graph: number of blocks")
    parser.add_argument("--seed", type=int, help="seed for random families")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="zqforce", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("compute", help="compute Z_q of one graph")
    _add_graph_source(p)
    p.add_argument("--n", type=int, help="vertex count for path/cycle/clique/random families")
    p.add_argument("--q", type=int, default=0)
    p.add_argument("--method", choices=METHODS, default="auto")
    p.add_argument("--rule3", choices=("closure", "single"), default="closure")
    p.add_argument("--cap", type=int, default=16, help="exact-solver vertex cap")
    p.add_argument("--trace", help="write the certificate to this path")
    p.add_argument("--json", action="store_true")
    p.add_argument("--output", help="write the report here instead of stdout")
    p.set_defaults(func=cmd_compute)

    p = sub.add_parser("verify", help="cross-check every applicable method")
    _add_graph_source(p)
    p.add_argument("--n", type=int, help="vertex count for path/cycle/clique/random families")
    p.add_argument("--q-list", dest="q_list", required=True, help="comma-separated q values")
    p.add_argument("--rule3", choices=("closure", "single"), default="closure")
    p.add_argument("--cap", type=int, default=16)
    p.add_argument("--json", action="store_true")
    p.add_argument("--output", help="write the report here instead of stdout")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("bench", help="benchmark table for generated instances")
    p.add_argument("--family", required=True)
    p.add_argument("--n", help="comma-separated instance sizes")
    p.add_argument("--blocks", type=int, help="random_block_graph: number of blocks")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--output", help="write the TSV here instead of stdout")
    p.set_defaults(func=cmd_bench)

    p = sub.add_parser("strategy", help="print move-by-move optimal play")
    _add_graph_source(p)
    p.add_argument("--n", type=int, help="vertex count for path/cycle/clique/random families")
    p.add_argument("--q", type=int, default=0)
    p.add_argument("--rule3", choices=("closure", "single"), default="closure")
    p.add_argument("--cap", type=int, default=16)
    p.add_argument("--output", help="write the transcript here instead of stdout")
    p.set_defaults(func=cmd_strategy)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (EdgeListParseError, GraphValidationError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (ScopeError, ResourceLimitError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except VerificationMismatch as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 4
    except (OracleProtocolError, ZqError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
