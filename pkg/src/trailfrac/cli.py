"""Command-line surface: trail checks, counting, estimation, sequence and bound reports.

Single reports default to JSON; ``scan`` defaults to CSV. ``--format text``
switches to a human-readable rendering everywhere. Domain errors exit with
status 1 and a diagnostic on stderr; usage errors exit with status 2.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

from . import bounds as bounds_mod
from . import counting, eis, generators, trails
from .graphs import parse_graph, serialize_graph


def _load_graph(path: str):
    return parse_graph(Path(path).read_text(encoding="utf-8"))


def _parse_subset_arg(text: str) -> list[int]:
    text = text.strip()
    if not text:
        return []
    try:
        return [int(tok) for tok in text.split(",")]
    except ValueError:
        raise ValueError(f"invalid --subset value {text!r}: expected comma-separated integers") from None


def _cell(value) -> str:
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, (list, tuple)):
        return " ".join(str(v) for v in value)
    return str(value)


def _csv_of(payload) -> str:
    rows = payload if isinstance(payload, list) else [payload]
    header = ",".join(rows[0].keys())
    lines = [header]
    lines.extend(",".join(_cell(v) for v in row.values()) for row in rows)
    return "\n".join(lines) + "\n"


def _render(payload, fmt: str, text_fn) -> str:
    if fmt == "json":
        return json.dumps(payload, indent=2) + "\n"
    if fmt == "csv":
        return _csv_of(payload)
    return text_fn(payload)


def _cmd_check(args) -> str:
    g = _load_graph(args.graph)
    subset = _parse_subset_arg(args.subset)
    verdict = trails.is_trail(g, subset)
    payload = {
        "m": g.m,
        "subset": sorted(subset),
        "is_trail": verdict.is_trail,
        "failure_reason": verdict.failure_reason.value if verdict.failure_reason else None,
    }
    if args.witness:
        payload["witness"] = list(verdict.witness) if verdict.witness else None
    if args.oracle:
        oracle = trails.oracle_is_trail(g, subset)
        payload["oracle_is_trail"] = oracle
        payload["oracle_agrees"] = oracle == verdict.is_trail

    def text(p) -> str:
        lines = ["trail" if p["is_trail"] else f"not a trail: {p['failure_reason']}"]
        if args.witness and p.get("witness"):
            lines.append("witness: " + " ".join(str(e) for e in p["witness"]))
        if args.oracle:
            word = "trail" if p["oracle_is_trail"] else "not a trail"
            lines.append(f"oracle: {word} ({'agrees' if p['oracle_agrees'] else 'MISMATCH'})")
        return "\n".join(lines) + "\n"

    return _render(payload, args.format, text)


def _resolve_lanes(args) -> int:
    if args.lanes is not None:
        return args.lanes
    env = os.environ.get("TRAILFRAC_LANES")
    if env is None:
        return 1
    try:
        return int(env)
    except ValueError:
        raise ValueError(f"invalid TRAILFRAC_LANES value {env!r}: expected an integer") from None


def _cmd_count(args) -> str:
    g = _load_graph(args.graph)
    report = counting.count_trails_exact(g, lanes=_resolve_lanes(args))
    payload = report.to_json_dict()

    def text(p) -> str:
        return (
            f"m: {p['m']}\n"
            f"d: {p['d']}\n"
            f"f: {p['f']} = {p['f_decimal']}\n"
            f"elapsed: {p['elapsed']:.3f}s\n"
            f"lanes: {p['lanes']}\n"
        )

    return _render(payload, args.format, text)


def _cmd_estimate(args) -> str:
    g = _load_graph(args.graph)
    report = counting.estimate_trail_fraction(
        g, samples=args.samples, seed=args.seed, confidence=args.confidence
    )
    payload = report.to_json_dict()

    def text(p) -> str:
        return (
            f"estimate: {p['estimate']}\n"
            f"{int(round(p['confidence'] * 100))}% CI: [{p['ci_low']}, {p['ci_high']}]\n"
            f"samples: {p['samples']}\n"
            f"seed: {p['seed']}\n"
        )

    return _render(payload, args.format, text)


def _cmd_eis(args) -> str:
    g = _load_graph(args.graph)
    seq = eis.greedy_eis(g)
    non_isolated = len({v for e in g.edges for v in e})
    payload = {
        "vertices": list(seq.vertices),
        "fresh_edges": list(seq.fresh_edges),
        "length": seq.length,
        "non_isolated_vertices": non_isolated,
        "length_bound_ok": 2 * seq.length >= non_isolated,
    }

    def text(p) -> str:
        return (
            "vertices: " + " ".join(str(v) for v in p["vertices"]) + "\n"
            "fresh edges: " + " ".join(str(e) for e in p["fresh_edges"]) + "\n"
            f"length: {p['length']} (non-isolated vertices: {p['non_isolated_vertices']}, "
            f"bound {'ok' if p['length_bound_ok'] else 'VIOLATED'})\n"
        )

    return _render(payload, args.format, text)


def _cmd_gen(args) -> str:
    if args.shape == "family":
        g = generators.gen_family(args.m)
    elif args.shape == "random":
        g = generators.gen_random_multigraph(args.n, args.m, args.seed)
    elif args.shape == "path":
        g = generators.gen_path(args.k)
    elif args.shape == "cycle":
        g = generators.gen_cycle(args.k)
    else:
        g = generators.gen_star(args.k)
    return serialize_graph(g)


def _cmd_scan(args) -> str:
    rows = bounds_mod.family_ratio_scan(args.m_min, args.m_max)
    if args.format == "csv":
        return bounds_mod.family_ratio_csv(rows)
    payload = [
        {
            "m": r.m,
            "d": r.d,
            "f": float(r.f),
            "f_exact": f"{r.d}/{1 << r.m}",
            "f_sqrt_m": r.f_sqrt_m,
            "theorem_bound": r.theorem_bound,
        }
        for r in rows
    ]

    def text(p) -> str:
        lines = [f"{'m':>5} {'d':>24} {'f':>14} {'f*sqrt(m)':>12} {'bound':>10}"]
        for row in p:
            lines.append(
                f"{row['m']:>5} {row['d']:>24} {row['f']:>14.10f} "
                f"{row['f_sqrt_m']:>12.6f} {row['theorem_bound']:>10.6f}"
            )
        return "\n".join(lines) + "\n"

    return _render(payload, args.format, text)


def _cmd_bounds(args) -> str:
    report = bounds_mod.bound_report(args.m)
    checks = bounds_mod.proof_ingredient_summary()
    payload = {
        "m": report.m,
        "theorem_value": report.theorem_value,
        "k": report.k,
        "r": report.r,
        "family_f": None if report.family_f is None else f"{report.family_f.numerator}/{report.family_f.denominator}",
        "family_f_decimal": None if report.family_f is None else float(report.family_f),
        "ratio": report.ratio,
    }
    payload.update({f"check_{name}": ok for name, ok in checks.items()})

    def text(p) -> str:
        lines = [
            f"m: {p['m']}",
            f"sqrt(log2(m)/m): {p['theorem_value']:.6f}",
            f"proof parameters: k = {p['k']:.4f}, r = {p['r']:.4f}",
        ]
        if p["family_f"] is not None:
            exact = f" (exact {p['family_f']})" if p["m"] <= 64 else ""
            lines.append(f"family f: {p['family_f_decimal']:.10g}{exact}")
            lines.append(f"family f * sqrt(m): {p['ratio']:.6f}")
        for name, ok in checks.items():
            lines.append(f"check {name}: {'ok' if ok else 'FAILED'}")
        return "\n".join(lines) + "\n"

    return _render(payload, args.format, text)


_HANDLERS = {
    "check": _cmd_check,
    "count": _cmd_count,
    "estimate": _cmd_estimate,
    "eis": _cmd_eis,
    "gen": _cmd_gen,
    "scan": _cmd_scan,
    "bounds": _cmd_bounds,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="trailfrac",
        description="Trail-representable edge subsets of directed multigraphs: "
        "decision, exact counting, Monte Carlo estimation, and bound diagnostics.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_output(p, default_format: str = "json") -> None:
        p.add_argument("--format", choices=("json", "csv", "text"), default=default_format)
        p.add_argument("--out", metavar="PATH", default=None, help="write output to PATH instead of stdout")

    p = sub.add_parser("check", help="decide whether an edge subset is a trail")
    p.add_argument("graph", help="edge-list file")
    p.add_argument("--subset", required=True, help="comma-separated edge indices (empty string for the empty subset)")
    p.add_argument("--witness", action="store_true", help="include a witness ordering when the subset is a trail")
    p.add_argument("--oracle", action="store_true", help="cross-run the permutation oracle (|T| <= 8)")
    add_output(p)

    p = sub.add_parser("count", help="exact d(G) and f(G) by enumeration (m <= 30)")
    p.add_argument("graph")
    p.add_argument("--lanes", type=int, default=None, help="work partition count (default: $TRAILFRAC_LANES or 1)")
    add_output(p)

    p = sub.add_parser("estimate", help="Monte Carlo estimate of f(G)")
    p.add_argument("graph")
    p.add_argument("--samples", type=int, required=True)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--confidence", type=float, default=0.95)
    add_output(p)

    p = sub.add_parser("eis", help="greedy edge-increasing vertex sequence")
    p.add_argument("graph")
    add_output(p)

    p = sub.add_parser("gen", help="generate a graph in edge-list format")
    gen_sub = p.add_subparsers(dest="shape", required=True)
    gp = gen_sub.add_parser("family", help="two vertices, m/2 parallel edges each way")
    gp.add_argument("--m", type=int, required=True)
    gp.add_argument("--out", default=None)
    gp = gen_sub.add_parser("random", help="uniform random multigraph without self-loops")
    gp.add_argument("--n", type=int, required=True)
    gp.add_argument("--m", type=int, required=True)
    gp.add_argument("--seed", type=int, required=True)
    gp.add_argument("--out", default=None)
    for name, argname in (("path", "--k"), ("cycle", "--k"), ("star", "--k")):
        gp = gen_sub.add_parser(name)
        gp.add_argument(argname, type=int, required=True)
        gp.add_argument("--out", default=None)

    p = sub.add_parser("scan", help="family trail fraction scaled by sqrt(m), CSV by default")
    p.add_argument("--m-min", dest="m_min", type=int, required=True)
    p.add_argument("--m-max", dest="m_max", type=int, required=True)
    add_output(p, default_format="csv")

    p = sub.add_parser("bounds", help="headline rate at m plus the inequality check battery")
    p.add_argument("--m", type=int, required=True)
    add_output(p)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        output = _HANDLERS[args.command](args)
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    out_path = getattr(args, "out", None)
    if out_path:
        Path(out_path).write_text(output, encoding="utf-8")
    else:
        sys.stdout.write(output)
    return 0


def entrypoint() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entrypoint()
