"""Command-line front end: ``caterpack gen|pack|verify|render|bounds|oracle``.

Exit codes: 0 ok, 2 usage or parse error, 3 sufficient conditions fail,
4 verification or construction failure, 5 search budget exhausted.
"""
from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, field
from pathlib import Path
from typing import Optional

from . import oracle, packing, verify
from .caterpillar import caterpillars_from_json, make_center_caterpillar, make_regular_caterpillar
from .errors import (
    CaterpackError,
    ConstructionError,
    InfeasibleError,
    ParameterError,
    PreconditionError,
    VerificationError,
)
from .layout import INNER, SIDES
from .render import layout_svg

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_INFEASIBLE = 3
EXIT_VERIFY = 4
EXIT_BUDGET = 5


@dataclass
class RunConfig:
    subcommand: str
    params: dict = field(default_factory=dict)
    out: Optional[str] = None
    fmt: str = "json"
    seed: int = 0


class _Usage(Exception):
    pass


def _int_list(text: str) -> list[int]:
    try:
        vals = [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")
    if not vals:
        raise argparse.ArgumentTypeError("empty list")
    return vals


def _emit(cfg: RunConfig, payload: dict, table: str) -> None:
    text = json.dumps(payload, indent=2) + "\n" if cfg.fmt == "json" else table
    if cfg.out:
        Path(cfg.out).write_text(text)
    else:
        sys.stdout.write(text)


def _read_text(path: str) -> str:
    try:
        return sys.stdin.read() if path == "-" else Path(path).read_text()
    except OSError as exc:
        raise _Usage(f"cannot read {path}: {exc}") from exc


def _load_layout(path: str) -> packing.PackingLayout:
    text = _read_text(path)
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise _Usage(f"invalid JSON in {path}: {exc}") from exc
    if isinstance(data, dict) and "layout" in data:
        data = data["layout"]  # output of `pack`
    if not isinstance(data, dict):
        raise _Usage("layout JSON must be an object")
    try:
        return packing.PackingLayout.from_dict(data)
    except ParameterError as exc:
        raise _Usage(str(exc)) from exc


def _report_table(report: verify.CrossingReport, host: verify.HostGraph) -> list[str]:
    return [
        f"k              {report.k}",
        f"crossings      {report.total}",
        f"host edges     {host.edge_count}",
        f"simple         {host.simple}",
        f"spanning       {host.spanning}",
        f"max degree     {max(host.degrees, default=0)}",
    ]


# --- subcommands ------------------------------------------------------------------


def cmd_gen(cfg: RunConfig) -> int:
    p = cfg.params
    if p["center"]:
        if p["n"] is None or p["h"] is None:
            raise _Usage("--center needs --n and --h")
        cat = make_center_caterpillar(p["n"], p["h"])
    else:
        if p["delta"] is None or p["sigma"] is None:
            raise _Usage("need --delta and --sigma (or --center)")
        cat = make_regular_caterpillar(p["delta"], p["sigma"])
    deg = cat.degrees()
    payload = {"seed": cfg.seed, "caterpillar": cat.to_dict(), "max_degree": max(deg)}
    table = (
        f"seed {cfg.seed}\nn {cat.n}  sigma {cat.sigma}  max degree {max(deg)}\n"
        + "\n".join(f"spine {s}: leaves {list(ls)}" for s, ls in zip(cat.spine, cat.leaves))
        + "\n"
    )
    _emit(cfg, payload, table)
    return EXIT_OK


def _build(p: dict) -> tuple[packing.PackingLayout, Optional[int]]:
    scheme = p["scheme"]
    checked = not p["unchecked"]
    side = p["side"]

    def need(*names):
        missing = [x for x in names if p.get(x) is None]
        if missing:
            raise _Usage(f"--scheme {scheme} needs " + ", ".join("--" + m.replace("_", "-") for m in missing))

    if scheme == "place":
        need("delta", "sigma", "h")
        layout = packing.place_copies(p["delta"], p["sigma"], p["h"], side, checked)
        return layout, verify.bound_placement_crossings(p["delta"], p["h"])
    if scheme == "mixed":
        need("deltas", "n")
        layout = packing.pack_mixed(p["deltas"], p["n"], side, checked)
        return layout, verify.bound_mixed_crossings(p["deltas"][0], len(p["deltas"]))
    if scheme == "divisible":
        need("deltas", "n")
        layout = packing.pack_divisible(p["deltas"], p["n"], side, checked)
        return layout, verify.bound_placement_crossings(p["deltas"][0], len(p["deltas"]))
    need("delta", "sigma")
    layout = packing.place_three_2planar(p["delta"], p["sigma"], checked, node_budget=p["budget"] or 100_000)
    return layout, 2


def cmd_pack(cfg: RunConfig) -> int:
    layout, bound = _build(cfg.params)
    if p_multi := verify.has_multi_edges(layout):
        print(f"multi-edges: {p_multi}", file=sys.stderr)
        return EXIT_VERIFY
    report = verify.crossing_counts(layout)
    host = verify.host_graph(layout)
    ok = host.simple and host.spanning and not host.overfull and report.k <= bound
    payload = {
        "seed": cfg.seed,
        "layout": layout.to_dict(),
        "report": report.to_dict(),
        "bound": bound,
        "within_bound": report.k <= bound,
    }
    table = "\n".join(
        [f"seed           {cfg.seed}", f"scheme         {layout.scheme}", f"h              {layout.h}",
         f"offsets        {list(layout.offsets)}"]
        + _report_table(report, host)
        + [f"bound          {bound}", f"within bound   {report.k <= bound}"]
    ) + "\n"
    _emit(cfg, payload, table)
    return EXIT_OK if ok else EXIT_VERIFY


def _layout_deltas(layout: packing.PackingLayout) -> list[int]:
    out = []
    for d in layout.drawings:
        if d.delta is not None:
            out.append(int(d.delta))
        else:
            deg = [0] * d.n
            for a, b in d.edges:
                deg[a] += 1
                deg[b] += 1
            out.append(max(deg))
    return out


def cmd_verify(cfg: RunConfig) -> int:
    layout = _load_layout(cfg.params["layout"])
    host = verify.host_graph(layout)
    multi = verify.has_multi_edges(layout)
    payload: dict = {"seed": cfg.seed, "simple": host.simple, "spanning": host.spanning,
                     "multi_edges": [list(e) for e in multi]}
    lines = [f"seed           {cfg.seed}"]
    if multi:
        lines += ["simple         False", f"duplicates     {multi}"]
        _emit(cfg, payload, "\n".join(lines) + "\n")
        print(f"duplicate edges: {multi}", file=sys.stderr)
        return EXIT_VERIFY
    report = verify.crossing_counts(layout)
    payload["report"] = report.to_dict()
    lines += _report_table(report, host)
    if cfg.params["against_bounds"] and layout.drawings:
        deltas = sorted(_layout_deltas(layout), reverse=True)
        sheet = verify.bound_sheet(layout.n, deltas, layout.h)
        uniform = len(set(deltas)) == 1
        bound = sheet.placement_bound if uniform else sheet.mixed_bound
        payload["bounds"] = sheet.to_dict()
        payload["bound_used"] = "placement" if uniform else "mixed"
        payload["within_bound"] = report.k <= bound
        lines += [
            f"upper bound    {bound} ({payload['bound_used']})",
            f"within bound   {report.k <= bound}",
            f"lower bound    {sheet.lower_bound_general} (general), {sheet.lower_bound_trees} (trees)",
        ] + [f"note           {x}" for x in sheet.notes]
    _emit(cfg, payload, "\n".join(lines) + "\n")
    return EXIT_OK if host.spanning else EXIT_VERIFY


def cmd_render(cfg: RunConfig) -> int:
    layout = _load_layout(cfg.params["layout"])
    if not layout.drawings:
        raise _Usage("layout has no drawings")
    svg = layout_svg(layout)
    out = cfg.params["svg"] or cfg.out
    if out:
        try:
            Path(out).write_text(svg)
        except OSError as exc:
            raise _Usage(f"cannot write {out}: {exc}") from exc
    else:
        sys.stdout.write(svg)
    return EXIT_OK


def cmd_bounds(cfg: RunConfig) -> int:
    p = cfg.params
    sheet = verify.bound_sheet(p["n"], p["deltas"], p["h"], p["delta_j"])
    payload = {"seed": cfg.seed, **sheet.to_dict()}
    lines = [
        f"seed           {cfg.seed}",
        f"pair bound     {sheet.pair_bound}",
        f"placement      {sheet.placement_bound}",
        f"mixed          {sheet.mixed_bound}",
        f"lower general  {sheet.lower_bound_general} (~{float(sheet.lower_bound_general):.4f})",
        f"lower trees    {sheet.lower_bound_trees} (~{float(sheet.lower_bound_trees):.4f})",
    ]
    if sheet.h in verify.SMALL_H_BOUNDS:
        min_n, k, why = verify.SMALL_H_BOUNDS[sheet.h]
        if sheet.n >= min_n:
            payload["small_h_lower_bound"] = k
            lines.append(f"small-h bound  k >= {k} ({why})")
    lines += [f"note           {x}" for x in sheet.notes]
    _emit(cfg, payload, "\n".join(lines) + "\n")
    return EXIT_OK


def cmd_oracle(cfg: RunConfig) -> int:
    p = cfg.params
    if p["caterpillars"]:
        try:
            cats = list(caterpillars_from_json(_read_text(p["caterpillars"])))
        except json.JSONDecodeError as exc:
            raise _Usage(f"invalid JSON: {exc}") from exc
    else:
        if None in (p["copies"], p["delta"], p["sigma"]):
            raise _Usage("need --copies, --delta and --sigma (or --caterpillars)")
        cats = [make_regular_caterpillar(p["delta"], p["sigma"])] * p["copies"]
    inst = oracle.SearchInstance(
        cats, mode=p["mode"], node_budget=p["budget"] or 50_000_000, time_budget=p["time_budget"]
    )
    verdict = oracle.brute_force_placement_exists(inst)
    payload = {"seed": cfg.seed, "n": inst.n, "h": len(cats), **verdict.to_dict()}
    lines = [f"seed           {cfg.seed}", f"verdict        {verdict.status}", f"nodes          {verdict.nodes}"]
    if verdict.solutions is not None:
        lines.append(f"solutions      {verdict.solutions}")
    if verdict.reason:
        lines.append(f"reason         {verdict.reason}")
    _emit(cfg, payload, "\n".join(lines) + "\n")
    return EXIT_BUDGET if verdict.status == oracle.BUDGET else EXIT_OK


COMMANDS = {
    "gen": cmd_gen,
    "pack": cmd_pack,
    "verify": cmd_verify,
    "render": cmd_render,
    "bounds": cmd_bounds,
    "oracle": cmd_oracle,
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", dest="fmt", choices=("json", "table"), default="json")
    common.add_argument("--seed", type=int, default=0, help="recorded in every output")
    common.add_argument("--out", help="write output here instead of stdout")

    ap = argparse.ArgumentParser(prog="caterpack", description="Caterpillar packings with few crossings.")
    sub = ap.add_subparsers(dest="subcommand", required=True)

    g = sub.add_parser("gen", parents=[common], help="generate a caterpillar")
    g.add_argument("--delta", type=int)
    g.add_argument("--sigma", type=int)
    g.add_argument("--center", action="store_true", help="caterpillar with a center of degree n-h")
    g.add_argument("--n", type=int)
    g.add_argument("--h", type=int)

    pk = sub.add_parser("pack", parents=[common], help="build and verify a packing layout")
    pk.add_argument("--scheme", choices=("place", "mixed", "divisible", "three2planar"), default="place")
    pk.add_argument("--delta", type=int)
    pk.add_argument("--sigma", type=int)
    pk.add_argument("--h", type=int)
    pk.add_argument("--deltas", type=_int_list)
    pk.add_argument("--n", type=int)
    pk.add_argument("--side", choices=SIDES, default=INNER)
    pk.add_argument("--unchecked", action="store_true", help="skip the constructor's own checks")
    pk.add_argument("--budget", type=int, help="node budget for the three2planar search")

    v = sub.add_parser("verify", parents=[common], help="crossing report for a layout file")
    v.add_argument("layout", help="layout JSON file, or - for stdin")
    v.add_argument("--against-bounds", action="store_true")

    r = sub.add_parser("render", parents=[common], help="draw a layout as SVG")
    r.add_argument("layout")
    r.add_argument("svg", nargs="?")

    b = sub.add_parser("bounds", parents=[common], help="evaluate the crossing bounds")
    b.add_argument("--n", type=int, required=True)
    b.add_argument("--deltas", type=_int_list, required=True)
    b.add_argument("--h", type=int)
    b.add_argument("--delta-j", type=int, default=1)

    o = sub.add_parser("oracle", parents=[common], help="exhaustive placement search")
    o.add_argument("--copies", type=int)
    o.add_argument("--delta", type=int)
    o.add_argument("--sigma", type=int)
    o.add_argument("--caterpillars", help="JSON file with a list of caterpillars")
    o.add_argument("--mode", choices=("exists", "count"), default="exists")
    o.add_argument("--budget", type=int, help="node budget")
    o.add_argument("--time-budget", type=float)
    return ap


def main(argv: Optional[list[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    params = {k: v for k, v in vars(args).items() if k not in ("subcommand", "fmt", "seed", "out")}
    cfg = RunConfig(args.subcommand, params, args.out, args.fmt, args.seed)
    try:
        return COMMANDS[cfg.subcommand](cfg)
    except _Usage as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except InfeasibleError as exc:
        print(f"infeasible: {'; '.join(exc.conditions)}", file=sys.stderr)
        return EXIT_INFEASIBLE
    except (VerificationError, ConstructionError, PreconditionError) as exc:
        print(f"verification failed: {exc}", file=sys.stderr)
        return EXIT_VERIFY
    except ParameterError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except CaterpackError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
