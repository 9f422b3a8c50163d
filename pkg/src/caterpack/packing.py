"""Packing layouts built by rotation and offset schedules of zig-zag drawings."""
from __future__ import annotations

import json
import math
from dataclasses import dataclass, replace
from typing import Optional, Sequence

import numpy as np

from . import verify
from .caterpillar import (
    Caterpillar,
    make_regular_caterpillar,
    placement_conditions,
    regular_vertex_count,
    spine_length_for,
)
from .errors import ConstructionError, InfeasibleError, ParameterError, VerificationError
from .layout import INNER, OUTER, SIDES, ConvexDrawing, drawing_from_assignment, norm_edge, rotate, zigzag_drawing


@dataclass(frozen=True)
class PackingLayout:
    """Drawings of h caterpillars on one shared set of n circle positions."""

    n: int
    drawings: tuple[ConvexDrawing, ...]
    offsets: tuple[int, ...]
    scheme: str = "custom"

    def __post_init__(self):
        object.__setattr__(self, "drawings", tuple(self.drawings))
        object.__setattr__(self, "offsets", tuple(self.offsets))
        if any(d.n != self.n for d in self.drawings):
            raise ParameterError("all drawings must share the same position count")
        if len(self.offsets) != len(self.drawings):
            raise ParameterError("one offset per drawing required")

    @property
    def h(self) -> int:
        return len(self.drawings)

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "scheme": self.scheme,
            "offsets": list(self.offsets),
            "drawings": [d.to_dict() for d in self.drawings],
        }

    @classmethod
    def from_dict(cls, data: dict) -> "PackingLayout":
        try:
            n = int(data["n"])
            drawings = tuple(ConvexDrawing.from_dict(d) for d in data["drawings"])
        except (KeyError, TypeError, ValueError) as exc:
            raise ParameterError(f"malformed layout JSON: {exc}") from exc
        offsets = tuple(data.get("offsets") or [d.start for d in drawings])
        return cls(n, drawings, offsets, data.get("scheme", "custom"))

    def to_json(self, **kw) -> str:
        return json.dumps(self.to_dict(), **kw)

    @classmethod
    def from_json(cls, text: str) -> "PackingLayout":
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise ParameterError(f"invalid JSON: {exc}") from exc
        if not isinstance(data, dict):
            raise ParameterError("layout JSON must be an object")
        return cls.from_dict(data)


def check_layout(layout: PackingLayout, k_bound: Optional[int] = None) -> list[str]:
    """Invariant violations of a constructed layout (empty when it is sound)."""
    problems = []
    multi = verify.has_multi_edges(layout)
    if multi:
        problems.append(f"multi-edges {multi[:5]}")
    host = verify.host_graph(layout)
    if not host.spanning:
        problems.append("a drawing is not spanning")
    if host.overfull:
        problems.append(f"host degree exceeds n-1 at {host.overfull}")
    for i, d in enumerate(layout.drawings):
        if d.caterpillar is not None and not verify.drawing_is_copy_of(d, d.caterpillar):
            problems.append(f"drawing {i} is not a copy of its caterpillar")
    if not multi and k_bound is not None:
        k = verify.k_of(layout)
        if k > k_bound:
            problems.append(f"k={k} exceeds bound {k_bound}")
    return problems


def _finish(layout: PackingLayout, k_bound: Optional[int], checked: bool) -> PackingLayout:
    if checked:
        problems = check_layout(layout, k_bound)
        if problems:
            raise VerificationError("; ".join(problems))
    return layout


def place_copies(delta: int, sigma: int, h: int, side: str = INNER, checked: bool = True) -> PackingLayout:
    """h rotated copies of one zig-zag drawing with offsets 0, 1, ..., h-1."""
    bad = placement_conditions(delta, sigma, h)
    if bad:
        raise InfeasibleError(bad)
    cat = make_regular_caterpillar(delta, sigma)
    base = zigzag_drawing(cat, 0, side)
    drawings = [rotate(base, i) for i in range(h)]
    layout = PackingLayout(cat.n, drawings, tuple(range(h)), "place")
    return _finish(layout, verify.bound_placement_crossings(delta, h), checked)


def _realizable_caterpillars(deltas: Sequence[int], n: int) -> list[Caterpillar]:
    cats = []
    for d in deltas:
        sigma = spine_length_for(d, n)
        if sigma is None or sigma < 2:
            raise ParameterError(f"no {d}-regular caterpillar with spine length >= 2 has {n} vertices")
        cats.append(make_regular_caterpillar(d, sigma))
    return cats


def mixed_conditions(deltas: Sequence[int], n: int) -> list[str]:
    h = len(deltas)
    d1 = deltas[0]
    bad = []
    if sum(deltas) > n - 1:
        bad.append(f"sum of deltas <= n-1 fails: {sum(deltas)} > {n - 1}")
    gaps = sum(math.ceil(d / 2) for d in deltas[1:])
    # compare 2 * gaps < n - (d1 - 1) to stay in integers
    if not 2 * gaps < n - (d1 - 1):
        bad.append(
            f"sum_(i>=2) ceil(delta_i/2) < (n-(delta_1-1))/2 fails: {gaps} >= {(n - d1 + 1) / 2:g}"
        )
    if d1 > n - h:
        bad.append(f"delta_1 <= n-h fails: {d1} > {n - h}")
    return bad


def mixed_offsets(deltas: Sequence[int]) -> list[int]:
    offs = [0]
    for d in deltas[1:]:
        offs.append(offs[-1] + math.ceil(d / 2))
    return offs


def pack_mixed(deltas: Sequence[int], n: int, side: str = INNER, checked: bool = True) -> PackingLayout:
    """Packing of Delta_1 >= ... >= Delta_h regular caterpillars with offset gaps ceil(Delta_i/2)."""
    deltas = list(deltas)
    if not deltas:
        raise ParameterError("need at least one delta")
    if any(a < b for a, b in zip(deltas, deltas[1:])):
        raise ParameterError("deltas must be non-increasing")
    cats = _realizable_caterpillars(deltas, n)
    bad = mixed_conditions(deltas, n)
    if bad:
        raise InfeasibleError(bad)
    offs = mixed_offsets(deltas)
    drawings = [zigzag_drawing(c, j % n, side) for c, j in zip(cats, offs)]
    layout = PackingLayout(n, drawings, tuple(offs), "mixed")
    return _finish(layout, verify.bound_mixed_crossings(deltas[0], len(deltas)), checked)


def divisible_conditions(deltas: Sequence[int], n: int) -> list[str]:
    h = len(deltas)
    bad = [f"delta_{i + 1} <= n-h fails: {d} > {n - h}" for i, d in enumerate(deltas) if d > n - h]
    need = 2 * h + deltas[0] - 1
    if n < need:
        bad.append(f"n >= 2h+(delta_1-1) fails: {n} < {need}")
    return bad


def pack_divisible(deltas: Sequence[int], n: int, side: str = INNER, checked: bool = True) -> PackingLayout:
    """Packing where each Delta_i - 1 is a multiple of Delta_(i+1) - 1, offsets 0..h-1."""
    deltas = list(deltas)
    if not deltas:
        raise ParameterError("need at least one delta")
    for a, b in zip(deltas, deltas[1:]):
        if b < 2 or a < b or (a - 1) % (b - 1):
            raise ParameterError(f"need delta_i - 1 to be a multiple of delta_(i+1) - 1; got {a}, {b}")
    cats = _realizable_caterpillars(deltas, n)
    bad = divisible_conditions(deltas, n)
    if bad:
        raise InfeasibleError(bad)
    drawings = [zigzag_drawing(c, i, side) for i, c in enumerate(cats)]
    layout = PackingLayout(n, drawings, tuple(range(len(deltas))), "divisible")
    return _finish(layout, verify.bound_placement_crossings(deltas[0], len(deltas)), checked)


def halve_by_sides(layout: PackingLayout) -> PackingLayout:
    """Put the first ceil(h/2) drawings inside the circle and the rest outside."""
    half = (layout.h + 1) // 2
    drawings = [d.with_side(INNER if i < half else OUTER) for i, d in enumerate(layout.drawings)]
    return replace(layout, drawings=tuple(drawings))


# --- three copies into a 2-planar host --------------------------------------------


def _sequential_assignment(cat: Caterpillar, shift: int) -> list[int]:
    """Each spine vertex followed clockwise by its own leaves, from position ``shift``."""
    n = cat.n
    assign = [0] * n
    pos = shift
    for s, ls in zip(cat.spine, cat.leaves):
        assign[s] = pos % n
        pos += 1
        for leaf in ls:
            assign[leaf] = pos % n
            pos += 1
    return assign


def third_copy_gaps(delta: int, sigma: int) -> list[tuple[int, int, list[int]]]:
    """Free points of the third copy grouped by gap.

    Returns ``(left, right, points)`` triples: spine slots bounding each gap
    clockwise and the positions between them. The last gap wraps from the
    final spine vertex back to the first.
    """
    n = regular_vertex_count(delta, sigma)
    step = delta - 1
    spine_pos = [(i + 1) * step % n for i in range(sigma)]
    gaps = []
    for i in range(sigma):
        left, right = i, (i + 1) % sigma
        lo = spine_pos[left]
        hi = spine_pos[right] if right else spine_pos[0] + n
        gaps.append((left, right, [p % n for p in range(lo + 1, hi)]))
    return gaps


def default_third_split(delta: int, sigma: int) -> list[int]:
    """Per gap, how many leading points attach to the left spine vertex."""
    return [2] * (sigma - 1) + [3]


def _third_copy(cat: Caterpillar, delta: int, owners: Sequence[Sequence[int]], leaf_sides=None) -> ConvexDrawing:
    """Third copy with spine on fixed points and given gap-point owners.

    ``owners[g][t]`` is the spine slot owning point ``t`` of gap ``g``.
    """
    n = cat.n
    sigma = cat.sigma
    step = delta - 1
    assign = [0] * n
    for i, s in enumerate(cat.spine):
        assign[s] = (i + 1) * step % n
    pools: list[list[int]] = [[] for _ in range(sigma)]
    for (left, right, pts), own in zip(third_copy_gaps(delta, sigma), owners):
        for p, o in zip(pts, own):
            pools[o].append(p)
    for i, ls in enumerate(cat.leaves):
        if len(pools[i]) != len(ls):
            raise ConstructionError(f"spine slot {i} gets {len(pools[i])} leaves, needs {len(ls)}")
        for leaf, p in zip(ls, pools[i]):
            assign[leaf] = p
    sides = []
    spine_set = set(cat.spine)
    leaf_side = {}
    if leaf_sides is not None:
        for (left, right, pts), ss in zip(third_copy_gaps(delta, sigma), leaf_sides):
            leaf_side.update(zip(pts, ss))
    for a, b in cat.edges():
        if a in spine_set and b in spine_set:
            sides.append(OUTER)
        else:
            leaf = b if b not in spine_set else a
            sides.append(leaf_side.get(assign[leaf], INNER))
    return drawing_from_assignment(cat, assign, n, sides, start=assign[cat.spine[0]])


def _owners_from_split(delta: int, sigma: int, split: Sequence[int]) -> list[list[int]]:
    out = []
    for (left, right, pts), t in zip(third_copy_gaps(delta, sigma), split):
        out.append([left] * t + [right] * (len(pts) - t))
    return out


def _three_layout(cat: Caterpillar, delta: int, third: ConvexDrawing) -> PackingLayout:
    n = cat.n
    first = drawing_from_assignment(cat, _sequential_assignment(cat, 0), n, OUTER, start=0)
    second = drawing_from_assignment(cat, _sequential_assignment(cat, 1), n, INNER, start=1)
    return PackingLayout(n, (first, second, third), (0, 1, third.start), "three2planar")


def _certified(layout: PackingLayout) -> bool:
    if verify.has_multi_edges(layout):
        return False
    return verify.k_of(layout, "sweep") <= 2


def place_three_2planar(delta: int, sigma: int, checked: bool = True, node_budget: int = 100_000) -> PackingLayout:
    """Three copies of a Delta-regular caterpillar (4 <= Delta <= 7) with k <= 2.

    The first copy goes outside with each spine vertex followed by its
    leaves, the second inside shifted one point clockwise, the third has its
    spine outside on the last leaf points of the first copy and its leaves
    inside. For Delta = 7 the leaves of the third copy are placed by a
    bounded backtracking search and the result is certified by the crossing
    counter.
    """
    if not 4 <= delta <= 7:
        raise ParameterError(f"delta must be in 4..7, got {delta}")
    if sigma < 2:
        raise ParameterError("sigma must be >= 2")
    cat = make_regular_caterpillar(delta, sigma)
    if delta <= 6:
        third = _third_copy(cat, delta, _owners_from_split(delta, sigma, default_third_split(delta, sigma)))
        layout = _three_layout(cat, delta, third)
        return _finish(layout, 2, checked)
    return _search_three(cat, delta, sigma, node_budget)


def _search_three(cat: Caterpillar, delta: int, sigma: int, node_budget: int) -> PackingLayout:
    """Depth-first search over third-copy leaf placements.

    Free points are filled in clockwise order; each takes a spine owner
    (lowest slot first) and a side (inner first), so the first completion
    found is the lexicographically smallest one.
    """
    n = cat.n
    step = delta - 1
    spine_pos = [(i + 1) * step % n for i in range(sigma)]
    base = _three_layout(cat, delta, _third_copy(cat, delta, _owners_from_split(delta, sigma, default_third_split(delta, sigma))))
    first, second, _ = base.drawings
    fixed = [(a, b, s) for d in (first, second) for (a, b), s in zip(d.edges, d.sides)]
    fixed += [(spine_pos[i], spine_pos[i + 1], OUTER) for i in range(sigma - 1)]

    cap = len(fixed) + n
    ea = np.zeros(cap, dtype=np.int64)
    eb = np.zeros(cap, dtype=np.int64)
    side = np.zeros(cap, dtype=bool)  # True = outer
    cnt = np.zeros(cap, dtype=np.int64)
    m = 0
    present: set[tuple[int, int]] = set()

    def hits_of(a: int, b: int, outer: bool) -> np.ndarray:
        c, d = ea[:m], eb[:m]
        ina = (c > a) & (c < b)
        inb = (d > a) & (d < b)
        shared = (c == a) | (c == b) | (d == a) | (d == b)
        return np.nonzero((ina != inb) & ~shared & (side[:m] == outer))[0]

    def push(a: int, b: int, outer: bool, hits: np.ndarray):
        nonlocal m
        a, b = norm_edge(a, b)
        ea[m], eb[m], side[m] = a, b, outer
        cnt[hits] += 1
        cnt[m] = len(hits)
        present.add((a, b))
        m += 1

    def pop(hits: np.ndarray):
        nonlocal m
        m -= 1
        present.discard((int(ea[m]), int(eb[m])))
        cnt[hits] -= 1

    for a, b, sd in fixed:
        a, b = norm_edge(a, b)
        push(a, b, sd == OUTER, hits_of(a, b, sd == OUTER))
    if cnt[:m].max(initial=0) > 2:
        raise ConstructionError(f"fixed part already exceeds 2 crossings for delta={delta}, sigma={sigma}")

    need = [len(ls) for ls in cat.leaves]
    free = [p for _, _, pts in third_copy_gaps(delta, sigma) for p in pts]
    got = [0] * sigma
    chosen: list[tuple[int, int, str]] = []
    nodes = 0

    class _Budget(Exception):
        pass

    def rec(t: int) -> bool:
        nonlocal nodes
        nodes += 1
        if nodes > node_budget:
            raise _Budget
        if t == len(free):
            return True
        p = free[t]
        for o in range(sigma):
            if got[o] >= need[o]:
                continue
            a, b = norm_edge(p, spine_pos[o])
            if (a, b) in present:
                continue
            for sd in SIDES:
                outer = sd == OUTER
                hits = hits_of(a, b, outer)
                if len(hits) > 2 or (len(hits) and cnt[hits].max() >= 2):
                    continue
                push(a, b, outer, hits)
                got[o] += 1
                chosen.append((p, o, sd))
                if rec(t + 1):
                    return True
                chosen.pop()
                got[o] -= 1
                pop(hits)
        return False

    try:
        ok = rec(0)
    except _Budget:
        raise ConstructionError(
            f"no 2-planar third copy found for delta={delta}, sigma={sigma}: "
            f"search budget of {node_budget} nodes exhausted"
        ) from None
    if not ok:
        raise ConstructionError(
            f"no 2-planar third copy exists for delta={delta}, sigma={sigma} "
            f"with the first two copies and the third spine fixed ({nodes} nodes searched)"
        )
    owners = {p: o for p, o, _ in chosen}
    sides = {p: sd for p, _, sd in chosen}
    gaps = third_copy_gaps(delta, sigma)
    third = _third_copy(
        cat, delta,
        [[owners[p] for p in pts] for _, _, pts in gaps],
        leaf_sides=[[sides[p] for p in pts] for _, _, pts in gaps],
    )
    return _finish(_three_layout(cat, delta, third), 2, True)
