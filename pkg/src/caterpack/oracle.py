"""Independent brute-force ground truth for small instances.

Nothing here calls the constructors in :mod:`caterpack.packing` or the
interleaving counter in :mod:`caterpack.verify`.
"""
from __future__ import annotations

import itertools
import math
import time
from dataclasses import dataclass
from typing import Optional, Sequence

import numpy as np

from .caterpillar import Caterpillar, make_regular_caterpillar, placement_conditions
from .errors import DegenerateGeometryError, InfeasibleError, ParameterError
from .layout import OUTER, norm_edge, zigzag_drawing

EXISTS = "exists"
IMPOSSIBLE = "impossible"
BUDGET = "budget-exhausted"


@dataclass
class SearchInstance:
    caterpillars: list[Caterpillar]
    mode: str = "exists"  # or "count"
    node_budget: int = 50_000_000
    time_budget: Optional[float] = None

    def __post_init__(self):
        if not self.caterpillars:
            raise ParameterError("need at least one caterpillar")
        if len({c.n for c in self.caterpillars}) != 1:
            raise ParameterError("all caterpillars must have the same vertex count")
        if self.mode not in ("exists", "count"):
            raise ParameterError("mode must be 'exists' or 'count'")
        if self.node_budget <= 0 or (self.time_budget is not None and self.time_budget <= 0):
            raise ParameterError("budgets must be positive")

    @property
    def n(self) -> int:
        return self.caterpillars[0].n


@dataclass
class Verdict:
    status: str
    certificate: Optional[list[list[int]]] = None  # per caterpillar: vertex -> slot
    nodes: int = 0
    solutions: Optional[int] = None
    reason: str = ""

    def to_dict(self) -> dict:
        d = {"status": self.status, "nodes": self.nodes}
        if self.certificate is not None:
            d["certificate"] = self.certificate
        if self.solutions is not None:
            d["solutions"] = self.solutions
        if self.reason:
            d["reason"] = self.reason
        return d


class _OutOfBudget(Exception):
    pass


def _placement_order(c: Caterpillar) -> list[int]:
    """Spine in path order, then leaves; every vertex after the first has a placed neighbour."""
    order = list(c.spine)
    for ls in c.leaves:
        order.extend(ls)
    return order


def brute_force_placement_exists(inst: SearchInstance) -> Verdict:
    """Exhaustive search for edge-disjoint spanning embeddings of all caterpillars.

    The host graph is any simple graph on n slots. The first caterpillar is
    pinned to the identity map (host labels are arbitrary), and consecutive
    identical caterpillars are ordered by the slot of their first vertex.
    ``impossible`` is only reported after the whole reduced space is exhausted.
    """
    cats = inst.caterpillars
    n = inst.n
    h = len(cats)
    counting = inst.mode == "count"

    if h * (n - 1) > n * (n - 1) // 2:
        return Verdict(IMPOSSIBLE, reason="more edges than any simple host on n vertices")
    for c in cats:
        if c.max_degree() > n - h:
            return Verdict(IMPOSSIBLE, reason="a vertex degree exceeds n-h")

    adj = [c.adjacency() for c in cats]
    deg = [c.degrees() for c in cats]
    orders = [_placement_order(c) for c in cats]
    same_as_prev = [False] + [cats[i] == cats[i - 1] for i in range(1, h)]

    used = [0] * n  # host adjacency bitmasks
    load = [0] * n  # committed host degree per slot
    maps = [[-1] * n for _ in range(h)]
    for v in range(n):
        maps[0][v] = v
        load[v] += deg[0][v]
        for w in adj[0][v]:
            used[v] |= 1 << w

    nodes = 0
    solutions = 0
    deadline = None if inst.time_budget is None else time.monotonic() + inst.time_budget
    found: list[list[list[int]]] = []

    # every slot ends at degree <= n-1; total shortfall is fixed by the edge count
    slack2 = n * (n - 1) - 2 * sum(len(c.edges()) for c in cats)
    max_after = [0] * (h + 1)  # largest vertex degree among copies ci..h-1
    for ci in range(h - 1, -1, -1):
        max_after[ci] = max(max_after[ci + 1], max(deg[ci]))

    def place(ci: int, idx: int, taken: int) -> bool:
        nonlocal nodes, solutions
        if ci == h:
            if counting:
                solutions += 1
                if not found:
                    found.append([m[:] for m in maps])
                return False
            found.append([m[:] for m in maps])
            return True
        if idx == n:
            return place(ci + 1, 0, 0)
        nodes += 1
        if nodes > inst.node_budget or (deadline is not None and nodes % 4096 == 0 and time.monotonic() > deadline):
            raise _OutOfBudget
        v = orders[ci][idx]
        dv = deg[ci][v]
        later = h - ci - 1
        mp = maps[ci]
        placed_nbrs = [mp[w] for w in adj[ci][v] if mp[w] >= 0]
        lo = 0
        if idx == 0 and same_as_prev[ci]:
            lo = maps[ci - 1][v]
        for s in range(lo, n):
            if taken >> s & 1:
                continue
            if load[s] + dv + later > n - 1:
                continue
            if any(used[s] >> t & 1 for t in placed_nbrs):
                continue
            # upper bound on the final degree of s: this vertex plus the largest later degrees
            ub = load[s] + dv + later * max_after[ci + 1]
            if n - 1 - ub > slack2:
                continue
            mp[v] = s
            load[s] += dv
            for t in placed_nbrs:
                used[s] |= 1 << t
                used[t] |= 1 << s
            if place(ci, idx + 1, taken | 1 << s):
                return True
            for t in placed_nbrs:
                used[s] &= ~(1 << t)
                used[t] &= ~(1 << s)
            load[s] -= dv
            mp[v] = -1
        return False

    try:
        place(1, 0, 0)
    except _OutOfBudget:
        return Verdict(BUDGET, nodes=nodes, solutions=solutions if counting else None)
    if counting:
        status = EXISTS if solutions else IMPOSSIBLE
        return Verdict(status, found[0] if found else None, nodes, solutions)
    if found:
        return Verdict(EXISTS, found[0], nodes)
    return Verdict(IMPOSSIBLE, nodes=nodes, reason="search space exhausted")


def copies_instance(delta: int, sigma: int, h: int, **kw) -> SearchInstance:
    cat = make_regular_caterpillar(delta, sigma)
    return SearchInstance([cat] * h, **kw)


def certificate_edges(inst: SearchInstance, certificate: Sequence[Sequence[int]]) -> list[list[tuple[int, int]]]:
    return [
        [norm_edge(m[a], m[b]) for a, b in c.edges()]
        for c, m in zip(inst.caterpillars, certificate)
    ]


# --- geometric crossing oracle ----------------------------------------------------

_EPS = 1e-9


def _angle(i: int, n: int) -> float:
    return -2.0 * math.pi * i / n


def _outer_polylines(edges: list[tuple[int, int]], n: int) -> list[np.ndarray]:
    """Bracket-shaped curves outside the circle, one per outer edge.

    Each curve rises radially from one endpoint, follows the shorter arc at
    its own radius and drops radially to the other endpoint. Radii grow with
    arc length so nested arcs stay nested.
    """
    sub = max(1, math.ceil(math.pi / (0.1 * n)))
    spans = []
    for a, b in edges:
        ccw = (b - a) % n
        if ccw < n - ccw or (ccw == n - ccw and a < b):
            first, length = a, ccw
        else:
            first, length = b, n - ccw
        spans.append((length, first))
    rank = {s: r for r, s in enumerate(sorted(set(spans)))}
    ratio = 1.0 / math.cos(math.pi / (n * sub)) + 0.005
    out = []
    for length, first in spans:
        radius = ratio ** (rank[(length, first)] + 1)
        th0 = _angle(first, n)
        step = _angle(1, n) / sub
        pts = [(math.cos(th0), math.sin(th0))]
        angles = [th0] + [th0 + (k + 0.5) * step for k in range(length * sub)] + [th0 + length * sub * step]
        pts.extend((radius * math.cos(t), radius * math.sin(t)) for t in angles)
        th1 = angles[-1]
        pts.append((math.cos(th1), math.sin(th1)))
        out.append(np.array(pts))
    return out


def _segments_cross(P: np.ndarray, Q: np.ndarray) -> int:
    """Number of proper intersections between polylines P and Q."""
    p1, p2 = P[:-1, None, :], P[1:, None, :]
    q1, q2 = Q[None, :-1, :], Q[None, 1:, :]

    def orient(a, b, c):
        return (b[..., 0] - a[..., 0]) * (c[..., 1] - a[..., 1]) - (b[..., 1] - a[..., 1]) * (c[..., 0] - a[..., 0])

    d1 = orient(q1, q2, p1)
    d2 = orient(q1, q2, p2)
    d3 = orient(p1, p2, q1)
    d4 = orient(p1, p2, q2)
    # bounding boxes of the segment pairs
    box = (
        (np.minimum(p1[..., 0], p2[..., 0]) <= np.maximum(q1[..., 0], q2[..., 0]) + _EPS)
        & (np.minimum(q1[..., 0], q2[..., 0]) <= np.maximum(p1[..., 0], p2[..., 0]) + _EPS)
        & (np.minimum(p1[..., 1], p2[..., 1]) <= np.maximum(q1[..., 1], q2[..., 1]) + _EPS)
        & (np.minimum(q1[..., 1], q2[..., 1]) <= np.maximum(p1[..., 1], p2[..., 1]) + _EPS)
    )
    near = box & (
        (np.abs(d1) < _EPS) | (np.abs(d2) < _EPS) | (np.abs(d3) < _EPS) | (np.abs(d4) < _EPS)
    )
    if near.any():
        raise DegenerateGeometryError("touching or collinear segments within tolerance")
    # disjoint boxes first: collinear far-apart segments have noise-level orientations
    proper = box & (np.sign(d1) != np.sign(d2)) & (np.sign(d3) != np.sign(d4))
    return int(proper.sum())


def geometric_crossing_oracle(layout):
    """Crossing report from explicit coordinates.

    Position i sits at angle -2*pi*i/n on the unit circle. Inner edges are
    straight chords; outer edges are polylines outside the circle. Pairs of
    edges sharing an endpoint are not tested.
    """
    from .verify import CrossingReport  # report type only

    n = layout.n
    if n > 1000:
        raise ParameterError("geometric oracle supports n <= 1000")
    rows = []
    for d in layout.drawings:
        for (a, b), s in zip(d.edges, d.sides):
            rows.append((norm_edge(a, b), s))
    keys = [e for e, _ in rows]
    if len(set(keys)) != len(keys):
        raise ParameterError("geometric oracle needs a layout without multi-edges")
    pts = {i: (math.cos(_angle(i, n)), math.sin(_angle(i, n))) for i in range(n)}
    outer_idx = [i for i, (_, s) in enumerate(rows) if s == OUTER]
    curves: list[np.ndarray] = [np.array([pts[e[0]], pts[e[1]]]) for e, _ in rows]
    for i, poly in zip(outer_idx, _outer_polylines([rows[i][0] for i in outer_idx], n)):
        curves[i] = poly
    boxes = np.array([[c[:, 0].min(), c[:, 0].max(), c[:, 1].min(), c[:, 1].max()] for c in curves]) if curves else np.zeros((0, 4))

    counts = [0] * len(rows)
    for i, j in itertools.combinations(range(len(rows)), 2):
        (a, b), (c, d) = rows[i][0], rows[j][0]
        if len({a, b, c, d}) < 4:
            continue
        bi, bj = boxes[i], boxes[j]
        if bi[1] < bj[0] - _EPS or bj[1] < bi[0] - _EPS or bi[3] < bj[2] - _EPS or bj[3] < bi[2] - _EPS:
            continue
        x = _segments_cross(curves[i], curves[j])
        counts[i] += x
        counts[j] += x
    per_edge = {e: c for (e, _), c in zip(rows, counts)}
    deg = [0] * n
    for (a, b), _ in rows:
        deg[a] += 1
        deg[b] += 1
    return CrossingReport(per_edge, max(counts, default=0), [], deg)


# --- tightness probe -------------------------------------------------------------


def _chords_cross(e, f) -> bool:
    a, b = e
    c, d = f
    if len({a, b, c, d}) < 4:
        return False
    return (a < c < b) != (a < d < b)


def _max_crossings(edge_lists: list[list[tuple[int, int]]]) -> int:
    edges = [e for lst in edge_lists for e in lst]
    cnt = [0] * len(edges)
    for i, j in itertools.combinations(range(len(edges)), 2):
        if _chords_cross(edges[i], edges[j]):
            cnt[i] += 1
            cnt[j] += 1
    return max(cnt, default=0)


def min_k_over_offsets(delta: int, sigma: int, h: int) -> tuple[tuple[int, ...], int]:
    """Smallest k over every rotation schedule with pairwise gaps inside the safe range.

    All drawings lie on the same side. The first offset is pinned to 0.
    """
    bad = placement_conditions(delta, sigma, h)
    if bad:
        raise InfeasibleError(bad)
    cat = make_regular_caterpillar(delta, sigma)
    n = cat.n
    if n > 20 or h > 4:
        raise ParameterError("search limited to n <= 20 and h <= 4")
    limit = (n - (delta - 1) * (sigma % 2)) // 2  # gaps must stay strictly below this
    base = zigzag_drawing(cat, 0)
    base_edges = [norm_edge(a, b) for a, b in base.edges]
    best: Optional[tuple[tuple[int, ...], int]] = None
    for rest in itertools.combinations(range(1, limit), h - 1):
        offs = (0,) + rest
        lists = [[norm_edge((a + j) % n, (b + j) % n) for a, b in base_edges] for j in offs]
        flat = [e for lst in lists for e in lst]
        if len(set(flat)) != len(flat):
            continue
        k = _max_crossings(lists)
        if best is None or k < best[1]:
            best = (offs, k)
    if best is None:
        raise InfeasibleError(["no admissible offset tuple"])
    return best
