"""Exact checks on packing layouts and the closed-form crossing bounds.

Two chords drawn on the same side of the circle cross iff their endpoints
interleave; chords on opposite sides never cross, and chords sharing an
endpoint never cross.
"""
from __future__ import annotations

import bisect
import math
import os
from collections import Counter
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import NamedTuple, Optional, Sequence

import numpy as np

from .errors import ParameterError, PreconditionError
from .layout import OUTER, ConvexDrawing, ending_offset, norm_edge

# k-planar edge density constant 3.81 squared, kept as printed (not 3.81**2)
DENSITY_CONST = Fraction(146, 10)
TREE_CONST = 4 * DENSITY_CONST  # 58.4


def _drawings(layout) -> Sequence[ConvexDrawing]:
    if isinstance(layout, ConvexDrawing):
        return [layout]
    return layout.drawings


def _n(layout) -> int:
    return layout.n


@dataclass
class CrossingReport:
    per_edge: dict[tuple[int, int], int]
    k: int
    multi_edges: list[tuple[int, int]]
    degrees: list[int]

    @property
    def total(self) -> int:
        return sum(self.per_edge.values()) // 2

    def to_dict(self) -> dict:
        return {
            "k": self.k,
            "multi_edges": [list(e) for e in self.multi_edges],
            "per_edge": [[a, b, c] for (a, b), c in sorted(self.per_edge.items())],
            "degrees": list(self.degrees),
        }

    @classmethod
    def from_dict(cls, data: dict) -> "CrossingReport":
        per_edge = {(a, b): c for a, b, c in data["per_edge"]}
        return cls(per_edge, data["k"], [tuple(e) for e in data["multi_edges"]], data["degrees"])


# --- multi-edges and host graph -------------------------------------------------


def has_multi_edges(layout) -> list[tuple[int, int]]:
    """Unordered position pairs covered by two or more edges of the layout."""
    counts = Counter(norm_edge(a, b) for d in _drawings(layout) for a, b in d.edges)
    return sorted(e for e, c in counts.items() if c > 1)


@dataclass
class HostGraph:
    degrees: list[int]
    simple: bool
    overfull: list[int]  # positions with degree > n-1
    spanning: bool
    edge_count: int


def is_spanning(d: ConvexDrawing) -> bool:
    """The drawing maps its caterpillar bijectively onto all positions."""
    if d.assign:
        return sorted(d.assign) == list(range(d.n))
    covered = {p for e in d.edges for p in e}
    return len(covered) == d.n and len(d.edges) == d.n - 1


def host_graph(layout) -> HostGraph:
    n = _n(layout)
    deg = [0] * n
    edges = set()
    for d in _drawings(layout):
        for a, b in d.edges:
            deg[a] += 1
            deg[b] += 1
            edges.add(norm_edge(a, b))
    multi = has_multi_edges(layout)
    return HostGraph(
        degrees=deg,
        simple=not multi,
        overfull=[p for p in range(n) if deg[p] > n - 1],
        spanning=all(is_spanning(d) for d in _drawings(layout)),
        edge_count=len(edges),
    )


# --- crossing counting -------------------------------------------------------------


def _edge_table(layout):
    rows = []
    for di, d in enumerate(_drawings(layout)):
        for (a, b), s in zip(d.edges, d.sides):
            a, b = norm_edge(a, b)
            rows.append((a, b, s == OUTER, di))
    return rows


def _threads() -> int:
    try:
        return max(1, int(os.environ.get("CATERPACK_THREADS", "1")))
    except ValueError:
        return 1


def _pairwise_counts(rows) -> np.ndarray:
    if not rows:
        return np.zeros(0, dtype=np.int64)
    arr = np.array([r[:3] for r in rows], dtype=np.int64)
    A, B, S = arr[:, 0], arr[:, 1], arr[:, 2]

    def chunk(lo: int, hi: int) -> np.ndarray:
        a, b, s = A[lo:hi, None], B[lo:hi, None], S[lo:hi, None]
        c_in = (a < A) & (A < b)
        d_in = (a < B) & (B < b)
        disjoint = (a != A) & (a != B) & (b != A) & (b != B)
        return ((c_in ^ d_in) & disjoint & (s == S)).sum(axis=1)

    m = len(rows)
    step = 512
    bounds = [(lo, min(m, lo + step)) for lo in range(0, m, step)]
    workers = _threads()
    if workers > 1 and len(bounds) > 1:
        with ThreadPoolExecutor(workers) as ex:
            parts = list(ex.map(lambda lh: chunk(*lh), bounds))
    else:
        parts = [chunk(lo, hi) for lo, hi in bounds]
    return np.concatenate(parts)


class _Fenwick:
    def __init__(self, size: int):
        self.t = [0] * (size + 1)

    def add(self, i: int) -> None:
        i += 1
        while i < len(self.t):
            self.t[i] += 1
            i += i & -i

    def prefix(self, i: int) -> int:
        """Sum over indices < i."""
        s = 0
        while i > 0:
            s += self.t[i]
            i -= i & -i
        return s


def _sweep_side(chords: list[tuple[int, int]], n: int) -> list[int]:
    """Per-chord crossing counts for one side in O(m log m)."""
    deg = [0] * n
    nbrs: list[list[int]] = [[] for _ in range(n)]
    for a, b in chords:
        deg[a] += 1
        deg[b] += 1
        nbrs[a].append(b)
        nbrs[b].append(a)
    for lst in nbrs:
        lst.sort()
    prefix = [0]
    for x in deg:
        prefix.append(prefix[-1] + x)

    # nested[i]: chords (c, d) with a < c and d < b
    nested = [0] * len(chords)
    by_start = sorted(range(len(chords)), key=lambda i: -chords[i][0])
    fw = _Fenwick(n)
    inserted = sorted(chords, key=lambda e: -e[0])
    ptr = 0
    for i in by_start:
        a, b = chords[i]
        while ptr < len(inserted) and inserted[ptr][0] > a:
            fw.add(inserted[ptr][1])
            ptr += 1
        nested[i] = fw.prefix(b)

    out = []
    for i, (a, b) in enumerate(chords):
        inside = prefix[b] - prefix[a + 1]
        touching = 0
        for end in (a, b):
            lst = nbrs[end]
            touching += bisect.bisect_left(lst, b) - bisect.bisect_right(lst, a)
        out.append(inside - 2 * nested[i] - touching)
    return out


def _sweep_counts(rows, n: int) -> np.ndarray:
    res = np.zeros(len(rows), dtype=np.int64)
    for outer in (False, True):
        idx = [i for i, r in enumerate(rows) if r[2] == outer]
        counts = _sweep_side([rows[i][:2] for i in idx], n)
        res[idx] = counts
    return res


def crossing_counts(layout, method: str = "pairwise") -> CrossingReport:
    """Exact per-edge crossing counts of the union drawing.

    ``method`` is ``"pairwise"`` (all edge pairs) or ``"sweep"`` (sorted
    sweep with a Fenwick tree); both give identical reports.
    """
    multi = has_multi_edges(layout)
    if multi:
        raise PreconditionError(f"layout has multi-edges: {multi[:5]}")
    rows = _edge_table(layout)
    if method == "pairwise":
        counts = _pairwise_counts(rows)
    elif method == "sweep":
        counts = _sweep_counts(rows, _n(layout))
    else:
        raise ParameterError(f"unknown method {method!r}")
    per_edge = {(r[0], r[1]): int(c) for r, c in zip(rows, counts)}
    return CrossingReport(
        per_edge=per_edge,
        k=max(per_edge.values(), default=0),
        multi_edges=[],
        degrees=host_graph(layout).degrees,
    )


def k_of(layout, method: str = "pairwise") -> int:
    return crossing_counts(layout, method).k


def crossings_between(d1: ConvexDrawing, d2: ConvexDrawing) -> dict[tuple[int, int], int]:
    """For every edge of either drawing, how many edges of the other drawing cross it."""
    rows1 = [(*norm_edge(a, b), s) for (a, b), s in zip(d1.edges, d1.sides)]
    rows2 = [(*norm_edge(a, b), s) for (a, b), s in zip(d2.edges, d2.sides)]
    out: dict[tuple[int, int], int] = {}
    for mine, other in ((rows1, rows2), (rows2, rows1)):
        for a, b, s in mine:
            c = 0
            for x, y, t in other:
                if s != t or len({a, b, x, y}) < 4:
                    continue
                if (a < x < b) != (a < y < b):
                    c += 1
            out[(a, b)] = out.get((a, b), 0) + c
    return out


def interleave(e: tuple[int, int], f: tuple[int, int]) -> bool:
    a, b = norm_edge(*e)
    c, d = norm_edge(*f)
    if len({a, b, c, d}) < 4:
        return False
    return (a < c < b) != (a < d < b)


# --- structural checks --------------------------------------------------------------


def spine_index_check(d: ConvexDrawing) -> bool:
    """Check spine vertex positions against the starting and ending points.

    Upper-part spine vertices must sit at ``start + c(Delta-1)``, lower-part
    ones at ``end + d(Delta-1)``, and every spine edge must join an upper and
    a lower spine vertex with ``c + d`` in ``{ceil(sigma/2)-1, ceil(sigma/2)}``.
    """
    n = d.n
    deg = Counter(p for e in d.edges for p in e)
    spine = {p for p, k in deg.items() if k > 1}
    delta = d.delta if d.delta is not None else max(deg.values())
    sigma = d.sigma if d.sigma is not None else len(spine)
    if len(spine) != sigma or delta < 2:
        return False
    step = delta - 1
    r = ending_offset(n, delta, sigma)
    coeff: dict[int, tuple[str, int]] = {}
    for p in spine:
        rel = (p - d.start) % n
        if rel < r:
            part, off = "upper", rel
        else:
            part, off = "lower", rel - r
        if off % step:
            return False
        coeff[p] = (part, off // step)
    allowed = {math.ceil(sigma / 2) - 1, math.ceil(sigma / 2)}
    for a, b in d.edges:
        if a in spine and b in spine:
            (pa, ca), (pb, cb) = coeff[a], coeff[b]
            if pa == pb or ca + cb not in allowed:
                return False
    return True


def tree_canonical_form(n: int, edges) -> str:
    """AHU canonical string of an unrooted tree (rooted at its center)."""
    adj: list[list[int]] = [[] for _ in range(n)]
    for a, b in edges:
        adj[a].append(b)
        adj[b].append(a)
    if n == 1:
        return "()"
    degree = [len(x) for x in adj]
    layer = [v for v in range(n) if degree[v] <= 1]
    remaining = n
    while remaining > 2:
        remaining -= len(layer)
        nxt = []
        for v in layer:
            for w in adj[v]:
                degree[w] -= 1
                if degree[w] == 1:
                    nxt.append(w)
        layer = nxt
    centers = layer

    def encode(root: int) -> str:
        # iterative post-order to avoid recursion limits on long paths
        parent = {root: -1}
        order = [root]
        for v in order:
            for w in adj[v]:
                if w != parent[v]:
                    parent[w] = v
                    order.append(w)
        code: dict[int, str] = {}
        for v in reversed(order):
            kids = sorted(code[w] for w in adj[v] if w != parent[v])
            code[v] = "(" + "".join(kids) + ")"
        return code[root]

    return min(encode(c) for c in centers)


def drawing_is_copy_of(d: ConvexDrawing, cat) -> bool:
    """Whether the drawing's edge set is a tree isomorphic to ``cat``."""
    if len(d.edges) != cat.n - 1 or d.n != cat.n:
        return False
    return tree_canonical_form(d.n, d.edges) == tree_canonical_form(cat.n, cat.edges())


# --- closed-form bounds -----------------------------------------------------------


def bound_pair_crossings(delta1: int, delta2: int, delta_j: int) -> int:
    return 2 * (delta1 + delta2) + 4 * delta_j


def bound_placement_crossings(delta: int, h: int) -> int:
    return (4 * delta - 2) * h + 2 * h * h - 4 * delta


def bound_mixed_crossings(delta1: int, h: int) -> int:
    return (delta1 + 2) * h * h + 4 * delta1 * (h - 1)


class LowerBound(NamedTuple):
    general: Fraction
    trees: Optional[Fraction]

    @property
    def min_k(self) -> int:
        """Smallest integer k compatible with every bound."""
        best = max(self.general, self.trees or Fraction(0))
        return max(1, math.ceil(best)) if best > 0 else 0


def lower_bound_k(n: int, m: int, h: int, trees: bool = False) -> LowerBound:
    """Lower bound h^2 m^2 / (14.6 n^2) on k, plus h^2 / 58.4 for trees."""
    if min(n, m, h) < 1:
        raise ParameterError("need n, m, h >= 1")
    general = Fraction(h * h * m * m) / (DENSITY_CONST * n * n)
    tree_bound = None
    if trees:
        if m != n - 1:
            raise ParameterError(f"a tree on {n} vertices has {n - 1} edges, got m={m}")
        tree_bound = Fraction(h * h) / TREE_CONST
    return LowerBound(general, tree_bound)


def lower_bound_trees(h: int) -> Fraction:
    return Fraction(h * h) / TREE_CONST


# Small-h refinement for the center caterpillar: h -> (min n, forced k, host subgraph)
SMALL_H_BOUNDS = {
    3: (10, 2, "K_{3,7} is not 1-planar"),
    4: (11, 3, "K_{4,7} is not 2-planar"),
    5: (24, 5, "K_{5,19} is not 4-planar"),
}


def small_h_lower_bound(h: int, n: Optional[int] = None) -> int:
    """Forced k for an h-placement of the center caterpillar, h in {3, 4, 5}."""
    if h not in SMALL_H_BOUNDS:
        raise ParameterError("refined bound known only for h = 3, 4, 5")
    min_n, k, _ = SMALL_H_BOUNDS[h]
    if n is not None and n < min_n:
        raise ParameterError(f"bound needs n >= {min_n}")
    return k


@dataclass
class BoundSheet:
    n: int
    deltas: list[int]
    h: int
    delta_j: int
    pair_bound: int
    placement_bound: int
    mixed_bound: int
    lower_bound_general: Fraction
    lower_bound_trees: Fraction
    notes: list[str] = field(default_factory=list)

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "deltas": self.deltas,
            "h": self.h,
            "delta_j": self.delta_j,
            "pair_bound": self.pair_bound,
            "placement_bound": self.placement_bound,
            "mixed_bound": self.mixed_bound,
            "lower_bound_general": str(self.lower_bound_general),
            "lower_bound_trees": str(self.lower_bound_trees),
            "notes": self.notes,
        }


# Range printed alongside the placement bound for h = 3, 4 <= Delta <= 7.
QUOTED_SMALL_RANGE = (86, 137)


def bound_sheet(n: int, deltas: Sequence[int], h: Optional[int] = None, delta_j: int = 1) -> BoundSheet:
    deltas = list(deltas)
    if not deltas:
        raise ParameterError("need at least one delta")
    h = h if h is not None else len(deltas)
    d1 = deltas[0]
    d2 = deltas[1] if len(deltas) > 1 else d1
    sheet = BoundSheet(
        n=n,
        deltas=deltas,
        h=h,
        delta_j=delta_j,
        pair_bound=bound_pair_crossings(d1, d2, delta_j),
        placement_bound=bound_placement_crossings(d1, h),
        mixed_bound=bound_mixed_crossings(d1, h),
        lower_bound_general=lower_bound_k(n, n - 1, h).general,
        lower_bound_trees=lower_bound_trees(h),
    )
    if h == 3 and 4 <= d1 <= 7:
        lo, hi = bound_placement_crossings(4, 3), bound_placement_crossings(7, 3)
        mlo, mhi = bound_mixed_crossings(4, 3), bound_mixed_crossings(7, 3)
        sheet.notes.append(
            f"published range {list(QUOTED_SMALL_RANGE)} for h=3, 4<=delta<=7 "
            f"does not match the placement formula, which gives {lo}..{hi}; "
            f"it coincides with the mixed formula ({mlo}..{mhi})"
        )
    return sheet


def pairwise_max(layout) -> dict[tuple[int, int], int]:
    """Max per-edge crossing count contributed by each ordered pair of drawings."""
    ds = _drawings(layout)
    out = {}
    for i in range(len(ds)):
        for j in range(i + 1, len(ds)):
            c = crossings_between(ds[i], ds[j])
            out[(i, j)] = max(c.values(), default=0)
    return out
