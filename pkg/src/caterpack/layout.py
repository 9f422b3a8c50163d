"""Zig-zag drawings of Delta-regular caterpillars on n equally spaced circle points.

Positions are ``0..n-1`` in clockwise order. A chord between positions
``a`` and ``b`` belongs to slope class ``(a + b) mod n``.
"""
from __future__ import annotations

from dataclasses import dataclass, field, replace
from typing import Optional

from .caterpillar import Caterpillar, regularity_of
from .errors import ParameterError, PreconditionError, VerificationError

INNER = "inner"
OUTER = "outer"
SIDES = (INNER, OUTER)

ZIGZAG = "zigzag"
CUSTOM = "custom"


def norm_edge(a: int, b: int) -> tuple[int, int]:
    return (a, b) if a < b else (b, a)


@dataclass(frozen=True)
class ConvexDrawing:
    """One caterpillar drawn on the shared circular position set.

    ``assign[v]`` is the position of vertex ``v``; ``edges`` are position
    pairs listed in the caterpillar's edge order, ``sides[i]`` tells whether
    ``edges[i]`` runs inside or outside the circle.
    """

    n: int
    assign: tuple[int, ...]
    edges: tuple[tuple[int, int], ...]
    sides: tuple[str, ...]
    start: int
    delta: Optional[int] = None
    sigma: Optional[int] = None
    kind: str = CUSTOM
    caterpillar: Optional[Caterpillar] = field(default=None, compare=False, repr=False)

    def __post_init__(self):
        if len(self.edges) != len(self.sides):
            raise ParameterError("one side per edge required")
        if any(s not in SIDES for s in self.sides):
            raise ParameterError(f"sides must be {SIDES}")
        for a, b in self.edges:
            if not (0 <= a < self.n and 0 <= b < self.n) or a == b:
                raise ParameterError(f"bad edge ({a}, {b}) for n={self.n}")

    @property
    def ending(self) -> int:
        return (self.start + ending_offset(self.n, self.delta, self.sigma)) % self.n

    def edge_set(self) -> set[tuple[int, int]]:
        return {norm_edge(a, b) for a, b in self.edges}

    def with_side(self, side: str) -> "ConvexDrawing":
        return replace(self, sides=(side,) * len(self.edges))

    def to_dict(self) -> dict:
        d = {
            "n": self.n,
            "start": self.start,
            "edges": [[a, b, s] for (a, b), s in zip(self.edges, self.sides)],
            "kind": self.kind,
        }
        if self.assign:
            d["assign"] = list(self.assign)
        if self.delta is not None:
            d["delta"] = self.delta
            d["sigma"] = self.sigma
        return d

    @classmethod
    def from_dict(cls, data: dict) -> "ConvexDrawing":
        try:
            n = int(data["n"])
            raw = data["edges"]
            edges = tuple((int(a), int(b)) for a, b, _ in raw)
            sides = tuple(str(s) for _, _, s in raw)
            return cls(
                n=n,
                assign=tuple(data.get("assign", ())),
                edges=edges,
                sides=sides,
                start=int(data.get("start", 0)),
                delta=data.get("delta"),
                sigma=data.get("sigma"),
                kind=data.get("kind", CUSTOM),
            )
        except (KeyError, TypeError, ValueError) as exc:
            raise ParameterError(f"malformed drawing JSON: {exc}") from exc


def ending_offset(n: int, delta: int, sigma: int) -> int:
    """Clockwise distance from the starting point to the ending point."""
    return (n - (delta - 1) * (sigma % 2)) // 2


def drawing_from_assignment(
    cat: Caterpillar, assign: list[int] | tuple[int, ...], n: int, sides, start: int = 0, **kw
) -> ConvexDrawing:
    """Wrap an explicit vertex-to-position map as a drawing.

    ``sides`` is either one side for every edge or a per-edge sequence.
    """
    edges = tuple((assign[a], assign[b]) for a, b in cat.edges())
    if isinstance(sides, str):
        sides = (sides,) * len(edges)
    return ConvexDrawing(
        n=n, assign=tuple(assign), edges=edges, sides=tuple(sides), start=start % n,
        caterpillar=cat, **kw,
    )


def zigzag_order(cat: Caterpillar) -> list[int]:
    """Vertex ids in clockwise order of a zig-zag drawing starting at the first spine end.

    The spine path visits u_1, u_sigma, u_2, u_sigma-1, ... and the gap right
    after u_i holds the leaves of u_(sigma-i+1).
    """
    sigma = cat.sigma
    u = [0] * (sigma + 1)  # 1-based point index -> spine slot in path order
    for k in range(sigma):
        idx = k // 2 + 1 if k % 2 == 0 else sigma - (k - 1) // 2
        u[idx] = k
    order = []
    for i in range(1, sigma + 1):
        order.append(cat.spine[u[i]])
        order.extend(cat.leaves[u[sigma - i + 1]])
    return order


def zigzag_drawing(cat: Caterpillar, start: int = 0, side: str = INNER) -> ConvexDrawing:
    delta = regularity_of(cat)
    if delta is None:
        raise ParameterError("zig-zag drawings need a Delta-regular caterpillar")
    if cat.sigma < 2:
        raise ParameterError("zig-zag drawings need sigma >= 2")
    if side not in SIDES:
        raise ParameterError(f"side must be one of {SIDES}")
    n = cat.n
    if not 0 <= start < n:
        raise ParameterError(f"start must be in [0, {n})")
    assign = [0] * n
    for t, v in enumerate(zigzag_order(cat)):
        assign[v] = (start + t) % n
    return drawing_from_assignment(
        cat, assign, n, side, start=start, delta=delta, sigma=cat.sigma, kind=ZIGZAG
    )


def rotate(d: ConvexDrawing, steps: int) -> ConvexDrawing:
    n = d.n
    ell = steps % n
    return replace(
        d,
        assign=tuple((p + ell) % n for p in d.assign),
        edges=tuple(((a + ell) % n, (b + ell) % n) for a, b in d.edges),
        start=(d.start + ell) % n,
    )


def slope_class(a: int, b: int, n: int) -> int:
    return (a + b) % n


def used_slope_window(d: ConvexDrawing) -> list[int]:
    """Slope classes used by a zig-zag drawing, in circular order.

    The window is the run of Delta consecutive classes ending just before
    ``2 * start``.
    """
    if d.kind != ZIGZAG or d.delta is None:
        raise PreconditionError("slope windows are defined only for zig-zag drawings")
    n = d.n
    used = {slope_class(a, b, n) for a, b in d.edges}
    first = (2 * d.start - d.delta) % n
    window = [(first + t) % n for t in range(d.delta)]
    if used != set(window):
        raise VerificationError(f"slope classes {sorted(used)} are not the window {window}")
    return window


def is_contiguous_window(classes: set[int], n: int) -> bool:
    """Whether a set of residues mod n forms one circular run."""
    if not classes or len(classes) == n:
        return True
    # a circular run has exactly one element whose predecessor is missing
    return sum(1 for c in classes if (c - 1) % n not in classes) == 1


def short_edges(d: ConvexDrawing) -> tuple[tuple[int, int], tuple[int, int]]:
    """The two drawing edges between circularly adjacent positions.

    The first returned edge is the one incident to the starting point.
    """
    n = d.n
    hull = [norm_edge(a, b) for a, b in d.edges if (a - b) % n in (1, n - 1)]
    if len(hull) != 2:
        raise VerificationError(f"expected 2 short edges, found {len(hull)}")
    hull.sort(key=lambda e: d.start not in e)
    return hull[0], hull[1]


def upper_part(d: ConvexDrawing) -> set[int]:
    """Positions of the upper part: from the starting point up to the ending point, exclusive."""
    r = ending_offset(d.n, d.delta, d.sigma)
    return {(d.start + t) % d.n for t in range(r)}
