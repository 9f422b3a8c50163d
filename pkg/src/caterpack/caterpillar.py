"""Caterpillars, Delta-regular caterpillar generation and feasibility predicates."""
from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

from .errors import ParameterError


@dataclass(frozen=True)
class Caterpillar:
    """A tree whose non-leaf vertices form a path.

    Vertex ids are ``0..n-1``. ``spine`` lists the spine vertices in path
    order and ``leaves[i]`` lists the leaves hanging off ``spine[i]``.
    """

    n: int
    spine: tuple[int, ...]
    leaves: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        spine = tuple(self.spine)
        leaves = tuple(tuple(ls) for ls in self.leaves)
        object.__setattr__(self, "spine", spine)
        object.__setattr__(self, "leaves", leaves)
        if len(spine) == 0:
            raise ParameterError("spine must be non-empty")
        if len(leaves) != len(spine):
            raise ParameterError("need one leaf list per spine vertex")
        seen = list(spine) + [v for ls in leaves for v in ls]
        if len(seen) != self.n or sorted(seen) != list(range(self.n)):
            raise ParameterError("every vertex 0..n-1 must appear exactly once")
        # ends of a spine with >= 2 vertices must not themselves be leaves
        if len(spine) >= 2 and (not leaves[0] or not leaves[-1]):
            raise ParameterError("spine end vertices need at least one leaf")
        if len(spine) == 1 and len(leaves[0]) < 2:
            raise ParameterError("a one-vertex spine needs at least two leaves")

    @property
    def sigma(self) -> int:
        return len(self.spine)

    def edges(self) -> list[tuple[int, int]]:
        out = [(a, b) for a, b in zip(self.spine, self.spine[1:])]
        for s, ls in zip(self.spine, self.leaves):
            out.extend((s, leaf) for leaf in ls)
        return out

    def degrees(self) -> list[int]:
        deg = [0] * self.n
        for a, b in self.edges():
            deg[a] += 1
            deg[b] += 1
        return deg

    def adjacency(self) -> list[list[int]]:
        adj: list[list[int]] = [[] for _ in range(self.n)]
        for a, b in self.edges():
            adj[a].append(b)
            adj[b].append(a)
        return adj

    def max_degree(self) -> int:
        return max(self.degrees())

    def to_dict(self) -> dict:
        return {"n": self.n, "spine": list(self.spine), "leaves": [list(ls) for ls in self.leaves]}

    @classmethod
    def from_dict(cls, data: dict) -> "Caterpillar":
        try:
            return cls(int(data["n"]), tuple(data["spine"]), tuple(tuple(x) for x in data["leaves"]))
        except (KeyError, TypeError) as exc:
            raise ParameterError(f"malformed caterpillar JSON: {exc}") from exc

    def to_json(self) -> str:
        return json.dumps(self.to_dict())


@dataclass(frozen=True)
class RegularParams:
    delta: int
    sigma: int

    def __post_init__(self):
        if self.delta < 2:
            raise ParameterError(f"delta must be >= 2, got {self.delta}")
        if self.sigma < 1:
            raise ParameterError(f"sigma must be >= 1, got {self.sigma}")

    @property
    def n(self) -> int:
        return regular_vertex_count(self.delta, self.sigma)


def regular_vertex_count(delta: int, sigma: int) -> int:
    return sigma * (delta - 1) + 2


def spine_length_for(delta: int, n: int) -> Optional[int]:
    """Spine length of the Delta-regular caterpillar on n vertices, if one exists."""
    if delta < 2 or n < 3 or (n - 2) % (delta - 1):
        return None
    return (n - 2) // (delta - 1)


def make_regular_caterpillar(delta: int, sigma: int) -> Caterpillar:
    """Build the Delta-regular caterpillar with ``sigma`` spine vertices.

    Spine vertices get ids ``0..sigma-1``; leaves follow in spine order.
    """
    p = RegularParams(delta, sigma)
    if sigma == 1:
        counts = [delta]
    else:
        counts = [delta - 1] + [delta - 2] * (sigma - 2) + [delta - 1]
    nxt = sigma
    leaves = []
    for c in counts:
        leaves.append(tuple(range(nxt, nxt + c)))
        nxt += c
    cat = Caterpillar(p.n, tuple(range(sigma)), tuple(leaves))
    assert cat.n == nxt
    return cat


def regularity_of(c: Caterpillar) -> Optional[int]:
    deg = c.degrees()
    values = {deg[s] for s in c.spine}
    return values.pop() if len(values) == 1 else None


def check_packing_necessary(n: int, h: int, maxdeg: Iterable[int]) -> bool:
    """Necessary condition for packing h connected n-vertex graphs."""
    if h < 1 or n < 1:
        raise ParameterError("need h >= 1 and n >= 1")
    return n >= 2 * h and all(d <= n - h for d in maxdeg)


def placement_conditions(delta: int, sigma: int, h: int) -> list[str]:
    """Names of the violated placement conditions (empty when feasible)."""
    if delta < 2 or h < 1:
        raise ParameterError("need delta >= 2 and h >= 1")
    if sigma < 2:
        raise ParameterError(
            "sigma must be >= 2: a single spine vertex has degree n-1 and cannot be packed"
        )
    n = regular_vertex_count(delta, sigma)
    bad = []
    if not delta <= n - h:
        bad.append(f"(i) delta <= n-h fails: {delta} > {n - h}")
    need = 2 * h + (delta - 1) * (sigma % 2)
    if not n >= need:
        bad.append(f"(ii) n >= 2h+(delta-1)(sigma mod 2) fails: {n} < {need}")
    return bad


def placement_exists(delta: int, sigma: int, h: int) -> bool:
    """Whether h copies of the (delta, sigma) caterpillar admit a placement."""
    return not placement_conditions(delta, sigma, h)


def forbids_n_eq_2h(delta: int, h: int) -> bool:
    """True when no placement of h Delta-regular caterpillars on n = 2h vertices exists.

    The degree count at any host vertex forces (h-1)/(Delta-1) spine
    vertices there, so a non-integer ratio rules out every host graph.
    """
    if h < 2 or delta < 2:
        raise ParameterError("need h >= 2 and delta >= 2")
    if spine_length_for(delta, 2 * h) is None:
        raise ParameterError(f"no {delta}-regular caterpillar has {2 * h} vertices")
    return (h - 1) % (delta - 1) != 0


def make_center_caterpillar(n: int, h: int) -> Caterpillar:
    """Caterpillar with a center of degree n-h used for the small-h lower bounds.

    The center carries n-h-1 leaves and a pendant path of h vertices; the
    last path vertex is a leaf.
    """
    if h not in (3, 4, 5):
        raise ParameterError(f"h must be 3, 4 or 5, got {h}")
    min_n = 24 if h == 5 else h + 7
    if n < min_n:
        raise ParameterError(f"n must be >= {min_n} for h={h}, got {n}")
    # ids: center 0, path 1..h, then the center's leaves
    spine = tuple(range(h))
    center_leaves = tuple(range(h + 1, n))
    leaves = (center_leaves,) + ((),) * (h - 2) + ((h,),)
    return Caterpillar(n, spine, leaves)


def center_of(c: Caterpillar) -> int:
    deg = c.degrees()
    return max(range(c.n), key=lambda v: (deg[v], -v))


def path_caterpillar(n: int) -> Caterpillar:
    """Path on n >= 3 vertices as a 2-regular caterpillar."""
    return make_regular_caterpillar(2, n - 2)


def caterpillars_from_json(text: str) -> Sequence[Caterpillar]:
    data = json.loads(text)
    if isinstance(data, list):
        return [Caterpillar.from_dict(d) for d in data]
    return [Caterpillar.from_dict(data)]
