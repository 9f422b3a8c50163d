import random

import pytest

from caterpack.caterpillar import make_regular_caterpillar
from caterpack.layout import SIDES, drawing_from_assignment
from caterpack.packing import PackingLayout


def random_layout(rng: random.Random, max_n: int = 40, max_h: int = 3) -> PackingLayout:
    """Edge-disjoint random drawings of one random regular caterpillar.

    Vertices land on random positions and every edge picks a random side,
    so the layouts are far from the structured constructions.
    """
    while True:
        delta = rng.randint(2, 6)
        sigma = rng.randint(2, 8)
        n = sigma * (delta - 1) + 2
        if n <= max_n:
            break
    cat = make_regular_caterpillar(delta, sigma)
    drawings = []
    seen: set = set()
    for _ in range(rng.randint(1, max_h)):
        for _attempt in range(50):
            perm = list(range(n))
            rng.shuffle(perm)
            sides = [rng.choice(SIDES) for _ in range(n - 1)]
            d = drawing_from_assignment(cat, perm, n, sides)
            if not d.edge_set() & seen:
                seen |= d.edge_set()
                drawings.append(d)
                break
    return PackingLayout(n, drawings, tuple(range(len(drawings))))


@pytest.fixture
def rng():
    return random.Random(20240611)


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if not RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(RESULTS):
        terminalreporter.write_line(RESULTS[num])
