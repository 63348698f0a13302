import itertools
import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from weylpairs.weyl import Permutation, reflection_group, symmetric_group  # noqa: E402


def all_perms(n):
    return [Permutation(p) for p in itertools.permutations(range(1, n + 1))]


@pytest.fixture(scope="session")
def s3():
    return symmetric_group(3)


@pytest.fixture(scope="session")
def s4():
    return symmetric_group(4)


@pytest.fixture(scope="session")
def s5():
    return symmetric_group(5)


@pytest.fixture(scope="session")
def b2():
    return reflection_group("B2")


@pytest.fixture(scope="session")
def b3():
    return reflection_group("B3")


@pytest.fixture(scope="session")
def g2():
    return reflection_group("G2")


def bruhat_closure_oracle(group):
    """u <= w iff w is reachable from u by length-increasing reflection
    multiplications; computed by BFS, independent of the library order."""
    elements = group.elements_by_length()
    refl = [s for _, s in group.reflections()]
    below = {}
    for u in elements:
        reach = {u}
        frontier = [u]
        while frontier:
            nxt = []
            for v in frontier:
                lv = group.length(v)
                for s in refl:
                    z = group.mul(s, v)
                    if z not in reach and group.length(z) > lv:
                        reach.add(z)
                        nxt.append(z)
            frontier = nxt
        below[u] = reach
    return below
