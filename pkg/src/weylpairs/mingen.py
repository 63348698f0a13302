"""Minimal generating root subsystems.

For w in a Weyl group, E_w = im(w - id) and Phi_w = Phi ∩ E_w.  The dimension
d_w of E_w equals the word length of w over the alphabet of *all* reflections;
:func:`reflection_length` computes that length independently by breadth-first
search on the Cayley graph, so the two routes cross-check each other.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .linalg import Vector, independent_subset, in_span
from .weyl import Permutation


@dataclass(frozen=True)
class MinGenSubsystem:
    """E_w basis, the roots lying inside it, and d_w = dim E_w."""

    e_w_basis: tuple[Vector, ...]
    phi_w: tuple[Vector, ...]
    d_w: int

    def __post_init__(self):
        if self.d_w != len(self.e_w_basis):
            raise ValueError("d_w must equal the size of the E_w basis")


def min_gen_subsystem(group, w) -> MinGenSubsystem:
    """Compute E_w as the span of (w - id) applied to a spanning basis, then
    collect the roots contained in it."""
    basis = independent_subset(group.action_span_vectors(w))
    pos = [p for p in group.positive_keys if in_span(basis, group.root_vector(p))]
    phi = []
    for p in pos:
        v = group.root_vector(p)
        phi.append(v)
        phi.append(tuple(-c for c in v))
    return MinGenSubsystem(
        e_w_basis=tuple(basis), phi_w=tuple(sorted(phi)), d_w=len(basis)
    )


def min_gen_type_A_orbits(w: Permutation):
    """Cycle description in type A: the orbits of w on {1..n} determine Phi_w
    as all differences e_i - e_j within a common orbit.

    Returns (orbits, positive pairs); must agree with the linear-algebra route.
    """
    orbits = w.orbits()
    pairs = []
    for orb in orbits:
        for a in range(len(orb)):
            for b in range(a + 1, len(orb)):
                pairs.append((orb[a], orb[b]))
    return orbits, frozenset(pairs)


def reflection_length(group, w) -> int:
    """BFS distance from the identity to w over all reflections.

    Independent oracle for d_w; makes no use of E_w.
    """
    ident = group.identity
    if w == ident:
        return 0
    refl = [s for _, s in group.reflections()]
    seen = {ident}
    queue = deque([(ident, 0)])
    while queue:
        u, dist = queue.popleft()
        for s in refl:
            v = group.mul(s, u)
            if v == w:
                return dist + 1
            if v not in seen:
                seen.add(v)
                queue.append((v, dist + 1))
    raise ValueError("element not reachable; groups disagree")
