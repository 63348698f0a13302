"""Weyl group elements, length, Bruhat order and parabolic machinery.

Two interchangeable group backends expose the same operations:

* :class:`SymmetricGroup` — type A.  Elements are :class:`Permutation` values
  in one-line notation; positive roots are the index pairs ``(i, j)`` with
  ``i < j`` standing for ``e_i - e_j``; Bruhat order uses the box-count
  criterion (u <= w iff every sorted prefix of u is componentwise <= the
  matching sorted prefix of w).

* :class:`ReflectionGroup` — any finite :class:`~weylpairs.roots.RootSystem`.
  Elements are indices into the generated group; each element is stored as
  the permutation it induces on the root list, so composition is table
  lookup.  Bruhat order uses the subword recursion on one fixed reduced word
  (with a precomputed table for tiny groups).

Both provide: ``identity``, ``mul``, ``inv``, ``length``, ``bruhat_leq``,
``reflections``, ``min_gen_positive`` (positive roots of the minimal
generating subsystem), ``parabolic_decompose`` and the simple-root bookkeeping
that :func:`standardize_subsystem` needs.
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from functools import lru_cache

from .linalg import Vector, independent_subset, in_span, kernel_basis
from .roots import RootSystem, build_named, build_type_A


class InternalInvariantError(RuntimeError):
    """A structural guarantee failed; indicates a bug, not a math outcome."""


OneLine = tuple[int, ...]


@lru_cache(maxsize=None)
def _inversions(values: OneLine) -> int:
    return sum(1 for a, b in itertools.combinations(values, 2) if a > b)


@lru_cache(maxsize=None)
def _sorted_prefixes(values: OneLine) -> OneLine:
    """Concatenation of sorted({w(1)..w(d)}) over d = 1..n, flattened."""
    out: list[int] = []
    for d in range(1, len(values) + 1):
        out.extend(sorted(values[:d]))
    return tuple(out)


@lru_cache(maxsize=None)
def _cycles(values: OneLine) -> tuple[tuple[int, ...], ...]:
    n = len(values)
    seen = [False] * n
    orbs = []
    for s in range(1, n + 1):
        if seen[s - 1]:
            continue
        orb = []
        c = s
        while not seen[c - 1]:
            seen[c - 1] = True
            orb.append(c)
            c = values[c - 1]
        orbs.append(tuple(sorted(orb)))
    return tuple(orbs)


class Permutation:
    """A permutation of {1..n} in one-line notation, acting by w(e_i) = e_{w(i)}.

    >>> w = Permutation.from_string("4231")
    >>> w(1), w.length(), w.orbits()
    (4, 5, ((1, 4), (2,), (3,)))
    >>> (w * w.inverse()) == Permutation.identity(4)
    True
    >>> Permutation.from_string("1324").bruhat_leq(w)
    True
    """

    __slots__ = ("one_line",)

    def __init__(self, values):
        v = tuple(int(x) for x in values)
        if sorted(v) != list(range(1, len(v) + 1)):
            raise ValueError(f"not a permutation of 1..{len(v)}: {v}")
        self.one_line = v

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(range(1, n + 1))

    @classmethod
    def transposition(cls, n: int, i: int, j: int) -> "Permutation":
        v = list(range(1, n + 1))
        v[i - 1], v[j - 1] = j, i
        return cls(v)

    @classmethod
    def from_string(cls, s: str) -> "Permutation":
        s = s.strip()
        if "," in s:
            return cls(int(tok) for tok in s.split(","))
        return cls(int(ch) for ch in s)

    def to_string(self) -> str:
        if self.n < 10:
            return "".join(str(v) for v in self.one_line)
        return ",".join(str(v) for v in self.one_line)

    @property
    def n(self) -> int:
        return len(self.one_line)

    def __call__(self, i: int) -> int:
        return self.one_line[i - 1]

    def __mul__(self, other: "Permutation") -> "Permutation":
        mine, theirs = self.one_line, other.one_line
        return Permutation(mine[theirs[i] - 1] for i in range(len(mine)))

    def inverse(self) -> "Permutation":
        out = [0] * self.n
        for pos, val in enumerate(self.one_line):
            out[val - 1] = pos + 1
        return Permutation(out)

    def length(self) -> int:
        return _inversions(self.one_line)

    def bruhat_leq(self, other: "Permutation") -> bool:
        """Box-count criterion via sorted-prefix domination."""
        if self.n != other.n:
            raise ValueError("Bruhat comparison across different ranks")
        return all(
            a <= b
            for a, b in zip(_sorted_prefixes(self.one_line), _sorted_prefixes(other.one_line))
        )

    def box_count(self, i: int, j: int, sigma=None) -> int:
        """|w({1..i}) ∩ {j..n} ∩ sigma| (sigma defaults to everything)."""
        vals = self.one_line[:i]
        if sigma is None:
            return sum(1 for v in vals if v >= j)
        return sum(1 for v in vals if v >= j and v in sigma)

    def orbits(self) -> tuple[tuple[int, ...], ...]:
        """Cycles of the action on {1..n}, each sorted, ordered by minimum."""
        return _cycles(self.one_line)

    def __eq__(self, other) -> bool:
        return isinstance(other, Permutation) and self.one_line == other.one_line

    def __hash__(self) -> int:
        return hash(self.one_line)

    def __repr__(self) -> str:
        return f"Permutation({list(self.one_line)})"


class SymmetricGroup:
    """Type-A backend; root keys are pairs (i, j) with i < j for e_i - e_j."""

    def __init__(self, n: int):
        if n < 1:
            raise ValueError("need n >= 1")
        self.n = n
        self.identity = Permutation.identity(n)
        self.simple_keys = tuple(range(1, n))
        self._elements_by_length: list[Permutation] | None = None
        self._standardize_cache: dict[frozenset, tuple[Permutation, frozenset]] = {}

    # -- group operations ---------------------------------------------------
    def mul(self, a: Permutation, b: Permutation) -> Permutation:
        return a * b

    def inv(self, a: Permutation) -> Permutation:
        return a.inverse()

    def length(self, a: Permutation) -> int:
        return a.length()

    def bruhat_leq(self, a: Permutation, b: Permutation) -> bool:
        return a.bruhat_leq(b)

    def longest_element(self) -> Permutation:
        return Permutation(range(self.n, 0, -1))

    def elements_by_length(self) -> list[Permutation]:
        if self._elements_by_length is None:
            perms = [Permutation(p) for p in itertools.permutations(range(1, self.n + 1))]
            perms.sort(key=lambda w: (w.length(), w.one_line))
            self._elements_by_length = perms
        return self._elements_by_length

    # -- roots and reflections ----------------------------------------------
    @property
    def positive_keys(self) -> list[tuple[int, int]]:
        return list(itertools.combinations(range(1, self.n + 1), 2))

    def reflection(self, key: tuple[int, int]) -> Permutation:
        i, j = key
        return Permutation.transposition(self.n, i, j)

    def reflections(self) -> list[tuple[tuple[int, int], Permutation]]:
        return [(key, self.reflection(key)) for key in self.positive_keys]

    def simple_root_key(self, j: int) -> tuple[int, int]:
        return (j, j + 1)

    def root_vector(self, key: tuple[int, int]) -> Vector:
        i, j = key
        v = [Fraction(0)] * self.n
        v[i - 1], v[j - 1] = Fraction(1), Fraction(-1)
        return tuple(v)

    def root_image_positive(self, w: Permutation, key: tuple[int, int]) -> tuple[int, int]:
        a, b = w(key[0]), w(key[1])
        return (a, b) if a < b else (b, a)

    def min_gen_positive(self, w: Permutation) -> frozenset[tuple[int, int]]:
        """Positive roots of the minimal generating subsystem: pairs inside a
        common cycle of w."""
        out = []
        for orb in w.orbits():
            out.extend(itertools.combinations(orb, 2))
        return frozenset(out)

    def standard_positive(self, J) -> frozenset[tuple[int, int]]:
        """Positive roots of the standard subsystem spanned by simple roots J."""
        j_set = set(J)
        out = []
        run = []
        for k in range(1, self.n):
            if k in j_set:
                run.append(k)
            else:
                if run:
                    vals = range(run[0], run[-1] + 2)
                    out.extend(itertools.combinations(vals, 2))
                run = []
        if run:
            vals = range(run[0], run[-1] + 2)
            out.extend(itertools.combinations(vals, 2))
        return frozenset(out)

    # -- parabolic machinery --------------------------------------------------
    def right_descends(self, w: Permutation, j: int) -> bool:
        return w(j) > w(j + 1)

    def _right_mul_simple(self, w: Permutation, j: int) -> Permutation:
        v = list(w.one_line)
        v[j - 1], v[j] = v[j], v[j - 1]
        return Permutation(v)

    def parabolic_decompose(self, w: Permutation, J) -> tuple[Permutation, Permutation]:
        """w = w^J * w_J with w^J of minimal length in w W_J; length-additive."""
        j_list = sorted(set(J))
        cur = w
        word: list[int] = []
        while True:
            for j in j_list:
                if self.right_descends(cur, j):
                    cur = self._right_mul_simple(cur, j)
                    word.append(j)
                    break
            else:
                break
        wj = self.identity
        for j in reversed(word):
            wj = self._right_mul_simple(wj, j)
        return cur, wj

    def in_parabolic(self, w: Permutation, J) -> bool:
        coset_min, _ = self.parabolic_decompose(w, J)
        return coset_min == self.identity

    # -- linear action (for minimal generating subsystems) -------------------
    def action_span_vectors(self, w: Permutation) -> list[Vector]:
        """Vectors w(v) - v for v running over the standard basis of Q^n."""
        out = []
        for i in range(1, self.n + 1):
            v = [Fraction(0)] * self.n
            v[w(i) - 1] += 1
            v[i - 1] -= 1
            out.append(tuple(v))
        return out

    @property
    def system(self) -> RootSystem:
        return build_type_A(self.n)


class ReflectionGroup:
    """Weyl group of an arbitrary finite root system, elements as root tables.

    Elements are integer handles; 0 is the identity.  Kept small on purpose:
    the whole group is generated eagerly by BFS over the simple reflections.
    """

    BRUHAT_TABLE_MAX = 12  # precompute the full order relation up to this size

    def __init__(self, system: RootSystem):
        self.system = system
        roots = list(system.roots)
        self.root_vectors = roots
        self.nroots = len(roots)
        ridx = {r: i for i, r in enumerate(roots)}
        self._ridx = ridx
        self.neg_of = [ridx[tuple(-c for c in r)] for r in roots]
        self.positive_keys = [i for i, r in enumerate(roots) if system.is_positive(r)]
        self._positive_set = frozenset(self.positive_keys)
        nsimple = len(system.simple_roots)
        self.simple_keys = tuple(range(1, nsimple + 1))
        self._simple_root_key = {
            j: ridx[system.simple_roots[j - 1]] for j in self.simple_keys
        }
        gen_arrays = [
            tuple(ridx[system.reflect(system.simple_roots[j - 1], r)] for r in roots)
            for j in self.simple_keys
        ]
        ident = tuple(range(self.nroots))
        tables = [ident]
        index = {ident: 0}
        lengths = [0]
        frontier = [0]
        rmul: list[list[int]] = [[] for _ in gen_arrays]
        rmul_known: list[dict[int, int]] = [dict() for _ in gen_arrays]
        while frontier:
            nxt = []
            for e in frontier:
                te = tables[e]
                for g, ga in enumerate(gen_arrays):
                    comp = tuple(te[ga[k]] for k in range(self.nroots))
                    idx = index.get(comp)
                    if idx is None:
                        idx = len(tables)
                        tables.append(comp)
                        index[comp] = idx
                        lengths.append(lengths[e] + 1)
                        nxt.append(idx)
                    rmul_known[g][e] = idx
            frontier = nxt
        size = len(tables)
        for g in range(len(gen_arrays)):
            rmul[g] = [rmul_known[g][e] for e in range(size)]
        self.tables = tables
        self.index = index
        self.lengths = lengths
        self.size = size
        self.rmul = rmul
        self.lmul = [
            [index[tuple(ga[tables[e][k]] for k in range(self.nroots))] for e in range(size)]
            for ga in gen_arrays
        ]
        inv = []
        for t in tables:
            it = [0] * self.nroots
            for k, v in enumerate(t):
                it[v] = k
            inv.append(index[tuple(it)])
        self._inv = inv
        self.identity = 0
        self._mul_cache: dict[tuple[int, int], int] = {}
        self._mingen_cache: dict[int, frozenset[int]] = {}
        self._bruhat_memo: dict[tuple[int, int], bool] = {}
        self._standardize_cache: dict[frozenset, tuple[int, frozenset]] = {}
        self._reflection_of_key: dict[int, int] | None = None
        self._support_table: list[frozenset[int]] | None = None
        self._bruhat_table = None
        if size <= self.BRUHAT_TABLE_MAX:
            self._bruhat_table = [
                [self._bruhat_recursive(u, w) for w in range(size)] for u in range(size)
            ]

    # -- group operations ---------------------------------------------------
    def mul(self, a: int, b: int) -> int:
        got = self._mul_cache.get((a, b))
        if got is None:
            ta, tb = self.tables[a], self.tables[b]
            got = self.index[tuple(ta[tb[k]] for k in range(self.nroots))]
            self._mul_cache[(a, b)] = got
        return got

    def inv(self, a: int) -> int:
        return self._inv[a]

    def length(self, a: int) -> int:
        return self.lengths[a]

    def elements_by_length(self) -> list[int]:
        return sorted(range(self.size), key=lambda e: (self.lengths[e], self.tables[e]))

    def longest_element(self) -> int:
        top = max(range(self.size), key=lambda e: self.lengths[e])
        if sum(1 for e in range(self.size) if self.lengths[e] == self.lengths[top]) != 1:
            raise InternalInvariantError("longest element is not unique")
        return top

    def _left_descent(self, w: int) -> int:
        for g in range(len(self.lmul)):
            if self.lengths[self.lmul[g][w]] < self.lengths[w]:
                return g
        raise InternalInvariantError("non-identity element with no left descent")

    def _bruhat_recursive(self, u: int, w: int) -> bool:
        if u == w or u == 0:
            return True
        if self.lengths[u] >= self.lengths[w]:
            return False
        key = (u, w)
        got = self._bruhat_memo.get(key)
        if got is not None:
            return got
        g = self._left_descent(w)
        w2 = self.lmul[g][w]
        u2 = self.lmul[g][u]
        if self.lengths[u2] < self.lengths[u]:
            res = self._bruhat_recursive(u2, w2)
        else:
            res = self._bruhat_recursive(u, w2)
        self._bruhat_memo[key] = res
        return res

    def bruhat_leq(self, u: int, w: int) -> bool:
        if self._bruhat_table is not None:
            return self._bruhat_table[u][w]
        return self._bruhat_recursive(u, w)

    # -- roots and reflections ----------------------------------------------
    def reflection(self, key: int) -> int:
        if self._reflection_of_key is None:
            self._reflection_of_key = {}
            for p in self.positive_keys:
                alpha = self.root_vectors[p]
                arr = tuple(
                    self._ridx[self.system.reflect(alpha, r)] for r in self.root_vectors
                )
                self._reflection_of_key[p] = self.index[arr]
        return self._reflection_of_key[key]

    def reflections(self) -> list[tuple[int, int]]:
        return [(key, self.reflection(key)) for key in self.positive_keys]

    def simple_root_key(self, j: int) -> int:
        return self._simple_root_key[j]

    def root_vector(self, key: int) -> Vector:
        return self.root_vectors[key]

    def root_image_positive(self, w: int, key: int) -> int:
        img = self.tables[w][key]
        return img if img in self._positive_set else self.neg_of[img]

    def action_span_vectors(self, w: int) -> list[Vector]:
        """w(alpha) - alpha over the simple roots (they span im(w - id))."""
        t = self.tables[w]
        out = []
        for j in self.simple_keys:
            k = self._simple_root_key[j]
            alpha = self.root_vectors[k]
            img = self.root_vectors[t[k]]
            out.append(tuple(a - b for a, b in zip(img, alpha)))
        return out

    def min_gen_positive(self, w: int) -> frozenset[int]:
        got = self._mingen_cache.get(w)
        if got is None:
            basis = independent_subset(self.action_span_vectors(w))
            got = frozenset(
                p for p in self.positive_keys if in_span(basis, self.root_vectors[p])
            )
            self._mingen_cache[w] = got
        return got

    def standard_positive(self, J) -> frozenset[int]:
        """Positive roots supported on the simple roots indexed by J."""
        j_set = set(J)
        out = []
        for p in self.positive_keys:
            support = self._simple_support(p)
            if support <= j_set:
                out.append(p)
        return frozenset(out)

    def _simple_support(self, key: int) -> frozenset[int]:
        if self._support_table is None:
            simple = self.system.simple_roots
            table = []
            for r in self.root_vectors:
                coeffs = _expand_in_basis(simple, r)
                table.append(frozenset(j + 1 for j, c in enumerate(coeffs) if c != 0))
            self._support_table = table
        return self._support_table[key]

    # -- parabolic machinery --------------------------------------------------
    def right_descends(self, w: int, j: int) -> bool:
        return self.lengths[self.rmul[j - 1][w]] < self.lengths[w]

    def parabolic_decompose(self, w: int, J) -> tuple[int, int]:
        j_list = sorted(set(J))
        cur = w
        word: list[int] = []
        while True:
            for j in j_list:
                if self.right_descends(cur, j):
                    cur = self.rmul[j - 1][cur]
                    word.append(j)
                    break
            else:
                break
        wj = 0
        for j in reversed(word):
            wj = self.rmul[j - 1][wj]
        return cur, wj

    def in_parabolic(self, w: int, J) -> bool:
        coset_min, _ = self.parabolic_decompose(w, J)
        return coset_min == 0


def _expand_in_basis(basis: tuple[Vector, ...], v: Vector) -> tuple[Fraction, ...]:
    """Coefficients of v over a linearly independent family (must lie in span)."""
    cols = list(basis) + [v]
    matrix = [
        [cols[c][r] for c in range(len(cols))] for r in range(len(v))
    ]
    for k in kernel_basis(matrix):
        if k[-1] != 0:
            t = -k[-1]
            return tuple(c / t for c in k[:-1])
    raise ValueError("vector is not in the span of the basis")


def standardize_subsystem(group, phi_sub) -> tuple[object, frozenset[int]]:
    """Find u of minimal length in its coset u W_J and J with u(Phi_J) = phi_sub.

    ``phi_sub`` is a set of positive root keys of the group and must be of the
    form Phi ∩ (linear subspace); this holds for every minimal generating
    subsystem.  Searches the group by increasing length and returns the first
    match reduced to its minimal coset representative.
    """
    key = frozenset(phi_sub)
    cached = group._standardize_cache.get(key)
    if cached is not None:
        return cached
    result = None
    if not key:
        result = (group.identity, frozenset())
    else:
        for u in group.elements_by_length():
            u_inv = group.inv(u)
            psi = frozenset(group.root_image_positive(u_inv, p) for p in key)
            j_set = frozenset(
                j for j in group.simple_keys if group.simple_root_key(j) in psi
            )
            if group.standard_positive(j_set) == psi:
                coset_min, _ = group.parabolic_decompose(u, j_set)
                result = (coset_min, j_set)
                break
        if result is None:
            raise InternalInvariantError(
                "no standardization found; input was not of the form Phi ∩ subspace"
            )
    group._standardize_cache[key] = result
    return result


@lru_cache(maxsize=None)
def symmetric_group(n: int) -> SymmetricGroup:
    return SymmetricGroup(n)


@lru_cache(maxsize=None)
def reflection_group(name: str) -> ReflectionGroup:
    return ReflectionGroup(build_named(name))
