"""Root systems, exact linear algebra, and the index-subset order."""

import itertools
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from weylpairs.linalg import (
    det,
    in_span,
    independent_subset,
    kernel_basis,
    mat_inverse,
    mat_mul,
    rank,
    vector,
)
from weylpairs.roots import (
    CARTAN,
    InvalidRootError,
    NotFiniteTypeError,
    build_from_cartan,
    build_type_A,
    reflect,
    subset_leq,
)

F = Fraction


def closure_count(simples, form_dot):
    """Independent reflection-closure oracle on explicit coordinates."""
    def refl(alpha, x):
        c = F(2) * form_dot(x, alpha) / form_dot(alpha, alpha)
        return tuple(xi - c * ai for xi, ai in zip(x, alpha))

    roots = set(simples) | {tuple(-c for c in s) for s in simples}
    frontier = list(roots)
    while frontier:
        new = []
        for x in frontier:
            for alpha in simples:
                y = refl(alpha, x)
                if y not in roots:
                    roots.add(y)
                    new.append(y)
        frontier = new
        assert len(roots) < 1000
    return len(roots)


class TestBuildTypeA:
    def test_a2_roots_and_simples(self):
        system = build_type_A(3)
        assert len(system.roots) == 6
        assert system.simple_roots == (
            vector([1, -1, 0]),
            vector([0, 1, -1]),
        )

    def test_n2_two_roots(self):
        system = build_type_A(2)
        assert set(system.roots) == {vector([1, -1]), vector([-1, 1])}

    def test_a3_count_matches_enumeration_oracle(self):
        # oracle: direct double loop over ordered index pairs
        n = 4
        expected = sum(1 for i in range(n) for j in range(n) if i != j)
        assert len(build_type_A(n).roots) == expected == 12
        assert len(build_type_A(n).positive_roots) == 6

    def test_rejects_small_n(self):
        with pytest.raises(ValueError):
            build_type_A(1)


class TestBuildFromCartan:
    def test_b2_count_matches_closure_oracle(self):
        # explicit B2 realisation: simple roots e1 - e2 and e2 in Q^2
        def dot(x, y):
            return sum(a * b for a, b in zip(x, y))

        oracle = closure_count([(F(1), F(-1)), (F(0), F(1))], dot)
        assert oracle == 8
        assert len(build_from_cartan(CARTAN["B2"]).roots) == 8

    def test_g2_count_matches_closure_oracle(self):
        # rational G2 realisation inside the sum-zero plane of Q^3
        def dot(x, y):
            return sum(a * b for a, b in zip(x, y))

        simples = [
            (F(1), F(-1), F(0)),
            (F(-2), F(1), F(1)),
        ]
        oracle = closure_count(simples, dot)
        assert oracle == 12
        assert len(build_from_cartan(CARTAN["G2"]).roots) == 12

    def test_a2_cartan_consistent_with_type_a(self):
        from_cartan = build_from_cartan(CARTAN["A2"])
        direct = build_type_A(3)
        assert len(from_cartan.roots) == len(direct.roots)
        # all roots of one squared length in both realisations
        norms = {from_cartan.pairing(r, r) for r in from_cartan.roots}
        assert len(norms) == 1
        assert len({direct.pairing(r, r) for r in direct.roots}) == 1

    def test_b3_and_an_counts(self):
        assert len(build_from_cartan(CARTAN["B3"]).roots) == 18
        for n in (3, 4):
            cartan = CARTAN[f"A{n - 1}"]
            assert len(build_from_cartan(cartan).roots) == n * (n - 1)

    def test_affine_matrix_rejected(self):
        with pytest.raises(NotFiniteTypeError):
            build_from_cartan([[2, -2], [-2, 2]])

    def test_malformed_matrices_rejected(self):
        with pytest.raises(ValueError):
            build_from_cartan([[2, 1], [1, 2]])
        with pytest.raises(ValueError):
            build_from_cartan([[1]])


class TestReflect:
    def test_reflection_negates_root(self):
        system = build_type_A(3)
        alpha = vector([1, -1, 0])
        assert reflect(system, alpha, alpha) == vector([-1, 1, 0])

    def test_adjacent_simple_roots(self):
        system = build_type_A(3)
        assert reflect(system, vector([1, -1, 0]), vector([0, 1, -1])) == vector(
            [1, 0, -1]
        )

    def test_orthogonal_vector_fixed(self):
        system = build_type_A(4)
        alpha = vector([1, -1, 0, 0])
        x = vector([0, 0, 2, -5])
        assert reflect(system, alpha, x) == x

    def test_isotropic_vector_rejected(self):
        system = build_type_A(3)
        with pytest.raises(InvalidRootError):
            reflect(system, vector([0, 0, 0]), vector([1, -1, 0]))

    @settings(max_examples=60, deadline=None)
    @given(
        st.sampled_from(build_type_A(4).roots),
        st.tuples(*[st.integers(-6, 6) for _ in range(4)]),
    )
    def test_involution(self, alpha, coords):
        system = build_type_A(4)
        x = vector(coords)
        assert reflect(system, alpha, reflect(system, alpha, x)) == x

    @settings(max_examples=60, deadline=None)
    @given(
        st.sampled_from(build_type_A(4).roots),
        st.tuples(*[st.integers(-5, 5) for _ in range(4)]),
        st.tuples(*[st.integers(-5, 5) for _ in range(4)]),
    )
    def test_form_invariance(self, alpha, xs, ys):
        system = build_type_A(4)
        x, y = vector(xs), vector(ys)
        sx = reflect(system, alpha, x)
        sy = reflect(system, alpha, y)
        assert system.pairing(sx, sy) == system.pairing(x, y)


class TestSubsetLeq:
    def test_examples(self):
        assert not subset_leq({1, 3}, {1, 2})
        assert subset_leq({1, 2, 3}, {4, 5, 6})
        assert subset_leq({2, 4}, {2, 4})

    def test_size_mismatch(self):
        with pytest.raises(ValueError):
            subset_leq({1}, {1, 2})

    @pytest.mark.parametrize("d", [1, 2, 3, 4, 5, 6])
    def test_partial_order_axioms_exhaustive(self, d):
        subsets = list(itertools.combinations(range(1, 7), d))
        for a in subsets:
            assert subset_leq(a, a)
        for a in subsets:
            for b in subsets:
                if subset_leq(a, b) and subset_leq(b, a):
                    assert a == b
                for c in subsets:
                    if subset_leq(a, b) and subset_leq(b, c):
                        assert subset_leq(a, c)


class TestKernel:
    def test_zero_matrix_full_kernel(self):
        m = [[F(0)] * 3 for _ in range(3)]
        basis = kernel_basis(m)
        assert len(basis) == 3

    def test_identity_trivial_kernel(self):
        m = [[F(int(i == j)) for j in range(4)] for i in range(4)]
        assert kernel_basis(m) == []

    def test_w_minus_id_for_4321(self):
        # w = [4321]: columns are e_{w(i)} - e_i
        w = (4, 3, 2, 1)
        m = [[F(0)] * 4 for _ in range(4)]
        for i in range(4):
            m[w[i] - 1][i] += 1
            m[i][i] -= 1
        basis = kernel_basis(m)
        assert len(basis) == 2
        assert rank(m) == 2
        for v in basis:
            out = [sum(m[r][c] * v[c] for c in range(4)) for r in range(4)]
            assert all(x == 0 for x in out)

    def test_kernel_vectors_are_solutions(self):
        m = [
            [F(1), F(2), F(3), F(4)],
            [F(2), F(4), F(6), F(8)],
            [F(1), F(0), F(1), F(0)],
        ]
        basis = kernel_basis(m)
        assert len(basis) == 4 - rank(m)
        for v in basis:
            assert all(
                sum(row[c] * v[c] for c in range(4)) == 0 for row in m
            )

    def test_fractional_entries(self):
        m = [[F(1, 2), F(1, 3)], [F(3), F(2)]]
        assert rank(m) == 1
        (v,) = kernel_basis(m)
        assert F(1, 2) * v[0] + F(1, 3) * v[1] == 0


class TestMatrixHelpers:
    def test_det_and_inverse(self):
        m = [[F(2), F(1), F(0)], [F(0), F(1), F(3)], [F(1), F(0), F(1)]]
        d = det(m)
        assert d != 0
        prod = mat_mul(m, mat_inverse(m))
        assert prod == [[F(int(i == j)) for j in range(3)] for i in range(3)]

    def test_det_singular(self):
        assert det([[F(1), F(2)], [F(2), F(4)]]) == 0

    def test_in_span_and_independent_subset(self):
        v1, v2 = vector([1, 0, 1]), vector([0, 1, 1])
        assert in_span([v1, v2], vector([1, 1, 2]))
        assert not in_span([v1, v2], vector([0, 0, 1]))
        picked = independent_subset([v1, v1, v2, vector([1, 1, 2])])
        assert picked == [v1, v2]
