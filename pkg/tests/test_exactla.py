"""Sparse polynomials over Q and exact linear algebra."""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qtangle.exactla import Poly, nullspace, rank, rref


@st.composite
def polys(draw, nvars=2, max_terms=5):
    d = {}
    for _ in range(draw(st.integers(min_value=0, max_value=max_terms))):
        exps = tuple(draw(st.integers(min_value=0, max_value=3))
                     for _ in range(nvars))
        d[exps] = draw(st.fractions(min_value=-4, max_value=4, max_denominator=4))
    return Poly.make(nvars, d)


class TestPoly:
    def test_make_drops_zero_terms(self):
        p = Poly.make(2, {(1, 0): 0, (0, 1): 3})
        assert p.terms == (((0, 1), Fraction(3)),)

    def test_rejects_negative_exponents(self):
        with pytest.raises(ValueError):
            Poly.make(1, {(-1,): 1})

    @settings(max_examples=40, deadline=None)
    @given(polys(), polys(), polys())
    def test_ring_axioms(self, a, b, c):
        assert (a + b) == (b + a)
        assert (a * b) == (b * a)
        assert (a * (b + c)) == (a * b + a * c)
        assert (a - a).is_zero()

    @settings(max_examples=40, deadline=None)
    @given(polys(), polys())
    def test_exact_division_inverts_multiplication(self, a, b):
        if b.is_zero():
            return
        assert (a * b).divide_exact(b) == a

    def test_inexact_division_raises(self):
        x = Poly.variable(0, 1)
        one = Poly.constant(1, 1)
        with pytest.raises(ValueError):
            (x + one).divide_exact(x * x)

    def test_weighted_degree(self):
        p = Poly.make(2, {(2, 1): 1, (0, 2): 1})
        assert p.weighted_degree((1, 2)) == 4
        with pytest.raises(ValueError):
            p.weighted_degree((1, 1))
        assert Poly.zero(2).weighted_degree((1, 2)) is None

    def test_homogeneous_part(self):
        p = Poly.make(1, {(0,): 1, (1,): 2, (2,): 3})
        assert p.homogeneous_part((1,), 1) == Poly.make(1, {(1,): 2})

    def test_map_exponents_relabels_variables(self):
        p = Poly.make(2, {(1, 2): 5})
        q = p.map_exponents(lambda e: (e[1], e[0], 0))
        assert q == Poly.make(3, {(2, 1, 0): 5})


class TestLinearAlgebra:
    def test_rref_known_matrix(self):
        rows = [[Fraction(1), Fraction(2)], [Fraction(2), Fraction(4)]]
        red, pivots = rref(rows)
        assert pivots == [0]
        assert red == [[Fraction(1), Fraction(2)]]

    def test_rank(self):
        rows = [[1, 0, 1], [0, 1, 1], [1, 1, 2]]
        assert rank([[Fraction(x) for x in r] for r in rows]) == 2

    def test_nullspace_kernel_vectors_annihilate(self):
        rows = [[Fraction(1), Fraction(2), Fraction(3)],
                [Fraction(0), Fraction(1), Fraction(1)]]
        for v in nullspace(rows):
            for r in rows:
                assert sum(a * b for a, b in zip(r, v)) == 0

    def test_rank_nullity(self):
        rows = [[Fraction(1), Fraction(1), Fraction(0), Fraction(2)],
                [Fraction(0), Fraction(0), Fraction(1), Fraction(1)],
                [Fraction(1), Fraction(1), Fraction(1), Fraction(3)]]
        assert rank(rows) + len(nullspace(rows)) == 4

    def test_empty_matrix(self):
        assert rank([]) == 0
        assert nullspace([]) == []
