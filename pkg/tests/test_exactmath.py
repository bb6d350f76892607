"""Exact arithmetic and linear algebra against independent oracles."""

from __future__ import annotations

import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from superalg.errors import InputError
from superalg.exactmath import (Polynomial, RatMatrix, format_rational, invert,
                                nilpotent_jordan_type, parse_coefficient,
                                parse_rational, poly_eval, rank, rref,
                                rref_rank_kernel, sparse_kernel)

from oracles import bareiss_rank, echelon_kernel, jordan_type_by_powers

rationals = st.builds(Fraction, st.integers(-50, 50), st.integers(1, 12))


class TestRationals:
    def test_parse_format_roundtrip(self):
        for text in ("3", "-7", "1/2", "-22/7", "0"):
            assert format_rational(parse_rational(text)) == text

    def test_parse_rejects_noise(self):
        for bad in ("1.5", "a", "1/2/3", ""):
            with pytest.raises(InputError):
                parse_rational(bad)

    @given(rationals, rationals)
    def test_exactness(self, a, b):
        assert (a + b) - b == a
        assert format_rational(a) == format_rational(Fraction(a))


def poly_from(entries, variables=("u", "v", "w")):
    return Polynomial(variables, entries)


polys = st.dictionaries(
    st.tuples(st.integers(0, 3), st.integers(0, 3), st.integers(0, 3)),
    rationals, max_size=5).map(poly_from)
assignments = st.tuples(rationals, rationals, rationals).map(
    lambda t: {"u": t[0], "v": t[1], "w": t[2]})


class TestPolynomial:
    def test_zero_evaluates_to_zero(self):
        assert poly_eval(Polynomial.zero(("x",)), {}) == 0

    def test_single_variable_identity(self):
        p = Polynomial.var("alpha4", ("alpha4",))
        assert poly_eval(p, {"alpha4": Fraction(1)}) == 1

    def test_weight_constraint_value(self):
        # 2(i-2)*a1 - b2 at i=4 vanishes for b2 = 2(t-2)a1 with t = 4.
        variables = ("a1", "b2")
        p = (Polynomial.var("a1", variables) * Fraction(2 * (4 - 2))
             - Polynomial.var("b2", variables))
        assert poly_eval(p, {"a1": Fraction(1), "b2": Fraction(4)}) == 0
        assert poly_eval(p, {"a1": Fraction(1), "b2": Fraction(3)}) == 1

    def test_missing_variable_is_input_error(self):
        p = Polynomial.var("theta", ("theta",))
        with pytest.raises(InputError):
            poly_eval(p, {})

    @settings(max_examples=60, deadline=None)
    @given(polys, polys, assignments)
    def test_evaluation_is_a_ring_homomorphism(self, p, q, point):
        assert poly_eval(p * q, point) == poly_eval(p, point) * poly_eval(q, point)
        assert poly_eval(p + q, point) == poly_eval(p, point) + poly_eval(q, point)

    def test_parser_round_trips_rendering(self):
        variables = ("alpha4", "theta")
        p = (Polynomial.var("alpha4", variables) * 2
             - Polynomial.const(Fraction(1, 2), variables)
             + Polynomial.var("theta", variables) * Polynomial.var("alpha4", variables))
        assert parse_coefficient(str(p), variables) == p

    def test_parser_examples(self):
        variables = ("alpha4", "beta5")
        p = parse_coefficient("2*alpha4 - 1/2", variables)
        assert poly_eval(p, {"alpha4": Fraction(1)}) == Fraction(3, 2)
        assert parse_coefficient("-beta5^2", variables) == \
            -(Polynomial.var("beta5", variables) * Polynomial.var("beta5", variables))

    def test_parser_rejects_undeclared_names(self):
        with pytest.raises(InputError):
            parse_coefficient("delta", ("alpha4",))

    def test_substitute_partial(self):
        variables = ("a", "b")
        p = Polynomial.var("a", variables) * Polynomial.var("b", variables) + 3
        q = p.substitute({"a": Fraction(2)})
        assert q.variables == ("b",)
        assert poly_eval(q, {"b": Fraction(5)}) == 13


def random_matrix(rng, rows, cols, lo=-5, hi=5):
    return RatMatrix.from_rows(
        [[Fraction(rng.randint(lo, hi)) for _ in range(cols)] for _ in range(rows)])


class TestRref:
    def test_zero_matrix(self):
        reduced, r, kernel = rref_rank_kernel(RatMatrix.zeros(3, 3))
        assert r == 0 and len(kernel) == 3

    def test_identity(self):
        _, r, kernel = rref_rank_kernel(RatMatrix.identity(2))
        assert r == 2 and kernel == []

    def test_pivot_columns_strictly_increase(self):
        rng = random.Random(7)
        for _ in range(30):
            m = random_matrix(rng, rng.randint(1, 6), rng.randint(1, 6))
            _, pivots = rref(m)
            assert list(pivots) == sorted(set(pivots))

    def test_rank_matches_fraction_free_oracle(self):
        rng = random.Random(11)
        for _ in range(120):
            rows = rng.randint(1, 12)
            cols = rng.randint(1, 12)
            m = random_matrix(rng, rows, cols)
            assert rank(m) == bareiss_rank([list(r) for r in m.entries])

    def test_kernel_is_a_kernel_and_dimensions_add_up(self):
        rng = random.Random(13)
        for _ in range(60):
            m = random_matrix(rng, rng.randint(1, 8), rng.randint(1, 8))
            _, r, kernel = rref_rank_kernel(m)
            assert r + len(kernel) == m.cols
            for vec in kernel:
                assert not any(m.apply(vec))

    def test_kernel_agrees_with_echelon_oracle(self):
        rng = random.Random(17)
        for _ in range(40):
            m = random_matrix(rng, rng.randint(1, 7), rng.randint(1, 7))
            _, r, kernel = rref_rank_kernel(m)
            oracle = echelon_kernel([list(row) for row in m.entries], m.cols)
            assert len(kernel) == len(oracle)
            combined = [list(v) for v in kernel] + oracle
            assert bareiss_rank(combined) == len(kernel) if kernel else True

    def test_sparse_kernel_matches_dense(self):
        rng = random.Random(19)
        for _ in range(40):
            rows = rng.randint(1, 8)
            cols = rng.randint(1, 8)
            m = random_matrix(rng, rows, cols, -3, 3)
            sparse_rows = [{j: v for j, v in enumerate(row) if v}
                           for row in m.entries]
            got = sparse_kernel(sparse_rows, cols)
            _, _, want = rref_rank_kernel(m)
            assert got == want

    def test_stacked_right_annihilator_system_of_the_2_3_algebra(self):
        # rows of the linear system [b_i, z] = 0 over z, stacked over all i
        from superalg import build
        a = build("N2M", 3)
        table = a.constant_structure()
        rows = []
        for i in range(a.dim):
            for component in range(a.dim):
                row = [Fraction(0)] * a.dim
                hit = False
                for j in range(a.dim):
                    for k, c in table.get((i, j), ()):
                        if k == component:
                            row[j] = c
                            hit = True
                if hit:
                    rows.append(row)
        system = RatMatrix.from_rows(rows)
        _, r, kernel = rref_rank_kernel(system)
        assert len(kernel) == 1
        assert r == system.cols - 1
        assert bareiss_rank([list(x) for x in system.entries]) == r
        # the kernel line is the e2 coordinate axis
        vec = kernel[0]
        assert vec[1] != 0 and all(not v for idx, v in enumerate(vec) if idx != 1)

    def test_invert_round_trip(self):
        rng = random.Random(23)
        for _ in range(20):
            size = rng.randint(1, 5)
            m = random_matrix(rng, size, size, -3, 3)
            try:
                inv = invert(m)
            except InputError:
                assert rank(m) < size
                continue
            assert inv @ m == RatMatrix.identity(size)


class TestJordanType:
    def test_zero_matrix(self):
        assert nilpotent_jordan_type(RatMatrix.zeros(3, 3)) == (1, 1, 1)

    def test_single_block(self):
        shift = RatMatrix.from_rows(
            [[1 if j == i + 1 else 0 for j in range(4)] for i in range(4)])
        assert nilpotent_jordan_type(shift) == (4,)

    def test_shift_on_the_odd_block_of_the_2_5_algebra(self):
        from superalg import build
        from superalg.core import GradedVector, right_mul_matrix
        algebra = build("N2M", 5)
        rx = right_mul_matrix(algebra, GradedVector.basis(algebra, "e1"))
        odd = range(2, 7)
        block = RatMatrix.from_rows([[rx.entries[i][j] for j in odd] for i in odd])
        assert nilpotent_jordan_type(block) == (5,)
        assert jordan_type_by_powers(block) == (5,)

    def test_not_nilpotent_returns_none(self):
        assert nilpotent_jordan_type(RatMatrix.identity(3)) is None

    def test_non_square_is_input_error(self):
        with pytest.raises(InputError):
            nilpotent_jordan_type(RatMatrix.zeros(2, 3))

    def test_matches_power_enumeration_oracle(self):
        from oracles import random_nilpotent_matrix
        rng = random.Random(29)
        for _ in range(60):
            dim = rng.randint(1, 8)
            m = random_nilpotent_matrix(rng, dim)
            got = nilpotent_jordan_type(m)
            want = jordan_type_by_powers(m)
            assert got == want
            assert got is not None
            assert sum(got) == dim
            assert list(got) == sorted(got, reverse=True)
            # the largest part is the nilpotency index
            power = RatMatrix.identity(dim)
            for _ in range(got[0] - 1):
                power = power @ m
            assert not power.is_zero()
            assert (power @ m).is_zero()
