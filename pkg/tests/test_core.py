"""Tests for core module."""

from math import comb

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from finecat import core
from finecat.validators import InexactDivisionError

FINE = (1, 0, 1, 2, 6, 18, 57, 186, 622, 2120)
CATALAN = (1, 1, 2, 5, 14, 42, 132, 429, 1430, 4862)


class TestExactArithmetic:
    """Tests for binomial and exact_div."""

    def test_binomial_outside_range_is_zero(self):
        """C(n, k) vanishes for k < 0, k > n and n < 0."""
        assert core.binomial(4, -1) == 0
        assert core.binomial(4, 5) == 0
        assert core.binomial(-2, 1) == 0
        assert core.binomial(6, 3) == 20

    def test_exact_div(self):
        """Exact quotients come back as int."""
        assert core.exact_div(42, 6) == 7
        assert core.exact_div(-42, 6) == -7

    def test_inexact_div_raises(self):
        """A remainder is an error, never rounded."""
        with pytest.raises(InexactDivisionError, match="not divisible"):
            core.exact_div(7, 2, "g2_closed(3, 1)")

    def test_div_by_zero_raises(self):
        """Zero denominator raises InexactDivisionError."""
        with pytest.raises(InexactDivisionError, match="division by zero"):
            core.exact_div(1, 0)


class TestCatalan:
    """Tests for Catalan numbers."""

    def test_small_values(self):
        """C_0 = 1, C_3 = 5, C_5 = 42."""
        assert core.catalan(0) == 1
        assert core.catalan(3) == 5
        assert core.catalan(5) == 42

    def test_negative_raises(self):
        """Negative index is rejected."""
        with pytest.raises(ValueError, match="must be nonnegative"):
            core.catalan(-1)

    def test_sequence_matches_closed_form(self):
        """Recurrence-built prefix equals C(2n, n)/(n+1)."""
        assert core.catalan_sequence(40).values == tuple(core.catalan(n) for n in range(40))

    def test_offset_sequence(self):
        """Offset 1 starts at C_1."""
        assert core.catalan_sequence(6, 1).values == CATALAN[1:7]

    def test_big_values_are_exact(self):
        """C_100 has 57 digits and no rounding."""
        assert core.catalan(100) == comb(200, 100) // 101
        assert len(str(core.catalan(100))) == 57


class TestSequence:
    """Tests for the Sequence container."""

    def test_one_based_indexing(self, catalan_prefix):
        """f(1) is the first term."""
        assert catalan_prefix(1) == 1
        assert catalan_prefix(4) == 5

    def test_out_of_range_raises(self, catalan_prefix):
        """Index 0 and past-the-end raise IndexError."""
        with pytest.raises(IndexError):
            catalan_prefix(0)
        with pytest.raises(IndexError):
            catalan_prefix(11)

    def test_prefix_too_long_raises(self, catalan_prefix):
        """Cannot take more terms than stored."""
        with pytest.raises(ValueError, match="10 terms, 11 requested"):
            catalan_prefix.prefix(11)

    def test_label_ignored_in_equality(self):
        """Sequences compare by values only."""
        assert core.Sequence((1, 2), "a") == core.Sequence((1, 2), "b")


class TestFineSequence:
    """Tests for Fine numbers."""

    def test_first_three(self):
        """F_1, F_2, F_3 = 1, 0, 1."""
        assert core.fine_sequence(3).values == (1, 0, 1)

    def test_first_ten(self):
        """Known prefix of the Fine numbers."""
        assert core.fine_sequence(10).values == FINE

    def test_zero_length_raises(self):
        """N < 1 is rejected."""
        with pytest.raises(ValueError, match="must be positive"):
            core.fine_sequence(0)


class TestInvertTransform:
    """Tests for invert_transform and its inverse."""

    def test_unit_impulse_gives_ones(self):
        """(1, 0, 0, ...) maps to all ones."""
        f = core.Sequence((1, 0, 0, 0, 0, 0))
        assert core.invert_transform(f).values == (1,) * 6

    def test_fine_to_catalan(self, fine_prefix):
        """The invert transform of the Fine numbers is C_{n-1}."""
        assert core.invert_transform(fine_prefix).values == CATALAN

    def test_segner(self, catalan_prefix):
        """The invert transform of C_0, C_1, ... is C_1, C_2, ..."""
        assert core.invert_transform(catalan_prefix).values == core.catalan_sequence(10, 1).values

    def test_head_must_be_one(self):
        """f(1) != 1 is rejected."""
        with pytest.raises(ValueError, match=r"\(1\) must be 1"):
            core.invert_transform(core.Sequence((2, 1, 1)))

    def test_too_short_raises(self, catalan_prefix):
        """Asking for more terms than f has is rejected."""
        with pytest.raises(ValueError, match="required"):
            core.invert_transform(catalan_prefix, 12)

    @settings(max_examples=50, deadline=None)
    @given(st.lists(st.integers(min_value=0, max_value=50), min_size=0, max_size=12))
    def test_inverse_roundtrip(self, tail):
        """invert_inverse undoes invert_transform."""
        f = core.Sequence((1, *tail))
        assert core.invert_inverse(core.invert_transform(f)) == f


class TestTower:
    """Tests for the Fine tower f_0..f_4."""

    def test_levels(self, tower):
        """f_0 = Fine, f_1 = C_{n-1}, f_2 = C_n, f_3 = C(2n-1, n)."""
        assert tower[0].values[:10] == FINE
        assert tower[1].values[:10] == CATALAN
        assert tower[2].values[:9] == CATALAN[1:10]
        assert tower[3].values == tuple(comb(2 * n - 1, n) for n in range(1, 21))

    def test_levels_to_sixty(self):
        """The invert-transform tower matches the closed forms for n <= 60."""
        tower = core.fine_tower(60)
        ns = range(1, 61)
        assert tower[1].values == tuple(core.catalan(n - 1) for n in ns)
        assert tower[2].values == tuple(core.catalan(n) for n in ns)
        assert tower[3].values == tuple(comb(2 * n - 1, n) for n in ns)

    def test_f4_prefix(self, tower):
        """f_4 starts 1, 4, 17, 74."""
        assert tower[4].values[:4] == (1, 4, 17, 74)

    def test_labels(self, tower):
        """Levels are labeled f0..f4."""
        assert [seq.label for seq in tower] == ["f0", "f1", "f2", "f3", "f4"]

    def test_bad_level_raises(self):
        """Levels outside 0..4 are rejected."""
        with pytest.raises(ValueError, match="0..4"):
            core.tower_sequence(5, 3)


class TestConvolutionTriangle:
    """Tests for convolution triangles G_m."""

    @pytest.mark.parametrize("m", [1, 2, 3, 4])
    def test_entries_nonnegative(self, m):
        """Every entry of G_m is a count, so never negative."""
        triangle = core.tower_triangle(m, 60)
        assert all(value >= 0 for row in triangle.rows for value in row)

    def test_known_rows(self, known_rows):
        """First rows of G_1..G_4."""
        for m, rows in known_rows.items():
            assert core.tower_triangle(m, 3).rows == tuple(rows)

    def test_catalan_entry(self, catalan_prefix):
        """t(3, 2) = C_0 C_1 + C_1 C_0 = 2."""
        assert core.convolution_triangle(catalan_prefix, 3)(3, 2) == 2

    def test_fine_first_column(self, fine_prefix):
        """t(n, 1) = f(n)."""
        t = core.convolution_triangle(fine_prefix)
        assert t.column(1) == fine_prefix.values

    def test_unit_diagonal(self, tower):
        """t(n, n) = f(1)^n = 1 at every level."""
        for m in range(1, 5):
            t = core.convolution_triangle(tower[m - 1])
            assert all(t(n, n) == 1 for n in range(1, 21))

    def test_row_sums_are_next_level(self, tower):
        """Row sums of G_m give f_m."""
        for m in range(1, 5):
            assert core.tower_triangle(m, 20).row_sums().values == tower[m].values

    def test_out_of_triangle_raises(self):
        """Entries above the diagonal are not stored."""
        t = core.tower_triangle(2, 4)
        with pytest.raises(IndexError):
            t(2, 3)

    def test_bad_rows_rejected(self):
        """Row n must have n entries."""
        with pytest.raises(ValueError, match="must hold 2 entries"):
            core.Triangle(((1,), (1,)))


class TestPascalPower:
    """Tests for L^p."""

    def test_zero_power_is_identity(self):
        """L^0 = I, with 0^0 = 1 on the diagonal."""
        assert core.pascal_power(6, 0).as_triangle() == core.identity_triangle(6)

    def test_entry(self):
        """L^2 entry (3, 1) = 2^2 C(2, 0) = 4."""
        assert core.pascal_power(5, 2).entry(3, 1) == 4
        assert core.pascal_power(5, 2).entry(1, 3) == 0

    def test_inverse(self):
        """L . L^-1 = I."""
        assert core.pascal_power(8, 1) @ core.pascal_power(8, -1) == core.identity_triangle(8)

    @settings(max_examples=40, deadline=None)
    @given(
        order=st.integers(min_value=1, max_value=8),
        p=st.integers(min_value=-3, max_value=3),
        q=st.integers(min_value=-3, max_value=3),
    )
    def test_exponents_add(self, order, p, q):
        """L^p . L^q = L^(p+q)."""
        product = core.pascal_power(order, p) @ core.pascal_power(order, q)
        assert product == core.pascal_power(order, p + q).as_triangle()

    def test_order_mismatch_raises(self):
        """Products need equal orders."""
        with pytest.raises(ValueError, match="order mismatch"):
            core.tower_triangle(1, 3) @ core.pascal_power(4, 1)


class TestTriangleTimesPascalPower:
    """Tests for T . L^p."""

    def test_g1_to_g2(self):
        """G_1 . L = G_2."""
        g1 = core.tower_triangle(1, 15)
        assert core.triangle_times_pascal_power(g1, 1) == core.tower_triangle(2, 15)

    def test_g3_to_g1(self):
        """G_3 . L^-2 = G_1."""
        g3 = core.tower_triangle(3, 15)
        assert core.triangle_times_pascal_power(g3, -2) == core.tower_triangle(1, 15)

    def test_zero_power(self):
        """T . L^0 = T."""
        g4 = core.tower_triangle(4, 10)
        assert core.triangle_times_pascal_power(g4, 0) == g4

    def test_matrix_route_matches_convolution(self):
        """G_1 . L^(m-1) = G_m for m = 1..4."""
        for m in range(1, 5):
            assert core.matrix_triangle(m, 60) == core.tower_triangle(m, 60)


class TestMirror:
    """Tests for Triangle.mirror."""

    def test_mirror_of_g2(self):
        """Row 4 of G_2 reversed is the ballot row 1, 3, 5, 5."""
        assert core.tower_triangle(2, 4).mirror().row(4) == (1, 3, 5, 5)

    def test_mirror_is_involution(self):
        """Mirroring twice gives the triangle back."""
        g3 = core.tower_triangle(3, 8)
        assert g3.mirror().mirror() == g3


class TestSeries:
    """Tests for truncated power series."""

    def test_catalan_square(self, catalan_prefix):
        """[x^3] (C_0 x + C_1 x^2 + ...)^2 = 2."""
        assert core.series_power_coefficient(catalan_prefix, 2, 3) == 2

    def test_first_power(self, fine_prefix):
        """k = 1 reads off f(n)."""
        assert all(
            core.series_power_coefficient(fine_prefix, 1, n) == fine_prefix(n)
            for n in range(1, 11)
        )

    def test_top_power(self, tower):
        """k = n gives f(1)^n = 1."""
        assert core.series_power_coefficient(tower[3], 7, 7) == 1

    def test_matches_convolution(self, tower):
        """Series powers and the convolution recurrence agree."""
        for m in range(1, 5):
            t = core.convolution_triangle(tower[m - 1], 10)
            for n in range(1, 11):
                for k in range(1, n + 1):
                    assert core.series_power_coefficient(tower[m - 1], k, n) == t(n, k)

    @settings(max_examples=40, deadline=None)
    @given(
        coefficients=st.lists(st.integers(min_value=-5, max_value=5), min_size=1, max_size=8),
        k=st.integers(min_value=0, max_value=6),
    )
    def test_power_is_repeated_product(self, coefficients, k):
        """Square-and-multiply equals k-fold multiplication."""
        series = core.SeriesPoly(tuple(coefficients))
        expected = core.SeriesPoly.one(series.order)
        for _ in range(k):
            expected = expected * series
        assert series**k == expected

    def test_addition_truncates(self):
        """Sums keep the shorter order."""
        total = core.SeriesPoly((1, 2, 3)) + core.SeriesPoly((4, 5))
        assert total.coefficients == (5, 7)
