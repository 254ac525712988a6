import math

import pytest

from brouwer.bounds import (
    brouwer_rhs,
    de_caen_m1_bound,
    dense_interval,
    dense_threshold_m,
    evaluate_bounds,
    profile_monotone_limit,
    sk_bound_profile,
    sk_upper_bound,
    sparse_interval,
    sparse_m_cap,
    zhou_bound,
)
from brouwer.graphs import family, first_zagreb

REL = 1e-12

# k-interval grids for n=100, frozen from a 40-digit mpmath evaluation
SPARSE_GRID_N100 = [
    (100, 38, 100), (200, 46, 100), (300, 52, 100), (400, 57, 100),
    (500, 62, 100), (600, 66, 100), (700, 70, 100),
]
DENSE_GRID_N100 = [
    (1500, 78, 79), (1600, 79, 85), (1700, 80, 92), (1800, 81, 99),
    (1900, 82, 100), (2000, 83, 100), (2100, 83, 100),
]


class TestBrouwerRhs:
    def test_values(self):
        assert brouwer_rhs(6, 2) == 9.0
        assert brouwer_rhs(0, 1) == 1.0
        assert brouwer_rhs(100, 38) == 841.0

    def test_validation(self):
        with pytest.raises(ValueError):
            brouwer_rhs(-1, 1)
        with pytest.raises(ValueError):
            brouwer_rhs(3, 0)


class TestSkUpperBound:
    def test_k_one_collapses_to_n(self):
        assert sk_upper_bound(4, 3, 1) == 4.0
        assert sk_upper_bound(9, 14, 1) == 9.0

    def test_frozen_values(self):
        # 4 + sqrt(22) and the n=100 point, both via mpmath at 40 digits
        assert sk_upper_bound(4, 3, 2) == pytest.approx(8.690415759823430, rel=REL)
        assert sk_upper_bound(100, 100, 38) == pytest.approx(
            785.5470424958068, rel=REL
        )

    def test_validation(self):
        with pytest.raises(ValueError):
            sk_upper_bound(1, 0, 1)
        with pytest.raises(ValueError):
            sk_upper_bound(4, 7, 1)
        with pytest.raises(ValueError):
            sk_upper_bound(4, 3, 5)


class TestProfile:
    def test_frozen_values(self):
        assert sk_bound_profile(4, 3, 2, 1.0) == pytest.approx(
            8.242640687119285, rel=REL
        )
        assert sk_bound_profile(4, 3, 2, 0.5) == pytest.approx(
            6.690415759823430, rel=REL
        )

    def test_k_one_is_linear(self):
        for t in (0.0, 0.25, 1.0):
            assert sk_bound_profile(7, 10, 1, t) == pytest.approx(7 * t, abs=1e-12)

    def test_t_validation(self):
        for bad in (-0.1, 1.1):
            with pytest.raises(ValueError):
                sk_bound_profile(4, 3, 2, bad)

    def test_dominated_by_sk_upper_bound(self):
        for n, m, k in [(6, 9, 3), (12, 30, 7), (30, 200, 18), (50, 300, 2)]:
            bound = sk_upper_bound(n, m, k)
            for i in range(101):
                t = i / 100.0
                assert sk_bound_profile(n, m, k, t) <= bound + 1e-9

    def test_monotone_below_limit(self):
        for n, m in [(10, 30), (20, 100), (40, 300)]:
            k = min(n, math.floor(profile_monotone_limit(n, m)))
            grid = [sk_bound_profile(n, m, k, i / 100.0) for i in range(101)]
            scale = max(map(abs, grid))
            assert all(
                b >= a - 1e-12 * scale for a, b in zip(grid, grid[1:])
            ), f"profile not nondecreasing at n={n} m={m} k={k}"


class TestZhouBound:
    def test_frozen_values(self):
        assert zhou_bound(4, 3, 1) == pytest.approx(4.0, rel=REL)
        # (2*4*2 + sqrt(4*2*2*12)) / 4 via mpmath at 40 digits
        assert zhou_bound(5, 4, 2) == pytest.approx(7.4641016151377546, rel=REL)

    def test_complete_graph_collapses_to_nk(self):
        # at m = C(n,2) the radical vanishes and the bound is exactly nk
        for n in range(3, 20):
            m = n * (n - 1) // 2
            for k in range(1, n - 1):
                assert zhou_bound(n, m, k) == pytest.approx(float(n * k), abs=1e-9)

    def test_k_range(self):
        for bad in (0, 3, 4):
            with pytest.raises(ValueError):
                zhou_bound(4, 3, bad)


class TestDeCaen:
    def test_frozen_values(self):
        assert de_caen_m1_bound(5, 4) == pytest.approx(20.0, rel=REL)
        assert de_caen_m1_bound(4, 6) == pytest.approx(36.0, rel=REL)
        assert de_caen_m1_bound(2, 1) == pytest.approx(2.0, rel=REL)

    def test_equality_on_stars_and_completes(self):
        for n in range(3, 31):
            star = family("star", n)
            comp = family("complete", n)
            assert de_caen_m1_bound(n, star.m) == float(first_zagreb(star))
            assert de_caen_m1_bound(n, comp.m) == float(first_zagreb(comp))


class TestSparseInterval:
    def test_n100_grid(self):
        for m, lo, hi in SPARSE_GRID_N100:
            itv = sparse_interval(100, m)
            assert itv.applicable
            assert (itv.regime, itv.lo, itv.hi) == ("sparse", lo, hi)

    def test_applicability_edges(self):
        assert math.floor(sparse_m_cap(100)) == 1811
        assert sparse_interval(100, 1811).applicable
        assert not sparse_interval(100, 1812).applicable
        assert "cap" in sparse_interval(100, 1812).reason
        assert not sparse_interval(100, 99).applicable
        assert "floor" in sparse_interval(100, 99).reason
        assert sparse_interval(100, 100).applicable

    def test_endpoint_invariant(self):
        # lo is the least integer whose cube reaches the radicand, and
        # the regime guarantees it stays within [1, n]
        for n in (10, 25, 60, 100):
            for m in range(n, math.floor(sparse_m_cap(n)) + 1, 7):
                itv = sparse_interval(n, m)
                radicand = 8 * m * m / (n - 1) + 4 * m * n + n * n
                assert itv.applicable
                assert 1 <= itv.lo <= itv.hi == n
                assert itv.lo ** 3 >= radicand - 1e-6
                assert (itv.lo - 1) ** 3 < radicand

    def test_ks(self):
        assert list(sparse_interval(100, 700).ks()) == list(range(70, 101))
        assert list(sparse_interval(100, 99).ks()) == []


class TestDenseInterval:
    def test_n100_grid(self):
        for m, lo, hi in DENSE_GRID_N100:
            itv = dense_interval(100, m)
            assert itv.applicable, f"m={m}: {itv.reason}"
            assert (itv.regime, itv.lo, itv.hi) == ("dense", lo, hi)

    def test_precondition_failure(self):
        itv = dense_interval(100, 1000)
        assert not itv.applicable
        assert "not below" in itv.reason

    def test_empty_integer_range(self):
        # just past the threshold the real range exists but misses
        # every integer
        itv = dense_interval(100, 1468)
        assert not itv.applicable
        assert (itv.lo, itv.hi) == (78, 77)
        assert "no integer" in itv.reason

    def test_lower_endpoint_invariant(self):
        # k >= lower means 2m + k^2 >= 2n + 2 sqrt(2m^2 + mn(n-1))
        for n, m in [(100, 1500), (100, 2100), (50, 400), (20, 120)]:
            itv = dense_interval(n, m)
            if not itv.applicable:
                continue
            target = 2 * n + 2 * math.sqrt(2 * m * m + m * n * (n - 1))
            assert 2 * m + itv.lo ** 2 >= target - 1e-6
            assert itv.hi <= n

    def test_complete_graph_interval_is_empty(self):
        # at m = C(n,2) the real lower endpoint is sqrt(n(n+1)) > n
        for n in (5, 10, 30):
            itv = dense_interval(n, n * (n - 1) // 2)
            assert not itv.applicable
            assert itv.lo == n + 1


class TestDenseThreshold:
    def test_frozen_values(self):
        # mpmath 40-digit brute scans
        assert dense_threshold_m(100) == 1468
        assert dense_threshold_m(50) == 367
        assert dense_threshold_m(10) == 15
        assert dense_threshold_m(2) == 1

    def test_agrees_with_direct_scan(self):
        # independent reimplementation of the precondition
        def scan(n):
            for m in range(n * (n - 1) // 2 + 1):
                lower = math.sqrt(
                    2 * n - 2 * m + 2 * math.sqrt(2 * m * m + m * n * (n - 1))
                )
                upper = 1 + 8 * m * m / (n * n * (n - 1)) + 4 * m / n
                if lower < upper:
                    return m
            return None

        for n in (2, 5, 10, 23, 50):
            assert dense_threshold_m(n) == scan(n)

    def test_validation(self):
        with pytest.raises(ValueError):
            dense_threshold_m(1)


class TestEvaluateBounds:
    def test_zhou_presence(self):
        ev = evaluate_bounds(4, 3, 2)
        assert ev.zhou == pytest.approx(6.0, rel=REL)
        assert evaluate_bounds(4, 3, 3).zhou is None
        assert evaluate_bounds(4, 3, 4).zhou is None

    def test_fields(self):
        ev = evaluate_bounds(5, 4, 2)
        assert ev.brouwer_rhs == 7.0
        assert ev.de_caen_m1 == pytest.approx(20.0, rel=REL)
        assert ev.sk_bound >= ev.profile_at_1 - 1e-9
