"""Closed-form upper bounds on partial Laplacian eigenvalue sums.

Everything here is plain arithmetic in (n, m, k): the conjectured
right-hand side m + C(k+1, 2), a square-root bound on S_k built from the
first Zagreb index, Zhou's bound, de Caen's degree-square bound, and two
k-intervals (one for the sparse regime, one for the dense regime) on
which the conjectured inequality is provably true.

Real-valued endpoints are snapped to the nearest integer when within
1e-9 before ceil/floor, so k ranges never shift by one ulp.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

SNAP_TOL = 1e-9

SPARSE_COEFF = (math.sqrt(3.0) - 1.0) / 4.0


def _snap(x: float) -> float:
    r = round(x)
    return float(r) if abs(x - r) <= SNAP_TOL else x


def snap_ceil(x: float) -> int:
    return math.ceil(_snap(x))


def snap_floor(x: float) -> int:
    return math.floor(_snap(x))


def _check_nmk(n: int, m: int, k: int | None = None) -> None:
    if n < 2:
        raise ValueError(f"need n >= 2, got n={n}")
    slots = n * (n - 1) // 2
    if not 0 <= m <= slots:
        raise ValueError(f"m={m} outside [0, {slots}] for n={n}")
    if k is not None and not 1 <= k <= n:
        raise ValueError(f"k={k} outside [1, {n}]")


def brouwer_rhs(m: int, k: int) -> float:
    """Conjectured ceiling m + k(k+1)/2 for the sum of the k largest."""
    if m < 0:
        raise ValueError(f"need m >= 0, got m={m}")
    if k < 1:
        raise ValueError(f"need k >= 1, got k={k}")
    return float(m + k * (k + 1) // 2)


def sk_upper_bound(n: int, m: int, k: int) -> float:
    """S_k <= n + sqrt((k-1) (2m^2/(n-1) + mn + n^2/4))."""
    _check_nmk(n, m, k)
    radicand = (k - 1) * (2.0 * m * m / (n - 1) + m * n + n * n / 4.0)
    return n + math.sqrt(radicand)


def sk_bound_profile(n: int, m: int, k: int, t: float) -> float:
    """The same bound before fixing the top-eigenvalue ratio t = mu_1/n.

    g(t) = nt + sqrt((k-1) (2m^2/(n-1) + mn + n^2 t(1-t))) for t in [0, 1];
    sk_upper_bound dominates it everywhere, replacing nt by n and t(1-t)
    by its maximum 1/4 term by term.
    """
    _check_nmk(n, m, k)
    if not 0.0 <= t <= 1.0:
        raise ValueError(f"t={t} outside [0, 1]")
    radicand = (k - 1) * (2.0 * m * m / (n - 1) + m * n + n * n * t * (1.0 - t))
    return n * t + math.sqrt(radicand)


def profile_monotone_limit(n: int, m: int) -> float:
    """Largest k for which the profile is nondecreasing on all of [0, 1]."""
    _check_nmk(n, m)
    return 1.0 + 8.0 * m * m / (n * n * (n - 1)) + 4.0 * m / n


def zhou_bound(n: int, m: int, k: int) -> float:
    """Zhou's bound (2mk + sqrt(mk(n-k-1)(n^2-n-2m)))/(n-1), k <= n-2."""
    _check_nmk(n, m)
    if not 1 <= k <= n - 2:
        raise ValueError(f"k={k} outside Zhou's range [1, {n - 2}]")
    radicand = float(m * k * (n - k - 1) * (n * n - n - 2 * m))
    return (2.0 * m * k + math.sqrt(radicand)) / (n - 1)


def de_caen_m1_bound(n: int, m: int) -> float:
    """de Caen's bound 2m^2/(n-1) + mn - 2m on the first Zagreb index.

    Among connected graphs, equality holds exactly for stars and
    complete graphs.
    """
    _check_nmk(n, m)
    return 2.0 * m * m / (n - 1) + float(m * n) - 2.0 * m


@dataclass(frozen=True)
class KInterval:
    """An integer k-range on which the conjectured inequality is proven.

    When ``applicable`` is False the endpoints are still the computed
    values (where they exist) and ``reason`` says what failed; callers
    render such rows as placeholders rather than raising.
    """

    regime: str  # "sparse" or "dense"
    lo: int
    hi: int
    applicable: bool
    reason: str = ""

    def ks(self) -> range:
        return range(self.lo, self.hi + 1) if self.applicable else range(0)


def sparse_m_cap(n: int) -> float:
    """Upper edge-count limit (sqrt(3)-1)/4 * n(n-1) of the sparse regime."""
    if n < 2:
        raise ValueError(f"need n >= 2, got n={n}")
    return SPARSE_COEFF * n * (n - 1)


def sparse_interval(n: int, m: int) -> KInterval:
    """k-interval [ceil((8m^2/(n-1) + 4mn + n^2)^(1/3)), n].

    Applicable in the sparse regime n <= m <= (sqrt(3)-1)/4 * n(n-1),
    where the cube root provably stays below n.
    """
    _check_nmk(n, m)
    cap = sparse_m_cap(n)
    lo = snap_ceil((8.0 * m * m / (n - 1) + 4.0 * m * n + n * n) ** (1.0 / 3.0))
    if m < n:
        return KInterval("sparse", lo, n, False, f"m={m} below regime floor n={n}")
    if m > _snap(cap):
        return KInterval(
            "sparse", lo, n, False,
            f"m={m} above regime cap {cap:.3f}",
        )
    return KInterval("sparse", lo, n, True)


def _dense_endpoints(n: int, m: int) -> tuple[float, float]:
    """Real endpoints (lower, upper) of the dense-regime k-interval."""
    inner = 2.0 * m * m + float(m * n * (n - 1))
    lower_sq = 2.0 * n - 2.0 * m + 2.0 * math.sqrt(inner)
    # lower_sq is provably positive; the guard only covers rounding
    lower = math.sqrt(lower_sq) if lower_sq > 0.0 else 0.0
    upper = 1.0 + 8.0 * m * m / (n * n * (n - 1)) + 4.0 * m / n
    return lower, upper


def dense_interval(n: int, m: int) -> KInterval:
    """k-interval [ceil(sqrt(2n - 2m + 2 sqrt(2m^2 + mn(n-1)))), upper].

    The upper endpoint is floor(1 + 8m^2/(n^2(n-1)) + 4m/n) capped at n.
    Applicable when the real lower endpoint is strictly below the real
    upper endpoint and the snapped range contains an integer.
    """
    _check_nmk(n, m)
    lower, upper = _dense_endpoints(n, m)
    lo = max(1, snap_ceil(lower))
    hi = min(n, snap_floor(upper))
    if not lower < upper:
        return KInterval(
            "dense", lo, hi, False,
            f"lower endpoint {lower:.4f} not below upper endpoint {upper:.4f}",
        )
    if lo > hi:
        return KInterval(
            "dense", lo, hi, False,
            f"no integer k in [{lower:.4f}, {min(float(n), upper):.4f}]",
        )
    return KInterval("dense", lo, hi, True)


def dense_threshold_m(n: int) -> int | None:
    """Smallest m whose real dense-regime endpoints satisfy lower < upper.

    This is the edge-count threshold from which the dense interval
    exists as a real range; for m just past it the range can still miss
    every integer, which dense_interval reports separately.  Returns
    None when no m up to C(n, 2) qualifies.
    """
    if n < 2:
        raise ValueError(f"need n >= 2, got n={n}")
    for m in range(n * (n - 1) // 2 + 1):
        lower, upper = _dense_endpoints(n, m)
        if lower < upper:
            return m
    return None


@dataclass(frozen=True)
class BoundEvaluation:
    """Every bound evaluated at one (n, m, k) point."""

    n: int
    m: int
    k: int
    brouwer_rhs: float
    sk_bound: float
    profile_at_1: float
    zhou: float | None
    de_caen_m1: float


def evaluate_bounds(n: int, m: int, k: int) -> BoundEvaluation:
    """Evaluate all bounds at (n, m, k); Zhou is None outside k <= n-2."""
    _check_nmk(n, m, k)
    zhou = zhou_bound(n, m, k) if k <= n - 2 else None
    return BoundEvaluation(
        n=n,
        m=m,
        k=k,
        brouwer_rhs=brouwer_rhs(m, k),
        sk_bound=sk_upper_bound(n, m, k),
        profile_at_1=sk_bound_profile(n, m, k, 1.0),
        zhou=zhou,
        de_caen_m1=de_caen_m1_bound(n, m),
    )
