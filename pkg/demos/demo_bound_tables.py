"""
Closed-form bounds and the k-intervals where the inequality is proven
=====================================================================

Two regimes give provable ranges of k.  Sparse graphs, with m between n
and (sqrt(3)-1)/4 * n(n-1), admit the cube-root interval; dense graphs
past a threshold edge count admit the square-root interval.  This
script rebuilds both tables for graphs on 100 vertices.
"""

from brouwer import (
    dense_interval,
    dense_threshold_m,
    profile_monotone_limit,
    sk_bound_profile,
    sk_upper_bound,
    sparse_interval,
    sparse_m_cap,
    zhou_bound,
)

n = 100
cap = sparse_m_cap(n)
print(f"sparse regime at n={n}: {n} <= m <= {cap:.1f}")
print("\n  m    proven k-range")
for m in range(100, 701, 100):
    itv = sparse_interval(n, m)
    print(f"  {m:<4} [{itv.lo}, {itv.hi}]")

threshold = dense_threshold_m(n)
print(f"\ndense regime at n={n}: m >= {threshold}")
print("\n  m    proven k-range")
for m in range(1500, 2101, 100):
    itv = dense_interval(n, m)
    print(f"  {m:<4} [{itv.lo}, {itv.hi}]")

# near the threshold the real interval can hold no integer at all
itv = dense_interval(n, threshold)
print(f"\nat m = {threshold} exactly: applicable = {itv.applicable} ({itv.reason})")

# the square-root bound on S_k behind the sparse interval, at one (n, m)
m, k = 300, 60
print(f"\nS_{k} bound at (n={n}, m={m}): {sk_upper_bound(n, m, k):.3f} "
      f"vs ceiling {m + k * (k + 1) // 2}")

# the bound is the max over t of a profile in t = mu_1 / n; with k this
# far above profile_monotone_limit(n, m) the peak sits inside (0, 1)
for t in (0.0, 0.25, 0.5, 0.75, 1.0):
    print(f"  profile({t:.2f}) = {sk_bound_profile(n, m, k, t):.3f}")
print(f"  (profile stays nondecreasing only for k <= "
      f"{profile_monotone_limit(n, m):.2f})")

# Zhou's bound is exact on complete graphs: S_k(K_n) = nk
print("\nZhou bound on K_10 (m=45):",
      [round(zhou_bound(10, 45, k), 6) for k in range(1, 5)])
