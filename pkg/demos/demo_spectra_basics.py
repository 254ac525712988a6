"""
Laplacian spectra and the eigenvalue-sum inequality
===================================================

Build a few small graphs, solve their Laplacian spectra, and compare
S_k, the sum of the k largest eigenvalues, against m + k(k+1)/2.
"""

import numpy as np

from brouwer import (
    check_all_k,
    eigenvalues_sym,
    family,
    from_edge_list,
    laplacian,
    s_k,
)

# a 5-cycle with one chord
g = from_edge_list(5, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (1, 4)])
L = laplacian(g)
print("Laplacian of the chorded 5-cycle:")
print(L.astype(int))

spec = eigenvalues_sym(L)
print("\neigenvalues (descending):", np.round(spec.values, 6))
print("solver residual:", spec.residual)

# the trace equals 2m, the smallest eigenvalue is 0
print("\ntrace check: sum =", spec.values.sum(), " 2m =", 2 * g.m)

# S_k versus the conjectured ceiling m + k(k+1)/2, for every k
print("\n k   S_k        m+k(k+1)/2   margin     status")
for rec in check_all_k(g):
    print(f" {rec.k}   {rec.s_k:<9.5f}  {rec.rhs:<11g}  {rec.margin:<9.5f}  {rec.status}")

# stars meet the ceiling exactly at k = 1: S_1 = n = m + 1
star = family("star", 8)
rec = check_all_k(star)[0]
print(f"\nstar on 8 vertices, k=1: S_1 = {rec.s_k:.6f}, "
      f"ceiling = {rec.rhs:g}, status = {rec.status}")

# complete graphs meet it at k = n - 1
kn = family("complete", 6)
spec = eigenvalues_sym(laplacian(kn))
print(f"K_6, k=5: S_5 = {s_k(spec, 5):.6f}, ceiling = {kn.m + 15}")
