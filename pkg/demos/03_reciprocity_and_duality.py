#!/usr/bin/env python3
"""The Gauss-sum reciprocity identity and the duality it induces.

The identity trades a sum over (Z^s / K0 Z^s)^m weighted by L x K0^-1 for
a sum over (Z^r / L0 Z^r)^n weighted by K x L0^-1, at the cost of scalar
prefactors: inverse square roots of the determinants and an eighth root
of unity built from the two signatures.  Reading the right-hand sum as a
partition function pairs every U(1)^n theory (K, L) with a dual U(1)^m
theory (-L, K).
"""

import random

from surgeryinv import (
    cs_dual,
    eval_numeric,
    gauss_sum_over_lattice,
    partition_function,
    presentation,
    reciprocity_sides,
)


def cnum(v):
    return complex(v)


print("Worked instance: L = (2), K = [[2,1],[1,4]]")
report = reciprocity_sides(((2,),), ((2, 1), (1, 4)))
print(f"  det K0 = {report.det_k0}, sigma(K) = {report.sigma_k}, "
      f"det L0 = {report.det_l0}, sigma(L) = {report.sigma_l}")
print(f"  lhs = {cnum(report.lhs)}")
print(f"  rhs = {cnum(report.rhs)}")
print(f"  |lhs - rhs| = {float(report.abs_diff):.3e}")
print("  the raw dual sum evaluates to i*sqrt(7):")
g = gauss_sum_over_lattice(((2,),), ((2, 1), (1, 4)), +1)
print(f"    {g}")
print(f"    = {cnum(eval_numeric(g))}")
print()

print("Random instances (sizes up to 3, entries in [-6, 6]):")
rng = random.Random(9)


def rand_sym(n, even=False):
    m = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(i, n):
            m[i][j] = m[j][i] = rng.randint(-6, 6)
        if even:
            m[i][i] = 2 * rng.randint(-3, 3)
    return tuple(tuple(r) for r in m)


shown = 0
while shown < 4:
    l = rand_sym(rng.randint(1, 3))
    k = rand_sym(rng.randint(1, 3), even=True)
    try:
        report = reciprocity_sides(l, k, budget=100_000)
    except Exception:
        continue
    shown += 1
    print(f"  L = {l}")
    print(f"  K = {k}")
    print(f"    |lhs - rhs| = {float(report.abs_diff):.3e}"
          f"   (lhs = {cnum(report.lhs):.6f})")
print()

print("Duality: the U(1)^n theory (K, L) pairs with the U(1)^m theory (-L, K).")
l = ((-2, 0), (0, -4))
k = ((2, 1), (1, 4))
dual = cs_dual(l, k)
print(f"  original: coupling side K = {k}, linking matrix L = {l}")
print(f"  dual:     coupling matrix  {dual.coupling} (symmetrizes to -L),")
print(f"            linking matrix   {dual.linking}")
z_dual = partition_function(dual.coupling, presentation(dual.linking))
lhs_sum = gauss_sum_over_lattice(l, k, +1)
print(f"  dual partition function:   {z_dual}")
print(f"  left-hand reciprocity sum: {lhs_sum}")
print(f"  identical multisets: {z_dual == lhs_sum}")
print()
print("done.")
