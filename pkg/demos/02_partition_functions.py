#!/usr/bin/env python3
"""Abelian Chern-Simons partition functions as exact Gauss sums.

A U(1)^n theory on a surgered manifold is specified by an integer coupling
matrix C; only the even symmetrization K = C + t(C) enters the partition
function, which is a finite sum of roots of unity over the n-th power of
the torsion group.  Everything is exact until the final numeric readout.
"""

import math

from surgeryinv import (
    conjugate,
    eval_numeric,
    lens_presentation,
    partition_function,
    presentation,
)


def value(c, man):
    return complex(eval_numeric(partition_function(c, man)))


print("U(1)^2 on L(2,1) with couplings [[1,1],[0,2]] (so K = [[2,1],[1,4]]):")
man = lens_presentation(2, 1)
z = partition_function(((1, 1), (0, 2)), man)
print(f"  exact terms: {z}")
print(f"  numeric:     {value(((1, 1), (0, 2)), man)}")
print("  the four summands are 1, -1, 1, 1.")
print()

print("Pure BF coupling C = [[0,k],[0,0]] on L(p,q): Z = p * gcd(k, p)")
for p, q, k in [(5, 1, 3), (6, 1, 4), (9, 2, 6), (12, 5, 8)]:
    man = lens_presentation(p, q)
    z = value(((0, k), (0, 0)), man)
    print(f"  p={p:2d} q={q} k={k}:  Z = {z.real:8.3f}   "
          f"p*gcd(k,p) = {p * math.gcd(k, p)}")
print()

print("A single U(1) factor at level k on L(p,1): quadratic Gauss sums")
for p, k in [(3, 1), (4, 1), (5, 2)]:
    man = lens_presentation(p, 1)
    z = partition_function(((k,),), man)
    print(f"  p={p} k={k}: {z}")
    v = complex(eval_numeric(z))
    print(f"         |Z| = {abs(v):.6f}   sqrt(p) = {math.sqrt(p):.6f}"
          f"   (equal when the pairing is nondegenerate)")
print()

print("Negating the coupling conjugates the partition function, term by term:")
man = lens_presentation(7, 2)
c = ((2, 1), (0, 1))
neg = tuple(tuple(-x for x in row) for row in c)
print(f"  Z(C)        = {partition_function(c, man)}")
print(f"  Z(-C)       = {partition_function(neg, man)}")
print(f"  conj(Z(C))  = {conjugate(partition_function(c, man))}")
print()

print("Manifolds with free first homology sum over the torsion part only")
print("(the free sector is absorbed into the formal normalization):")
man = presentation(((0,),))  # S^1 x S^2
print(f"  S^1 x S^2, any coupling: Z = {partition_function(((5,),), man)}")
print()
print("done.")
