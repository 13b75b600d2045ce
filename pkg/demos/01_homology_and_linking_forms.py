#!/usr/bin/env python3
"""Walk through the homological invariants computed from a linking matrix.

Surgery on a framed link in the 3-sphere produces a closed oriented
3-manifold, and the linking matrix alone already determines its homology
and its torsion linking form.  This script runs the standard small
examples: lens spaces from a single unknot, from a Hopf link and from
surgery chains, plus the Borromean rings giving the 3-torus.
"""

from fractions import Fraction

from surgeryinv import (
    borromean,
    first_homology,
    full_homology,
    hopf,
    lens_presentation,
    linking_form,
    smith_normal_form,
    unknot,
)


def show(title):
    print()
    print(title)
    print("-" * len(title))


show("Unknot with framing -p: the lens space L(p, 1)")
for p in (0, 1, 2, 5):
    l = unknot(-p)
    b1, torsion = first_homology(l)
    print(f"  framing {-p:+d}: b1 = {b1}, torsion = {torsion.factors or '{}'}")
print("  (framing 0 gives S^1 x S^2, framing -1 gives the 3-sphere,")
print("   framing -2 gives real projective 3-space)")

show("Hopf link with framings -p, -q: the lens space L(pq - 1, q)")
for p, q in [(2, 3), (3, 4), (1, 1)]:
    l = hopf(-p, -q)
    b1, torsion = first_homology(l)
    print(f"  framings {-p}, {-q}: b1 = {b1}, torsion = {torsion.factors or '{}'}")

show("Borromean rings, framings 0: the 3-torus")
h = full_homology(borromean())
print(f"  h0 = {h.h0}, h1 = {h.h1}, h2 = {h.h2}, h3 = {h.h3}")

show("Invariant factors via the Smith normal form")
l = ((3, 1), (1, 2))
snf = smith_normal_form(l)
print(f"  matrix {l}")
print(f"  diagonal of d: {tuple(snf.d[i][i] for i in range(2))}")
print("  so the torsion group is Z_5: this 2x2 matrix presents L(5, 2),")
print("  the smallest integral surgery presentation of that space.")

show("Torsion linking forms")
form = linking_form(unknot(-5))
print(f"  unknot(-5): form {form.q_mod1()} on Z_{form.factors[0]}")
form = linking_form(((3, 1), (1, 2)))
print(f"  L(5,2) matrix: form {form.q_mod1()} on Z_{form.factors[0]}")
print("  (any representative a/5 with a = 2*square mod 5 is the same form)")

show("Lens space presentations from chains of unknots")
for p, q in [(5, 2), (7, 3), (12, 5)]:
    man = lens_presentation(p, q)
    print(f"  L({p},{q}): chain {man.matrix}")
    print(f"           torsion Z_{p}, pinned form {man.form.q[0][0]} mod 1 "
          f"= {man.form.q_mod1()[0][0]}")

assert lens_presentation(2, 1).form.q_mod1() == ((Fraction(1, 2),),)
print()
print("done.")
