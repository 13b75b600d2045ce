"""Homology and torsion linking form of a surgered 3-manifold.

For a closed oriented 3-manifold given by surgery on a link with n x n
linking matrix L, the first homology is Z^n / L Z^n: its free rank b1 is
the corank of L and its torsion part is read off the Smith normal form of
the nonsingular block L0.  The torsion linking form is represented by the
rational matrix inverse of L0, pushed onto a set of cyclic generators
aligned with the invariant factors.
"""

import math
from dataclasses import dataclass
from fractions import Fraction

from .exactmat import (
    block_decompose,
    int_inverse,
    is_symmetric,
    rat_inverse,
    smith_normal_form,
)


@dataclass(frozen=True)
class TorsionGroup:
    """Finite abelian group in invariant-factor form p1 | p2 | ... | pt."""

    factors: tuple

    def __post_init__(self):
        if any(p < 2 for p in self.factors):
            raise ValueError("invariant factors must be >= 2")
        for a, b in zip(self.factors, self.factors[1:]):
            if b % a != 0:
                raise ValueError("invariant factors must form a divisibility chain")

    @property
    def order(self):
        return math.prod(self.factors)


@dataclass(frozen=True)
class Group:
    """Finitely generated abelian group: free rank plus torsion factors."""

    free_rank: int
    factors: tuple = ()

    def __str__(self):
        parts = []
        if self.free_rank == 1:
            parts.append("Z")
        elif self.free_rank > 1:
            parts.append(f"Z^{self.free_rank}")
        parts.extend(f"Z_{p}" for p in self.factors)
        return " + ".join(parts) if parts else "0"


@dataclass(frozen=True)
class HomologySummary:
    """All homology of the closed oriented 3-manifold, fixed by (b1, torsion).

    Poincare duality and universal coefficients force h0 = h3 = Z,
    h1 = Z^b1 + torsion and h2 = Z^b1.
    """

    b1: int
    torsion: TorsionGroup
    h0: Group
    h1: Group
    h2: Group
    h3: Group


@dataclass(frozen=True)
class LinkingForm:
    """Symmetric bilinear form on the torsion group, valued in Q/Z.

    q holds exact rationals that are only reduced into [0,1) at comparison
    time, keeping intermediate arithmetic sign-transparent.  Entry q[i][j]
    is the pairing of the i-th and j-th cyclic generators; factors[i] times
    any entry of row i is an integer.
    """

    factors: tuple
    q: tuple

    @property
    def rank(self):
        return len(self.factors)

    @property
    def order(self):
        return math.prod(self.factors)

    def q_mod1(self):
        return tuple(tuple(x - (x.numerator // x.denominator) for x in row)
                     for row in self.q)


def first_homology(l):
    """First homology of the surgered manifold: (b1, torsion group)."""
    if not is_symmetric(l):
        raise ValueError("linking matrix must be symmetric")
    n = len(l)
    snf = smith_normal_form(l)
    factors = tuple(d for d in snf.invariant_factors() if d >= 2)
    b1 = n - len(snf.invariant_factors())
    return b1, TorsionGroup(factors)


def full_homology(l):
    b1, torsion = first_homology(l)
    return HomologySummary(
        b1=b1,
        torsion=torsion,
        h0=Group(1),
        h1=Group(b1, torsion.factors),
        h2=Group(b1),
        h3=Group(1),
    )


def linking_form_with_generators(l):
    """Torsion linking form plus the generator columns it is written in.

    With L0 the nonsingular block of the linking matrix and d = u * L0 * v
    its Smith form, the classes of the columns g_k = inverse(u) e_k (for
    invariant factors d_k >= 2) generate the torsion group, the k-th with
    order d_k: x lies in L0 Z^r exactly when u x lies in d Z^r.  The form
    on these generators is Q[k][m] = t(g_k) * inverse(L0) * g_m, read
    modulo 1.  A different valid generator choice changes Q only by a
    group automorphism, which every Gauss sum downstream is blind to.
    """
    dec = block_decompose(l)
    snf = smith_normal_form(dec.a0)
    u_inv = int_inverse(snf.u)
    cols = [k for k in range(dec.rank) if snf.d[k][k] >= 2]
    factors = tuple(snf.d[k][k] for k in cols)
    gens = tuple(tuple(u_inv[i][k] for i in range(dec.rank)) for k in cols)
    l0_inv = rat_inverse(dec.a0) if dec.rank else ()
    q = tuple(
        tuple(
            sum(g1[i] * l0_inv[i][j] * g2[j]
                for i in range(dec.rank) for j in range(dec.rank))
            for g2 in gens
        )
        for g1 in gens
    )
    form = LinkingForm(factors, q)
    _check_form(form)
    return form, gens


def linking_form(l):
    """Torsion linking form of the surgered manifold."""
    return linking_form_with_generators(l)[0]


def _check_form(form):
    # well-definedness on the group: p_i * q[i][j] and p_j * q[i][j] in Z
    for i, p in enumerate(form.factors):
        for j in range(form.rank):
            for mult in (p, form.factors[j]):
                if (mult * form.q[i][j]).denominator != 1:
                    raise AssertionError("linking form not defined on the group")
    for i in range(form.rank):
        for j in range(form.rank):
            if (form.q[i][j] - form.q[j][i]).denominator != 1:
                raise AssertionError("linking form not symmetric mod 1")


@dataclass(frozen=True)
class ManifoldPresentation:
    """A linking matrix together with its homology and linking form."""

    matrix: tuple
    homology: HomologySummary
    form: LinkingForm

    @property
    def b1(self):
        return self.homology.b1

    @property
    def torsion(self):
        return self.homology.torsion


def presentation(l):
    """Bundle a linking matrix with its computed invariants."""
    return ManifoldPresentation(l, full_homology(l), linking_form(l))


def _negative_continued_fraction(p, q):
    """Expansion p/q = a1 - 1/(a2 - 1/(... - 1/ak)) with every ai >= 2."""
    terms = []
    while q > 0:
        a = -((-p) // q)  # ceil(p / q)
        terms.append(a)
        p, q = q, a * q - p
    return terms


def lens_chain(p, q):
    """Integer surgery chain presenting the lens space L(p, q).

    A chain of unknots with framings -a1, ..., -ak (consecutive components
    linking once), the ai the negative continued fraction of p/q.  For
    q = 1 this is a single unknot with framing -p.
    """
    if p < 1:
        raise ValueError("lens space parameter p must be >= 1")
    if math.gcd(p, q) != 1:
        raise ValueError("lens space parameters must be coprime")
    q = q % p if p > 1 else 1
    terms = _negative_continued_fraction(p, q)
    k = len(terms)
    return tuple(
        tuple(
            -terms[i] if i == j else (1 if abs(i - j) == 1 else 0)
            for j in range(k)
        )
        for i in range(k)
    )


def lens_presentation(p, q):
    """Presentation of L(p, q): torsion Z_p with linking form -q/p mod 1.

    The linking matrix is the surgery chain from lens_chain.  The cached
    form is pinned to the representative [[-q/p]]; the generator-derived
    form of the chain agrees with it up to a group automorphism (and up to
    conjugation for the opposite orientation), which leaves all partition
    functions unchanged.
    """
    chain = lens_chain(p, q)
    summary = full_homology(chain)
    if p == 1:
        form = LinkingForm((), ())
    else:
        if summary.torsion.factors != (p,):
            raise AssertionError("surgery chain has the wrong torsion group")
        form = LinkingForm((p,), ((Fraction(-q, p),),))
    return ManifoldPresentation(chain, summary, form)
