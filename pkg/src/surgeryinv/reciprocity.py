"""Both sides of the Gauss-sum reciprocity identity and the induced duality.

For a symmetric m x m matrix L (nonsingular block L0, rank r) and an even
symmetric n x n matrix K (nonsingular block K0, rank s) the identity reads

  |det K0|^-(m - r/2) * sum over (Z^s/K0 Z^s)^m of e^{ pi i t(x)(L x K0^-1) x}
    = |det L0|^-(n - s/2) * e^{ i pi sigma(K) sigma(L) / 4}
      * sum over (Z^r/L0 Z^r)^n of e^{- pi i t(k)(K x L0^-1) k}.

The right-hand sum is a U(1)^n partition function on the manifold surgered
along L; the left-hand sum is, up to conjugation, a U(1)^m partition
function on a manifold surgered along K (when L is also even).  That
exchange of the roles of coupling and linking matrix is the duality
implemented by cs_dual.
"""

from dataclasses import dataclass

from mpmath import mp

from .exactmat import (
    block_decompose,
    det_int,
    is_even_symmetric,
    is_symmetric,
    mat_neg,
    signature,
)
from .gauss import ComplexValue, eval_numeric, gauss_sum_over_lattice


@dataclass(frozen=True)
class ReciprocityReport:
    """Numeric evaluation of both sides of the reciprocity identity.

    m, n are the sizes of the linking matrix l and the coupling matrix k;
    r, s their ranks.  l_even records whether l had an even diagonal (the
    identity requires evenness only of k, but an odd l means the left-hand
    sum depends on the fixed representative convention).
    """

    lhs: ComplexValue
    rhs: ComplexValue
    abs_diff: object
    sigma_k: int
    sigma_l: int
    det_k0: int
    det_l0: int
    m: int
    n: int
    r: int
    s: int
    l_even: bool
    precision: int


def chat_from_even(l):
    """Upper triangular coupling matrix with chat + t(chat) = l.

    Entries: l[i][j] above the diagonal, l[i][i]/2 on it, zero below.
    Requires an even diagonal.
    """
    if not is_symmetric(l):
        raise ValueError("matrix must be symmetric")
    n = len(l)
    if any(l[i][i] % 2 for i in range(n)):
        raise ValueError("matrix must have an even diagonal")
    return tuple(
        tuple(
            l[i][j] if i < j else (l[i][i] // 2 if i == j else 0)
            for j in range(n)
        )
        for i in range(n)
    )


def reciprocity_sides(l, k, precision=128, budget=None):
    """Evaluate both sides of the reciprocity identity for (l, k).

    l is any symmetric integer matrix, k an even symmetric one; both are
    reduced to their nonsingular blocks internally, which is always
    possible.  Determinants and signatures stay exact; only the final
    scalar combination (inverse square roots of determinants and the
    eighth root of unity) is floating point, at `precision` bits.
    """
    if not is_symmetric(l):
        raise ValueError("linking matrix must be symmetric")
    if not is_even_symmetric(k):
        raise ValueError("coupling-side matrix must be symmetric with even diagonal")
    m = len(l)
    n = len(k)
    dec_l = block_decompose(l)
    dec_k = block_decompose(k)
    r, s = dec_l.rank, dec_k.rank
    det_l0 = det_int(dec_l.a0)
    det_k0 = det_int(dec_k.a0)
    sigma_l = signature(l)
    sigma_k = signature(k)

    lhs_sum = gauss_sum_over_lattice(l, dec_k.a0, +1, budget=budget)
    rhs_sum = gauss_sum_over_lattice(k, dec_l.a0, -1, budget=budget)

    with mp.workprec(precision):
        lv = eval_numeric(lhs_sum, precision)
        rv = eval_numeric(rhs_sum, precision)
        lhs_scale = mp.power(abs(det_k0), -(mp.mpf(m) - mp.mpf(r) / 2))
        rhs_scale = mp.power(abs(det_l0), -(mp.mpf(n) - mp.mpf(s) / 2))
        phase = mp.expjpi(mp.mpf(sigma_k * sigma_l) / 4)
        lhs = mp.mpc(lv.re, lv.im) * lhs_scale
        rhs = mp.mpc(rv.re, rv.im) * rhs_scale * phase
        diff = +abs(lhs - rhs)
        lhs_val = ComplexValue(+lhs.real, +lhs.imag, precision)
        rhs_val = ComplexValue(+rhs.real, +rhs.imag, precision)

    return ReciprocityReport(
        lhs=lhs_val,
        rhs=rhs_val,
        abs_diff=diff,
        sigma_k=sigma_k,
        sigma_l=sigma_l,
        det_k0=det_k0,
        det_l0=det_l0,
        m=m,
        n=n,
        r=r,
        s=s,
        l_even=is_even_symmetric(l),
        precision=precision,
    )


@dataclass(frozen=True)
class DualTheory:
    """The dual data: linking matrix k, coupling matrix built from -l."""

    linking: tuple
    coupling: tuple


def cs_dual(l, k):
    """Dual of the U(1)^n theory (coupling k) on the manifold surgered on l.

    Both matrices must be even symmetric.  The dual is the U(1)^m theory
    whose coupling matrix is the upper-triangular half of -l and whose
    linking matrix is k; its partition function is, up to complex
    conjugation, the left-hand Gauss sum of the reciprocity identity for
    (l, k).
    """
    if not is_even_symmetric(l):
        raise ValueError("linking matrix must be symmetric with even diagonal")
    if not is_even_symmetric(k):
        raise ValueError("coupling-side matrix must be symmetric with even diagonal")
    return DualTheory(linking=k, coupling=chat_from_even(mat_neg(l)))
