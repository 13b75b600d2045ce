"""Exact Gauss sums and the abelian Chern-Simons partition function.

A phase is a reduced Fraction r in [0,1) standing for e^{2 pi i r}; a
Gauss sum is a finite multiset of phases with integer multiplicities
(CyclotomicSum).  Sums are built exactly -- the only place floating point
appears is eval_numeric, which turns a finished sum into a high-precision
complex number for cross-formula comparisons.

The partition function of a U(1)^n theory with integer coupling matrix C
on a manifold with torsion group T and linking form Q is the sum over
T^n, in fundamental representatives u_i in [0, p_i), of
e^{- pi i t(u) (K x Q) u} with K = C + t(C); the even diagonal of K is
exactly what makes each term independent of the representative choice.
"""

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction

from mpmath import mp

from .exactmat import det_int, int_inverse, is_symmetric, rat_inverse, smith_normal_form
from .surgery import coupling_to_even

DEFAULT_TERM_BUDGET = 10**7


class BudgetExceededError(RuntimeError):
    """An enumeration would exceed the configured number of summands."""


def phase_mod1(x):
    """Reduce an exact rational into the fundamental interval [0, 1)."""
    x = Fraction(x)
    return x - (x.numerator // x.denominator)


class CyclotomicSum:
    """Finite multiset of phases: the exact value of a sum of roots of unity.

    Terms map a phase r in [0,1) to an integer multiplicity; zero
    multiplicities are never stored.  Equality is structural (same phases,
    same multiplicities); value comparisons across differently-built sums
    go through eval_numeric, since no canonicalization by vanishing
    root-of-unity relations is attempted.
    """

    __slots__ = ("_terms",)

    def __init__(self, terms=()):
        clean = {}
        items = terms.items() if isinstance(terms, dict) else terms
        for phase, mult in items:
            if mult == 0:
                continue
            p = phase_mod1(phase)
            m = clean.get(p, 0) + mult
            if m:
                clean[p] = m
            else:
                del clean[p]
        self._terms = clean

    def items(self):
        """Term list sorted by phase; the canonical iteration order."""
        return tuple(sorted(self._terms.items()))

    @property
    def total_multiplicity(self):
        return sum(self._terms.values())

    def __eq__(self, other):
        if not isinstance(other, CyclotomicSum):
            return NotImplemented
        return self._terms == other._terms

    def __len__(self):
        return len(self._terms)

    def __repr__(self):
        inner = ", ".join(f"{p}: {m}" for p, m in self.items())
        return f"CyclotomicSum({{{inner}}})"


def conjugate(s):
    """Complex conjugation: every phase r becomes -r mod 1."""
    return CyclotomicSum((phase_mod1(-p), m) for p, m in s.items())


@dataclass(frozen=True)
class ComplexValue:
    """A complex number evaluated at a fixed binary precision."""

    re: object
    im: object
    precision: int

    def __complex__(self):
        return complex(float(self.re), float(self.im))

    def abs(self):
        with mp.workprec(self.precision):
            return +mp.hypot(self.re, self.im)


def eval_numeric(s, precision=128):
    """Evaluate a CyclotomicSum as a complex number at `precision` bits.

    Each distinct phase costs one expjpi call whose error is a few ulp at
    the working precision, so the total error is bounded by a small
    multiple of (number of distinct phases) * 2^-precision * sum of
    |multiplicities| -- far below any tolerance used in this package.
    """
    with mp.workprec(precision):
        re = mp.mpf(0)
        im = mp.mpf(0)
        for phase, mult in s.items():
            z = mp.expjpi(2 * mp.mpf(phase.numerator) / phase.denominator)
            re += mult * z.real
            im += mult * z.imag
        return ComplexValue(+re, +im, precision)


def _quadratic_value(coeff, q, u, block):
    """t(u) (coeff x q) u for u split into len(coeff) blocks of size `block`."""
    n = len(coeff)
    total = Fraction(0)
    for i in range(n):
        ui = u[i * block:(i + 1) * block]
        for j in range(n):
            if coeff[i][j] == 0:
                continue
            uj = u[j * block:(j + 1) * block]
            total += coeff[i][j] * sum(
                ui[a] * q[a][b] * uj[b] for a in range(block) for b in range(block)
            )
    return total


def quadratic_phase(k, form, u):
    """Phase of one partition-function term, with no range validation.

    Returns -(1/2) t(u) (k x Q) u mod 1.  Exposed separately so that
    representative-shift identities (u -> u + p e) can be checked, which
    exponent_phase itself rejects by contract.
    """
    return phase_mod1(-_quadratic_value(k, form.q, u, form.rank) / 2)


def exponent_phase(k, form, u):
    """Exact phase of the partition-function term at representative u.

    k must be symmetric with even diagonal; u concatenates one block of
    fundamental representatives (0 <= u_a < p_a) per U(1) factor.
    """
    n = len(k)
    if not is_symmetric(k) or any(k[i][i] % 2 for i in range(n)):
        raise ValueError("coupling matrix must be symmetric with even diagonal")
    t = form.rank
    if len(u) != n * t:
        raise ValueError("representative vector has the wrong length")
    for idx, x in enumerate(u):
        p = form.factors[idx % t]
        if not 0 <= x < p:
            raise ValueError(f"representative {x} out of range [0, {p})")
    return quadratic_phase(k, form, u)


def _accumulate_counts(coeff, gram, diag, radix, modulus, ncopies):
    """Histogram of t(x)(coeff x G)x mod modulus over all index tuples.

    gram[a][b] is the pairing of representatives a and b, already reduced
    mod modulus; diag[a] = gram[a][a].  coeff is symmetric ncopies x
    ncopies.  Returns a dict residue -> count.
    """
    counts = {}
    rng = range(radix)
    if ncopies == 1:
        w = coeff[0][0] % modulus
        for a in rng:
            key = (w * diag[a]) % modulus
            counts[key] = counts.get(key, 0) + 1
    elif ncopies == 2:
        w00 = coeff[0][0] % modulus
        w01 = (2 * coeff[0][1]) % modulus
        w11 = coeff[1][1] % modulus
        d1 = [(w11 * diag[b]) % modulus for b in rng]
        for a in rng:
            ga = gram[a]
            base = w00 * diag[a]
            for b in rng:
                key = (base + w01 * ga[b] + d1[b]) % modulus
                counts[key] = counts.get(key, 0) + 1
    else:
        for combo in itertools.product(rng, repeat=ncopies):
            tot = 0
            for i in range(ncopies):
                gi = gram[combo[i]]
                tot += coeff[i][i] * gi[combo[i]]
                for j in range(i + 1, ncopies):
                    tot += 2 * coeff[i][j] * gi[combo[j]]
            key = tot % modulus
            counts[key] = counts.get(key, 0) + 1
    return counts


def _counts_to_sum(counts, modulus, flip):
    if flip:
        counts = {(modulus - k) % modulus: v for k, v in counts.items()}
    return CyclotomicSum(
        (Fraction(k, modulus), v) for k, v in counts.items()
    )


def _check_budget(radix, ncopies, budget):
    budget = DEFAULT_TERM_BUDGET if budget is None else budget
    terms = radix**ncopies
    if terms > budget:
        raise BudgetExceededError(
            f"{terms} summands exceed the term budget of {budget}"
        )


def partition_function(c, manifold, budget=None):
    """Partition function of the U(1)^n theory with coupling matrix c.

    Sums e^{- pi i t(u) (K x Q) u} over u in the fundamental box of the
    torsion group to the n-th Cartesian power, K = c + t(c), Q the cached
    linking form.  The result is exact, deterministic and independent of
    enumeration order.  The free homology sector contributes no finite
    factor: it is absorbed into the (formal) normalization, so a manifold
    with b1 > 0 simply sums over the torsion part.
    """
    k = coupling_to_even(c)
    n = len(k)
    form = manifold.form
    factors = form.factors
    radix = math.prod(factors)
    if n == 0 or radix == 1:
        _check_budget(1, 1, budget)
        return CyclotomicSum({Fraction(0): 1})
    _check_budget(radix, n, budget)

    denom = math.lcm(*[x.denominator for row in form.q for x in row])
    qn = [[int(x * denom) for x in row] for row in form.q]
    modulus = 2 * denom
    reps = list(itertools.product(*(range(p) for p in factors)))
    t = form.rank

    def pair(x, y):
        return sum(
            x[a] * qn[a][b] * y[b] for a in range(t) for b in range(t)
        ) % modulus

    diag = [pair(x, x) for x in reps]
    gram = None
    if n >= 2:
        gram = [[0] * radix for _ in range(radix)]
        for a in range(radix):
            gram[a][a] = diag[a]
            for b in range(a + 1, radix):
                v = pair(reps[a], reps[b])
                gram[a][b] = v
                gram[b][a] = v
    counts = _accumulate_counts(k, gram, diag, radix, modulus, n)
    # exponent carries a global minus sign
    return _counts_to_sum(counts, modulus, flip=True)


def coset_representatives(a):
    """Fixed representatives of Z^s / a Z^s for a nonsingular integer matrix.

    Derived from the Smith normal form d = u a v: the map x -> u x mod d
    identifies the quotient with the box prod [0, d_i), so the columns of
    inverse(u) applied to the box enumerate each class exactly once.
    Returns (reps, invariant_factors); the representative order is the
    mixed-radix order of the box and is deterministic.
    """
    s = len(a)
    if s == 0:
        return [()], ()
    det = det_int(a)
    if det == 0:
        raise ValueError("modulus matrix must be nonsingular")
    snf = smith_normal_form(a)
    factors = tuple(snf.d[i][i] for i in range(s))
    u_inv = int_inverse(snf.u)
    reps = [
        tuple(sum(u_inv[i][j] * c[j] for j in range(s)) for i in range(s))
        for c in itertools.product(*(range(d) for d in factors))
    ]
    return reps, factors


def gauss_sum_over_lattice(l, k0, sign, budget=None):
    """Sum of e^{sign * pi i t(x) (l x inverse(k0)) x} over (Z^s/k0 Z^s)^m.

    l is any symmetric m x m integer matrix; k0 is a nonsingular symmetric
    s x s integer matrix defining the quotient.  The representative set is
    the fixed one from coset_representatives, used consistently for both
    sides of each term.  When k0 has an even diagonal every term is
    independent of the representative choice; for an odd k0 the sum is
    still well defined as a function of the fixed representatives, which
    is the convention the reciprocity identity is stated with.
    """
    if not is_symmetric(l):
        raise ValueError("summand matrix must be symmetric")
    if not is_symmetric(k0):
        raise ValueError("modulus matrix must be symmetric")
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    m = len(l)
    s = len(k0)
    det = det_int(k0) if s else 1
    if det == 0:
        raise ValueError("modulus matrix must be nonsingular")
    if m == 0 or s == 0:
        _check_budget(1, 1, budget)
        return CyclotomicSum({Fraction(0): 1})

    radix = abs(det)
    _check_budget(radix, m, budget)
    reps, _ = coset_representatives(k0)
    # inverse(k0) = adjugate / det with the adjugate integral
    inv = rat_inverse(k0)
    adj = [[int(x * det) for x in row] for row in inv]
    modulus = 2 * abs(det)
    det_sign = 1 if det > 0 else -1

    def pair(x, y):
        return sum(
            x[a] * adj[a][b] * y[b] for a in range(s) for b in range(s)
        ) % modulus

    diag = [pair(x, x) for x in reps]
    gram = None
    if m >= 2:
        gram = [[0] * radix for _ in range(radix)]
        for a in range(radix):
            gram[a][a] = diag[a]
            for b in range(a + 1, radix):
                v = pair(reps[a], reps[b])
                gram[a][b] = v
                gram[b][a] = v
    counts = _accumulate_counts(l, gram, diag, radix, modulus, m)
    # phase numerator is sign * pair / (2 det): fold det's sign in, then
    # flip once more when sign is negative
    flip = (sign * det_sign) < 0
    return _counts_to_sum(counts, modulus, flip=flip)
