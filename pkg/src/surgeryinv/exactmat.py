"""Exact integer and rational matrix kernel.

Matrices are immutable tuples of row tuples.  Integer matrices hold Python
ints (arbitrary precision), rational matrices hold fractions.Fraction.
Everything here is exact: no floating point enters any computation, and
all transforms come with certificates (d = u*a*v for the Smith form,
t(p)*a*p = diag(a0, 0) for the block decomposition) that the test suite
checks verbatim.
"""

from dataclasses import dataclass
from fractions import Fraction


def mat(rows):
    """Normalize an iterable of rows into a tuple-of-tuples matrix."""
    out = tuple(tuple(row) for row in rows)
    if out:
        width = len(out[0])
        if any(len(row) != width for row in out):
            raise ValueError("ragged rows")
    return out


def shape(a):
    return (len(a), len(a[0]) if a else 0)


def identity(n):
    return tuple(tuple(int(i == j) for j in range(n)) for i in range(n))


def zeros(rows, cols):
    return tuple((0,) * cols for _ in range(rows))


def transpose(a):
    return tuple(zip(*a)) if a else ()


def mat_mul(a, b):
    rows_a, cols_a = shape(a)
    rows_b, cols_b = shape(b)
    if cols_a != rows_b:
        raise ValueError("shape mismatch in mat_mul")
    bt = transpose(b)
    return tuple(
        tuple(sum(x * y for x, y in zip(row, col)) for col in bt) for row in a
    )


def mat_neg(a):
    return tuple(tuple(-x for x in row) for row in a)


def mat_scale(a, c):
    return tuple(tuple(c * x for x in row) for row in a)


def is_square(a):
    r, c = shape(a)
    return r == c


def is_symmetric(a):
    r, c = shape(a)
    return r == c and all(a[i][j] == a[j][i] for i in range(r) for j in range(i))


def is_even_symmetric(a):
    return is_symmetric(a) and all(a[i][i] % 2 == 0 for i in range(len(a)))


def diagonal(a):
    return tuple(a[i][i] for i in range(min(shape(a))))


def direct_sum(a, b):
    ra, ca = shape(a)
    rb, cb = shape(b)
    top = tuple(row + (0,) * cb for row in a)
    bottom = tuple((0,) * ca + row for row in b)
    return top + bottom


def kron(a, b):
    """Kronecker product, exact.  Mixed int/Fraction entries are fine."""
    ra, ca = shape(a)
    rb, cb = shape(b)
    return tuple(
        tuple(a[i][j] * b[k][l] for j in range(ca) for l in range(cb))
        for i in range(ra)
        for k in range(rb)
    )


def det_int(a):
    """Exact determinant of an integer matrix by Bareiss elimination.

    Fraction-free: every intermediate value is an integer (each division in
    the Bareiss recurrence is exact), so there is no coefficient blowup
    beyond what the minors themselves require.  det of the empty 0x0
    matrix is 1.
    """
    n, c = shape(a)
    if n != c:
        raise ValueError("determinant of a non-square matrix")
    if n == 0:
        return 1
    m = [list(row) for row in a]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for i in range(k + 1, n):
                if m[i][k] != 0:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
            m[i][k] = 0
        prev = m[k][k]
    return sign * m[n - 1][n - 1]


def rat_inverse(a):
    """Exact rational inverse (Gauss-Jordan over Fraction).

    Raises ValueError on singular input.  a * rat_inverse(a) is the
    identity exactly.
    """
    n, c = shape(a)
    if n != c:
        raise ValueError("inverse of a non-square matrix")
    m = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)]
         for i, row in enumerate(a)]
    for k in range(n):
        pivot_row = next((i for i in range(k, n) if m[i][k] != 0), None)
        if pivot_row is None:
            raise ValueError("singular matrix")
        m[k], m[pivot_row] = m[pivot_row], m[k]
        inv = 1 / m[k][k]
        m[k] = [x * inv for x in m[k]]
        for i in range(n):
            if i != k and m[i][k] != 0:
                f = m[i][k]
                m[i] = [x - f * y for x, y in zip(m[i], m[k])]
    return tuple(tuple(row[n:]) for row in m)


def int_inverse(u):
    """Inverse of a unimodular integer matrix, returned with int entries."""
    inv = rat_inverse(u)
    out = []
    for row in inv:
        if any(x.denominator != 1 for x in row):
            raise ValueError("matrix is not unimodular")
        out.append(tuple(int(x) for x in row))
    return tuple(out)


@dataclass(frozen=True)
class SnfResult:
    """Smith normal form d = u * a * v with u, v unimodular.

    d is diagonal with nonnegative entries in a divisibility chain
    d[i] | d[i+1]; the nonzero entries are the invariant factors of the
    cokernel of a, padded with zeros up to min(shape).
    """

    u: tuple
    d: tuple
    v: tuple

    def invariant_factors(self):
        return tuple(x for x in diagonal(self.d) if x != 0)


def smith_normal_form(a):
    """Smith normal form of an arbitrary integer matrix.

    Pivot strategy: at each stage pick the nonzero entry of minimal
    absolute value in the remaining submatrix.  Arbitrary-precision ints
    make overflow impossible, but small pivots keep the coefficient
    growth of the transforms in check.
    """
    rows, cols = shape(a)
    m = [list(row) for row in a]
    u = [[int(i == j) for j in range(rows)] for i in range(rows)]
    v = [[int(i == j) for j in range(cols)] for i in range(cols)]

    def add_row(src, dst, c):
        # row dst += c * row src, applied to m and u alike
        m[dst] = [x + c * y for x, y in zip(m[dst], m[src])]
        u[dst] = [x + c * y for x, y in zip(u[dst], u[src])]

    def add_col(src, dst, c):
        for r in m:
            r[dst] += c * r[src]
        for r in v:
            r[dst] += c * r[src]

    def swap_rows(i, j):
        m[i], m[j] = m[j], m[i]
        u[i], u[j] = u[j], u[i]

    def swap_cols(i, j):
        for r in m:
            r[i], r[j] = r[j], r[i]
        for r in v:
            r[i], r[j] = r[j], r[i]

    t = 0
    while t < min(rows, cols):
        # locate the minimal-|entry| pivot in the trailing submatrix
        best = None
        for i in range(t, rows):
            for j in range(t, cols):
                x = m[i][j]
                if x != 0 and (best is None or abs(x) < abs(m[best[0]][best[1]])):
                    best = (i, j)
        if best is None:
            break
        swap_rows(t, best[0])
        swap_cols(t, best[1])
        while True:
            p = m[t][t]
            # clear column t; a nonzero remainder becomes the new, smaller pivot
            shrunk = False
            for i in range(t + 1, rows):
                if m[i][t] % p != 0:
                    add_row(t, i, -(m[i][t] // p))
                    swap_rows(t, i)
                    shrunk = True
                    break
            if shrunk:
                continue
            for i in range(t + 1, rows):
                if m[i][t] != 0:
                    add_row(t, i, -(m[i][t] // p))
            for j in range(t + 1, cols):
                if m[t][j] % p != 0:
                    add_col(t, j, -(m[t][j] // p))
                    swap_cols(t, j)
                    shrunk = True
                    break
            if shrunk:
                continue
            for j in range(t + 1, cols):
                if m[t][j] != 0:
                    add_col(t, j, -(m[t][j] // p))
            # enforce the divisibility chain: fold any non-multiple back
            # into row t and keep reducing
            bad = next(
                (i for i in range(t + 1, rows)
                 for j in range(t + 1, cols) if m[i][j] % p != 0),
                None,
            )
            if bad is None:
                break
            add_row(bad, t, 1)
        t += 1

    for i in range(min(rows, cols)):
        if m[i][i] < 0:
            m[i] = [-x for x in m[i]]
            u[i] = [-x for x in u[i]]

    return SnfResult(mat(u), mat(m), mat(v))


def rank(a):
    return len(smith_normal_form(a).invariant_factors())


def signature(a):
    """Signature of a symmetric matrix: #positive minus #negative eigenvalues.

    Computed exactly by Lagrange congruence reduction over the rationals.
    A nonzero diagonal pivot contributes its sign and its row/column are
    eliminated by a rational symmetric row+column operation.  If the whole
    remaining diagonal vanishes but an off-diagonal entry b survives, that
    entry spans a hyperbolic 2x2 block [[0,b],[b,0]] with eigenvalues +-b:
    it contributes 0 and is removed through its exact Schur complement.
    No floating point is involved anywhere.
    """
    if not is_symmetric(a):
        raise ValueError("signature of a non-symmetric matrix")
    m = [[Fraction(x) for x in row] for row in a]
    sig = 0
    while m:
        n = len(m)
        pivot = next((i for i in range(n) if m[i][i] != 0), None)
        if pivot is not None:
            if pivot != 0:
                m[0], m[pivot] = m[pivot], m[0]
                for row in m:
                    row[0], row[pivot] = row[pivot], row[0]
            d = m[0][0]
            sig += 1 if d > 0 else -1
            m = [
                [m[i][j] - m[i][0] * m[0][j] / d for j in range(1, n)]
                for i in range(1, n)
            ]
            continue
        off = next(
            ((i, j) for i in range(n) for j in range(i + 1, n) if m[i][j] != 0),
            None,
        )
        if off is None:
            break  # zero matrix left; contributes nothing
        i0, j0 = off
        order = [i0, j0] + [k for k in range(n) if k not in (i0, j0)]
        m = [[m[i][j] for j in order] for i in order]
        b = m[0][1]
        # Schur complement against the invertible block [[0,b],[b,0]]
        m = [
            [
                m[i][j] - (m[i][0] * m[1][j] + m[i][1] * m[0][j]) / b
                for j in range(2, n)
            ]
            for i in range(2, n)
        ]
    return sig


@dataclass(frozen=True)
class BlockDecomposition:
    """Unimodular congruence t(p) * a * p = diag(a0, 0) with a0 nonsingular.

    rank is the rank of a over the rationals, i.e. the size of a0.
    """

    p: tuple
    a0: tuple
    rank: int


def block_decompose(a):
    """Split a symmetric integer matrix into a nonsingular block plus zeros.

    The last columns of the Smith transform v form a basis of the integer
    kernel of a; because a is symmetric, any unimodular matrix whose
    trailing columns span the kernel already conjugates a into
    diag(a0, 0).  When a is nonsingular, p is the identity.
    """
    if not is_symmetric(a):
        raise ValueError("block decomposition needs a symmetric matrix")
    n = len(a)
    snf = smith_normal_form(a)
    r = len(snf.invariant_factors())
    if r == n:
        return BlockDecomposition(identity(n), a, n)
    p = snf.v
    conj = mat_mul(transpose(p), mat_mul(a, p))
    a0 = tuple(row[:r] for row in conj[:r])
    if any(conj[i][j] != 0 for i in range(n) for j in range(n)
           if i >= r or j >= r):
        raise AssertionError("kernel columns failed to split off a zero block")
    return BlockDecomposition(p, a0, r)
