"""Linking matrices as surgery presentations and Kirby moves on them.

A framed link in the 3-sphere is described here only through its linking
matrix: framings on the diagonal, pairwise linking numbers off it.  The
two Kirby moves act on that matrix directly -- the first one borders it
with an isolated +-1 component, the second one slides one component over
another, which is a unimodular congruence.  Every function returns a new
tuple-of-tuples matrix; nothing is mutated.

Indices are 0-based throughout the library (the command line front end
speaks 1-based).
"""

from .exactmat import is_symmetric, mat, shape


def unknot(framing):
    """Single unknot component: surgery gives the lens space L(-framing, 1)."""
    return ((framing,),)


def hopf(f1, f2):
    """Hopf link with framings f1, f2 and linking number 1.

    With framings -p, -q the surgered manifold is the lens space
    L(pq - 1, q).
    """
    return ((f1, 1), (1, f2))


def borromean():
    """Borromean rings, all framings 0: surgery gives the 3-torus.

    The linking matrix is the 3x3 zero matrix -- pairwise linking numbers
    do not see the triple linkage.
    """
    return ((0, 0, 0),) * 3


_PRESETS = {"unknot": (unknot, 1), "hopf": (hopf, 2), "borromean": (borromean, 0)}


def preset(name, params=()):
    """Look up a named example link: unknot(f), hopf(f1,f2), borromean."""
    try:
        fn, arity = _PRESETS[name]
    except KeyError:
        raise ValueError(f"unknown preset {name!r}") from None
    params = tuple(params)
    if len(params) != arity:
        raise ValueError(f"preset {name!r} takes {arity} parameter(s)")
    return fn(*params)


def _check_symmetric(l):
    if not is_symmetric(l):
        raise ValueError("linking matrix must be symmetric")


def kirby1(l, sign):
    """First Kirby move: add a split unknot component with framing +-1."""
    _check_symmetric(l)
    if sign not in (1, -1):
        raise ValueError("framing of the new component must be +1 or -1")
    n = len(l)
    bordered = [list(row) + [0] for row in l]
    bordered.append([0] * n + [sign])
    return mat(bordered)


def kirby1_inverse(l, index):
    """Remove component `index`: it must be isolated with framing +-1."""
    _check_symmetric(l)
    n = len(l)
    if not 0 <= index < n:
        raise ValueError("component index out of range")
    if l[index][index] not in (1, -1):
        raise ValueError("component framing is not +-1")
    if any(l[index][j] != 0 for j in range(n) if j != index):
        raise ValueError("component is not isolated")
    keep = [i for i in range(n) if i != index]
    return tuple(tuple(l[i][j] for j in keep) for i in keep)


def kirby2(l, i0, j0, sign):
    """Second Kirby move: slide component i0 over component j0.

    Row and column i0 gain sign * (row and column j0); the new framing is
    l[i0][i0] + l[j0][j0] + sign * 2 * l[i0][j0].  Equivalently the result
    is t(P) * l * P for the elementary unimodular P = I + sign * E[j0,i0].
    """
    _check_symmetric(l)
    n = len(l)
    if i0 == j0:
        raise ValueError("cannot slide a component over itself")
    if not (0 <= i0 < n and 0 <= j0 < n):
        raise ValueError("component index out of range")
    if sign not in (1, -1):
        raise ValueError("slide sign must be +1 or -1")
    m = [list(row) for row in l]
    new_diag = l[i0][i0] + l[j0][j0] + sign * 2 * l[i0][j0]
    for j in range(n):
        m[i0][j] += sign * l[j0][j]
    for i in range(n):
        m[i][i0] += sign * l[i][j0]
    m[i0][i0] = new_diag
    return mat(m)


def apply_move(l, move):
    """Apply one transcript entry: ("1", s) | ("1inv", i) | ("2", i0, j0, s)."""
    kind = move[0]
    if kind == "1":
        return kirby1(l, move[1])
    if kind == "1inv":
        return kirby1_inverse(l, move[1])
    if kind == "2":
        return kirby2(l, move[1], move[2], move[3])
    raise ValueError(f"unknown move kind {kind!r}")


def coupling_to_even(c):
    """Symmetrize a coupling matrix: k = c + t(c) has an even diagonal."""
    n, cols = shape(c)
    if n != cols:
        raise ValueError("coupling matrix must be square")
    return tuple(
        tuple(c[i][j] + c[j][i] for j in range(n)) for i in range(n)
    )


def _solve_gf2(rows_mod2, target):
    """Solve B x = t over GF(2); B symmetric n x n given as bitmask rows.

    Returns a solution as a set of column indices (free variables set
    to 0).  For symmetric B the diagonal vector is orthogonal to ker B,
    hence always lies in the column space, so a solution exists whenever
    t is the diagonal of B.
    """
    n = len(rows_mod2)
    aug = [rows_mod2[i] | (target[i] << n) for i in range(n)]
    pivot_cols = []
    r = 0
    for col in range(n):
        pr = next((i for i in range(r, n) if (aug[i] >> col) & 1), None)
        if pr is None:
            continue
        aug[r], aug[pr] = aug[pr], aug[r]
        for i in range(n):
            if i != r and (aug[i] >> col) & 1:
                aug[i] ^= aug[r]
        pivot_cols.append(col)
        r += 1
    if any((aug[i] >> n) & 1 for i in range(r, n)):
        raise AssertionError("GF(2) system is inconsistent")
    return {pivot_cols[i] for i in range(r) if (aug[i] >> n) & 1}


def evenize(l):
    """Make every framing even by a sequence of Kirby moves.

    Returns (even_matrix, transcript); replaying the transcript with
    apply_move on the input reproduces the output exactly.

    Method: border the matrix with one +1-framed pivot component and slide
    it over a subset S of the old components chosen so that afterwards
    every component j links the pivot with the same parity as its own
    framing (over GF(2) this asks for (L mod 2) * chi_S = diag(L) mod 2,
    a system a symmetric matrix always solves).  Auxiliary -1 or +1
    components then drag the pivot framing to exactly 1; sliding each
    component over the pivot until their linking vanishes flips each
    framing's parity once per slide, which by the parity matching lands
    every framing on an even number.  Finally the pivot, isolated again
    with framing 1, is removed.
    """
    _check_symmetric(l)
    n = len(l)
    if all(l[i][i] % 2 == 0 for i in range(n)):
        return l, []

    cur = l
    transcript = []

    def do(*move):
        nonlocal cur
        cur = apply_move(cur, move)
        transcript.append(move)

    rows_mod2 = [
        sum((l[i][j] & 1) << j for j in range(n)) for i in range(n)
    ]
    target = [l[i][i] & 1 for i in range(n)]
    subset = _solve_gf2(rows_mod2, target)

    pivot = n
    do("1", 1)
    for j in sorted(subset):
        do("2", pivot, j, 1)
    for j in range(n):
        assert (cur[j][pivot] - cur[j][j]) % 2 == 0

    # walk the pivot framing to exactly 1, one auxiliary component per step
    while cur[pivot][pivot] != 1:
        step = -1 if cur[pivot][pivot] > 1 else 1
        do("1", step)
        aux = len(cur) - 1
        do("2", pivot, aux, 1)

    # detach the auxiliaries (one slide each) and then the old components
    for aux in range(pivot + 1, len(cur)):
        if cur[aux][pivot] != 0:
            do("2", aux, pivot, -cur[aux][pivot])
    for j in range(n):
        while cur[j][pivot] != 0:
            do("2", j, pivot, 1 if cur[j][pivot] < 0 else -1)

    do("1inv", pivot)
    assert all(cur[i][i] % 2 == 0 for i in range(len(cur)))
    return cur, transcript
