"""Shared random-input generators and brute-force oracles for the tests.

Everything takes an explicit random.Random so that every test is seeded
and reproducible.
"""

import itertools


def rand_int_matrix(rng, rows, cols, lo=-9, hi=9):
    return tuple(
        tuple(rng.randint(lo, hi) for _ in range(cols)) for _ in range(rows)
    )


def rand_symmetric(rng, n, lo=-6, hi=6):
    m = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(i, n):
            m[i][j] = m[j][i] = rng.randint(lo, hi)
    return tuple(tuple(row) for row in m)


def rand_even_symmetric(rng, n, lo=-6, hi=6):
    m = [list(row) for row in rand_symmetric(rng, n, lo, hi)]
    for i in range(n):
        m[i][i] = 2 * rng.randint(lo // 2, hi // 2)
    return tuple(tuple(row) for row in m)


def brute_radical_terms(k, form):
    """Radical of B(u,v) = t(u)(K x Q)v mod 1 on the torsion power, and the
    partition phases on it, both by exhaustive enumeration."""
    from surgeryinv.gauss import phase_mod1, quadratic_phase

    n = len(k)
    t = form.rank
    elements = list(itertools.product(*(range(p) for p in form.factors)))
    total = len(elements) ** n

    def in_radical(z):
        flat = [x for block in z for x in block]
        for i in range(n):
            for a in range(t):
                val = sum(
                    k[i][j] * form.q[a][b] * flat[j * t + b]
                    for j in range(n) for b in range(t)
                )
                if phase_mod1(val) != 0:
                    return False
        return True

    phases = []
    for z in itertools.product(elements, repeat=n):
        if in_radical(z):
            flat = tuple(x for block in z for x in block)
            phases.append(quadratic_phase(k, form, flat))
    return total, phases


def rand_unimodular(rng, n, steps=None):
    """Random unimodular matrix: a product of shears and signed swaps."""
    g = [[int(i == j) for j in range(n)] for i in range(n)]
    if n < 2:
        return tuple(tuple(row) for row in g)
    for _ in range(steps if steps is not None else 3 * n):
        op = rng.randrange(3)
        i, j = rng.sample(range(n), 2)
        if op == 0:
            c = rng.choice([-2, -1, 1, 2])
            for col in range(n):
                g[i][col] += c * g[j][col]
        elif op == 1:
            g[i], g[j] = g[j], g[i]
        else:
            g[i] = [-x for x in g[i]]
    return tuple(tuple(row) for row in g)
