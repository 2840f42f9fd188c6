"""Independent oracles for the test suite.

Everything here is deliberately written from scratch against the most naive
possible algorithms (dense exponent dictionaries, a Pieri-rule walk on
partitions, the q-binomial recursion) so test expectations never depend on
the code under test.
"""

from fractions import Fraction


def dense_mul(a, b):
    out = {}
    for ea, ca in a.items():
        for eb, cb in b.items():
            e = tuple(x + y for x, y in zip(ea, eb))
            out[e] = out.get(e, 0) + ca * cb
    return {e: c for e, c in out.items() if c != 0}


def dense_add(a, b):
    out = dict(a)
    for e, c in b.items():
        out[e] = out.get(e, 0) + c
        if out[e] == 0:
            del out[e]
    return out


def dense_pow(a, n, nvars):
    r = {(0,) * nvars: Fraction(1)}
    for _ in range(n):
        r = dense_mul(r, a)
    return r


def dense_from_multipoly(p):
    return {e: Fraction(c) for e, c in p.terms.items()}


def pieri_power(k, n, start, steps):
    """Multiply a Schubert class by the hyperplane class ``steps`` times.

    Partitions have at most ``k`` rows with parts at most ``n - k``; returns
    the resulting coefficient dictionary.
    """
    state = {tuple(start): Fraction(1)}
    for _ in range(steps):
        out = {}
        for lam, c in state.items():
            for i in range(k):
                mu = list(lam)
                mu[i] += 1
                if mu[i] > n - k:
                    continue
                if i > 0 and mu[i] > mu[i - 1]:
                    continue
                mu = tuple(mu)
                out[mu] = out.get(mu, Fraction(0)) + c
        state = out
    return state


def gaussian_binomial(n, k):
    """Coefficient list of the q-binomial [n choose k] in q."""
    if k < 0 or k > n:
        return [0]
    if k in (0, n):
        return [1]
    a = gaussian_binomial(n - 1, k - 1)
    b = gaussian_binomial(n - 1, k)
    out = [0] * max(len(a), len(b) + k)
    for i, c in enumerate(a):
        out[i] += c
    for i, c in enumerate(b):
        out[i + k] += c
    return out


def grassmannian_betti(k, n):
    """Betti numbers of the Grassmannian in cohomological degree 2i."""
    return gaussian_binomial(n, k)


def laurent_derivative(coeffs):
    """Derivative of a one-variable Laurent polynomial {exponent: coeff}."""
    out = {}
    for e, c in coeffs.items():
        if e != 0 and c != 0:
            out[e - 1] = out.get(e - 1, Fraction(0)) + e * c
    return out
