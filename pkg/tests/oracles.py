"""Independent reference computations used by the tests.

Nothing here imports the package: each oracle recomputes a quantity from
its textbook formula so that agreement with the library is meaningful.
"""
from __future__ import annotations

from fractions import Fraction
from itertools import product

import sympy


def convolve(a: dict, b: dict) -> dict:
    """Product of two sparse Laurent polynomials by the double loop over terms."""
    out: dict = {}
    for (ea, ca), (eb, cb) in product(a.items(), b.items()):
        e = tuple(x + y for x, y in zip(ea, eb))
        out[e] = out.get(e, 0) + ca * cb
    return {e: c for e, c in out.items() if c}


def truncated_product(a: dict, b: dict, cutoff: int) -> dict:
    """Series product keeping total degree at most ``cutoff``."""
    return {e: c for e, c in convolve(a, b).items() if sum(e) <= cutoff}


def extended_mutation(exchange, cmat, k: int):
    """Fomin-Zelevinsky mutation of the extended matrix [B; C] at the 0-based index k.

    Uses the absolute-value form b'_ij = b_ij + (|b_ik| b_kj + b_ik |b_kj|) / 2,
    which is algebraically distinct from the sign/positive-part form.
    """
    rows = [list(r) for r in exchange] + [list(r) for r in cmat]
    n = len(exchange)
    out = []
    for i, row in enumerate(rows):
        new = []
        for j in range(n):
            if i == k or j == k:
                new.append(-row[j])
            else:
                new.append(row[j] + (abs(row[k]) * rows[k][j] + row[k] * abs(rows[k][j])) // 2)
        out.append(tuple(new))
    return tuple(out[:n]), tuple(out[n:])


def run_extended(exchange, word):
    """Exchange and c-matrix after a 1-based word, starting from C = I."""
    n = len(exchange)
    cmat = tuple(tuple(int(i == j) for j in range(n)) for i in range(n))
    for k in word:
        exchange, cmat = extended_mutation(exchange, cmat, k - 1)
    return exchange, cmat


def g_from_c(cmat, d):
    """g-matrix from tropical duality G = D^-1 (C^-1)^T D, via sympy."""
    c = sympy.Matrix(cmat)
    dm = sympy.diag(*d)
    g = dm.inv() * c.inv().T * dm
    return tuple(tuple(int(v) for v in g.row(i)) for i in range(g.rows))


def permutation_matrix(perm) -> tuple:
    """Matrix with a 1 in row perm[j]-1 of column j (perm lists 1-based images)."""
    n = len(perm)
    return tuple(tuple(int(perm[j] - 1 == i) for j in range(n)) for i in range(n))


def negative_permutation(cmat) -> bool:
    n = len(cmat)
    flat = [v for row in cmat for v in row]
    return (
        flat.count(-1) == n
        and flat.count(0) == n * n - n
        and all(sum(abs(v) for v in row) == 1 for row in cmat)
        and all(sum(abs(cmat[i][j]) for i in range(n)) == 1 for j in range(n))
    )


def exchange_from_skew(skew, d) -> tuple:
    """eps_ij = skew_ij * d_j."""
    n = len(skew)
    return tuple(tuple(skew[i][j] * d[j] for j in range(n)) for i in range(n))


def kronecker_limit_slope() -> Fraction:
    """Slope y/x that the Kronecker g-vectors (-k, k+1) and (-(k+1), k) approach."""
    return Fraction(-1)


def fundamental_f(i: int) -> dict:
    """F_i = 1 + z_i + z_i z_{i+2} (indices mod 3, 1-based) as an exponent dict."""
    def unit(*idx):
        return tuple(int(j + 1 in idx) for j in range(3))

    j = (i + 1) % 3 + 1
    return {unit(): 1, unit(i): 1, unit(i, j): 1}
