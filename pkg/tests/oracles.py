"""Independent reference computations used to freeze expected values.

None of these share code paths with the package under test.
"""

from fractions import Fraction
from itertools import combinations, product
from math import gcd

T_VALUES = (Fraction(2, 3), Fraction(-5, 7))


def burau(n, letters, t):
    """Unreduced Burau matrix of a braid word at a rational parameter."""
    M = [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]
    for k in letters:
        i = abs(k) - 1
        G = [[Fraction(int(a == b)) for b in range(n)] for a in range(n)]
        if k > 0:
            G[i][i], G[i][i + 1], G[i + 1][i], G[i + 1][i + 1] = 1 - t, t, Fraction(1), Fraction(0)
        else:
            G[i][i], G[i][i + 1], G[i + 1][i], G[i + 1][i + 1] = Fraction(0), Fraction(1), 1 / t, 1 - 1 / t
        M = [[sum(M[a][c] * G[c][b] for c in range(n)) for b in range(n)] for a in range(n)]
    return M


def burau_equal(n, u, v):
    return all(burau(n, u, t) == burau(n, v, t) for t in T_VALUES)


def pair_linking(n, letters):
    """Linking numbers by projecting onto each pair of strands separately."""
    out = {}
    for i, j in combinations(range(1, n + 1), 2):
        at = list(range(1, n + 1))
        total = 0
        for k in letters:
            p = abs(k) - 1
            if {at[p], at[p + 1]} == {i, j}:
                total += 1 if k > 0 else -1
            at[p], at[p + 1] = at[p + 1], at[p]
        assert total % 2 == 0
        out[(i, j)] = total // 2
    return out


def _det(M):
    n = len(M)
    if n == 0:
        return 1
    if n == 1:
        return M[0][0]
    return sum((-1) ** j * M[0][j] * _det([row[:j] + row[j + 1:] for row in M[1:]]) for j in range(n))


def invariant_factors(A, rows, cols):
    """Smith invariants from determinantal divisors: d_k = D_k / D_{k-1},
    D_k being the gcd of all k x k minors."""
    divisors = [1]
    for k in range(1, min(rows, cols) + 1):
        g = 0
        for rs in combinations(range(rows), k):
            for cs in combinations(range(cols), k):
                g = gcd(g, _det([[A[r][c] for c in cs] for r in rs]))
        if g == 0:
            break
        divisors.append(g)
    return [divisors[k] // divisors[k - 1] for k in range(1, len(divisors))]


def small_kernel_vectors(A, cols, bound=2):
    return [
        v for v in product(range(-bound, bound + 1), repeat=cols)
        if any(v) and all(sum(a * x for a, x in zip(row, v)) == 0 for row in A)
    ]


def in_integer_span(basis, v):
    """Is v an integer combination of the (linearly independent) basis vectors?
    Brute force over small coefficients."""
    if not basis:
        return not any(v)
    for coeffs in product(range(-4, 5), repeat=len(basis)):
        if all(sum(c * b[i] for c, b in zip(coeffs, basis)) == v[i] for i in range(len(v))):
            return True
    return False


def perm_apply_chain(images_list, x):
    """Apply 1-based one-line permutations left to right to the point x."""
    for images in images_list:
        x = images[x - 1]
    return x
