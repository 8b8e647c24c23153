"""Arithmetic of the central extension 1 -> C_n -> B_n -> B_n/C_n -> 1.

C_n is generated by the full twist zeta_n.  The twisting automorphisms
phi_nu send sigma_i to sigma_i zeta_n^e, where nu = 1 + n(n-1)e.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from math import gcd
from typing import Sequence

from . import braid
from .braid import BraidWord, equals, exponent_sum, normal_form, sigma, zeta
from .fpgroup import braid_presentation, exponent_vector
from .intlinalg import AbelianDescriptor, IntMatrix, cokernel


@dataclass(frozen=True)
class ExtensionParams:
    n: int
    d: int = 1
    e: int = 0
    lam: int = 1

    def __post_init__(self):
        if self.n < 3:
            raise ValueError(f"need n >= 3, got {self.n}")
        if self.d < 1:
            raise ValueError(f"need d >= 1, got {self.d}")

    @property
    def nu(self) -> int:
        return 1 + self.n * (self.n - 1) * self.e


def twisted_images(n: int, e: int) -> list[BraidWord]:
    z = zeta(n) ** e
    return [sigma(n, i) * z for i in range(1, n)]


def phi_nu(w: BraidWord, e: int) -> BraidWord:
    return braid.substitute(w, twisted_images(w.strands, e))


def phi_nu_verify(n: int, e: int) -> bool:
    """Check the braid relators survive sigma_i -> sigma_i zeta^e, and
    that zeta_n goes to zeta_n^(1 + n(n-1)e)."""
    images = twisted_images(n, e)
    for r in braid_presentation(n).relators:
        if not braid.is_trivial(braid.substitute(BraidWord(n, r), images)):
            return False
    nu = 1 + n * (n - 1) * e
    return equals(braid.substitute(zeta(n), images), zeta(n) ** nu)


def composed_exponent(n: int, e1: int, e2: int) -> int:
    """e with (1 + n(n-1)e1)(1 + n(n-1)e2) = 1 + n(n-1)e."""
    return e1 + e2 + n * (n - 1) * e1 * e2


def phi_compose_law(n: int, e1: int, e2: int) -> bool:
    """phi_{nu1} o phi_{nu2} == phi_{nu1 nu2} on every generator."""
    e12 = composed_exponent(n, e1, e2)
    k = n * (n - 1)
    if (1 + k * e1) * (1 + k * e2) != 1 + k * e12:
        return False
    outer = twisted_images(n, e1)
    for i, inner in enumerate(twisted_images(n, e2), 1):
        lhs = braid.substitute(inner, outer)
        rhs = sigma(n, i) * zeta(n) ** e12
        if not equals(lhs, rhs):
            return False
    return True


def phi_nu_ab_exponent(n: int, e: int) -> int:
    """Exponent sum of phi_nu(sigma_i); the same for every i."""
    sums = {exponent_sum(w) for w in twisted_images(n, e)}
    (value,) = sums
    if value != 1 + n * (n - 1) * e:
        raise AssertionError(f"exponent sum {value} != 1 + n(n-1)e")
    if (value != 1) != (e != 0):
        raise AssertionError("abelianized twist is trivial exactly when e == 0")
    return value


# -- lifting sigma_i to B_n / C_n^d ------------------------------------------


def lift_constraints(n: int) -> tuple[list[list[int]], list[int]]:
    """Linear conditions on the exponents a_i of lifts sigma_i zeta^(a_i).

    Because zeta is central, a relator r of B_n evaluates on the lifts to
    zeta^(sum_j c_j a_j), c_j being the exponent sum of sigma_j in r.  The
    relation (sigma_1 ... sigma_{n-1})^n = zeta contributes the extra
    condition 1 + sum_j n a_j == 0.  Returns the relator rows (nonzero
    only) and the row of the twist condition.
    """
    rows = []
    for r in braid_presentation(n).relators:
        v = exponent_vector(r, n - 1)
        if any(v):
            rows.append(v)
    twist = exponent_vector(zeta(n).letters, n - 1)
    return rows, twist


def _check_lift_constraints(n: int) -> None:
    rows, twist = lift_constraints(n)
    expected = []
    for i in range(n - 2):
        v = [0] * (n - 1)
        v[i], v[i + 1] = 1, -1
        expected.append(v)
    if sorted(rows) != sorted(expected):
        raise AssertionError(f"braid relators do not force equal lift exponents: {rows}")
    if twist != [n] * (n - 1):
        raise AssertionError(f"unexpected twist condition {twist}")


def splitting_certificate(n: int, d: int, a: int) -> bool:
    """(sigma_1 zeta^a ... sigma_{n-1} zeta^a)^n == zeta^(1 + n(n-1)a) in B_n,
    with the exponent vanishing mod d."""
    z = normal_form(zeta(n))
    za = braid.garside_power(z, a)
    product = normal_form(braid.identity_word(n))
    for i in range(1, n):
        product = braid.garside_multiply(product, braid.garside_multiply(normal_form(sigma(n, i)), za))
    lhs = braid.garside_power(product, n)
    exponent = 1 + n * (n - 1) * a
    return lhs == braid.garside_power(z, exponent) and exponent % d == 0


def splitting_search(n: int, d: int) -> int | None:
    """Smallest a in [0, d) with 1 + n(n-1)a == 0 mod d, or None.

    A hit means B_n/C_n^d -> B_n/C_n splits via sigma_i -> sigma_i zeta^a.
    The group-level certificate is checked before returning.
    """
    if d < 1:
        raise ValueError(f"need d >= 1, got {d}")
    _check_lift_constraints(n)
    k = n * (n - 1)
    for a in range(d):
        if (1 + k * a) % d == 0:
            if not splitting_certificate(n, d, a):
                raise AssertionError(f"splitting certificate failed for n={n}, d={d}, a={a}")
            return a
    return None


def class_order(n: int, d: int) -> int:
    """Order of the extension class of B_n/C_n^d, by searching for the least
    k >= 1 whose k-fold pushout admits a lift: k + n(n-1)a == 0 mod d."""
    if d < 1:
        raise ValueError(f"need d >= 1, got {d}")
    m = n * (n - 1)
    for k in range(1, d + 1):
        if any((k + m * a) % d == 0 for a in range(d)):
            return k
    raise AssertionError("unreachable: k = d always works")


def class_order_gcd(n: int, d: int) -> int:
    return gcd(n * (n - 1), d)


def transgression_cokernel(n: int, N: int) -> AbelianDescriptor:
    """Cokernel of Hom(B_n, Z/N) -> Hom(C_n, Z/N).

    Hom(B_n, Z/N) = Z/N through the exponent sum, which restricts to
    zeta_n -> n(n-1); so the cokernel is Z / (n(n-1)Z + NZ).
    """
    if N < 1:
        raise ValueError(f"need N >= 1, got {N}")
    return cokernel(IntMatrix.from_rows([[n * (n - 1), N]]))


# -- words in two letters ---------------------------------------------------


_LETTERS = {"x": 1, "X": -1, "y": 2, "Y": -2}


@dataclass(frozen=True)
class FreePairWord:
    """A word in x, y: 1 = x, 2 = y, negatives are inverses."""

    letters: tuple[int, ...] = ()

    def __post_init__(self):
        if any(k not in (1, -1, 2, -2) for k in self.letters):
            raise ValueError(f"bad letters {self.letters}")

    @classmethod
    def parse(cls, text: str) -> "FreePairWord":
        try:
            return cls(tuple(_LETTERS[ch] for ch in text if not ch.isspace()))
        except KeyError as exc:
            raise ValueError(f"unexpected character {exc} in {text!r}") from None

    def __str__(self) -> str:
        inv = {v: k for k, v in _LETTERS.items()}
        return "".join(inv[k] for k in self.letters)

    def __len__(self) -> int:
        return len(self.letters)

    def exponent_sums(self) -> tuple[int, int]:
        x = sum(1 if k == 1 else -1 for k in self.letters if abs(k) == 1)
        y = sum(1 if k == 2 else -1 for k in self.letters if abs(k) == 2)
        return x, y

    def in_commutator_subgroup(self) -> bool:
        return self.exponent_sums() == (0, 0)

    def __call__(self, x: BraidWord, y: BraidWord) -> BraidWord:
        if x.strands != y.strands:
            raise ValueError("strand mismatch")
        parts = {1: x.letters, -1: x.inverse().letters, 2: y.letters, -2: y.inverse().letters}
        return BraidWord(x.strands, tuple(k for letter in self.letters for k in parts[letter]))


def random_commutator_word(rng: random.Random, max_len: int = 12) -> FreePairWord:
    """A nonempty freely reduced word of length <= max_len with zero exponent sums."""
    while True:
        length = rng.randrange(4, max_len + 1, 2)
        out: list[int] = []
        while len(out) < length:
            k = rng.choice((1, -1, 2, -2))
            if out and out[-1] == -k:
                continue
            out.append(k)
        w = FreePairWord(tuple(out))
        if w.in_commutator_subgroup():
            return w


def _check_gt_args(n: int, f: FreePairWord, lam: int, e: int) -> None:
    if not f.in_commutator_subgroup():
        raise ValueError(f"{f} has nonzero exponent sums {f.exponent_sums()}")
    if not 3 <= n <= 5:
        raise ValueError(f"n must lie in 3..5, got {n}")
    if abs(lam) > 3 or abs(e) > 3:
        raise ValueError("need |lambda|, |e| <= 3")
    if len(f) > 12:
        raise ValueError("need |f| <= 12")


def gt_commutation_check(n: int, f: FreePairWord, lam: int, e: int) -> bool:
    """phi_nu(G(sigma_i)) == G(sigma_i) zeta_n^(lam e) for i = 1..n-1, where
    G(sigma_i) = f(sigma_i, zeta_i) sigma_i^lam f(zeta_i, sigma_i).

    The central factor stands for the action zeta_n -> zeta_n^lam.
    """
    _check_gt_args(n, f, lam, e)
    images = twisted_images(n, e)
    central = zeta(n) ** (lam * e)
    for i in range(1, n):
        s, z = sigma(n, i), zeta(n, i)
        g = f(s, z) * s ** lam * f(z, s)
        if not equals(braid.substitute(g, images), g * central):
            return False
    return True


def centrality_insensitive(n: int, f: FreePairWord, e: int) -> bool:
    """f(sigma_i zeta_n^e, zeta_i) == f(sigma_i, zeta_i) for i = 1..n-1."""
    if not f.in_commutator_subgroup():
        raise ValueError(f"{f} has nonzero exponent sums {f.exponent_sums()}")
    twist = zeta(n) ** e
    return all(
        equals(f(sigma(n, i) * twist, zeta(n, i)), f(sigma(n, i), zeta(n, i)))
        for i in range(1, n)
    )
