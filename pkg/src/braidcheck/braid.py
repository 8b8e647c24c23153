"""Words in the Artin braid group B_n and their Garside normal form.

A braid word on ``n`` strands is a tuple of nonzero integers, letter ``k``
standing for sigma_|k|^sign(k).  Equality in B_n is decided by the left
normal form Delta^k s_1 ... s_r, where each s_j is a permutation braid
(simple element) and every adjacent pair is left-weighted.

Simple elements are handled internally as 0-based image tuples.  The
permutation of a positive word is the left-to-right product of the
transpositions of its letters, matching :func:`permgroup.compose`.  For a
simple element with permutation ``P``:

* sigma_{i+1} is a left divisor iff ``P[i] > P[i+1]``;
* sigma_{i+1} is a right divisor iff ``P^-1[i] > P^-1[i+1]``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Sequence

from .permgroup import Perm

Simple = tuple[int, ...]


@dataclass(frozen=True)
class BraidWord:
    strands: int
    letters: tuple[int, ...] = ()

    def __post_init__(self):
        if self.strands < 2:
            raise ValueError(f"need at least 2 strands, got {self.strands}")
        letters = tuple(int(k) for k in self.letters)
        for k in letters:
            if k == 0 or abs(k) > self.strands - 1:
                raise ValueError(f"letter {k} invalid in B_{self.strands}")
        object.__setattr__(self, "letters", letters)

    @classmethod
    def parse(cls, strands: int, text: str) -> "BraidWord":
        """Read ``"1 2 -3"`` as sigma_1 sigma_2 sigma_3^-1."""
        try:
            letters = tuple(int(tok) for tok in text.replace(",", " ").split())
        except ValueError:
            raise ValueError(f"malformed braid word: {text!r}") from None
        return cls(strands, letters)

    def __len__(self) -> int:
        return len(self.letters)

    def __mul__(self, other: "BraidWord") -> "BraidWord":
        if self.strands != other.strands:
            raise ValueError(f"strand mismatch: {self.strands} != {other.strands}")
        return BraidWord(self.strands, self.letters + other.letters)

    def __pow__(self, k: int) -> "BraidWord":
        base = self.letters if k >= 0 else self.inverse().letters
        return BraidWord(self.strands, base * abs(k))

    def inverse(self) -> "BraidWord":
        return BraidWord(self.strands, tuple(-k for k in reversed(self.letters)))

    def __str__(self) -> str:
        return " ".join(map(str, self.letters))


def sigma(n: int, i: int, power: int = 1) -> BraidWord:
    if not 1 <= i <= n - 1:
        raise ValueError(f"sigma_{i} not in B_{n}")
    return BraidWord(n, (i if power > 0 else -i,) * abs(power))


def identity_word(n: int) -> BraidWord:
    return BraidWord(n, ())


# -- simple elements ---------------------------------------------------------


def _swap_positions(p: Simple, i: int) -> Simple:
    q = list(p)
    q[i], q[i + 1] = q[i + 1], q[i]
    return tuple(q)


def _swap_values(p: Simple, i: int) -> Simple:
    return tuple(i + 1 if x == i else i if x == i + 1 else x for x in p)


def _inverse(p: Simple) -> Simple:
    inv = [0] * len(p)
    for x, y in enumerate(p):
        inv[y] = x
    return tuple(inv)


@lru_cache(maxsize=None)
def _left_descents(p: Simple) -> frozenset[int]:
    return frozenset(i for i in range(len(p) - 1) if p[i] > p[i + 1])


@lru_cache(maxsize=None)
def _right_descents(p: Simple) -> frozenset[int]:
    return _left_descents(_inverse(p))


@lru_cache(maxsize=None)
def _delta(n: int) -> Simple:
    return tuple(range(n - 1, -1, -1))


@lru_cache(maxsize=None)
def _tau(p: Simple) -> Simple:
    """Conjugation by Delta, an involution on simple elements."""
    n = len(p)
    return tuple(n - 1 - p[n - 1 - x] for x in range(n))


@lru_cache(maxsize=None)
def _generator(n: int, i: int) -> Simple:
    return _swap_positions(tuple(range(n)), i)


@lru_cache(maxsize=None)
def _inverse_cofactor(n: int, i: int) -> Simple:
    """r with sigma_{i+1} r = Delta, so sigma_{i+1}^-1 = r Delta^-1."""
    return _swap_positions(_delta(n), i)


@lru_cache(maxsize=1 << 20)
def _left_weight(a: Simple, b: Simple) -> tuple[Simple, Simple]:
    """Slide letters from the head of ``b`` onto ``a`` until (a, b) is left-weighted."""
    while True:
        movable = _left_descents(b) - _right_descents(a)
        if not movable:
            return a, b
        i = min(movable)
        a = _swap_values(a, i)
        b = _swap_positions(b, i)


def simple_to_letters(p: Simple) -> list[int]:
    letters = []
    while True:
        desc = _left_descents(p)
        if not desc:
            return letters
        i = min(desc)
        letters.append(i + 1)
        p = _swap_positions(p, i)


class _Accumulator:
    """Mutable left normal form used while reading a word letter by letter.

    Factors are stored twisted by tau**flip so that multiplying by Delta^-1
    on the right costs O(1) instead of rewriting every factor.
    """

    __slots__ = ("n", "inf", "factors", "flip", "ident", "delta")

    def __init__(self, n: int, inf: int = 0, factors: Iterable[Simple] = ()):
        self.n = n
        self.inf = inf
        self.factors = list(factors)
        self.flip = False
        self.ident = tuple(range(n))
        self.delta = _delta(n)

    def append_simple(self, s: Simple) -> None:
        if s == self.ident:
            return
        f = self.factors
        f.append(_tau(s) if self.flip else s)
        j = len(f) - 2
        while j >= 0:
            a, b = _left_weight(f[j], f[j + 1])
            if a == f[j]:
                break
            f[j], f[j + 1] = a, b
            j -= 1
        delta = self.delta
        lead = 0
        while lead < len(f) and f[lead] == delta:
            lead += 1
        if lead:
            del f[:lead]
            self.inf += lead
        while f and f[-1] == self.ident:
            f.pop()

    def append_letter(self, k: int) -> None:
        i = abs(k) - 1
        if k > 0:
            self.append_simple(_generator(self.n, i))
        else:
            self.times_delta_inverse_after(_inverse_cofactor(self.n, i))

    def times_delta_inverse_after(self, s: Simple) -> None:
        # x * s * Delta^-1 = Delta^(inf-1) * tau(factors) * tau(s)
        self.append_simple(s)
        self.inf -= 1
        self.flip = not self.flip

    def times_delta_power(self, k: int) -> None:
        self.inf += k
        if k % 2:
            self.flip = not self.flip

    def result(self) -> "GarsideForm":
        factors = [_tau(s) for s in self.factors] if self.flip else self.factors
        return GarsideForm(self.n, self.inf, tuple(factors))


@dataclass(frozen=True)
class GarsideForm:
    """Left normal form Delta^infimum * factors[0] * ... * factors[-1].

    ``factors`` holds 0-based image tuples; :attr:`perms` converts them to
    :class:`Perm`.
    """

    strands: int
    infimum: int
    factors: tuple[Simple, ...]

    @property
    def perms(self) -> tuple[Perm, ...]:
        return tuple(Perm(tuple(x + 1 for x in s)) for s in self.factors)

    @property
    def canonical_length(self) -> int:
        return len(self.factors)

    def is_identity(self) -> bool:
        return self.infimum == 0 and not self.factors

    def is_left_weighted(self) -> bool:
        n = self.strands
        ident, delta = tuple(range(n)), _delta(n)
        if any(s in (ident, delta) for s in self.factors):
            return False
        return all(
            _left_descents(b) <= _right_descents(a)
            for a, b in zip(self.factors, self.factors[1:])
        )

    def to_word(self) -> BraidWord:
        n = self.strands
        delta_letters = simple_to_letters(_delta(n))
        if self.infimum >= 0:
            letters = delta_letters * self.infimum
        else:
            letters = [-k for k in reversed(delta_letters)] * (-self.infimum)
        for s in self.factors:
            letters.extend(simple_to_letters(s))
        return BraidWord(n, tuple(letters))

    def __mul__(self, other: "GarsideForm") -> "GarsideForm":
        return garside_multiply(self, other)

    def __str__(self) -> str:
        body = " ".join(str(p) or "()" for p in self.perms)
        return f"D^{self.infimum}" + (f" . {body}" if body else "")


def normal_form(w: BraidWord) -> GarsideForm:
    acc = _Accumulator(w.strands)
    for k in w.letters:
        acc.append_letter(k)
    return acc.result()


def garside_multiply(x: GarsideForm, y: GarsideForm) -> GarsideForm:
    if x.strands != y.strands:
        raise ValueError(f"strand mismatch: {x.strands} != {y.strands}")
    # Delta^k A Delta^l B = Delta^(k+l) tau^l(A) B
    acc = _Accumulator(x.strands, x.infimum + y.infimum)
    shift = y.infimum % 2
    acc.factors = [_tau(s) for s in x.factors] if shift else list(x.factors)
    for s in y.factors:
        acc.append_simple(s)
    return acc.result()


def garside_inverse(x: GarsideForm) -> GarsideForm:
    return normal_form(x.to_word().inverse())


def garside_power(x: GarsideForm, k: int) -> GarsideForm:
    base = x if k >= 0 else garside_inverse(x)
    result = GarsideForm(x.strands, 0, ())
    k = abs(k)
    while k:
        if k & 1:
            result = garside_multiply(result, base)
        base = garside_multiply(base, base)
        k >>= 1
    return result


def equals(u: BraidWord, v: BraidWord) -> bool:
    if u.strands != v.strands:
        raise ValueError(f"strand mismatch: {u.strands} != {v.strands}")
    return normal_form(u) == normal_form(v)


def is_trivial(w: BraidWord) -> bool:
    return normal_form(w).is_identity()


# -- distinguished elements --------------------------------------------------


def zeta(n: int, i: int | None = None) -> BraidWord:
    """(sigma_1 ... sigma_{i-1})^i inside B_n; the full twist when i == n."""
    if i is None:
        i = n
    if not 1 <= i <= n:
        raise ValueError(f"zeta index {i} out of range 1..{n}")
    return BraidWord(n, tuple(range(1, i)) * i)


def half_twist(n: int) -> BraidWord:
    return BraidWord(n, tuple(simple_to_letters(_delta(n))))


def pure_braid_generator(n: int, i: int, j: int) -> BraidWord:
    """x_ij = sigma_{j-1} ... sigma_{i+1} sigma_i^2 sigma_{i+1}^-1 ... sigma_{j-1}^-1."""
    if not 1 <= i < j <= n:
        raise ValueError(f"need 1 <= i < j <= n, got i={i}, j={j}, n={n}")
    head = tuple(range(j - 1, i, -1))
    return BraidWord(n, head + (i, i) + tuple(-k for k in reversed(head)))


def pure_braid_generators(n: int) -> dict[tuple[int, int], BraidWord]:
    return {
        (i, j): pure_braid_generator(n, i, j)
        for i in range(1, n + 1)
        for j in range(i + 1, n + 1)
    }


# -- abelian invariants ------------------------------------------------------


def permutation_of(w: BraidWord) -> Perm:
    """Image under sigma_i -> (i, i+1)."""
    images = list(range(1, w.strands + 1))
    for k in w.letters:
        # right-multiplying by (i, i+1) swaps the values i and i+1
        i = abs(k)
        images = [i + 1 if x == i else i if x == i + 1 else x for x in images]
    return Perm(tuple(images))


def is_pure(w: BraidWord) -> bool:
    return permutation_of(w).is_identity()


def exponent_sum(w: BraidWord) -> int:
    return sum(1 if k > 0 else -1 for k in w.letters)


@dataclass(frozen=True)
class StrandPairMatrix:
    """Linking numbers e_ij, 1 <= i < j <= n, of a pure braid."""

    n: int
    entries: dict

    def __getitem__(self, pair: tuple[int, int]) -> int:
        i, j = pair
        if i > j:
            i, j = j, i
        return self.entries[(i, j)]

    def pairs(self) -> list[tuple[int, int]]:
        return sorted(self.entries)

    def vector(self) -> tuple[int, ...]:
        return tuple(self.entries[p] for p in self.pairs())

    def __add__(self, other: "StrandPairMatrix") -> "StrandPairMatrix":
        if self.n != other.n:
            raise ValueError("strand mismatch")
        return StrandPairMatrix(
            self.n, {p: self.entries[p] + other.entries[p] for p in self.entries}
        )


def linking_numbers(w: BraidWord) -> StrandPairMatrix:
    """Half the signed crossing count of each pair of strands.

    sigma_i contributes +1 to the pair of strands occupying positions
    (i, i+1) when it is read, sigma_i^-1 contributes -1.
    """
    n = w.strands
    counts = {(i, j): 0 for i in range(1, n + 1) for j in range(i + 1, n + 1)}
    at = list(range(1, n + 1))  # at[pos] = strand currently at pos
    for k in w.letters:
        i = abs(k) - 1
        a, b = at[i], at[i + 1]
        counts[(min(a, b), max(a, b))] += 1 if k > 0 else -1
        at[i], at[i + 1] = b, a
    if at != list(range(1, n + 1)):
        raise ValueError("linking numbers are defined only for pure braids")
    return StrandPairMatrix(n, {p: c // 2 for p, c in counts.items()})


# -- substitution ------------------------------------------------------------


def substitute(w: BraidWord, images: Sequence[BraidWord]) -> BraidWord:
    """Free image of ``w`` under sigma_i -> images[i-1]; nothing is simplified."""
    if len(images) != w.strands - 1:
        raise ValueError(f"need {w.strands - 1} images, got {len(images)}")
    targets = {im.strands for im in images}
    if len(targets) != 1:
        raise ValueError(f"images on mixed strand counts: {sorted(targets)}")
    (m,) = targets
    pos = [im.letters for im in images]
    neg = [im.inverse().letters for im in images]
    out: list[int] = []
    for k in w.letters:
        out.extend(pos[k - 1] if k > 0 else neg[-k - 1])
    return BraidWord(m, tuple(out))
