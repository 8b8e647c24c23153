"""Permutations of small degree in one-line notation.

Products are read left to right: ``compose(p, q)`` applies ``p`` first, so
``compose(p, q)(x) == q(p(x))``.  Points are 1-based in the public API.
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass
from functools import lru_cache
from math import factorial
from typing import Iterable, Sequence

MAX_CONJUGATION_DEGREE = 8

_CYCLE = re.compile(r"\(([^()]*)\)")


@dataclass(frozen=True, order=True)
class Perm:
    images: tuple[int, ...]

    def __post_init__(self):
        images = tuple(int(x) for x in self.images)
        if not images or sorted(images) != list(range(1, len(images) + 1)):
            raise ValueError(f"not a permutation of 1..{len(images)}: {images}")
        object.__setattr__(self, "images", images)

    @classmethod
    def identity(cls, degree: int) -> "Perm":
        return cls(tuple(range(1, degree + 1)))

    @classmethod
    def transposition(cls, degree: int, i: int, j: int) -> "Perm":
        images = list(range(1, degree + 1))
        images[i - 1], images[j - 1] = j, i
        return cls(tuple(images))

    @property
    def degree(self) -> int:
        return len(self.images)

    def __call__(self, x: int) -> int:
        return self.images[x - 1]

    def __mul__(self, other: "Perm") -> "Perm":
        return compose(self, other)

    def __pow__(self, k: int) -> "Perm":
        result = Perm.identity(self.degree)
        base = self if k >= 0 else self.inverse()
        for _ in range(abs(k)):
            result = compose(result, base)
        return result

    def inverse(self) -> "Perm":
        inv = [0] * self.degree
        for x, y in enumerate(self.images, 1):
            inv[y - 1] = x
        return Perm(tuple(inv))

    def is_identity(self) -> bool:
        return all(x == y for x, y in enumerate(self.images, 1))

    def cycles(self) -> list[tuple[int, ...]]:
        """Nontrivial cycles, each starting at its smallest point."""
        seen = set()
        out = []
        for start in range(1, self.degree + 1):
            if start in seen:
                continue
            cycle = [start]
            seen.add(start)
            x = self(start)
            while x != start:
                cycle.append(x)
                seen.add(x)
                x = self(x)
            if len(cycle) > 1:
                out.append(tuple(cycle))
        return out

    def cycle_type(self) -> tuple[int, ...]:
        lengths = sorted((len(c) for c in self.cycles()), reverse=True)
        return tuple(lengths)

    def order(self) -> int:
        from math import lcm

        return lcm(1, *(len(c) for c in self.cycles()))

    def __str__(self) -> str:
        return "".join("(" + " ".join(map(str, c)) + ")" for c in self.cycles())

    def __repr__(self) -> str:
        return f"Perm({str(self) or '()'}, degree={self.degree})"


PermTuple = tuple[Perm, ...]


def parse_cycles(text: str, degree: int) -> Perm:
    """Parse cycle notation such as ``"(1 2)(3 4)"``; ``""`` is the identity."""
    stripped = text.strip()
    if _CYCLE.sub("", stripped).strip():
        raise ValueError(f"malformed cycle notation: {text!r}")
    images = list(range(1, degree + 1))
    used: set[int] = set()
    for body in _CYCLE.findall(stripped):
        try:
            points = [int(tok) for tok in body.replace(",", " ").split()]
        except ValueError:
            raise ValueError(f"malformed cycle notation: {text!r}") from None
        for x in points:
            if not 1 <= x <= degree:
                raise ValueError(f"point {x} out of range 1..{degree}")
            if x in used:
                raise ValueError(f"point {x} repeated in {text!r}")
            used.add(x)
        for a, b in zip(points, points[1:] + points[:1]):
            images[a - 1] = b
    return Perm(tuple(images))


def compose(p: Perm, q: Perm) -> Perm:
    """Left-to-right product: apply ``p``, then ``q``."""
    if p.degree != q.degree:
        raise ValueError(f"degree mismatch: {p.degree} != {q.degree}")
    qi = q.images
    return Perm(tuple(qi[x - 1] for x in p.images))


def conjugate(p: Perm, g: Perm) -> Perm:
    """``g^-1 p g`` in the left-to-right convention (relabel points by ``g``)."""
    return compose(compose(g.inverse(), p), g)


def check_tuple(t: Sequence[Perm]) -> PermTuple:
    t = tuple(t)
    if not t:
        raise ValueError("empty permutation tuple")
    if len({p.degree for p in t}) != 1:
        raise ValueError("permutation tuple has mixed degrees")
    return t


@lru_cache(maxsize=None)
def symmetric_group(m: int) -> tuple[Perm, ...]:
    return tuple(Perm(images) for images in itertools.permutations(range(1, m + 1)))


def _key(t: Iterable[Perm]) -> tuple[int, ...]:
    return tuple(x for p in t for x in p.images)


def conjugates(t: Sequence[Perm]) -> set[PermTuple]:
    """The full orbit of ``t`` under simultaneous conjugation by S_m."""
    t = check_tuple(t)
    m = t[0].degree
    _require_small(m)
    return {tuple(conjugate(p, g) for p in t) for g in symmetric_group(m)}


def canonical_under_conjugation(t: Sequence[Perm]) -> PermTuple:
    """Lexicographically least simultaneous conjugate of ``t``."""
    t = check_tuple(t)
    m = t[0].degree
    _require_small(m)
    best = None
    best_key = None
    raw = [p.images for p in t]
    for g in symmetric_group(m):
        # g^-1 p g sends g(x) to g(p(x))
        gi = g.images
        cand = []
        for images in raw:
            out = [0] * m
            for x in range(m):
                out[gi[x] - 1] = gi[images[x] - 1]
            cand.extend(out)
        if best_key is None or cand < best_key:
            best_key = cand
            best = g
    return tuple(conjugate(p, best) for p in t)


def _require_small(m: int) -> None:
    if m > MAX_CONJUGATION_DEGREE:
        raise ValueError(
            f"degree {m} too large for exhaustive conjugation (max {MAX_CONJUGATION_DEGREE})"
        )


def closure(t: Sequence[Perm]) -> set[Perm]:
    """Elements of the subgroup generated by ``t`` (breadth-first)."""
    t = check_tuple(t)
    ident = Perm.identity(t[0].degree)
    elements = {ident}
    frontier = [ident]
    while frontier:
        nxt = []
        for x in frontier:
            for g in t:
                y = compose(x, g)
                if y not in elements:
                    elements.add(y)
                    nxt.append(y)
        frontier = nxt
    return elements


def closure_order(t: Sequence[Perm]) -> int:
    return len(closure(t))


def is_symmetric_group(t: Sequence[Perm]) -> bool:
    t = check_tuple(t)
    return closure_order(t) == factorial(t[0].degree)


def conjugacy_class_representatives(m: int) -> list[Perm]:
    """One permutation per cycle type, consecutive cycles filled from point 1."""
    reps = []
    for shape in _partitions(m):
        images = list(range(1, m + 1))
        start = 1
        for length in shape:
            pts = list(range(start, start + length))
            for a, b in zip(pts, pts[1:] + pts[:1]):
                images[a - 1] = b
            start += length
        reps.append(Perm(tuple(images)))
    return reps


def _partitions(m: int, largest: int | None = None):
    if largest is None:
        largest = m
    if m == 0:
        yield ()
        return
    for first in range(min(m, largest), 0, -1):
        for rest in _partitions(m - first, first):
            yield (first,) + rest
