"""Backtracking enumeration of homomorphisms into S_m, up to conjugacy.

The first generator only ranges over cycle-type representatives, since
conjugation can move any permutation onto the representative of its
class.  Each later generator ranges over all of S_m, and every relator is
tested as soon as all the generators it mentions have images.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import factorial
from typing import Iterator, Sequence

from .fpgroup import GroupHom, Presentation, evaluate, perm_hom
from .permgroup import (
    Perm,
    PermTuple,
    canonical_under_conjugation,
    closure,
    compose,
    conjugacy_class_representatives,
    conjugates,
    symmetric_group,
)

MAX_DEGREE = 6
DEFAULT_BUDGET = 50_000_000


class SearchBudgetExceeded(RuntimeError):
    pass


@dataclass(frozen=True)
class HomClass:
    representative: PermTuple
    orbit_size: int

    def members(self) -> set[PermTuple]:
        return conjugates(self.representative)


@dataclass(frozen=True)
class HomClassification:
    degree: int
    classes: tuple[HomClass, ...]
    total: int
    relator_checks: int = 0

    @property
    def representatives(self) -> list[PermTuple]:
        return [c.representative for c in self.classes]

    def all_tuples(self) -> Iterator[PermTuple]:
        for c in self.classes:
            yield from sorted(c.members())


def _raw_compose(p: tuple[int, ...], q: tuple[int, ...]) -> tuple[int, ...]:
    return tuple(q[x] for x in p)


def _raw_inverse(p: tuple[int, ...]) -> tuple[int, ...]:
    inv = [0] * len(p)
    for x, y in enumerate(p):
        inv[y] = x
    return tuple(inv)


def enumerate_homs(
    p: Presentation,
    m: int,
    surjective_only: bool = False,
    long_running: bool = False,
    budget: int = DEFAULT_BUDGET,
) -> HomClassification:
    """All homomorphisms p -> S_m, grouped into simultaneous-conjugacy classes.

    Degree 6 is refused unless ``long_running`` is set.  ``budget`` caps the
    number of relator evaluations.
    """
    if m > MAX_DEGREE or m < 1:
        raise ValueError(f"target degree must lie in 1..{MAX_DEGREE}, got {m}")
    if m == MAX_DEGREE and not long_running:
        raise ValueError("degree 6 enumeration is long-running; pass long_running=True")
    k = p.ngens
    if k == 0:
        raise ValueError("presentation has no generators")

    ident = tuple(range(m))
    group = [tuple(x - 1 for x in g.images) for g in symmetric_group(m)]
    first = [tuple(x - 1 for x in g.images) for g in conjugacy_class_representatives(m)]
    inverse = {g: _raw_inverse(g) for g in group}

    # relators become due once their largest generator is assigned
    due: list[list[tuple[int, ...]]] = [[] for _ in range(k)]
    for r in p.relators:
        if r:
            due[max(abs(x) for x in r) - 1].append(r)

    checks = 0
    found: list[tuple[tuple[int, ...], ...]] = []
    images: list[tuple[int, ...]] = [ident] * k

    def satisfied(level: int) -> bool:
        nonlocal checks
        for r in due[level]:
            checks += 1
            x = ident
            for letter in r:
                g = images[letter - 1] if letter > 0 else inverse[images[-letter - 1]]
                x = tuple(g[i] for i in x)
            if x != ident:
                return False
        if checks > budget:
            raise SearchBudgetExceeded(f"more than {budget} relator checks")
        return True

    def extend(level: int) -> None:
        for g in first if level == 0 else group:
            images[level] = g
            if satisfied(level):
                if level + 1 == k:
                    found.append(tuple(images))
                else:
                    extend(level + 1)

    extend(0)

    order = factorial(m)
    classes: dict[PermTuple, int] = {}
    for raw in found:
        t = tuple(Perm(tuple(x + 1 for x in g)) for g in raw)
        if surjective_only and len(closure(t)) != order:
            continue
        rep = canonical_under_conjugation(t)
        if rep not in classes:
            classes[rep] = len(conjugates(rep))
    ordered = tuple(HomClass(rep, size) for rep, size in sorted(classes.items()))
    return HomClassification(m, ordered, sum(c.orbit_size for c in ordered), checks)


def centralizer_order(t: Sequence[Perm]) -> int:
    """Number of g in S_m fixing ``t`` under simultaneous conjugation."""
    t = tuple(t)
    m = t[0].degree
    return sum(
        1 for g in symmetric_group(m) if all(compose(x, g) == compose(g, x) for x in t)
    )


def kernel_contains(h: GroupHom, w: Sequence[int]) -> bool:
    if not h.verified:
        raise ValueError("homomorphism must be verified first")
    return h.target.is_identity(evaluate(h, w))


def kernels_equal(f: GroupHom, g: GroupHom) -> bool:
    """Decide ker f == ker g via the subgroup of Im f x Im g on paired images.

    That subgroup is the graph {(f(w), g(w))}; both projections are
    injective on it exactly when the kernels agree.
    """
    if not (f.verified and g.verified):
        raise ValueError("both homomorphisms must be verified first")
    if f.source != g.source:
        raise ValueError("homomorphisms have different sources")
    if f.target.kind != "perm" or g.target.kind != "perm":
        raise ValueError("kernel comparison needs finite permutation images")
    gens = [(_raw(x), _raw(y)) for x, y in zip(f.images, g.images)]
    start = (tuple(range(f.target.degree)), tuple(range(g.target.degree)))
    graph = {start}
    frontier = [start]
    while frontier:
        nxt = []
        for a, b in frontier:
            for x, y in gens:
                pair = (tuple(x[i] for i in a), tuple(y[i] for i in b))
                if pair not in graph:
                    graph.add(pair)
                    nxt.append(pair)
        frontier = nxt
    return len(graph) == _image_order(f.images) == _image_order(g.images)


def _raw(p: Perm) -> tuple[int, ...]:
    return tuple(x - 1 for x in p.images)


@lru_cache(maxsize=4096)
def _image_order(images: tuple[Perm, ...]) -> int:
    return len(closure(images))


def as_hom(p: Presentation, t: Sequence[Perm], name: str = "") -> GroupHom:
    from .fpgroup import checked

    return checked(perm_hom(p, tuple(t), name))
