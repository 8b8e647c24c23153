"""Finitely presented groups, homomorphism checks and coset tables.

Words are tuples of nonzero integers: ``g`` is the ``g``-th generator
(1-based) and ``-g`` its inverse.  Coset tables are 0-based: coset 0 is the
subgroup itself.  A table column ``2*(g-1)`` records the action of
generator ``g`` and column ``2*(g-1)+1`` that of its inverse.
"""

from __future__ import annotations

import json
from collections import deque
from dataclasses import dataclass, field, replace
from pathlib import Path
from typing import Any, Callable, Sequence

from . import braid
from .braid import BraidWord
from .intlinalg import AbelianDescriptor, IntMatrix, cokernel
from .permgroup import Perm, closure, compose

Word = tuple[int, ...]


class CosetLimitExceeded(RuntimeError):
    pass


def invert(w: Sequence[int]) -> Word:
    return tuple(-k for k in reversed(w))


def free_reduce(w: Sequence[int]) -> Word:
    out: list[int] = []
    for k in w:
        if out and out[-1] == -k:
            out.pop()
        else:
            out.append(k)
    return tuple(out)


def exponent_vector(w: Sequence[int], ngens: int) -> list[int]:
    v = [0] * ngens
    for k in w:
        v[abs(k) - 1] += 1 if k > 0 else -1
    return v


@dataclass(frozen=True)
class Presentation:
    generators: tuple[str, ...]
    relators: tuple[Word, ...]
    name: str = ""

    def __post_init__(self):
        gens = tuple(self.generators)
        rels = tuple(tuple(int(k) for k in r) for r in self.relators)
        for r in rels:
            for k in r:
                if k == 0 or abs(k) > len(gens):
                    raise ValueError(f"relator {r} refers to unknown generator {k}")
        object.__setattr__(self, "generators", gens)
        object.__setattr__(self, "relators", rels)

    @property
    def ngens(self) -> int:
        return len(self.generators)

    def with_relators(self, extra: Sequence[Sequence[int]], name: str = "") -> "Presentation":
        return Presentation(self.generators, self.relators + tuple(map(tuple, extra)), name or self.name)

    def word_str(self, w: Sequence[int]) -> str:
        return "*".join(
            self.generators[k - 1] if k > 0 else self.generators[-k - 1] + "^-1" for k in w
        ) or "1"

    def to_dict(self) -> dict[str, Any]:
        return {
            "name": self.name,
            "generators": list(self.generators),
            "relators": [list(r) for r in self.relators],
        }

    @classmethod
    def from_dict(cls, data: dict[str, Any]) -> "Presentation":
        try:
            gens = data["generators"]
            rels = data["relators"]
        except KeyError as exc:
            raise ValueError(f"presentation lacks field {exc}") from None
        return cls(tuple(str(g) for g in gens), tuple(tuple(r) for r in rels), data.get("name", ""))


def load_presentation(path: str | Path) -> Presentation:
    return Presentation.from_dict(json.loads(Path(path).read_text()))


def dump_presentation(p: Presentation, path: str | Path) -> None:
    Path(path).write_text(json.dumps(p.to_dict(), indent=2) + "\n")


# -- named presentations ----------------------------------------------------


def _braid_relators(n: int) -> list[Word]:
    rels = []
    for i in range(1, n - 1):
        rels.append((i, i + 1, i, -(i + 1), -i, -(i + 1)))
    for i in range(1, n):
        for j in range(i + 2, n):
            rels.append((i, j, -i, -j))
    return rels


def braid_presentation(n: int) -> Presentation:
    """B_n on sigma_1..sigma_{n-1}: braid relators first, then far commutators."""
    if n < 2:
        raise ValueError(f"B_n needs n >= 2, got {n}")
    return Presentation(tuple(f"s{i}" for i in range(1, n)), tuple(_braid_relators(n)), f"B{n}")


def central_quotient_presentation(n: int) -> Presentation:
    """B_n modulo its center, i.e. with the full twist as an extra relator."""
    return braid_presentation(n).with_relators([braid.zeta(n).letters], f"B{n}/C{n}")


def mcg_sphere_presentation(n: int) -> Presentation:
    """Mapping class group of the n-punctured sphere.

    Braid relators plus s_1...s_{n-2} s_{n-1}^2 s_{n-2}...s_1 and (s_1...s_{n-1})^n.
    """
    if n < 3:
        raise ValueError(f"sphere mapping class group needs n >= 3, got {n}")
    up = tuple(range(1, n - 1))
    sphere = up + (n - 1, n - 1) + tuple(reversed(up))
    twist = tuple(range(1, n)) * n
    base = braid_presentation(n)
    return Presentation(base.generators, base.relators + (sphere, twist), f"Gamma0[{n}]")


def coxeter_presentation(n: int) -> Presentation:
    """S_n on s_i = (i, i+1): involutions, braid and far-commutation relators."""
    if n < 2:
        raise ValueError(f"S_n presentation needs n >= 2, got {n}")
    squares = [(i, i) for i in range(1, n)]
    return Presentation(tuple(f"s{i}" for i in range(1, n)), tuple(squares + _braid_relators(n)), f"S{n}")


def free_product_presentation() -> Presentation:
    """<t1, t2, t3 | t1^2, t2^2, t3^2>."""
    return Presentation(("t1", "t2", "t3"), ((1, 1), (2, 2), (3, 3)), "Z2*Z2*Z2")


BUILTINS: dict[str, Callable[[], Presentation]] = {
    **{f"B{n}": (lambda n=n: braid_presentation(n)) for n in range(2, 9)},
    **{f"CB{n}": (lambda n=n: central_quotient_presentation(n)) for n in range(3, 9)},
    **{f"Gamma0_{n}": (lambda n=n: mcg_sphere_presentation(n)) for n in range(3, 9)},
    **{f"S{n}": (lambda n=n: coxeter_presentation(n)) for n in range(2, 9)},
    "Z2*Z2*Z2": free_product_presentation,
}


def resolve_presentation(source: str) -> Presentation:
    """A built-in name (``B4``, ``Gamma0_5``, ...) or a JSON presentation file."""
    if source in BUILTINS:
        return BUILTINS[source]()
    path = Path(source)
    if path.exists():
        return load_presentation(path)
    raise ValueError(f"unknown presentation {source!r}; built-ins: {', '.join(BUILTINS)}")


# -- homomorphisms ----------------------------------------------------------


@dataclass(frozen=True)
class Target:
    """A target group: how to multiply, invert, and decide triviality."""

    kind: str
    identity: Any
    mul: Callable[[Any, Any], Any]
    inv: Callable[[Any], Any]
    is_identity: Callable[[Any], bool]
    degree: int = 0


def perm_target(m: int) -> Target:
    return Target("perm", Perm.identity(m), compose, Perm.inverse, Perm.is_identity, m)


def braid_target(n: int) -> Target:
    return Target(
        "braid",
        braid.identity_word(n),
        BraidWord.__mul__,
        BraidWord.inverse,
        braid.is_trivial,
        n,
    )


def freeprod_target() -> Target:
    from . import freeprod

    return Target(
        "freeprod",
        (),
        lambda u, v: freeprod.fp_normalize(u + v),
        lambda u: tuple(reversed(u)),
        lambda u: not freeprod.fp_normalize(u),
        3,
    )


@dataclass(frozen=True)
class GroupHom:
    source: Presentation
    target: Target
    images: tuple
    verified: bool = False
    name: str = ""

    def __post_init__(self):
        if len(self.images) != self.source.ngens:
            raise ValueError(f"{self.source.ngens} generator images required, got {len(self.images)}")
        object.__setattr__(self, "images", tuple(self.images))

    def __call__(self, w: Sequence[int]):
        return evaluate(self, w)


def perm_hom(source: Presentation, images: Sequence[Perm], name: str = "") -> GroupHom:
    return GroupHom(source, perm_target(images[0].degree), tuple(images), name=name)


def braid_hom(source: Presentation, images: Sequence[BraidWord], name: str = "") -> GroupHom:
    return GroupHom(source, braid_target(images[0].strands), tuple(images), name=name)


def evaluate(h: GroupHom, w: Sequence[int]):
    t = h.target
    result = t.identity
    inverses: dict[int, Any] = {}
    for k in w:
        if k > 0:
            x = h.images[k - 1]
        else:
            if k not in inverses:
                inverses[k] = t.inv(h.images[-k - 1])
            x = inverses[k]
        result = t.mul(result, x)
    return result


def verify_homomorphism(h: GroupHom, oracle: Callable[[Any], bool] | None = None) -> bool:
    """True iff every relator of the source evaluates to the identity.

    ``oracle`` decides triviality in the target; it defaults to the target's
    own decision procedure.
    """
    is_identity = oracle or h.target.is_identity
    return all(is_identity(evaluate(h, r)) for r in h.source.relators)


def checked(h: GroupHom, oracle: Callable[[Any], bool] | None = None) -> GroupHom:
    """``h`` with its verified flag set; raises if a relator survives."""
    if h.verified:
        return h
    if not verify_homomorphism(h, oracle):
        raise ValueError(f"homomorphism {h.name or ''} does not respect the relators")
    return replace(h, verified=True)


def image_elements(h: GroupHom) -> set[Perm]:
    if h.target.kind != "perm":
        raise ValueError("image enumeration needs a permutation target")
    return closure(h.images)


# -- coset tables -----------------------------------------------------------


def _column(k: int) -> int:
    return 2 * (k - 1) if k > 0 else 2 * (-k - 1) + 1


@dataclass(frozen=True)
class CosetTable:
    presentation: Presentation
    table: tuple[tuple[int, ...], ...]
    subgroup: Any = field(default=(), compare=False)

    @property
    def index(self) -> int:
        return len(self.table)

    def __len__(self) -> int:
        return len(self.table)

    def act(self, coset: int, w: Sequence[int]) -> int:
        for k in w:
            coset = self.table[coset][_column(k)]
        return coset

    def is_closed(self) -> bool:
        n = len(self.table)
        ncol = 2 * self.presentation.ngens
        for c, row in enumerate(self.table):
            if len(row) != ncol:
                return False
            for x, d in enumerate(row):
                if d is None or not 0 <= d < n or self.table[d][x ^ 1] != c:
                    return False
        return True

    def relators_consistent(self) -> bool:
        return all(
            self.act(c, r) == c for c in range(len(self.table)) for r in self.presentation.relators
        )

    def in_subgroup(self, w: Sequence[int]) -> bool:
        return self.act(0, w) == 0


class _Enumerator:
    """HLT coset enumeration with lookahead (after Holt, Eick and O'Brien)."""

    def __init__(self, p: Presentation, max_cosets: int):
        self.ncol = 2 * p.ngens
        self.relators = [[_column(k) for k in r] for r in p.relators if r]
        self.max_cosets = max_cosets
        self.table: list[list[int | None]] = [[None] * self.ncol]
        self.parent = [0]
        self.live = 1

    def rep(self, c: int) -> int:
        parent = self.parent
        root = c
        while parent[root] != root:
            root = parent[root]
        while parent[c] != root:
            parent[c], c = root, parent[c]
        return root

    def define(self, c: int, x: int) -> None:
        if self.live >= self.max_cosets:
            raise _Full
        d = len(self.table)
        self.table.append([None] * self.ncol)
        self.parent.append(d)
        self.live += 1
        self.table[c][x] = d
        self.table[d][x ^ 1] = c

    def _merge(self, k: int, l: int, queue: list[int]) -> None:
        a, b = self.rep(k), self.rep(l)
        if a != b:
            lo, hi = min(a, b), max(a, b)
            self.parent[hi] = lo
            self.live -= 1
            queue.append(hi)

    def coincidence(self, a: int, b: int) -> None:
        queue: list[int] = []
        self._merge(a, b, queue)
        i = 0
        table = self.table
        while i < len(queue):
            g = queue[i]
            i += 1
            for x in range(self.ncol):
                d = table[g][x]
                if d is None:
                    continue
                table[d][x ^ 1] = None
                mu, nu = self.rep(g), self.rep(d)
                if table[mu][x] is not None:
                    self._merge(nu, table[mu][x], queue)
                elif table[nu][x ^ 1] is not None:
                    self._merge(mu, table[nu][x ^ 1], queue)
                else:
                    table[mu][x] = nu
                    table[nu][x ^ 1] = mu

    def scan(self, c: int, w: Sequence[int], fill: bool) -> bool:
        """Scan ``w`` at coset ``c``; returns True if anything was learned."""
        table = self.table
        learned = False
        while True:
            f, i = c, 0
            b, j = c, len(w) - 1
            while i <= j and table[f][w[i]] is not None:
                f = table[f][w[i]]
                i += 1
            if i > j:
                if f != c:
                    self.coincidence(f, c)
                    return True
                return learned
            while j >= i and table[b][w[j] ^ 1] is not None:
                b = table[b][w[j] ^ 1]
                j -= 1
            if j < i:
                self.coincidence(f, b)
                return True
            if i == j:
                table[f][w[i]] = b
                table[b][w[i] ^ 1] = f
                return True
            if not fill:
                return learned
            self.define(f, w[i])
            learned = True

    def lookahead(self) -> None:
        changed = True
        while changed:
            changed = False
            for c in range(len(self.table)):
                for r in self.relators:
                    if self.parent[c] != c:
                        break
                    changed |= self.scan(c, r, fill=False)

    def run(self, subgroup: Sequence[Word]) -> list[list[int]]:
        sub = [[_column(k) for k in w] for w in subgroup if w]
        pending_sub = True
        c = 0
        while True:
            try:
                if pending_sub:
                    for w in sub:
                        self.scan(self.rep(0), w, fill=True)
                    pending_sub = False
                while c < len(self.table):
                    if self.parent[c] == c:
                        for r in self.relators:
                            if self.parent[c] != c:
                                break
                            self.scan(c, r, fill=True)
                        if self.parent[c] == c:
                            for x in range(self.ncol):
                                if self.table[c][x] is None:
                                    self.define(c, x)
                    c += 1
                break
            except _Full:
                before = self.live
                self.lookahead()
                if self.live >= before and self.live >= self.max_cosets:
                    raise CosetLimitExceeded(
                        f"coset enumeration exceeded {self.max_cosets} cosets"
                    ) from None
        return self.standardized()

    def standardized(self) -> list[list[int]]:
        live = [c for c in range(len(self.table)) if self.parent[c] == c]
        start = self.rep(0)
        order = {start: 0}
        queue = deque([start])
        while queue:
            c = queue.popleft()
            for x in range(self.ncol):
                d = self.table[c][x]
                if d is not None and d not in order:
                    order[d] = len(order)
                    queue.append(d)
        if len(order) != len(live):
            raise RuntimeError("coset table is not connected")
        rows = [None] * len(order)
        for c, k in order.items():
            rows[k] = [order[self.table[c][x]] for x in range(self.ncol)]
        return rows


class _Full(Exception):
    pass


def todd_coxeter(p: Presentation, subgroup_words: Sequence[Sequence[int]] = (), max_cosets: int = 100_000) -> CosetTable:
    """Enumerate the cosets of <subgroup_words> in the group presented by ``p``.

    Raises :class:`CosetLimitExceeded` if more than ``max_cosets`` cosets
    are simultaneously alive even after lookahead.
    """
    subgroup = tuple(tuple(w) for w in subgroup_words)
    rows = _Enumerator(p, max_cosets).run(subgroup)
    table = CosetTable(p, tuple(tuple(r) for r in rows), subgroup)
    if not (table.is_closed() and table.relators_consistent()):
        raise RuntimeError("coset enumeration produced an inconsistent table")
    return table


def coset_table_from_quotient(p: Presentation, q: GroupHom) -> CosetTable:
    """Regular right action of the finite image of ``q``; the subgroup is ker(q)."""
    if not q.verified:
        raise ValueError("quotient map must be verified first")
    if q.source != p:
        raise ValueError("quotient map is defined on a different presentation")
    if q.target.kind != "perm":
        raise ValueError("quotient map must land in a permutation group")
    ident = q.target.identity
    gens = []
    for g in q.images:
        gens.extend([g, g.inverse()])
    index = {ident: 0}
    elements = [ident]
    rows: list[list[int]] = []
    i = 0
    while i < len(elements):
        x = elements[i]
        row = []
        for g in gens:
            y = compose(x, g)
            if y not in index:
                index[y] = len(elements)
                elements.append(y)
            row.append(index[y])
        rows.append(row)
        i += 1
    return CosetTable(p, tuple(tuple(r) for r in rows), q)


# -- Reidemeister-Schreier --------------------------------------------------


def spanning_tree(t: CosetTable, policy: str = "bfs") -> dict[int, tuple[int, int]]:
    """Map each nonzero coset to (parent, column) of the edge reaching it.

    ``bfs`` explores breadth-first, smallest generator first (positive before
    inverse).  ``dfs`` is an alternative policy used to test independence of
    the choice.
    """
    ncol = 2 * t.presentation.ngens
    tree: dict[int, tuple[int, int]] = {}
    seen = {0}
    if policy == "bfs":
        queue = deque([0])
        while queue:
            c = queue.popleft()
            for x in range(ncol):
                d = t.table[c][x]
                if d not in seen:
                    seen.add(d)
                    tree[d] = (c, x)
                    queue.append(d)
    elif policy == "dfs":
        stack = [0]
        while stack:
            c = stack.pop()
            for x in reversed(range(ncol)):
                d = t.table[c][x]
                if d not in seen:
                    seen.add(d)
                    tree[d] = (c, x)
                    stack.append(d)
    else:
        raise ValueError(f"unknown spanning tree policy {policy!r}")
    return tree


def reidemeister_schreier(p: Presentation, t: CosetTable, tree_policy: str = "bfs") -> Presentation:
    """Presentation of the stabiliser of coset 0 on Schreier generators.

    Generators are s[c,g] = rep(c) g rep(c g)^-1 for every coset c and
    generator g not lying on the spanning tree; relators are the rewrites of
    every relator from every coset.  No Tietze simplification is applied.
    """
    if t.presentation != p:
        raise ValueError("coset table belongs to a different presentation")
    if not t.is_closed():
        raise ValueError("coset table is not closed")
    tree = spanning_tree(t, tree_policy)
    trivial = set()
    for d, (c, x) in tree.items():
        g = x // 2 + 1
        trivial.add((c, g) if x % 2 == 0 else (d, g))
    names = []
    number = {}
    for c in range(t.index):
        for g in range(1, p.ngens + 1):
            if (c, g) not in trivial:
                number[(c, g)] = len(names) + 1
                names.append(f"{p.generators[g - 1]}[{c}]")
    relators = []
    for r in p.relators:
        for c in range(t.index):
            out = []
            a = c
            for k in r:
                if k > 0:
                    s = number.get((a, k))
                    if s:
                        out.append(s)
                    a = t.table[a][_column(k)]
                else:
                    b = t.table[a][_column(k)]
                    s = number.get((b, -k))
                    if s:
                        out.append(-s)
                    a = b
            relators.append(tuple(out))
    return Presentation(tuple(names), tuple(relators), f"RS({p.name})")


def abelianization(p: Presentation) -> AbelianDescriptor:
    """Cokernel of the relator exponent matrix (one column per relator)."""
    if p.ngens == 0:
        return AbelianDescriptor(0)
    cols = [exponent_vector(r, p.ngens) for r in p.relators]
    return cokernel(IntMatrix.from_columns(cols, rows=p.ngens))
