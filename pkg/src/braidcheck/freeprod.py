"""The free product <t1, t2, t3 | t_i^2> of three groups of order two.

Elements are reduced words over {1, 2, 3} with no two equal adjacent
letters.  The subgroup of words whose abelian image lies on the diagonal
of (Z/2)^3 is the index-4 subgroup modelled on the punctured-sphere group.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Iterable, Sequence

FPWord = tuple[int, ...]

MAX_SCAN_LENGTH = 15


def fp_normalize(letters: Iterable[int]) -> FPWord:
    out: list[int] = []
    for k in letters:
        if k not in (1, 2, 3):
            raise ValueError(f"letter {k!r} is not one of 1, 2, 3")
        if out and out[-1] == k:
            out.pop()
        else:
            out.append(k)
    return tuple(out)


def fp_multiply(u: Sequence[int], v: Sequence[int]) -> FPWord:
    return fp_normalize(tuple(u) + tuple(v))


def fp_inverse(w: Sequence[int]) -> FPWord:
    return tuple(reversed(w))


def fp_ab(w: Sequence[int]) -> tuple[int, int, int]:
    """Parity of each generator: the image in (Z/2)^3."""
    counts = [0, 0, 0]
    for k in w:
        counts[k - 1] ^= 1
    return tuple(counts)


def is_in_pi04(w: Sequence[int]) -> bool:
    return fp_ab(w) in ((0, 0, 0), (1, 1, 1))


def cyclic_reduction(w: Sequence[int]) -> FPWord:
    w = fp_normalize(w)
    lo, hi = 0, len(w)
    while hi - lo > 1 and w[lo] == w[hi - 1]:
        lo += 1
        hi -= 1
    return w[lo:hi]


def is_involution(w: Sequence[int]) -> bool:
    w = fp_normalize(w)
    return bool(w) and not fp_normalize(w + w)


def reduced_words(length: int) -> Iterable[FPWord]:
    if length == 0:
        yield ()
        return
    for first in (1, 2, 3):
        for steps in itertools.product((1, 2), repeat=length - 1):
            word = [first]
            for s in steps:
                word.append((word[-1] - 1 + s) % 3 + 1)
            yield tuple(word)


@dataclass
class TorsionScan:
    maxlen: int
    words_scanned: int
    involutions: list[FPWord] = field(default_factory=list)
    labels: dict[FPWord, int] = field(default_factory=dict)
    bad_shapes: list[FPWord] = field(default_factory=list)

    @property
    def classes(self) -> set[int]:
        return set(self.labels.values())

    @property
    def class_count(self) -> int:
        return len(self.classes)


def torsion_scan(maxlen: int = 9) -> TorsionScan:
    """Find every nontrivial reduced word of length <= maxlen squaring to 1.

    Each involution is labelled by its cyclic reduction, which must be a
    single generator; anything else is recorded in ``bad_shapes``.
    """
    if not 0 <= maxlen <= MAX_SCAN_LENGTH:
        raise ValueError(f"maxlen must lie in 0..{MAX_SCAN_LENGTH}, got {maxlen}")
    scan = TorsionScan(maxlen, 0)
    for length in range(1, maxlen + 1):
        for w in reduced_words(length):
            scan.words_scanned += 1
            if not is_involution(w):
                continue
            scan.involutions.append(w)
            core = cyclic_reduction(w)
            if len(core) != 1 or len(w) % 2 == 0 or w != w[::-1]:
                scan.bad_shapes.append(w)
            else:
                scan.labels[w] = core[0]
    return scan
