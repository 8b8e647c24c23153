import itertools
from math import factorial

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from braidcheck.braid import pure_braid_generators
from braidcheck.fpgroup import (
    braid_presentation,
    checked,
    coxeter_presentation,
    free_product_presentation,
    perm_hom,
    verify_homomorphism,
)
from braidcheck.homenum import (
    SearchBudgetExceeded,
    as_hom,
    centralizer_order,
    enumerate_homs,
    kernel_contains,
    kernels_equal,
)
from braidcheck.permgroup import Perm, canonical_under_conjugation, conjugate, parse_cycles
from braidcheck.suites import epsilon, standard_projection
from oracles import perm_apply_chain


@pytest.fixture(scope="module")
def b4_classes():
    return enumerate_homs(braid_presentation(4), 4, surjective_only=True)


def surjections(n):
    cls = enumerate_homs(braid_presentation(n), n, surjective_only=True)
    return [as_hom(braid_presentation(n), t) for t in cls.all_tuples()]


def test_b4_has_three_classes(b4_classes):
    assert len(b4_classes.classes) == 3
    expected = {canonical_under_conjugation(epsilon(e).images) for e in ("eps1", "eps2", "eps3")}
    assert set(b4_classes.representatives) == expected


@pytest.mark.parametrize("n, m, count", [(3, 3, 1), (4, 3, 1), (5, 5, 1)])
def test_single_class(n, m, count):
    assert len(enumerate_homs(braid_presentation(n), m, surjective_only=True).classes) == count


def test_classification_invariants(b4_classes):
    assert sum(c.orbit_size for c in b4_classes.classes) == b4_classes.total
    for c in b4_classes.classes:
        assert canonical_under_conjugation(c.representative) == c.representative
        assert len(c.members()) == c.orbit_size
        assert c.orbit_size == factorial(4) // centralizer_order(c.representative)


def test_tuples_satisfy_relators_post_hoc():
    # an independent evaluator, not the search's own relator check
    p = braid_presentation(4)
    cls = enumerate_homs(p, 4)
    for t in cls.all_tuples():
        inv = [x.inverse() for x in t]
        for r in p.relators:
            chain = [(t[a - 1] if a > 0 else inv[-a - 1]).images for a in r]
            assert all(perm_apply_chain(chain, x) == x for x in range(1, 5))
    # all homomorphisms, including non-surjective ones
    assert cls.total > enumerate_homs(p, 4, surjective_only=True).total


def test_total_matches_brute_force():
    p = braid_presentation(3)
    from braidcheck.permgroup import symmetric_group

    group = symmetric_group(3)
    brute = sum(
        1 for a, b in itertools.product(group, repeat=2)
        if verify_homomorphism(perm_hom(p, [a, b]))
    )
    assert enumerate_homs(p, 3).total == brute


def test_free_product_into_s2():
    # each t_i goes to identity or the swap
    assert enumerate_homs(free_product_presentation(), 2).total == 8


def test_degree_limits():
    with pytest.raises(ValueError):
        enumerate_homs(braid_presentation(3), 7)
    with pytest.raises(ValueError):
        enumerate_homs(braid_presentation(3), 6)
    with pytest.raises(SearchBudgetExceeded):
        enumerate_homs(braid_presentation(5), 5, budget=100)


@pytest.mark.parametrize("n", [3, 5])
def test_surjections_kill_pure_braids_and_share_kernel(n):
    homs = surjections(n)
    xs = pure_braid_generators(n)
    assert all(kernel_contains(h, x.letters) for h in homs for x in xs.values())
    ref = standard_projection(n)
    assert all(kernels_equal(ref, h) for h in homs)


def test_exactly_one_b4_class_kills_pure_braids(b4_classes):
    xs = pure_braid_generators(4).values()
    killing = [
        c for c in b4_classes.classes
        if all(kernel_contains(as_hom(braid_presentation(4), c.representative), x.letters) for x in xs)
    ]
    assert len(killing) == 1
    assert killing[0].representative == canonical_under_conjugation(epsilon("eps1").images)


def test_kernel_contains_examples():
    e1, e2, e3 = (epsilon(e) for e in ("eps1", "eps2", "eps3"))
    assert all(kernel_contains(e1, x.letters) for x in pure_braid_generators(4).values())
    from braidcheck.fpgroup import evaluate

    assert not kernel_contains(e2, (1, 1))
    assert evaluate(e2, (1, 1)) == parse_cycles("(1 3)(2 4)", 4)
    assert evaluate(e3, (1, 1)) == parse_cycles("(1 3)(2 4)", 4)
    assert kernel_contains(e2, (1, 2, 3) * 2)
    assert not kernel_contains(e3, (1, 2, 3) * 2)
    assert evaluate(e3, (1, 2, 3) * 2) == parse_cycles("(1 2)(3 4)", 4)


def test_kernel_contains_requires_verified():
    h = perm_hom(braid_presentation(3), [Perm.transposition(3, 1, 2)] * 2)
    with pytest.raises(ValueError):
        kernel_contains(h, (1,))


def test_kernels_equal_examples():
    e1, e2, e3 = (epsilon(e) for e in ("eps1", "eps2", "eps3"))
    g = parse_cycles("(1 3 4)", 4)
    conj = as_hom(braid_presentation(4), [conjugate(x, g) for x in e1.images])
    assert kernels_equal(e1, conj)
    assert not kernels_equal(e1, e2)
    assert not kernels_equal(e1, e3)


def test_kernels_equal_across_degrees():
    # B4 -> S3 via the Cardano-Ferrari quotient versus its composite into S4 is trivially equal
    s = [parse_cycles(c, 3) for c in ("(1 2)", "(2 3)", "(1 2)")]
    f = as_hom(braid_presentation(4), s)
    embedded = as_hom(braid_presentation(4), [Perm(x.images + (4,)) for x in s])
    assert kernels_equal(f, embedded)
    assert not kernels_equal(f, epsilon("eps1"))


def test_kernels_equal_rejects_mismatched_sources():
    with pytest.raises(ValueError):
        kernels_equal(standard_projection(3), standard_projection(4))


def test_b4_to_s3_kernels_contain_square_of_half_twist_cube():
    homs = [as_hom(braid_presentation(4), t)
            for t in enumerate_homs(braid_presentation(4), 3, surjective_only=True).all_tuples()]
    assert all(kernels_equal(homs[0], h) for h in homs)
    assert all(kernel_contains(h, (1, 2, 3) * 4) for h in homs)


@settings(max_examples=30)
@given(st.permutations(range(1, 5)))
def test_conjugation_preserves_kernel(images):
    g = Perm(tuple(images))
    for name in ("eps1", "eps2", "eps3"):
        h = epsilon(name)
        c = as_hom(braid_presentation(4), [conjugate(x, g) for x in h.images])
        assert kernels_equal(h, c)


@pytest.mark.slow
def test_six_strands_two_classes():
    cls = enumerate_homs(braid_presentation(6), 6, surjective_only=True, long_running=True)
    assert len(cls.classes) == 2
    other = [r for r in cls.representatives
             if r != canonical_under_conjugation(standard_projection(6).images)][0]
    assert verify_homomorphism(perm_hom(coxeter_presentation(6), other))
