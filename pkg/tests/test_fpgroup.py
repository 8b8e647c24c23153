import json

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from braidcheck import freeprod
from braidcheck.braid import BraidWord, pure_braid_generators, sigma, zeta
from braidcheck.fpgroup import (
    BUILTINS,
    CosetLimitExceeded,
    Presentation,
    abelianization,
    braid_hom,
    braid_presentation,
    central_quotient_presentation,
    checked,
    coset_table_from_quotient,
    coxeter_presentation,
    dump_presentation,
    free_product_presentation,
    free_reduce,
    load_presentation,
    mcg_sphere_presentation,
    perm_hom,
    reidemeister_schreier,
    resolve_presentation,
    todd_coxeter,
    verify_homomorphism,
)
from braidcheck.intlinalg import AbelianDescriptor
from braidcheck.permgroup import Perm, parse_cycles

PI04_WORDS = [(1, 2, 3), (2, 3, 1), (3, 1, 2), (1, 3, 2)]


def transpositions(n):
    return [Perm.transposition(n, i, i + 1) for i in range(1, n)]


def klein_quotient():
    return checked(perm_hom(free_product_presentation(),
                            [parse_cycles(c, 4) for c in ("(1 2)(3 4)", "(1 3)(2 4)", "(1 4)(2 3)")]))


def is_braid(r):
    return len(r) == 6


@pytest.mark.parametrize("n, braid_rels, comm_rels", [(3, 1, 0), (4, 2, 1), (5, 3, 3), (6, 4, 6)])
def test_braid_presentation_counts(n, braid_rels, comm_rels):
    p = braid_presentation(n)
    assert p.ngens == n - 1
    assert sum(map(is_braid, p.relators)) == braid_rels
    assert sum(len(r) == 4 for r in p.relators) == comm_rels


def test_braid_presentation_rejects_small_n():
    with pytest.raises(ValueError):
        braid_presentation(1)
    with pytest.raises(ValueError):
        mcg_sphere_presentation(2)


def test_mcg_sphere_presentation():
    p4 = mcg_sphere_presentation(4)
    assert p4.relators[:-2] == braid_presentation(4).relators
    assert len(p4.relators) == len(braid_presentation(4).relators) + 2
    p3 = mcg_sphere_presentation(3)
    assert p3.relators[-2] == (1, 2, 2, 1)
    assert p3.relators[-1] == (1, 2) * 3


def test_relator_validation():
    with pytest.raises(ValueError):
        Presentation(("a",), ((1, 2),))


def test_presentation_file_round_trip(tmp_path):
    p = mcg_sphere_presentation(5)
    path = tmp_path / "gamma.json"
    dump_presentation(p, path)
    assert load_presentation(path) == p
    data = json.loads(path.read_text())
    assert set(data) >= {"generators", "relators"}
    assert resolve_presentation(str(path)) == p
    with pytest.raises(ValueError):
        resolve_presentation(str(tmp_path / "missing.json"))


def test_builtins_resolve():
    for name in BUILTINS:
        assert resolve_presentation(name).ngens >= 1


def test_verify_standard_projection():
    assert verify_homomorphism(perm_hom(braid_presentation(4), transpositions(4)))


def test_verify_cardano_ferrari():
    beta = braid_hom(braid_presentation(4), [sigma(3, 1), sigma(3, 2), sigma(3, 1)])
    assert verify_homomorphism(beta)
    bad = braid_hom(braid_presentation(4), [sigma(3, 1), sigma(3, 2), sigma(3, 2)])
    assert not verify_homomorphism(bad)
    with pytest.raises(ValueError):
        checked(bad)


def test_verify_s43_and_kernel():
    s43 = perm_hom(coxeter_presentation(4), [parse_cycles(c, 3) for c in ("(1 2)", "(2 3)", "(1 2)")])
    assert verify_homomorphism(s43)
    table = coset_table_from_quotient(coxeter_presentation(4), checked(s43))
    assert table.index == 6
    # |S4| / |image| = kernel order
    assert 24 // table.index == 4


def test_injected_oracle_is_used():
    h = perm_hom(braid_presentation(3), transpositions(3))
    assert not verify_homomorphism(h, oracle=lambda x: False)
    assert verify_homomorphism(h, oracle=lambda x: x.is_identity())


def test_freeprod_target():
    from braidcheck.fpgroup import GroupHom, freeprod_target

    h = GroupHom(free_product_presentation(), freeprod_target(), ((1,), (2,), (3,)))
    assert verify_homomorphism(h)
    swapped = GroupHom(free_product_presentation(), freeprod_target(), ((2,), (1,), (1, 2, 1)))
    assert verify_homomorphism(swapped)
    assert not verify_homomorphism(GroupHom(free_product_presentation(), freeprod_target(), ((1, 2), (2,), (3,))))


def test_todd_coxeter_pure_braid_index():
    B4 = braid_presentation(4)
    table = todd_coxeter(B4, [x.letters for x in pure_braid_generators(4).values()], max_cosets=240)
    assert table.index == 24
    # cross-check: cosets are separated exactly by the permutation image
    reps = {}
    from braidcheck.braid import permutation_of
    from braidcheck.fpgroup import spanning_tree

    for c in range(table.index):
        word = _coset_word(table, c)
        reps[c] = permutation_of(BraidWord(4, word))
    assert len(set(reps.values())) == 24


def _coset_word(table, c):
    from braidcheck.fpgroup import spanning_tree

    tree = spanning_tree(table)
    word = []
    while c:
        parent, x = tree[c]
        g = x // 2 + 1
        word.append(g if x % 2 == 0 else -g)
        c = parent
    return tuple(reversed(word))


def test_todd_coxeter_klein_in_s4():
    table = todd_coxeter(coxeter_presentation(4), [(1, 3), (2, 1, 3, 2)])
    assert table.index == 6


def test_todd_coxeter_free_product():
    table = todd_coxeter(free_product_presentation(), PI04_WORDS, max_cosets=40)
    assert table.index == 4
    for w in PI04_WORDS:
        assert table.in_subgroup(w)


def test_todd_coxeter_limit():
    with pytest.raises(CosetLimitExceeded):
        todd_coxeter(braid_presentation(3), [], max_cosets=50)


@pytest.mark.parametrize("n", [3, 4, 5])
def test_symmetric_group_order(n):
    from math import factorial

    assert todd_coxeter(coxeter_presentation(n)).index == factorial(n)


def test_quotient_tables():
    assert coset_table_from_quotient(free_product_presentation(), klein_quotient()).index == 4
    pi4 = checked(perm_hom(braid_presentation(4), transpositions(4)))
    assert coset_table_from_quotient(braid_presentation(4), pi4).index == 24
    frak_p = checked(perm_hom(braid_presentation(4), [parse_cycles(c, 3) for c in ("(1 2)", "(2 3)", "(1 2)")]))
    assert coset_table_from_quotient(braid_presentation(4), frak_p).index == 6


def test_quotient_table_needs_verified_map():
    q = perm_hom(free_product_presentation(), [Perm.identity(2)] * 3)
    with pytest.raises(ValueError):
        coset_table_from_quotient(free_product_presentation(), q)


def test_enumeration_and_quotient_agree():
    fp = free_product_presentation()
    a = todd_coxeter(fp, PI04_WORDS, max_cosets=40)
    b = coset_table_from_quotient(fp, klein_quotient())
    assert a.index == b.index
    B4 = braid_presentation(4)
    a = todd_coxeter(B4, [x.letters for x in pure_braid_generators(4).values()], max_cosets=240)
    b = coset_table_from_quotient(B4, checked(perm_hom(B4, transpositions(4))))
    assert a.index == b.index
    s4 = coxeter_presentation(4)
    a = todd_coxeter(s4, [(1, 3), (2, 1, 3, 2)])
    b = coset_table_from_quotient(s4, checked(perm_hom(s4, [parse_cycles(c, 3) for c in ("(1 2)", "(2 3)", "(1 2)")])))
    assert a.index == b.index == 6


def test_tables_are_closed_and_consistent():
    fp = free_product_presentation()
    tables = [
        todd_coxeter(fp, PI04_WORDS, max_cosets=40),
        coset_table_from_quotient(fp, klein_quotient()),
        todd_coxeter(coxeter_presentation(4), [(1, 3), (2, 1, 3, 2)]),
        coset_table_from_quotient(braid_presentation(4), checked(perm_hom(braid_presentation(4), transpositions(4)))),
    ]
    for t in tables:
        assert t.is_closed() and t.relators_consistent()


def test_rs_free_product():
    fp = free_product_presentation()
    table = todd_coxeter(fp, PI04_WORDS, max_cosets=40)
    rs = reidemeister_schreier(fp, table)
    assert len(rs.generators) == 3 * 4 - (4 - 1)
    assert len(rs.relators) == 12
    assert abelianization(rs) == AbelianDescriptor(3)


def test_rs_trivial_subgroup_of_z2():
    p = Presentation(("t",), ((1, 1),))
    table = todd_coxeter(p, [])
    assert table.index == 2
    assert abelianization(reidemeister_schreier(p, table)).is_trivial()


def test_rs_pure_braid_group():
    B4 = braid_presentation(4)
    table = coset_table_from_quotient(B4, checked(perm_hom(B4, transpositions(4))))
    rs = reidemeister_schreier(B4, table)
    assert len(rs.generators) == 3 * 24 - 23
    assert abelianization(rs) == AbelianDescriptor(6)


@pytest.mark.parametrize("policy", ["bfs", "dfs"])
def test_rs_tree_policies_agree(policy):
    B4 = braid_presentation(4)
    table = todd_coxeter(B4, [x.letters for x in pure_braid_generators(4).values()], max_cosets=240)
    assert abelianization(reidemeister_schreier(B4, table, policy)) == AbelianDescriptor(6)
    fp = free_product_presentation()
    table = coset_table_from_quotient(fp, klein_quotient())
    assert abelianization(reidemeister_schreier(fp, table, policy)) == AbelianDescriptor(3)


def test_rs_rejects_foreign_table():
    table = todd_coxeter(coxeter_presentation(3))
    with pytest.raises(ValueError):
        reidemeister_schreier(coxeter_presentation(4), table)


@pytest.mark.parametrize("n", range(2, 8))
def test_braid_group_abelianizes_to_z(n):
    assert abelianization(braid_presentation(n)) == AbelianDescriptor(1)


@pytest.mark.parametrize("n", range(3, 7))
def test_central_quotient_abelianization(n):
    assert abelianization(central_quotient_presentation(n)) == AbelianDescriptor(0, (n * (n - 1),))


def test_free_product_abelianization():
    assert abelianization(free_product_presentation()) == AbelianDescriptor(0, (2, 2, 2))


@settings(max_examples=100)
@given(st.lists(st.sampled_from((1, 2, 3)), max_size=12))
def test_membership_matches_diagonal(letters):
    table = todd_coxeter(free_product_presentation(), PI04_WORDS, max_cosets=40)
    assert table.in_subgroup(letters) == freeprod.is_in_pi04(letters)


@settings(max_examples=100)
@given(st.lists(st.lists(st.sampled_from((1, -1, 2, -2, 3, -3)), min_size=1, max_size=6), min_size=0, max_size=3))
def test_random_subgroups_of_s4(words):
    words = [free_reduce(w) for w in words]
    table = todd_coxeter(coxeter_presentation(4), words)
    assert table.is_closed() and table.relators_consistent()
    assert 24 % table.index == 0
    assert all(table.in_subgroup(w) for w in words)
