"""Named verification suites and their structured reports."""

from __future__ import annotations

import itertools
import json
import random
import time
from dataclasses import asdict, dataclass, field
from math import factorial, gcd
from typing import Any, Callable

from . import braid, central, freeprod
from .braid import BraidWord, equals, linking_numbers, permutation_of, pure_braid_generators, sigma, zeta
from .fpgroup import (
    CosetLimitExceeded,
    GroupHom,
    abelianization,
    braid_hom,
    braid_presentation,
    central_quotient_presentation,
    checked,
    coset_table_from_quotient,
    coxeter_presentation,
    evaluate,
    free_product_presentation,
    mcg_sphere_presentation,
    perm_hom,
    reidemeister_schreier,
    todd_coxeter,
    verify_homomorphism,
)
from .homenum import SearchBudgetExceeded, enumerate_homs, kernel_contains, kernels_equal
from .intlinalg import AbelianDescriptor, IntMatrix, cokernel, kernel_basis
from .permgroup import Perm, canonical_under_conjugation, closure, compose, parse_cycles, symmetric_group

STATUSES = ("pass", "fail", "skipped")


@dataclass
class Check:
    name: str
    status: str
    detail: str = ""


@dataclass
class Report:
    suite: str
    params: dict[str, Any]
    checks: list[Check] = field(default_factory=list)
    counts: dict[str, int] = field(default_factory=lambda: dict.fromkeys(STATUSES, 0))
    wall_time: float = 0.0
    status: str = "pass"

    def record(self, name: str, ok: bool, detail: str = "") -> bool:
        self._add(Check(name, "pass" if ok else "fail", detail))
        return ok

    def skip(self, name: str, detail: str = "") -> None:
        self._add(Check(name, "skipped", detail))

    def _add(self, check: Check) -> None:
        self.checks.append(check)
        self.counts[check.status] += 1
        if self.counts["fail"]:
            self.status = "fail"

    @property
    def passed(self) -> bool:
        return self.counts["fail"] == 0

    def to_dict(self) -> dict[str, Any]:
        return asdict(self)

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)

    def table(self) -> str:
        width = max((len(c.name) for c in self.checks), default=10)
        lines = [f"== {self.suite} {self.params}"]
        for c in self.checks:
            lines.append(f"  [{c.status:^7}] {c.name:<{width}}  {c.detail}")
        counts = ", ".join(f"{v} {k}" for k, v in self.counts.items())
        lines.append(f"  -> {self.status.upper()} ({counts}; {self.wall_time:.2f}s)")
        return "\n".join(lines)


def cyc(text: str, m: int) -> Perm:
    return parse_cycles(text, m)


EPSILONS = {
    "eps1": ("(1 2)", "(2 3)", "(3 4)"),
    "eps2": ("(1 2 3 4)", "(2 1 3 4)", "(1 2 3 4)"),
    "eps3": ("(1 2 3 4)", "(2 1 3 4)", "(4 3 2 1)"),
}


def epsilon(name: str) -> GroupHom:
    return checked(perm_hom(braid_presentation(4), [cyc(c, 4) for c in EPSILONS[name]], name))


def standard_projection(n: int) -> GroupHom:
    """sigma_i -> (i, i+1) on B_n."""
    return checked(
        perm_hom(braid_presentation(n), [Perm.transposition(n, i, i + 1) for i in range(1, n)], f"pi{n}")
    )


def cardano_ferrari() -> GroupHom:
    """B_4 -> B_3: sigma_1, sigma_3 -> sigma_1 and sigma_2 -> sigma_2."""
    return braid_hom(braid_presentation(4), [sigma(3, 1), sigma(3, 2), sigma(3, 1)], "beta43")


def sqrt_zeta4() -> BraidWord:
    return BraidWord(4, (1, 2, 3) * 2)


def _fmt(t) -> str:
    return "(" + ", ".join(str(p) or "()" for p in t) + ")"


# -- suites -------------------------------------------------------------------


def suite_artin4(r: Report, p: dict) -> None:
    B4 = braid_presentation(4)
    t0 = time.perf_counter()
    cls = enumerate_homs(B4, 4, surjective_only=True)
    elapsed = time.perf_counter() - t0
    r.record("three classes of surjections B4 -> S4", len(cls.classes) == 3, f"{len(cls.classes)} classes, total {cls.total}")
    eps = {k: epsilon(k) for k in EPSILONS}
    expected = {canonical_under_conjugation(h.images) for h in eps.values()}
    r.record(
        "classes are those of eps1, eps2, eps3",
        set(cls.representatives) == expected,
        "; ".join(_fmt(t) for t in cls.representatives),
    )
    r.record("enumeration under 5 s", elapsed < 5, f"{elapsed:.3f}s")

    s1sq = (1, 1)
    cube = (1, 2, 3) * 2
    v = {k: evaluate(h, s1sq) for k, h in eps.items()}
    r.record("eps2(s1^2) = (1 3)(2 4)", v["eps2"] == cyc("(1 3)(2 4)", 4), str(v["eps2"]))
    r.record("eps3(s1^2) = (1 3)(2 4)", v["eps3"] == cyc("(1 3)(2 4)", 4), str(v["eps3"]))
    w2, w3 = evaluate(eps["eps2"], cube), evaluate(eps["eps3"], cube)
    r.record("eps2((s1 s2 s3)^2) = 1", w2.is_identity(), str(w2) or "()")
    r.record("eps3((s1 s2 s3)^2) = (1 2)(3 4)", w3 == cyc("(1 2)(3 4)", 4), str(w3))

    xs = pure_braid_generators(4)
    kills = {k: all(kernel_contains(h, x.letters) for x in xs.values()) for k, h in eps.items()}
    r.record("only eps1 kills every x_ij", kills == {"eps1": True, "eps2": False, "eps3": False}, str(kills))
    killing_classes = sum(
        all(kernel_contains(checked(perm_hom(B4, rep)), x.letters) for x in xs.values())
        for rep in cls.representatives
    )
    r.record("exactly one class has kernel P4", killing_classes == 1, f"{killing_classes}")
    r.record(
        "ker eps2 != P4 and ker eps3 != P4",
        not kernels_equal(eps["eps1"], eps["eps2"]) and not kernels_equal(eps["eps1"], eps["eps3"]),
    )
    g = Perm((2, 3, 4, 1))
    conj = checked(perm_hom(B4, [compose(compose(g.inverse(), x), g) for x in eps["eps1"].images]))
    r.record("conjugating eps1 keeps its kernel", kernels_equal(eps["eps1"], conj))


def _surjections(n: int, long_running: bool = False):
    cls = enumerate_homs(braid_presentation(n), n, surjective_only=True, long_running=long_running)
    homs = [checked(perm_hom(braid_presentation(n), t)) for t in cls.all_tuples()]
    return cls, homs


def suite_artin_n(r: Report, p: dict) -> None:
    ns = [p["n"]] if p.get("n") else [3, 5, 6]
    for n in ns:
        if n == 6 and not p.get("enable_n6"):
            r.skip("n=6 classification", "pass --enable-n6 to run")
            continue
        if n == 4:
            r.skip("n=4", "four strands has three classes; see the artin4 suite")
            continue
        t0 = time.perf_counter()
        try:
            cls, homs = _surjections(n, long_running=(n == 6))
        except SearchBudgetExceeded as exc:
            r.skip(f"n={n} classification", str(exc))
            continue
        expected = 2 if n == 6 else 1
        r.record(f"n={n}: {expected} class(es) of surjections", len(cls.classes) == expected,
                 f"{len(cls.classes)} classes, {len(homs)} surjections")
        xs = pure_braid_generators(n)
        r.record(f"n={n}: every surjection kills every x_ij",
                 all(kernel_contains(h, x.letters) for h in homs for x in xs.values()))
        if n == 6:
            # equality of kernels is an equivalence relation: one reference suffices
            ref = homs[0]
            ok = all(kernels_equal(ref, h) for h in homs)
            r.record(f"n={n}: all kernels equal", ok, f"{len(homs)} surjections against one reference")
        else:
            pairs = list(itertools.combinations_with_replacement(homs, 2))
            ok = all(kernels_equal(f, g) for f, g in pairs)
            r.record(f"n={n}: all kernels pairwise equal", ok, f"{len(pairs)} pairs")
        r.record(f"n={n}: kernel is that of sigma_i -> (i, i+1)",
                 all(kernels_equal(h, standard_projection(n)) for h in homs[:1]))
        if n == 6:
            std, other = cls.representatives
            auto = perm_hom(coxeter_presentation(6), other)
            outer = verify_homomorphism(auto) and len(closure(other)) == 720
            r.record("n=6: second class is an outer automorphism of the first", outer, _fmt(other))
        elapsed = time.perf_counter() - t0
        if n == 5:
            r.record("n=5 under 5 min", elapsed < 300, f"{elapsed:.1f}s")
        else:
            r.record(f"n={n} elapsed", True, f"{elapsed:.1f}s")


def suite_b4s3(r: Report, p: dict) -> None:
    B4 = braid_presentation(4)
    t0 = time.perf_counter()
    cls = enumerate_homs(B4, 3, surjective_only=True)
    r.record("one class of surjections B4 -> S3", len(cls.classes) == 1,
             "; ".join(_fmt(t) for t in cls.representatives))
    std = (cyc("(1 2)", 3), cyc("(2 3)", 3), cyc("(1 2)", 3))
    r.record("it is the class of (12),(23),(12)",
             cls.representatives == [canonical_under_conjugation(std)])
    homs = [checked(perm_hom(B4, t)) for t in cls.all_tuples()]
    r.record("all kernels equal", all(kernels_equal(f, g) for f, g in itertools.combinations(homs, 2)),
             f"{len(homs)} surjections")
    z4 = BraidWord(4, (1, 2, 3) * 4)
    r.record("(s1 s2 s3)^4 lies in every kernel", all(kernel_contains(h, z4.letters) for h in homs))
    elapsed = time.perf_counter() - t0
    r.record("under 5 s", elapsed < 5, f"{elapsed:.3f}s")


def suite_beta43(r: Report, p: dict) -> None:
    beta = cardano_ferrari()
    r.record("beta43 respects the B4 relators (Garside)", verify_homomorphism(beta))
    image = evaluate(beta, sqrt_zeta4().letters)
    r.record("beta43((s1 s2 s3)^2) = zeta_3", equals(image, zeta(3)), str(braid.normal_form(image)))

    s43 = perm_hom(coxeter_presentation(4), [cyc("(1 2)", 3), cyc("(2 3)", 3), cyc("(1 2)", 3)], "s43")
    r.record("s43 respects the Coxeter relators of S4", verify_homomorphism(s43))
    s43 = checked(s43)
    table = coset_table_from_quotient(coxeter_presentation(4), s43)
    r.record("s43 is onto S3", table.index == 6, f"{table.index} cosets")
    # kernel of s43 as a set of permutations of four points
    words = _element_words(coxeter_presentation(4), [Perm.transposition(4, i, i + 1) for i in range(1, 4)])
    kernel = {g for g, w in words.items() if evaluate(s43, w).is_identity()}
    klein = {cyc(c, 4) for c in ("", "(1 2)(3 4)", "(1 3)(2 4)", "(1 4)(2 3)")}
    r.record("ker s43 is the Klein four group", kernel == klein, ", ".join(sorted(str(g) or "()" for g in kernel)))

    pi4, pi3 = standard_projection(4), standard_projection(3)
    via_s = [evaluate(s43, (i,)) for i in range(1, 4)]
    via_b = [permutation_of(evaluate(beta, (i,))) for i in range(1, 4)]
    comp_s = [evaluate(s43, _transposition_word(g)) for g in pi4.images]
    r.record("P = s43 o pi4 = pi3 o b43 on generators", via_s == via_b == comp_s, _fmt(via_b))
    frak_p = checked(perm_hom(braid_presentation(4), via_b, "P"))
    r.record("ker P has index 6", coset_table_from_quotient(braid_presentation(4), frak_p).index == 6)

    for n in (3, 4, 5):
        gamma = perm_hom(mcg_sphere_presentation(n + 1), [Perm.transposition(n + 1, i, i + 1) for i in range(1, n + 1)])
        ok_gamma = verify_homomorphism(gamma)
        # Phi_n: sigma_i -> bar sigma_i, then gamma_{n+1}; versus pi_n then iota_n
        lower = [evaluate(gamma, (i,)) for i in range(1, n)]
        upper = [Perm(g.images + (n + 1,)) for g in standard_projection(n).images]
        phi_side = perm_hom(braid_presentation(n), lower)
        r.record(f"square commutes in S_{n + 1} for n={n}",
                 ok_gamma and lower == upper and verify_homomorphism(phi_side))


def _transposition_word(g: Perm) -> tuple[int, ...]:
    (cycle,) = g.cycles()
    i, j = cycle
    if j != i + 1:
        raise ValueError("not an adjacent transposition")
    return (i,)


def _element_words(pres, gens: list[Perm]) -> dict[Perm, tuple[int, ...]]:
    ident = Perm.identity(gens[0].degree)
    words = {ident: ()}
    frontier = [ident]
    while frontier:
        nxt = []
        for x in frontier:
            for k, g in enumerate(gens, 1):
                y = compose(x, g)
                if y not in words:
                    words[y] = words[x] + (k,)
                    nxt.append(y)
        frontier = nxt
    return words


P43_TABLE = {
    (1, 2): (1, 2), (3, 4): (1, 2),
    (1, 3): (1, 3), (2, 4): (1, 3),
    (1, 4): (2, 3), (2, 3): (2, 3),
}


def p43ab_matrix() -> tuple[IntMatrix, dict]:
    """Linking-number images of the six x_ij of B4 under beta43, as columns."""
    beta = cardano_ferrari()
    images = {}
    columns = []
    for pair, x in pure_braid_generators(4).items():
        y = evaluate(beta, x.letters)
        lk = linking_numbers(y)
        images[pair] = lk
        columns.append(lk.vector())
    return IntMatrix.from_columns(columns, rows=3), images


def p43ab_kernel() -> AbelianDescriptor:
    """Kernel of Z^6/<all ones> -> Z^3/<all ones> induced by the p43ab matrix."""
    M, _ = p43ab_matrix()
    ones3 = (1, 1, 1)
    # x with M x in Z (1,1,1): kernel of [M | -ones]
    aug = IntMatrix.from_rows([row + (-o,) for row, o in zip(M.entries, ones3)])
    lattice = [v[:6] for v in kernel_basis(aug)]
    # coordinates of the all-ones vector of Z^6 inside this lattice
    basis = IntMatrix.from_columns(lattice, rows=6)
    coords = kernel_basis(IntMatrix.from_rows([list(row) + [-1] for row in basis.entries]))
    (c,) = coords
    if abs(c[-1]) != 1:
        raise AssertionError("all-ones vector is not primitive in the lattice")
    coords = tuple(x * c[-1] for x in c[:-1])
    return cokernel(IntMatrix.from_columns([coords], rows=len(lattice)))


def suite_p43ab(r: Report, p: dict) -> None:
    t0 = time.perf_counter()
    M, images = p43ab_matrix()
    pairs = [(1, 2), (1, 3), (2, 3)]
    got = {}
    for pair, lk in images.items():
        nz = [q for q, v in zip(pairs, lk.vector()) if v]
        got[pair] = nz[0] if len(nz) == 1 and lk[nz[0]] == 1 else tuple(lk.vector())
    r.record("beta43 images of x_ij are pure", all(braid.is_pure(evaluate(cardano_ferrari(), x.letters)) for x in pure_braid_generators(4).values()))
    shown = ", ".join(f"x{a}{b}->" + (f"x{v[0]}{v[1]}" if len(v) == 2 else str(v)) for (a, b), v in sorted(got.items()))
    r.record("p43ab table reproduced", got == P43_TABLE, shown)
    r.record("all-ones maps to twice all-ones", M.apply((1,) * 6) == (2, 2, 2))
    k = p43ab_kernel()
    r.record("kernel after the single relations is Z^3", k == AbelianDescriptor(3), str(k))
    ker_full = kernel_basis(M)
    r.record("kernel of Z^6 -> Z^3 has rank 3", len(ker_full) == 3, str(ker_full))
    elapsed = time.perf_counter() - t0
    r.record("under 5 s", elapsed < 5, f"{elapsed:.3f}s")


PI04_WORDS = ((1, 2, 3), (2, 3, 1), (3, 1, 2), (1, 3, 2))


def pi04_quotient() -> GroupHom:
    """t_i -> e_i in (Z/2)^3 / diagonal, realised as the regular Klein group."""
    return checked(perm_hom(free_product_presentation(),
                            [cyc("(1 2)(3 4)", 4), cyc("(1 3)(2 4)", 4), cyc("(1 4)(2 3)", 4)], "q"))


def suite_pi04(r: Report, p: dict) -> None:
    t0 = time.perf_counter()
    fp = free_product_presentation()
    table = todd_coxeter(fp, PI04_WORDS, max_cosets=40)
    r.record("coset enumeration gives 4 cosets", table.index == 4, f"{table.index}")
    r.record("subgroup words lie over the diagonal", all(freeprod.is_in_pi04(w) for w in PI04_WORDS))
    qtable = coset_table_from_quotient(fp, pi04_quotient())
    r.record("quotient table gives 4 cosets", qtable.index == 4)
    agree = all(
        table.in_subgroup(w) == freeprod.is_in_pi04(w) == qtable.in_subgroup(w)
        for L in range(0, 9) for w in freeprod.reduced_words(L)
    )
    r.record("membership agrees: enumeration, quotient, diagonal test", agree, "all reduced words of length <= 8")
    rs = reidemeister_schreier(fp, table)
    r.record("Schreier presentation: 9 generators, 12 relators", (len(rs.generators), len(rs.relators)) == (9, 12),
             f"{len(rs.generators)}, {len(rs.relators)}")
    ab = abelianization(rs)
    r.record("subgroup abelianizes to Z^3", ab == AbelianDescriptor(3), str(ab))
    ab2 = abelianization(reidemeister_schreier(fp, qtable, "dfs"))
    r.record("same result from the quotient table, other tree", ab2 == ab, str(ab2))
    elapsed = time.perf_counter() - t0
    r.record("under 5 s", elapsed < 5, f"{elapsed:.3f}s")


def standard_rep_mod_diagonal(g: Perm) -> IntMatrix:
    """Matrix of g on Z^4 / diagonal, basis e_i - e_4 (i = 1, 2, 3), columns = images."""
    m = g.degree
    cols = []
    for i in range(1, m):
        v = [0] * (m - 1)
        a, b = g(i), g(m)
        # e_a - e_b = (e_a - e_m) - (e_b - e_m)
        if a != m:
            v[a - 1] += 1
        if b != m:
            v[b - 1] -= 1
        cols.append(v)
    return IntMatrix.from_columns(cols, rows=m - 1)


def suite_s4rep(r: Report, p: dict) -> None:
    t0 = time.perf_counter()
    group = symmetric_group(4)
    mats = {g: standard_rep_mod_diagonal(g) for g in group}
    r.record("24 pairwise distinct matrices", len(set(mats.values())) == 24, f"{len(set(mats.values()))} distinct")
    # g acts first, then h: the matrix of the product is M(h) M(g)
    hom = all(mats[compose(g, h)] == mats[h] @ mats[g] for g in group for h in group)
    r.record("representation is multiplicative", hom)
    r.record("only the identity acts trivially",
             [g for g in group if mats[g] == IntMatrix.identity(3)] == [Perm.identity(4)])
    elapsed = time.perf_counter() - t0
    r.record("under 5 s", elapsed < 5, f"{elapsed:.3f}s")


def suite_torsion(r: Report, p: dict) -> None:
    maxlen = p.get("maxlen") or 9
    t0 = time.perf_counter()
    scan = freeprod.torsion_scan(maxlen)
    r.record("every involution cyclically reduces to one generator", not scan.bad_shapes,
             f"{len(scan.involutions)} involutions among {scan.words_scanned} words")
    r.record("exactly three class labels", scan.classes == {1, 2, 3}, str(sorted(scan.classes)))
    r.record("t1 t2 t1 is an involution labelled 2", scan.labels.get((1, 2, 1)) == 2 if maxlen >= 3 else True)
    r.record("t1 t2 has infinite order within the bound",
             all(freeprod.fp_normalize((1, 2) * k) for k in range(1, 20)))
    elapsed = time.perf_counter() - t0
    r.record("under 5 s", elapsed < 5, f"{elapsed:.3f}s")


def _ns(p: dict, default) -> list[int]:
    return [p["n"]] if p.get("n") else list(default)


def suite_phinu(r: Report, p: dict) -> None:
    t0 = time.perf_counter()
    es = range(-3, 4)
    for n in _ns(p, range(3, 7)):
        bad = [e for e in es if not central.phi_nu_verify(n, e)]
        r.record(f"n={n}: phi_nu respects relators and zeta -> zeta^nu", not bad, f"failures {bad}" if bad else "e in -3..3")
        bad = [(a, b) for a in es for b in es if not central.phi_compose_law(n, a, b)]
        r.record(f"n={n}: phi_nu1 o phi_nu2 = phi_nu1nu2", not bad, f"failures {bad}" if bad else "49 pairs")
        ok = all(central.phi_nu_ab_exponent(n, e) == 1 + n * (n - 1) * e for e in es)
        r.record(f"n={n}: abelianized twist exponent 1 + n(n-1)e", ok)
    elapsed = time.perf_counter() - t0
    r.record("under 2 min", elapsed < 120, f"{elapsed:.1f}s")


def suite_splitting(r: Report, p: dict) -> None:
    dmax = p.get("dmax") or 60
    t0 = time.perf_counter()
    for n in _ns(p, range(3, 7)):
        k = n * (n - 1)
        splits = [d for d in range(1, dmax + 1) if central.splitting_search(n, d) is not None]
        coprime = [d for d in range(1, dmax + 1) if gcd(k, d) == 1]
        r.record(f"n={n}: splits exactly for d coprime to {k}", splits == coprime,
                 f"{len(splits)} splitting moduli up to {dmax}")
    elapsed = time.perf_counter() - t0
    r.record("under 1 min", elapsed < 60, f"{elapsed:.2f}s")


def suite_classorder(r: Report, p: dict) -> None:
    dmax = p.get("dmax") or 60
    for n in _ns(p, range(3, 7)):
        k = n * (n - 1)
        bad = [d for d in range(1, dmax + 1) if central.class_order(n, d) != central.class_order_gcd(n, d)]
        r.record(f"n={n}: pushout search agrees with gcd(n(n-1), d)", not bad, f"d <= {dmax}" + (f"; bad {bad}" if bad else ""))
        r.record(f"n={n}: order at d = n(n-1) is {k}", central.class_order(n, k) == k)


def suite_transgression(r: Report, p: dict) -> None:
    dmax = p.get("dmax") or 60
    for n in _ns(p, range(3, 7)):
        k = n * (n - 1)
        got = [central.transgression_cokernel(n, N) for N in (k, 2 * k, 3 * k)]
        r.record(f"n={n}: cokernel is Z/{k} along N = {k}, {2 * k}, {3 * k}",
                 all(g == AbelianDescriptor(0, (k,)) for g in got), ", ".join(map(str, got)))
        ok = all(
            central.transgression_cokernel(n, N) == (AbelianDescriptor(0, (gcd(N, k),)) if gcd(N, k) > 1 else AbelianDescriptor(0))
            for N in range(1, dmax + 1)
        )
        r.record(f"n={n}: cokernel is Z/gcd(N, {k}) for N <= {dmax}", ok)


def suite_gtcomm(r: Report, p: dict) -> None:
    seed = p.get("seed")
    seed = 2024 if seed is None else seed
    count = p.get("count") or 50
    rng = random.Random(seed)
    fs = [central.random_commutator_word(rng) for _ in range(count)]
    t0 = time.perf_counter()
    ns = _ns(p, (3, 4))
    failures = []
    cases = 0
    for f in fs:
        for n in ns:
            for lam in range(-3, 4):
                for e in range(-2, 3):
                    cases += 1
                    if not central.gt_commutation_check(n, f, lam, e):
                        failures.append((str(f), n, lam, e))
    r.record("commutation identity on the whole grid", not failures,
             f"{cases} cases, seed {seed}" + (f"; first failure {failures[0]}" if failures else ""))
    bad = [(str(f), n, e) for f in fs for n in ns for e in range(-2, 3) if not central.centrality_insensitive(n, f, e)]
    r.record("f(s_i zeta^e, zeta_i) = f(s_i, zeta_i)", not bad, f"{len(fs) * len(ns) * 5} cases")
    elapsed = time.perf_counter() - t0
    r.record("under 5 min", elapsed < 300, f"{elapsed:.1f}s")


def suite_abelianizations(r: Report, p: dict) -> None:
    t0 = time.perf_counter()
    for n in range(2, 8):
        ab = abelianization(braid_presentation(n))
        r.record(f"B{n} -> Z", ab == AbelianDescriptor(1), str(ab))
    for n in range(3, 7):
        ab = abelianization(central_quotient_presentation(n))
        r.record(f"B{n}/C{n} -> Z/{n * (n - 1)}", ab == AbelianDescriptor(0, (n * (n - 1),)), str(ab))
    ab = abelianization(free_product_presentation())
    r.record("Z2*Z2*Z2 -> (Z/2)^3", ab == AbelianDescriptor(0, (2, 2, 2)), str(ab))
    B4 = braid_presentation(4)
    try:
        table = todd_coxeter(B4, [x.letters for x in pure_braid_generators(4).values()], max_cosets=240)
    except CosetLimitExceeded as exc:
        r.skip("P4 coset table", str(exc))
    else:
        r.record("P4 has index 24 in B4", table.index == 24, f"{table.index}")
        ab = abelianization(reidemeister_schreier(B4, table))
        r.record("P4 via Reidemeister-Schreier -> Z^6", ab == AbelianDescriptor(6), str(ab))
    ab = abelianization(reidemeister_schreier(B4, coset_table_from_quotient(B4, standard_projection(4))))
    r.record("P4 via the S4 quotient table -> Z^6", ab == AbelianDescriptor(6), str(ab))
    elapsed = time.perf_counter() - t0
    r.record("under 30 s", elapsed < 30, f"{elapsed:.2f}s")


SUITES: dict[str, tuple[Callable[[Report, dict], None], str]] = {
    "artin4": (suite_artin4, "surjections B4 -> S4: three classes and the eps values"),
    "artin_n": (suite_artin_n, "surjections B_n -> S_n for n = 3, 5 (6 with --enable-n6)"),
    "b4s3": (suite_b4s3, "surjections B4 -> S3: one class, one kernel"),
    "beta43": (suite_beta43, "Cardano-Ferrari map, s43, Klein group and the Phi_n square"),
    "p43ab": (suite_p43ab, "abelianized restriction to pure braids and its rank-3 kernel"),
    "pi04": (suite_pi04, "index-4 diagonal subgroup of Z2*Z2*Z2 and its abelianization"),
    "s4rep": (suite_s4rep, "S4 on Z^4 modulo the diagonal is faithful"),
    "torsion": (suite_torsion, "bounded torsion scan in Z2*Z2*Z2"),
    "phinu": (suite_phinu, "twisting automorphisms sigma_i -> sigma_i zeta^e"),
    "splitting": (suite_splitting, "splitting of B_n/C_n^d -> B_n/C_n"),
    "classorder": (suite_classorder, "order of the extension class at level d"),
    "transgression": (suite_transgression, "cokernel of restriction to the center"),
    "gtcomm": (suite_gtcomm, "twisting commutes with the (lambda, f) action formula"),
    "abelianizations": (suite_abelianizations, "B_n, B_n/C_n, Z2*Z2*Z2 and P4"),
}


def list_suites() -> dict[str, str]:
    return {name: desc for name, (_, desc) in SUITES.items()}


def run_suite(name: str, **params) -> Report:
    if name not in SUITES:
        raise KeyError(f"unknown suite {name!r}; choose from {', '.join(SUITES)}")
    fn, _ = SUITES[name]
    params = {k: v for k, v in params.items() if v is not None}
    report = Report(name, params)
    t0 = time.perf_counter()
    try:
        fn(report, params)
    except (SearchBudgetExceeded, CosetLimitExceeded) as exc:
        report.skip("budget", str(exc))
    except Exception as exc:  # a crash is a failed check, not a crashed battery
        report.record("suite raised", False, f"{type(exc).__name__}: {exc}")
    report.wall_time = time.perf_counter() - t0
    return report
