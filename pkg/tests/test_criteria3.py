import random
from itertools import permutations

import pytest

import support
from minorsum.criteria3 import (
    DEFAULT_BUDGET,
    EXTRA_PD_SYSTEM,
    SearchBudget,
    System3,
    all_systems,
    canonicalize,
    catalog,
    class_count,
    classify_all,
    classify_system,
    counterexample_search,
    evaluate,
    permute,
    verify_witness,
)
from minorsum.inertia import Inertia
from minorsum.matrices import BlockPartition, HermitianMatrix
from minorsum.minors import sigma_index_sets
from minorsum.oracle import lagrange_inertia

PERMS = tuple(permutations((1, 2, 3)))


def is_pd(matrix):
    return lagrange_inertia(matrix).inertia == Inertia(3, 0, 0)


class TestSystem3:
    def test_parse_and_text(self):
        s = System3.parse("P1+P2 ; P12+P13")
        assert s.singles == frozenset({1, 2})
        assert s.pairs == frozenset({(1, 2), (1, 3)})
        assert s.spec_text() == "P1+P2 ; P12+P13"
        assert System3.parse(s.spec_text()) == s

    def test_parse_tolerates_spacing(self):
        assert System3.parse("P1;P23") == System3.of((1,), ((2, 3),))
        assert System3.parse(" P3 + P1 ; P13 ") == System3.of((1, 3), ((1, 3),))

    @pytest.mark.parametrize(
        "bad",
        [
            "",
            "P1",
            "P1 ; P2 ; P3",
            "P1 ; P1",
            "P12 ; P12",
            "P1+P1 ; P12",
            "P1 ; P21",
            "P1 ; P14",
            "P0 ; P12",
            "Q1 ; P12",
            "P1 ; P123",
            "P1+ ; P12",
        ],
    )
    def test_parse_rejects(self, bad):
        with pytest.raises(ValueError):
            System3.parse(bad)

    def test_constructor_rejects_empty_sides(self):
        with pytest.raises(ValueError):
            System3.of((), ((1, 2),))
        with pytest.raises(ValueError):
            System3.of((1,), ())


def test_all_systems_enumeration():
    systems = all_systems()
    assert len(systems) == 49
    assert len(set(systems)) == 49
    assert list(systems) == sorted(systems, key=System3.sort_key)


def test_evaluate_examples():
    witness = HermitianMatrix.diagonal((1, -1, -1))
    assert evaluate(witness, System3.parse("P1 ; P23"))
    assert not evaluate(witness, System3.parse("P1 ; P12"))
    assert evaluate(HermitianMatrix.identity(3), System3.parse("P1+P2+P3 ; P12"))
    with pytest.raises(ValueError):
        evaluate(HermitianMatrix.identity(2), System3.parse("P1 ; P12"))


def test_pd_matrices_satisfy_every_system():
    # all principal minors of a PD matrix are positive, so every sum is
    rng = random.Random(43)
    found = 0
    while found < 10:
        h = support.random_hermitian(rng, 3)
        if not is_pd(h):
            continue
        found += 1
        for system in all_systems():
            assert evaluate(h, system)


def test_permute_examples():
    s = System3.parse("P1 ; P23")
    swapped = permute(s, (2, 1, 3))
    assert swapped == System3.parse("P2 ; P13")
    assert permute(s, (1, 2, 3)) == s
    with pytest.raises(ValueError):
        permute(s, (1, 1, 3))


def test_permute_equivariance_with_matrix_relabeling():
    rng = random.Random(47)
    systems = all_systems()
    for _ in range(60):
        h = support.random_hermitian(rng, 3)
        system = systems[rng.randrange(len(systems))]
        perm = PERMS[rng.randrange(6)]
        assert evaluate(h, system) == evaluate(h.permuted(perm), permute(system, perm))


def test_orbit_partition_against_brute_force():
    # independent orbit computation: close each system under all 6 relabelings
    seen = {}
    for system in all_systems():
        orbit = frozenset(permute(system, perm) for perm in PERMS)
        seen.setdefault(orbit, set()).add(system)
    assert len(seen) == 13
    assert class_count() == 13
    for orbit, members in seen.items():
        reps = {canonicalize(member) for member in members}
        assert len(reps) == 1
        rep, _ = reps.pop()
        assert rep == min(orbit, key=System3.sort_key)
    sizes = sorted(len(orbit) for orbit in seen)
    assert sizes == [1, 3, 3, 3, 3, 3, 3, 3, 3, 6, 6, 6, 6]


def test_canonicalize_is_idempotent_and_ids_are_dense():
    ids = set()
    for system in all_systems():
        rep, class_id = canonicalize(system)
        assert canonicalize(rep) == (rep, class_id)
        ids.add(class_id)
    assert ids == set(range(1, 14))


class TestCatalog:
    def test_six_entries_with_expected_systems(self):
        entries = {c.id: c for c in catalog()}
        assert sorted(entries) == ["i", "ii", "iii", "iv", "v", "vi"]
        assert entries["i"].system == System3.parse("P1 ; P12")
        assert entries["ii"].system == System3.parse("P1 ; P12+P13")
        assert entries["iii"].system == System3.parse("P1+P2 ; P12")
        assert entries["iv"].system == System3.parse("P1+P2 ; P12+P13+P23")
        assert entries["v"].system == System3.parse("P1+P2+P3 ; P12+P13")
        assert entries["vi"].system == System3.parse("P1+P2+P3 ; P12+P13+P23")

    def test_partition_provenance(self):
        # entries with a partition are the minor-sum positivity systems
        # of that partition: index families straight from sigma
        for entry in catalog():
            if entry.partition is None:
                continue
            p = BlockPartition(entry.partition)
            singles = frozenset(s[0] for s in sigma_index_sets(1, p))
            pairs = frozenset(sigma_index_sets(2, p))
            assert entry.system == System3(singles, pairs)

    def test_catalog_systems_are_canonical(self):
        for entry in catalog():
            rep, _ = canonicalize(entry.system)
            assert rep == entry.system

    def test_catalog_soundness_random(self):
        rng = random.Random(53)
        accepted = 0
        for _ in range(400):
            h = support.random_hermitian(rng, 3, bound=2)
            for entry in catalog():
                if evaluate(h, entry.system):
                    accepted += 1
                    assert is_pd(h)
        assert accepted > 0


class TestExtraPdClass:
    def test_not_a_catalog_relabeling(self):
        catalog_orbits = {
            frozenset(permute(c.system, perm) for perm in PERMS)
            for c in catalog()
        }
        assert not any(EXTRA_PD_SYSTEM in orbit for orbit in catalog_orbits)

    def test_soundness_random(self):
        rng = random.Random(59)
        accepted = 0
        for _ in range(800):
            h = support.random_hermitian(rng, 3, bound=2)
            if evaluate(h, EXTRA_PD_SYSTEM):
                accepted += 1
                assert is_pd(h)
        assert accepted > 0

    def test_reduction_identity(self):
        # P13 + P23 = (P1 + P2) a33 - |a13|^2 - |a23|^2, the key step of
        # the recorded reduction argument
        rng = random.Random(61)
        for _ in range(50):
            h = support.random_hermitian(rng, 3)
            lhs = h.principal_minor((1, 3)) + h.principal_minor((2, 3))
            a33 = h.rows[2][2].as_rational()
            rhs = (
                (h.principal_minor((1,)) + h.principal_minor((2,))) * a33
                - h.rows[0][2].abs_squared()
                - h.rows[1][2].abs_squared()
            )
            assert lhs == rhs


def test_verify_witness():
    assert verify_witness(
        System3.parse("P1 ; P23"), HermitianMatrix.diagonal((1, -1, -1))
    )
    # a PD matrix is never a witness
    assert not verify_witness(
        System3.parse("P1 ; P23"), HermitianMatrix.identity(3)
    )
    # neither is a matrix that fails the system
    assert not verify_witness(
        System3.parse("P1 ; P12"), HermitianMatrix.diagonal((1, -1, -1))
    )


def test_counterexample_search_pinned_first_hit():
    # the one class without a shipped witness; phase 1 is deterministic
    verdict = counterexample_search(System3.parse("P1+P2 ; P12+P13"))
    assert verdict.kind == "rejected"
    assert verdict.witness == HermitianMatrix.diagonal((-2, 3, -4))


def test_counterexample_search_gives_up_honestly():
    verdict = counterexample_search(
        System3.parse("P1 ; P12"), SearchBudget(diagonal_bound=1, random_samples=5)
    )
    assert verdict.kind == "undetermined"
    assert "no witness" in verdict.note


def test_classify_system_transports_witnesses():
    for system in all_systems():
        class_id, rep, verdict = classify_system(system)
        assert canonicalize(system) == (rep, class_id)
        if verdict.kind == "rejected":
            # the witness is restated for the queried system
            assert verify_witness(system, verdict.witness)


def test_classify_all_covers_everything():
    reports = classify_all()
    assert len(reports) == 13
    assert sum(len(r.members) for r in reports) == 49
    kinds = {r.verdict.kind for r in reports}
    assert kinds == {"ensures_pd", "rejected"}
    pd_ids = sorted(
        r.verdict.catalog_id for r in reports if r.verdict.kind == "ensures_pd"
    )
    assert pd_ids == ["derived", "i", "ii", "iii", "iv", "v", "vi"]
    for report in reports:
        for member in report.members:
            rep, class_id = canonicalize(member)
            assert rep == report.canonical
            assert class_id == report.class_id
        if report.verdict.kind == "rejected":
            assert verify_witness(report.canonical, report.verdict.witness)
        if report.verdict.catalog_id == "derived":
            assert report.canonical == EXTRA_PD_SYSTEM
            assert "a33" in report.verdict.note


def test_default_budget_is_modest():
    assert DEFAULT_BUDGET.diagonal_bound == 4
    assert DEFAULT_BUDGET.random_samples == 10_000
