"""Positivity systems for 3x3 Hermitian matrices built from sums of
principal minors.

A system (S1; S2) states three strict inequalities about a 3x3
Hermitian matrix A: the sum of the 1x1 principal minors P_i over i in
S1 is positive, the sum of the 2x2 principal minors P_ij over the pairs
in S2 is positive, and det A = P_123 is positive.  Both S1 and S2 are
nonempty, giving 7 x 7 = 49 systems.

Relabeling the index set {1,2,3} permutes systems without changing
whether they force positive definiteness, so systems are classified up
to that action.  The 49 systems fall into 13 classes.  Seven classes
force positive definiteness: six from the catalog below and one more
whose reduction argument is recorded in `EXTRA_PD_REASON`.  The other
six are rejected by explicit witnesses, one searched, five shipped as
fixtures, each machine-verified on construction.

Spec text grammar: ``P1+P2 ; P12+P13`` (whitespace around ``+`` and
``;`` is tolerated, indices inside one ``P`` token are not separated).
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from itertools import chain, combinations, permutations, product

from .errors import InternalCheckError
from .inertia import Inertia
from .matrices import BlockPartition, HermitianMatrix
from .minors import sigma_index_sets
from .oracle import lagrange_inertia

__all__ = [
    "System3",
    "CatalogCriterion",
    "Verdict",
    "ClassReport",
    "SearchBudget",
    "DEFAULT_BUDGET",
    "EXTRA_PD_SYSTEM",
    "EXTRA_PD_REASON",
    "all_systems",
    "evaluate",
    "permute",
    "canonicalize",
    "class_count",
    "catalog",
    "counterexample_search",
    "verify_witness",
    "classify_system",
    "classify_all",
]

_SINGLES = (1, 2, 3)
_PAIRS = ((1, 2), (1, 3), (2, 3))
_PERMS = tuple(permutations((1, 2, 3)))


@dataclass(frozen=True)
class System3:
    """A pair of nonempty index families: singles and pairs from {1,2,3}."""

    singles: frozenset[int]
    pairs: frozenset[tuple[int, int]]

    def __post_init__(self) -> None:
        if not self.singles or not set(self.singles) <= set(_SINGLES):
            raise ValueError("singles must be a nonempty subset of {1,2,3}")
        if not self.pairs or not set(self.pairs) <= set(_PAIRS):
            raise ValueError(
                "pairs must be a nonempty set of ascending index pairs"
            )

    @classmethod
    def of(cls, singles, pairs) -> "System3":
        return cls(
            frozenset(int(i) for i in singles),
            frozenset(tuple(sorted(int(i) for i in pair)) for pair in pairs),
        )

    @classmethod
    def parse(cls, text: str) -> "System3":
        groups = text.split(";")
        if len(groups) != 2:
            raise ValueError(
                f"system spec needs exactly one ';' separator: {text!r}"
            )
        singles = _parse_terms(groups[0], size=1)
        pairs = _parse_terms(groups[1], size=2)
        return cls.of((s[0] for s in singles), pairs)

    def sort_key(self) -> tuple:
        return (tuple(sorted(self.singles)), tuple(sorted(self.pairs)))

    def spec_text(self) -> str:
        left = "+".join(f"P{i}" for i in sorted(self.singles))
        right = "+".join(f"P{i}{j}" for i, j in sorted(self.pairs))
        return f"{left} ; {right}"

    def __repr__(self) -> str:
        return f"System3[{self.spec_text()}]"


def _parse_terms(group: str, size: int) -> list[tuple[int, ...]]:
    terms = [term.strip() for term in group.split("+")]
    seen: list[tuple[int, ...]] = []
    for term in terms:
        if not term.startswith("P") or not term[1:].isdigit():
            raise ValueError(f"invalid minor term {term!r}")
        indices = tuple(int(ch) for ch in term[1:])
        if len(indices) != size:
            kind = "single" if size == 1 else "pair"
            raise ValueError(f"term {term!r} is not a {kind} index minor")
        if any(not 1 <= i <= 3 for i in indices):
            raise ValueError(f"term {term!r} uses indices outside 1..3")
        if len(set(indices)) != len(indices) or list(indices) != sorted(indices):
            raise ValueError(f"term {term!r} must use distinct ascending indices")
        if indices in seen:
            raise ValueError(f"duplicate term {term!r}")
        seen.append(indices)
    return seen


def all_systems() -> tuple[System3, ...]:
    """The 49 systems, ordered by sort key."""

    def nonempty_subsets(items):
        return chain.from_iterable(
            combinations(items, size) for size in range(1, len(items) + 1)
        )

    systems = [
        System3.of(singles, pairs)
        for singles in nonempty_subsets(_SINGLES)
        for pairs in nonempty_subsets(_PAIRS)
    ]
    return tuple(sorted(systems, key=System3.sort_key))


def evaluate(matrix: HermitianMatrix, system: System3) -> bool:
    """Whether the matrix satisfies all three strict inequalities."""
    if matrix.n != 3:
        raise ValueError(f"system evaluation needs a 3x3 matrix, got {matrix.n}")
    total1 = Fraction(0)
    for i in sorted(system.singles):
        total1 += matrix.principal_minor((i,))
    if total1 <= 0:
        return False
    total2 = Fraction(0)
    for pair in sorted(system.pairs):
        total2 += matrix.principal_minor(pair)
    if total2 <= 0:
        return False
    return matrix.determinant() > 0


def permute(system: System3, perm: tuple[int, int, int]) -> System3:
    """Relabel indices: i becomes perm[i-1]."""
    if sorted(perm) != [1, 2, 3]:
        raise ValueError(f"{perm!r} is not a permutation of (1, 2, 3)")
    image = {i: perm[i - 1] for i in _SINGLES}
    return System3.of(
        (image[i] for i in system.singles),
        (tuple(sorted((image[i], image[j]))) for i, j in system.pairs),
    )


def _orbit(system: System3) -> set[System3]:
    return {permute(system, perm) for perm in _PERMS}


_CLASS_IDS: dict[System3, int] | None = None


def _class_ids() -> dict[System3, int]:
    global _CLASS_IDS
    if _CLASS_IDS is None:
        reps = sorted(
            {min(_orbit(s), key=System3.sort_key) for s in all_systems()},
            key=System3.sort_key,
        )
        _CLASS_IDS = {rep: idx for idx, rep in enumerate(reps, start=1)}
    return _CLASS_IDS


def canonicalize(system: System3) -> tuple[System3, int]:
    """Least representative of the relabeling orbit and its class id."""
    rep = min(_orbit(system), key=System3.sort_key)
    return rep, _class_ids()[rep]


def class_count() -> int:
    return len(_class_ids())


# ---------------------------------------------------------------------------
# the catalog of systems that force positive definiteness


@dataclass(frozen=True)
class CatalogCriterion:
    """A catalog entry; `partition` records which block partition's
    minor-sum positivity produces the system, when one does."""

    id: str
    system: System3
    partition: tuple[int, ...] | None


def _system_from_partition(partition: BlockPartition) -> System3:
    """The 3x3 system whose sums follow the partition's index-set rule."""
    singles = (s[0] for s in sigma_index_sets(1, partition))
    pairs = sigma_index_sets(2, partition)
    return System3.of(singles, pairs)


_CATALOG = (
    CatalogCriterion("i", _system_from_partition(BlockPartition((1, 1, 1))), (1, 1, 1)),
    CatalogCriterion("ii", _system_from_partition(BlockPartition((1, 2))), (1, 2)),
    CatalogCriterion("iii", _system_from_partition(BlockPartition((2, 1))), (2, 1)),
    CatalogCriterion("iv", System3.of((1, 2), _PAIRS), None),
    CatalogCriterion("v", System3.of((1, 2, 3), ((1, 2), (1, 3))), None),
    CatalogCriterion("vi", _system_from_partition(BlockPartition((3,))), (3,)),
)


def catalog() -> tuple[CatalogCriterion, ...]:
    """The six criteria known to force positive definiteness, with their
    block-partition provenance where one exists."""
    return _CATALOG


# One more class forces positive definiteness but is not a relabeling of
# any catalog entry.  Its canonical representative is P1+P2 ; P13+P23.
EXTRA_PD_SYSTEM = System3.of((1, 2), ((1, 3), (2, 3)))
EXTRA_PD_REASON = (
    "P13 + P23 = (P1 + P2) * a33 - |a13|^2 - |a23|^2 for every Hermitian "
    "matrix, so the first two inequalities force a33 > 0; the system then "
    "implies criterion (ii) relabeled by the swap 1<->3, which ensures "
    "positive definiteness."
)


# ---------------------------------------------------------------------------
# verdicts, witnesses, search


@dataclass(frozen=True)
class Verdict:
    """Outcome for one system or class.

    kind is one of ``ensures_pd``, ``rejected``, ``undetermined``.  For
    ``ensures_pd`` the catalog_id is ``i``..``vi`` or ``derived``; for
    ``rejected`` the witness satisfies the system while not being
    positive definite, checked at construction time.
    """

    kind: str
    catalog_id: str | None = None
    witness: HermitianMatrix | None = None
    note: str | None = None


def _rejected(system: System3, witness: HermitianMatrix) -> Verdict:
    if not verify_witness(system, witness):
        raise InternalCheckError(
            f"claimed witness does not reject system {system.spec_text()}"
        )
    return Verdict("rejected", witness=witness)


def verify_witness(system: System3, witness: HermitianMatrix) -> bool:
    """True when the witness satisfies the system yet is not positive
    definite (by the congruence-diagonalization oracle)."""
    if not evaluate(witness, system):
        return False
    return lagrange_inertia(witness).inertia != Inertia(3, 0, 0)


@dataclass(frozen=True)
class SearchBudget:
    """Counterexample search sizes: an exhaustive diagonal grid over
    nonzero integers up to the bound, then seeded random symmetric
    matrices with small rational entries."""

    diagonal_bound: int = 4
    random_samples: int = 10_000
    seed: int = 0


DEFAULT_BUDGET = SearchBudget()


def _random_symmetric(rng: random.Random, bound: int) -> HermitianMatrix:
    scale = Fraction(1, rng.choice((1, 2)))
    entries = [[Fraction(0)] * 3 for _ in range(3)]
    for i in range(3):
        for j in range(i, 3):
            value = scale * rng.randint(-bound, bound)
            entries[i][j] = value
            entries[j][i] = value
    return HermitianMatrix(entries)


def counterexample_search(
    system: System3, budget: SearchBudget = DEFAULT_BUDGET
) -> Verdict:
    """Look for a matrix that satisfies the system without being
    positive definite.

    Phase 1 walks the full diagonal grid in lexicographic order, so the
    first witness is deterministic.  Phase 2 draws seeded random
    symmetric matrices.  Finding nothing proves nothing; the verdict is
    then undetermined, never ensures_pd.
    """
    grid_values = [
        v
        for v in range(-budget.diagonal_bound, budget.diagonal_bound + 1)
        if v != 0
    ]
    for a, b, c in product(grid_values, repeat=3):
        candidate = HermitianMatrix.diagonal((a, b, c))
        if verify_witness(system, candidate):
            return _rejected(system, candidate)
    rng = random.Random(budget.seed)
    for _ in range(budget.random_samples):
        candidate = _random_symmetric(rng, budget.diagonal_bound)
        if verify_witness(system, candidate):
            return _rejected(system, candidate)
    return Verdict(
        "undetermined",
        note=(
            f"no witness among {len(grid_values) ** 3} diagonal grid points "
            f"and {budget.random_samples} random samples"
        ),
    )


# Table witnesses that verify arithmetically, keyed by the canonical
# representative of their class (each of these systems is canonical).
_KNOWN_WITNESSES = {
    System3.of((1,), ((2, 3),)): HermitianMatrix.diagonal((1, -1, -1)),
    System3.of((1,), ((1, 2), (2, 3))): HermitianMatrix.diagonal((1, -1, -2)),
    System3.of((1,), _PAIRS): HermitianMatrix.diagonal((1, -2, -3)),
    System3.of((1, 2), ((1, 3),)): HermitianMatrix.diagonal((-1, 2, -1)),
    System3.of((1, 2, 3), ((1, 2),)): HermitianMatrix.diagonal((-1, -1, 3)),
}


def _verdict_for_canonical(rep: System3, budget: SearchBudget) -> Verdict:
    for criterion in _CATALOG:
        if criterion.system == rep:
            note = (
                f"minor-sum positivity for blocks "
                f"{','.join(str(k) for k in criterion.partition)}"
                if criterion.partition
                else "catalog criterion without a partition form"
            )
            return Verdict("ensures_pd", catalog_id=criterion.id, note=note)
    if rep == EXTRA_PD_SYSTEM:
        return Verdict("ensures_pd", catalog_id="derived", note=EXTRA_PD_REASON)
    if rep in _KNOWN_WITNESSES:
        return _rejected(rep, _KNOWN_WITNESSES[rep])
    return counterexample_search(rep, budget)


@dataclass(frozen=True)
class ClassReport:
    """One relabeling class: canonical representative, all member
    systems, and the shared verdict (stated for the representative)."""

    class_id: int
    canonical: System3
    members: tuple[System3, ...]
    verdict: Verdict


def classify_system(
    system: System3, budget: SearchBudget = DEFAULT_BUDGET
) -> tuple[int, System3, Verdict]:
    """Class id, canonical representative, and a verdict restated for
    the given system (rejected witnesses are relabeled to match it)."""
    rep, class_id = canonicalize(system)
    verdict = _verdict_for_canonical(rep, budget)
    if verdict.kind == "rejected" and system != rep:
        perm = next(p for p in _PERMS if permute(rep, p) == system)
        moved = verdict.witness.permuted(perm)
        verdict = _rejected(system, moved)
    return class_id, rep, verdict


def classify_all(budget: SearchBudget = DEFAULT_BUDGET) -> tuple[ClassReport, ...]:
    """Verdicts for all 49 systems, grouped by relabeling class."""
    groups: dict[System3, list[System3]] = {}
    for system in all_systems():
        rep, _ = canonicalize(system)
        groups.setdefault(rep, []).append(system)
    reports = []
    for rep in sorted(groups, key=System3.sort_key):
        class_id = _class_ids()[rep]
        members = tuple(sorted(groups[rep], key=System3.sort_key))
        reports.append(
            ClassReport(
                class_id=class_id,
                canonical=rep,
                members=members,
                verdict=_verdict_for_canonical(rep, budget),
            )
        )
    return tuple(reports)
