"""Enumerate numerical semigroups by second-kind gap count and Frobenius number.

The task: given K >= 0 and F, list every numerical semigroup S with
l(S) = K and F(S) = F.  Two gates decide feasibility:

    parity   K + F must be odd (l even forces F odd and vice versa),
    size     F >= K + 1 (l(S) <= F(S) - 1 always).

For feasible (K, F) the answer decomposes over irreducible semigroups.
Every S with l(S) = K lies in [theta(I), I] for exactly one irreducible
I with F(I) = F, namely at depth floor(K/2) of the interval tree of I,
and the interval [theta(I), I] reaches that depth exactly when
#(I \\ theta(I)) >= floor(K/2).  So the procedure is:

    1. walk the irreducible tree of F, pruned at threshold floor(K/2),
    2. take D(I) = the floor(K/2)-level of each surviving root's
       interval tree,
    3. report the groups; they partition the answer.

Roots appear in BFS discovery order, members of each group in canonical
(gap list) order, so output is deterministic; per-root level
computations are independent and may run on a thread pool without
changing anything observable.

witness_k_semigroup produces a single example without enumeration by
deleting the floor(K/2) largest nonzero members below F from the
canonical irreducible semigroup C(F); those members all exceed F/2, so
every deletion stays a semigroup and each raises l by 2.
"""

import enum
from dataclasses import dataclass

from ._util import WorkBudget, map_ordered
from .core import NumericalSemigroup
from .trees import canonical_irreducible, interval_level, irreducible_tree


class Mode(enum.Enum):
    FULL = "full"
    COUNT_ONLY = "count-only"


@dataclass(frozen=True)
class EnumerationRequest:
    k: int
    frobenius: int
    mode: Mode = Mode.FULL
    max_work: object = None  # int | None


@dataclass(frozen=True)
class EnumerationGroup:
    """One root I with the members of D(I); members is None in count mode."""

    root: NumericalSemigroup
    members: object  # tuple | None
    count: int


@dataclass(frozen=True)
class EnumerationResult:
    feasible: bool
    groups: tuple
    total: int


def feasible(k: int, frobenius: int) -> bool:
    """Parity and size gates; no semigroup exists when either fails."""
    return (k + frobenius) % 2 == 1 and frobenius >= k + 1


def enumerate_k_semigroups(req: EnumerationRequest, threads=1) -> EnumerationResult:
    """All S with l(S) = req.k and F(S) = req.frobenius, grouped by root.

    Raises BudgetExceeded when more than req.max_work nodes get expanded
    across the pruned irreducible tree and the interval levels combined;
    partial results are discarded, not returned.
    """
    if not feasible(req.k, req.frobenius):
        return EnumerationResult(False, (), 0)
    half = req.k // 2
    budget = WorkBudget(req.max_work) if req.max_work is not None else None
    tree = irreducible_tree(
        req.frobenius, prune_threshold=half, threads=threads, budget=budget
    )
    roots = [node.semigroup for node in tree.nodes]
    levels = map_ordered(
        lambda root: interval_level(root, half, budget=budget), roots, threads
    )
    groups = []
    total = 0
    for root, members in zip(roots, levels):
        total += len(members)
        groups.append(
            EnumerationGroup(
                root=root,
                members=members if req.mode is Mode.FULL else None,
                count=len(members),
            )
        )
    return EnumerationResult(True, tuple(groups), total)


def witness_k_semigroup(k: int, frobenius: int):
    """One semigroup with l = k and the given Frobenius number, or None.

    Starting from C(F), delete the floor(k/2) largest nonzero members
    below F.  Each is above F/2, so closure never breaks, and l grows by
    2 per deletion from l(C(F)) in {0, 1}; the parity gate makes the
    total come out to exactly k.
    """
    if not feasible(k, frobenius):
        return None
    seed = canonical_irreducible(frobenius)
    bits = seed.bits
    left = k // 2
    for x in range(frobenius - 1, 0, -1):
        if left == 0:
            break
        if (bits >> x) & 1:
            bits &= ~(1 << x)
            left -= 1
    witness = NumericalSemigroup(frobenius, bits)
    assert witness.gap_profile.l_count == k
    return witness
