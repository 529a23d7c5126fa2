"""Complement membership, essential elements, and witness existence.

The central question answered here: given a non-empty set C in a finite
abelian group, is there a W such that C is a minimal additive complement
for W?  exists_witness() routes through cheap certificates first (size
cap, subgroup trap, arithmetic-progression and two-element builders, a
randomized builder for large groups) and only then falls back to the
exhaustive scan, which is the sole source of "no" answers beyond the two
counting bounds.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Optional

from .decision import NO, UNKNOWN, YES, DecisionCertificate, SearchBudget
from .groups import (Group, Subgroup, abelian_groups_of_order, all_subgroups,
                     cyclic_subgroups, subgroup_generated)
from .rng import derive_seed
from .search import scan_for_witness
from .sumset import GroupSet, coverage, sumset, translate_mask

PAIR_SCAN_LIMIT = 1 << 16
SUBGROUP_SCAN_LIMIT = 1 << 16


def is_complement(w: GroupSet, c: GroupSet) -> bool:
    """True when W + C covers the whole group."""
    return sumset(w, c).mask == w.group.full_mask


def _once_twice(group: Group, wmask: int, c_elements) -> tuple[int, int]:
    once = 0
    twice = 0
    for e in c_elements:
        t = translate_mask(group, wmask, e)
        twice |= once & t
        once |= t
    return once, twice


def is_minimal_complement_for(w: GroupSet, c: GroupSet) -> bool:
    """True when W + C = G and dropping any element of C breaks coverage."""
    group = w.group
    if group != c.group:
        raise ValueError("sets belong to different groups")
    ec = c.elements()
    if not ec:
        return False
    once, twice = _once_twice(group, w.mask, ec)
    if once != group.full_mask:
        return False
    unique = once & ~twice
    for e in ec:
        if translate_mask(group, w.mask, e) & unique == 0:
            return False
    return True


@dataclass(frozen=True)
class EssentialityReport:
    """Which elements of C cannot be dropped, with one witness point each.

    unique_witness maps each essential c to the least x whose only
    representation x = w + c' uses c' = c.
    """

    w: GroupSet
    c: GroupSet
    essential: GroupSet
    unique_witness: dict[int, int] = field(default_factory=dict)

    def is_minimal(self) -> bool:
        return self.essential == self.c


def essentiality(w: GroupSet, c: GroupSet) -> EssentialityReport:
    group = w.group
    if not is_complement(w, c):
        raise ValueError("essentiality is defined for complements only")
    prof = coverage(w, c)
    unique = prof.unique_mask()
    ess = 0
    witness: dict[int, int] = {}
    for e in c.elements():
        hit = translate_mask(group, w.mask, e) & unique
        if hit:
            ess |= 1 << e
            witness[e] = (hit & -hit).bit_length() - 1
    return EssentialityReport(w, c, GroupSet(group, ess), witness)


def prune_to_minimal(w: GroupSet, c: GroupSet) -> GroupSet:
    """Repeatedly drop the least-index non-essential element of C.

    The result is a minimal complement for W contained in C.
    """
    if not is_complement(w, c):
        raise ValueError("cannot prune a non-complement")
    group = w.group
    cur = c
    while True:
        ec = cur.elements()
        once, twice = _once_twice(group, w.mask, ec)
        unique = once & ~twice
        dropped = False
        for e in ec:
            if translate_mask(group, w.mask, e) & unique == 0:
                cur = cur.without_element(e)
                dropped = True
                break
        if not dropped:
            return cur


def _containing_subgroup_order(group: Group, c: GroupSet) -> Optional[int]:
    """Order of the smallest subgroup containing a translate of C."""
    ec = c.elements()
    c0 = ec[0]
    rel = [group.sub(e, c0) for e in ec[1:]]
    if len(group.factors) <= 1:
        n = group.order
        g = n
        for d in rel:
            g = math.gcd(g, d)
        return n // g if g else 1
    if group.order > SUBGROUP_SCAN_LIMIT:
        return None
    return subgroup_generated(GroupSet.from_elements(group, rel + [0])).order


def _verified_yes(problem: str, w: GroupSet, c: GroupSet, method: str,
                  detail: dict) -> DecisionCertificate:
    if not is_minimal_complement_for(w, c):
        raise RuntimeError("builder produced a witness that fails verification")
    detail = dict(detail)
    detail["base"] = c
    return DecisionCertificate(problem, YES, method, witness=w, detail=detail)


def exists_witness(c: GroupSet, budget: Optional[SearchBudget] = None,
                   fast_paths: bool = True) -> DecisionCertificate:
    """Decide whether any W makes c a minimal complement.

    Yes-certificates always carry a re-verified witness.  No-certificates
    come from the size cap, the subgroup trap, or a completed exhaustive
    scan.  Anything else is unknown (method "budget").
    """
    group = c.group
    n = group.order
    if not c:
        raise ValueError("empty C")
    if budget is None:
        budget = SearchBudget()
    problem = "minimal-complement-for"
    k = len(c)

    if c.mask == group.full_mask:
        return _verified_yes(problem, GroupSet(group, 1), c, "trivial", {})

    if fast_paths:
        if 3 * k > 2 * n:
            return DecisionCertificate(problem, NO, "bound-size-gap", detail={
                "base": c, "size": k, "cap": (2 * n) // 3})
        m = _containing_subgroup_order(group, c)
        if m is not None and k < m and 2 * n * m < k * (m + 2 * n):
            return DecisionCertificate(problem, NO, "bound-subgroup-gap", detail={
                "base": c, "size": k, "subgroup_order": m})

        from . import builders

        if k <= builders.AP_DETECT_SIZE_LIMIT:
            ap = builders.detect_ap(c)
            if ap is not None:
                cert = builders.ap_decide_and_build(ap)
                if cert.verdict == YES:
                    return cert
        if 2 <= n <= PAIR_SCAN_LIMIT:
            a = builders.pair_witness_search(c)
            if a is not None:
                w = GroupSet.from_elements(group, [0, a])
                return _verified_yes(problem, w, c, "construction-pair",
                                     {"offset": a})
        if n > (budget.max_candidates << 1):
            s = max(1, math.ceil(1.5 * math.log(n)))
            if builders.check_feasibility(n, k, s).feasible:
                seed = derive_seed(0x57A97E55, n, k, c.mask % (1 << 64))
                trace = builders.random_witness(c, s, max_retries=10, seed=seed)
                if trace.result is not None:
                    return _verified_yes(problem, trace.result, c, "random-build",
                                         {"s": s, "retries": trace.retries_used})

    total = 1 << (n - 1) if n > 1 else 1
    if n <= 63 and total <= budget.max_candidates:
        w, checked, complete = scan_for_witness(group, c, budget.max_candidates)
        if w is not None:
            return _verified_yes(problem, w, c, "exhaustive",
                                 {"candidates": checked})
        if complete:
            return DecisionCertificate(problem, NO, "exhaustive", detail={
                "base": c, "candidates": checked})
    return DecisionCertificate(problem, UNKNOWN, "budget", detail={
        "base": c, "candidates_needed": total})


@dataclass(frozen=True)
class TminReport:
    """Largest size threshold below which every subset has a witness.

    value = T(G): every non-empty C with |C| <= value has a witness, and
    some C of size value+1 does not (first_failing), unless value = |G|.
    exact is False when the search hit an undecided subset first.
    """

    group: Group
    value: int
    exact: bool
    first_failing: Optional[GroupSet]
    unknown_at: Optional[GroupSet]
    subsets_checked: int


def compute_tmin(group: Group, budget: Optional[SearchBudget] = None) -> TminReport:
    import itertools

    n = group.order
    checked = 0
    for size in range(1, n + 1):
        unknown_here: Optional[GroupSet] = None
        for rest in itertools.combinations(range(1, n), size - 1):
            c = GroupSet.from_elements(group, (0,) + rest)
            cert = exists_witness(c, budget)
            checked += 1
            if cert.verdict == NO:
                return TminReport(group, size - 1, True, c, None, checked)
            if cert.verdict == UNKNOWN and unknown_here is None:
                unknown_here = c
        if unknown_here is not None:
            return TminReport(group, size - 1, False, None, unknown_here, checked)
    return TminReport(group, n, True, None, None, checked)


def tmin_of_order(n: int, budget: Optional[SearchBudget] = None) -> tuple[int, list[tuple[Group, int]]]:
    """Minimum of compute_tmin over every abelian group of order n."""
    per_group = []
    for g in abelian_groups_of_order(n):
        per_group.append((g, compute_tmin(g, budget).value))
    return min(v for _, v in per_group), per_group


@dataclass(frozen=True)
class GapEntry:
    """Subgroup H and the integer size range it blocks.

    No subset of H with low <= |C| <= high is a minimal complement for
    anything in the ambient group.
    """

    subgroup: Subgroup
    low: int
    high: int

    def sizes(self) -> range:
        return range(self.low, self.high + 1)


def subgroup_gap_family(group: Group) -> list[GapEntry]:
    n = group.order
    subs = all_subgroups(group) if n <= 64 else cyclic_subgroups(group)
    out = []
    for h in subs:
        m = h.order
        low = (2 * n * m) // (m + 2 * n) + 1
        high = m - 1
        if low <= high:
            out.append(GapEntry(h, low, high))
    return out
