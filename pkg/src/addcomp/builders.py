"""Constructive witness builders and structural lifts.

Three families live here:

* direct builders: two-element witnesses detected by a mask identity,
  arithmetic progressions decided exactly and equipped with explicit
  witnesses, and a randomized builder for large groups whose sample is
  accepted only after three failure events are ruled out;
* lifts that transport a verified witness through a subgroup, a quotient,
  or from a finite set of integers into a cyclic window;
* the feasibility inequality and two lower-bound evaluators for the
  all-small-sets threshold.

Every builder re-verifies what it returns; nothing here hands back an
unchecked witness.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Optional

from .decision import NO, YES, DecisionCertificate, SearchBudget
from .groups import Group, Homomorphism, Subgroup, coset_representatives, subgroup_generated
from .rng import SplitMix64, derive_seed
from .sumset import GroupSet, negated_mask, sumset, translate, translate_mask
from . import complements

AP_DETECT_SIZE_LIMIT = 64

PROBLEM = "minimal-complement-for"


def pair_witness_check(c: GroupSet, a: int) -> bool:
    """Is c a minimal complement for the two-element set {0, a}?

    Holds exactly when every g has g or g+a in C, but never g, g+a, g+2a
    all three.  Both conditions are two mask operations.
    """
    group = c.group
    if a == 0 or a >= group.order:
        raise ValueError(f"offset must be a non-zero group element, got {a}")
    m = c.mask
    t1 = translate_mask(group, m, group.neg(a))
    t2 = translate_mask(group, m, group.neg(group.add(a, a)))
    return (m | t1) == group.full_mask and (m & t1 & t2) == 0


def pair_witness_search(c: GroupSet) -> Optional[int]:
    """Least non-zero a such that pair_witness_check passes, if any."""
    for a in range(1, c.group.order):
        if pair_witness_check(c, a):
            return a
    return None


@dataclass(frozen=True)
class APDescriptor:
    """An arithmetic progression presentation of a set.

    set = {start + j*step : 0 <= j < length}; for length 1 the step is 0
    by convention.
    """

    set: GroupSet
    start: int
    step: int
    length: int


def detect_ap(c: GroupSet) -> Optional[APDescriptor]:
    """Find a progression presentation of c, or None.

    Candidate steps are differences with the least element (both signs):
    for a progression the least element is interior or an endpoint, so
    one of these differences is a valid step.
    """
    group = c.group
    ec = c.elements()
    k = len(ec)
    if k == 0 or k > AP_DETECT_SIZE_LIMIT:
        return None
    if k == 1:
        return APDescriptor(c, ec[0], 0, 1)
    cset = set(ec)
    c0 = ec[0]
    seen = set()
    candidates = []
    for e in ec[1:]:
        for d in (group.sub(e, c0), group.sub(c0, e)):
            if d and d not in seen:
                seen.add(d)
                candidates.append(d)
    for d in candidates:
        if translate_mask(group, c.mask, d) == c.mask:
            if group.element_order(d) == k:
                return APDescriptor(c, c0, d, k)
            continue
        starts = [s for s in ec if group.sub(s, d) not in cset]
        if len(starts) != 1:
            continue
        cur = starts[0]
        ok = True
        for _ in range(k - 1):
            cur = group.add(cur, d)
            if cur not in cset:
                ok = False
                break
        if ok:
            return APDescriptor(c, starts[0], d, k)
    return None


def ap_decide_and_build(ap: APDescriptor) -> DecisionCertificate:
    """Exact verdict for a progression, with a built witness on yes.

    With m the order of the generated subgroup: yes iff
    k*(2n + m) <= 2nm or k = m.  The witness construction splits on
    k <= m/2, m/2 < k <= 2m/3, and the dense two-per-coset case.
    """
    c = ap.set
    group = c.group
    n = group.order
    k = ap.length
    if k == 1:
        h = Subgroup.trivial(group)
    else:
        h = subgroup_generated(GroupSet.singleton(group, ap.step))
    m = h.order
    detail = {"base": c, "start": ap.start, "step": ap.step, "subgroup_order": m}

    if k == m:
        w = coset_representatives(h)
        wfinal = translate(w, group.neg(ap.start))
        if not complements.is_minimal_complement_for(wfinal, c):
            raise RuntimeError("coset witness failed verification")
        detail["case"] = "full-coset"
        return DecisionCertificate(PROBLEM, YES, "construction-subgroup",
                                   witness=wfinal, detail=detail)

    if k * (2 * n + m) > 2 * n * m:
        detail["size"] = k
        return DecisionCertificate(PROBLEM, NO, "bound-subgroup-gap", detail=detail)

    d = ap.step
    if 2 * k <= m:
        idx = [0] + list(range(k, m - k + 1))
        detail["case"] = "sparse"
        wmask = 0
        for j in idx:
            wmask |= 1 << group.scale(d, j)
        w = sumset(GroupSet(group, wmask), coset_representatives(h))
    elif 3 * k <= 2 * m:
        detail["case"] = "two-point"
        wmask = (1 << 0) | (1 << group.scale(d, k))
        w = sumset(GroupSet(group, wmask), coset_representatives(h))
    else:
        detail["case"] = "dense"
        t = m - k
        first_batch = -(-k // (2 * t))
        reps = coset_representatives(h).elements()
        wmask = 0
        for i, rep in enumerate(reps, start=1):
            shift = i * t if i <= first_batch else t
            wmask |= 1 << rep
            wmask |= 1 << group.add(rep, group.scale(d, shift))
        w = GroupSet(group, wmask)

    wfinal = translate(w, group.neg(ap.start))
    if not complements.is_minimal_complement_for(wfinal, c):
        raise RuntimeError("progression witness failed verification")
    return DecisionCertificate(PROBLEM, YES, "construction-ap",
                               witness=wfinal, detail=detail)


@dataclass(frozen=True)
class FeasibilityReport:
    """The three-term inequality gating the randomized builder."""

    n: int
    k: int
    s: int
    term1: float
    term2: float
    term3: float

    @property
    def feasible(self) -> bool:
        return self.term1 + self.term2 + self.term3 < 1.0


def _exp_guarded(x: float) -> float:
    return math.inf if x > 700.0 else math.exp(x)


def check_feasibility(n: int, k: int, s: int) -> FeasibilityReport:
    if n < 1 or k < 1 or s < 1:
        raise ValueError("n, k, s must all be positive")
    term1 = (s * s) * (k ** 3) / n
    term2 = _exp_guarded(s + 3 * s * math.log(k) - (s - 1) * math.log(n))
    term3 = _exp_guarded(math.log(k) + s * math.log(term1)) if term1 > 0 else 0.0
    return FeasibilityReport(n, k, s, term1, term2, term3)


def tmin_lower_bound_natural(n: int) -> float:
    """Threshold lower bound tuned for s about 1.5 ln n."""
    if n < 2:
        raise ValueError("needs n >= 2")
    return (2.0 ** (2.0 / 3.0)) * n ** (1.0 / 3.0) / (3.0 * math.e * math.log(n)) ** (2.0 / 3.0)


def tmin_lower_bound_log2(n: int) -> float:
    """Simplified threshold lower bound in base-2 logs."""
    if n < 2:
        raise ValueError("needs n >= 2")
    return n ** (1.0 / 3.0) / (2.0 * math.log2(n) ** (2.0 / 3.0))


@dataclass(frozen=True)
class RandomBuildTrace:
    """Full record of one randomized build, final attempt included.

    samples[i][p] is the p-th draw for the i-th element of C (elements
    ascending); derived[i][p] = samples[i][p] + c_i.  e1 marks a sample
    collision (some derived point lands in another sample's translate of
    C), e2 a pile-up (some point reachable from at least s derived
    points through C - C), e3 a blocked row (some i where every draw is
    entangled with another row through a partial-overlap point).  chosen
    maps each i to the draw kept for the witness; result is the verified
    witness or None after retries ran out.
    """

    c: GroupSet
    s: int
    rng_seed: int
    retries_used: int
    samples: list[list[int]] = field(default_factory=list)
    derived: list[list[int]] = field(default_factory=list)
    e1: bool = False
    e2: bool = False
    e3: bool = False
    chosen: dict[int, int] = field(default_factory=dict)
    result: Optional[GroupSet] = None
    debug: dict = field(default_factory=dict)


def trace_to_json(trace: RandomBuildTrace) -> dict:
    return {
        "group": trace.c.group.spec_string(),
        "c": trace.c.hex_mask(),
        "s": trace.s,
        "rng_seed": trace.rng_seed,
        "retries_used": trace.retries_used,
        "samples": trace.samples,
        "derived": trace.derived,
        "e1": trace.e1,
        "e2": trace.e2,
        "e3": trace.e3,
        "chosen": {str(i): p for i, p in trace.chosen.items()},
        "result": trace.result.hex_mask() if trace.result is not None else None,
        "debug": trace.debug,
    }


def random_witness(c: GroupSet, s: int, max_retries: int = 10,
                   seed: int = 0) -> RandomBuildTrace:
    """Randomized witness for large groups, verified before acceptance.

    Draws s candidate translates per element of C, rejects the whole
    attempt when any of the three failure events fires, then assembles
    W from one kept draw per element plus everything outside the union
    of the derived points' back-translates.  Verification demands full
    coverage and a uniquely-represented derived point per element, which
    together force minimality.
    """
    group = c.group
    n = group.order
    ec = c.elements()
    k = len(ec)
    if k == 0:
        raise ValueError("empty C")
    if s < 1:
        raise ValueError("need s >= 1")

    if k == 1:
        w = GroupSet.full(group)
        return RandomBuildTrace(c, s, seed, 0, [], [], False, False, False,
                                {}, w, {"fast_path": "singleton"})

    cset = set(ec)
    r_d: dict[int, int] = {}
    for ci in ec:
        for cj in ec:
            delta = group.sub(cj, ci)
            r_d[delta] = r_d.get(delta, 0) + 1
    diffs = sorted(r_d)
    good_offsets = []
    for delta, r in sorted(r_d.items()):
        if r * s > k and r < k:
            for ct in ec:
                if group.sub(ct, delta) not in cset:
                    good_offsets.append(group.sub(delta, ct))
                    break
            else:
                raise RuntimeError("partial overlap with no missing point")
    neg_c = negated_mask(group, c.mask)
    full = group.full_mask

    last: Optional[RandomBuildTrace] = None
    for attempt in range(max_retries):
        rng = SplitMix64(derive_seed(seed, attempt))
        samples = [[rng.below(n) for _ in range(s)] for _ in range(k)]
        derived = [[group.add(samples[i][p], ec[i]) for p in range(s)]
                   for i in range(k)]
        flat = [(i, p) for i in range(k) for p in range(s)]
        value_rows: dict[int, set[int]] = {}
        for i, p in flat:
            value_rows.setdefault(derived[i][p], set()).add(i)

        e1 = False
        for i, p in flat:
            gv = derived[i][p]
            for j, q in flat:
                if (i, p) == (j, q):
                    continue
                if group.sub(gv, samples[j][q]) in cset:
                    e1 = True
                    break
            if e1:
                break

        pile: dict[int, int] = {}
        for i, p in flat:
            gv = derived[i][p]
            for z in {group.add(gv, delta) for delta in diffs}:
                pile[z] = pile.get(z, 0) + 1
        pile_max = max(pile.values()) if pile else 0
        e2 = pile_max >= s

        e3 = False
        keep: dict[int, int] = {}
        for i in range(k):
            found = None
            for p in range(s):
                gv = derived[i][p]
                blocked = False
                for off in good_offsets:
                    u = group.add(gv, off)
                    for ct in ec:
                        rows = value_rows.get(group.add(u, ct))
                        if rows and (rows - {i}):
                            blocked = True
                            break
                    if blocked:
                        break
                if not blocked:
                    found = p
                    break
            if found is None:
                e3 = True
                break
            keep[i] = found

        debug = {"z_count": len(good_offsets), "pile_max": pile_max}
        last = RandomBuildTrace(c, s, seed, attempt + 1, samples, derived,
                                e1, e2, e3, {}, None, debug)
        if e1 or e2 or e3:
            continue

        bad = 0
        chosen_g = []
        for i in range(k):
            gv = derived[i][keep[i]]
            chosen_g.append(gv)
            bad |= translate_mask(group, neg_c, gv)
        wmask = full & ~bad
        for i in range(k):
            wmask |= 1 << samples[i][keep[i]]
        once, twice = complements._once_twice(group, wmask, ec)
        if once != full:
            continue
        unique = once & ~twice
        if not all((unique >> gv) & 1 for gv in chosen_g):
            continue
        return RandomBuildTrace(c, s, seed, attempt + 1, samples, derived,
                                False, False, False, keep,
                                GroupSet(group, wmask), debug)
    return last


def lift_via_subgroup(wh: GroupSet, c: GroupSet,
                      h: Optional[Subgroup] = None) -> GroupSet:
    """Turn a witness inside a subgroup into one for the whole group.

    wh and c live in the ambient group with all elements inside some
    subgroup H (derived as wh + c when not supplied), c minimal for wh
    within H.  The lifted witness is wh plus a transversal of H.
    """
    group = wh.group
    if group != c.group:
        raise ValueError("sets belong to different groups")
    if not wh or not c:
        raise ValueError("need non-empty sets")
    span = sumset(wh, c)
    if h is None:
        h = Subgroup(group, span)
    elif span != h.members:
        raise ValueError("wh + c does not fill the given subgroup")
    once, twice = complements._once_twice(group, wh.mask, c.elements())
    unique = once & ~twice
    for e in c.elements():
        if translate_mask(group, wh.mask, e) & unique == 0:
            raise ValueError("c is not a minimal complement within the subgroup")
    w = sumset(wh, coset_representatives(h))
    if not complements.is_minimal_complement_for(w, c):
        raise RuntimeError("subgroup lift failed verification")
    return w


def lift_via_quotient(wq: GroupSet, c: GroupSet, pi: Homomorphism) -> GroupSet:
    """Pull a quotient witness back through the projection.

    Needs pi injective on c and pi(c) minimal for wq downstairs; the
    lifted witness is the full preimage of wq.
    """
    group = c.group
    if pi.domain != group or wq.group != pi.codomain:
        raise ValueError("projection does not match the sets")
    images = [pi.apply(e) for e in c.elements()]
    if len(set(images)) != len(images):
        raise ValueError("projection is not injective on c")
    cq = GroupSet.from_elements(pi.codomain, images)
    if not complements.is_minimal_complement_for(wq, cq):
        raise ValueError("projected set is not minimal for the given witness")
    w = pi.preimage(wq)
    if not complements.is_minimal_complement_for(w, c):
        raise RuntimeError("quotient lift failed verification")
    return w


@dataclass(frozen=True)
class IntegerLift:
    """A finite set of integers realized as minimal complement mod 2M.

    witness is for the residues of the original integers (residues
    field) in Z/modulus; skipped lists moduli tried without success in
    minimal mode.
    """

    c_ints: tuple[int, ...]
    modulus: int
    residues: GroupSet
    witness: GroupSet
    method: str
    mode: str
    skipped: tuple[int, ...] = ()


SAFE_MODULUS_SCALE = 100


def lift_integer_window(c_ints, mode: str = "minimal",
                        budget: Optional[SearchBudget] = None) -> IntegerLift:
    """Realize a finite integer set as a minimal complement in Z/2M.

    Shifting by the minimum and reducing mod 2M is faithful once
    2M exceeds the diameter: representations upstairs and downstairs
    then correspond one to one, so the cyclic verification transfers.
    mode "minimal" scans M upward from diameter+1 and returns the first
    modulus where a verified witness lands; "safe" jumps straight to
    M = 100*k^4 + 1.
    """
    raw = [int(x) for x in c_ints]
    ints = sorted(set(raw))
    if not ints:
        raise ValueError("empty integer set")
    if len(ints) != len(raw):
        raise ValueError("duplicate integers")
    if mode not in ("minimal", "safe"):
        raise ValueError(f"unknown mode {mode!r}")
    k = len(ints)
    base = ints[0]
    shifted = [x - base for x in ints]
    diam = shifted[-1]
    safe_m = SAFE_MODULUS_SCALE * (k ** 4) + 1
    if mode == "safe":
        m_values = [safe_m]
    else:
        m_values = range(max(diam + 1, 1), safe_m + 1)
    skipped = []
    for m in m_values:
        modulus = 2 * m
        group = Group([modulus])
        c0 = GroupSet.from_elements(group, shifted)
        cert = complements.exists_witness(c0, budget)
        if cert.verdict != YES:
            skipped.append(modulus)
            continue
        shift_back = group.neg(base % modulus)
        w = translate(cert.witness, shift_back)
        residues = GroupSet.from_elements(group, [x % modulus for x in ints])
        if not complements.is_minimal_complement_for(w, residues):
            raise RuntimeError("window lift failed verification")
        return IntegerLift(tuple(ints), modulus, residues, w, cert.method,
                           mode, tuple(skipped))
    raise RuntimeError(
        f"no modulus up to 2*{safe_m} yielded a verified witness in mode {mode!r}")
