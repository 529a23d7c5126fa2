"""Sets of group elements as integer bitmasks, and the sumset kernels on them.

A set over a group of order n lives in one Python integer: bit i is element i.
Translation by a group element is a composition of per-factor block rotations,
so a sumset A + B is computed by OR-ing translates of the larger operand's
mask over the smaller operand's elements.  Everything downstream (complement
checks, coverage, supplement tests) reduces to these kernels.
"""

from __future__ import annotations

from typing import TYPE_CHECKING, Iterable, Iterator

import numpy as np

if TYPE_CHECKING:
    from .groups import Group

__all__ = [
    "GroupSet",
    "CoverageProfile",
    "bits_of",
    "translate_mask",
    "negated_mask",
    "sumset",
    "difference_set",
    "translate",
    "negated",
    "coverage",
    "mask_to_array",
    "array_to_mask",
]


def bits_of(mask: int) -> Iterator[int]:
    """Yield the set bit positions of a mask, ascending."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def translate_mask(group: "Group", mask: int, g: int) -> int:
    """Mask of {a + g : a in mask}, via block rotations along each factor."""
    n = group.order
    if g == 0 or mask == 0 or n <= 1:
        return mask
    full = group.full_mask
    if len(group.factors) == 1:
        return ((mask << g) | (mask >> (n - g))) & full
    m = mask
    for i, (d, stride) in enumerate(zip(group.factors, group.strides)):
        a = (g // stride) % d
        if a == 0:
            continue
        block = d * stride
        t = a * stride
        rep = group.block_reps[i]
        keep = ((1 << (block - t)) - 1) * rep
        m = (((m & keep) << t) | ((m & ~keep & full) >> (block - t))) & full
    return m


def negated_mask(group: "Group", mask: int) -> int:
    """Mask of {-a : a in mask}."""
    out = 0
    for e in bits_of(mask):
        out |= 1 << group.neg(e)
    return out


class GroupSet:
    """Immutable subset of a finite abelian group, stored as a bitmask."""

    __slots__ = ("group", "mask")

    def __init__(self, group: "Group", mask: int):
        if mask < 0 or mask >> group.order:
            raise ValueError(
                f"mask 0x{mask:x} does not fit a group of order {group.order}"
            )
        object.__setattr__(self, "group", group)
        object.__setattr__(self, "mask", mask)

    def __setattr__(self, name, value):
        raise AttributeError("GroupSet is immutable")

    @classmethod
    def from_elements(cls, group: "Group", elements: Iterable[int]) -> "GroupSet":
        mask = 0
        for e in elements:
            if not 0 <= e < group.order:
                raise ValueError(f"element index {e} out of range for {group}")
            mask |= 1 << e
        return cls(group, mask)

    @classmethod
    def empty(cls, group: "Group") -> "GroupSet":
        return cls(group, 0)

    @classmethod
    def full(cls, group: "Group") -> "GroupSet":
        return cls(group, group.full_mask)

    @classmethod
    def singleton(cls, group: "Group", e: int) -> "GroupSet":
        return cls.from_elements(group, (e,))

    def elements(self) -> list[int]:
        return list(bits_of(self.mask))

    def hex_mask(self) -> str:
        return hex(self.mask)

    def complement(self) -> "GroupSet":
        return GroupSet(self.group, self.group.full_mask & ~self.mask)

    def with_element(self, e: int) -> "GroupSet":
        return GroupSet(self.group, self.mask | (1 << e))

    def without_element(self, e: int) -> "GroupSet":
        return GroupSet(self.group, self.mask & ~(1 << e))

    def is_subset(self, other: "GroupSet") -> bool:
        return self.mask & ~other.mask == 0

    def __contains__(self, e: int) -> bool:
        return 0 <= e < self.group.order and (self.mask >> e) & 1 == 1

    def __iter__(self) -> Iterator[int]:
        return bits_of(self.mask)

    def __len__(self) -> int:
        return self.mask.bit_count()

    def __bool__(self) -> bool:
        return self.mask != 0

    def __or__(self, other: "GroupSet") -> "GroupSet":
        _same_group(self, other)
        return GroupSet(self.group, self.mask | other.mask)

    def __and__(self, other: "GroupSet") -> "GroupSet":
        _same_group(self, other)
        return GroupSet(self.group, self.mask & other.mask)

    def __sub__(self, other: "GroupSet") -> "GroupSet":
        _same_group(self, other)
        return GroupSet(self.group, self.mask & ~other.mask)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, GroupSet)
            and self.group == other.group
            and self.mask == other.mask
        )

    def __hash__(self) -> int:
        return hash((self.group, self.mask))

    def __repr__(self) -> str:
        els = self.elements()
        if len(els) > 12:
            inner = ", ".join(map(str, els[:10])) + f", ... ({len(els)} elements)"
        else:
            inner = ", ".join(map(str, els))
        return f"GroupSet({self.group.spec_string()}, {{{inner}}})"


def _same_group(a: GroupSet, b: GroupSet) -> None:
    if a.group != b.group:
        raise ValueError(f"sets live in different groups: {a.group} vs {b.group}")


def sumset(a: GroupSet, b: GroupSet) -> GroupSet:
    """Pointwise sum A + B = {x + y : x in A, y in B}."""
    _same_group(a, b)
    group = a.group
    if not a.mask or not b.mask:
        return GroupSet(group, 0)
    small, large = (a, b) if len(a) <= len(b) else (b, a)
    full = group.full_mask
    acc = 0
    lm = large.mask
    for e in small:
        acc |= translate_mask(group, lm, e)
        if acc == full:
            break
    return GroupSet(group, acc)


def negated(a: GroupSet) -> GroupSet:
    return GroupSet(a.group, negated_mask(a.group, a.mask))


def difference_set(a: GroupSet) -> GroupSet:
    """A - A = {x - y : x, y in A}."""
    return sumset(a, negated(a))


def translate(a: GroupSet, g: int) -> GroupSet:
    if not 0 <= g < a.group.order:
        raise ValueError(f"element index {g} out of range for {a.group}")
    return GroupSet(a.group, translate_mask(a.group, a.mask, g))


def mask_to_array(group: "Group", mask: int) -> np.ndarray:
    """Bitmask to a uint8 0/1 array over element indices."""
    n = group.order
    nbytes = (n + 7) // 8
    raw = np.frombuffer(mask.to_bytes(nbytes, "little"), dtype=np.uint8)
    return np.unpackbits(raw, bitorder="little")[:n]


def array_to_mask(arr: np.ndarray) -> int:
    packed = np.packbits(arr.astype(bool), bitorder="little")
    return int.from_bytes(packed.tobytes(), "little")


class CoverageProfile:
    """Per-element representation counts for a pair (W, C).

    counts[g] is the number of pairs (w, c) with w + c = g.  Counts are held
    in 16-bit saturating storage; since every count is bounded by
    min(|W|, |C|), construction refuses pairs where that bound does not fit,
    which keeps the narrow counters honest.
    """

    __slots__ = ("group", "counts")

    def __init__(self, group: "Group", counts: np.ndarray):
        self.group = group
        self.counts = counts

    def count(self, g: int) -> int:
        return int(self.counts[g])

    def covered_mask(self) -> int:
        return array_to_mask(self.counts > 0)

    def unique_mask(self) -> int:
        """Mask of elements represented exactly once."""
        return array_to_mask(self.counts == 1)

    def total(self) -> int:
        return int(self.counts.sum(dtype=np.int64))


def coverage(w: GroupSet, c: GroupSet) -> CoverageProfile:
    """Representation counts of every group element as w + c."""
    _same_group(w, c)
    group = w.group
    n = group.order
    cap = min(len(w), len(c))
    if cap >= 1 << 16:
        raise OverflowError(
            f"coverage counts up to {cap} overflow 16-bit counters"
        )
    counts = np.zeros(n, dtype=np.uint16)
    if cap == 0 or n == 0:
        return CoverageProfile(group, counts)
    small, large = (w, c) if len(w) <= len(c) else (c, w)
    base = mask_to_array(group, large.mask).astype(np.uint16)
    r = len(group.factors)
    if r <= 1:
        for e in small:
            if e == 0:
                counts += base
            else:
                counts[e:] += base[: n - e]
                counts[:e] += base[n - e :]
    else:
        shape = tuple(reversed(group.factors))
        grid = base.reshape(shape)
        axes = tuple(range(r))
        for e in small:
            shifts = tuple(reversed(group.coords_of(e)))
            counts += np.roll(grid, shifts, axis=axes).reshape(-1)
    return CoverageProfile(group, counts)
