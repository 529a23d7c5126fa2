"""Finite abelian groups as products of cyclic factors.

A group is a tuple of cyclic factor sizes (d_1, ..., d_r), each at least 2;
the empty tuple is the trivial group.  Elements are dense indices 0..n-1
under the mixed-radix encoding index = a_1 + d_1*a_2 + d_1*d_2*a_3 + ...,
so the first coordinate varies fastest.  Structure operations (subgroups,
transversals, quotients) all work on these indices and on bitmask sets.
"""

from __future__ import annotations

import math
from typing import Iterable, Sequence

from .sumset import GroupSet, bits_of, translate_mask

__all__ = [
    "Group",
    "Subgroup",
    "Homomorphism",
    "subgroup_generated",
    "coset_representatives",
    "quotient_map",
    "all_subgroups",
    "cyclic_subgroups",
    "unit_multipliers",
    "scale_set",
    "abelian_groups_of_order",
]


class Group:
    """Direct product of cyclic groups Z/d_1 x ... x Z/d_r."""

    __slots__ = ("factors", "order", "strides", "full_mask", "block_reps")

    def __init__(self, factors: Sequence[int]):
        fs = tuple(int(d) for d in factors)
        for d in fs:
            if d < 2:
                raise ValueError(f"cyclic factors must be >= 2, got {d}")
        order = 1
        strides = []
        for d in fs:
            strides.append(order)
            order *= d
        object.__setattr__(self, "factors", fs)
        object.__setattr__(self, "order", order)
        object.__setattr__(self, "strides", tuple(strides))
        object.__setattr__(self, "full_mask", (1 << order) - 1)
        if len(fs) >= 2:
            reps = tuple(
                ((1 << order) - 1) // ((1 << (d * s)) - 1)
                for d, s in zip(fs, strides)
            )
        else:
            reps = ()
        object.__setattr__(self, "block_reps", reps)

    def __setattr__(self, name, value):
        raise AttributeError("Group is immutable")

    # -- element codec -------------------------------------------------

    def coords_of(self, e: int) -> tuple[int, ...]:
        if not 0 <= e < self.order:
            raise ValueError(f"element index {e} out of range for {self}")
        out = []
        for d in self.factors:
            e, a = divmod(e, d)
            out.append(a)
        return tuple(out)

    def index_of(self, coords: Sequence[int]) -> int:
        if len(coords) != len(self.factors):
            raise ValueError(
                f"expected {len(self.factors)} coordinates, got {len(coords)}"
            )
        e = 0
        for a, d, s in zip(coords, self.factors, self.strides):
            a = int(a) % d
            e += a * s
        return e

    # -- arithmetic ----------------------------------------------------

    def add(self, a: int, b: int) -> int:
        if len(self.factors) == 1:
            n = self.order
            if not (0 <= a < n and 0 <= b < n):
                raise ValueError(f"element index out of range for {self}")
            return (a + b) % n
        ca = self.coords_of(a)
        cb = self.coords_of(b)
        return self.index_of([x + y for x, y in zip(ca, cb)])

    def neg(self, a: int) -> int:
        if len(self.factors) == 1:
            n = self.order
            if not 0 <= a < n:
                raise ValueError(f"element index {a} out of range for {self}")
            return (n - a) % n
        return self.index_of([-x for x in self.coords_of(a)])

    def sub(self, a: int, b: int) -> int:
        if len(self.factors) == 1:
            n = self.order
            if not (0 <= a < n and 0 <= b < n):
                raise ValueError(f"element index out of range for {self}")
            return (a - b) % n
        ca = self.coords_of(a)
        cb = self.coords_of(b)
        return self.index_of([x - y for x, y in zip(ca, cb)])

    def scale(self, a: int, k: int) -> int:
        """k-fold sum of a (k any integer); coordinatewise multiplication."""
        if len(self.factors) == 1:
            return (a * k) % self.order
        return self.index_of([x * k for x in self.coords_of(a)])

    def element_order(self, a: int) -> int:
        o = 1
        for x, d in zip(self.coords_of(a), self.factors):
            o = math.lcm(o, d // math.gcd(d, x))
        return o

    def exponent(self) -> int:
        out = 1
        for d in self.factors:
            out = math.lcm(out, d)
        return out

    def elements(self) -> range:
        return range(self.order)

    # -- structure -----------------------------------------------------

    def is_trivial(self) -> bool:
        return self.order == 1

    def invariant_factors(self) -> tuple[int, ...]:
        """Canonical decomposition d_1 | d_2 | ... | d_k of the same group."""
        by_prime: dict[int, list[int]] = {}
        for d in self.factors:
            for p, e in _prime_factorization(d).items():
                by_prime.setdefault(p, []).append(e)
        slots = 0
        for exps in by_prime.values():
            exps.sort(reverse=True)
            slots = max(slots, len(exps))
        out = []
        for j in range(slots):
            f = 1
            for p, exps in by_prime.items():
                if j < len(exps):
                    f *= p ** exps[j]
            out.append(f)
        return tuple(reversed(out))

    def spec_string(self) -> str:
        if not self.factors:
            return "1"
        return "x".join(str(d) for d in self.factors)

    def __eq__(self, other) -> bool:
        return isinstance(other, Group) and self.factors == other.factors

    def __hash__(self) -> int:
        return hash(self.factors)

    def __repr__(self) -> str:
        return f"Group({self.spec_string()})"


def _prime_factorization(n: int) -> dict[int, int]:
    out: dict[int, int] = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            out[d] = out.get(d, 0) + 1
            n //= d
        d += 1
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


class Subgroup:
    """Subgroup of a parent group, stored by its member set."""

    __slots__ = ("parent", "members", "order")

    def __init__(self, parent: Group, members: GroupSet, verified: bool = False):
        if members.group != parent:
            raise ValueError("member set belongs to a different group")
        if 0 not in members:
            raise ValueError("a subgroup must contain the identity")
        m = len(members)
        if parent.order % m != 0:
            raise ValueError(f"size {m} cannot divide group order {parent.order}")
        if not verified:
            _check_closure(parent, members)
        object.__setattr__(self, "parent", parent)
        object.__setattr__(self, "members", members)
        object.__setattr__(self, "order", m)

    def __setattr__(self, name, value):
        raise AttributeError("Subgroup is immutable")

    @classmethod
    def trivial(cls, parent: Group) -> "Subgroup":
        return cls(parent, GroupSet(parent, 1), verified=True)

    @classmethod
    def full(cls, parent: Group) -> "Subgroup":
        return cls(parent, GroupSet.full(parent), verified=True)

    def __contains__(self, e: int) -> bool:
        return e in self.members

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Subgroup)
            and self.parent == other.parent
            and self.members.mask == other.members.mask
        )

    def __hash__(self) -> int:
        return hash((self.parent, self.members.mask))

    def __repr__(self) -> str:
        return f"Subgroup(order {self.order} of {self.parent.spec_string()})"


def _check_closure(group: Group, members: GroupSet) -> None:
    mask = members.mask
    els = members.elements()
    if group.order <= 4096 or len(els) <= 64:
        probe = els
    else:
        step = max(1, len(els) // 16)
        probe = els[::step]
    for e in probe:
        if translate_mask(group, mask, e) & ~mask:
            raise ValueError(f"set is not closed under addition (element {e})")


def subgroup_generated(s: GroupSet) -> Subgroup:
    """Smallest subgroup containing every element of s."""
    group = s.group
    n = group.order
    if n == 1:
        return Subgroup.trivial(group)
    if len(group.factors) == 1:
        g0 = n
        for e in s:
            g0 = math.gcd(g0, e)
            if g0 == 1:
                break
        if g0 == n:
            return Subgroup.trivial(group)
        mask = ((1 << n) - 1) // ((1 << g0) - 1) if g0 > 1 else group.full_mask
        return Subgroup(group, GroupSet(group, mask), verified=True)
    gens = s.elements()
    mask = 1
    frontier = [0]
    while frontier:
        x = frontier.pop()
        for e in gens:
            y = group.add(x, e)
            bit = 1 << y
            if not mask & bit:
                mask |= bit
                frontier.append(y)
    return Subgroup(group, GroupSet(group, mask), verified=True)


def coset_representatives(h: Subgroup) -> GroupSet:
    """One representative per coset of h, the least index in each."""
    group = h.parent
    full = group.full_mask
    covered = 0
    reps = 0
    hmask = h.members.mask
    while covered != full:
        rem = ~covered & full
        low = rem & -rem
        g = low.bit_length() - 1
        reps |= low
        covered |= translate_mask(group, hmask, g)
    return GroupSet(group, reps)


class Homomorphism:
    """Additive map between groups, given by images of the domain generators."""

    __slots__ = ("domain", "codomain", "images")

    def __init__(self, domain: Group, codomain: Group, images: Sequence[int]):
        images = tuple(int(x) for x in images)
        if len(images) != len(domain.factors):
            raise ValueError(
                f"need {len(domain.factors)} generator images, got {len(images)}"
            )
        for img, d in zip(images, domain.factors):
            if not 0 <= img < codomain.order:
                raise ValueError(f"image {img} out of range for {codomain}")
            if codomain.scale(img, d) != 0:
                raise ValueError(
                    f"image {img} has order not dividing generator order {d}"
                )
        object.__setattr__(self, "domain", domain)
        object.__setattr__(self, "codomain", codomain)
        object.__setattr__(self, "images", images)

    def __setattr__(self, name, value):
        raise AttributeError("Homomorphism is immutable")

    def apply(self, e: int) -> int:
        out = 0
        for a, img in zip(self.domain.coords_of(e), self.images):
            if a:
                out = self.codomain.add(out, self.codomain.scale(img, a))
        return out

    def image_set(self, s: GroupSet) -> GroupSet:
        if s.group != self.domain:
            raise ValueError("set is not in the domain")
        mask = 0
        for e in s:
            mask |= 1 << self.apply(e)
        return GroupSet(self.codomain, mask)

    def preimage(self, s: GroupSet) -> GroupSet:
        """Full preimage of s. Scans the domain, so intended for small orders."""
        if s.group != self.codomain:
            raise ValueError("set is not in the codomain")
        mask = 0
        want = s.mask
        for e in self.domain.elements():
            if (want >> self.apply(e)) & 1:
                mask |= 1 << e
        return GroupSet(self.domain, mask)

    def kernel(self) -> Subgroup:
        ker = self.preimage(GroupSet(self.codomain, 1))
        return Subgroup(self.domain, ker)

    def __repr__(self) -> str:
        return (
            f"Homomorphism({self.domain.spec_string()} -> "
            f"{self.codomain.spec_string()}, images={list(self.images)})"
        )


def _smith_with_left(rows: list[list[int]]) -> tuple[list[int], list[list[int]]]:
    """Diagonalize an integer matrix; return (diagonal, U) with S = U*M*V.

    Row operations are mirrored into U; column operations only touch the
    working copy.  The diagonal comes out nonnegative with each entry
    dividing the next.
    """
    r = len(rows)
    c = len(rows[0]) if r else 0
    s = [list(row) for row in rows]
    u = [[1 if i == j else 0 for j in range(r)] for i in range(r)]

    def add_row(dst: int, src: int, q: int) -> None:
        srow, drow = s[src], s[dst]
        for t in range(c):
            drow[t] += q * srow[t]
        su, du = u[src], u[dst]
        for t in range(r):
            du[t] += q * su[t]

    def add_col(dst: int, src: int, q: int) -> None:
        for row in s:
            row[dst] += q * row[src]

    for t in range(min(r, c)):
        while True:
            pivot = None
            best = None
            for i in range(t, r):
                row = s[i]
                for j in range(t, c):
                    v = row[j]
                    if v != 0 and (best is None or abs(v) < best):
                        best = abs(v)
                        pivot = (i, j)
            if pivot is None:
                break
            pi, pj = pivot
            if pi != t:
                s[t], s[pi] = s[pi], s[t]
                u[t], u[pi] = u[pi], u[t]
            if pj != t:
                for row in s:
                    row[t], row[pj] = row[pj], row[t]
            p = s[t][t]
            exact = True
            for i in range(t + 1, r):
                if s[i][t] % p != 0:
                    exact = False
            for j in range(t + 1, c):
                if s[t][j] % p != 0:
                    exact = False
            for i in range(t + 1, r):
                if s[i][t]:
                    add_row(i, t, -(s[i][t] // p))
            for j in range(t + 1, c):
                if s[t][j]:
                    add_col(j, t, -(s[t][j] // p))
            if not exact:
                continue
            bad = None
            for i in range(t + 1, r):
                row = s[i]
                for j in range(t + 1, c):
                    if row[j] % p != 0:
                        bad = i
                        break
                if bad is not None:
                    break
            if bad is not None:
                add_row(t, bad, 1)
                continue
            break
        if t < c and s[t][t] < 0:
            s[t] = [-x for x in s[t]]
            u[t] = [-x for x in u[t]]
    diag = [s[i][i] for i in range(min(r, c))]
    return diag, u


def quotient_map(group: Group, h: Subgroup) -> tuple[Group, Homomorphism]:
    """Quotient group G/H together with the projection map.

    The projection is additive, surjective, and has kernel exactly h; its
    preimage method recovers the union of cosets over any quotient set.
    """
    if h.parent != group:
        raise ValueError("subgroup belongs to a different group")
    r = len(group.factors)
    if r == 0:
        q = Group([])
        return q, Homomorphism(group, q, [])
    if r == 1:
        qsize = group.order // h.order
        if qsize == 1:
            q = Group([])
            return q, Homomorphism(group, q, [0])
        q = Group([qsize])
        return q, Homomorphism(group, q, [1])
    mat = [[0] * (r + h.order) for _ in range(r)]
    for i, d in enumerate(group.factors):
        mat[i][i] = d
    for j, e in enumerate(h.members):
        for i, a in enumerate(group.coords_of(e)):
            mat[i][r + j] = a
    diag, u = _smith_with_left(mat)
    if any(v == 0 for v in diag):
        raise RuntimeError("degenerate relation lattice in quotient computation")
    keep = [i for i, v in enumerate(diag) if v > 1]
    q = Group([diag[i] for i in keep])
    if q.order * h.order != group.order:
        raise RuntimeError("quotient order mismatch, diagonalization is wrong")
    images = []
    for gen in range(r):
        coords = [u[i][gen] % diag[i] for i in keep]
        images.append(q.index_of(coords))
    hom = Homomorphism(group, q, images)
    for e in h.members:
        if hom.apply(e) != 0:
            raise RuntimeError("projection does not kill the subgroup")
    return q, hom


def cyclic_subgroups(group: Group) -> list[Subgroup]:
    """The distinct subgroups generated by single elements."""
    seen: dict[int, Subgroup] = {}
    for g in group.elements():
        sub = subgroup_generated(GroupSet.singleton(group, g))
        seen.setdefault(sub.members.mask, sub)
    return sorted(seen.values(), key=lambda s: (s.order, s.members.mask))


def all_subgroups(group: Group) -> list[Subgroup]:
    """Every subgroup, by closing the cyclic ones under joins.

    Exhaustive only for modest orders; callers working above order 64 should
    fall back to cyclic_subgroups.
    """
    if group.order > 64:
        raise ValueError(
            f"full subgroup enumeration is capped at order 64, got {group.order}"
        )
    cyclic = cyclic_subgroups(group)
    found: dict[int, Subgroup] = {s.members.mask: s for s in cyclic}
    frontier = list(cyclic)
    while frontier:
        h = frontier.pop()
        for cg in cyclic:
            joined = h.members | cg.members
            if joined.mask == h.members.mask:
                continue
            j = subgroup_generated(joined)
            if j.members.mask not in found:
                found[j.members.mask] = j
                frontier.append(j)
    return sorted(found.values(), key=lambda s: (s.order, s.members.mask))


def unit_multipliers(group: Group) -> list[int]:
    """Scalars u that act as automorphisms x -> u*x, up to the exponent."""
    exp = group.exponent()
    return [u for u in range(1, exp + 1) if math.gcd(u, exp) == 1]


def scale_set(s: GroupSet, k: int) -> GroupSet:
    group = s.group
    mask = 0
    for e in s:
        mask |= 1 << group.scale(e, k)
    return GroupSet(group, mask)


def _partitions(n: int) -> Iterable[tuple[int, ...]]:
    if n == 0:
        yield ()
        return
    def rec(remaining: int, cap: int):
        if remaining == 0:
            yield ()
            return
        for first in range(min(remaining, cap), 0, -1):
            for rest in rec(remaining - first, first):
                yield (first,) + rest
    yield from rec(n, n)


def abelian_groups_of_order(n: int) -> list[Group]:
    """One group per isomorphism class of abelian groups of order n."""
    if n < 1:
        raise ValueError(f"order must be positive, got {n}")
    if n == 1:
        return [Group([])]
    prime_options: list[list[tuple[int, ...]]] = []
    for p, e in sorted(_prime_factorization(n).items()):
        options = [tuple(p ** part for part in parts) for parts in _partitions(e)]
        prime_options.append(options)
    groups: list[Group] = []
    def build(idx: int, acc: tuple[int, ...]):
        if idx == len(prime_options):
            groups.append(Group(sorted(acc)))
            return
        for opt in prime_options[idx]:
            build(idx + 1, acc + opt)
    build(0, ())
    groups.sort(key=lambda g: g.factors)
    return groups
