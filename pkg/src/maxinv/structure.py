"""Subgroup-lattice enumeration and classical structural predicates.

Subgroups are int bitsets over parent element ids.  The lattice is built from
all cyclic subgroups by joining with cyclic atoms to a fixpoint, which yields
exactly the joins of cyclic subgroups, i.e. every subgroup.  Results are
cached per exact multiplication table.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, List, Optional

import numpy as np

from .groups import GroupError, GroupTable, order_cap


def bits_from_ids(ids: Iterable[int]) -> int:
    b = 0
    for i in ids:
        b |= 1 << int(i)
    return b


def ids_from_bits(b: int) -> List[int]:
    out = []
    while b:
        low = b & -b
        out.append(low.bit_length() - 1)
        b ^= low
    return out


@lru_cache(maxsize=None)
def prime_factors(n: int) -> tuple:
    """Distinct prime divisors, ascending."""
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return tuple(out)


def p_part(n: int, p: int) -> int:
    """Largest power of p dividing n."""
    m = 1
    while n % p == 0:
        n //= p
        m *= p
    return m


def is_prime(p: int) -> bool:
    return p >= 2 and prime_factors(p) == (p,)


class Subgroup:
    """A subgroup of a parent GroupTable, stored as an int bitset of ids."""

    __slots__ = ("parent", "bits", "order")

    def __init__(self, parent: GroupTable, bits: int):
        self.parent = parent
        self.bits = bits
        self.order = bits.bit_count()

    def elements(self) -> List[int]:
        return ids_from_bits(self.bits)

    def contains(self, x: int) -> bool:
        return bool(self.bits >> x & 1)

    def issubset(self, other: "Subgroup") -> bool:
        return self.bits & other.bits == self.bits

    def is_full(self) -> bool:
        return self.order == self.parent.order

    def __eq__(self, other):
        return (
            isinstance(other, Subgroup)
            and self.bits == other.bits
            and self.parent.order == other.parent.order
        )

    def __hash__(self):
        return hash((self.parent.order, self.bits))

    def __repr__(self):
        return f"<Subgroup order={self.order} of {self.parent.order}>"


def trivial_subgroup(G: GroupTable) -> Subgroup:
    return Subgroup(G, 1)


def full_subgroup(G: GroupTable) -> Subgroup:
    return Subgroup(G, (1 << G.order) - 1)


def subgroup_from_ids(G: GroupTable, ids: Iterable[int]) -> Subgroup:
    return Subgroup(G, bits_from_ids(ids))


def closure_bits(G: GroupTable, seed: int) -> int:
    """Bitset of the subgroup generated by the seed set (plus identity)."""
    bits = seed | 1
    ids = np.array(ids_from_bits(bits), dtype=np.intp)
    while True:
        prods = np.unique(G.mul[np.ix_(ids, ids)])
        nb = bits
        for v in prods.tolist():
            nb |= 1 << v
        if nb == bits:
            return bits
        bits = nb
        ids = np.array(ids_from_bits(bits), dtype=np.intp)


def generated_subgroup(G: GroupTable, ids: Iterable[int]) -> Subgroup:
    return Subgroup(G, closure_bits(G, bits_from_ids(ids)))


@dataclass
class SubgroupLattice:
    """All subgroups of a group, sorted by (order, bitset)."""

    parent: GroupTable
    subgroups: List[Subgroup]
    maximal_ids: tuple

    def maximal_subgroups(self) -> List[Subgroup]:
        return [self.subgroups[i] for i in self.maximal_ids]

    def by_order(self, order: int) -> List[Subgroup]:
        return [s for s in self.subgroups if s.order == order]

    def __len__(self):
        return len(self.subgroups)


_LATTICE_CACHE: dict = {}


def all_subgroups(G: GroupTable) -> SubgroupLattice:
    """The complete subgroup lattice (joins of cyclic subgroups to fixpoint)."""
    if G.order > order_cap():
        raise GroupError("group too large")
    key = G.key()
    cached = _LATTICE_CACHE.get(key)
    if cached is not None and cached.parent is G:
        return cached
    if cached is not None:
        # same table built twice: rebind subgroups onto this instance
        lat = SubgroupLattice(
            G,
            [Subgroup(G, s.bits) for s in cached.subgroups],
            cached.maximal_ids,
        )
        _LATTICE_CACHE[key] = lat
        return lat

    cyclics = set()
    for x in range(G.order):
        bits = 1
        y = x
        while y != 0:
            bits |= 1 << y
            y = int(G.mul[y, x])
        cyclics.add(bits)
    atoms = sorted(b for b in cyclics if b != 1)
    known = set(cyclics)
    queue = list(cyclics)
    while queue:
        h = queue.pop()
        for c in atoms:
            if c | h == h:
                continue
            j = closure_bits(G, h | c)
            if j not in known:
                known.add(j)
                queue.append(j)
    subs = sorted(known, key=lambda b: (b.bit_count(), b))
    subgroups = [Subgroup(G, b) for b in subs]
    full_bits = (1 << G.order) - 1
    maximal = []
    for i, s in enumerate(subgroups):
        if s.bits == full_bits:
            continue
        contained = False
        for t in subgroups:
            if t.order <= s.order or t.bits == full_bits:
                continue
            if s.bits & t.bits == s.bits:
                contained = True
                break
        if not contained:
            maximal.append(i)
    lat = SubgroupLattice(G, subgroups, tuple(maximal))
    _LATTICE_CACHE[key] = lat
    return lat


# ---------------------------------------------------------------------------
# normalizers / centralizers


def _member_mask(G: GroupTable, bits: int) -> np.ndarray:
    mask = np.zeros(G.order, dtype=bool)
    mask[ids_from_bits(bits)] = True
    return mask


def conjugate_bits(G: GroupTable, bits: int, g: int) -> int:
    """Bitset of g H g^-1."""
    ids = np.array(ids_from_bits(bits), dtype=np.intp)
    ginv = int(G.inv[g])
    conj = G.mul[G.mul[g, ids], ginv]
    return bits_from_ids(conj.tolist())


def normalizer(G: GroupTable, H: Subgroup) -> Subgroup:
    """{ g : g H g^-1 = H }."""
    ids = np.array(H.elements(), dtype=np.intp)
    mask = _member_mask(G, H.bits)
    out = 0
    for g in range(G.order):
        conj = G.mul[G.mul[g, ids], int(G.inv[g])]
        if mask[conj].all():
            out |= 1 << g
    return Subgroup(G, out)


def centralizer(G: GroupTable, H: Subgroup) -> Subgroup:
    """{ g : gh = hg for all h in H }."""
    ids = np.array(H.elements(), dtype=np.intp)
    out = 0
    for g in range(G.order):
        if np.array_equal(G.mul[g, ids], G.mul[ids, g]):
            out |= 1 << g
    return Subgroup(G, out)


def center(G: GroupTable) -> Subgroup:
    return centralizer(G, full_subgroup(G))


def is_normal(G: GroupTable, H: Subgroup) -> bool:
    return normalizer(G, H).order == G.order


def is_hall(G: GroupTable, H: Subgroup) -> bool:
    import math

    return math.gcd(H.order, G.order // H.order) == 1


def is_ti(G: GroupTable, H: Subgroup) -> bool:
    """Every conjugate of H meets H trivially or equals H."""
    for g in range(G.order):
        c = conjugate_bits(G, H.bits, g)
        inter = c & H.bits
        if inter != 1 and inter != H.bits:
            return False
    return True


# ---------------------------------------------------------------------------
# Sylow machinery


def sylow_subgroups(G: GroupTable, p: int) -> List[Subgroup]:
    """All Sylow p-subgroups, read off the lattice."""
    if not is_prime(p):
        raise GroupError(f"{p} is not prime")
    target = p_part(G.order, p)
    lat = all_subgroups(G)
    return [s for s in lat.subgroups if s.order == target]


def has_normal_sylow(G: GroupTable, p: int) -> bool:
    return len(sylow_subgroups(G, p)) == 1


def is_nilpotent(G: GroupTable) -> bool:
    """Every Sylow subgroup normal (count 1 per prime)."""
    return all(has_normal_sylow(G, p) for p in prime_factors(G.order))


def lower_central_series(G: GroupTable) -> List[Subgroup]:
    """G = gamma_1 >= gamma_2 >= ... until stable."""
    series = [full_subgroup(G)]
    everything = np.arange(G.order, dtype=np.intp)
    while True:
        cur = series[-1]
        ids = np.array(cur.elements(), dtype=np.intp)
        xy = G.mul[np.ix_(everything, ids)]
        yx = G.mul[np.ix_(ids, everything)].T
        comms = np.unique(G.mul[xy, G.inv[yx]])
        nxt = Subgroup(G, closure_bits(G, bits_from_ids(comms.tolist())))
        if nxt.bits == cur.bits:
            return series
        series.append(nxt)
        if nxt.order == 1:
            return series


def is_nilpotent_lcs(G: GroupTable) -> bool:
    """Independent nilpotency oracle: lower central series reaches 1."""
    return lower_central_series(G)[-1].order == 1


def derived_subgroup(G: GroupTable) -> Subgroup:
    """Subgroup generated by all commutators."""
    xy = G.mul
    yx = G.mul.T
    comms = np.unique(G.mul[xy, G.inv[yx]])
    return Subgroup(G, closure_bits(G, bits_from_ids(comms.tolist())))


def _derived_bits(G: GroupTable, bits: int) -> int:
    ids = np.array(ids_from_bits(bits), dtype=np.intp)
    xy = G.mul[np.ix_(ids, ids)]
    yx = xy.T
    comms = np.unique(G.mul[xy, G.inv[yx]])
    return closure_bits(G, bits_from_ids(comms.tolist()))


def is_solvable(G: GroupTable) -> bool:
    """Derived series reaches the trivial subgroup."""
    bits = (1 << G.order) - 1
    while True:
        nxt = _derived_bits(G, bits)
        if nxt == bits:
            return bits == 1
        bits = nxt
        if bits == 1:
            return True


# ---------------------------------------------------------------------------
# quotients and tower predicates


def quotient_table(G: GroupTable, N: Subgroup) -> GroupTable:
    """Group on cosets of a normal subgroup, ids ordered by minimal member."""
    if not is_normal(G, N):
        raise GroupError("subgroup is not normal; cannot form quotient")
    n_ids = np.array(N.elements(), dtype=np.intp)
    coset_min = np.empty(G.order, dtype=np.int64)
    for x in range(G.order):
        coset_min[x] = int(G.mul[n_ids, x].min())
    reps = sorted(set(coset_min.tolist()))
    rep_id = {r: i for i, r in enumerate(reps)}
    k = len(reps)
    mul = np.empty((k, k), dtype=np.int32)
    for a, ra in enumerate(reps):
        for b, rb in enumerate(reps):
            mul[a, b] = rep_id[int(coset_min[G.mul[ra, rb]])]
    return GroupTable(mul, name=None)


_TOWER_CACHE: dict = {}


def has_sylow_tower(G: GroupTable) -> bool:
    """Some prime ordering gives an iterated normal-Sylow series."""
    if G.order == 1:
        return True
    key = G.key()
    if key in _TOWER_CACHE:
        return _TOWER_CACHE[key]
    result = False
    for p in prime_factors(G.order):
        syl = sylow_subgroups(G, p)
        if len(syl) == 1:
            if has_sylow_tower(quotient_table(G, syl[0])):
                result = True
                break
    _TOWER_CACHE[key] = result
    return result


def is_p_nilpotent(G: GroupTable, p: int) -> bool:
    """A normal Hall p'-subgroup exists (lattice scan)."""
    if not is_prime(p):
        raise GroupError(f"{p} is not prime")
    target = G.order // p_part(G.order, p)
    lat = all_subgroups(G)
    for s in lat.subgroups:
        if s.order == target and is_normal(G, s):
            return True
    return False


def is_p_closed(G: GroupTable, p: int) -> bool:
    """The Sylow p-subgroup is normal."""
    if not is_prime(p):
        raise GroupError(f"{p} is not prime")
    return has_normal_sylow(G, p)


class IndexKind(enum.Enum):
    P_POWER = "p-power"
    P_COPRIME = "p-coprime"
    MIXED = "mixed"


def index_kind(G: GroupTable, H: Subgroup, p: int) -> IndexKind:
    """Classify |G:H| relative to p.  Index 1 reports p-power by convention."""
    if not is_prime(p):
        raise GroupError(f"{p} is not prime")
    idx = G.order // H.order
    if idx == p_part(idx, p):
        return IndexKind.P_POWER
    if idx % p != 0:
        return IndexKind.P_COPRIME
    return IndexKind.MIXED


# ---------------------------------------------------------------------------
# subgroup-level predicates via the parent lattice


def sub_sylows(lat: SubgroupLattice, H: Subgroup, p: int) -> List[Subgroup]:
    """Sylow p-subgroups of H, read from the parent lattice."""
    target = p_part(H.order, p)
    return [s for s in lat.subgroups if s.order == target and s.bits & H.bits == s.bits]


def sub_is_nilpotent(lat: SubgroupLattice, H: Subgroup) -> bool:
    """H nilpotent iff each of its Sylow subgroups is unique within H."""
    return all(len(sub_sylows(lat, H, p)) == 1 for p in prime_factors(H.order))


def minimal_normal_subgroups(G: GroupTable) -> List[Subgroup]:
    if G.order == 1:
        return []
    lat = all_subgroups(G)
    normals = [s for s in lat.subgroups if 1 < s.order < G.order and is_normal(G, s)]
    if not normals:
        return [full_subgroup(G)]
    return [
        s
        for s in normals
        if not any(t.order < s.order and t.bits & s.bits == t.bits for t in normals)
    ]


def is_p_solvable(G: GroupTable, p: int) -> bool:
    """Every chief factor is a p-group or p'-group."""
    if not is_prime(p):
        raise GroupError(f"{p} is not prime")
    if is_solvable(G):
        return True
    if G.order == 1:
        return True
    N = minimal_normal_subgroups(G)[0]
    no = N.order
    if not (no == p_part(no, p) or no % p != 0):
        return False
    if N.order == G.order:
        return True
    return is_p_solvable(quotient_table(G, N), p)
