"""Coprime automorphism actions and invariant subgroup structure.

An acting group A is represented by its image in Aut(G): the hypotheses under
test depend only on which subgroups are invariant, and coprimality of |A|
forces coprimality of the image order.  The tool therefore requires
gcd(|image|, |G|) = 1 and takes A to be the image.
"""
from __future__ import annotations

import math
import re
from typing import List, Optional, Sequence

import numpy as np

from .groups import (
    GroupError,
    GroupParseError,
    GroupTable,
    InvalidActionError,
    _parse_cycle_word,
    order_cap,
    perm_cycles,
)
from .structure import (
    Subgroup,
    SubgroupLattice,
    all_subgroups,
    bits_from_ids,
    is_prime,
    sylow_subgroups,
)

BRUTE_FORCE_AUT_CAP = 24


class Automorphism:
    """Bijection of element ids preserving multiplication."""

    __slots__ = ("group", "images")

    def __init__(self, group: GroupTable, images, *, _checked: bool = False):
        images = np.asarray(images, dtype=np.int32)
        if not _checked:
            if images.shape != (group.order,) or images[0] != 0:
                raise InvalidActionError("invalid automorphism")
            if sorted(images.tolist()) != list(range(group.order)):
                raise InvalidActionError("invalid automorphism")
            if not np.array_equal(images[group.mul], group.mul[np.ix_(images, images)]):
                raise InvalidActionError("invalid automorphism")
        images.setflags(write=False)
        self.group = group
        self.images = images

    def __call__(self, x: int) -> int:
        return int(self.images[x])

    def compose(self, other: "Automorphism") -> "Automorphism":
        """self after other: (self*other)(x) = self(other(x))."""
        return Automorphism(self.group, self.images[other.images], _checked=True)

    def inverse(self) -> "Automorphism":
        out = np.empty_like(self.images)
        out[self.images] = np.arange(len(self.images))
        return Automorphism(self.group, out, _checked=True)

    def apply_bits(self, bits: int) -> int:
        out = 0
        imgs = self.images
        while bits:
            low = bits & -bits
            out |= 1 << int(imgs[low.bit_length() - 1])
            bits ^= low
        return out

    def is_identity(self) -> bool:
        return bool(np.array_equal(self.images, np.arange(self.group.order)))

    def key(self) -> bytes:
        return self.images.tobytes()

    def __eq__(self, other):
        return isinstance(other, Automorphism) and self.key() == other.key()

    def __hash__(self):
        return hash(self.key())


def identity_automorphism(G: GroupTable) -> Automorphism:
    return Automorphism(G, np.arange(G.order), _checked=True)


def automorphism_from_gen_images(G: GroupTable, image_perms: Sequence) -> Automorphism:
    """Extend generator images (permutations) to the induced id-map.

    ``image_perms`` are aligned with ``G.gen_perms`` (file order).  Each image
    permutation must itself be an element of G.
    """
    if G.gen_perms is None or G.parents is None or G.labels is None:
        raise InvalidActionError("group was not built from permutation generators")
    if len(image_perms) != len(G.gen_perms):
        raise InvalidActionError(
            f"expected images for {len(G.gen_perms)} generators, got {len(image_perms)}"
        )
    image_of = {}
    for g, img in zip(G.gen_perms, image_perms):
        img = tuple(img)
        if g in image_of and image_of[g] != img:
            raise InvalidActionError("conflicting images for a repeated generator")
        image_of[g] = img
    gen_image_ids = []
    for g in G.bfs_gen_perms:
        img = image_of[g]
        gid = G.label_index.get(img)
        if gid is None:
            raise InvalidActionError("generator image is not an element of the group")
        gen_image_ids.append(gid)
    images = np.zeros(G.order, dtype=np.int32)
    for e in range(1, G.order):
        parent, gi = G.parents[e]
        images[e] = G.mul[images[parent], gen_image_ids[gi]]
    return Automorphism(G, images)


class ActionGroup:
    """Closure of automorphism generators, with coprimality certificate."""

    def __init__(self, group: GroupTable, gens: List[Automorphism], elements: List[Automorphism], name: str):
        self.group = group
        self.gens = gens
        self.elements = elements
        self.name = name

    @property
    def order(self) -> int:
        return len(self.elements)

    def is_trivial(self) -> bool:
        return self.order == 1

    def __repr__(self):
        return f"<ActionGroup {self.name} order={self.order}>"


def action_closure(
    G: GroupTable,
    gens: Sequence[Automorphism],
    name: Optional[str] = None,
    max_size: Optional[int] = None,
) -> ActionGroup:
    """Group generated under composition; rejects non-coprime actions."""
    max_size = max_size or 10 * order_cap()
    for a in gens:
        if a.group is not G:
            raise InvalidActionError("automorphism bound to a different group")
    ident = identity_automorphism(G)
    elems = [ident]
    seen = {ident.key()}
    i = 0
    while i < len(elems):
        for g in gens:
            w = elems[i].compose(g)
            if w.key() not in seen:
                if len(elems) >= max_size:
                    raise InvalidActionError("action closure too large")
                seen.add(w.key())
                elems.append(w)
        i += 1
    if math.gcd(len(elems), G.order) != 1:
        raise InvalidActionError("action not coprime")
    return ActionGroup(G, list(gens), elems, name or ("A=1" if len(elems) == 1 else f"A{len(elems)}"))


def trivial_action(G: GroupTable) -> ActionGroup:
    return action_closure(G, [], name="A=1")


# ---------------------------------------------------------------------------
# invariance


def is_invariant(H: Subgroup, A: ActionGroup) -> bool:
    """phi(H) = H for every phi in A."""
    if A.is_trivial():
        return True
    return all(phi.apply_bits(H.bits) == H.bits for phi in A.elements)


def is_invariant_under_gens(H: Subgroup, A: ActionGroup) -> bool:
    """Equivalent generator-only check (oracle for property tests)."""
    return all(phi.apply_bits(H.bits) == H.bits for phi in A.gens)


def invariant_subgroups(G: GroupTable, A: ActionGroup, lat: Optional[SubgroupLattice] = None) -> List[Subgroup]:
    lat = lat or all_subgroups(G)
    if A.is_trivial():
        return list(lat.subgroups)
    return [s for s in lat.subgroups if is_invariant(s, A)]


def maximal_invariant_subgroups(
    G: GroupTable, A: ActionGroup, lat: Optional[SubgroupLattice] = None
) -> List[Subgroup]:
    """Inclusion-maximal proper A-invariant subgroups."""
    lat = lat or all_subgroups(G)
    if A.is_trivial():
        return lat.maximal_subgroups()
    inv = [s for s in invariant_subgroups(G, A, lat) if not s.is_full()]
    out = []
    for s in inv:
        if not any(t.order > s.order and s.bits & t.bits == s.bits for t in inv):
            out.append(s)
    return out


def invariant_sylows(G: GroupTable, A: ActionGroup, p: int) -> List[Subgroup]:
    """Sylow p-subgroups fixed setwise by A."""
    return [s for s in sylow_subgroups(G, p) if is_invariant(s, A)]


# ---------------------------------------------------------------------------
# small-order automorphism oracle


def _greedy_generators(G: GroupTable) -> List[int]:
    from .structure import closure_bits

    gens: List[int] = []
    bits = 1
    while bits.bit_count() < G.order:
        x = next(i for i in range(G.order) if not bits >> i & 1)
        gens.append(x)
        bits = closure_bits(G, bits | 1 << x)
    return gens


def brute_force_automorphisms(G: GroupTable) -> List[Automorphism]:
    """Complete automorphism group by exhaustive generator-image search.

    Only for tiny groups; serves as an oracle for the action machinery.
    """
    if G.order > BRUTE_FORCE_AUT_CAP:
        raise GroupError("group too large for brute-force automorphism search")
    if G.order == 1:
        return [identity_automorphism(G)]
    gens = _greedy_generators(G)
    # BFS word decomposition over the chosen generators
    order_list = [0]
    parents = {0: (-1, -1)}
    i = 0
    while i < len(order_list):
        e = order_list[i]
        for gi, g in enumerate(gens):
            w = int(G.mul[e, g])
            if w not in parents:
                parents[w] = (e, gi)
                order_list.append(w)
        i += 1
    orders = G.element_orders
    candidates = [
        [x for x in range(G.order) if orders[x] == orders[g]] for g in gens
    ]
    found = []
    n = G.order

    def try_assignment(images_of_gens):
        imgs = np.zeros(n, dtype=np.int32)
        for e in order_list[1:]:
            parent, gi = parents[e]
            imgs[e] = G.mul[imgs[parent], images_of_gens[gi]]
        if len(set(imgs.tolist())) != n:
            return None
        if not np.array_equal(imgs[G.mul], G.mul[np.ix_(imgs, imgs)]):
            return None
        return Automorphism(G, imgs, _checked=True)

    import itertools

    for combo in itertools.product(*candidates):
        a = try_assignment(combo)
        if a is not None:
            found.append(a)
    return found


# ---------------------------------------------------------------------------
# action file format


def parse_action_file(text: str, G: GroupTable) -> ActionGroup:
    """Parse 'aut:' lines listing images of the group file's generators.

    Each line: ``aut: g0 -> <cycles>; g1 -> <cycles>; ...`` with one
    assignment per generator, in order.
    """
    if G.gen_perms is None or G.degree is None:
        raise InvalidActionError("group was not built from permutation generators")
    gens = []
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        m = re.fullmatch(r"aut:\s*(.*)", line)
        if not m:
            raise GroupParseError(f"unrecognized line: {line!r}", line_no)
        parts = [p.strip() for p in m.group(1).split(";") if p.strip()]
        if len(parts) != len(G.gen_perms):
            raise GroupParseError(
                f"expected {len(G.gen_perms)} generator images, got {len(parts)}", line_no
            )
        image_perms = []
        for k, part in enumerate(parts):
            pm = re.fullmatch(r"g(\d+)\s*->\s*(.*)", part)
            if not pm or int(pm.group(1)) != k:
                raise GroupParseError(f"expected 'g{k} -> <cycles>', got {part!r}", line_no)
            image_perms.append(_parse_cycle_word(pm.group(2), G.degree, line_no))
        gens.append(automorphism_from_gen_images(G, image_perms))
    return action_closure(G, gens)


def serialize_action_file(A: ActionGroup) -> str:
    """Inverse of parse_action_file for generator-image representable actions."""
    G = A.group
    if G.gen_perms is None or G.labels is None:
        raise InvalidActionError("group was not built from permutation generators")
    lines = []
    for phi in A.gens:
        parts = []
        for k, g in enumerate(G.gen_perms):
            gid = G.label_index[g]
            img_perm = G.labels[int(phi.images[gid])]
            parts.append(f"g{k} -> {perm_cycles(img_perm)}")
        lines.append("aut: " + "; ".join(parts))
    return "\n".join(lines) + ("\n" if lines else "")
