"""Dense Cayley-table representation of small finite groups.

Groups are built by breadth-first closure over permutation generators or by
direct/semidirect product constructions.  Element ids are dense integers with
the identity fixed at id 0, so downstream lattice searches can run on plain
int bitsets over ids.
"""
from __future__ import annotations

import os
import re
from functools import cached_property
from typing import Optional, Sequence

import numpy as np

DEFAULT_ORDER_CAP = 360
CAP_ENV_VAR = "MAXINV_ORDER_CAP"


def order_cap() -> int:
    """Configured maximum group order (env override, default 360)."""
    raw = os.environ.get(CAP_ENV_VAR, "")
    return int(raw) if raw else DEFAULT_ORDER_CAP


class GroupError(Exception):
    """Base class for group construction and parsing failures."""


class CapExceededError(GroupError):
    pass


class InvalidPermutationError(GroupError):
    pass


class InvalidActionError(GroupError):
    pass


class GroupParseError(GroupError):
    def __init__(self, message: str, line_no: Optional[int] = None):
        if line_no is not None:
            message = f"line {line_no}: {message}"
        super().__init__(message)
        self.line_no = line_no


# ---------------------------------------------------------------------------
# permutations (tuples of images of 0..degree-1)

Perm = tuple


def identity_perm(degree: int) -> Perm:
    return tuple(range(degree))


def check_perm(images) -> Perm:
    images = tuple(int(x) for x in images)
    if sorted(images) != list(range(len(images))):
        raise InvalidPermutationError(f"invalid permutation: {images!r}")
    return images


def perm_mul(a: Perm, b: Perm) -> Perm:
    """Compose left-to-right: (a*b)(x) = b(a(x))."""
    return tuple(b[x] for x in a)


def perm_inv(a: Perm) -> Perm:
    out = [0] * len(a)
    for i, x in enumerate(a):
        out[x] = i
    return tuple(out)


def perm_cycles(p: Perm) -> str:
    """Cycle notation, fixed points omitted; identity renders as '()'."""
    seen = [False] * len(p)
    parts = []
    for start in range(len(p)):
        if seen[start] or p[start] == start:
            seen[start] = True
            continue
        cyc = [start]
        seen[start] = True
        x = p[start]
        while x != start:
            cyc.append(x)
            seen[x] = True
            x = p[x]
        parts.append("(" + " ".join(str(v) for v in cyc) + ")")
    return "".join(parts) if parts else "()"


# ---------------------------------------------------------------------------
# group tables


class GroupTable:
    """Immutable finite group on dense element ids 0..order-1, identity = 0."""

    def __init__(
        self,
        mul,
        *,
        labels: Optional[tuple] = None,
        degree: Optional[int] = None,
        gen_perms: Optional[list] = None,
        bfs_gen_perms: Optional[list] = None,
        parents: Optional[list] = None,
        name: Optional[str] = None,
    ):
        mul = np.ascontiguousarray(np.asarray(mul, dtype=np.int32))
        if mul.ndim != 2 or mul.shape[0] != mul.shape[1]:
            raise GroupError("multiplication table must be square")
        self.order = int(mul.shape[0])
        mul.setflags(write=False)
        self.mul = mul
        inv = np.empty(self.order, dtype=np.int32)
        for x in range(self.order):
            hits = np.nonzero(mul[x] == 0)[0]
            if len(hits) != 1:
                raise GroupError("table has no unique inverse; not a group")
            inv[x] = hits[0]
        inv.setflags(write=False)
        self.inv = inv
        self.identity = 0
        self.labels = labels
        self.degree = degree
        self.gen_perms = gen_perms  # generators as supplied (file order)
        self.bfs_gen_perms = bfs_gen_perms  # sorted unique generators used in BFS
        self.parents = parents  # parents[e] = (parent_id, bfs_gen_index)
        self.name = name

    # -- basic queries ------------------------------------------------------

    def elements(self) -> range:
        return range(self.order)

    def mul2(self, x: int, y: int) -> int:
        return int(self.mul[x, y])

    def inverse(self, x: int) -> int:
        return int(self.inv[x])

    def key(self) -> tuple:
        """Exact structural cache key."""
        return (self.order, self.mul.tobytes())

    @cached_property
    def element_orders(self) -> tuple:
        out = [1] * self.order
        for x in range(1, self.order):
            k, y = 1, x
            while y != 0:
                y = int(self.mul[y, x])
                k += 1
            out[x] = k
        return tuple(out)

    @cached_property
    def is_abelian(self) -> bool:
        return bool(np.array_equal(self.mul, self.mul.T))

    @cached_property
    def label_index(self) -> dict:
        if self.labels is None:
            raise GroupError("group has no permutation labels")
        return {p: i for i, p in enumerate(self.labels)}

    def __repr__(self):
        tag = self.name or "group"
        return f"<GroupTable {tag} order={self.order}>"


def element_order(G: GroupTable, x: int) -> int:
    """Least k >= 1 with x^k = identity."""
    if not 0 <= x < G.order:
        raise GroupError(f"element id {x} out of range")
    return G.element_orders[x]


def check_table_invariants(G: GroupTable, *, triples: int = 10_000, seed: int = 7) -> None:
    """Raise unless identity/inverse/Latin-square/associativity laws hold.

    Associativity is exhaustive up to order 64 and randomized (fixed seed)
    above that, where the cubic check gets slow.
    """
    n = G.order
    mul = G.mul
    if not np.array_equal(mul[0], np.arange(n)) or not np.array_equal(mul[:, 0], np.arange(n)):
        raise GroupError("identity law fails")
    if any(mul[x, G.inv[x]] != 0 for x in range(n)):
        raise GroupError("inverse law fails")
    full = frozenset(range(n))
    for x in range(n):
        if frozenset(mul[x].tolist()) != full or frozenset(mul[:, x].tolist()) != full:
            raise GroupError("Latin-square property fails")
    if n <= 64:
        # mul[mul][x,y,z] = (xy)z, mul[:, mul][x,y,z] = x(yz)
        if not np.array_equal(mul[mul], mul[:, mul]):
            raise GroupError("associativity fails")
    else:
        rng = np.random.default_rng(seed)
        xs = rng.integers(0, n, size=triples)
        ys = rng.integers(0, n, size=triples)
        zs = rng.integers(0, n, size=triples)
        if not np.array_equal(mul[mul[xs, ys], zs], mul[xs, mul[ys, zs]]):
            raise GroupError("associativity fails (sampled)")


# ---------------------------------------------------------------------------
# constructions


def closure_from_generators(
    gens: Sequence[Perm],
    degree: Optional[int] = None,
    cap: Optional[int] = None,
    name: Optional[str] = None,
) -> GroupTable:
    """Group generated by permutations, ids assigned by BFS discovery.

    The BFS runs over the lexicographically sorted generator list so that id
    assignment is reproducible regardless of input order.
    """
    cap = cap or order_cap()
    gens = [check_perm(g) for g in gens]
    if gens:
        d = len(gens[0])
        if any(len(g) != d for g in gens):
            raise InvalidPermutationError("generators have mismatched degrees")
    else:
        d = degree if degree is not None else 1
    sgens = sorted(set(gens) - {identity_perm(d)})
    elems = [identity_perm(d)]
    index = {elems[0]: 0}
    parents = [(-1, -1)]
    i = 0
    while i < len(elems):
        for gi, g in enumerate(sgens):
            w = perm_mul(elems[i], g)
            if w not in index:
                if len(elems) >= cap:
                    raise CapExceededError("group too large")
                index[w] = len(elems)
                elems.append(w)
                parents.append((i, gi))
        i += 1
    n = len(elems)
    mul = np.empty((n, n), dtype=np.int32)
    for a in range(n):
        ea = elems[a]
        row = mul[a]
        for b in range(n):
            row[b] = index[perm_mul(ea, elems[b])]
    return GroupTable(
        mul,
        labels=tuple(elems),
        degree=d,
        gen_perms=list(gens),
        bfs_gen_perms=sgens,
        parents=parents,
        name=name,
    )


def direct_product(G: GroupTable, H: GroupTable, cap: Optional[int] = None, name: Optional[str] = None) -> GroupTable:
    """Direct product with ids packed as (a, b) -> a*|H| + b."""
    cap = cap or order_cap()
    n1, n2 = G.order, H.order
    if n1 * n2 > cap:
        raise CapExceededError("group too large")
    mul = (G.mul[:, None, :, None].astype(np.int64) * n2 + H.mul[None, :, None, :]).reshape(n1 * n2, n1 * n2)
    labels = None
    degree = None
    gen_perms = None
    if G.labels is not None and H.labels is not None:
        d1 = G.degree or 0
        d2 = H.degree or 0
        degree = d1 + d2
        labels = tuple(
            G.labels[a] + tuple(x + d1 for x in H.labels[b])
            for a in range(n1)
            for b in range(n2)
        )
        if G.gen_perms is not None and H.gen_perms is not None:
            idL = identity_perm(d1)
            idR = tuple(x + d1 for x in identity_perm(d2))
            gen_perms = [g + idR for g in G.gen_perms]
            gen_perms += [idL + tuple(x + d1 for x in h) for h in H.gen_perms]
    if name is None and G.name and H.name:
        name = f"{G.name}x{H.name}"
    return GroupTable(mul, labels=labels, degree=degree, gen_perms=gen_perms, name=name)


def semidirect_product(
    N: GroupTable,
    H: GroupTable,
    act: Sequence,
    cap: Optional[int] = None,
    name: Optional[str] = None,
) -> GroupTable:
    """Semidirect product N x| H for an explicit action homomorphism.

    ``act[h]`` is an array of length |N| mapping ids of N to ids of N; the map
    h -> act[h] must be a homomorphism from H into Aut(N), which is verified
    exhaustively.  Multiplication: (n1,h1)(n2,h2) = (n1 * act(h1)(n2), h1*h2).
    """
    cap = cap or order_cap()
    nn, nh = N.order, H.order
    if nn * nh > cap:
        raise CapExceededError("group too large")
    if len(act) != nh:
        raise InvalidActionError("invalid action")
    A = np.asarray([np.asarray(a, dtype=np.int32) for a in act])
    ids = np.arange(nn)
    for h in range(nh):
        img = A[h]
        if img.shape != (nn,) or img[0] != 0 or sorted(img.tolist()) != list(range(nn)):
            raise InvalidActionError("invalid automorphism")
        if not np.array_equal(img[N.mul], N.mul[np.ix_(img, img)]):
            raise InvalidActionError("invalid automorphism")
    for h1 in range(nh):
        for h2 in range(nh):
            if not np.array_equal(A[H.mul[h1, h2]], A[h1][A[h2]]):
                raise InvalidActionError("invalid action")
    mul = np.empty((nn * nh, nn * nh), dtype=np.int32)
    for h1 in range(nh):
        block = N.mul[:, A[h1]]  # block[n1, n2] = n1 * act(h1)(n2)
        rows = (block[:, :, None] * nh + H.mul[h1][None, None, :]).reshape(nn, nn * nh)
        mul[h1::nh, :] = rows
    return GroupTable(mul, name=name)


# ---------------------------------------------------------------------------
# group file format


def _parse_cycle_word(text: str, npoints: int, line_no: Optional[int] = None) -> Perm:
    s = text.strip()
    if s and not re.fullmatch(r"(\s*\(\s*[\d\s]*\)\s*)+", s):
        raise GroupParseError(f"malformed cycle notation: {s!r}", line_no)
    perm = identity_perm(npoints)
    for body in re.findall(r"\(([\d\s]*)\)", s):
        pts = [int(t) for t in body.split()]
        if any(p >= npoints for p in pts):
            raise GroupParseError(f"point out of range 0..{npoints - 1}: {text.strip()!r}", line_no)
        if len(set(pts)) != len(pts):
            raise GroupParseError(f"repeated point in cycle: {text.strip()!r}", line_no)
        imgs = list(identity_perm(npoints))
        for i, p in enumerate(pts):
            imgs[p] = pts[(i + 1) % len(pts)]
        perm = perm_mul(perm, tuple(imgs))
    return perm


def parse_group_file(text: str, cap: Optional[int] = None, name: Optional[str] = None) -> GroupTable:
    """Parse the group file format and return the generated group.

    Format: optional '#' comment lines, one 'points: <n>' line, then zero or
    more 'gen: <cycles>' lines with 0-based points.
    """
    npoints = None
    gens = []
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        m = re.fullmatch(r"points:\s*(\d+)", line)
        if m:
            if npoints is not None:
                raise GroupParseError("duplicate points line", line_no)
            npoints = int(m.group(1))
            if npoints < 1:
                raise GroupParseError("points must be >= 1", line_no)
            continue
        m = re.fullmatch(r"gen:\s*(.*)", line)
        if m:
            if npoints is None:
                raise GroupParseError("gen line before points line", line_no)
            gens.append(_parse_cycle_word(m.group(1), npoints, line_no))
            continue
        raise GroupParseError(f"unrecognized line: {line!r}", line_no)
    if npoints is None:
        raise GroupParseError("missing points line")
    return closure_from_generators(gens, degree=npoints, cap=cap, name=name)


def serialize_group_file(G: GroupTable, comment: Optional[str] = None) -> str:
    if G.degree is None or G.gen_perms is None:
        raise GroupError("group has no permutation generators to serialize")
    lines = []
    if comment:
        lines.append(f"# {comment}")
    lines.append(f"points: {G.degree}")
    for g in G.gen_perms:
        lines.append(f"gen: {perm_cycles(g)}")
    return "\n".join(lines) + "\n"
