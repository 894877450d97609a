"""Standard group constructors, named fixtures, and the campaign generator."""
from __future__ import annotations

import hashlib
from collections import Counter
from dataclasses import dataclass, field
from typing import Dict, List, Optional

from .action import ActionGroup, action_closure, automorphism_from_gen_images, trivial_action
from .groups import (
    GroupError,
    GroupTable,
    closure_from_generators,
    direct_product,
    order_cap,
    perm_mul,
)
from .structure import all_subgroups, is_prime


# ---------------------------------------------------------------------------
# constructors


def cyclic(n: int) -> GroupTable:
    if n < 1:
        raise GroupError("cyclic order must be >= 1")
    if n == 1:
        return closure_from_generators([], degree=1, name="C1")
    r = tuple((i + 1) % n for i in range(n))
    return closure_from_generators([r], name=f"C{n}")


def dihedral(order: int) -> GroupTable:
    """Dihedral group of the given (even) order."""
    if order < 2 or order % 2:
        raise GroupError("dihedral order must be even and >= 2")
    n = order // 2
    if n == 1:
        g = cyclic(2)
        g.name = "D2"
        return g
    if n == 2:
        # degenerate case: D4 is the Klein four-group
        gens = [(1, 0, 3, 2), (1, 0, 2, 3)]
        return closure_from_generators(gens, name="D4")
    r = tuple((i + 1) % n for i in range(n))
    s = tuple((n - i) % n for i in range(n))
    return closure_from_generators([r, s], name=f"D{order}")


def symmetric(k: int) -> GroupTable:
    if k > 4:
        raise GroupError("symmetric constructor capped at k = 4")
    if k <= 1:
        return closure_from_generators([], degree=max(k, 1), name=f"S{k}")
    gens = [tuple([1, 0] + list(range(2, k))), tuple((i + 1) % k for i in range(k))]
    return closure_from_generators(gens, name=f"S{k}")


def alternating(k: int) -> GroupTable:
    if k > 5:
        raise GroupError("alternating constructor capped at k = 5")
    if k <= 2:
        return closure_from_generators([], degree=max(k, 1), name=f"A{k}")
    gens = []
    for i in range(k - 2):
        imgs = list(range(k))
        imgs[i], imgs[i + 1], imgs[i + 2] = imgs[i + 1], imgs[i + 2], imgs[i]
        gens.append(tuple(imgs))
    return closure_from_generators(gens, name=f"A{k}")


def quaternion8() -> GroupTable:
    """Quaternion group via its left regular permutation representation."""
    # ids 0..7 = +-1, +-i, +-j, +-k encoded as axis*2 + (0 if + else 1)
    unit_mul = {
        (0, 0): (1, 0), (0, 1): (1, 1), (0, 2): (1, 2), (0, 3): (1, 3),
        (1, 0): (1, 1), (2, 0): (1, 2), (3, 0): (1, 3),
        (1, 1): (-1, 0), (2, 2): (-1, 0), (3, 3): (-1, 0),
        (1, 2): (1, 3), (2, 1): (-1, 3),
        (2, 3): (1, 1), (3, 2): (-1, 1),
        (3, 1): (1, 2), (1, 3): (-1, 2),
    }

    def mul(a, b):
        sa, ua = 1 - 2 * (a % 2), a // 2
        sb, ub = 1 - 2 * (b % 2), b // 2
        s, u = unit_mul[(ua, ub)]
        s *= sa * sb
        return u * 2 + (0 if s == 1 else 1)

    gi = tuple(mul(2, x) for x in range(8))  # left multiplication by i
    gj = tuple(mul(4, x) for x in range(8))  # left multiplication by j
    return closure_from_generators([gi, gj], name="Q8")


def elementary_abelian(p: int, k: int) -> GroupTable:
    if not is_prime(p) or k < 1:
        raise GroupError("elementary_abelian requires prime p and k >= 1")
    if p**k > order_cap():
        raise GroupError("group too large")
    gens = []
    for j in range(k):
        imgs = list(range(p * k))
        for i in range(p):
            imgs[j * p + i] = j * p + (i + 1) % p
        gens.append(tuple(imgs))
    return closure_from_generators(gens, name=f"E{p}^{k}")


def frobenius(p: int, q: int) -> GroupTable:
    """Z_p x| Z_q with a faithful action; requires q | p - 1."""
    if not is_prime(p) or q < 2 or (p - 1) % q != 0:
        raise GroupError("frobenius requires prime p and q dividing p - 1")
    if p * q > order_cap():
        raise GroupError("group too large")
    root = next(
        r for r in range(2, p) if all(pow(r, (p - 1) // d, p) != 1 for d in {*_prime_divs(p - 1)})
    )
    g = pow(root, (p - 1) // q, p)
    a = tuple((i + 1) % p for i in range(p))
    b = tuple(g * i % p for i in range(p))
    return closure_from_generators([a, b], name=f"F{p}:{q}")


def _prime_divs(n: int):
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
    return out


# ---------------------------------------------------------------------------
# fingerprints


def fingerprint(G: GroupTable) -> str:
    """Structural fingerprint: order, abelianness, subgroup count, and a
    digest of the element-order multiset."""
    eo = Counter(G.element_orders)
    eo_s = ",".join(f"{k}^{v}" for k, v in sorted(eo.items()))
    digest = hashlib.md5(eo_s.encode()).hexdigest()[:8]
    nsub = len(all_subgroups(G))
    ab = "a" if G.is_abelian else "n"
    return f"o{G.order:03d}-{ab}-s{nsub:04d}-{digest}"


# ---------------------------------------------------------------------------
# fixtures


@dataclass
class Fixture:
    name: str
    group: GroupTable
    actions: List[ActionGroup] = field(default_factory=list)
    expected: Optional[Dict] = None

    def __post_init__(self):
        if not self.actions:
            self.actions = [trivial_action(self.group)]


def _d14_with_action() -> Fixture:
    n = 7
    r = tuple((i + 1) % n for i in range(n))
    s = tuple((n - i) % n for i in range(n))
    G = closure_from_generators([r, s], name="D14")
    r2 = perm_mul(r, r)
    phi = automorphism_from_gen_images(G, [r2, s])
    A = action_closure(G, [phi], name="A3")
    return Fixture(
        "d14-act3",
        G,
        actions=[trivial_action(G), A],
        expected={"thm1.9": True},
    )


def _v4_with_action() -> Fixture:
    a = (1, 0, 2, 3)
    b = (0, 1, 3, 2)
    G = closure_from_generators([a, b], name="V4")
    phi = automorphism_from_gen_images(G, [b, perm_mul(a, b)])
    A = action_closure(G, [phi], name="A3")
    return Fixture("v4-act3", G, actions=[trivial_action(G), A])


def paper_fixtures() -> List[Fixture]:
    """Named fixtures exercising every statement at least once."""
    remark = direct_product(cyclic(5), symmetric(3), name="C5xS3")
    return [
        Fixture("s3", symmetric(3), expected={"thm1.9": True}),
        Fixture(
            "remark-1.5",
            remark,
            expected={
                "hypothesis": True,
                "nonnilpotent_normal": True,
                "has_nonnilpotent_maximal": True,
            },
        ),
        Fixture("sym4", symmetric(4), expected={"thm1.9": True, "hypothesis": False}),
        Fixture("alt4", alternating(4), expected={"hypothesis": True}),
        _d14_with_action(),
        _v4_with_action(),
        Fixture("frob42", frobenius(7, 6)),
    ]


def standard_campaign(max_order: Optional[int] = None) -> List[Fixture]:
    """Deterministic structurally-diverse fixture list up to max_order.

    Membership is by construction (no external group database); fixtures are
    deduplicated by structural fingerprint, which may merge non-isomorphic
    groups with equal invariants -- that only trims redundancy.
    """
    cap = order_cap()
    max_order = min(max_order or cap, cap)
    fixtures: List[Fixture] = []
    seen = set()

    def add(fx: Fixture):
        if fx.group.order > max_order:
            return
        fp = fingerprint(fx.group)
        if fp in seen:
            return
        seen.add(fp)
        fixtures.append(fx)

    for fx in paper_fixtures():
        add(fx)

    for n in range(1, max_order + 1):
        add(Fixture(f"cyclic{n}", cyclic(n)))
    for m in range(4, max_order + 1, 2):
        add(Fixture(f"dihedral{m}", dihedral(m)))
    for p in [q for q in range(2, max_order + 1) if is_prime(q)]:
        k = 2
        while p**k <= max_order:
            add(Fixture(f"elem{p}^{k}", elementary_abelian(p, k)))
            k += 1
    for p in [q for q in range(3, max_order + 1) if is_prime(q)]:
        for q in range(2, p):
            if (p - 1) % q == 0 and p * q <= max_order:
                add(Fixture(f"frob{p}:{q}", frobenius(p, q)))
    for builder in (lambda: symmetric(3), lambda: symmetric(4), lambda: alternating(4), lambda: alternating(5), quaternion8):
        g = builder()
        if g.order <= max_order:
            add(Fixture(g.name.lower(), g))

    seeds_a = [cyclic(n) for n in range(2, 9)] + [quaternion8()]
    seeds_b = (
        [frobenius(3, 2), frobenius(5, 4), frobenius(7, 3), frobenius(7, 6)]
        + [dihedral(m) for m in (8, 10, 12, 14)]
        + [symmetric(4), alternating(4), quaternion8()]
    )
    for a in seeds_a:
        for b in seeds_b:
            if a.order * b.order <= max_order:
                add(Fixture(f"{a.name.lower()}x{b.name.lower()}", direct_product(a, b)))
    return fixtures
