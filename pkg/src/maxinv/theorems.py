"""Executable checkers for the nilpotency-classification statements.

Each checker scans deterministically (primes ascending, subgroups by
(order, bitset)) and returns explicit witnesses or counterexamples.
Universal statements over empty ranges report holds=True with a vacuous flag.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import cached_property
from typing import Dict, List, Optional

import numpy as np

from .groups import GroupTable
from .structure import (
    Subgroup,
    all_subgroups,
    closure_bits,
    index_kind,
    IndexKind,
    is_hall,
    is_nilpotent,
    is_normal,
    is_p_closed,
    is_p_nilpotent,
    is_p_solvable,
    is_solvable,
    is_ti,
    has_sylow_tower,
    normalizer,
    p_part,
    prime_factors,
    sub_is_nilpotent,
    sub_sylows,
    sylow_subgroups,
)
from .action import ActionGroup, invariant_subgroups, invariant_sylows, is_invariant, maximal_invariant_subgroups


def _ids(s: Subgroup) -> List[int]:
    return s.elements()


@dataclass
class Verdict:
    """Outcome of one universally quantified claim on one (G, A) pair."""

    holds: bool
    vacuous: bool = False
    witnesses: Dict = field(default_factory=dict)
    counterexample: Optional[Dict] = None
    note: str = ""
    extra: Dict = field(default_factory=dict)

    def to_json(self) -> Dict:
        out = {
            "holds": self.holds,
            "vacuous": self.vacuous,
            "witnesses": self.witnesses,
            "counterexample": self.counterexample,
        }
        if self.note:
            out["note"] = self.note
        if self.extra:
            out["extra"] = self.extra
        return out


@dataclass
class Decomposition:
    """Witness for the non-nilpotent branch of the classification.

    G = (P_1 x ... x P_{s-1}) x (P_s x| (Q_1 x ... x Q_t)) with E <= P_s
    normal in G and E*(Q_1 x ... x Q_t) a nilpotent maximal invariant
    subgroup of P_s*(Q_1 x ... x Q_t).
    """

    normal_sylows: List[Subgroup]
    acting_index: int  # which normal Sylow plays the P_s role
    nonnormal_sylows: List[Subgroup]
    e_subgroup: Subgroup
    hall_complement: Subgroup  # V = Q_1 x ... x Q_t
    admissible_count: int = 1

    @property
    def p_s(self) -> Subgroup:
        return self.normal_sylows[self.acting_index]

    def to_json(self) -> Dict:
        return {
            "normal_sylows": [_ids(s) for s in self.normal_sylows],
            "acting_index": self.acting_index,
            "nonnormal_sylows": [_ids(s) for s in self.nonnormal_sylows],
            "e_subgroup": _ids(self.e_subgroup),
            "hall_complement": _ids(self.hall_complement),
            "admissible_count": self.admissible_count,
        }


@dataclass
class EquivalenceReport:
    """Per-statement verdicts plus whether the claimed equivalence holds."""

    statements: Dict[str, Verdict]
    equivalent: Optional[bool]
    status: str = "ok"  # "ok" | "out-of-hypothesis"
    discrepancy: str = ""
    extra: Dict = field(default_factory=dict)

    def to_json(self) -> Dict:
        out = {
            "statements": {k: v.to_json() for k, v in sorted(self.statements.items())},
            "equivalent": self.equivalent,
            "status": self.status,
        }
        if self.discrepancy:
            out["discrepancy"] = self.discrepancy
        if self.extra:
            out["extra"] = self.extra
        return out


class Context:
    """Shared per-(G, A) caches so checker pipelines stay sub-quadratic."""

    def __init__(self, G: GroupTable, A: ActionGroup):
        if A.group is not G and A.group.key() != G.key():
            raise ValueError("action is bound to a different group")
        self.G = G
        self.A = A

    @cached_property
    def lattice(self):
        return all_subgroups(self.G)

    @cached_property
    def primes(self):
        return prime_factors(self.G.order)

    @cached_property
    def invariant(self) -> List[Subgroup]:
        return invariant_subgroups(self.G, self.A, self.lattice)

    @cached_property
    def maximal_invariant(self) -> List[Subgroup]:
        return maximal_invariant_subgroups(self.G, self.A, self.lattice)

    @cached_property
    def nilpotent(self) -> bool:
        return is_nilpotent(self.G)

    def sylows(self, p: int) -> List[Subgroup]:
        return sylow_subgroups(self.G, p)

    def inv_sylows(self, p: int) -> List[Subgroup]:
        return [s for s in self.sylows(p) if is_invariant(s, self.A)]

    def sub_nilpotent(self, H: Subgroup) -> bool:
        cache = self.__dict__.setdefault("_nilp_cache", {})
        hit = cache.get(H.bits)
        if hit is None:
            hit = cache[H.bits] = sub_is_nilpotent(self.lattice, H)
        return hit


def _ctx(G, A, ctx):
    return ctx if ctx is not None else Context(G, A)


def _commute_elementwise(G: GroupTable, X: Subgroup, Y: Subgroup) -> bool:
    xi = np.array(X.elements(), dtype=np.intp)
    yi = np.array(Y.elements(), dtype=np.intp)
    return bool(np.array_equal(G.mul[np.ix_(xi, yi)], G.mul[np.ix_(yi, xi)].T))


# ---------------------------------------------------------------------------
# hypothesis and statement predicates


def hypothesis_normalizer_nilpotent(G: GroupTable, A: ActionGroup, ctx: Optional[Context] = None) -> Verdict:
    """Every maximal A-invariant subgroup containing the normalizer of some
    A-invariant Sylow subgroup is nilpotent.

    Primary reading quantifies over all A-invariant Sylow subgroups; the
    one-witness ('some Sylow is good') reading is recorded under
    extra['holds_exists_reading'].
    """
    ctx = _ctx(G, A, ctx)
    qualifying = 0
    holds = True
    counterexample = None
    per_sylow_ok = []
    for p in ctx.primes:
        for P in ctx.inv_sylows(p):
            N = normalizer(G, P)
            if N.is_full():
                per_sylow_ok.append(True)
                continue
            sylow_ok = True
            for M in ctx.maximal_invariant:
                if N.bits & M.bits != N.bits:
                    continue
                qualifying += 1
                if not ctx.sub_nilpotent(M):
                    sylow_ok = False
                    if counterexample is None:
                        holds = False
                        counterexample = {
                            "subgroup": _ids(M),
                            "order": M.order,
                            "prime": p,
                            "sylow": _ids(P),
                            "normalizer": _ids(N),
                        }
            per_sylow_ok.append(sylow_ok)
    exists_reading = any(per_sylow_ok) if per_sylow_ok else True
    return Verdict(
        holds=holds,
        vacuous=qualifying == 0,
        witnesses={"qualifying_pairs": qualifying},
        counterexample=counterexample,
        extra={
            "holds_exists_reading": exists_reading,
            "readings_diverge": exists_reading != holds,
        },
    )


def statement_nonnilpotent_normal(G: GroupTable, A: ActionGroup, ctx: Optional[Context] = None) -> Verdict:
    """Every non-nilpotent maximal A-invariant subgroup is normal."""
    ctx = _ctx(G, A, ctx)
    nonnilp = [M for M in ctx.maximal_invariant if not ctx.sub_nilpotent(M)]
    for M in nonnilp:
        if not is_normal(G, M):
            return Verdict(
                holds=False,
                counterexample={"subgroup": _ids(M), "order": M.order},
                witnesses={"non_nilpotent_maximal_count": len(nonnilp)},
            )
    return Verdict(
        holds=True,
        vacuous=not nonnilp,
        witnesses={"non_nilpotent_maximal_count": len(nonnilp)},
    )


def statement_nonnilpotent_ti(G: GroupTable, A: ActionGroup, ctx: Optional[Context] = None) -> Verdict:
    """Every non-nilpotent maximal A-invariant subgroup is a TI-subgroup."""
    ctx = _ctx(G, A, ctx)
    nonnilp = [M for M in ctx.maximal_invariant if not ctx.sub_nilpotent(M)]
    for M in nonnilp:
        if not is_ti(G, M):
            return Verdict(
                holds=False,
                counterexample={"subgroup": _ids(M), "order": M.order},
                witnesses={"non_nilpotent_maximal_count": len(nonnilp)},
            )
    return Verdict(
        holds=True,
        vacuous=not nonnilp,
        witnesses={"non_nilpotent_maximal_count": len(nonnilp)},
    )


# ---------------------------------------------------------------------------
# decomposition search


def find_decomposition(G: GroupTable, A: ActionGroup, ctx: Optional[Context] = None) -> Optional[Decomposition]:
    """Deterministic search for the case-(2) structure witness.

    Returns the first witness in scan order (primes ascending, subgroups by
    (order, bitset)); admissible_count records how many full witnesses exist.
    """
    ctx = _ctx(G, A, ctx)
    normal_syl: List[Subgroup] = []
    nonnormal_primes: List[int] = []
    for p in ctx.primes:
        syl = ctx.sylows(p)
        if len(syl) == 1:
            normal_syl.append(syl[0])
        else:
            nonnormal_primes.append(p)
    if not normal_syl or not nonnormal_primes:
        return None
    q_choices = []
    for p in nonnormal_primes:
        inv = ctx.inv_sylows(p)
        if not inv:
            return None
        q_choices.append(inv)

    first: Optional[Decomposition] = None
    admissible = 0
    for qs in itertools.product(*q_choices):
        if not all(
            _commute_elementwise(G, qs[i], qs[j])
            for i in range(len(qs))
            for j in range(i + 1, len(qs))
        ):
            continue
        V = Subgroup(G, closure_bits(G, _or_bits(qs)))
        expected = 1
        for q in qs:
            expected *= q.order
        if V.order != expected or not ctx.sub_nilpotent(V):
            continue
        for idx, Ps in enumerate(normal_syl):
            if not all(
                _commute_elementwise(G, other, V)
                for j, other in enumerate(normal_syl)
                if j != idx
            ):
                continue
            psv = Subgroup(G, closure_bits(G, Ps.bits | V.bits))
            inv_in_psv = [
                s for s in ctx.invariant if s.bits & psv.bits == s.bits and s.bits != psv.bits
            ]
            e_candidates = [
                s
                for s in ctx.invariant
                if s.bits & Ps.bits == s.bits and is_normal(G, s)
            ]
            for E in e_candidates:
                ev = Subgroup(G, closure_bits(G, E.bits | V.bits))
                if ev.bits == psv.bits:
                    continue
                if not ctx.sub_nilpotent(ev):
                    continue
                if any(
                    t.order > ev.order and ev.bits & t.bits == ev.bits
                    for t in inv_in_psv
                ):
                    continue  # not maximal A-invariant in P_s * V
                admissible += 1
                if first is None:
                    first = Decomposition(
                        normal_sylows=list(normal_syl),
                        acting_index=idx,
                        nonnormal_sylows=list(qs),
                        e_subgroup=E,
                        hall_complement=V,
                    )
    if first is not None:
        first.admissible_count = admissible
    return first


def _or_bits(subs) -> int:
    out = 0
    for s in subs:
        out |= s.bits
    return out


def verify_decomposition(G: GroupTable, A: ActionGroup, dec: Decomposition, ctx: Optional[Context] = None) -> Dict:
    """Re-verify a decomposition witness from scratch.

    Checks the internal factorization multiplies out to G, nilpotency of the
    Hall complement and of E*V, maximality of E*V, and the sufficiency fact
    that each N_G(Q_i) equals the nilpotent maximal invariant subgroup
    (P_1 x ... x P_{s-1}) x E x V.
    """
    ctx = _ctx(G, A, ctx)
    checks: Dict[str, bool] = {}
    V = dec.hall_complement
    Ps = dec.p_s
    E = dec.e_subgroup
    checks["sylows_normal"] = all(is_normal(G, P) for P in dec.normal_sylows)
    checks["qs_invariant_nonnormal"] = all(
        is_invariant(q, A) and not is_normal(G, q) for q in dec.nonnormal_sylows
    )
    order_prod = 1
    for P in dec.normal_sylows:
        order_prod *= P.order
    order_prod *= V.order
    factor_bits = closure_bits(G, _or_bits(dec.normal_sylows) | V.bits)
    checks["factorization_covers_group"] = (
        order_prod == G.order and factor_bits == (1 << G.order) - 1
    )
    checks["hall_complement_nilpotent"] = ctx.sub_nilpotent(V)
    checks["e_invariant"] = is_invariant(E, A)
    checks["e_normal_in_group"] = is_normal(G, E)
    checks["e_inside_ps"] = E.bits & Ps.bits == E.bits
    ev = Subgroup(G, closure_bits(G, E.bits | V.bits))
    psv = Subgroup(G, closure_bits(G, Ps.bits | V.bits))
    checks["ev_nilpotent"] = ctx.sub_nilpotent(ev)
    inv_in_psv = [s for s in ctx.invariant if s.bits & psv.bits == s.bits]
    checks["ev_maximal_invariant_in_psv"] = ev.bits != psv.bits and not any(
        ev.order < t.order < psv.order and ev.bits & t.bits == ev.bits for t in inv_in_psv
    )
    # sufficiency: N_G(Q_i) = (P_1 x ... x P_{s-1}) x E x V, nilpotent and
    # maximal A-invariant in G
    others = _or_bits(P for i, P in enumerate(dec.normal_sylows) if i != dec.acting_index)
    nmax = Subgroup(G, closure_bits(G, others | E.bits | V.bits))
    checks["sufficiency_subgroup_nilpotent"] = ctx.sub_nilpotent(nmax)
    checks["sufficiency_subgroup_maximal_invariant"] = any(
        m.bits == nmax.bits for m in ctx.maximal_invariant
    )
    checks["sufficiency_normalizers_match"] = all(
        normalizer(G, q).bits == nmax.bits for q in dec.nonnormal_sylows
    )
    checks["all"] = all(checks.values())
    return checks


# ---------------------------------------------------------------------------
# equivalence reports


def verify_thm_1_3(G: GroupTable, A: ActionGroup, ctx: Optional[Context] = None) -> EquivalenceReport:
    """Hypothesis <=> (nilpotent OR decomposition exists)."""
    ctx = _ctx(G, A, ctx)
    hyp = hypothesis_normalizer_nilpotent(G, A, ctx)
    nilp = ctx.nilpotent
    dec = find_decomposition(G, A, ctx)
    statements = {
        "hypothesis": hyp,
        "nilpotent": Verdict(holds=nilp),
        "decomposition": Verdict(
            holds=dec is not None,
            witnesses={"decomposition": dec.to_json()} if dec else {},
        ),
    }
    rhs = nilp or dec is not None
    equivalent = hyp.holds == rhs
    extra = {"case_overlap": nilp and dec is not None}
    discrepancy = ""
    if not equivalent:
        discrepancy = f"hypothesis={hyp.holds} but nilpotent={nilp}, decomposition={dec is not None}"
    return EquivalenceReport(statements, equivalent, discrepancy=discrepancy, extra=extra)


def verify_thm_1_9(G: GroupTable, A: ActionGroup, ctx: Optional[Context] = None) -> EquivalenceReport:
    """Three-way equivalence for non-nilpotent G; nilpotent input is
    reported out-of-hypothesis, not as a failure."""
    ctx = _ctx(G, A, ctx)
    if ctx.nilpotent:
        return EquivalenceReport({}, None, status="out-of-hypothesis", discrepancy="group is nilpotent")
    s_normal = statement_nonnilpotent_normal(G, A, ctx)
    s_hyp = hypothesis_normalizer_nilpotent(G, A, ctx)
    dec = find_decomposition(G, A, ctx)
    s_dec = Verdict(
        holds=dec is not None,
        witnesses={"decomposition": dec.to_json()} if dec else {},
    )
    statements = {"nonnilpotent_normal": s_normal, "hypothesis": s_hyp, "decomposition": s_dec}
    vals = [s_normal.holds, s_hyp.holds, s_dec.holds]
    equivalent = len(set(vals)) == 1
    discrepancy = "" if equivalent else f"normal={vals[0]}, hypothesis={vals[1]}, decomposition={vals[2]}"
    return EquivalenceReport(statements, equivalent, discrepancy=discrepancy)


def verify_cor_1_12(G: GroupTable, A: ActionGroup, ctx: Optional[Context] = None) -> EquivalenceReport:
    """TI <=> normal (always) and, for non-nilpotent G, <=> decomposition."""
    ctx = _ctx(G, A, ctx)
    s_ti = statement_nonnilpotent_ti(G, A, ctx)
    s_normal = statement_nonnilpotent_normal(G, A, ctx)
    ti_eq_normal = s_ti.holds == s_normal.holds
    if ctx.nilpotent:
        return EquivalenceReport(
            {"nonnilpotent_ti": s_ti, "nonnilpotent_normal": s_normal},
            None,
            status="out-of-hypothesis",
            discrepancy="group is nilpotent",
            extra={"ti_equals_normal": ti_eq_normal},
        )
    dec = find_decomposition(G, A, ctx)
    s_dec = Verdict(holds=dec is not None)
    vals = [s_ti.holds, s_normal.holds, s_dec.holds]
    equivalent = len(set(vals)) == 1
    discrepancy = "" if equivalent else f"ti={vals[0]}, normal={vals[1]}, decomposition={vals[2]}"
    return EquivalenceReport(
        {"nonnilpotent_ti": s_ti, "nonnilpotent_normal": s_normal, "decomposition": s_dec},
        equivalent,
        discrepancy=discrepancy,
        extra={"ti_equals_normal": ti_eq_normal},
    )


# ---------------------------------------------------------------------------
# lemma checkers


def check_lemma_2_1(G: GroupTable, A: ActionGroup, ctx: Optional[Context] = None) -> Verdict:
    """For p-solvable G, |G:M| is a p-number or p'-number for maximal invariant M."""
    ctx = _ctx(G, A, ctx)
    checked = 0
    for p in ctx.primes:
        if not is_p_solvable(G, p):
            continue
        for M in ctx.maximal_invariant:
            checked += 1
            if index_kind(G, M, p) is IndexKind.MIXED:
                return Verdict(
                    holds=False,
                    counterexample={
                        "subgroup": _ids(M),
                        "order": M.order,
                        "prime": p,
                        "index": G.order // M.order,
                    },
                    witnesses={"checked": checked},
                )
    return Verdict(holds=True, vacuous=checked == 0, witnesses={"checked": checked})


def check_lemma_2_2(G: GroupTable, A: ActionGroup, ctx: Optional[Context] = None) -> Verdict:
    """A nilpotent maximal invariant subgroup of odd order forces solvability."""
    ctx = _ctx(G, A, ctx)
    triggers = [
        M
        for M in ctx.maximal_invariant
        if M.order % 2 == 1 and ctx.sub_nilpotent(M)
    ]
    if not triggers:
        return Verdict(holds=True, vacuous=True)
    solvable = is_solvable(G)
    return Verdict(
        holds=solvable,
        witnesses={"odd_nilpotent_maximal": _ids(triggers[0]), "trigger_count": len(triggers)},
        counterexample=None if solvable else {"note": "group not solvable"},
    )


def check_lemma_2_3(G: GroupTable, A: ActionGroup, ctx: Optional[Context] = None) -> Verdict:
    """Every maximal invariant subgroup is self-normalizing or normal."""
    ctx = _ctx(G, A, ctx)
    for M in ctx.maximal_invariant:
        N = normalizer(G, M)
        if N.bits != M.bits and not N.is_full():
            return Verdict(
                holds=False,
                counterexample={
                    "subgroup": _ids(M),
                    "normalizer": _ids(N),
                },
            )
    return Verdict(
        holds=True,
        vacuous=not ctx.maximal_invariant,
        witnesses={"maximal_invariant_count": len(ctx.maximal_invariant)},
    )


def lemma_2_4_applicable(G: GroupTable, H: Subgroup, ctx: Optional[Context] = None) -> bool:
    """Preconditions: H a proper nilpotent non-Sylow Hall subgroup with
    N_G(P) = H for every Sylow subgroup P of H."""
    if H.order <= 1 or H.is_full():
        return False
    if not is_hall(G, H):
        return False
    hp = prime_factors(H.order)
    if len(hp) < 2:  # Hall subgroup of prime-power order is a Sylow subgroup
        return False
    lat = all_subgroups(G)
    if not sub_is_nilpotent(lat, H):
        return False
    for p in hp:
        for P in sub_sylows(lat, H, p):
            if normalizer(G, P).bits != H.bits:
                return False
    return True


def check_lemma_2_4(G: GroupTable, H: Subgroup, ctx: Optional[Context] = None) -> Verdict:
    """Find a normal complement K with G = KH and K intersect H = 1."""
    if not lemma_2_4_applicable(G, H):
        return Verdict(holds=True, vacuous=True, note="not applicable")
    lat = all_subgroups(G)
    target = G.order // H.order
    for K in lat.subgroups:
        if K.order != target or K.bits & H.bits != 1:
            continue
        if not is_normal(G, K):
            continue
        if closure_bits(G, K.bits | H.bits) == (1 << G.order) - 1:
            return Verdict(
                holds=True,
                witnesses={"complement": _ids(K), "subgroup": _ids(H)},
            )
    return Verdict(
        holds=False,
        counterexample={"subgroup": _ids(H), "note": "no normal complement found"},
    )


def check_lemma_2_4_all(G: GroupTable, A: ActionGroup, ctx: Optional[Context] = None) -> Verdict:
    """Campaign form: verify the complement exists for every qualifying H."""
    ctx = _ctx(G, A, ctx)
    qualifying = 0
    first_witness = None
    for H in ctx.lattice.subgroups:
        if not lemma_2_4_applicable(G, H):
            continue
        qualifying += 1
        v = check_lemma_2_4(G, H)
        if not v.holds:
            return Verdict(holds=False, counterexample=v.counterexample, witnesses={"qualifying": qualifying})
        if first_witness is None:
            first_witness = v.witnesses
    if qualifying == 0:
        return Verdict(holds=True, vacuous=True, note="not applicable")
    return Verdict(holds=True, witnesses=dict(first_witness or {}, qualifying=qualifying))


# ---------------------------------------------------------------------------
# downstream implications


def check_downstream(G: GroupTable, A: ActionGroup, ctx: Optional[Context] = None) -> Dict[str, Verdict]:
    """Implications cited from earlier work, verified as campaign properties."""
    ctx = _ctx(G, A, ctx)
    out: Dict[str, Verdict] = {}
    maximal = ctx.maximal_invariant
    nilp_flags = {M.bits: ctx.sub_nilpotent(M) for M in maximal}
    s_normal = statement_nonnilpotent_normal(G, A, ctx)

    # thm1.1: all maximal invariant nilpotent, G not => solvable, |G| = p^a q^b,
    # and some invariant Sylow is normal
    ante = bool(maximal) and all(nilp_flags.values()) and not ctx.nilpotent
    if ante:
        ok = (
            is_solvable(G)
            and len(ctx.primes) == 2
            and any(len(ctx.sylows(p)) == 1 and ctx.inv_sylows(p) for p in ctx.primes)
        )
        out["thm1.1"] = Verdict(holds=ok, extra={"triggered": True})
    else:
        out["thm1.1"] = Verdict(holds=True, vacuous=True, extra={"triggered": False})

    # thm1.2: per prime, maximal invariant subgroups of order divisible by p
    # all nilpotent => solvable
    triggered_12 = False
    holds_12 = True
    for p in ctx.primes:
        mp = [M for M in maximal if M.order % p == 0]
        if all(nilp_flags[M.bits] for M in mp):
            if mp:
                triggered_12 = True
            if not is_solvable(G):
                holds_12 = False
    out["thm1.2"] = Verdict(holds=holds_12, vacuous=not triggered_12, extra={"triggered": triggered_12})

    # thm1.6: nonnilpotent-maximal-normal => Sylow tower
    t16 = s_normal.holds and not s_normal.vacuous
    if s_normal.holds:
        out["thm1.6"] = Verdict(holds=has_sylow_tower(G), vacuous=not t16, extra={"triggered": t16})
    else:
        out["thm1.6"] = Verdict(holds=True, vacuous=True, extra={"triggered": False})

    # thm1.7: every maximal invariant nilpotent or normal => p-nilpotent for some p
    ante17 = all(nilp_flags[M.bits] or is_normal(G, M) for M in maximal)
    t17 = ante17 and bool(maximal)
    if ante17 and G.order > 1:
        out["thm1.7"] = Verdict(
            holds=any(is_p_nilpotent(G, p) for p in ctx.primes),
            vacuous=not t17,
            extra={"triggered": t17},
        )
    else:
        out["thm1.7"] = Verdict(holds=True, vacuous=True, extra={"triggered": False})

    # thm1.8: nonnilpotent-maximal-normal => p-nilpotent or p-closed for all p
    if s_normal.holds:
        out["thm1.8"] = Verdict(
            holds=all(is_p_nilpotent(G, p) or is_p_closed(G, p) for p in ctx.primes),
            vacuous=not t16,
            extra={"triggered": t16},
        )
    else:
        out["thm1.8"] = Verdict(holds=True, vacuous=True, extra={"triggered": False})
    return out
