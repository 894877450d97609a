"""Subgroup lattice and structural predicates.

Oracles: the lattice is compared against exhaustive subset enumeration on
small groups, normalizer/centralizer against their definitions, and
subgroup-level nilpotency against nilpotency of the re-labelled subgroup
table.
"""
import numpy as np
import pytest

from maxinv.groups import GroupTable
from maxinv.structure import (
    IndexKind,
    Subgroup,
    all_subgroups,
    bits_from_ids,
    center,
    centralizer,
    closure_bits,
    derived_subgroup,
    full_subgroup,
    generated_subgroup,
    has_sylow_tower,
    ids_from_bits,
    index_kind,
    is_hall,
    is_nilpotent,
    is_nilpotent_lcs,
    is_normal,
    is_p_closed,
    is_p_nilpotent,
    is_p_solvable,
    is_prime,
    is_solvable,
    is_ti,
    lower_central_series,
    minimal_normal_subgroups,
    normalizer,
    p_part,
    prime_factors,
    quotient_table,
    sub_is_nilpotent,
    sub_sylows,
    sylow_subgroups,
    trivial_subgroup,
)
from maxinv.catalog import alternating, cyclic, dihedral, frobenius, symmetric


# ---------------------------------------------------------------------------
# oracles


def subgroups_oracle(G):
    """Every subset containing the identity that is closed under the table."""
    n = G.order
    found = set()
    for mask in range(1 << n):
        if not mask & 1:
            continue
        ids = ids_from_bits(mask)
        if all(G.mul2(a, b) in ids for a in ids for b in ids):
            found.add(mask)
    return found


def subgroup_as_table(G, H):
    """Re-labelled multiplication table of a subgroup (independent oracle)."""
    ids = H.elements()
    pos = {x: i for i, x in enumerate(ids)}
    mul = np.array([[pos[G.mul2(a, b)] for b in ids] for a in ids], dtype=np.int32)
    return GroupTable(mul)


def normalizer_oracle(G, H):
    ids = set(H.elements())
    out = set()
    for g in G.elements():
        gi = G.inverse(g)
        if {G.mul2(G.mul2(g, h), gi) for h in ids} == ids:
            out.add(g)
    return out


def centralizer_oracle(G, H):
    ids = H.elements()
    return {g for g in G.elements() if all(G.mul2(g, h) == G.mul2(h, g) for h in ids)}


# ---------------------------------------------------------------------------
# bitsets and arithmetic helpers


def test_bits_roundtrip():
    assert ids_from_bits(bits_from_ids([0, 3, 5])) == [0, 3, 5]
    assert bits_from_ids([]) == 0


def test_prime_factors_and_p_part():
    assert prime_factors(1) == ()
    assert prime_factors(360) == (2, 3, 5)
    assert p_part(360, 2) == 8
    assert p_part(360, 3) == 9
    assert p_part(7, 2) == 1
    assert is_prime(2) and is_prime(97)
    assert not is_prime(1) and not is_prime(91)


# ---------------------------------------------------------------------------
# lattice against the exhaustive oracle


@pytest.mark.parametrize(
    "builder,expected_count",
    [
        (lambda: cyclic(6), 4),
        (lambda: symmetric(3), 6),
        (lambda: dihedral(8), 10),
        (lambda: alternating(4), 10),
    ],
)
def test_lattice_matches_subset_oracle(builder, expected_count):
    G = builder()
    lat = all_subgroups(G)
    assert {s.bits for s in lat.subgroups} == subgroups_oracle(G)
    assert len(lat) == expected_count


def test_lattice_matches_subset_oracle_quaternion(q8):
    lat = all_subgroups(q8)
    assert {s.bits for s in lat.subgroups} == subgroups_oracle(q8)
    assert len(lat) == 6


def test_lattice_sorted_and_cached(s3):
    lat = all_subgroups(s3)
    orders = [s.order for s in lat.subgroups]
    assert orders == sorted(orders)
    assert all_subgroups(s3) is lat


def test_maximal_subgroups_s3(s3):
    maximal = all_subgroups(s3).maximal_subgroups()
    assert sorted(m.order for m in maximal) == [2, 2, 2, 3]


def test_generated_subgroup(s3):
    # a transposition and a 3-cycle generate everything
    t = next(x for x in s3.elements() if s3.element_orders[x] == 2)
    r = next(x for x in s3.elements() if s3.element_orders[x] == 3)
    assert generated_subgroup(s3, [t, r]).is_full()
    assert generated_subgroup(s3, [r]).order == 3
    assert closure_bits(s3, 0) == 1


# ---------------------------------------------------------------------------
# normalizers, centralizers, centres


def test_normalizer_and_centralizer_match_oracles(s4):
    lat = all_subgroups(s4)
    for H in lat.subgroups[::3]:
        assert set(normalizer(s4, H).elements()) == normalizer_oracle(s4, H)
        assert set(centralizer(s4, H).elements()) == centralizer_oracle(s4, H)


def test_centres(s3, q8, d8, c6):
    assert center(s3).order == 1
    assert center(q8).order == 2
    assert center(d8).order == 2
    assert center(c6).order == 6


def test_sylow_normalizer_in_s3(s3):
    P = sylow_subgroups(s3, 2)[0]
    assert normalizer(s3, P).bits == P.bits


def test_is_normal(s3):
    A3 = next(s for s in all_subgroups(s3).subgroups if s.order == 3)
    C2 = next(s for s in all_subgroups(s3).subgroups if s.order == 2)
    assert is_normal(s3, A3)
    assert not is_normal(s3, C2)
    assert is_normal(s3, trivial_subgroup(s3))
    assert is_normal(s3, full_subgroup(s3))


# ---------------------------------------------------------------------------
# Sylow machinery


def test_sylow_counts(s3, s4, a4):
    assert len(sylow_subgroups(s3, 2)) == 3
    assert len(sylow_subgroups(s3, 3)) == 1
    assert len(sylow_subgroups(s4, 2)) == 3
    assert len(sylow_subgroups(s4, 3)) == 4
    assert len(sylow_subgroups(a4, 2)) == 1
    assert len(sylow_subgroups(a4, 3)) == 4


def test_sylow_counts_congruent_one_mod_p(f42):
    for p in prime_factors(f42.order):
        assert len(sylow_subgroups(f42, p)) % p == 1


def test_sylow_rejects_composite(s3):
    with pytest.raises(Exception):
        sylow_subgroups(s3, 4)


# ---------------------------------------------------------------------------
# nilpotency and solvability


def test_nilpotency_oracles_agree(s3, s4, a4, a5, q8, d8, c12, f42):
    for G in (s3, s4, a4, a5, q8, d8, c12, f42, cyclic(1)):
        assert is_nilpotent(G) == is_nilpotent_lcs(G)


def test_nilpotent_examples(q8, d8, c12, s3):
    assert is_nilpotent(q8)
    assert is_nilpotent(d8)
    assert is_nilpotent(c12)
    assert not is_nilpotent(s3)


def test_lower_central_series_d8(d8):
    series = lower_central_series(d8)
    assert [s.order for s in series] == [8, 2, 1]


def test_derived_subgroups(s3, s4, a4):
    assert derived_subgroup(s3).order == 3
    assert derived_subgroup(s4).order == 12
    assert derived_subgroup(a4).order == 4
    assert derived_subgroup(cyclic(8)).order == 1


def test_solvability(s4, a5):
    assert is_solvable(s4)
    assert not is_solvable(a5)
    assert is_solvable(cyclic(1))


# ---------------------------------------------------------------------------
# quotients


def test_quotient_s4_by_v4_is_order_6_nonabelian(s4):
    V4 = next(
        s for s in all_subgroups(s4).subgroups if s.order == 4 and is_normal(s4, s)
    )
    Q = quotient_table(s4, V4)
    assert Q.order == 6
    assert not Q.is_abelian
    assert sorted(Q.element_orders) == [1, 2, 2, 2, 3, 3]


def test_quotient_requires_normal(s4):
    C2 = next(s for s in all_subgroups(s4).subgroups if s.order == 2 and not is_normal(s4, s))
    with pytest.raises(Exception):
        quotient_table(s4, C2)


def test_quotient_by_trivial_is_isomorphic(s3):
    Q = quotient_table(s3, trivial_subgroup(s3))
    assert np.array_equal(Q.mul, s3.mul)


# ---------------------------------------------------------------------------
# towers, p-nilpotency, index classification


def test_sylow_tower(s3, s4, a4, f42):
    assert has_sylow_tower(s3)
    assert has_sylow_tower(a4)
    assert has_sylow_tower(f42)
    assert not has_sylow_tower(s4)


def test_p_nilpotent_and_p_closed(s3, a4):
    assert is_p_nilpotent(s3, 2)  # normal complement of order 3
    assert not is_p_nilpotent(s3, 3)
    assert is_p_closed(s3, 3)
    assert not is_p_closed(s3, 2)
    assert is_p_nilpotent(a4, 3)
    assert not is_p_nilpotent(a4, 2)


def test_index_kind(s4):
    lat = all_subgroups(s4)
    S3 = next(s for s in lat.subgroups if s.order == 6)
    C4 = next(s for s in lat.subgroups if s.order == 4 and not is_normal(s4, s))
    assert index_kind(s4, S3, 2) is IndexKind.P_POWER  # index 4
    assert index_kind(s4, S3, 3) is IndexKind.P_COPRIME
    assert index_kind(s4, C4, 2) is IndexKind.MIXED  # index 6
    assert index_kind(s4, full_subgroup(s4), 2) is IndexKind.P_POWER  # index 1


def test_is_hall(s3, s4):
    A3 = next(s for s in all_subgroups(s3).subgroups if s.order == 3)
    assert is_hall(s3, A3)
    C2 = next(s for s in all_subgroups(s4).subgroups if s.order == 2)
    assert not is_hall(s4, C2)  # order 2, index 12


def test_is_ti(s3, s4, f42):
    C2 = next(s for s in all_subgroups(s3).subgroups if s.order == 2)
    assert is_ti(s3, C2)
    D8 = next(s for s in all_subgroups(s4).subgroups if s.order == 8)
    assert not is_ti(s4, D8)  # two Sylow 2-subgroups share the double transpositions
    C7 = next(s for s in all_subgroups(f42).subgroups if s.order == 7)
    assert is_ti(f42, C7)


# ---------------------------------------------------------------------------
# subgroup-level predicates


def test_sub_nilpotency_matches_relabelled_table_oracle(s4, f42):
    for G in (s4, f42):
        lat = all_subgroups(G)
        for H in lat.subgroups:
            assert sub_is_nilpotent(lat, H) == is_nilpotent(subgroup_as_table(G, H))


def test_sub_sylows(s4):
    lat = all_subgroups(s4)
    S3 = next(s for s in lat.subgroups if s.order == 6)
    assert [s.order for s in sub_sylows(lat, S3, 3)] == [3]
    assert len(sub_sylows(lat, S3, 2)) == 3


def test_minimal_normal_subgroups(s4, a5, c6):
    assert [s.order for s in minimal_normal_subgroups(s4)] == [4]
    assert [s.order for s in minimal_normal_subgroups(a5)] == [60]  # simple
    assert sorted(s.order for s in minimal_normal_subgroups(c6)) == [2, 3]
    assert minimal_normal_subgroups(cyclic(1)) == []


def test_p_solvability(s4, a5):
    for p in (2, 3):
        assert is_p_solvable(s4, p)
    for p in (2, 3, 5):
        assert not is_p_solvable(a5, p)


def test_subgroup_value_semantics(s3):
    a = Subgroup(s3, 0b111)
    b = Subgroup(s3, 0b111)
    assert a == b and hash(a) == hash(b)
    assert a.issubset(full_subgroup(s3))
    assert a.contains(1) and not a.contains(5)
