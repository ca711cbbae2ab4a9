from itertools import product as iproduct

import pytest

from radact.congruence import all_congruences, quotient
from radact.core import (
    canonical_form,
    find_isomorphism,
    left_regular_act,
    subact_act_by_mask,
    subact_masks,
    validate_monoid,
)
from radact.errors import ClassNotClosed, RadactError
from radact.radical import induced_radical
from radact.universe import (
    Universe,
    default_universe,
    enumerate_acts,
    enumerate_monoids,
)

# iso-class counts of acts per monoid (order: M1.0, M2.0, M2.1, M3.*),
# frozen from the enumeration and spot-checked by orbit-type counting for
# the group monoids
ACT_COUNTS = (4, 8, 11, 14, 15, 28, 19, 17, 20, 6)


def brute_monoids_of_order_2():
    """Independent oracle: all 2x2 tables with identity 0, deduplicated by
    exhaustive relabeling."""
    found = set()
    for v in range(2):
        table = ((0, 1), (1, v))
        ok = all(
            table[table[x][y]][z] == table[x][table[y][z]]
            for x, y, z in iproduct(range(2), repeat=3)
        )
        if ok:
            found.add(table)
    return found


def test_monoid_counts():
    assert len(enumerate_monoids(1)) == 1
    assert len(enumerate_monoids(2)) == 3
    assert len(enumerate_monoids(3)) == 10  # 1 + 2 + 7 iso classes


def test_order_two_monoids_match_brute_force():
    brute = brute_monoids_of_order_2()
    assert len(brute) == 2
    mons = [m for m in enumerate_monoids(2) if m.size == 2]
    assert {m.mul for m in mons} == brute


def test_monoids_are_valid_and_deduplicated():
    mons = enumerate_monoids(3)
    for m in mons:
        validate_monoid(m.mul, m.identity)
    # identity is always element 0 in the catalog
    assert all(m.identity == 0 for m in mons)


def test_act_counts_over_identity_monoid(T1):
    acts = enumerate_acts(T1, 2)
    assert len(acts) == 2
    acts = enumerate_acts(T1, 4)
    assert len(acts) == 4


def test_act_counts_frozen(U):
    counts = tuple(len(U.acts_over(m)) for m in U.monoids)
    assert counts == ACT_COUNTS


def test_group_act_counts_by_orbit_type(U, Z2):
    # acts over the two-element group decompose into fixed points and free
    # orbits: k + 2l <= 4 gives 8 shapes
    shapes = {
        (k, l)
        for k in range(5)
        for l in range(3)
        if 1 <= k + 2 * l <= 4
    }
    assert len(shapes) == len(U.acts_over(U.monoids[1])) == 8


def test_acts_are_iso_deduplicated(U):
    for monoid in U.monoids:
        acts = U.acts_over(monoid)
        for i, a in enumerate(acts):
            for b in acts[i + 1:]:
                if a.size == b.size:
                    assert find_isomorphism(a, b) is None


def test_universe_closed_under_quotients_and_subacts(U):
    for act in U.acts:
        for chi in all_congruences(act, U.con_bound):
            quo, _ = quotient(act, chi)
            assert U.find_member(quo) is not None
        for mask in subact_masks(act):
            sub, _ = subact_act_by_mask(act, mask)
            assert U.find_member(sub) is not None


def test_find_member_uses_canonical_form(U, C2):
    member = U.find_member(C2)
    assert member is not None
    assert canonical_form(member) == canonical_form(C2)
    big = [a for a in U.acts if a.size == U.act_max][0]
    from radact.core import coproduct

    too_big, _, _ = coproduct(big, big)
    assert U.find_member(too_big) is None


def test_cyclic_acts(U, T1, E2):
    assert [a.size for a in U.cyclic_acts(T1)] == [1]
    sizes = sorted(a.size for a in U.cyclic_acts(E2))
    assert sizes == [1, 2]
    reg = left_regular_act(E2)
    assert any(find_isomorphism(c, reg) for c in U.cyclic_acts(E2))


def test_default_radicals(U):
    assert [r.name for r in U.radicals] == ["delta", "nabla", "rG", "t_LrG"]
    with pytest.raises(RadactError):
        U.radical("unknown")


def test_register_refuses_non_closed_class():
    u = Universe(monoid_max=2, act_max=3)
    bad = induced_radical(
        "bad",
        lambda act: act.size - sum(
            1 for a in act.elements
            if all(row[a] == a for row in act.action)
        ) <= 1,
    )
    with pytest.raises(ClassNotClosed):
        u.register_radical(bad)
