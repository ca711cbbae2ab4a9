from itertools import product as iproduct

import pytest

from radact.core import (
    ActHom,
    Subact,
    all_homs,
    compose,
    coproduct,
    cyclic_subact,
    find_isomorphism,
    hom,
    identity_hom,
    injective_homs,
    invert,
    left_regular_act,
    product,
    product_tuples,
    rees_quotient,
    relabel,
    subact_from_members,
    subacts,
    trivial_act,
    validate_act,
    validate_monoid,
    zeros,
)
from radact.errors import (
    AssocAxiom,
    BadIdentity,
    IdentityAxiom,
    NotAssociative,
    NotDisjoint,
)


def brute_associative(table):
    n = len(table)
    return all(
        table[table[x][y]][z] == table[x][table[y][z]]
        for x in range(n) for y in range(n) for z in range(n)
    )


def test_validate_trivial_monoid():
    m = validate_monoid([[0]], 0)
    assert m.size == 1 and m.identity == 0


def test_validate_e2_brute_force():
    table = [[0, 1], [1, 1]]
    assert brute_associative(table)
    m = validate_monoid(table, 0, "E2")
    assert m.mul[1][1] == 1


def test_bad_identity_row():
    with pytest.raises(BadIdentity):
        validate_monoid([[0, 1], [1, 0]], 1)


def test_not_associative_witness():
    table = [[0, 1, 2], [1, 0, 0], [2, 0, 1]]
    assert not brute_associative(table)
    with pytest.raises(NotAssociative) as err:
        validate_monoid(table, 0)
    x, y, z = err.value.witness
    assert table[table[x][y]][z] != table[x][table[y][z]]


def test_validate_act_identity_only(T1):
    act = validate_act(T1, [[0, 1, 2]])
    assert act.size == 3


def test_validate_r2_brute_force(E2, R2):
    # all eight axiom instances by hand
    for t, s, a in iproduct(range(2), range(2), range(2)):
        assert R2.action[t][R2.action[s][a]] == R2.action[E2.mul[t][s]][a]


def test_validate_act_assoc_axiom(E2):
    with pytest.raises(AssocAxiom):
        validate_act(E2, [[0, 1], [1, 0]])


def test_validate_act_identity_axiom(E2):
    with pytest.raises(IdentityAxiom):
        validate_act(E2, [[1, 0], [1, 1]])


def test_zeros(T1, R2, C2):
    every = validate_act(T1, [[0, 1, 2]])
    assert zeros(every) == (0, 1, 2)
    assert zeros(R2) == (1,)
    assert zeros(C2) == ()


def test_cyclic_subacts(T1, R2):
    one = validate_act(T1, [[0, 1]])
    assert cyclic_subact(one, 0).members == (0,)
    assert cyclic_subact(R2, 0).members == (0, 1)
    assert cyclic_subact(R2, 1).members == (1,)


def test_subacts(T1, R2):
    two = validate_act(T1, [[0, 1]])
    assert [s.members for s in subacts(two)] == [(0,), (1,), (0, 1)]
    assert [s.members for s in subacts(R2)] == [(1,), (0, 1)]
    assert len(subacts(trivial_act(T1))) == 1


def test_subact_from_members_rejects_open_sets(R2):
    with pytest.raises(ValueError):
        subact_from_members(R2, [0])


def test_rees_quotient_empty_system(R2):
    quo, pi = rees_quotient(R2, [])
    assert pi.is_bijective()
    assert find_isomorphism(quo, R2) is not None


def test_rees_quotient_whole_act(R2):
    quo, _ = rees_quotient(R2, [Subact(R2, (0, 1))])
    assert quo.size == 1


def test_rees_quotient_singleton_is_relabeling(R2):
    quo, pi = rees_quotient(R2, [Subact(R2, (1,))])
    assert pi.is_bijective()
    assert find_isomorphism(quo, R2) is not None


def test_rees_quotient_rejects_overlap(T1):
    act = validate_act(T1, [[0, 1, 2]])
    with pytest.raises(NotDisjoint):
        rees_quotient(act, [Subact(act, (0, 1)), Subact(act, (1, 2))])


def test_coproduct_two_trivial(E2):
    theta = trivial_act(E2)
    double, u1, u2 = coproduct(theta, theta)
    assert double.size == 2
    assert zeros(double) == (0, 1)
    assert u1.map == (0,) and u2.map == (1,)


def test_coproduct_sizes_add(R2, E2):
    total, _, _ = coproduct(R2, trivial_act(E2))
    assert total.size == 3


def test_coproduct_of_regular_acts_has_two_zeros(R2):
    total, u1, u2 = coproduct(R2, R2)
    assert zeros(total) == (1, 3)
    assert u1.is_injective() and u2.is_injective()
    covered = set(u1.map) | set(u2.map)
    assert covered == set(total.elements)


def test_product_single_act_identity(R2):
    assert product(R2) == R2


def test_product_with_point(R2, E2):
    prod = product(trivial_act(E2), R2)
    assert find_isomorphism(prod, R2) is not None


def test_product_of_regular_acts(R2):
    prod = product(R2, R2)
    assert prod.size == 4
    labels = product_tuples(R2, R2)
    assert [labels[z] for z in zeros(prod)] == [(1, 1)]


def test_find_isomorphism_reflexive(R2):
    iso = find_isomorphism(R2, R2)
    assert iso.map == (0, 1)


def test_find_isomorphism_size_mismatch(R2, E2):
    assert find_isomorphism(R2, trivial_act(E2)) is None


def test_find_isomorphism_relabeling(R2):
    flipped = relabel(R2, (1, 0))
    iso = find_isomorphism(R2, flipped)
    assert iso is not None and iso.map == (1, 0)


def test_iso_is_equivalence_on_sample(U):
    sample = [a for a in U.acts if a.size <= 3][:20]
    for a in sample:
        assert find_isomorphism(a, a) is not None
    for a in sample:
        for b in sample:
            if a.monoid != b.monoid:
                continue
            iso = find_isomorphism(a, b)
            if iso is None:
                assert find_isomorphism(b, a) is None
            else:
                back = invert(iso)
                assert compose(back, iso).map == identity_hom(a).map


def test_homs_from_point_are_zeros(U, E2):
    theta = trivial_act(E2)
    for act in U.acts_over(E2):
        images = tuple(h.map[0] for h in all_homs(theta, act))
        assert images == zeros(act)


def test_hom_to_point_unique(R2, E2):
    assert len(all_homs(R2, trivial_act(E2))) == 1


def test_homs_regular_to_regular_brute_force(R2):
    # filter all four candidate maps by equivariance directly
    expected = []
    for f0 in range(2):
        for f1 in range(2):
            f = (f0, f1)
            if all(
                f[R2.action[s][a]] == R2.action[s][f[a]]
                for s in range(2) for a in range(2)
            ):
                expected.append(f)
    assert [h.map for h in all_homs(R2, R2)] == expected
    assert expected == [(0, 1), (1, 1)]


def test_hom_constructor_rejects_non_equivariant(R2):
    with pytest.raises(ValueError):
        hom(R2, R2, (1, 0))


def test_hom_image_of_zero_is_zero(U):
    for monoid in U.monoids[:3]:
        acts = U.acts_over(monoid)
        for a in acts[:6]:
            for b in acts[:6]:
                for f in all_homs(a, b):
                    for z in zeros(a):
                        assert f.map[z] in zeros(b)


def test_injective_homs_subset_of_all(R2):
    inj = injective_homs(R2, R2)
    assert [h.map for h in inj] == [(0, 1)]


def test_left_regular_act(E2):
    reg = left_regular_act(E2)
    assert reg.action == E2.mul
