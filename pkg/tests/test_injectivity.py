import pytest

from radact.congruence import parse_partition, total
from radact.core import (
    ActHom,
    Subact,
    coproduct,
    find_isomorphism,
    identity_hom,
    subact_act_by_mask,
    subact_masks,
    trivial_act,
    validate_act,
    zeros,
)
from radact.errors import BoundExceeded, ModeUnavailable, NotRMono
from radact.injectivity import (
    DirectedChain,
    banaschewski_reduce,
    collectively_large,
    collectively_large_by_homs,
    direct_limit,
    extension_acts,
    has_proper_r_essential_extension,
    injective_hull,
    is_absolute_retract,
    is_injective,
    is_large,
    is_orthogonal_r_injective,
    is_r_injective,
    is_weakly_injective,
    iso_over_source,
    make_extension,
    minimal_r_injective_extension,
    r_injective_bounded,
    r_injective_hull,
    skornjakov_injective,
    transfer_pushout,
)
from radact.radical import extensional_radical, is_r_dense, is_r_mono, rg_radical
from radact.universe import default_universe


@pytest.fixture(scope="module")
def rg(U):
    return U.radical("rG")


def test_is_large_edges(T1, R2):
    assert is_large(R2, 0b11)
    assert not is_large(R2, 0b10)  # singleton: its Rees congruence is trivial
    two = validate_act(T1, [[0, 1]])
    assert not is_large(two, 0b01)
    one = validate_act(T1, [[0]])
    assert is_large(one, 0b1)  # no non-trivial congruence exists at all


def test_collectively_large(T1, R2):
    assert collectively_large(R2, [Subact(R2, (0, 1))])
    three = validate_act(T1, [[0, 1, 2]])
    assert not collectively_large(three, [])
    assert not collectively_large(three, [Subact(three, (0,)), Subact(three, (1,))])
    assert collectively_large(three, [Subact(three, (0, 1, 2))])


def test_collectively_large_matches_hom_definition(U):
    sample = [a for a in U.acts if a.size <= 3]
    for act in sample[:20]:
        masks = subact_masks(act)
        for m1 in masks:
            assert collectively_large(act, [m1]) == collectively_large_by_homs(
                act, [m1]
            )


def test_pushout_identity_mono(R2, rg):
    m = identity_hom(R2)
    f = ActHom(R2, R2, (1, 1))
    d, u, v = transfer_pushout(rg, m, f)
    assert d.size == R2.size
    assert u.is_bijective()


def test_pushout_into_point_is_rees_factor(U, rg):
    from radact.core import rees_quotient

    for act in U.acts_over(U.monoids[2])[:8]:
        theta = trivial_act(act.monoid)
        for mask in subact_masks(act):
            if not is_r_dense(rg, act, mask):
                continue
            sub, incl = subact_act_by_mask(act, mask)
            f = ActHom(sub, theta, (0,) * sub.size)
            d, u, v = transfer_pushout(rg, incl, f)
            collapsed, _ = rees_quotient(act, [mask])
            assert find_isomorphism(d, collapsed) is not None


def test_pushout_spec_example(R2, E2, rg):
    sub, incl = subact_act_by_mask(R2, 0b10)
    f = ActHom(sub, trivial_act(E2), (0,))
    d, u, v = transfer_pushout(rg, incl, f)
    assert d.size == 2
    assert is_r_mono(rg, u)
    assert is_r_dense(rg, d, u.image_mask())


def test_pushout_requires_dense_mono(R2, U):
    delta = U.radical("delta")
    sub, incl = subact_act_by_mask(R2, 0b10)
    f = ActHom(sub, trivial_act(R2.monoid), (0,))
    with pytest.raises(NotRMono):
        transfer_pushout(delta, incl, f)


def test_banaschewski_identity(R2, rg):
    pi, comp = banaschewski_reduce(rg, identity_hom(R2))
    assert comp.target.size == R2.size
    assert comp.is_injective()


def test_banaschewski_point_into_regular(R2, rg):
    sub, incl = subact_act_by_mask(R2, 0b10)
    pi, comp = banaschewski_reduce(rg, incl)
    assert comp.is_injective()
    assert is_large(comp.target, comp.image_mask())
    assert is_r_dense(rg, comp.target, comp.image_mask())


def test_banaschewski_sweep_uncollapsed(U, rg):
    # full mono generality over one monoid: compose inclusions with isos
    from radact.core import injective_homs

    e2_acts = U.acts_over(U.monoids[2])
    for src in e2_acts[:6]:
        for tgt in e2_acts[:6]:
            for m in injective_homs(src, tgt):
                if not is_r_mono(rg, m):
                    continue
                _, comp = banaschewski_reduce(rg, m)
                assert comp.is_injective()
                assert is_large(comp.target, comp.image_mask())
                assert is_r_dense(rg, comp.target, comp.image_mask())


def test_directed_chain_validation(R2):
    sub, incl = subact_act_by_mask(R2, 0b10)
    with pytest.raises(ValueError):
        DirectedChain((sub, R2), ())
    with pytest.raises(ValueError):
        DirectedChain((R2, R2), (ActHom(R2, R2, (1, 1)),))
    chain = DirectedChain((sub, R2), (incl,))
    assert chain.link(0, 1).map == incl.map
    assert chain.link(1, 1).map == identity_hom(R2).map


def test_direct_limit_single_act(R2):
    limit, legs = direct_limit(DirectedChain((R2,), ()))
    assert find_isomorphism(limit, R2) is not None
    assert legs[0].is_bijective()


def test_direct_limit_identity_chain(R2):
    ident = identity_hom(R2)
    limit, legs = direct_limit(DirectedChain((R2, R2, R2), (ident, ident)))
    assert find_isomorphism(limit, R2) is not None
    assert all(leg.is_bijective() for leg in legs)


def test_direct_limit_point_into_regular(R2, rg):
    sub, incl = subact_act_by_mask(R2, 0b10)
    limit, legs = direct_limit(DirectedChain((sub, R2), (incl,)))
    assert find_isomorphism(limit, R2) is not None
    assert all(is_r_mono(rg, leg) for leg in legs)


def test_direct_limit_is_top_of_injective_chain(U):
    from radact.core import injective_homs

    acts = U.acts_over(U.monoids[2])
    for a in acts[:5]:
        for b in acts[:5]:
            for m in injective_homs(a, b)[:2]:
                limit, _ = direct_limit(DirectedChain((a, b), (m,)))
                assert find_isomorphism(limit, b) is not None


def test_injective_over_identity_monoid(U, T1):
    for act in U.acts_over(T1):
        assert is_injective(act, U)


def test_injective_examples(U, R2, C2, E2):
    assert is_injective(trivial_act(E2), U)
    assert is_injective(R2, U)
    assert not is_injective(C2, U)  # no zero


def test_injectivity_cross_checks(U):
    nabla = U.radical("nabla")
    for monoid in U.monoids[:3]:
        for act in U.acts_over(monoid):
            expected = is_injective(act, U)
            assert skornjakov_injective(act, U) == expected
            assert is_r_injective(nabla, act, U, "universe") == expected


def test_delta_injectivity_universe_mode(U):
    delta = U.radical("delta")
    for act in U.acts:
        assert is_r_injective(delta, act, U, "universe")


def test_nabla_criterion_equals_injectivity(U):
    nabla = U.radical("nabla")
    for act in U.acts[:40]:
        assert is_r_injective(nabla, act, U, "criterion") == is_injective(
            act, U
        )


def test_criterion_mode_unavailable(U, T1):
    from radact.congruence import diagonal

    acts = {a.size: a for a in U.acts_over(T1)}
    table = {
        acts[1]: total(acts[1]),
        acts[2]: diagonal(acts[2]),
        acts[3]: parse_partition(acts[3], "0 1 | 2"),
        acts[4]: diagonal(acts[4]),
    }
    r = extensional_radical("not-zero-hereditary", table)
    small = default_universe(monoid_max=1, act_max=4, hull_bound=4)
    with pytest.raises(ModeUnavailable):
        is_r_injective(r, acts[2], small, "criterion")


def test_orthogonal_injectivity(U, E2):
    delta = U.radical("delta")
    theta = trivial_act(E2)
    for r in U.radicals:
        assert is_orthogonal_r_injective(r, theta, U)
    for act in U.acts[:20]:
        assert is_orthogonal_r_injective(delta, act, U)


def test_weakly_injective(U, T1):
    for act in U.acts_over(T1):
        assert is_weakly_injective(act, U)
    for act in U.acts[:40]:
        if is_injective(act, U):
            assert is_weakly_injective(act, U)


def test_hull_of_injective_act_is_itself(U):
    for act in U.acts[:30]:
        if is_injective(act, U):
            ext = injective_hull(act, U.hull_bound, U)
            assert ext.target == act
            assert ext.large


def test_hull_over_identity_monoid(U, T1):
    for act in U.acts_over(T1):
        assert injective_hull(act, U.hull_bound, U).target == act


def test_hull_of_free_orbit(U, C2):
    member = U.find_member(C2)
    ext = injective_hull(member, U.hull_bound, U)
    assert ext.target.size == 3
    assert ext.large
    assert is_injective(ext.target, U)


def test_hull_bound_exceeded(U, C2):
    member = U.find_member(C2)
    with pytest.raises(BoundExceeded):
        injective_hull(member, 2, U)


def test_extension_acts_grow_from_prefix(R2):
    for ext in extension_acts(R2, 3):
        assert ext.size == 3
        for s in range(2):
            assert ext.action[s][:2] == R2.action[s]


def test_r_hull_constant_radicals(U):
    delta, nabla = U.radical("delta"), U.radical("nabla")
    for act in U.acts[:20]:
        try:
            plain = injective_hull(act, U.hull_bound, U)
        except BoundExceeded:
            continue
        assert r_injective_hull(delta, act, U.hull_bound, U).target == act
        assert r_injective_hull(nabla, act, U.hull_bound, U).target == plain.target


def test_r_hull_matches_minimal_search_sample(U, rg):
    for act in U.acts_over(U.monoids[2]):
        try:
            ext = r_injective_hull(rg, act, U.hull_bound, U)
        except BoundExceeded:
            continue
        minimal = minimal_r_injective_extension(rg, act, U.hull_bound, U)
        assert minimal.size == ext.target.size
        assert iso_over_source(act, ext.target, minimal)


def test_r_hull_fallback_for_non_kurosh_amitsur(E2):
    # override one value of the zero-annihilator radical with a non-Rees
    # congruence: the result is no longer Kurosh-Amitsur, so hull search
    # falls back to the size-maximal large-and-dense extension
    small = default_universe(monoid_max=2, act_max=4, hull_bound=4)
    rg = rg_radical()
    chain4 = validate_act(E2, [[0, 1, 2, 3], [2, 3, 2, 3]])
    member = small.find_member(chain4)
    from radact.congruence import all_congruences, is_rees

    non_rees = next(
        chi for chi in all_congruences(member) if not is_rees(chi)
    )
    table = {act: rg.of(act) for act in small.acts}
    table[member] = non_rees
    mutant = extensional_radical("non-ka", table)
    from radact.radical import classify_radical

    assert not classify_radical(mutant, small).kurosh_amitsur
    theta = small.acts_over(small.monoids[2])[0]
    assert theta.size == 1
    ext = r_injective_hull(mutant, theta, small.hull_bound, small)
    assert ext.method == "essential-search-fallback"
    assert ext.large and ext.r_dense


def test_first_well_behaviour_sample(U):
    small_acts = [
        a for m in U.monoids[:3] for a in U.acts_over(m) if a.size <= 3
    ]
    for r in U.radicals:
        for act in small_acts:
            inj = r_injective_bounded(r, act, U)
            retract = is_absolute_retract(r, act, U)
            no_proper = not has_proper_r_essential_extension(
                r, act, 5, U
            )
            assert inj == retract == no_proper, (r.name, act.name)


def test_extension_record_flags(R2, rg):
    sub, incl = subact_act_by_mask(R2, 0b10)
    ext = make_extension(incl, rg)
    assert ext.r_dense and not ext.large
    assert not ext.r_essential
    assert ext.essential == ext.large
