"""Property checkers: one per certified result, registered with the verifier.

Conventions.  Enumerators yield ("inst", parts) for hypothesis-satisfying
instances and ("filtered", parts) otherwise; predicates may raise SizeBound
or BoundExceeded to mark an instance skipped.  Sweeps over monomorphisms are
collapsed along images: a mono A -> B with image M poses exactly the problems
of the subact inclusion M -> B, composed with an isomorphism, so enumerating
(B, M) pairs plus maps out of M covers every mono without relabeling noise.
Quantifiers the theory ranges over all extensions are approximated by the
universe's embeddings plus the bounded injective hull; coproduct/product
closure of a class is checked for pairs whose sum/product stays within the
act-size bound.
"""

from __future__ import annotations

from .congruence import (
    all_congruences,
    class_system,
    congruence_from_index,
    is_essential,
    is_rees,
    join,
    maximal_complement,
    push_congruence,
    pull_congruence,
    quotient,
    rees_congruence,
    rees_single,
    relation_pairs,
    smallest_extension,
)
from .core import (
    Subact,
    all_homs,
    compose,
    coproduct,
    find_isomorphism,
    identity_hom,
    injective_homs,
    is_closed_mask,
    left_regular_act,
    mask_members,
    product,
    relabel,
    subact_act_by_mask,
    subact_masks,
    zeros,
)
from .errors import BoundExceeded
from .injectivity import (
    DirectedChain,
    banaschewski_reduce,
    collectively_large,
    collectively_large_by_homs,
    direct_limit,
    hom_extensions,
    injective_hull,
    is_essential_mono,
    is_injective,
    is_large,
    is_r_injective,
    is_orthogonal_r_injective,
    iso_over_source,
    make_extension,
    minimal_r_injective_extension,
    r_injective_bounded,
    r_injective_hull,
    skornjakov_injective,
    transfer_pushout,
    _extends_along,
)
from .radical import (
    classify_radical,
    closure_mask,
    coproduct_closed_radical_class,
    dense_subact_masks,
    in_Lr,
    intersection_large,
    is_r_dense,
    is_r_mono,
    is_radical_act,
    is_semisimple_act,
    lr_induced_radical,
)
from .verifier import register


# ---------------------------------------------------------------------------
# shared helpers


def _sub(act, mask):
    return Subact(act, mask_members(mask))


def _pairs(universe):
    for r in universe.radicals:
        for act in universe.acts:
            yield r, act


def _extensions(universe, base):
    """Embeddings of an act into universe acts, the identity first."""
    yield identity_hom(base)
    for target in universe.acts_over(base.monoid):
        for emb in injective_homs(base, target):
            if target == base and emb.map == tuple(base.elements):
                continue
            yield emb


def _hull_embedding(universe, base):
    hull = injective_hull(base, universe.hull_bound, universe)
    return hull.embedding


_t_cache = {}


def _t_of(universe, r):
    key = (universe, r)
    if key not in _t_cache:
        _t_cache[key] = lr_induced_radical(
            r, f"t_L[{r.name}]", universe.con_bound
        )
    return _t_cache[key]


def _radical_class_coproduct_closed(universe, r, monoid):
    """Bounded closure test for the radical class under binary coproducts.

    Raises BoundExceeded when not a single pair fits inside the act-size
    bound, since the condition is then unevaluatable."""
    members = [
        a for a in universe.acts_over(monoid) if is_radical_act(r, a)
    ]
    evaluated = 0
    closed = True
    for a in members:
        for b in members:
            if a.size + b.size <= universe.act_max:
                evaluated += 1
                if not is_radical_act(r, coproduct(a, b)[0]):
                    closed = False
    if evaluated == 0:
        raise BoundExceeded("no coproduct pair fits inside the act bound")
    return closed


def _semisimple_class_coproduct_closed(universe, r, monoid):
    members = [
        a for a in universe.acts_over(monoid) if is_semisimple_act(r, a)
    ]
    evaluated = 0
    closed = True
    for a in members:
        for b in members:
            if a.size + b.size <= universe.act_max:
                evaluated += 1
                if not is_semisimple_act(r, coproduct(a, b)[0]):
                    closed = False
    if evaluated == 0:
        raise BoundExceeded("no coproduct pair fits inside the act bound")
    return closed


def _transported_class_system(r, act, mask):
    """Non-trivial subact classes of the radical of a subact, as parent masks."""
    sub, incl = subact_act_by_mask(act, mask)
    out = []
    for block in class_system(r.of(sub)).blocks:
        m = 0
        for x in block.members:
            m |= 1 << incl.map[x]
        out.append(m)
    return out


# ---------------------------------------------------------------------------
# Hoehnke axioms (radical type invariants)


def _enum_h1(universe):
    for r in universe.radicals:
        for monoid in universe.monoids:
            acts = universe.acts_over(monoid)
            for a in acts:
                for b in acts:
                    for f in all_homs(a, b):
                        yield "inst", (r, f)


def _holds_h1(universe, parts):
    r, f = parts
    ra = r.of(f.source)
    rb = r.of(f.target)
    for block in ra.blocks:
        rep = rb.index[f.map[block[0]]]
        for x in block[1:]:
            if rb.index[f.map[x]] != rep:
                return False
    return True


register(
    "AX-H1",
    "functoriality: every homomorphism carries radical-related pairs to "
    "radical-related pairs",
    _enum_h1,
    _holds_h1,
    axiom=True,
)


def _enum_h2(universe):
    for r, act in _pairs(universe):
        yield "inst", (r, act)


def _holds_h2(universe, parts):
    r, act = parts
    quo, _ = quotient(act, r.of(act))
    return r.of(quo).is_diagonal()


register(
    "AX-H2",
    "the radical of the factor by the radical congruence is the diagonal",
    _enum_h2,
    _holds_h2,
    axiom=True,
)


# ---------------------------------------------------------------------------
# section 1


def _enum_r11(universe):
    for r, act in _pairs(universe):
        yield "inst", (r, act)


def _holds_r11(universe, parts):
    r, act = parts
    ra = r.of(act)
    sigma_masks = [b.mask for b in class_system(ra).blocks]
    for mask in subact_masks(act):
        sub, _ = subact_act_by_mask(act, mask)
        if mask.bit_count() >= 2 and is_radical_act(r, sub):
            if not any(mask & ~s == 0 for s in sigma_masks):
                return False
        # a class containing a subact is itself action-closed
        block = ra.block_of(mask_members(mask)[0])
        bmask = 0
        for x in block:
            bmask |= 1 << x
        if mask & ~bmask == 0:
            if not is_closed_mask(act, bmask):
                return False
    return True


register(
    "R1.1",
    "non-trivial radical subacts sit inside radical classes, and classes "
    "containing subacts are subacts",
    _enum_r11,
    _holds_r11,
)


def _enum_l12(universe):
    for r, act in _pairs(universe):
        ra = r.of(act)
        for chi in all_congruences(act, universe.con_bound):
            if chi.leq(ra):
                yield "inst", (r, act, chi)
            else:
                yield "filtered", (r, act, chi)


def _holds_l12(universe, parts):
    r, act, chi = parts
    quo, pi = quotient(act, chi)
    return r.of(quo) == push_congruence(pi, r.of(act))


register(
    "L1.2",
    "factoring by a congruence below the radical commutes with the radical",
    _enum_l12,
    _holds_l12,
)


# ---------------------------------------------------------------------------
# section 2: closure operator axioms and interplay with the radical


def _enum_d21(universe):
    for r, act in _pairs(universe):
        masks = subact_masks(act)
        for m in masks:
            yield "inst", (r, "c1-idem", act, m)
        for m1 in masks:
            for m2 in masks:
                if m1 & ~m2 == 0:
                    yield "inst", (r, "c2", act, m1, m2)
    for r in universe.radicals:
        for monoid in universe.monoids:
            acts = universe.acts_over(monoid)
            for a in acts:
                for b in acts:
                    for f in all_homs(a, b):
                        for m in subact_masks(a):
                            yield "inst", (r, "c3", f, m)


def _holds_d21(universe, parts):
    r, tag = parts[0], parts[1]
    if tag == "c1-idem":
        act, m = parts[2], parts[3]
        c = closure_mask(r, act, m)
        return m & ~c == 0 and closure_mask(r, act, c) == c
    if tag == "c2":
        act, m1, m2 = parts[2], parts[3], parts[4]
        return closure_mask(r, act, m1) & ~closure_mask(r, act, m2) == 0
    f, m = parts[2], parts[3]
    image = 0
    for x in mask_members(closure_mask(r, f.source, m)):
        image |= 1 << f.map[x]
    fm = 0
    for x in mask_members(m):
        fm |= 1 << f.map[x]
    return image & ~closure_mask(r, f.target, fm) == 0


register(
    "D2.1",
    "closure operator laws: extension, idempotency, monotonicity, and "
    "continuity along homomorphisms",
    _enum_d21,
    _holds_d21,
)


def _enum_l22(universe):
    for r, act in _pairs(universe):
        for mask in dense_subact_masks(r, act):
            sub, _ = subact_act_by_mask(act, mask)
            for chi in all_congruences(sub, universe.con_bound):
                yield "inst", (r, act, mask, chi)


def _holds_l22(universe, parts):
    r, act, mask, chi = parts
    ext = smallest_extension(chi, _sub(act, mask))
    quo, pi = quotient(act, ext)
    image = 0
    for x in mask_members(mask):
        image |= 1 << pi.map[x]
    return is_r_dense(r, quo, image)


register(
    "L2.2",
    "a dense subact stays dense after factoring by a congruence of the "
    "subact, extended by singletons",
    _enum_l22,
    _holds_l22,
)


def _enum_p23(universe):
    for r, act in _pairs(universe):
        for mask in subact_masks(act):
            if closure_mask(r, act, mask) == mask:
                yield "inst", (r, act, mask)
            else:
                yield "filtered", (r, act, mask)


def _holds_p23(universe, parts):
    r, act, mask = parts
    outer = [b.mask for b in class_system(r.of(act)).blocks]
    inner = _transported_class_system(r, act, mask)
    for xa in outer:
        for xb in inner:
            if xa & xb and not (xb & ~xa == 0 and xa & ~mask == 0):
                return False
    return True


register(
    "P2.3",
    "for a closed subact, radical classes of the subact nest inside those "
    "of the act whenever they meet",
    _enum_p23,
    _holds_p23,
)


def _t24_conditions(universe, r, monoid):
    c1 = _radical_class_coproduct_closed(universe, r, monoid)
    acts = universe.acts_over(monoid)
    c2 = all(
        len(class_system(r.of(a)).blocks) <= 1 for a in acts
    ) and any(a.size >= 2 and is_radical_act(r, a) for a in acts)
    c3 = coproduct_closed_radical_class(r, monoid)
    c4 = True
    for a in acts:
        zmask = 0
        for z in zeros(a):
            zmask |= 1 << z
        for m in subact_masks(a):
            if zmask & ~closure_mask(r, a, m):
                c4 = False
                break
        if not c4:
            break
    return c1, c2, c3, c4


def _enum_t24(universe):
    for r in universe.radicals:
        ka = classify_radical(r, universe).kurosh_amitsur
        for monoid in universe.monoids:
            yield ("inst" if ka else "filtered"), (r, monoid)


def _holds_t24(universe, parts):
    r, monoid = parts
    return len(set(_t24_conditions(universe, r, monoid))) == 1


register(
    "T2.4",
    "four equivalent faces of coproduct closure of the radical class: "
    "closure itself, at most one radical class plus a non-trivial radical "
    "act, the doubled point act being radical, and closures absorbing zeros",
    _enum_t24,
    _holds_t24,
)


def _enum_t25(universe):
    for r in universe.radicals:
        ka = classify_radical(r, universe).kurosh_amitsur
        for monoid in universe.monoids:
            nontrivial = any(
                a.size >= 2 and is_radical_act(r, a)
                for a in universe.acts_over(monoid)
            )
            yield ("inst" if ka and nontrivial else "filtered"), (r, monoid)


def _holds_t25(universe, parts):
    r, monoid = parts
    closed = _radical_class_coproduct_closed(universe, r, monoid)
    factor_semisimple = True
    for act in universe.acts_over(monoid):
        for mask in subact_masks(act):
            if closure_mask(r, act, mask) != mask:
                continue
            quo, _ = quotient(act, rees_single(act, mask))
            if not is_semisimple_act(r, quo):
                factor_semisimple = False
                break
        if not factor_semisimple:
            break
    return closed == factor_semisimple


register(
    "T2.5",
    "the radical class is coproduct-closed exactly when every factor over "
    "a closed subact is semisimple (needs some non-trivial radical act)",
    _enum_t25,
    _holds_t25,
)


def _enum_c26(universe):
    for r in universe.radicals:
        ka = classify_radical(r, universe).kurosh_amitsur
        for monoid in universe.monoids:
            yield ("inst" if ka else "filtered"), (r, monoid)


def _holds_c26(universe, parts):
    r, monoid = parts
    closed = _radical_class_coproduct_closed(universe, r, monoid)
    target = True
    for act in universe.acts_over(monoid):
        zmask = 0
        for z in zeros(act):
            zmask |= 1 << z
        ra = r.of(act)
        good = False
        for m in subact_masks(act):
            sub, _ = subact_act_by_mask(act, m)
            if (
                zmask & ~m == 0
                and is_radical_act(r, sub)
                and rees_single(act, m) == ra
            ):
                good = True
                break
        if not good:
            target = False
            break
    return closed == target


register(
    "C2.6",
    "coproduct closure of the radical class amounts to every act having a "
    "radical subact that holds all zeros and generates the radical congruence",
    _enum_c26,
    _holds_c26,
)


def _enum_p26(universe):
    for r in universe.radicals:
        for monoid in universe.monoids:
            try:
                ss_closed = _semisimple_class_coproduct_closed(
                    universe, r, monoid
                )
            except BoundExceeded:
                yield "skip", (r, monoid)
                continue
            for act in universe.acts_over(monoid):
                semisimple = is_semisimple_act(r, act)
                for mask in dense_subact_masks(r, act):
                    proper = mask != act.full_mask()
                    ok = ss_closed and semisimple and proper
                    yield ("inst" if ok else "filtered"), (r, act, mask)


def _holds_p26(universe, parts):
    r, act, mask = parts
    for x in act.elements:
        if (mask >> x) & 1:
            continue
        if any((mask >> row[x]) & 1 for row in act.action):
            return True
    return False


register(
    "P2.6",
    "a proper dense subact of a semisimple act attracts some outside "
    "element into it, when the semisimple class is coproduct-closed",
    _enum_p26,
    _holds_p26,
)


_EXPECTED_EDGES = (
    ("hereditary", "pre_hereditary"),
    ("pre_hereditary", "zero_hereditary"),
    ("zero_hereditary", "weakly_hereditary"),
    ("kurosh_amitsur", "pre_kurosh"),
    ("pre_kurosh", "weakly_hereditary"),
)


def _enum_d27(universe):
    for r in universe.radicals:
        for src, dst in _EXPECTED_EDGES:
            yield "inst", (r, src, dst)


def _holds_d27(universe, parts):
    r, src, dst = parts
    flags = classify_radical(r, universe).flags()
    return (not flags[src]) or flags[dst]


register(
    "D2.7",
    "taxonomy implications among the heredity flags hold for every "
    "registered radical",
    _enum_d27,
    _holds_d27,
)


def _closure_weakly_hereditary(universe, r):
    for act in universe.acts:
        for mask in subact_masks(act):
            outer = closure_mask(r, act, mask)
            inner_act, incl = subact_act_by_mask(act, outer)
            inner_mask = 0
            pos = {x: i for i, x in enumerate(incl.map)}
            for x in mask_members(mask):
                inner_mask |= 1 << pos[x]
            again = closure_mask(r, inner_act, inner_mask)
            back = 0
            for i in mask_members(again):
                back |= 1 << incl.map[i]
            if back != outer:
                return False
    return True


def _enum_t28(universe):
    for r in universe.radicals:
        yield "inst", (r,)


def _holds_t28(universe, parts):
    (r,) = parts
    return (
        _closure_weakly_hereditary(universe, r)
        == classify_radical(r, universe).weakly_hereditary
    )


register(
    "T2.8",
    "the closure operator is weakly hereditary exactly when the radical is, "
    "with both sides evaluated independently",
    _enum_t28,
    _holds_t28,
)


def _enum_p29(universe):
    for r in universe.radicals:
        pk = classify_radical(r, universe).pre_kurosh
        for act in universe.acts:
            for mask in subact_masks(act):
                closed = closure_mask(r, act, mask) == mask
                yield ("inst" if pk and closed else "filtered"), (r, act, mask)


def _holds_p29(universe, parts):
    r, act, mask = parts
    outer = {b.mask for b in class_system(r.of(act)).blocks}
    return all(m in outer for m in _transported_class_system(r, act, mask))


register(
    "P2.9",
    "for a pre-Kurosh radical, radical classes of a closed subact are "
    "radical classes of the whole act",
    _enum_p29,
    _holds_p29,
)


def _enum_c210(universe):
    for r in universe.radicals:
        ka = classify_radical(r, universe).kurosh_amitsur
        for act in universe.acts:
            for mask in subact_masks(act):
                closed = closure_mask(r, act, mask) == mask
                yield ("inst" if ka and closed else "filtered"), (r, act, mask)


def _holds_c210(universe, parts):
    r, act, mask = parts
    sub, incl = subact_act_by_mask(act, mask)
    return r.of(sub) == pull_congruence(incl, r.of(act))


register(
    "C2.10",
    "a Kurosh-Amitsur radical restricts to closed subacts",
    _enum_c210,
    _holds_c210,
)


def _captures(r, big, emb, chi_ext):
    """Do all embedded points land in one radical class of big/chi_ext?"""
    quo, pi = quotient(big, chi_ext)
    rq = r.of(quo)
    labels = {rq.index[pi.map[emb.map[x]]] for x in emb.source.elements}
    return len(labels) == 1


def _enum_l211(universe):
    for r, base in _pairs(universe):
        for chi in all_congruences(base, universe.con_bound):
            yield "inst", (r, base, chi)


def _holds_l211(universe, parts):
    # the hull is itself an extension, so capture there implies the
    # existential; the content is that a universe witness forces the hull
    r, base, chi = parts
    hull_emb = _hull_embedding(universe, base)
    lhs = _captures(r, hull_emb.target, hull_emb, _push_chi(chi, hull_emb))
    if lhs:
        return True
    return not any(
        _captures(r, emb.target, emb, _push_chi(chi, emb))
        for emb in _extensions(universe, base)
    )


def _push_chi(chi, emb):
    """Smallest extension along an embedding of a congruence on the source."""
    index = list(emb.target.elements)
    for block in chi.blocks:
        rep = emb.map[block[0]]
        for x in block:
            index[emb.map[x]] = rep
    return congruence_from_index(emb.target, index, check=False)


register(
    "L2.11",
    "the embedded act is captured by one radical class of the hull factor "
    "exactly when some extension captures it",
    _enum_l211,
    _holds_l211,
)


def _enum_t212(universe):
    for r, base in _pairs(universe):
        for cmask in subact_masks(base):
            yield "inst", (r, base, cmask)


def _captured_in_some_extension(universe, r, base, cmask):
    for emb in _extensions(universe, base):
        emb_c = 0
        for x in mask_members(cmask):
            emb_c |= 1 << emb.map[x]
        if emb.image_mask() & ~closure_mask(r, emb.target, emb_c) == 0:
            return True
    return False


def _holds_t212(universe, parts):
    r, base, cmask = parts
    hull_emb = _hull_embedding(universe, base)
    base_mask = (1 << base.size) - 1
    lhs = base_mask & ~closure_mask(r, hull_emb.target, cmask) == 0
    if lhs:
        return True
    return not _captured_in_some_extension(universe, r, base, cmask)


register(
    "T2.12",
    "an act lies in the closure of a subact inside its hull exactly when it "
    "does so inside some extension",
    _enum_t212,
    _holds_t212,
)


def _enum_p213(universe):
    for r in universe.radicals:
        yield "inst", (r,)


def _holds_p213(universe, parts):
    (r,) = parts
    flag = classify_radical(r, universe).zero_hereditary
    condition = True
    for base in universe.acts:
        for cmask in subact_masks(base):
            dense = is_r_dense(r, base, cmask)
            exists = _captured_in_some_extension(universe, r, base, cmask)
            if not exists:
                try:
                    hull_emb = _hull_embedding(universe, base)
                    full = (1 << base.size) - 1
                    exists = (
                        full & ~closure_mask(r, hull_emb.target, cmask) == 0
                    )
                except BoundExceeded:
                    pass
            if dense != exists:
                condition = False
                break
        if not condition:
            break
    return flag == condition


register(
    "P2.13",
    "zero-heredity coincides with density being detectable in some "
    "extension (bounded-universe verification)",
    _enum_p213,
    _holds_p213,
)


def _enum_d214(universe):
    for act in universe.acts:
        yield "inst", (act,)


def _holds_d214(universe, parts):
    (act,) = parts
    masks = [m for m in subact_masks(act) if m.bit_count() >= 2]
    for m in masks:
        direct = all(
            (m & other).bit_count() >= 2
            for other in subact_masks(act)
            if other.bit_count() >= 2
        )
        if intersection_large(act, _sub(act, m)) != direct:
            return False
    return True


register(
    "D2.14",
    "the meets-every-non-trivial-subact-twice test matches its definition",
    _enum_d214,
    _holds_d214,
)


def _enum_l215(universe):
    for act in universe.acts:
        for mask in subact_masks(act):
            nontrivial = mask.bit_count() >= 2
            large = is_large(act, mask, universe.con_bound)
            yield ("inst" if nontrivial and large else "filtered"), (act, mask)


def _holds_l215(universe, parts):
    act, mask = parts
    return intersection_large(act, _sub(act, mask))


register(
    "L2.15",
    "large subacts meet every non-trivial subact in at least two points",
    _enum_l215,
    _holds_l215,
)


def _enum_t216(universe):
    for r in universe.radicals:
        ph = classify_radical(r, universe).pre_hereditary
        for act in universe.acts:
            ss = is_semisimple_act(r, act)
            for mask in dense_subact_masks(r, act):
                ok = ph and ss and mask.bit_count() >= 2
                yield ("inst" if ok else "filtered"), (r, act, mask)


def _holds_t216(universe, parts):
    r, act, mask = parts
    return intersection_large(act, _sub(act, mask))


register(
    "T2.16",
    "for a pre-hereditary radical, dense subacts of semisimple acts meet "
    "every non-trivial subact twice",
    _enum_t216,
    _holds_t216,
)


def _enum_p217(universe):
    for r in universe.radicals:
        zh = classify_radical(r, universe).zero_hereditary
        for monoid in universe.monoids:
            try:
                closed = _semisimple_class_coproduct_closed(
                    universe, r, monoid
                )
            except BoundExceeded:
                yield "skip", (r, monoid)
                continue
            for act in universe.acts_over(monoid):
                ss = is_semisimple_act(r, act)
                for mask in dense_subact_masks(r, act):
                    ok = zh and closed and ss and mask.bit_count() >= 2
                    yield ("inst" if ok else "filtered"), (r, act, mask)


register(
    "P2.17",
    "for a zero-hereditary radical with coproduct-closed semisimple class, "
    "dense subacts of semisimple acts meet every non-trivial subact twice",
    _enum_p217,
    _holds_t216,
)


# ---------------------------------------------------------------------------
# section 3


def _disjoint_families(act):
    masks = subact_masks(act)
    families = [()]
    def rec(start, used, cur):
        for i in range(start, len(masks)):
            m = masks[i]
            if m & used:
                continue
            families.append(cur + (m,))
            rec(i + 1, used | m, cur + (m,))
    rec(0, 0, ())
    return families


def _enum_t34(universe):
    for act in universe.acts:
        for family in _disjoint_families(act):
            yield "inst", (act,) + family


def _holds_t34(universe, parts):
    act = parts[0]
    family = parts[1:]
    lhs = collectively_large_by_homs(act, family, universe.con_bound)
    rhs = collectively_large(act, family, universe.con_bound)
    return lhs == rhs


register(
    "T3.4",
    "a disjoint family is collectively large exactly when its generated "
    "Rees congruence is essential",
    _enum_t34,
    _holds_t34,
)


def _enum_c35(universe):
    for monoid in universe.monoids:
        acts = universe.acts_over(monoid)
        for a in acts:
            for b in acts:
                for f in injective_homs(a, b):
                    yield "inst", (f,)


def _holds_c35(universe, parts):
    (f,) = parts
    return is_essential_mono(f, universe.con_bound) == is_essential(
        rees_single(f.target, f.image_mask()), universe.con_bound
    )


register(
    "C3.5",
    "an embedding is essential exactly when the Rees congruence of its "
    "image is essential",
    _enum_c35,
    _holds_c35,
)


def _enum_t36(universe):
    for act in universe.acts:
        for chi in all_congruences(act, universe.con_bound):
            yield "inst", (act, chi)


def _holds_t36(universe, parts):
    act, chi = parts
    kappa = maximal_complement(act, chi, universe.con_bound)
    quo, pi = quotient(act, kappa)
    lifted = push_congruence(pi, join(chi, kappa))
    return is_essential(lifted, universe.con_bound)


register(
    "T3.6",
    "factoring by a maximal trivial-meet complement makes the joined "
    "congruence essential",
    _enum_t36,
    _holds_t36,
)


def _enum_l37(universe):
    for act in universe.acts:
        for chi in all_congruences(act, universe.con_bound):
            for block in class_system(chi).blocks:
                yield "inst", (act, chi, block)


def _holds_l37(universe, parts):
    act, chi, block = parts
    kappa = maximal_complement(act, chi, universe.con_bound)
    labels = {kappa.index[x] for x in block.members}
    return len(labels) == len(block.members)


register(
    "L3.7",
    "a maximal trivial-meet complement separates the points of every "
    "non-trivial subact class",
    _enum_l37,
    _holds_l37,
)


def _enum_l38(universe):
    for act in universe.acts:
        for mask in subact_masks(act):
            yield "inst", (act, mask)


def _holds_l38(universe, parts):
    act, mask = parts
    rho = rees_single(act, mask)
    kappa = maximal_complement(act, rho, universe.con_bound)
    quo, pi = quotient(act, kappa)
    image = set()
    for a in act.elements:
        for b in act.elements:
            if rho.same(a, b):
                image.add((pi.map[a], pi.map[b]))
    lifted = push_congruence(pi, join(rho, kappa))
    return image == set(relation_pairs(lifted))


register(
    "L3.8",
    "the image of a subact's Rees congruence under the complement "
    "projection is the projected join",
    _enum_l38,
    _holds_l38,
)


def _enum_d39(universe):
    for r, act in _pairs(universe):
        for mask in subact_masks(act):
            yield "inst", (r, act, mask)


def _holds_d39(universe, parts):
    r, act, mask = parts
    sub, incl = subact_act_by_mask(act, mask)
    ext = make_extension(incl, r, universe.con_bound)
    return ext.r_essential == (
        is_large(act, mask, universe.con_bound) and is_r_dense(r, act, mask)
    )


register(
    "D3.9",
    "an embedding is large-and-dense exactly when its extension record "
    "says so",
    _enum_d39,
    _holds_d39,
)


def _enum_t310(universe):
    for r, act in _pairs(universe):
        for mask in dense_subact_masks(r, act):
            yield "inst", (r, act, mask)


def _holds_t310(universe, parts):
    r, act, mask = parts
    _, incl = subact_act_by_mask(act, mask)
    pi, comp = banaschewski_reduce(r, incl, universe.con_bound)
    target = comp.target
    image = comp.image_mask()
    return (
        comp.is_injective()
        and is_large(target, image, universe.con_bound)
        and is_r_dense(r, target, image)
    )


register(
    "T3.10",
    "every dense embedding projects onto a large-and-dense one",
    _enum_t310,
    _holds_t310,
)


# ---------------------------------------------------------------------------
# section 4


def _enum_d41(universe):
    for r, act in _pairs(universe):
        yield "inst", (r, act)


def _holds_d41(universe, parts):
    r, act = parts
    if is_orthogonal_r_injective(r, act, universe):
        return is_r_injective(r, act, universe, "universe")
    return True


register(
    "D4.1",
    "orthogonal relative injectivity implies relative injectivity",
    _enum_d41,
    _holds_d41,
)


def _enum_t42(universe):
    for r, act in _pairs(universe):
        inj = r_injective_bounded(r, act, universe)
        for mask in subact_masks(act):
            quo, _ = quotient(act, rees_single(act, mask))
            ok = inj and is_semisimple_act(r, quo)
            yield ("inst" if ok else "filtered"), (r, act, mask)


def _holds_t42(universe, parts):
    r, act, mask = parts
    sub, _ = subact_act_by_mask(act, mask)
    return r_injective_bounded(r, sub, universe)


register(
    "T4.2",
    "a subact of an injective act with semisimple factor is injective "
    "(relative to the radical's dense monos)",
    _enum_t42,
    _holds_t42,
)


def _enum_l43(universe):
    for r in universe.radicals:
        yield "inst", (r, "radical-class")
        for act in universe.acts:
            yield "inst", (r, "member", act)


def _holds_l43(universe, parts):
    r, tag = parts[0], parts[1]
    if tag == "radical-class":
        t = _t_of(universe, r)
        flags = classify_radical(t, universe)
        if not flags.kurosh_amitsur:
            return False
        return all(
            is_radical_act(t, a) == in_Lr(r, a) for a in universe.acts
        )
    act = parts[2]
    direct = False
    for big in universe.acts_over(act.monoid):
        for mask in dense_subact_masks(r, big):
            quo, _ = quotient(big, rees_single(big, mask))
            if find_isomorphism(act, quo) is not None:
                direct = True
                break
        if direct:
            break
    return direct == in_Lr(r, act)


register(
    "L4.3",
    "the dense-factor class consists of the radical acts with a zero and is "
    "the radical class of a Kurosh-Amitsur radical",
    _enum_l43,
    _holds_l43,
)


def _enum_t44(universe):
    for r, act in _pairs(universe):
        yield "inst", (r, act)


def _holds_t44(universe, parts):
    r, act = parts
    t = _t_of(universe, r)
    return is_r_injective(r, act, universe, "universe") == is_r_injective(
        t, act, universe, "universe"
    )


register(
    "T4.4",
    "injectivity relative to a radical coincides with injectivity relative "
    "to the radical induced by its dense-factor class",
    _enum_t44,
    _holds_t44,
)


def _enum_t45(universe):
    for r, act in _pairs(universe):
        ortho = is_orthogonal_r_injective(r, act, universe)
        yield ("inst" if ortho else "filtered"), (r, act)


def _holds_t45(universe, parts):
    r, act = parts
    return is_semisimple_act(_t_of(universe, r), act)


register(
    "T4.5",
    "orthogonally injective acts are semisimple for the dense-factor "
    "induced radical",
    _enum_t45,
    _holds_t45,
)


def _enum_t46(universe):
    for r in universe.radicals:
        for monoid in universe.monoids:
            acts = universe.acts_over(monoid)
            targets = [q for q in acts if r_injective_bounded(r, q, universe)]
            for big in acts:
                for mask in dense_subact_masks(r, big):
                    for q in targets:
                        yield "inst", (r, big, mask, q)


def _holds_t46(universe, parts):
    r, big, mask, q = parts
    sub, _ = subact_act_by_mask(big, mask)
    members = mask_members(mask)
    for f in all_homs(sub, q):
        fmask = 0
        for x in f.map:
            fmask |= 1 << x
        cap = closure_mask(r, q, fmask)
        partial = {members[i]: f.map[i] for i in range(len(members))}
        for ext in hom_extensions(q, big, partial):
            out = 0
            for x in ext:
                out |= 1 << x
            if out & ~cap:
                return False
    return True


register(
    "T4.6",
    "extensions of a map along a dense inclusion land inside the closure "
    "of the image",
    _enum_t46,
    _holds_t46,
)


def _enum_c47(universe):
    for r, act in _pairs(universe):
        inj = r_injective_bounded(r, act, universe)
        for mask in subact_masks(act):
            yield ("inst" if inj else "filtered"), (r, "closure-inj", act, mask)
    for r, act in _pairs(universe):
        yield "inst", (r, "hull-closure", act)
        yield "inst", (r, "closed-subacts", act)


def _holds_c47(universe, parts):
    r, tag, act = parts[0], parts[1], parts[2]
    if tag == "closure-inj":
        mask = parts[3]
        cmask = closure_mask(r, act, mask)
        sub, _ = subact_act_by_mask(act, cmask)
        return r_injective_bounded(r, sub, universe)
    if tag == "hull-closure":
        emb = _hull_embedding(universe, act)
        cmask = closure_mask(r, emb.target, emb.image_mask())
        sub, _ = subact_act_by_mask(emb.target, cmask)
        return r_injective_bounded(r, sub, universe)
    lhs = r_injective_bounded(r, act, universe)
    rhs = True
    for mask in subact_masks(act):
        if closure_mask(r, act, mask) != mask:
            continue
        sub, _ = subact_act_by_mask(act, mask)
        if not r_injective_bounded(r, sub, universe):
            rhs = False
            break
    return lhs == rhs


register(
    "C4.7",
    "closures inside injective extensions are injective; the closure in the "
    "hull is injective; injectivity is equivalent to injectivity of every "
    "closed subact",
    _enum_c47,
    _holds_c47,
)


# ---------------------------------------------------------------------------
# section 5


def _enum_l51(universe):
    for r in universe.radicals:
        for monoid in universe.monoids:
            acts = universe.acts_over(monoid)
            for big in acts:
                for mask in dense_subact_masks(r, big):
                    for c in acts:
                        yield "inst", (r, big, mask, c)


def _holds_l51(universe, parts):
    r, big, mask, c = parts
    sub, incl = subact_act_by_mask(big, mask)
    for f in all_homs(sub, c):
        d, u, v = transfer_pushout(r, incl, f)
        if not u.is_injective():
            return False
        if not is_r_mono(r, u):
            return False
        if compose(v, incl).map != compose(u, f).map:
            return False
    return True


register(
    "L5.1",
    "a span of a dense mono and a map completes to a commuting square whose "
    "new leg is again a dense mono",
    _enum_l51,
    _holds_l51,
)


def _radical_member_chains(universe, r, monoid):
    members = [
        a for a in universe.acts_over(monoid) if is_radical_act(r, a)
    ]
    chains = []
    for a in members:
        chains.append(DirectedChain((a,), ()))
    links = {}
    for a in members:
        for b in members:
            hs = injective_homs(a, b)
            if hs:
                links[(a, b)] = hs
    for (a, b), hs in links.items():
        for h in hs:
            chains.append(DirectedChain((a, b), (h,)))
    for (a, b), hs1 in links.items():
        for (b2, c), hs2 in links.items():
            if b2 != b:
                continue
            for h1 in hs1:
                for h2 in hs2:
                    chains.append(DirectedChain((a, b, c), (h1, h2)))
    return chains


def _enum_l53(universe):
    for r in universe.radicals:
        for monoid in universe.monoids:
            for chain in _radical_member_chains(universe, r, monoid):
                yield "inst", (r, chain)


def _holds_l53(universe, parts):
    r, chain = parts
    limit, _ = direct_limit(chain)
    return is_radical_act(r, limit)


register(
    "L5.3",
    "direct limits of chains of radical acts along embeddings stay radical",
    _enum_l53,
    _holds_l53,
)


def _dense_chain(universe, r, act, masks):
    """Chain of nested dense subacts presented by inclusion monos."""
    acts = [act]
    links = []
    current = act
    for mask in masks:
        sub, incl = subact_act_by_mask(current, mask)
        acts.insert(0, sub)
        links.insert(0, incl)
        current = sub
    return DirectedChain(tuple(acts), tuple(links))


def _enum_chains(universe):
    for r, act in _pairs(universe):
        yield "inst", (r, act)
        for m1 in dense_subact_masks(r, act):
            if m1 == act.full_mask():
                continue
            yield "inst", (r, act, m1)
            sub1, _ = subact_act_by_mask(act, m1)
            for m0 in dense_subact_masks(r, sub1):
                if m0 == sub1.full_mask():
                    continue
                yield "inst", (r, act, m1, m0)


def _chain_from_parts(universe, parts):
    r, act = parts[0], parts[1]
    return r, _dense_chain(universe, r, act, parts[2:])


def _holds_d54(universe, parts):
    r, chain = _chain_from_parts(universe, parts)
    if not chain.is_r_directed(r):
        return False
    k = len(chain.acts)
    for i in range(k):
        for j in range(i, k):
            if not is_r_mono(r, chain.link(i, j)):
                return False
    return True


register(
    "D5.4",
    "chains of dense inclusions are directed families of dense monos, "
    "composites included",
    _enum_chains,
    _holds_d54,
)


def _holds_t55(universe, parts):
    r, chain = _chain_from_parts(universe, parts)
    limit, legs = direct_limit(chain)
    return all(is_r_mono(r, leg) for leg in legs)


register(
    "T5.5",
    "the legs of a direct limit of a chain of dense monos are dense monos",
    _enum_chains,
    _holds_t55,
)


def _enum_r56(universe):
    for r, act in _pairs(universe):
        for m1 in dense_subact_masks(r, act):
            sub1, _ = subact_act_by_mask(act, m1)
            for m0 in dense_subact_masks(r, sub1):
                yield "inst", (r, "B1", act, m1, m0)
    for r, act in _pairs(universe):
        yield "inst", (r, "B2-iso", act)
        for mask in dense_subact_masks(r, act):
            yield "inst", (r, "B2-left", act, mask)


def _holds_r56(universe, parts):
    r, tag, act = parts[0], parts[1], parts[2]
    if tag == "B1":
        m1, m0 = parts[3], parts[4]
        sub1, incl1 = subact_act_by_mask(act, m1)
        _, incl0 = subact_act_by_mask(sub1, m0)
        return is_r_mono(r, compose(incl1, incl0))
    if tag == "B2-iso":
        flip = relabel(act, tuple(reversed(range(act.size))))
        iso = find_isomorphism(act, flip)
        return iso is not None and is_r_mono(r, iso)
    mask = parts[3]
    sub, incl = subact_act_by_mask(act, mask)
    ident = tuple(sub.elements)
    for g in all_homs(sub, sub):
        if compose(incl, g).map == incl.map and g.map != ident:
            return False
    return True


register(
    "R5.6",
    "dense monos compose, contain the isomorphisms, and are left-regular",
    _enum_r56,
    _holds_r56,
)


# ---------------------------------------------------------------------------
# section 6


def _enum_t61(universe):
    for r in universe.radicals:
        for monoid in universe.monoids:
            try:
                closed = _radical_class_coproduct_closed(universe, r, monoid)
            except BoundExceeded:
                yield "skip", (r, monoid)
                continue
            for act in universe.acts_over(monoid):
                inj = r_injective_bounded(r, act, universe)
                ok = closed and inj
                yield ("inst" if ok else "filtered"), (r, "zero", act)
            acts = universe.acts_over(monoid)
            for a in acts:
                for b in acts:
                    if a.size * b.size > universe.act_max:
                        continue
                    yield ("inst" if closed else "filtered"), (r, "product", a, b)


def _holds_t61(universe, parts):
    r, tag = parts[0], parts[1]
    if tag == "zero":
        return bool(zeros(parts[2]))
    a, b = parts[2], parts[3]
    prod = product(a, b)
    both = r_injective_bounded(r, a, universe) and r_injective_bounded(
        r, b, universe
    )
    return r_injective_bounded(r, prod, universe) == both


register(
    "T6.1",
    "with a coproduct-closed radical class, injective acts have zeros and "
    "binary products are injective exactly when both factors are",
    _enum_t61,
    _holds_t61,
)


def _enum_t62(universe):
    for r in universe.radicals:
        zh = classify_radical(r, universe).zero_hereditary
        for act in universe.acts:
            ok = zh and bool(zeros(act))
            yield ("inst" if ok else "filtered"), (r, act)


def _holds_t62(universe, parts):
    r, act = parts
    return is_r_injective(r, act, universe, "criterion") == is_r_injective(
        r, act, universe, "universe"
    )


register(
    "T6.2",
    "for zero-hereditary radicals, the cyclic-act extension criterion "
    "decides relative injectivity of acts with a zero",
    _enum_t62,
    _holds_t62,
)


def _large_cyclic_criterion(universe, r, q):
    for cyc in universe.cyclic_acts(q.monoid):
        for mask in dense_subact_masks(r, cyc):
            if not is_large(cyc, mask, universe.con_bound):
                continue
            sub, _ = subact_act_by_mask(cyc, mask)
            for f in all_homs(sub, q):
                if not _extends_along(q, cyc, mask, f):
                    return False
    return True


def _holds_c63(universe, parts):
    r, act = parts
    return is_r_injective(r, act, universe, "criterion") == _large_cyclic_criterion(
        universe, r, act
    )


register(
    "C6.3",
    "for acts with a zero, testing along the large dense subacts of cyclic "
    "acts suffices",
    _enum_t62,
    _holds_c63,
)


def _enum_t65(universe):
    for r in universe.radicals:
        hered = classify_radical(r, universe).hereditary
        for act in universe.acts:
            ok = hered and is_semisimple_act(r, act)
            yield ("inst" if ok else "filtered"), (r, act)


def _holds_t65(universe, parts):
    r, act = parts
    reg = left_regular_act(act.monoid)
    lhs = True
    for mask in subact_masks(reg):
        sub, _ = subact_act_by_mask(reg, mask)
        for f in all_homs(sub, act):
            if not _extends_along(act, reg, mask, f):
                lhs = False
                break
        if not lhs:
            break
    target, _ = quotient(reg, r.of(reg))
    rhs = True
    for mask in subact_masks(target):
        sub, _ = subact_act_by_mask(target, mask)
        for f in all_homs(sub, act):
            if not _extends_along(act, target, mask, f):
                rhs = False
                break
        if not rhs:
            break
    return lhs == rhs


register(
    "T6.5",
    "for hereditary radicals, a semisimple act extends maps from subacts of "
    "the regular act exactly when it does from the regular act's semisimple "
    "factor",
    _enum_t65,
    _holds_t65,
)


# ---------------------------------------------------------------------------
# section 7


def _enum_ka_act(universe):
    for r in universe.radicals:
        ka = classify_radical(r, universe).kurosh_amitsur
        for act in universe.acts:
            yield ("inst" if ka else "filtered"), (r, act)


def _holds_p71(universe, parts):
    r, act = parts
    ext = r_injective_hull(r, act, universe.hull_bound, universe)
    if not r_injective_bounded(r, ext.target, universe):
        return False
    if not ext.r_essential:
        return False
    minimal = minimal_r_injective_extension(
        r, act, universe.hull_bound, universe
    )
    return minimal.size == ext.target.size and iso_over_source(
        act, ext.target, minimal
    )


register(
    "P7.1",
    "the closure of an act inside its hull is its minimal injective "
    "extension (relative to the radical) and an essential dense one",
    _enum_ka_act,
    _holds_p71,
)


def _holds_c72(universe, parts):
    r, act = parts
    emb = _hull_embedding(universe, act)
    closed = closure_mask(r, emb.target, emb.image_mask()) == emb.image_mask()
    return r_injective_bounded(r, act, universe) == closed


register(
    "C7.2",
    "an act is injective relative to the radical exactly when it is closed "
    "in its injective hull",
    _enum_ka_act,
    _holds_c72,
)


def _t73_conditions(universe, r):
    flags = classify_radical(r, universe)
    c1 = flags.hereditary
    c2 = True
    for base in universe.acts:
        for chi in all_congruences(base, universe.con_bound):
            quo, _ = quotient(base, chi)
            lhs = is_radical_act(r, quo)
            rhs = False
            for emb in _extensions(universe, base):
                ext_chi = _push_chi(chi, emb)
                if _captures(r, emb.target, emb, ext_chi):
                    rhs = True
                    break
            if not rhs:
                try:
                    hull_emb = _hull_embedding(universe, base)
                    rhs = _captures(
                        r,
                        hull_emb.target,
                        hull_emb,
                        smallest_extension(
                            chi,
                            _sub(hull_emb.target, (1 << base.size) - 1),
                        ),
                    )
                except BoundExceeded:
                    pass
            if lhs != rhs:
                c2 = False
                break
        if not c2:
            break
    c3 = True
    for act in universe.acts:
        if not is_radical_act(r, act):
            continue
        for mask in subact_masks(act):
            sub, _ = subact_act_by_mask(act, mask)
            if not is_radical_act(r, sub):
                c3 = False
                break
        if not c3:
            break
    c4 = True
    c5 = True
    for act in universe.acts:
        if not is_semisimple_act(r, act):
            continue
        try:
            emb = _hull_embedding(universe, act)
        except BoundExceeded:
            continue
        if not is_semisimple_act(r, emb.target):
            c5 = False
        cmask = closure_mask(r, emb.target, emb.image_mask())
        sub, _ = subact_act_by_mask(emb.target, cmask)
        if not is_semisimple_act(r, sub):
            c4 = False
    c6 = True
    for act in universe.acts:
        for family in _disjoint_families(act):
            if not family:
                continue
            rho = rees_congruence(act, family)
            if not is_essential(rho, universe.con_bound):
                continue
            blocks_ok = all(
                is_semisimple_act(r, subact_act_by_mask(act, m)[0])
                for m in family
                if m.bit_count() >= 2
            )
            quo, _ = quotient(act, rho)
            if blocks_ok and is_semisimple_act(r, quo):
                if not is_semisimple_act(r, act):
                    c6 = False
                    break
        if not c6:
            break
    return c1, c2, c3, c4, c5, c6


def _enum_t73(universe):
    for r in universe.radicals:
        ka = classify_radical(r, universe).kurosh_amitsur
        yield ("inst" if ka else "filtered"), (r,)


def _holds_t73(universe, parts):
    (r,) = parts
    return len(set(_t73_conditions(universe, r))) == 1


register(
    "T7.3",
    "six equivalent faces of heredity for a Kurosh-Amitsur radical: "
    "restriction, image detection through extensions, subact-closed radical "
    "class, hull-closed semisimple class (both hull kinds), and essential "
    "Rees extensions",
    _enum_t73,
    _holds_t73,
)


def _holds_l74(universe, parts):
    r, act = parts
    if is_radical_act(r, act) and is_semisimple_act(r, act) and act.size > 1:
        return False
    for chi in all_congruences(act, universe.con_bound):
        if is_radical_act(r, act):
            quo, _ = quotient(act, chi)
            if not is_radical_act(r, quo):
                return False
    for mask in subact_masks(act):
        if is_semisimple_act(r, act):
            sub, _ = subact_act_by_mask(act, mask)
            if not is_semisimple_act(r, sub):
                return False
    ra = r.of(act)
    if not is_rees(ra):
        return False
    for block in class_system(ra).blocks:
        sub, _ = subact_act_by_mask(act, block.mask)
        if not is_radical_act(r, sub):
            return False
    quo, _ = quotient(act, ra)
    return is_semisimple_act(r, quo)


register(
    "L7.4",
    "the radical/semisimple pair of a Kurosh-Amitsur radical: trivial "
    "overlap, image-closed radical class, subact-closed semisimple class, "
    "and a radical system with semisimple factor in every act",
    _enum_ka_act,
    _holds_l74,
)


def _enum_t75(universe):
    for r in universe.radicals:
        ka = classify_radical(r, universe).kurosh_amitsur
        for act in universe.acts:
            ok = ka and r_injective_bounded(r, act, universe)
            yield ("inst" if ok else "filtered"), (r, act)


def _holds_t75(universe, parts):
    r, act = parts
    emb = _hull_embedding(universe, act)
    return is_semisimple_act(r, act) == is_semisimple_act(r, emb.target)


register(
    "T7.5",
    "an injective act (relative to the radical) is semisimple exactly when "
    "its injective hull is",
    _enum_t75,
    _holds_t75,
)


def _enum_t76(universe):
    for r in universe.radicals:
        ka = classify_radical(r, universe).kurosh_amitsur
        for act in universe.acts:
            radical = ka and is_radical_act(r, act)
            yield ("inst" if radical else "filtered"), (r, "hulls", act)
            inj = ka and r_injective_bounded(r, act, universe)
            yield ("inst" if inj else "filtered"), (r, "classes", act)


def _holds_t76(universe, parts):
    r, tag, act = parts
    if tag == "hulls":
        ext = r_injective_hull(r, act, universe.hull_bound, universe)
        return is_radical_act(r, ext.target)
    for block in class_system(r.of(act)).blocks:
        sub, _ = subact_act_by_mask(act, block.mask)
        if not r_injective_bounded(r, sub, universe):
            return False
    return True


register(
    "T7.6",
    "the radical class is closed under relative injective hulls, and "
    "radical classes of an injective act are injective",
    _enum_t76,
    _holds_t76,
)


def _enum_acts(universe):
    for act in universe.acts:
        yield "inst", (act,)


def _holds_t78(universe, parts):
    (act,) = parts
    rg = universe.radical("rG")
    return is_r_injective(rg, act, universe, "criterion") == is_injective(
        act, universe
    )


register(
    "T7.8",
    "injectivity relative to the zero-annihilator radical coincides with "
    "plain injectivity",
    _enum_acts,
    _holds_t78,
)


def _holds_c79(universe, parts):
    (act,) = parts
    return is_injective(act, universe) == skornjakov_injective(act, universe)


register(
    "C7.9",
    "the large-subacts-of-cyclic-acts criterion agrees with the full "
    "all-subacts criterion for plain injectivity",
    _enum_acts,
    _holds_c79,
)
