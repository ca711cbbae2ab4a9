"""Essential and dense extensions, the transfer pushout, congruence-complement
reduction, direct limits of chains, injectivity deciders (absolute and relative
to a radical), and bounded injective-hull search.

Relative injectivity comes in two decidable modes.  Criterion mode runs the
Baer-Skornjakov tests: the act must contain a zero and every homomorphism from
a dense subact of a cyclic act must extend; it is available when the radical
is zero-hereditary on the universe.  Universe mode quantifies over the dense
monomorphisms whose source and target both lie in the enumerated universe.
Hull search uses the conjunction of every decidable necessary condition
(criterion tests, universe tests, and the zero requirement when the radical
class is coproduct-closed); this is the sharpest bounded approximation of the
unbounded notion available here.
"""

from __future__ import annotations

from dataclasses import dataclass

from .congruence import (
    Congruence,
    all_congruences,
    generated_congruence,
    is_essential,
    maximal_complement,
    quotient,
    rees_single,
)
from .core import (
    ActHom,
    FiniteAct,
    Subact,
    all_homs,
    compose,
    coproduct_many,
    hom_extension_exists,
    hom_extensions,
    identity_hom,
    mask_members,
    subact_act_by_mask,
    subact_masks,
    validate_act,
    zeros,
    _hom_search,
)
from .errors import BoundExceeded, ModeUnavailable, NotRMono, PostconditionError
from .radical import (
    Radical,
    classify_radical,
    closure_mask,
    coproduct_closed_radical_class,
    dense_subact_masks,
    is_r_dense,
    is_r_mono,
)
from .universe import act_tables


# ---------------------------------------------------------------------------
# largeness


def is_large(act: FiniteAct, sub, bound: int = 7) -> bool:
    """A subact is large when its Rees congruence is essential; for trivial
    subacts that congruence is the diagonal, so the answer is almost always
    False."""
    mask = sub.mask if isinstance(sub, Subact) else int(sub)
    return is_essential(rees_single(act, mask), bound)


def collectively_large(act: FiniteAct, family, bound: int = 7) -> bool:
    """A disjoint family is collectively large iff its Rees congruence is
    essential.  The empty family means testing the diagonal."""
    masks = [s.mask if isinstance(s, Subact) else int(s) for s in family]
    from .congruence import rees_congruence

    return is_essential(rees_congruence(act, masks), bound)


def collectively_large_by_homs(act: FiniteAct, family, bound: int = 7) -> bool:
    """Definition-level test: every map injective on each family member is
    injective.  Quantifying over quotients of the act is exhaustive, since
    every homomorphism factors through its kernel."""
    masks = [s.mask if isinstance(s, Subact) else int(s) for s in family]
    for chi in all_congruences(act, bound):
        if chi.is_diagonal():
            continue
        if all(_injective_on(chi, mask) for mask in masks):
            return False
    return True


def _injective_on(chi: Congruence, mask: int) -> bool:
    members = mask_members(mask)
    return len({chi.index[a] for a in members}) == len(members)


def is_essential_mono(f: ActHom, bound: int = 7) -> bool:
    """Monomorphism along which injectivity reflects, tested via quotients."""
    if not f.is_injective():
        return False
    for chi in all_congruences(f.target, bound):
        if chi.is_diagonal():
            continue
        if _injective_on(chi, f.image_mask()):
            return False
    return True


@dataclass(frozen=True)
class Extension:
    """An embedding together with its largeness/density flags."""

    source: FiniteAct
    target: FiniteAct
    embedding: ActHom
    large: bool
    r_dense: bool | None = None
    radical: str | None = None
    method: str = "direct"

    @property
    def essential(self) -> bool:
        return self.large

    @property
    def r_essential(self) -> bool:
        return bool(self.large and self.r_dense)

    def is_proper(self) -> bool:
        return self.source.size < self.target.size


def make_extension(emb: ActHom, r: Radical | None = None, bound: int = 7,
                   method: str = "direct") -> Extension:
    mask = emb.image_mask()
    return Extension(
        emb.source,
        emb.target,
        emb,
        large=is_large(emb.target, mask, bound),
        r_dense=None if r is None else is_r_dense(r, emb.target, mask),
        radical=None if r is None else r.name,
        method=method,
    )


# ---------------------------------------------------------------------------
# the transfer pushout


def transfer_pushout(r: Radical, m: ActHom, f: ActHom):
    """Complete a span (dense mono m: A -> B, map f: A -> C) to a commuting
    square whose new leg u: C -> D is again a dense mono.

    D's carrier is B minus the image of m, followed by C.  The action sends a
    leftover element of B into C through f whenever multiplication lands in
    the image of m.
    """
    if m.source != f.source:
        raise ValueError("pushout legs must share their source")
    if not is_r_mono(r, m):
        raise NotRMono(f"{m.map} is not a dense monomorphism for {r.name}")
    B, C = m.target, f.target
    image = m.image_mask()
    minv = {}
    for a, b in enumerate(m.map):
        minv[b] = a
    rest = [b for b in B.elements if not (image >> b) & 1]
    tag_rest = {b: i for i, b in enumerate(rest)}
    off = len(rest)
    monoid = B.monoid
    action = []
    for s in monoid.elements:
        row = []
        for b in rest:
            y = B.action[s][b]
            if (image >> y) & 1:
                row.append(off + f.map[minv[y]])
            else:
                row.append(tag_rest[y])
        for c in C.elements:
            row.append(off + C.action[s][c])
        action.append(tuple(row))
    D = validate_act(monoid, action)
    u = ActHom(C, D, tuple(range(off, off + C.size)))
    v_map = [
        off + f.map[minv[b]] if (image >> b) & 1 else tag_rest[b]
        for b in B.elements
    ]
    v = ActHom(B, D, tuple(v_map))
    if compose(v, m).map != compose(u, f).map:
        raise PostconditionError("pushout square does not commute")
    return D, u, v


# ---------------------------------------------------------------------------
# reduction to an essential image


def banaschewski_reduce(r: Radical, f: ActHom, bound: int = 7):
    """Given a dense mono f: B -> A, project A by a maximal congruence meeting
    the image's Rees congruence trivially.  The composite B -> A/kappa is then
    an embedding that is both large and dense."""
    if not is_r_mono(r, f):
        raise NotRMono(f"{f.map} is not a dense monomorphism for {r.name}")
    A = f.target
    kappa = maximal_complement(A, rees_single(A, f.image_mask()), bound)
    X, pi = quotient(A, kappa)
    composite = compose(pi, f)
    if not composite.is_injective():
        raise PostconditionError("reduction collapsed the embedded act")
    mask = composite.image_mask()
    if not is_large(X, mask, bound):
        raise PostconditionError("reduced image is not large")
    if not is_r_dense(r, X, mask):
        raise PostconditionError("reduced image is not dense")
    return pi, composite


# ---------------------------------------------------------------------------
# chains and direct limits


@dataclass(frozen=True)
class DirectedChain:
    """Finite chain of acts with injective links; composites are derived."""

    acts: tuple[FiniteAct, ...]
    links: tuple[ActHom, ...]

    def __post_init__(self):
        if len(self.links) != len(self.acts) - 1:
            raise ValueError("need one link between consecutive acts")
        for i, ln in enumerate(self.links):
            if ln.source != self.acts[i] or ln.target != self.acts[i + 1]:
                raise ValueError(f"link {i} does not connect the chain")
            if not ln.is_injective():
                raise ValueError(f"link {i} is not injective")

    def link(self, i: int, j: int) -> ActHom:
        h = identity_hom(self.acts[i])
        for k in range(i, j):
            h = compose(self.links[k], h)
        return h

    def is_r_directed(self, r: Radical) -> bool:
        return all(is_r_mono(r, ln) for ln in self.links)


def direct_limit(chain: DirectedChain):
    """Coproduct of the chain modulo the identification congruence; returns
    the limit together with the legs from each chain member."""
    total, injections = coproduct_many(chain.acts)
    pairs = []
    for i, ln in enumerate(chain.links):
        for a in chain.acts[i].elements:
            pairs.append((injections[i].map[a], injections[i + 1].map[ln.map[a]]))
    chi = generated_congruence(total, pairs)
    limit, pi = quotient(total, chi)
    legs = [compose(pi, inj) for inj in injections]
    return limit, legs


# ---------------------------------------------------------------------------
# injectivity deciders


_criterion_cache = {}
_universe_cache = {}
_plain_cache = {}


def _extends_along(Q: FiniteAct, big: FiniteAct, mask: int, f: ActHom) -> bool:
    incl_members = mask_members(mask)
    partial = {incl_members[i]: f.map[i] for i in range(len(incl_members))}
    return hom_extension_exists(Q, big, partial)


def baer_tests(r: Radical, Q: FiniteAct, universe) -> bool:
    """Extension tests along dense subacts of the cyclic acts."""
    for cyc in universe.cyclic_acts(Q.monoid):
        for mask in dense_subact_masks(r, cyc):
            sub, _ = subact_act_by_mask(cyc, mask)
            for f in all_homs(sub, Q):
                if not _extends_along(Q, cyc, mask, f):
                    return False
    return True


def _criterion_r_injective(r: Radical, Q: FiniteAct, universe) -> bool:
    key = (r, Q, universe)
    got = _criterion_cache.get(key)
    if got is None:
        got = bool(zeros(Q)) and baer_tests(r, Q, universe)
        _criterion_cache[key] = got
    return got


def _universe_r_injective(r: Radical, Q: FiniteAct, universe) -> bool:
    """Extension tests along every dense mono between universe acts.  A mono
    A -> B with image M poses exactly the extension problems of the inclusion
    M -> B against the homomorphisms M -> Q, so images are enumerated
    directly."""
    key = (r, Q, universe)
    got = _universe_cache.get(key)
    if got is not None:
        return got
    got = True
    for big in universe.acts_over(Q.monoid):
        for mask in dense_subact_masks(r, big):
            sub, _ = subact_act_by_mask(big, mask)
            for f in all_homs(sub, Q):
                if not _extends_along(Q, big, mask, f):
                    got = False
                    break
            if not got:
                break
        if not got:
            break
    _universe_cache[key] = got
    return got


def is_r_injective(r: Radical, Q: FiniteAct, universe, mode: str = "auto") -> bool:
    """Injectivity relative to the dense monomorphisms of the radical.

    mode="criterion" demands a zero-hereditary radical (Baer-Skornjakov);
    mode="universe" quantifies inside the universe; "auto" picks the
    criterion when it is available.
    """
    if mode == "auto":
        mode = (
            "criterion"
            if classify_radical(r, universe).zero_hereditary
            else "universe"
        )
    if mode == "criterion":
        if not classify_radical(r, universe).zero_hereditary:
            raise ModeUnavailable(
                f"{r.name} is not zero-hereditary on this universe"
            )
        return _criterion_r_injective(r, Q, universe)
    if mode == "universe":
        return _universe_r_injective(r, Q, universe)
    raise ValueError(f"unknown mode {mode!r}")


def is_orthogonal_r_injective(r: Radical, Q: FiniteAct, universe) -> bool:
    """Injective with a unique extension for every instance in the universe."""
    for big in universe.acts_over(Q.monoid):
        for mask in dense_subact_masks(r, big):
            sub, _ = subact_act_by_mask(big, mask)
            members = mask_members(mask)
            for f in all_homs(sub, Q):
                partial = {members[i]: f.map[i] for i in range(len(members))}
                if len(hom_extensions(Q, big, partial)) != 1:
                    return False
    return True


def is_injective(Q: FiniteAct, universe) -> bool:
    """Baer criterion for plain injectivity: a zero must exist, and maps from
    large subacts of cyclic acts must extend."""
    key = (Q, universe)
    got = _plain_cache.get(key)
    if got is not None:
        return got
    got = bool(zeros(Q))
    if got:
        for cyc in universe.cyclic_acts(Q.monoid):
            for mask in subact_masks(cyc):
                if not is_large(cyc, mask, universe.con_bound):
                    continue
                sub, _ = subact_act_by_mask(cyc, mask)
                for f in all_homs(sub, Q):
                    if not _extends_along(Q, cyc, mask, f):
                        got = False
                        break
                if not got:
                    break
            if not got:
                break
    _plain_cache[key] = got
    return got


def skornjakov_injective(Q: FiniteAct, universe) -> bool:
    """Independent full criterion: extension along every subact of every
    cyclic act (plus the zero requirement)."""
    if not zeros(Q):
        return False
    for cyc in universe.cyclic_acts(Q.monoid):
        for mask in subact_masks(cyc):
            sub, _ = subact_act_by_mask(cyc, mask)
            for f in all_homs(sub, Q):
                if not _extends_along(Q, cyc, mask, f):
                    return False
    return True


def is_weakly_injective(Q: FiniteAct, universe) -> bool:
    """Extension along the subact inclusions of the left regular act."""
    from .core import left_regular_act

    reg = left_regular_act(Q.monoid)
    for mask in subact_masks(reg):
        sub, _ = subact_act_by_mask(reg, mask)
        for f in all_homs(sub, Q):
            if not _extends_along(Q, reg, mask, f):
                return False
    return True


def r_injective_bounded(r: Radical, Q: FiniteAct, universe) -> bool:
    """Conjunction of every decidable necessary condition for injectivity
    relative to the radical's dense monos; used by hull search and by the
    checkers that need the unbounded notion.

    The zero requirement only applies when the radical class is closed under
    coproducts (otherwise a zero genuinely need not exist)."""
    if coproduct_closed_radical_class(r, Q.monoid) and not zeros(Q):
        return False
    return baer_tests(r, Q, universe) and _universe_r_injective(r, Q, universe)


def is_absolute_retract(r: Radical, Q: FiniteAct, universe) -> bool:
    """Every dense mono out of Q splits, within the universe."""
    for big in universe.acts_over(Q.monoid):
        for mask in dense_subact_masks(r, big):
            sub, _ = subact_act_by_mask(big, mask)
            members = mask_members(mask)
            for iso in _iso_list(Q, sub):
                partial = {
                    members[iso.map[a]]: a for a in Q.elements
                }
                if not hom_extension_exists(Q, big, partial):
                    return False
    return True


def _iso_list(a, b):
    if a.size != b.size:
        return ()
    return tuple(
        ActHom(a, b, m) for m in _hom_search(a, b, {}, True)
    )


# ---------------------------------------------------------------------------
# hull search


def extension_acts(act: FiniteAct, size: int):
    """All acts of the given size containing the act on its first indices,
    in lexicographic table order."""
    for table in act_tables(act.monoid, size, prefix=act):
        yield FiniteAct(act.monoid, table)


def _prefix_embedding(act: FiniteAct, ext: FiniteAct) -> ActHom:
    return ActHom(act, ext, tuple(range(act.size)))


_hull_cache = {}


def injective_hull(act: FiniteAct, size_bound: int, universe) -> Extension:
    """Smallest injective extension in which the act sits large; unique up to
    isomorphism over the act, searched by size then table order."""
    key = (act, size_bound, universe)
    got = _hull_cache.get(key)
    if got is not None:
        if isinstance(got, BoundExceeded):
            raise got
        return got
    prefix_mask = act.full_mask()
    found = None
    for size in range(act.size, size_bound + 1):
        for ext in extension_acts(act, size):
            if not is_large(ext, prefix_mask, universe.con_bound):
                continue
            if is_injective(ext, universe):
                found = Extension(
                    act,
                    ext,
                    _prefix_embedding(act, ext),
                    large=True,
                    method="hull-search",
                )
                break
        if found:
            break
    if found is None:
        err = BoundExceeded(
            f"no injective hull within {size_bound} points for a "
            f"{act.size}-point act"
        )
        _hull_cache[key] = err
        raise err
    _hull_cache[key] = found
    return found


def r_injective_hull(r: Radical, act: FiniteAct, size_bound: int,
                     universe) -> Extension:
    """Relative hull: the closure of the act inside its injective hull.

    Requires a Kurosh-Amitsur radical; otherwise falls back to a bounded
    search for a size-maximal large-and-dense extension, and the result is
    marked accordingly.
    """
    flags = classify_radical(r, universe)
    if not flags.kurosh_amitsur:
        return _maximal_r_essential_extension(r, act, size_bound, universe)
    hull = injective_hull(act, size_bound, universe)
    cmask = closure_mask(r, hull.target, act.full_mask())
    inner, _ = subact_act_by_mask(hull.target, cmask)
    emb = ActHom(act, inner, tuple(range(act.size)))
    ext = Extension(
        act,
        inner,
        emb,
        large=is_large(inner, act.full_mask(), universe.con_bound),
        r_dense=is_r_dense(r, inner, act.full_mask()),
        radical=r.name,
        method="closure-of-hull",
    )
    if not r_injective_bounded(r, inner, universe):
        raise PostconditionError("closure of the hull is not injective")
    if not ext.r_essential:
        raise PostconditionError("closure of the hull is not an essential "
                                 "dense extension")
    return ext


def _maximal_r_essential_extension(r, act, size_bound, universe) -> Extension:
    best = None
    prefix_mask = act.full_mask()
    for size in range(act.size, size_bound + 1):
        for ext in extension_acts(act, size):
            if not is_r_dense(r, ext, prefix_mask):
                continue
            if not is_large(ext, prefix_mask, universe.con_bound):
                continue
            best = ext
            break  # first in table order at this size; larger sizes override
    if best is None:
        raise BoundExceeded("no large dense extension within the bound")
    return Extension(
        act,
        best,
        _prefix_embedding(act, best),
        large=True,
        r_dense=True,
        radical=r.name,
        method="essential-search-fallback",
    )


def minimal_r_injective_extension(r: Radical, act: FiniteAct, size_bound: int,
                                  universe):
    """Exhaustive search for the smallest extension passing every decidable
    injectivity test; independent of the closure construction."""
    for size in range(act.size, size_bound + 1):
        for ext in extension_acts(act, size):
            if r_injective_bounded(r, ext, universe):
                return ext
    raise BoundExceeded("no injective extension within the bound")


def has_proper_r_essential_extension(r: Radical, act: FiniteAct,
                                     size_bound: int, universe) -> bool:
    prefix_mask = act.full_mask()
    for size in range(act.size + 1, size_bound + 1):
        for ext in extension_acts(act, size):
            if is_r_dense(r, ext, prefix_mask) and is_large(
                ext, prefix_mask, universe.con_bound
            ):
                return True
    return False


def iso_over_source(act: FiniteAct, q1: FiniteAct, q2: FiniteAct) -> bool:
    """Is there an isomorphism q1 -> q2 fixing the act embedded on the first
    indices of both?"""
    if q1.size != q2.size:
        return False
    partial = {a: a for a in act.elements}
    for _ in _hom_search(q1, q2, partial, True, limit=1):
        return True
    return False
