"""Hoehnke radicals, radical/semisimple classes, the induced closure operator
and density machinery, plus the taxonomy flags (hereditary, pre-Kurosh, ...).

A radical assigns to every act a congruence on it.  Built-ins: the constant
diagonal and total radicals, and the zero-annihilator radical rG (join, over
each zero, of the Rees congruence collapsing the union of all cyclic subacts
whose every element maps into that zero).  Induced radicals come from a
semisimple-class membership oracle via the meet formula; extensional radicals
are tables over a fixed catalog of acts, evaluated on other acts through an
isomorphism.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import congruence as cg
from .congruence import Congruence, all_congruences, class_system, quotient
from .core import (
    FiniteAct,
    ActHom,
    Subact,
    collapse_subact,
    coproduct,
    cyclic_mask,
    find_isomorphism,
    mask_members,
    product,
    relabel,
    subact_act_by_mask,
    subact_masks,
    trivial_act,
    zeros,
)
from .errors import ClassNotClosed, NotInUniverse

KINDS = (
    "builtin-delta",
    "builtin-nabla",
    "builtin-rG",
    "induced-from-semisimple-class",
    "extensional-table",
)


@dataclass(frozen=True)
class ClassOracle:
    """Named decidable membership predicate on finite acts."""

    name: str
    membership: object  # callable FiniteAct -> bool

    def __contains__(self, act: FiniteAct) -> bool:
        return bool(self.membership(act))


class Radical:
    """Assignment act -> congruence; evaluation is memoised per act."""

    def __init__(self, name, kind, *, oracle=None, table=None,
                 con_bound=cg.CON_BOUND_DEFAULT):
        if kind not in KINDS:
            raise ValueError(f"unknown radical kind {kind!r}")
        if kind == "induced-from-semisimple-class" and oracle is None:
            raise ValueError("induced radicals need a class oracle")
        if kind == "extensional-table" and table is None:
            raise ValueError("extensional radicals need a table")
        self.name = name
        self.kind = kind
        self.oracle = oracle
        self.table = dict(table) if table else None
        self.con_bound = con_bound
        self._cache = {}

    def __repr__(self):
        return f"Radical({self.name!r}, {self.kind})"

    def of(self, act: FiniteAct) -> Congruence:
        got = self._cache.get(act)
        if got is None:
            got = self._compute(act)
            self._cache[act] = got
        return got

    def _compute(self, act):
        if self.kind == "builtin-delta":
            return cg.diagonal(act)
        if self.kind == "builtin-nabla":
            return cg.total(act)
        if self.kind == "builtin-rG":
            return _rg_congruence(act)
        if self.kind == "induced-from-semisimple-class":
            return self._induced(act)
        return self._lookup(act)

    def _induced(self, act):
        member = self.oracle.membership
        result = cg.total(act)
        for chi in all_congruences(act, self.con_bound):
            if member(quotient(act, chi)[0]):
                result = cg.meet(result, chi)
        return result

    def _lookup(self, act):
        direct = self.table.get(act)
        if direct is not None:
            return direct
        for member, value in self.table.items():
            iso = find_isomorphism(act, member)
            if iso is not None:
                return cg.pull_congruence(iso, value)
        raise NotInUniverse(f"{self.name} has no table entry matching the act")


def delta_radical() -> Radical:
    return Radical("delta", "builtin-delta")


def nabla_radical() -> Radical:
    return Radical("nabla", "builtin-nabla")


def rg_radical() -> Radical:
    return Radical("rG", "builtin-rG")


def induced_radical(name, membership, con_bound=cg.CON_BOUND_DEFAULT) -> Radical:
    return Radical(
        name,
        "induced-from-semisimple-class",
        oracle=ClassOracle(name + ".class", membership),
        con_bound=con_bound,
    )


def extensional_radical(name, table, con_bound=cg.CON_BOUND_DEFAULT) -> Radical:
    return Radical(name, "extensional-table", table=table, con_bound=con_bound)


# ---------------------------------------------------------------------------
# the zero-annihilator radical


def annihilator_union_mask(act: FiniteAct, theta: int) -> int:
    """Union of the cyclic subacts all of whose elements map into theta."""
    out = 0
    for x in act.elements:
        mask = cyclic_mask(act, x)
        if out | mask == out:
            continue
        ok = True
        probe = mask
        c = 0
        while probe:
            if probe & 1 and all(row[c] != theta for row in act.action):
                ok = False
                break
            probe >>= 1
            c += 1
        if ok:
            out |= mask
    return out


def _rg_congruence(act):
    zs = zeros(act)
    if not zs:
        return cg.diagonal(act)
    pairs = []
    for theta in zs:
        members = mask_members(annihilator_union_mask(act, theta))
        pairs.extend((members[0], c) for c in members[1:])
    return cg.generated_congruence(act, pairs)


# ---------------------------------------------------------------------------
# radical and semisimple classes


def is_radical_act(r: Radical, act: FiniteAct) -> bool:
    return r.of(act).is_total()


def is_semisimple_act(r: Radical, act: FiniteAct) -> bool:
    return r.of(act).is_diagonal()


def in_Lr(r: Radical, act: FiniteAct) -> bool:
    """Member of the class of Rees factors over dense subacts: a radical act
    possessing a zero."""
    return bool(zeros(act)) and is_radical_act(r, act)


def lr_induced_radical(base: Radical, name=None,
                       con_bound=cg.CON_BOUND_DEFAULT) -> Radical:
    """The Kurosh-Amitsur radical induced by the dense-factor class of ``base``:
    semisimple acts are those with no non-trivial subact in that class."""

    def membership(act):
        for mask in subact_masks(act):
            if mask.bit_count() < 2:
                continue
            sub, _ = subact_act_by_mask(act, mask)
            if in_Lr(base, sub):
                return False
        return True

    return induced_radical(name or f"t_L{base.name}", membership, con_bound)


def coproduct_closed_radical_class(r: Radical, monoid) -> bool:
    """Whether the two-point act with two zeros is a radical act, which for
    Kurosh-Amitsur radicals characterises coproduct closure of the class."""
    theta = trivial_act(monoid)
    double, _, _ = coproduct(theta, theta)
    return is_radical_act(r, double)


def verify_semisimple_class(membership, universe):
    """Check the closure conditions a semisimple class must satisfy, on the
    universe.  Returns None, or raises ClassNotClosed with a witness.

    Binary products are checked only while they stay within the universe's
    act-size bound (a finite approximation of the product condition).
    """
    for monoid in universe.monoids:
        if not membership(trivial_act(monoid)):
            raise ClassNotClosed("contains trivial acts", monoid)
    for act in universe.acts:
        inside = membership(act)
        mirrored = relabel(act, tuple(reversed(range(act.size))))
        if membership(mirrored) != inside:
            raise ClassNotClosed("closed under isomorphic copies", act)
        if inside:
            for mask in subact_masks(act):
                sub, _ = subact_act_by_mask(act, mask)
                if not membership(sub):
                    raise ClassNotClosed("closed under subacts", (act, mask))
        for chi in all_congruences(act, universe.con_bound):
            if membership(quotient(act, chi)[0]) and all(
                membership(subact_act_by_mask(act, block.mask)[0])
                for block in class_system(chi).blocks
            ):
                if not membership(act):
                    raise ClassNotClosed(
                        "closed under congruence extensions", (act, str(chi))
                    )
    for monoid in universe.monoids:
        members = [a for a in universe.acts_over(monoid) if membership(a)]
        for a in members:
            for b in members:
                if a.size * b.size <= universe.act_max:
                    if not membership(product(a, b)):
                        raise ClassNotClosed("closed under products", (a, b))
    return None


# ---------------------------------------------------------------------------
# closure operator


def closure_mask(r: Radical, act: FiniteAct, mask: int) -> int:
    """Preimage, under collapsing the subact, of the radical class of the
    collapsed point."""
    key = (r, act, mask)
    got = _closure_cache.get(key)
    if got is not None:
        return got
    quo, pi = collapse_subact(act, mask)
    rq = r.of(quo)
    zclass = rq.index[pi.map[mask_members(mask)[0]]]
    out = 0
    for a in act.elements:
        if rq.index[pi.map[a]] == zclass:
            out |= 1 << a
    _closure_cache[key] = out
    return out


_closure_cache = {}


def closure(r: Radical, act: FiniteAct, sub: Subact) -> Subact:
    if sub.parent != act:
        raise ValueError("subact does not live in the act")
    return Subact(act, mask_members(closure_mask(r, act, sub.mask)))


@dataclass(frozen=True)
class ClosureOperator:
    """The idempotent closure operator attached to a radical."""

    radical: Radical

    def of(self, act: FiniteAct, sub: Subact) -> Subact:
        return closure(self.radical, act, sub)


def is_r_dense(r: Radical, act: FiniteAct, sub) -> bool:
    mask = sub.mask if isinstance(sub, Subact) else int(sub)
    return closure_mask(r, act, mask) == act.full_mask()


def is_r_closed(r: Radical, act: FiniteAct, sub) -> bool:
    mask = sub.mask if isinstance(sub, Subact) else int(sub)
    return closure_mask(r, act, mask) == mask


def is_r_mono(r: Radical, m: ActHom) -> bool:
    return m.is_injective() and is_r_dense(r, m.target, m.image_mask())


def density_equivalent(r: Radical, act: FiniteAct, sub) -> bool:
    """Independent density test: the Rees factor over the subact is radical."""
    mask = sub.mask if isinstance(sub, Subact) else int(sub)
    quo, _ = collapse_subact(act, mask)
    return is_radical_act(r, quo)


def dense_subact_masks(r: Radical, act: FiniteAct) -> tuple[int, ...]:
    key = (r, act)
    got = _dense_cache.get(key)
    if got is None:
        got = tuple(
            m for m in subact_masks(act)
            if closure_mask(r, act, m) == act.full_mask()
        )
        _dense_cache[key] = got
    return got


_dense_cache = {}


def intersection_large(act: FiniteAct, sub: Subact) -> bool:
    """Does the subact meet every non-trivial subact in at least two points?"""
    if sub.is_trivial():
        raise ValueError("intersection-largeness is defined for non-trivial subacts")
    mask = sub.mask
    for other in subact_masks(act):
        if other.bit_count() >= 2 and (mask & other).bit_count() < 2:
            return False
    return True


# ---------------------------------------------------------------------------
# taxonomy


@dataclass(frozen=True)
class RadicalTaxonomy:
    radical: str
    hereditary: bool
    pre_hereditary: bool
    weakly_hereditary: bool
    zero_hereditary: bool
    pre_kurosh: bool
    kurosh_amitsur: bool

    FLAG_NAMES = (
        "hereditary",
        "pre_hereditary",
        "weakly_hereditary",
        "zero_hereditary",
        "pre_kurosh",
        "kurosh_amitsur",
    )

    def flags(self) -> dict:
        return {name: getattr(self, name) for name in self.FLAG_NAMES}


def classify_radical(r: Radical, universe) -> RadicalTaxonomy:
    """Evaluate the taxonomy flags of a radical over every act of a universe."""
    key = (r, universe)
    got = _taxonomy_cache.get(key)
    if got is not None:
        return got
    hereditary = True
    pre_hereditary = True
    weakly_hereditary = True
    zero_hereditary = True
    pre_kurosh = True
    kurosh_amitsur = True
    for act in universe.acts:
        ra = r.of(act)
        if hereditary:
            for mask in subact_masks(act):
                sub, incl = subact_act_by_mask(act, mask)
                if r.of(sub) != cg.pull_congruence(incl, ra):
                    hereditary = False
                    break
        if kurosh_amitsur and not cg.is_rees(ra):
            kurosh_amitsur = False
        zs = zeros(act)
        for block in class_system(ra).blocks:
            bmask = block.mask
            sub, _ = subact_act_by_mask(act, bmask)
            block_radical = is_radical_act(r, sub)
            if not block_radical:
                kurosh_amitsur = False
                pre_kurosh = False
                if any((bmask >> z) & 1 for z in zs):
                    weakly_hereditary = False
            if pre_hereditary or zero_hereditary:
                # zeros of the act inside this class, in the class's own labels
                local_zeros = 0
                for i, a in enumerate(block.members):
                    if a in zs:
                        local_zeros |= 1 << i
                for ymask in subact_masks(sub):
                    ysub, _ = subact_act_by_mask(sub, ymask)
                    if not is_radical_act(r, ysub):
                        pre_hereditary = False
                        if ymask & local_zeros:
                            zero_hereditary = False
    got = RadicalTaxonomy(
        r.name,
        hereditary,
        pre_hereditary,
        weakly_hereditary,
        zero_hereditary,
        pre_kurosh,
        kurosh_amitsur,
    )
    _taxonomy_cache[key] = got
    return got


_taxonomy_cache = {}
