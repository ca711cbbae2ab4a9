"""Congruences of a finite act: lattice operations, Rees congruences,
class systems, essentiality, and bounded full enumeration."""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

from .core import (
    ActHom,
    FiniteAct,
    Subact,
    is_closed_mask,
    mask_members,
    members_mask,
    subact_act,
)
from .errors import ActMismatch, NotDisjoint, SizeBound

CON_BOUND_DEFAULT = 7


def _canonical(index):
    """Relabel a block-index vector so labels appear in first-use order."""
    relabel = {}
    out = []
    for b in index:
        if b not in relabel:
            relabel[b] = len(relabel)
        out.append(relabel[b])
    return tuple(out)


def _blocks_of(index):
    blocks = {}
    for a, b in enumerate(index):
        blocks.setdefault(b, []).append(a)
    return tuple(tuple(blocks[b]) for b in sorted(blocks))


@dataclass(frozen=True)
class Congruence:
    """Act-compatible partition, canonicalised: blocks sorted by least element."""

    act: FiniteAct
    index: tuple[int, ...]  # element -> block id, first-use order
    blocks: tuple[tuple[int, ...], ...] = field(compare=False)

    def same(self, a: int, b: int) -> bool:
        return self.index[a] == self.index[b]

    def block_of(self, a: int) -> tuple[int, ...]:
        return self.blocks[self.index[a]]

    def is_diagonal(self) -> bool:
        return len(self.blocks) == self.act.size

    def is_total(self) -> bool:
        return len(self.blocks) == 1

    def pairs(self):
        for block in self.blocks:
            for i, a in enumerate(block):
                for b in block[i + 1:]:
                    yield a, b

    def leq(self, other: "Congruence") -> bool:
        """Refinement order: every block of self sits inside a block of other."""
        oi = other.index
        si = self.index
        rep = {}
        for a in self.act.elements:
            b = si[a]
            if b in rep:
                if oi[a] != rep[b]:
                    return False
            else:
                rep[b] = oi[a]
        return True

    def __str__(self):
        return " | ".join(" ".join(str(a) for a in blk) for blk in self.blocks)

    def __hash__(self):
        return hash((self.act, self.index))


def _make(act, index) -> Congruence:
    idx = _canonical(index)
    return Congruence(act, idx, _blocks_of(idx))


def congruence_from_index(act: FiniteAct, index, check: bool = True) -> Congruence:
    chi = _make(act, tuple(index))
    if check and not _compatible(act, chi.index):
        raise ValueError("partition is not action-compatible")
    return chi


def congruence_from_blocks(act: FiniteAct, blocks, check: bool = True) -> Congruence:
    index = [-1] * act.size
    for i, block in enumerate(blocks):
        for a in block:
            if not 0 <= a < act.size:
                raise ValueError(f"element {a} outside the carrier")
            if index[a] != -1:
                raise ValueError("blocks overlap")
            index[a] = i
    if -1 in index:
        raise ValueError("blocks do not cover the carrier")
    return congruence_from_index(act, index, check)


def _compatible(act, index) -> bool:
    for row in act.action:
        seen = {}
        for a in act.elements:
            b = index[a]
            if b in seen:
                if index[row[a]] != seen[b]:
                    return False
            else:
                seen[b] = index[row[a]]
    return True


def diagonal(act: FiniteAct) -> Congruence:
    return _make(act, tuple(act.elements))


def total(act: FiniteAct) -> Congruence:
    return _make(act, (0,) * act.size)


def parse_partition(act: FiniteAct, text: str, check: bool = True) -> Congruence:
    blocks = []
    for chunk in text.split("|"):
        items = chunk.split()
        if not items:
            raise ValueError(f"empty block in partition {text!r}")
        blocks.append([int(x) for x in items])
    return congruence_from_blocks(act, blocks, check)


# ---------------------------------------------------------------------------
# generation and lattice structure


class _UnionFind:
    def __init__(self, n):
        self.parent = list(range(n))

    def find(self, x):
        parent = self.parent
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(self, a, b):
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return False
        if rb < ra:
            ra, rb = rb, ra
        self.parent[rb] = ra
        return True


def generated_congruence(act: FiniteAct, pairs) -> Congruence:
    """Least congruence containing the given pairs.

    Union-find closure: whenever two elements merge, their images under every
    monoid element merge as well, until a fixpoint.
    """
    uf = _UnionFind(act.size)
    work = []
    for a, b in pairs:
        if uf.union(a, b):
            work.append((a, b))
    while work:
        a, b = work.pop()
        for row in act.action:
            x, y = row[a], row[b]
            if uf.union(x, y):
                work.append((x, y))
    return _make(act, tuple(uf.find(a) for a in act.elements))


def meet(chi1: Congruence, chi2: Congruence) -> Congruence:
    if chi1.act != chi2.act:
        raise ActMismatch("congruences live on different acts")
    return _make(chi1.act, tuple(zip(chi1.index, chi2.index)))


def join(chi1: Congruence, chi2: Congruence) -> Congruence:
    if chi1.act != chi2.act:
        raise ActMismatch("congruences live on different acts")
    # the equivalence join of two congruences is already action-compatible
    uf = _UnionFind(chi1.act.size)
    for chi in (chi1, chi2):
        for block in chi.blocks:
            for b in block[1:]:
                uf.union(block[0], b)
    return _make(chi1.act, tuple(uf.find(a) for a in chi1.act.elements))


def meets_nontrivially(chi1: Congruence, chi2: Congruence) -> bool:
    """Is the meet different from the diagonal?"""
    seen = set()
    for a in chi1.act.elements:
        key = (chi1.index[a], chi2.index[a])
        if key in seen:
            return True
        seen.add(key)
    return False


def rees_congruence(act: FiniteAct, parts) -> Congruence:
    """Congruence whose non-singleton classes are the given disjoint subacts."""
    index = list(act.elements)
    seen = 0
    for part in parts:
        mask = part.mask if isinstance(part, Subact) else int(part)
        if mask & seen:
            raise NotDisjoint("parts overlap")
        if not is_closed_mask(act, mask):
            raise ValueError("parts must be subacts")
        seen |= mask
        members = mask_members(mask)
        for a in members:
            index[a] = members[0]
    return _make(act, tuple(index))


def rees_single(act: FiniteAct, mask: int) -> Congruence:
    return rees_congruence(act, [mask])


def is_rees(chi: Congruence) -> bool:
    """Every class is a singleton or action-closed."""
    for block in chi.blocks:
        if len(block) > 1 and not is_closed_mask(chi.act, members_mask(block)):
            return False
    return True


@dataclass(frozen=True)
class ClassSystem:
    """The classes of a congruence that are non-trivial subacts."""

    congruence: Congruence
    blocks: tuple[Subact, ...]


def class_system(chi: Congruence) -> ClassSystem:
    out = []
    for block in chi.blocks:
        if len(block) >= 2 and is_closed_mask(chi.act, members_mask(block)):
            out.append(Subact(chi.act, block))
    return ClassSystem(chi, tuple(out))


def smallest_extension(chi_b: Congruence, sub: Subact) -> Congruence:
    """Extend a congruence of a subact to the whole act by adding singletons."""
    inner, incl = subact_act(sub)
    if chi_b.act != inner:
        raise ActMismatch("congruence is not on the given subact")
    index = list(sub.parent.elements)
    for block in chi_b.blocks:
        rep = incl.map[block[0]]
        for a in block:
            index[incl.map[a]] = rep
    return _make(sub.parent, tuple(index))


# ---------------------------------------------------------------------------
# quotients, kernels, transport


def quotient(act: FiniteAct, chi: Congruence) -> tuple[FiniteAct, ActHom]:
    """Carrier = classes of chi; action induced by compatibility."""
    if chi.act != act:
        raise ActMismatch("congruence is not on this act")
    reps = [block[0] for block in chi.blocks]
    action = tuple(
        tuple(chi.index[row[r]] for r in reps) for row in act.action
    )
    quo = FiniteAct(act.monoid, action)
    return quo, ActHom(act, quo, chi.index)


def kernel(f: ActHom) -> Congruence:
    """Partition of the source into fibres of f."""
    return _make(f.source, f.map)


def push_congruence(pi: ActHom, chi: Congruence) -> Congruence:
    """Image partition pi(chi) for a surjection whose kernel refines chi."""
    if chi.act != pi.source:
        raise ActMismatch("congruence is not on the map's source")
    index = [-1] * pi.target.size
    for a in pi.source.elements:
        b = pi.map[a]
        if index[b] == -1:
            index[b] = chi.index[a]
        elif index[b] != chi.index[a]:
            raise ValueError("kernel of the map does not refine the congruence")
    return _make(pi.target, tuple(index))


def pull_congruence(f: ActHom, chi: Congruence) -> Congruence:
    """Preimage congruence: relate x, y when f(x), f(y) are related."""
    if chi.act != f.target:
        raise ActMismatch("congruence is not on the map's target")
    return _make(f.source, tuple(chi.index[f.map[a]] for a in f.source.elements))


def relation_pairs(chi: Congruence) -> frozenset:
    out = set()
    for a in chi.act.elements:
        for b in chi.act.elements:
            if chi.same(a, b):
                out.add((a, b))
    return frozenset(out)


def restrict_congruence(chi: Congruence, sub: Subact) -> Congruence:
    """chi intersected with the subact, as a congruence of the subact's act."""
    inner, incl = subact_act(sub)
    return _make(inner, tuple(chi.index[incl.map[a]] for a in inner.elements))


# ---------------------------------------------------------------------------
# full enumeration


@lru_cache(maxsize=None)
def all_congruences(act: FiniteAct, bound: int = CON_BOUND_DEFAULT) -> tuple[Congruence, ...]:
    """Full congruence lattice, built by closing principal congruences
    under binary join.  Deterministic order (sorted index vectors)."""
    if act.size > bound:
        raise SizeBound(f"carrier {act.size} exceeds lattice bound {bound}")
    principals = set()
    for a in act.elements:
        for b in range(a + 1, act.size):
            principals.add(generated_congruence(act, [(a, b)]))
    found = {diagonal(act)} | principals
    frontier = list(principals)
    while frontier:
        fresh = []
        for chi in frontier:
            for p in principals:
                j = join(chi, p)
                if j not in found:
                    found.add(j)
                    fresh.append(j)
        frontier = fresh
    return tuple(sorted(found, key=lambda c: c.index))


def is_essential(chi: Congruence, bound: int = CON_BOUND_DEFAULT) -> bool:
    """Does chi meet every non-diagonal congruence non-trivially?"""
    for theta in all_congruences(chi.act, bound):
        if theta.is_diagonal():
            continue
        if not meets_nontrivially(chi, theta):
            return False
    return True


def maximal_complement(act: FiniteAct, chi: Congruence,
                       bound: int = CON_BOUND_DEFAULT) -> Congruence:
    """A congruence maximal among those meeting chi in the diagonal.

    Among all inclusion-maximal candidates the one with the least canonical
    index vector is returned.
    """
    lattice = all_congruences(act, bound)
    candidates = [k for k in lattice if not meets_nontrivially(chi, k)]
    maximal = [
        k for k in candidates
        if not any(k != other and k.leq(other) for other in candidates)
    ]
    return min(maximal, key=lambda c: c.index)
