"""Finite monoids, acts over them, equivariant maps and elementary constructions.

Carriers are index sets 0..size-1.  Every structure is immutable and hashable,
so results of the more expensive operations are memoised on the values
themselves.  Element sets are passed around as bitmasks in the hot paths.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from itertools import permutations

from .errors import (
    ActMismatch,
    AssocAxiom,
    BadIdentity,
    IdentityAxiom,
    NotAssociative,
    NotDisjoint,
)


@dataclass(frozen=True)
class FiniteMonoid:
    """Multiplication table with a two-sided identity."""

    mul: tuple[tuple[int, ...], ...]
    identity: int
    name: str = field(default="", compare=False)

    @property
    def size(self) -> int:
        return len(self.mul)

    @property
    def elements(self) -> range:
        return range(len(self.mul))

    def __hash__(self):
        return hash((self.mul, self.identity))

    def __repr__(self):
        return f"FiniteMonoid({self.name or self.mul}, identity={self.identity})"


@dataclass(frozen=True)
class FiniteAct:
    """A carrier together with a left action table: action[s][a] = s*a."""

    monoid: FiniteMonoid
    action: tuple[tuple[int, ...], ...]
    name: str = field(default="", compare=False)

    @property
    def size(self) -> int:
        return len(self.action[0])

    @property
    def elements(self) -> range:
        return range(len(self.action[0]))

    def full_mask(self) -> int:
        return (1 << self.size) - 1

    def __hash__(self):
        return hash((self.monoid, self.action))

    def __repr__(self):
        return f"FiniteAct({self.name or self.action}, over={self.monoid.name or '?'})"


@dataclass(frozen=True)
class ActHom:
    """Equivariant map between two acts over the same monoid."""

    source: FiniteAct
    target: FiniteAct
    map: tuple[int, ...]

    def __call__(self, a: int) -> int:
        return self.map[a]

    def is_injective(self) -> bool:
        return len(set(self.map)) == len(self.map)

    def is_surjective(self) -> bool:
        return len(set(self.map)) == self.target.size

    def is_bijective(self) -> bool:
        return self.is_injective() and self.source.size == self.target.size

    def image_mask(self) -> int:
        mask = 0
        for b in self.map:
            mask |= 1 << b
        return mask

    def __hash__(self):
        return hash((self.source, self.target, self.map))


@dataclass(frozen=True)
class Subact:
    """A non-empty action-closed subset of an act's carrier."""

    parent: FiniteAct
    members: tuple[int, ...]

    @property
    def mask(self) -> int:
        m = 0
        for a in self.members:
            m |= 1 << a
        return m

    @property
    def size(self) -> int:
        return len(self.members)

    def is_trivial(self) -> bool:
        return len(self.members) <= 1

    def __hash__(self):
        return hash((self.parent, self.members))


def mask_members(mask: int) -> tuple[int, ...]:
    out = []
    a = 0
    while mask:
        if mask & 1:
            out.append(a)
        mask >>= 1
        a += 1
    return tuple(out)


def members_mask(members) -> int:
    m = 0
    for a in members:
        m |= 1 << a
    return m


# ---------------------------------------------------------------------------
# validation


def validate_monoid(table, identity: int, name: str = "") -> FiniteMonoid:
    """Build a monoid from a square table, verifying identity and associativity."""
    mul = tuple(tuple(row) for row in table)
    n = len(mul)
    if any(len(row) != n for row in mul):
        raise ValueError("multiplication table must be square")
    if not 0 <= identity < n:
        raise BadIdentity(identity)
    for x in range(n):
        if mul[identity][x] != x or mul[x][identity] != x:
            raise BadIdentity(x)
    for x in range(n):
        for y in range(n):
            xy = mul[x][y]
            for z in range(n):
                if mul[xy][z] != mul[x][mul[y][z]]:
                    raise NotAssociative(x, y, z)
    return FiniteMonoid(mul, identity, name)


def validate_act(monoid: FiniteMonoid, action_table, name: str = "") -> FiniteAct:
    """Build an act from an action table, verifying both act axioms."""
    action = tuple(tuple(row) for row in action_table)
    n = monoid.size
    if len(action) != n:
        raise ValueError(f"action table needs {n} rows, got {len(action)}")
    m = len(action[0])
    if m < 1:
        raise ValueError("carriers are non-empty")
    if any(len(row) != m for row in action):
        raise ValueError("action table rows must have equal length")
    for row in action:
        for b in row:
            if not 0 <= b < m:
                raise ValueError(f"action value {b} outside carrier")
    e = monoid.identity
    for a in range(m):
        if action[e][a] != a:
            raise IdentityAxiom(a)
    mul = monoid.mul
    for t in range(n):
        for s in range(n):
            ts = mul[t][s]
            for a in range(m):
                if action[t][action[s][a]] != action[ts][a]:
                    raise AssocAxiom(t, s, a)
    return FiniteAct(monoid, action, name)


@lru_cache(maxsize=None)
def left_regular_act(monoid: FiniteMonoid) -> FiniteAct:
    """The monoid acting on itself by left multiplication."""
    return FiniteAct(monoid, monoid.mul, name=(monoid.name or "S") + ".reg")


@lru_cache(maxsize=None)
def trivial_act(monoid: FiniteMonoid) -> FiniteAct:
    return FiniteAct(monoid, tuple((0,) for _ in monoid.elements), name="theta")


# ---------------------------------------------------------------------------
# zeros, cyclic subacts, subact enumeration


@lru_cache(maxsize=None)
def zeros(act: FiniteAct) -> tuple[int, ...]:
    """Elements fixed by every monoid element (the one-element subacts)."""
    return tuple(
        a for a in act.elements if all(row[a] == a for row in act.action)
    )


@lru_cache(maxsize=None)
def cyclic_mask(act: FiniteAct, a: int) -> int:
    mask = 0
    for row in act.action:
        mask |= 1 << row[a]
    return mask


def cyclic_subact(act: FiniteAct, a: int) -> Subact:
    """The subact S*a generated by one element."""
    return Subact(act, mask_members(cyclic_mask(act, a)))


def is_closed_mask(act: FiniteAct, mask: int) -> bool:
    probe = mask
    a = 0
    while probe:
        if probe & 1:
            for row in act.action:
                if not (mask >> row[a]) & 1:
                    return False
        probe >>= 1
        a += 1
    return True


@lru_cache(maxsize=None)
def subact_masks(act: FiniteAct) -> tuple[int, ...]:
    """All non-empty action-closed subsets, in increasing bitmask order."""
    gens = [cyclic_mask(act, a) for a in act.elements]
    out = []
    for mask in range(1, 1 << act.size):
        closed = True
        probe = mask
        a = 0
        while probe:
            if probe & 1 and gens[a] & ~mask:
                closed = False
                break
            probe >>= 1
            a += 1
        if closed:
            out.append(mask)
    return tuple(out)


def subacts(act: FiniteAct) -> list[Subact]:
    return [Subact(act, mask_members(m)) for m in subact_masks(act)]


def subact_from_members(act: FiniteAct, members) -> Subact:
    sub = Subact(act, tuple(sorted(set(members))))
    if not sub.members:
        raise ValueError("subacts are non-empty")
    if not is_closed_mask(act, sub.mask):
        raise ValueError(f"{sub.members} is not action-closed")
    return sub


# ---------------------------------------------------------------------------
# quotients and sums


def rees_quotient(act: FiniteAct, parts) -> tuple[FiniteAct, ActHom]:
    """Collapse each subact in a disjoint system to a point.

    Singleton parts are allowed (they relabel only).  Returns the quotient act
    and the canonical surjection.
    """
    masks = []
    for part in parts:
        masks.append(part.mask if isinstance(part, Subact) else int(part))
    seen = 0
    for m in masks:
        if m & seen:
            raise NotDisjoint(f"overlapping parts in {masks}")
        if not is_closed_mask(act, m):
            raise ValueError("parts must be subacts")
        seen |= m
    blocks = [mask_members(m) for m in masks]
    for a in act.elements:
        if not (seen >> a) & 1:
            blocks.append((a,))
    blocks.sort(key=lambda b: b[0])
    index = [0] * act.size
    for i, block in enumerate(blocks):
        for a in block:
            index[a] = i
    action = tuple(
        tuple(index[row[block[0]]] for block in blocks) for row in act.action
    )
    quo = FiniteAct(act.monoid, action)
    pi = ActHom(act, quo, tuple(index))
    return quo, pi


def collapse_subact(act: FiniteAct, mask: int) -> tuple[FiniteAct, ActHom]:
    """Rees factor of the act over one subact (A/B)."""
    return rees_quotient(act, [mask])


def coproduct(a: FiniteAct, b: FiniteAct) -> tuple[FiniteAct, ActHom, ActHom]:
    """Disjoint union, first summand's carrier first."""
    total, injections = coproduct_many([a, b])
    return total, injections[0], injections[1]


def coproduct_many(acts) -> tuple[FiniteAct, list[ActHom]]:
    acts = list(acts)
    if not acts:
        raise ValueError("coproduct of no acts")
    monoid = acts[0].monoid
    if any(x.monoid != monoid for x in acts):
        raise ActMismatch("coproduct requires a common monoid")
    offsets = []
    total = 0
    for x in acts:
        offsets.append(total)
        total += x.size
    action = tuple(
        tuple(
            off + x.action[s][a]
            for x, off in zip(acts, offsets)
            for a in x.elements
        )
        for s in monoid.elements
    )
    out = FiniteAct(monoid, action)
    injections = [
        ActHom(x, out, tuple(range(off, off + x.size)))
        for x, off in zip(acts, offsets)
    ]
    return out, injections


def product(*acts: FiniteAct) -> FiniteAct:
    """Cartesian product with componentwise action; tuples in lex order."""
    if not acts:
        raise ValueError("product of no acts")
    monoid = acts[0].monoid
    if any(x.monoid != monoid for x in acts):
        raise ActMismatch("product requires a common monoid")
    tuples = [()]
    for x in acts:
        tuples = [t + (a,) for t in tuples for a in x.elements]
    index = {t: i for i, t in enumerate(tuples)}
    action = tuple(
        tuple(
            index[tuple(x.action[s][c] for x, c in zip(acts, t))]
            for t in tuples
        )
        for s in monoid.elements
    )
    return FiniteAct(monoid, action)


def product_tuples(*acts: FiniteAct) -> list[tuple[int, ...]]:
    """Carrier labelling used by product(), for tests and reports."""
    tuples = [()]
    for x in acts:
        tuples = [t + (a,) for t in tuples for a in x.elements]
    return tuples


# ---------------------------------------------------------------------------
# homomorphisms


def identity_hom(act: FiniteAct) -> ActHom:
    return ActHom(act, act, tuple(act.elements))


def compose(g: ActHom, f: ActHom) -> ActHom:
    """g after f."""
    if f.target != g.source:
        raise ActMismatch("homs do not compose")
    return ActHom(f.source, g.target, tuple(g.map[f.map[a]] for a in f.source.elements))


def is_equivariant(source: FiniteAct, target: FiniteAct, mapping) -> bool:
    if source.monoid != target.monoid:
        return False
    for s in source.monoid.elements:
        src_row = source.action[s]
        tgt_row = target.action[s]
        for a in source.elements:
            if mapping[src_row[a]] != tgt_row[mapping[a]]:
                return False
    return True


def hom(source: FiniteAct, target: FiniteAct, mapping) -> ActHom:
    mapping = tuple(mapping)
    if source.monoid != target.monoid:
        raise ActMismatch("homs need a common monoid")
    if len(mapping) != source.size:
        raise ValueError("map length must match source carrier")
    if not is_equivariant(source, target, mapping):
        raise ValueError(f"map {mapping} is not equivariant")
    return ActHom(source, target, mapping)


def _hom_search(source, target, partial, injective, limit=None):
    """Backtracking enumeration of equivariant maps extending ``partial``.

    Assignments propagate through the action, candidate images are tried in
    ascending order and elements are branched left to right, so complete maps
    come out in lexicographic order of their tuples.
    """
    n_src = source.size
    s_act = source.action
    t_act = target.action
    srange = range(source.monoid.size)
    f = [-1] * n_src
    used = 0

    def try_assign(a, b):
        # returns assigned stack for undo, or None on conflict
        nonlocal used
        stack = [(a, b)]
        done = []
        while stack:
            x, y = stack.pop()
            cur = f[x]
            if cur == y:
                continue
            if cur != -1 or (injective and (used >> y) & 1):
                for z in done:
                    used &= ~(1 << f[z])
                    f[z] = -1
                return None
            f[x] = y
            used |= 1 << y
            done.append(x)
            for s in srange:
                stack.append((s_act[s][x], t_act[s][y]))
        return done

    def undo(done):
        nonlocal used
        for z in done:
            used &= ~(1 << f[z])
            f[z] = -1

    seed = []
    for a, b in partial.items():
        done = try_assign(a, b)
        if done is None:
            undo(seed)
            return
        seed.extend(done)

    out = []

    def rec(a):
        if a == n_src:
            out.append(tuple(f))
            return len(out) != limit
        if f[a] != -1:
            return rec(a + 1)
        for b in target.elements:
            done = try_assign(a, b)
            if done is None:
                continue
            if not rec(a + 1):
                undo(done)
                return False
            undo(done)
        return True

    rec(0)
    undo(seed)
    yield from out


@lru_cache(maxsize=None)
def all_homs(source: FiniteAct, target: FiniteAct) -> tuple[ActHom, ...]:
    """Every equivariant map source -> target, lexicographically ordered."""
    if source.monoid != target.monoid:
        raise ActMismatch("homs need a common monoid")
    return tuple(
        ActHom(source, target, m) for m in _hom_search(source, target, {}, False)
    )


@lru_cache(maxsize=None)
def injective_homs(source: FiniteAct, target: FiniteAct) -> tuple[ActHom, ...]:
    if source.monoid != target.monoid:
        raise ActMismatch("homs need a common monoid")
    if source.size > target.size:
        return ()
    return tuple(
        ActHom(source, target, m) for m in _hom_search(source, target, {}, True)
    )


def hom_extension_exists(target_act, big, partial) -> bool:
    """Is there an equivariant map big -> target_act extending ``partial``?"""
    for _ in _hom_search(big, target_act, partial, False, limit=1):
        return True
    return False


def hom_extensions(target_act, big, partial) -> list[tuple[int, ...]]:
    return list(_hom_search(big, target_act, partial, False))


def find_isomorphism(a: FiniteAct, b: FiniteAct) -> ActHom | None:
    """First equivariant bijection in lexicographic order, if any."""
    if a.monoid != b.monoid or a.size != b.size:
        return None
    if sorted(_signature(a)) != sorted(_signature(b)):
        return None
    for m in _hom_search(a, b, {}, True, limit=1):
        return ActHom(a, b, m)
    return None


@lru_cache(maxsize=None)
def _signature(act: FiniteAct):
    # cheap per-element iso invariant: orbit size, zero flag, in-degrees
    sig = []
    for a in act.elements:
        indeg = tuple(sorted(row.count(a) for row in act.action))
        orbit = bin(cyclic_mask(act, a)).count("1")
        sig.append((orbit, indeg))
    return tuple(sig)


def invert(iso: ActHom) -> ActHom:
    if not iso.is_bijective():
        raise ValueError("only bijections invert")
    inv = [0] * iso.target.size
    for a, b in enumerate(iso.map):
        inv[b] = a
    return ActHom(iso.target, iso.source, tuple(inv))


# ---------------------------------------------------------------------------
# subact materialisation and canonical forms


@lru_cache(maxsize=None)
def _subact_act_cached(parent: FiniteAct, mask: int):
    members = mask_members(mask)
    pos = {a: i for i, a in enumerate(members)}
    action = tuple(
        tuple(pos[row[a]] for a in members) for row in parent.action
    )
    inner = FiniteAct(parent.monoid, action)
    incl = ActHom(inner, parent, members)
    return inner, incl


def subact_act(sub: Subact) -> tuple[FiniteAct, ActHom]:
    """Materialise a subact as an act plus its inclusion."""
    return _subact_act_cached(sub.parent, sub.mask)


def subact_act_by_mask(parent: FiniteAct, mask: int) -> tuple[FiniteAct, ActHom]:
    return _subact_act_cached(parent, mask)


def relabel(act: FiniteAct, perm) -> FiniteAct:
    """The isomorphic copy along carrier permutation a -> perm[a]."""
    inv = [0] * act.size
    for a, b in enumerate(perm):
        inv[b] = a
    action = tuple(
        tuple(perm[row[inv[b]]] for b in act.elements) for row in act.action
    )
    return FiniteAct(act.monoid, action)


@lru_cache(maxsize=None)
def canonical_form(act: FiniteAct) -> FiniteAct:
    """Lexicographically least relabeling of the action table."""
    best = None
    for perm in permutations(act.elements):
        cand = relabel(act, perm).action
        if best is None or cand < best:
            best = cand
    return FiniteAct(act.monoid, best)


@lru_cache(maxsize=None)
def canonical_monoid(monoid: FiniteMonoid) -> FiniteMonoid:
    """Least relabeling among permutations fixing the identity."""
    others = [x for x in monoid.elements if x != monoid.identity]
    best = None
    best_identity = 0
    for phi in permutations(range(len(others))):
        perm = [0] * monoid.size
        perm[monoid.identity] = 0
        for i, x in enumerate(others):
            perm[x] = phi[i] + 1
        mul = [[0] * monoid.size for _ in monoid.elements]
        for x in monoid.elements:
            for y in monoid.elements:
                mul[perm[x]][perm[y]] = perm[monoid.mul[x][y]]
        cand = tuple(tuple(row) for row in mul)
        if best is None or cand < best:
            best = cand
            best_identity = 0
    return FiniteMonoid(best, best_identity)
