"""Exhaustive catalogs of small monoids and acts, deduplicated up to
isomorphism, with the radicals registered for verification sweeps."""

from __future__ import annotations

from functools import lru_cache

from . import radical as rd
from .congruence import CON_BOUND_DEFAULT, all_congruences, quotient
from .core import (
    FiniteAct,
    FiniteMonoid,
    canonical_form,
    canonical_monoid,
    left_regular_act,
    validate_act,
    validate_monoid,
)
from .errors import RadactError


def _monoid_tables(order):
    """All monoid tables on 0..order-1 with identity 0, via backtracking."""
    n = order
    mul = [[-1] * n for _ in range(n)]
    for x in range(n):
        mul[0][x] = x
        mul[x][0] = x
    cells = [(x, y) for x in range(1, n) for y in range(1, n)]

    def consistent(x, y):
        # check associativity triples whose entries are all defined
        v = mul[x][y]
        for z in range(n):
            xy_z = mul[v][z]
            if xy_z != -1 and mul[y][z] != -1:
                x_yz = mul[x][mul[y][z]]
                if x_yz != -1 and xy_z != x_yz:
                    return False
            zx = mul[z][x]
            if zx != -1 and mul[zx][y] != -1:
                z_xy = mul[z][v]
                if z_xy != -1 and mul[zx][y] != z_xy:
                    return False
        return True

    out = []

    def associative():
        for a in range(n):
            for b in range(n):
                ab = mul[a][b]
                for c in range(n):
                    if mul[ab][c] != mul[a][mul[b][c]]:
                        return False
        return True

    def rec(i):
        if i == len(cells):
            if associative():
                out.append(tuple(tuple(row) for row in mul))
            return
        x, y = cells[i]
        for v in range(n):
            mul[x][y] = v
            if consistent(x, y):
                rec(i + 1)
        mul[x][y] = -1

    rec(0)
    return out


def enumerate_monoids(max_order: int) -> tuple[FiniteMonoid, ...]:
    """All monoids of order <= max_order, one per isomorphism class."""
    out = []
    for n in range(1, max_order + 1):
        seen = {}
        for table in _monoid_tables(n):
            raw = FiniteMonoid(table, 0)
            canon = canonical_monoid(raw)
            seen.setdefault(canon.mul, canon)
        chosen = sorted(seen.values(), key=lambda m: m.mul)
        for k, monoid in enumerate(chosen):
            named = validate_monoid(monoid.mul, 0, name=f"M{n}.{k}")
            out.append(named)
    return tuple(out)


def act_tables(monoid: FiniteMonoid, size: int, prefix: FiniteAct | None = None):
    """All action tables of the given carrier size, optionally extending an
    act placed on the first carrier indices.  Deterministic lexicographic
    order of the free cells."""
    n = monoid.size
    m = size
    mul = monoid.mul
    table = [[-1] * m for _ in range(n)]
    for a in range(m):
        table[monoid.identity][a] = a
    start = 0
    if prefix is not None:
        if prefix.monoid != monoid or prefix.size > size:
            raise ValueError("prefix act does not fit")
        start = prefix.size
        for s in range(n):
            for a in range(start):
                table[s][a] = prefix.action[s][a]
    cells = [
        (s, a)
        for a in range(start, m)
        for s in range(n)
        if s != monoid.identity
    ]

    def consistent():
        for t in range(n):
            trow = table[t]
            for s in range(n):
                ts = mul[t][s]
                srow = table[s]
                tsrow = table[ts]
                for a in range(m):
                    sa = srow[a]
                    if sa == -1:
                        continue
                    lhs = trow[sa]
                    rhs = tsrow[a]
                    if lhs != -1 and rhs != -1 and lhs != rhs:
                        return False
        return True

    def rec(i):
        if i == len(cells):
            yield tuple(tuple(row) for row in table)
            return
        s, a = cells[i]
        for v in range(m):
            table[s][a] = v
            if consistent():
                yield from rec(i + 1)
        table[s][a] = -1

    yield from rec(0)


def enumerate_acts(monoid: FiniteMonoid, max_size: int) -> tuple[FiniteAct, ...]:
    """All acts over the monoid of size <= max_size, one per iso class."""
    out = []
    for m in range(1, max_size + 1):
        seen = {}
        for table in act_tables(monoid, m):
            canon = canonical_form(FiniteAct(monoid, table))
            seen.setdefault(canon.action, canon)
        chosen = sorted(seen.values(), key=lambda a: a.action)
        for k, act in enumerate(chosen):
            named = validate_act(monoid, act.action, name=f"{monoid.name}.a{m}.{k}")
            out.append(named)
    return tuple(out)


class Universe:
    """Catalog of monoids and acts within bounds, plus registered radicals."""

    def __init__(self, monoid_max=3, act_max=4, hull_bound=6,
                 con_bound=CON_BOUND_DEFAULT):
        self.monoid_max = monoid_max
        self.act_max = act_max
        self.hull_bound = hull_bound
        self.con_bound = con_bound
        self.monoids = enumerate_monoids(monoid_max)
        self._acts_by_monoid = {
            m: enumerate_acts(m, act_max) for m in self.monoids
        }
        self.acts = tuple(
            a for m in self.monoids for a in self._acts_by_monoid[m]
        )
        self.radicals = []
        self._members = {}
        for m in self.monoids:
            for a in self._acts_by_monoid[m]:
                self._members[(m, canonical_form(a).action)] = a

    def acts_over(self, monoid: FiniteMonoid) -> tuple[FiniteAct, ...]:
        return self._acts_by_monoid[monoid]

    def find_member(self, act: FiniteAct) -> FiniteAct | None:
        """The catalog act isomorphic to the given one, if within bounds."""
        if act.size > self.act_max:
            return None
        return self._members.get((act.monoid, canonical_form(act).action))

    def register_radical(self, r: rd.Radical) -> rd.Radical:
        """Add a radical; induced ones must pass the semisimple-class
        closure checks, otherwise registration is refused with a witness."""
        if any(existing.name == r.name for existing in self.radicals):
            raise RadactError(f"radical named {r.name!r} already registered")
        if r.kind == "induced-from-semisimple-class":
            rd.verify_semisimple_class(r.oracle.membership, self)
        self.radicals.append(r)
        return r

    def radical(self, name: str) -> rd.Radical:
        for r in self.radicals:
            if r.name == name:
                return r
        raise RadactError(f"no radical named {name!r} is registered")

    def cyclic_acts(self, monoid: FiniteMonoid) -> tuple[FiniteAct, ...]:
        return _cyclic_acts(monoid, self.con_bound)


@lru_cache(maxsize=None)
def _cyclic_acts(monoid: FiniteMonoid, con_bound: int) -> tuple[FiniteAct, ...]:
    """Quotients of the left regular act: every cyclic act up to iso."""
    reg = left_regular_act(monoid)
    return tuple(
        quotient(reg, chi)[0] for chi in all_congruences(reg, con_bound)
    )


def default_universe(monoid_max=3, act_max=4, hull_bound=6,
                     con_bound=CON_BOUND_DEFAULT) -> Universe:
    """The standard verification universe with the stock radicals."""
    u = Universe(monoid_max, act_max, hull_bound, con_bound)
    u.register_radical(rd.delta_radical())
    u.register_radical(rd.nabla_radical())
    rg = u.register_radical(rd.rg_radical())
    u.register_radical(rd.lr_induced_radical(rg, "t_LrG", con_bound))
    return u
