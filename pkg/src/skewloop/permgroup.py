"""Permutation groups: Schreier-Sims stabilizer chains with exact orders.

Permutations are numpy int arrays of images; (g*h)(x) = g(h(x)) is the
fancy-indexing g[h].  The chain is built by the deterministic Schreier-Sims
procedure, so every Schreier generator is verified to sift to the identity
before the order is reported.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import factorial
from typing import Optional, Sequence

import numpy as np

DEGREE_CAP = 5000


class DegreeMismatch(ValueError):
    pass


class NotTransitive(ValueError):
    pass


class DegreeCapExceeded(ValueError):
    pass


class TooLarge(ValueError):
    pass


Perm = np.ndarray


def identity_perm(n: int) -> Perm:
    return np.arange(n, dtype=np.int32)


def compose(g: Perm, h: Perm) -> Perm:
    """Apply h first, then g."""
    return g[h]


def inverse(g: Perm) -> Perm:
    inv = np.empty_like(g)
    inv[g] = np.arange(len(g), dtype=g.dtype)
    return inv


def is_identity(g: Perm) -> bool:
    return bool((g == np.arange(len(g), dtype=g.dtype)).all())


def perm_from_images(images: Sequence[int]) -> Perm:
    arr = np.asarray(images, dtype=np.int32)
    if sorted(arr.tolist()) != list(range(len(arr))):
        raise ValueError("not a permutation")
    return arr


class BSGS:
    """Base and strong generating set with explicit transversals."""

    def __init__(self, degree: int):
        if degree > DEGREE_CAP:
            raise DegreeCapExceeded(f"degree {degree} exceeds cap {DEGREE_CAP}")
        self.degree = degree
        self.base: list[int] = []
        # sgs[i]: generators fixing base[:i]; sgs has len(base)+1 slots is not
        # needed -- level i generators live in sgs[i]
        self.sgs: list[list[Perm]] = []
        self.transversals: list[dict[int, Perm]] = []

    # -- chain bookkeeping ----------------------------------------------

    def _gens_at(self, level: int) -> list[Perm]:
        out: list[Perm] = []
        for l in range(level, len(self.sgs)):
            out.extend(self.sgs[l])
        return out

    def _recompute_transversal(self, level: int) -> None:
        pt = self.base[level]
        gens = self._level_gens(level)
        trans: dict[int, Perm] = {pt: identity_perm(self.degree)}
        frontier = [pt]
        while frontier:
            nxt = []
            for q in frontier:
                u = trans[q]
                for g in gens:
                    r = int(g[q])
                    if r not in trans:
                        trans[r] = compose(g, u)
                        nxt.append(r)
            frontier = nxt
        self.transversals[level] = trans

    def _level_gens(self, level: int) -> list[Perm]:
        """Generators of the level-th stabilizer: those fixing base[:level]."""
        base_prefix = self.base[:level]
        out = []
        for lst in self.sgs:
            for g in lst:
                if all(int(g[b]) == b for b in base_prefix):
                    out.append(g)
        return out

    def _append_base_point(self, moved_by: Perm) -> None:
        for pt in range(self.degree):
            if int(moved_by[pt]) != pt:
                self.base.append(pt)
                self.sgs.append([])
                self.transversals.append({})
                return
        raise AssertionError("identity passed as a new strong generator")

    # -- sifting ---------------------------------------------------------

    def sift(self, g: Perm, start_level: int = 0) -> tuple[Perm, int]:
        """Strip g through the chain; returns (residue, level reached)."""
        h = g
        for l in range(start_level, len(self.base)):
            pt = int(h[self.base[l]])
            u = self.transversals[l].get(pt)
            if u is None:
                return h, l
            h = compose(inverse(u), h)
        return h, len(self.base)

    def contains(self, g: Perm) -> bool:
        if len(g) != self.degree:
            raise DegreeMismatch("degree mismatch")
        residue, _ = self.sift(g)
        return is_identity(residue)

    # -- deterministic Schreier-Sims -------------------------------------

    def _schreier_sims(self) -> None:
        i = len(self.base) - 1
        while i >= 0:
            self._recompute_transversal(i)
            done = self._check_level(i)
            if done:
                i -= 1

    def _check_level(self, i: int) -> bool:
        """Process all Schreier generators at level i.  Returns True when the
        level verifies clean; False after extending the chain deeper."""
        gens = self._level_gens(i)
        trans = self.transversals[i]
        for pt, u in list(trans.items()):
            for g in gens:
                target = int(g[pt])
                ug = compose(g, u)
                sg = compose(inverse(trans[target]), ug)
                if is_identity(sg):
                    continue
                residue, j = self.sift(sg, i + 1)
                if is_identity(residue):
                    continue
                if j == len(self.base):
                    self._append_base_point(residue)
                self.sgs[j].append(residue)
                for l in range(j, len(self.base)):
                    self._recompute_transversal(l)
                # re-verify the deeper levels first
                k = len(self.base) - 1
                while k > i:
                    self._recompute_transversal(k)
                    if self._check_level(k):
                        k -= 1
                return False
        return True

    def extend(self, g: Perm) -> bool:
        """Add a permutation not yet in the group; returns True if it was new."""
        if len(g) != self.degree:
            raise DegreeMismatch("degree mismatch")
        residue, j = self.sift(g)
        if is_identity(residue):
            return False
        if j == len(self.base):
            self._append_base_point(residue)
        self.sgs[j].append(residue)
        for l in range(len(self.base)):
            self._recompute_transversal(l)
        self._schreier_sims()
        return True

    # -- reports ----------------------------------------------------------

    @property
    def order(self) -> int:
        out = 1
        for t in self.transversals:
            out *= len(t)
        return out

    def orbit_lengths(self) -> list[int]:
        return [len(t) for t in self.transversals]

    def strong_generators(self) -> list[Perm]:
        return [g for lst in self.sgs for g in lst]

    def json(self) -> dict:
        return {
            "degree": self.degree,
            "base": list(self.base),
            "order": str(self.order),
            "orbit_lengths": self.orbit_lengths(),
        }


def bsgs_build(gens: Sequence[Perm], base_hint: Optional[Sequence[int]] = None) -> BSGS:
    gens = [np.asarray(g, dtype=np.int32) for g in gens]
    if not gens:
        b = BSGS(degree=0 if base_hint is None else 0)
        b.degree = 0
        return b
    degree = len(gens[0])
    if any(len(g) != degree for g in gens):
        raise DegreeMismatch("generators act on different point sets")
    b = BSGS(degree)
    for pt in base_hint or []:
        b.base.append(int(pt))
        b.sgs.append([])
        b.transversals.append({})
    nontrivial = [g for g in gens if not is_identity(g)]
    if not b.base and nontrivial:
        b._append_base_point(nontrivial[0])
    for g in nontrivial:
        b.sgs[0].append(g)
    if b.base:
        for l in range(len(b.base)):
            b._recompute_transversal(l)
        b._schreier_sims()
    # deterministic verification: every strong generator sifts to identity
    for g in b.strong_generators():
        residue, _ = b.sift(g)
        assert is_identity(residue), "strong generator fails to sift"
    return b


def bsgs_contains(G: BSGS, g: Perm) -> bool:
    return G.contains(np.asarray(g, dtype=np.int32))


def stabilizer_order(G: BSGS, point: int) -> int:
    """|Stab(point)| = |G|/degree for a transitive G (orbit-stabilizer)."""
    if not G.base or len(G.transversals[0]) != G.degree:
        raise NotTransitive("group is not transitive on its degree")
    return G.order // G.degree


def stabilizer_generators(G: BSGS, point: int) -> list[Perm]:
    """Generators of Stab(point); requires the chain to start at point."""
    if not G.base or G.base[0] != point:
        raise ValueError("build the chain with base_hint=[point] first")
    return G._level_gens(1)


# ---------------------------------------------------------------------------
# small-group identification


@dataclass
class GroupId:
    tag: str
    order: int
    params: dict = field(default_factory=dict)
    witness: tuple = ()
    order_spectrum: Optional[dict[int, int]] = None


def _element_order(mul: Sequence[Sequence[int]], e: int, a: int) -> int:
    k, x = 1, a
    while x != e:
        x = mul[x][a]
        k += 1
    return k


def _inverse_in_table(mul: Sequence[Sequence[int]], e: int, a: int) -> int:
    return next(b for b in range(len(mul)) if mul[a][b] == e)


def _cyclic_subgroup(mul, e, a) -> set[int]:
    out = {e}
    x = a
    while x != e:
        out.add(x)
        x = mul[x][a]
    return out


def identify_small_group(mul: Sequence[Sequence[int]], identity: int = 0) -> GroupId:
    """Identify a group given by its multiplication table (order <= 512)."""
    n = len(mul)
    if n > 512:
        raise TooLarge(f"group of order {n} exceeds the identification bound")
    e = identity
    orders = {a: _element_order(mul, e, a) for a in range(n)}
    spectrum: dict[int, int] = {}
    for o in orders.values():
        spectrum[o] = spectrum.get(o, 0) + 1
    # cyclic
    gen = next((a for a in range(n) if orders[a] == n), None)
    if gen is not None:
        return GroupId(tag="cyclic", order=n, params={"k": n}, witness=(gen,),
                       order_spectrum=spectrum)
    # dicyclic Dic_k of order 4k: <a,b | a^(2k)=1, b^2=a^k, b a b^-1 = a^-1>
    if n % 4 == 0:
        k = n // 4
        cands_a = [a for a in range(n) if orders[a] == 2 * k]
        for a in cands_a:
            cyc = _cyclic_subgroup(mul, e, a)
            a_inv = _inverse_in_table(mul, e, a)
            a_k = a
            for _ in range(k - 1):
                a_k = mul[a_k][a]
            for b in range(n):
                if b in cyc:
                    continue
                if mul[b][b] != a_k:
                    continue
                b_inv = _inverse_in_table(mul, e, b)
                if mul[mul[b][a]][b_inv] == a_inv:
                    return GroupId(tag="dicyclic", order=n, params={"k": k},
                                   witness=(a, b), order_spectrum=spectrum)
    # Z/a x| Z/b with action x -> x^q
    for da in range(n - 1, 1, -1):
        if n % da:
            continue
        db = n // da
        if db == 1:
            continue
        xs = [x for x in range(n) if orders[x] == da]
        ys = [y for y in range(n) if orders[y] == db]
        for x in xs:
            cyc = _cyclic_subgroup(mul, e, x)
            x_powers = {e: 0}
            z, i = x, 1
            while z != e:
                x_powers[z] = i
                z = mul[z][x]
                i += 1
            for y in ys:
                if y in cyc:
                    continue
                y_inv = _inverse_in_table(mul, e, y)
                conj = mul[mul[y][x]][y_inv]
                qexp = x_powers.get(conj)
                if qexp is None:
                    continue
                # all x^i y^j must be distinct
                seen = set()
                yj = e
                ok = True
                for _ in range(db):
                    xi = e
                    for _ in range(da):
                        seen.add(mul[xi][yj])
                        xi = mul[xi][x]
                    yj = mul[yj][y]
                if len(seen) == n:
                    return GroupId(tag="semidirect", order=n,
                                   params={"a": da, "b": db, "q": qexp},
                                   witness=(x, y), order_spectrum=spectrum)
    return GroupId(tag="unknown", order=n, order_spectrum=spectrum)


def identify_from_perms(perms: Sequence[Perm]) -> GroupId:
    """Close a set of permutations under composition and identify the group."""
    elems: list[bytes] = []
    arrs: list[Perm] = []
    index: dict[bytes, int] = {}

    def add(a: Perm) -> int:
        key = a.tobytes()
        if key not in index:
            index[key] = len(arrs)
            arrs.append(a)
            elems.append(key)
        return index[key]

    if not perms:
        raise ValueError("need at least one permutation")
    add(identity_perm(len(perms[0])))
    for g in perms:
        add(np.asarray(g, dtype=np.int32))
    # fixpoint closure under composition
    done = 0
    while done < len(arrs):
        hi = len(arrs)
        for i in range(hi):
            for j in range(max(i, done), hi):
                add(compose(arrs[i], arrs[j]))
                add(compose(arrs[j], arrs[i]))
                if len(arrs) > 512:
                    raise TooLarge("closure exceeds identification bound")
        done = hi
    mul = [[index[compose(arrs[i], arrs[j]).tobytes()] for j in range(len(arrs))]
           for i in range(len(arrs))]
    return identify_small_group(mul, identity=0)


# ---------------------------------------------------------------------------
# classical linear group orders (sandwich bound helpers)


def gl_order(d: int, q: int) -> int:
    out = q ** (d * (d - 1) // 2)
    for i in range(1, d + 1):
        out *= q ** i - 1
    return out


def sl_order(d: int, q: int) -> int:
    return gl_order(d, q) // (q - 1)
