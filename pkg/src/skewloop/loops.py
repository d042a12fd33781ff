"""The multiplicative loop L_f = S_f \\ {0}: translations, Mlt/Inn,
inner mappings, cyclicity, subloops, isomorphism testing, Latin squares.

Loop elements are indexed 0..N-1 by their semifield code minus one, so the
identity 1 gets index 0.  The multiplication table is a dense numpy array;
left/right translations are its rows/columns, which are permutations (the
Latin-square property, asserted at construction).
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Optional, Sequence

import numpy as np

from . import permgroup as pg
from .permgroup import BSGS, Perm
from .semifield import SemifieldCtx

SUBLOOP_SIZE_CAP = 700
ISO_SIZE_CAP = 255


class SizeCapExceeded(ValueError):
    pass


class ZeroElement(ValueError):
    pass


@dataclass
class LoopCtx:
    semifield: Optional[SemifieldCtx]
    table: np.ndarray  # table[i, j] = index of element_i * element_j
    identity: int = 0

    @property
    def size(self) -> int:
        return self.table.shape[0]

    def mul(self, i: int, j: int) -> int:
        return int(self.table[i, j])

    def left_translation(self, a: int) -> Perm:
        return self.table[a, :].astype(np.int32)

    def right_translation(self, a: int) -> Perm:
        return self.table[:, a].astype(np.int32)

    def left_inverse_of(self, a: int) -> int:
        """The b with b*a = identity."""
        return int(np.nonzero(self.table[:, a] == self.identity)[0][0])


def _assert_latin(table: np.ndarray, identity: int) -> None:
    n = table.shape[0]
    ref = np.arange(n)
    for i in range(n):
        if sorted(table[i, :].tolist()) != ref.tolist():
            raise AssertionError(f"row {i} is not a permutation")
        if sorted(table[:, i].tolist()) != ref.tolist():
            raise AssertionError(f"column {i} is not a permutation")
    if not (table[identity, :] == ref).all() or not (table[:, identity] == ref).all():
        raise AssertionError("identity row/column is not the identity map")


def build_loop(S: SemifieldCtx) -> LoopCtx:
    """Loop on the q^(nm)-1 nonzero elements, with the full index table.

    The table is built by exploiting that both translations are linear over
    the prime field: for each x the images of a basis under y -> x*y pin
    down the whole row.
    """
    K = S.tower.field
    p = K.p
    n_elems = S.size
    N = n_elems - 1
    D = S.dim_prime
    basis = S.basis()
    # columns: prime-field vectors of all nonzero codes, in code order 1..size-1
    Y = np.empty((D, N), dtype=np.int64)
    for code in range(1, n_elems):
        Y[:, code - 1] = S.to_vector(code)
    # integer weights turning a coordinate vector back into a code
    w = np.empty(D, dtype=np.int64)
    for i in range(S.m):
        for j in range(K.l):
            w[i * K.l + j] = (p ** j) * (K.order ** i)
    table = np.empty((N, N), dtype=np.int32)
    for code in range(1, n_elems):
        M = np.empty((D, D), dtype=np.int64)
        for col, b in enumerate(basis):
            M[:, col] = S.to_vector(S.mul(code, b))
        images = (M @ Y) % p          # D x N coordinate vectors of x*y
        codes = w @ images            # back to integer codes
        table[code - 1, :] = codes - 1
    loop = LoopCtx(semifield=S, table=table)
    _assert_latin(table, loop.identity)
    return loop


def loop_from_table(table: Sequence[Sequence[int]], identity: int = 0) -> LoopCtx:
    arr = np.asarray(table, dtype=np.int32)
    loop = LoopCtx(semifield=None, table=arr, identity=identity)
    _assert_latin(arr, identity)
    return loop


# ---------------------------------------------------------------------------
# multiplication and inner mapping groups


def mlt_group(L: LoopCtx, seed: int = 0) -> BSGS:
    """Exact Mlt(L): seed a few translations, then sift every L_a and R_a,
    extending the chain on any failure."""
    N = L.size
    if N > pg.DEGREE_CAP:
        raise pg.DegreeCapExceeded(f"loop of size {N} exceeds the Mlt degree cap")
    rng = random.Random(seed)
    picks = {1 % N, N - 1}
    while len(picks) < min(10, N):
        picks.add(rng.randrange(N))
    gens = []
    for a in picks:
        gens.append(L.left_translation(a))
        gens.append(L.right_translation(a))
    G = pg.bsgs_build(gens, base_hint=[L.identity])
    changed = True
    while changed:
        changed = False
        for a in range(N):
            for perm in (L.left_translation(a), L.right_translation(a)):
                if not G.contains(perm):
                    G.extend(perm)
                    changed = True
    if len(G.transversals[0]) != N:
        raise pg.NotTransitive("Mlt(L) is not transitive")
    return G


def inn_group(L: LoopCtx, M: BSGS, cross_check: bool = True
              ) -> tuple[int, list[Perm]]:
    """|Inn| = |Mlt|/N with stabilizer generators; optionally cross-checked
    against the T_x / L_{x,y} / R_{x,y} generating set."""
    order = pg.stabilizer_order(M, L.identity)
    gens = pg.stabilizer_generators(M, L.identity)
    if cross_check:
        rng = random.Random(1)
        sample = [(rng.randrange(L.size), rng.randrange(L.size)) for _ in range(20)]
        for x, y in sample:
            for kind in ("T", "L", "R"):
                perm = inner_mapping(L, kind, x, y).perm
                if not M.contains(perm):
                    raise AssertionError(f"inner mapping {kind}_{x},{y} outside Mlt")
        if L.size <= 80:
            sub = inn_from_generators(L)
            if sub.order != order:
                raise AssertionError(
                    f"Inn order {order} != T/L/R-generated order {sub.order}")
    return order, gens


def inn_from_generators(L: LoopCtx) -> BSGS:
    """The subgroup generated by all T_x, L_{x,y}, R_{x,y} (small loops)."""
    N = L.size
    lefts = [L.left_translation(a) for a in range(N)]
    rights = [L.right_translation(a) for a in range(N)]
    linv = [pg.inverse(g) for g in lefts]
    rinv = [pg.inverse(g) for g in rights]
    gens = [pg.compose(linv[x], rights[x]) for x in range(N)]
    G = pg.bsgs_build([g for g in gens if not pg.is_identity(g)] or [pg.identity_perm(N)])
    for x in range(N):
        for y in range(N):
            yx = L.mul(y, x)
            lg = pg.compose(linv[yx], pg.compose(lefts[y], lefts[x]))
            if not G.contains(lg):
                G.extend(lg)
            xy = L.mul(x, y)
            rg = pg.compose(rinv[xy], pg.compose(rights[y], rights[x]))
            if not G.contains(rg):
                G.extend(rg)
    return G


@dataclass
class InnerMapping:
    kind: str
    x: int
    y: Optional[int]
    perm: Perm


def inner_mapping(L: LoopCtx, kind: str, x: int, y: Optional[int] = None) -> InnerMapping:
    """T_x = L_x^-1 R_x, L_{x,y} = L_{yx}^-1 L_y L_x, R_{x,y} = R_{xy}^-1 R_y R_x."""
    lx = L.left_translation(x)
    rx = L.right_translation(x)
    if kind == "T":
        perm = pg.compose(pg.inverse(lx), rx)
    elif kind == "L":
        assert y is not None
        ly = L.left_translation(y)
        lyx = L.left_translation(L.mul(y, x))
        perm = pg.compose(pg.inverse(lyx), pg.compose(ly, lx))
    elif kind == "R":
        assert y is not None
        ry = L.right_translation(y)
        rxy = L.right_translation(L.mul(x, y))
        perm = pg.compose(pg.inverse(rxy), pg.compose(ry, rx))
    else:
        raise ValueError(f"unknown inner mapping kind {kind!r}")
    if int(perm[L.identity]) != L.identity:
        raise AssertionError("inner mapping does not fix the identity")
    return InnerMapping(kind=kind, x=x, y=y, perm=perm)


# ---------------------------------------------------------------------------
# cyclicity


def _principal_orbit_size(L: LoopCtx, a: int, side: str) -> int:
    seen = np.zeros(L.size, dtype=bool)
    cur = a
    count = 0
    while not seen[cur]:
        seen[cur] = True
        count += 1
        cur = L.mul(cur, a) if side == "left" else L.mul(a, cur)
    return count


def cyclicity(L: LoopCtx) -> tuple[bool, bool, dict]:
    """Left/right cyclicity by scanning every element as a candidate
    generator of principal powers."""
    left_wit = right_wit = None
    N = L.size
    for a in range(N):
        if left_wit is None and _principal_orbit_size(L, a, "left") == N:
            left_wit = a
        if right_wit is None and _principal_orbit_size(L, a, "right") == N:
            right_wit = a
        if left_wit is not None and right_wit is not None:
            break
    return (left_wit is not None, right_wit is not None,
            {"left": left_wit, "right": right_wit})


# ---------------------------------------------------------------------------
# subloops and Lagrange properties


def _closure(L: LoopCtx, seed: Sequence[int]) -> frozenset:
    member = np.zeros(L.size, dtype=bool)
    elems: list[int] = []
    frontier: list[int] = []
    for s in set(seed):
        member[s] = True
        elems.append(s)
        frontier.append(s)
    while frontier:
        cur = np.array(elems, dtype=np.int64)
        new = np.array(frontier, dtype=np.int64)
        prods = np.unique(np.concatenate([
            L.table[np.ix_(new, cur)].ravel(),
            L.table[np.ix_(cur, new)].ravel(),
        ]))
        frontier = [int(x) for x in prods if not member[x]]
        for x in frontier:
            member[x] = True
            elems.append(x)
    return frozenset(elems)


def subloops(L: LoopCtx) -> list[frozenset]:
    """Full subloop collection: closures of all 1- and 2-element seeds,
    joined pairwise to a fixpoint."""
    N = L.size
    if N > SUBLOOP_SIZE_CAP:
        raise SizeCapExceeded(f"subloop search capped at {SUBLOOP_SIZE_CAP}")
    full = frozenset(range(N))
    found: set[frozenset] = set()
    singles: dict[int, frozenset] = {}
    for a in range(N):
        c = _closure(L, [a])
        singles[a] = c
        found.add(c)
    for a in range(N):
        if singles[a] == full:
            continue
        for b in range(a + 1, N):
            if b in singles[a] or singles[b] == full:
                continue
            found.add(_closure(L, [a, b]))
    # pairwise joins until stable
    while True:
        new = set()
        lst = sorted(found, key=len)
        for i, c1 in enumerate(lst):
            for c2 in lst[i + 1:]:
                if c1 <= c2 or c2 <= c1:
                    continue
                j = _closure(L, list(c1 | c2))
                if j not in found:
                    new.add(j)
        if not new:
            break
        found |= new
    found.add(full)
    return sorted(found, key=len)


def subloops_and_lagrange(L: LoopCtx) -> tuple[list[int], bool, bool]:
    """Subloop orders plus weak/strong Lagrange verdicts."""
    subs = subloops(L)
    orders = sorted({len(s) for s in subs})
    N = L.size
    weak = all(N % len(s) == 0 for s in subs)
    strong = True
    for m_sub in subs:
        for inner in subs:
            if inner <= m_sub and len(m_sub) % len(inner) != 0:
                strong = False
    return orders, weak, strong


# ---------------------------------------------------------------------------
# isomorphism


def _element_profile(L: LoopCtx) -> list[tuple]:
    prof = []
    for a in range(L.size):
        lp = _principal_orbit_size(L, a, "left")
        rp = _principal_orbit_size(L, a, "right")
        comm = int((L.table[a, :] == L.table[:, a]).sum())
        prof.append((lp, rp, comm))
    return prof


def _generating_trace(L: LoopCtx) -> tuple[list[int], list[tuple]]:
    """Greedy generators plus a construction trace.

    The trace is a list of instructions: ('gen', g_idx) or ('mul', i, j)
    meaning element k is trace[i] * trace[j]; every loop element appears
    exactly once.
    """
    N = L.size
    gens: list[int] = []
    trace: list[tuple] = []
    pos: dict[int, int] = {}

    def close() -> None:
        changed = True
        while changed:
            changed = False
            known = list(pos.items())
            for a, ia in known:
                for b, ib in list(pos.items()):
                    ab = L.mul(a, b)
                    if ab not in pos:
                        pos[ab] = len(trace)
                        trace.append(("mul", ia, ib))
                        changed = True

    while len(pos) < N:
        best, best_gain = None, -1
        remaining = [a for a in range(N) if a not in pos]
        for a in remaining:
            gain = len(_closure(L, list(pos.keys()) + [a]))
            if gain > best_gain:
                best, best_gain = a, gain
            if gain == N:
                break
        gens.append(best)
        pos[best] = len(trace)
        trace.append(("gen", len(gens) - 1))
        close()
    elem_at = [None] * N
    for e, i in pos.items():
        elem_at[i] = e
    return gens, trace


def loop_isomorphic(L1: LoopCtx, L2: LoopCtx) -> Optional[list[int]]:
    """A witness bijection phi with phi(xy) = phi(x)phi(y), or None.

    Backtracking over images of a greedy generating set, pruned by
    per-element invariant profiles; images of all other elements follow
    from the construction trace.
    """
    if L1.size != L2.size:
        return None
    N = L1.size
    if N > ISO_SIZE_CAP:
        raise SizeCapExceeded(f"isomorphism search capped at {ISO_SIZE_CAP}")
    prof1, prof2 = _element_profile(L1), _element_profile(L2)
    if sorted(prof1) != sorted(prof2):
        return None
    gens, trace = _generating_trace(L1)
    # recover element of L1 at each trace position
    elems1: list[int] = []
    for instr in trace:
        if instr[0] == "gen":
            elems1.append(gens[instr[1]])
        else:
            elems1.append(L1.mul(elems1[instr[1]], elems1[instr[2]]))
    candidates = [[b for b in range(N) if prof2[b] == prof1[g]] for g in gens]

    def attempt(images: list[int]) -> Optional[list[int]]:
        mapped: list[int] = []
        used = set()
        for k, instr in enumerate(trace):
            if instr[0] == "gen":
                val = images[instr[1]]
            else:
                val = L2.mul(mapped[instr[1]], mapped[instr[2]])
            if val in used:
                return None
            used.add(val)
            mapped.append(val)
        phi = [0] * N
        for e1, e2 in zip(elems1, mapped):
            phi[e1] = e2
        for a in range(N):
            for b in range(N):
                if phi[L1.mul(a, b)] != L2.mul(phi[a], phi[b]):
                    return None
        return phi

    def backtrack(k: int, chosen: list[int]) -> Optional[list[int]]:
        if k == len(gens):
            return attempt(chosen)
        for img in candidates[k]:
            if img in chosen:
                continue
            res = backtrack(k + 1, chosen + [img])
            if res is not None:
                return res
        return None

    return backtrack(0, [])


# ---------------------------------------------------------------------------
# Latin square export / import


def latin_square(L: LoopCtx) -> np.ndarray:
    return L.table.copy()


def write_latin_csv(L: LoopCtx, path: str) -> None:
    import csv

    legend = None
    if L.semifield is not None:
        S = L.semifield
        from . import skewpoly as sp
        legend = [sp.format_poly(S.tower, S.decode(code)) for code in range(1, S.size)]
    with open(path, "w", newline="") as fh:
        wr = csv.writer(fh)
        wr.writerow(["N", L.size])
        wr.writerow(["legend"] + (legend or []))
        for i in range(L.size):
            wr.writerow(L.table[i, :].tolist())


def read_latin_csv(path: str) -> LoopCtx:
    import csv

    with open(path) as fh:
        rd = csv.reader(fh)
        header = next(rd)
        n = int(header[1])
        next(rd)  # legend
        rows = [[int(v) for v in next(rd)] for _ in range(n)]
    return loop_from_table(rows)


# ---------------------------------------------------------------------------
# report


def loop_report(L: LoopCtx, with_mlt: bool = True, seed: int = 0) -> dict:
    out: dict = {"order": L.size}
    if with_mlt and L.size <= pg.DEGREE_CAP:
        M = mlt_group(L, seed=seed)
        inn_order, _ = inn_group(L, M, cross_check=False)
        out["mlt_order"] = str(M.order)
        out["inn_order"] = str(inn_order)
    lc, rc, wit = cyclicity(L)
    out["left_cyclic"] = lc
    out["right_cyclic"] = rc
    out["cyclic_witnesses"] = wit
    return out
