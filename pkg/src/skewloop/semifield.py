"""The semifield S_f = K[t;sigma]/K[t;sigma]f and its structure maps.

Elements of S_f are the skew polynomials of degree < m.  For table work
they are encoded as integers in base |K|: digit i is the coefficient of
t^i.  The product is the remainder of the ring product under right
division by f.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Optional, Sequence

from . import skewpoly as sp
from .gf import TowerCtx
from .linalg import nullspace, solve


class ReducibleF(ValueError):
    """f reducible: S_f would have zero divisors."""


class RightInvariantF(ValueError):
    """f right-invariant: S_f would be associative."""


class ZeroElement(ValueError):
    pass


@dataclass
class SemifieldCtx:
    tower: TowerCtx
    f: sp.SkewPoly
    m: int = field(init=False)
    size: int = field(init=False)
    dim_prime: int = field(init=False)

    def __post_init__(self) -> None:
        self.m = sp.degree(self.f)
        K = self.tower.field
        self.size = K.order ** self.m
        self.dim_prime = K.l * self.m

    # -- element encoding ------------------------------------------------

    def encode(self, g: sp.SkewPoly) -> int:
        K = self.tower.field
        code = 0
        for c in reversed(g + (0,) * (self.m - len(g))):
            code = code * K.order + c
        return code

    def decode(self, code: int) -> sp.SkewPoly:
        K = self.tower.field
        digits = []
        for _ in range(self.m):
            digits.append(code % K.order)
            code //= K.order
        return sp.poly(digits)

    @property
    def one(self) -> int:
        return 1

    @property
    def t(self) -> int:
        return self.tower.field.order

    def add(self, x: int, y: int) -> int:
        K = self.tower.field
        Q = K.order
        out, mult = 0, 1
        for _ in range(self.m):
            out += K.add(x % Q, y % Q) * mult
            x //= Q
            y //= Q
            mult *= Q
        return out

    def mul(self, x: int, y: int) -> int:
        prod = sp.skew_mul(self.tower, self.decode(x), self.decode(y))
        if sp.degree(prod) >= self.m:
            prod = sp.right_rem(self.tower, prod, self.f)
        return self.encode(prod)

    def scalar(self, c: int, x: int) -> int:
        """Left multiplication by c in K (degree-0 element)."""
        K = self.tower.field
        Q = K.order
        out, mult = 0, 1
        for _ in range(self.m):
            out += K.mul(c, x % Q) * mult
            x //= Q
            mult *= Q
        return out

    # -- prime-field coordinates ----------------------------------------

    def to_vector(self, code: int) -> list[int]:
        K = self.tower.field
        vec: list[int] = []
        for _ in range(self.m):
            vec.extend(K.coeffs(code % K.order))
            code //= K.order
        return vec

    def from_vector(self, vec: Sequence[int]) -> int:
        K = self.tower.field
        code, mult = 0, 1
        for i in range(self.m):
            code += K.encode(vec[i * K.l:(i + 1) * K.l]) * mult
            mult *= K.order
        return code

    def basis(self) -> list[int]:
        """Prime-field basis: x^j t^i for j < l, i < m."""
        K = self.tower.field
        return [(K.p ** j) * (K.order ** i) for i in range(self.m) for j in range(K.l)]


def build_semifield(tower: TowerCtx, f: sp.SkewPoly) -> SemifieldCtx:
    """Validated S_f: f monic (normalized on input), irreducible, not
    right-invariant."""
    f = sp.make_monic(tower, f)
    if sp.degree(f) < 2:
        raise ValueError("S_f needs deg(f) >= 2")
    if sp.degree(f) == 2:
        ok = sp.is_irreducible_quadratic(tower, f)
    else:
        ok = sp.is_irreducible(tower, f)
    if not ok:
        raise ReducibleF(f"{f} is reducible: S_f has zero divisors")
    if sp.is_right_invariant(tower, f):
        raise RightInvariantF(f"{f} is right-invariant: S_f is associative")
    return SemifieldCtx(tower=tower, f=f)


def sf_mul(S: SemifieldCtx, x: int, y: int) -> int:
    return S.mul(x, y)


def associator(S: SemifieldCtx, x: int, y: int, z: int) -> int:
    """[x,y,z] = (xy)z - x(yz)."""
    K = S.tower.field
    a = S.mul(S.mul(x, y), z)
    b = S.mul(x, S.mul(y, z))
    # subtract digitwise
    Q = K.order
    out, mult = 0, 1
    for _ in range(S.m):
        out += K.sub(a % Q, b % Q) * mult
        a //= Q
        b //= Q
        mult *= Q
    return out


def inverses(S: SemifieldCtx, x: int) -> tuple[int, int]:
    """(left inverse, right inverse) of x, via the translation-map linear
    systems y*x = 1 and x*y = 1 over the prime field."""
    if x == 0:
        raise ZeroElement("zero has no inverse")
    p = S.tower.field.p
    basis = S.basis()
    e1 = S.to_vector(S.one)
    # columns of R_x: images of basis under y -> y*x
    right_cols = [S.to_vector(S.mul(b, x)) for b in basis]
    rows_r = [[right_cols[j][i] for j in range(len(basis))] for i in range(S.dim_prime)]
    left_cols = [S.to_vector(S.mul(x, b)) for b in basis]
    rows_l = [[left_cols[j][i] for j in range(len(basis))] for i in range(S.dim_prime)]
    sol_l = solve(rows_r, e1, p)
    sol_r = solve(rows_l, e1, p)
    assert sol_l is not None and sol_r is not None, "division algebra: inverses exist"
    combine = lambda sol: _combine(S, basis, sol)
    return combine(sol_l), combine(sol_r)


def _combine(S: SemifieldCtx, basis: list[int], coeffs: list[int]) -> int:
    out = 0
    for b, c in zip(basis, coeffs):
        for _ in range(c):
            out = S.add(out, b)
    return out


@dataclass
class NucleusInfo:
    elements: list[int]
    basis_vectors: list[list[int]]
    cardinality: int
    field_tag: Optional[str]


@dataclass
class NucleiReport:
    nuc_l: NucleusInfo
    nuc_m: NucleusInfo
    nuc_r: NucleusInfo
    nuc: NucleusInfo
    center: NucleusInfo


def _span_elements(S: SemifieldCtx, basis_vecs: list[list[int]]) -> list[int]:
    import itertools

    p = S.tower.field.p
    out = set()
    for combo in itertools.product(range(p), repeat=len(basis_vecs)):
        vec = [0] * S.dim_prime
        for c, bv in zip(combo, basis_vecs):
            if c:
                vec = [(v + c * b) % p for v, b in zip(vec, bv)]
        out.add(S.from_vector(vec))
    return sorted(out)


def _field_tag(S: SemifieldCtx, elems: list[int]) -> Optional[str]:
    """Tag the subspace as a subfield when it is multiplicatively closed."""
    es = set(elems)
    if 1 not in es:
        return None
    card = len(es)
    p = S.tower.field.p
    d = 0
    n = card
    while n % p == 0:
        n //= p
        d += 1
    if n != 1:
        return None
    sample = elems if card <= 64 else elems[:16]
    for a in sample:
        for b in sample:
            if S.mul(a, b) not in es:
                return None
    return f"F_{card}"


def _nucleus_from_conditions(S: SemifieldCtx, slot: int) -> NucleusInfo:
    """Nullspace of [x,b_i,b_j] = 0 (slot 0), [b_i,x,b_j] = 0 (slot 1) or
    [b_i,b_j,x] = 0 (slot 2) over all basis pairs; correctness follows from
    trilinearity of the associator."""
    p = S.tower.field.p
    basis = S.basis()
    rows: list[list[int]] = []
    per_basis: dict[tuple[int, int], list[list[int]]] = {}
    for bi in basis:
        for bj in basis:
            cols = []
            for ek in basis:
                args = {0: (ek, bi, bj), 1: (bi, ek, bj), 2: (bi, bj, ek)}[slot]
                cols.append(S.to_vector(associator(S, *args)))
            for coord in range(S.dim_prime):
                row = [cols[k][coord] for k in range(len(basis))]
                if any(row):
                    rows.append(row)
    ns = nullspace(rows, len(basis), p)
    # nullspace coords are w.r.t. the S_f basis; convert to element vectors
    basis_vecs = []
    for sol in ns:
        vec = [0] * S.dim_prime
        for c, b in zip(sol, basis):
            if c:
                bv = S.to_vector(b)
                vec = [(v + c * w) % p for v, w in zip(vec, bv)]
        basis_vecs.append(vec)
    elems = _span_elements(S, basis_vecs)
    return NucleusInfo(elements=elems, basis_vectors=basis_vecs,
                       cardinality=len(elems), field_tag=_field_tag(S, elems))


def nuc_r_membership(S: SemifieldCtx) -> list[int]:
    """Nuc_r via the membership formula {g in R_m : f g in Rf}, computed as
    the kernel of the linear map g -> (f g mod_r f)."""
    tower = S.tower
    p = tower.field.p
    basis = S.basis()
    rows_per_elem = []
    for b in basis:
        prod = sp.skew_mul(tower, S.f, S.decode(b))
        rem = sp.right_rem(tower, prod, S.f)
        rows_per_elem.append(S.to_vector(S.encode(rem)))
    rows = [[rows_per_elem[k][coord] for k in range(len(basis))]
            for coord in range(S.dim_prime)]
    ns = nullspace(rows, len(basis), p)
    basis_vecs = []
    for sol in ns:
        vec = [0] * S.dim_prime
        for c, b in zip(sol, basis):
            if c:
                bv = S.to_vector(b)
                vec = [(v + c * w) % p for v, w in zip(vec, bv)]
        basis_vecs.append(vec)
    return _span_elements(S, basis_vecs)


def nuclei(S: SemifieldCtx) -> NucleiReport:
    nl = _nucleus_from_conditions(S, 0)
    nm = _nucleus_from_conditions(S, 1)
    nr = _nucleus_from_conditions(S, 2)
    if set(nr.elements) != set(nuc_r_membership(S)):
        raise AssertionError("Nuc_r: associator nullspace and membership formula disagree")
    inter = sorted(set(nl.elements) & set(nm.elements) & set(nr.elements))
    nuc = NucleusInfo(elements=inter, basis_vectors=[],
                      cardinality=len(inter), field_tag=_field_tag(S, inter))
    basis = S.basis()
    cen = [x for x in inter if all(S.mul(x, b) == S.mul(b, x) for b in basis)]
    center = NucleusInfo(elements=cen, basis_vectors=[],
                         cardinality=len(cen), field_tag=_field_tag(S, cen))
    return NucleiReport(nuc_l=nl, nuc_m=nm, nuc_r=nr, nuc=nuc, center=center)


def nuclei_bruteforce(S: SemifieldCtx) -> tuple[list[int], list[int], list[int]]:
    """Cubic associator scan; test oracle only (|S_f| <= 81 in practice)."""
    all_e = range(S.size)
    nl = [x for x in all_e
          if all(associator(S, x, y, z) == 0 for y in all_e for z in all_e)]
    nm = [x for x in all_e
          if all(associator(S, y, x, z) == 0 for y in all_e for z in all_e)]
    nr = [x for x in all_e
          if all(associator(S, y, z, x) == 0 for y in all_e for z in all_e)]
    return nl, nm, nr


@dataclass
class TPowerReport:
    powers_associative: bool
    powers_closed: bool
    closure_order: Optional[int]
    power_associative_m_plus_1: bool


def t_power_diagnostics(S: SemifieldCtx) -> TPowerReport:
    tower = S.tower
    m = S.m
    # (a) powers of t associative iff f t in Rf
    ft = sp.skew_mul(tower, S.f, sp.t_power(1))
    assoc = not sp.right_rem(tower, ft, S.f)
    tm = S.encode(sp.right_rem(tower, sp.t_power(m), S.f))
    t = S.t
    assert (S.mul(tm, t) == S.mul(t, tm)) == assoc, "ft in Rf vs t^m t = t t^m mismatch"
    # (b) the powers of t form a multiplicative group iff every bracketing of
    # t^k gives one value for every k (then the power set is a cyclic group)
    vals: dict[int, set[int]] = {1: {t}}
    powers_seen = {t}
    group = True
    k = 1
    while group:
        k += 1
        acc = set()
        for i in range(1, k):
            for u in vals[i]:
                for v in vals[k - i]:
                    acc.add(S.mul(u, v))
        vals[k] = acc
        if len(acc) > 1:
            group = False
            break
        val = next(iter(acc))
        if val in powers_seen:
            break
        powers_seen.add(val)
        if k > S.size:
            raise AssertionError("power cycle not found")
    # (d) all bracketings of t^(m+1) agree?
    vals_d: dict[int, set[int]] = {1: {t}}
    for kk in range(2, m + 2):
        acc = set()
        for i in range(1, kk):
            for u in vals_d[i]:
                for v in vals_d[kk - i]:
                    acc.add(S.mul(u, v))
        vals_d[kk] = acc
    return TPowerReport(
        powers_associative=assoc,
        powers_closed=group,
        closure_order=len(powers_seen) if group else None,
        power_associative_m_plus_1=len(vals_d[m + 1]) == 1,
    )


def analysis_json(S: SemifieldCtx) -> dict:
    rep = nuclei(S)
    diag = t_power_diagnostics(S)
    return {
        "size": S.size,
        "f": sp.poly_json(S.tower, S.f),
        "nuclei": {
            "left": {"cardinality": rep.nuc_l.cardinality, "tag": rep.nuc_l.field_tag},
            "middle": {"cardinality": rep.nuc_m.cardinality, "tag": rep.nuc_m.field_tag},
            "right": {"cardinality": rep.nuc_r.cardinality, "tag": rep.nuc_r.field_tag},
            "nucleus": {"cardinality": rep.nuc.cardinality, "tag": rep.nuc.field_tag},
            "center": {"cardinality": rep.center.cardinality, "tag": rep.center.field_tag},
        },
        "t_powers": {
            "associative": diag.powers_associative,
            "closed": diag.powers_closed,
            "closure_order": diag.closure_order,
            "power_associative_m_plus_1": diag.power_associative_m_plus_1,
        },
    }
