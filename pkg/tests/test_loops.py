"""Multiplicative loops: translations, Mlt/Inn, cyclicity, subloops,
isomorphism, Latin-square export."""

import numpy as np
import pytest

from skewloop import gf
from skewloop import loops as lp
from skewloop import permgroup as pg
from skewloop import semifield as sfd


def quat2_loop():
    tw = gf.make_tower(2, 1, 2)
    K = tw.field
    S = sfd.build_semifield(tw, (K.neg(K.p), 0, 1))
    return S, lp.build_loop(S)


def quat3_loops():
    tw = gf.make_tower(3, 1, 2, modulus=[2, 2, 1])
    K = tw.field
    out = []
    for a in (K.p, K.add(K.p, 1)):
        S = sfd.build_semifield(tw, (K.neg(a), 0, 1))
        out.append(lp.build_loop(S))
    return out


def test_loop_is_latin_with_identity():
    S, L = quat2_loop()
    assert L.size == 15
    tbl = L.table
    n = L.size
    for i in range(n):
        assert sorted(tbl[i, :]) == list(range(n))
        assert sorted(tbl[:, i]) == list(range(n))
    assert all(L.mul(L.identity, j) == j == L.mul(j, L.identity) for j in range(n))


def test_table_matches_semifield_mul():
    S, L = quat2_loop()
    for x in range(1, S.size):
        for y in range(1, S.size):
            assert L.mul(x - 1, y - 1) == S.mul(x, y) - 1


def test_mlt_inn_quat2():
    S, L = quat2_loop()
    M = lp.mlt_group(L)
    assert M.order == 20160
    inn_order, gens = lp.inn_group(L, M)
    assert inn_order == 1344
    assert all(int(g[L.identity]) == L.identity for g in gens)
    # all translations sift into Mlt
    for a in range(L.size):
        assert M.contains(L.left_translation(a))
        assert M.contains(L.right_translation(a))


def test_inn_from_generators_agrees():
    S, L = quat2_loop()
    M = lp.mlt_group(L)
    inn_order, _ = lp.inn_group(L, M)
    assert lp.inn_from_generators(L).order == inn_order


def test_inner_mapping_definitions():
    S, L = quat2_loop()
    for x in range(L.size):
        t = lp.inner_mapping(L, "T", x)
        lx = L.left_translation(x)
        rx = L.right_translation(x)
        assert np.array_equal(t.perm, pg.compose(pg.inverse(lx), rx))
    # L_{x,y} = id when x, y generate an associative subloop (both in K^x)
    K = L.semifield.tower.field
    field_idx = [c - 1 for c in range(1, K.order)]  # K^x inside the loop
    for x in field_idx:
        for y in field_idx:
            m = lp.inner_mapping(L, "L", x, y)
            assert pg.is_identity(m.perm)


def test_t_identity_is_identity():
    _, L = quat2_loop()
    m = lp.inner_mapping(L, "T", L.identity)
    assert pg.is_identity(m.perm)


def test_cyclicity_quat2():
    _, L = quat2_loop()
    left, right, wit = lp.cyclicity(L)
    assert right  # the order-15 loop is right cyclic
    assert lp._principal_orbit_size(L, wit["right"], "right") == L.size


def test_cyclicity_quat3_both():
    for L in quat3_loops():
        left, right, _ = lp.cyclicity(L)
        assert left and right


def test_subloops_and_lagrange_quat2():
    _, L = quat2_loop()
    orders, lagrange, weak = lp.subloops_and_lagrange(L)
    assert orders == [1, 3, 6, 15]
    assert not weak and not lagrange  # 6 does not divide 15


def test_loop_isomorphism_self_and_distinct():
    L1, L2 = quat3_loops()
    assert lp.loop_isomorphic(L1, L1) is not None
    assert lp.loop_isomorphic(L1, L2) is None


def test_isomorphism_is_checked_pointwise():
    _, L = quat2_loop()
    phi = lp.loop_isomorphic(L, L)
    for i in range(L.size):
        for j in range(L.size):
            assert phi[L.mul(i, j)] == L.mul(phi[i], phi[j])


def test_latin_csv_roundtrip(tmp_path):
    _, L = quat2_loop()
    path = tmp_path / "latin.csv"
    lp.write_latin_csv(L, str(path))
    back = lp.read_latin_csv(str(path))
    assert np.array_equal(back.table, L.table)


def test_loop_report_keys():
    _, L = quat2_loop()
    rep = lp.loop_report(L)
    assert rep["order"] == 15
    assert rep["mlt_order"] == "20160"
    assert rep["inn_order"] == "1344"


def test_mlt_seed_invariance():
    _, L = quat2_loop()
    assert lp.mlt_group(L, seed=0).order == lp.mlt_group(L, seed=99).order
