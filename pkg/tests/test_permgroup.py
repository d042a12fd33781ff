"""BSGS machinery and small-group identification against known groups."""

import numpy as np
import pytest

from skewloop import permgroup as pg


def cycle(n, *points):
    img = list(range(n))
    for i, p in enumerate(points):
        img[p] = points[(i + 1) % len(points)]
    return np.array(img, dtype=np.int32)


def test_cyclic_group_order():
    G = pg.bsgs_build([cycle(5, 0, 1, 2, 3, 4)])
    assert G.order == 5


def test_symmetric_group_order():
    n = 8
    gens = [cycle(n, 0, 1), np.array(list(range(1, n)) + [0], dtype=np.int32)]
    G = pg.bsgs_build(gens)
    assert G.order == 40320


def test_alternating_group_order():
    n = 7
    gens = [cycle(n, 0, 1, 2), cycle(n, 2, 3, 4), cycle(n, 4, 5, 6)]
    G = pg.bsgs_build(gens)
    assert G.order == 2520


def test_membership():
    n = 6
    G = pg.bsgs_build([cycle(n, 0, 1, 2, 3, 4, 5)])
    assert G.contains(cycle(n, 0, 2, 4) * 0 + pg.compose(cycle(n, 0, 1, 2, 3, 4, 5),
                                                         cycle(n, 0, 1, 2, 3, 4, 5)))
    assert not G.contains(cycle(n, 0, 1))


def test_stabilizer_order_and_generators():
    n = 8
    gens = [cycle(n, 0, 1), np.array(list(range(1, n)) + [0], dtype=np.int32)]
    G = pg.bsgs_build(gens, base_hint=[0])
    assert pg.stabilizer_order(G, 0) == 5040
    stab_gens = pg.stabilizer_generators(G, 0)
    H = pg.bsgs_build(stab_gens) if stab_gens else None
    assert H is not None and H.order == 5040
    assert all(int(g[0]) == 0 for g in stab_gens)


def test_not_transitive_error():
    G = pg.bsgs_build([cycle(4, 0, 1)])
    with pytest.raises(pg.NotTransitive):
        pg.stabilizer_order(G, 0)


def test_identify_cyclic():
    mul = [[(i + j) % 6 for j in range(6)] for i in range(6)]
    gid = pg.identify_small_group(mul)
    assert gid.tag == "cyclic" and gid.order == 6


def test_identify_quaternion_units():
    # Q8 as permutations: x -> gx on the 8 units
    elems = [(s, i) for s in (1, -1) for i in range(4)]  # (+-1) * i^k ... model
    # model Q8 = Dic_2 by its multiplication table via the dicyclic presentation
    # a^4 = 1, b^2 = a^2, b a b^-1 = a^-1; elements a^i b^j, i<4, j<2
    def mul(u, v):
        i, j = u
        k, l = v
        if j == 0:
            return ((i + k) % 4, l)
        # b * a^k = a^-k * b
        if l == 0:
            return ((i - k) % 4, 1)
        return ((i - k + 2) % 4, 0)
    elems = [(i, j) for j in (0, 1) for i in range(4)]
    idx = {e: n for n, e in enumerate(elems)}
    table = [[idx[mul(u, v)] for v in elems] for u in elems]
    gid = pg.identify_small_group(table, identity=0)
    assert gid.tag == "dicyclic" and gid.order == 8 and gid.params.get("k") == 2


def test_identify_from_perms_closure():
    gid = pg.identify_from_perms([cycle(5, 0, 1, 2, 3, 4)])
    assert gid.tag == "cyclic" and gid.order == 5


def test_gl_sl_orders():
    assert pg.gl_order(4, 2) == 20160
    assert pg.sl_order(4, 2) == 20160
    assert pg.sl_order(4, 3) == 12130560
    assert pg.gl_order(4, 3) == 24261120
    assert pg.sl_order(4, 5) == 29016000000
    assert pg.gl_order(4, 5) == 116064000000
