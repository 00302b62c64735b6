import itertools
import random

import numpy as np
import pytest

from pgatlas import pcgroup
from pgatlas.pcgroup import (
    Element,
    GroupData,
    check_admissible,
    commutator,
    group_for,
    i_minmax,
    inverse,
    maximal_subgroups,
    multiply,
    order_of,
    power,
    quotient_mod_Z,
    spans_center,
    structure,
)

M3 = GroupData(p=3, n=1, m=1, zrank=0)
A1 = GroupData(p=2, n=2, m=1, zrank=1, alpha=(0,), beta=(0,), gamma=(1,), delta=(1,), epsilon=(1,))
D5_3 = GroupData(p=3, n=2, m=2, zrank=1, alpha=(0,), beta=(0,), gamma=(1,), delta=(0,), epsilon=(0,))
B1_3 = GroupData(p=2, n=3, m=1, zrank=1, alpha=(1,), beta=(0,), gamma=(1,), delta=(0,), epsilon=(1,))
O1 = GroupData(p=3, n=1, m=1, zrank=2, alpha=(0, 0), beta=(0, 0), gamma=(0, 0), delta=(0, 1), epsilon=(2, 0))


def test_identity_multiplication():
    g = group_for(D5_3)
    e = Element(0, 0, 0, (0,))
    x = Element(2, 1, 2, (1,))
    assert multiply(D5_3, e, x) == x
    assert multiply(D5_3, x, e) == x


def test_collection_rule_ba():
    # in (D5) p=3: b*a = a*b*c^2*z^-1
    got = multiply(D5_3, Element(0, 1, 0, (0,)), Element(1, 0, 0, (0,)))
    assert got == Element(1, 1, 2, (2,))


def test_m1_p2_power_identity():
    # [a, b^2] collapses to the identity exactly when the datum is
    # consistent, i.e. when c^2 [c,b] = z^(gamma+epsilon) is trivial
    g = group_for(A1)
    b2 = g.pow(g.b, 2)
    assert g.comm(g.a, b2) == g.identity
    word = g.mul(g.pow(g.c, 2), g.comm(g.c, g.b))
    gam_eps = tuple((x + y) % 2 for x, y in zip(A1.gamma, A1.epsilon))
    assert g.element(word).u == gam_eps


def test_admissibility_examples():
    # inconsistent: gamma=(1) with epsilon=(0) at p=2, m=1
    bad = GroupData(p=2, n=2, m=1, zrank=1, alpha=(0,), beta=(0,), gamma=(1,), delta=(0,), epsilon=(0,))
    assert not check_admissible(bad)
    assert check_admissible(A1)
    # the A3-shaped datum (a^4 = c^2) is admissible too
    assert check_admissible(
        GroupData(p=2, n=2, m=1, zrank=1, alpha=(1,), beta=(0,), gamma=(1,), delta=(1,), epsilon=(1,))
    )
    assert check_admissible(M3)


def test_admissibility_closed_form():
    # overlap checks match the closed-form consistency conditions:
    # eps*C(p^m,2) + gamma*p^(m-1) = 0 and (n >= 2 or gamma = 0)
    from math import comb

    for p, n, m in [(2, 2, 1), (2, 2, 2), (3, 1, 1), (3, 2, 1)]:
        for vec in itertools.product(range(p), repeat=5):
            a, b, gm, d, e = vec
            data = GroupData(p, n, m, 1, (a,), (b,), (gm,), (d,), (e,))
            c1 = (e * comb(p**m, 2) + gm * p ** (m - 1)) % p == 0
            c2 = n >= 2 or gm == 0
            assert check_admissible(data) == (c1 and c2), data


def test_exhaustive_associativity_small():
    for data in (A1, M3):
        g = group_for(data)
        t = g.table()
        assert np.array_equal(t[t, :], t[:, t])


def test_identity_inverse_laws_exhaustive_small():
    g = group_for(A1)
    for x in range(g.order):
        assert g.mul(x, g.identity) == x
        assert g.mul(g.identity, x) == x
        assert g.mul(x, g.inv(x)) == g.identity
        assert g.mul(g.inv(x), x) == g.identity


def test_random_triples_associativity_large():
    g = group_for(GroupData(p=3, n=3, m=2, zrank=1, alpha=(0,), beta=(0,), gamma=(1,), delta=(0,), epsilon=(1,)))
    rng = np.random.default_rng(7)
    n = 100_000
    x = rng.integers(0, g.order, n)
    y = rng.integers(0, g.order, n)
    z = rng.integers(0, g.order, n)
    left = g.mul_vec(g.mul_vec(x, y), z)
    right = g.mul_vec(x, g.mul_vec(y, z))
    assert np.array_equal(left, right)


def test_vectorized_matches_scalar():
    g = group_for(O1)
    rng = np.random.default_rng(3)
    xs = rng.integers(0, g.order, 200)
    ys = rng.integers(0, g.order, 200)
    vec = g.mul_vec(xs, ys)
    for x, y, v in zip(xs, ys, vec):
        assert g.mul(int(x), int(y)) == int(v)
    inv = g.inv_vec(xs)
    for x, v in zip(xs, inv):
        assert g.inv(int(x)) == int(v)


def test_element_ops_examples():
    g = group_for(B1_3)
    assert g.order_of(g.a) == 16  # 2^(n+1) with n=3
    assert commutator(B1_3, Element(1, 0, 0, (0,)), Element(0, 1, 0, (0,))) == Element(0, 0, 1, (0,))
    # in the trivial-Frattini case c has order p
    h1 = GroupData(p=2, n=2, m=1, zrank=1, alpha=(0,), beta=(0,), gamma=(0,), delta=(1,), epsilon=(0,))
    g2 = group_for(h1)
    assert g2.order_of(g2.c) == 2


def test_power_and_inverse():
    g = group_for(D5_3)
    rng = random.Random(5)
    for _ in range(40):
        x = rng.randrange(g.order)
        assert g.pow(x, g.order_of(x)) == g.identity
        assert g.mul(g.pow(x, 5), g.pow(x, -5)) == g.identity
        assert power(D5_3, g.element(x), 3) == g.element(g.pow(x, 3))
        assert inverse(D5_3, g.element(x)) == g.element(g.inv(x))
        assert order_of(D5_3, g.element(x)) == g.order_of(x)


def test_structure_examples():
    s = structure(D5_3)
    assert s.derived_subgroup.order == 9 and s.G3.order == 1
    s2 = structure(O1)
    assert s2.G3.order == 9
    # Phi(G') of the O1 datum is trivial: c has order p
    g = group_for(O1)
    assert g.pow(g.c, 3) == g.identity
    assert structure(M3).derived_subgroup.order == 3
    assert s.d == 2 and s2.d == 2


def test_defining_relations_hold():
    for data in (A1, D5_3, B1_3, O1):
        g = group_for(data)
        p = data.p
        zpow = lambda vec: g.encode((0, 0, 0) + tuple(vec))
        assert g.pow(g.a, p**data.n) == zpow(data.alpha)
        assert g.pow(g.b, p**data.m) == zpow(data.beta)
        assert g.pow(g.c, p) == zpow(data.gamma)
        assert g.comm(g.c, g.a) == zpow(data.delta)
        assert g.comm(g.c, g.b) == zpow(data.epsilon)
        assert g.comm(g.a, g.b) == g.c
        assert g.order == p ** (data.n + data.m + 1 + data.zrank)


def test_central_series_containments():
    for data in (A1, D5_3, B1_3, O1):
        g = group_for(data)
        center = set(int(x) for x in g.center().members)
        g3 = set(int(x) for x in g.g3().members)
        pg3 = set(int(x) for x in g.phi_ext_g3().members)
        assert g3 <= center
        assert pg3 <= center
        if data.zrank and spans_center(data):
            assert pg3 == set(int(x) for x in g.zsubgroup().members)


def test_quotient_mod_z():
    assert quotient_mod_Z(A1) == GroupData(p=2, n=2, m=1, zrank=0)
    assert quotient_mod_Z(O1) == GroupData(p=3, n=1, m=1, zrank=0)
    with pytest.raises(ValueError):
        quotient_mod_Z(M3)


def test_all_a1_subgroups_examples():
    g = group_for(B1_3)
    a1s = g.all_a1_subgroups()
    assert sum(1 for h in a1s if h.index() == 2) == 1  # unique A1 of index p
    gm = group_for(M3)
    a1m = gm.all_a1_subgroups()
    assert len(a1m) == 1 and a1m[0].order == 27  # G itself, index 1


def test_abelian_subgroup_has_no_a1():
    g = group_for(A1)
    ab = g.subgroup([g.a])  # cyclic, abelian
    assert g.a1_subgroups_of(ab) == []


def test_i_minmax_examples():
    assert i_minmax(B1_3) == (1, 3)
    # an (F)-case group: I_max = 1
    f = GroupData(p=3, n=1, m=1, zrank=1, alpha=(0,), beta=(0,), gamma=(0,), delta=(1,), epsilon=(0,))
    assert i_minmax(f) == (1, 1)


def test_i_minmax_e7():
    e7 = GroupData(p=3, n=3, m=2, zrank=1, alpha=(0,), beta=(0,), gamma=(1,), delta=(0,), epsilon=(1,))
    assert i_minmax(e7) == (2, 3)
    group_for(e7).free_table()


def test_maximal_subgroups():
    for data in (A1, D5_3):
        g = group_for(data)
        maxs = maximal_subgroups(data)
        assert len(maxs) == data.p + 1
        assert all(m.order * data.p == g.order for m in maxs)
    # (A1)'s maximal subgroups as element sets: <c,a>, <c,b,a^2>, <c,ab>
    g = group_for(A1)
    expected = {
        tuple(sorted(int(v) for v in g.closure([g.c, g.a]))),
        tuple(sorted(int(v) for v in g.closure([g.c, g.b, g.pow(g.a, 2)]))),
        tuple(sorted(int(v) for v in g.closure([g.c, g.mul(g.a, g.b)]))),
    }
    got = {tuple(int(v) for v in m.members) for m in maximal_subgroups(A1)}
    assert got == expected


def test_h1_has_two_a1_maximals():
    h1 = GroupData(p=2, n=2, m=1, zrank=1, alpha=(0,), beta=(0,), gamma=(0,), delta=(1,), epsilon=(0,))
    g = group_for(h1)
    count = sum(1 for M in g.maximal_subgroups() if g.is_a1_subgroup(M))
    assert count >= 2


def test_descent_matches_naive_pair_closures():
    # independent route: A1 subgroups by raw all-pairs closures
    for data in (A1, B1_3, GroupData(p=3, n=1, m=1, zrank=1, alpha=(0,), beta=(0,), gamma=(0,), delta=(1,), epsilon=(1,))):
        g = group_for(data)
        t = g.table()
        naive = set()
        for x in range(g.order):
            for y in range(x + 1, g.order):
                mem = g.closure([x, y])
                sub = pcgroup.Subgroup(g, mem, (x, y))
                if g.is_a1_subgroup(sub):
                    naive.add(tuple(int(v) for v in mem))
        descent = {tuple(int(v) for v in h.members) for h in g.all_a1_subgroups()}
        assert naive == descent


def test_pair_closure_completeness():
    # if the closure of 3 random elements is A1, some pair of its members
    # already generates it
    g = group_for(A1)
    rng = random.Random(11)
    found = 0
    for _ in range(60):
        trip = [rng.randrange(g.order) for _ in range(3)]
        mem = g.closure(trip)
        sub = pcgroup.Subgroup(g, mem, tuple(trip))
        if not g.is_a1_subgroup(sub):
            continue
        found += 1
        members = [int(v) for v in mem]
        ok = any(
            g.closure([x, y]).size == mem.size
            for x, y in itertools.combinations(members, 2)
        )
        assert ok
    assert found  # the sample actually exercised the property


def test_d_equals_two_for_spanning_data():
    for data in (A1, D5_3, O1, B1_3):
        assert structure(data).d == 2


def test_size_bound_error():
    big = GroupData(p=5, n=3, m=3, zrank=1, alpha=(0,), beta=(0,), gamma=(1,), delta=(0,), epsilon=(0,))
    with pytest.raises(pcgroup.SizeBoundError):
        group_for(big).i_minmax()


def test_json_round_trip():
    obj = A1.to_json()
    assert obj == {
        "p": 2, "n": 2, "m": 1, "zrank": 1,
        "alpha": [0], "beta": [0], "gamma": [1], "delta": [1], "epsilon": [1],
    }
    assert GroupData.from_json(obj) == A1
