import pytest

from pgatlas import families as fam
from pgatlas.pcgroup import GroupData, check_admissible, group_for, spans_center
from pgatlas.relations import parse_presentation, power_bound


def _instances(pvals=(2, 3), max_order=3**8):
    """One minimal instance per family tag and prime."""
    for tag in fam.family_tags():
        for p in pvals:
            mn = fam.minimal_nm(tag, p)
            if mn is None:
                continue
            n, m = mn
            fm = fam.FAMILIES[tag]
            ranges = {nm: list(rng(p)) for nm, rng in fm.params}
            if any(not v for v in ranges.values()):
                continue  # e.g. Q4 has no instances at p = 2
            combo = {nm: v[0] for nm, v in ranges.items()}
            T = fam.IsoType.of(tag, n=n, m=m, **combo)
            data = fam.construct(T, p)
            if data.order <= max_order:
                yield p, T, data


def test_every_construction_is_admissible_and_spans():
    count = 0
    for p, T, data in _instances():
        assert check_admissible(data), f"{T}@{p}"
        assert spans_center(data), f"{T}@{p}"
        assert data.order == p ** (data.n + data.m + 1 + data.zrank)
        count += 1
    assert count > 100


def test_every_construction_realizes_its_printed_presentation():
    for p, T, data in _instances():
        pres = fam.presentation(T, p)
        found = fam.find_generators_satisfying(data, pres, data.order)
        assert found is not None, f"{T}@{p}: {pres}"


def test_d5_example():
    data = fam.construct(fam.IsoType.of("D5", n=2, m=2), 3)
    assert data == GroupData(3, 2, 2, 1, (0,), (0,), (1,), (0,), (0,))
    assert data.order == 3**6


def test_b1_order():
    data = fam.construct(fam.IsoType.of("B1", n=3, m=1), 2)
    assert data.order == 2**6


def test_k3_order():
    data = fam.construct(fam.IsoType.of("K3", n=2, m=2), 2)
    assert data.order == 2**7


def test_mp_identity_assignment():
    m3 = GroupData(3, 1, 1, 0)
    pres = "a^3=b^3=c^3=1, [a,b]=c, [c,a]=1, [c,b]=1"
    found = fam.find_generators_satisfying(m3, pres, 27)
    g = group_for(m3)
    assert found is not None
    assert found["a"] == g.a and found["b"] == g.b


def test_a2_relations_found_and_a1_vs_a2_distinct():
    TA1 = fam.IsoType.of("A1", n=2, m=1)
    TA2 = fam.IsoType.of("A2", n=2, m=1)
    a1 = fam.construct(TA1, 2)
    a2 = fam.construct(TA2, 2)
    a2_pres = fam.presentation(TA2, 2)
    assert fam.find_generators_satisfying(a2, a2_pres, 32) is not None
    # the (A1) datum does not satisfy the printed (A2) relations
    assert fam.find_generators_satisfying(a1, a2_pres, 32) is None


def test_found_assignment_is_verified():
    # independently re-verify a returned assignment on every relation
    from pgatlas.relations import eval_node

    T = fam.IsoType.of("R6", n=2, m=1)
    data = fam.construct(T, 2)
    pres = fam.presentation(T, 2)
    env = fam.find_generators_satisfying(data, pres, data.order)
    g = group_for(data)
    for lhs, rhs in parse_presentation(pres):
        assert eval_node(lhs, g, env) == eval_node(rhs, g, env)


def test_list_families_examples():
    assert {t.tag for t in fam.list_families("I", 2, 2, 1)} == {"A1", "A2", "A3"}
    assert {t.tag for t in fam.list_families("IV", 3, 1, 1)} == {f"O{i}" for i in range(1, 8)}
    d_types = fam.list_families("I", 3, 2, 2)
    assert sorted(str(t) for t in d_types) == [
        "D1(m=2,n=2,t=1)", "D1(m=2,n=2,t=2)", "D2(m=2,n=2)",
        "D3(m=2,n=2)", "D4(m=2,n=2)", "D5(m=2,n=2)",
    ]


def test_list_families_excludes_invalid_spaces():
    assert fam.list_families("I", 3, 2, 1) == []  # odd p cannot have case I with m=1
    assert all(t.tag.startswith("K") for t in fam.list_families("III-a", 2, 2, 2))
    assert fam.list_families("III-b", 2, 2, 2) == []  # III-b needs n > m


def test_parameter_validation():
    with pytest.raises(ValueError):
        fam.construct(fam.IsoType.of("D1", n=2, m=2, t=0), 3)  # t in F_p^*
    with pytest.raises(ValueError):
        fam.construct(fam.IsoType.of("D1", n=2, m=2, t=1), 2)  # p=2 needs n>=3
    with pytest.raises(ValueError):
        fam.construct(fam.IsoType.of("G1", n=1, m=1, nu=1), 3)  # m>1 for p<=3
    with pytest.raises(ValueError):
        fam.construct(fam.IsoType.of("Q4", n=2, m=2, s=1), 3)  # s starts at 2


def test_f_variants():
    vs = fam.f_variants()
    assert len(vs) == 4
    for d in vs:
        g = group_for(d)
        assert g.g3().order == 3  # class 3 at order 81: maximal class
        assert g.structure().d == 2


def test_s7_table():
    assert fam.s7_entries() == list(range(1, 46))
    tag, fixed, p_ok, min_pnm = fam.s7_family(39)
    assert tag == "T1" and min_pnm == (2, 3, 1)
    data = fam.construct_s7(11, 3, n=2)
    assert data.order == 3**5  # J1 at m=1
    with pytest.raises(ValueError):
        fam.s7_type(5, 3)  # H entries are p=2 only


def test_presentation_string_style():
    T = fam.IsoType.of("E7", n=3, m=2)
    s = fam.presentation(T, 3)
    assert s == "a^27=b^9=c^9=1, [a,b]=c, [c,a]=1, [c,b]=c^3"
    assert fam.angle_presentation(s).startswith("< a, b, c |")


def test_power_bound_parser():
    assert power_bound("a^8=b^4=1, c^2=a^4", "a") == 8
    assert power_bound("a^8=b^4=1, c^2=a^4", "b") == 4
    assert power_bound("a^8=b^4=1, c^2=a^4", "c") is None


def test_datum_presentation_round_trip():
    data = fam.construct(fam.IsoType.of("O5", n=1, m=1), 3)
    pres = fam.datum_presentation(data)
    assert fam.find_generators_satisfying(data, pres, data.order) is not None
