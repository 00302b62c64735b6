import itertools
import random

import pytest

from pgatlas import families as fam
from pgatlas.classifier import (
    CharData,
    EXCEPTIONAL_SPACES,
    UnsupportedSpaceError,
    canonical_type,
    chardata_to_datum,
    classify_group,
    equivalent,
    extract_char,
    predicted_properties,
    witness_valid,
)
from pgatlas.pcgroup import GroupData


def T(tag, n, m, **kw):
    return fam.IsoType.of(tag, n=n, m=m, **kw)


def test_extract_examples():
    c = extract_char(fam.construct(T("E7", 3, 2), 3))
    assert (c.case, c.w) == ("I", ((0, 0), (0, 1)))
    c = extract_char(fam.construct(T("D5", 2, 2), 3))
    assert (c.case, c.w) == ("I", ((0, 0), (0, 0)))
    c = extract_char(fam.construct(T("O1", 1, 1), 3))
    assert (c.case, c.w, c.v) == ("IV", ((0, 0), (0, 0)), (0, 0))


def test_extract_case_detection():
    cases = {
        "I": fam.construct(T("B1", 3, 1), 2),
        "II": fam.construct(T("H1", 2, 1), 2),
        "III-a": fam.construct(T("L3", 2, 2), 3),
        "III-b": fam.construct(T("M3", 3, 2), 3),
        "IV": fam.construct(T("R1", 2, 1), 2),
    }
    for case, data in cases.items():
        assert extract_char(data).case == case


def test_extract_handles_parallel_delta_epsilon():
    # both [c,a] and [c,b] nonzero but parallel: still case III, resolved
    # by a generator change inside the engine
    data = GroupData(3, 2, 2, 2, (1, 0), (0, 1), (1, 0), (0, 1), (0, 2))
    c = extract_char(data)
    assert c.case == "III-a"
    # the classified type agrees with the brute-force bucket
    from pgatlas.oracle import brute_iso

    Ttag = canonical_type(c)
    assert brute_iso(data, fam.construct(Ttag, 3))


def test_extract_case_I_scaled_gamma():
    # gamma = (2) is normalized through z -> z^2
    data = GroupData(3, 2, 2, 1, (2, ), (0,), (2,), (0,), (0,))
    c = extract_char(data)
    assert c.case == "I" and c.w[0][0] == 1


def test_extract_rejects_non_property_p():
    with pytest.raises(ValueError):
        extract_char(GroupData(3, 1, 1, 0))  # zrank 0
    with pytest.raises(ValueError):
        # non-spanning: zrank 1 with gamma=delta=epsilon=0
        extract_char(GroupData(3, 2, 2, 1, (1,), (0,), (0,), (0,), (0,)))


def test_equivalent_examples():
    c1 = CharData("I", 5, 2, 2, ((1, 0), (0, 1)))
    c2 = CharData("I", 5, 2, 2, ((1, 0), (0, 2)))
    assert equivalent(c1, c2) is None  # different determinants
    w = equivalent(c1, c1)
    assert w is not None and witness_valid(c1, c1, w)
    c3 = CharData("II", 5, 2, 2, ((4, 0), (0, 1)))  # det 4 = 2^2
    c4 = CharData("II", 5, 2, 2, ((1, 0), (0, 1)))
    w = equivalent(c3, c4)
    assert w is not None and witness_valid(c3, c4, w)


def test_equivalent_case_mismatch():
    c1 = CharData("I", 3, 2, 2, ((0, 0), (0, 0)))
    c2 = CharData("II", 3, 2, 2, ((1, 0), (0, 1)))
    with pytest.raises(ValueError):
        equivalent(c1, c2)


def test_equivalent_unsupported_space():
    c = CharData("I", 2, 2, 1, ((0, 1), (0, 1)))
    with pytest.raises(UnsupportedSpaceError):
        equivalent(c, c)


def _space_data(case, p, n, m):
    from pgatlas.oracle import enumerate_case

    return [extract_char(d) for d in enumerate_case(case, p, n, m)]


@pytest.mark.parametrize(
    "case,p,n,m",
    [("I", 3, 2, 2), ("II", 3, 2, 2), ("I", 2, 3, 1), ("IV", 2, 3, 1), ("III-b", 3, 3, 2)],
)
def test_equivalence_relation_properties(case, p, n, m):
    chars = _space_data(case, p, n, m)
    # orbit partition against the stored family representatives
    types = fam.list_families(case, p, n, m)
    from pgatlas.classifier import _rep_chardata

    reps = [_rep_chardata(t, p) for t in types]
    assignment = []
    for c in chars:
        hits = [i for i, r in enumerate(reps) if equivalent(c, r) is not None]
        assert len(hits) == 1, (str(c), hits)
        assignment.append(hits[0])
        # symmetry on the matched pair
        assert equivalent(reps[hits[0]], c) is not None
    # transitivity on sampled same-orbit triples
    rng = random.Random(13)
    by_orbit = {}
    for c, i in zip(chars, assignment):
        by_orbit.setdefault(i, []).append(c)
    for orbit in by_orbit.values():
        if len(orbit) < 3:
            continue
        for _ in range(20):
            x, y, z = rng.sample(orbit, 3)
            assert equivalent(x, y) is not None
            assert equivalent(y, z) is not None
            assert equivalent(x, z) is not None


def test_witnesses_satisfy_displayed_equations():
    rng = random.Random(29)
    for case, p, n, m in [("I", 3, 3, 2), ("II", 3, 2, 2), ("III-a", 3, 2, 2), ("IV", 3, 2, 2)]:
        types = fam.list_families(case, p, n, m)
        from pgatlas.classifier import _rep_chardata

        reps = [_rep_chardata(t, p) for t in types]
        for r in reps:
            w = equivalent(r, r)
            assert w is not None and witness_valid(r, r, w)
        for _ in range(10):
            r1, r2 = rng.choice(reps), rng.choice(reps)
            w = equivalent(r1, r2)
            if w is not None:
                assert witness_valid(r1, r2, w)


def test_round_trip_all_families_minimal_and_nonminimal():
    # classify(construct(T)) == T at minimal parameters and at one larger
    # (n, m) where the family admits one
    for tag in fam.family_tags():
        for p in (2, 3):
            mn = fam.minimal_nm(tag, p)
            if mn is None:
                continue
            fm = fam.FAMILIES[tag]
            ranges = {nm: list(rng(p)) for nm, rng in fm.params}
            if any(not v for v in ranges.values()):
                continue
            combos = [dict(zip(ranges, vals)) for vals in itertools.product(*ranges.values())]
            nm_choices = [mn]
            bigger = (mn[0] + 1, mn[1] + 1 if mn[0] == mn[1] else mn[1])
            if fm.valid(p, *bigger):
                nm_choices.append(bigger)
            for (n, m) in nm_choices:
                for q in combos[:3]:
                    t = fam.IsoType.of(tag, n=n, m=m, **q)
                    data = fam.construct(t, p)
                    if data.order > 3**8:
                        continue
                    assert classify_group(data) == t, f"{t}@p={p}"


def test_rep_chardata_matches_extraction():
    # the stored proof-exhibited representative equals what extraction
    # reads off the constructed datum
    from pgatlas.classifier import _rep_chardata

    for case, p, n, m in [("I", 3, 2, 2), ("II", 3, 2, 1), ("III-a", 3, 2, 2),
                          ("III-b", 3, 3, 2), ("IV", 3, 2, 1), ("IV", 2, 3, 1)]:
        for t in fam.list_families(case, p, n, m):
            data = fam.construct(t, p)
            assert extract_char(data) == _rep_chardata(t, p), str(t)


def test_classify_spec_examples():
    t = classify_group(fam.construct(T("E5", 3, 2, t=1), 3))
    assert t.tag == "E5" and t.param("t") == 1
    # raw datum p=3, n=3, m=2, case I with beta=(1), delta=(1): (E5) with
    # t = w12 w21
    raw = GroupData(3, 3, 2, 1, (0,), (1,), (1,), (1,), (0,))
    got = classify_group(raw)
    assert got.tag == "E5" and got.param("t") == 1
    raw2 = GroupData(3, 3, 2, 1, (0,), (2,), (1,), (1,), (0,))
    got2 = classify_group(raw2)
    assert got2.tag == "E5" and got2.param("t") == 2  # t = w12*w21 = 2
    # case I, n=m, invertible w: (D1) with t = det w
    d1 = classify_group(GroupData(3, 2, 2, 1, (1,), (0,), (1,), (0,), (2,)))
    assert d1.tag == "D1" and d1.param("t") == 2
    d4 = classify_group(GroupData(3, 2, 2, 1, (0,), (0,), (1,), (1,), (0,)))
    assert d4.tag == "D4"
    # zero-data case IV datum at p=3 lands in the O-list via the oracle
    zero = fam.construct(T("O1", 1, 1), 3)
    assert classify_group(zero).tag == "O1"


def test_exceptional_space_dispatch():
    assert ("IV", 3, 1, 1) in EXCEPTIONAL_SPACES
    c = extract_char(fam.construct(T("N7", 2, 2), 2))
    got = canonical_type(c)
    assert got.tag == "N7"
    back = chardata_to_datum(c)
    from pgatlas.oracle import brute_iso

    assert brute_iso(back, fam.construct(T("N7", 2, 2), 2))


def test_predicted_properties_examples():
    assert predicted_properties(T("E2", 3, 2), 3)["i_max"] == 2  # m = 2
    assert predicted_properties(T("J1", 3, 1, nu=1), 3)["i_max"] == 3  # n = 3
    assert predicted_properties(T("G1", 2, 2, nu=1), 3)["i_max"] == 2  # m = 2
    assert predicted_properties(T("F", 1, 1, variant=1), 3)["i_max"] == 1
    assert predicted_properties(T("B1", 3, 1), 2)["unique_a1_maximal"]
    p = predicted_properties(T("K4", 2, 2), 2)
    assert p["i_min_ge"] == 2 and p["i_max_ge"] == 2 and p["i_max_eq_2"] is True
    # (M8) nu=1 at p=3: paper residue condition fails -> I_max > 2
    p = predicted_properties(T("M8", 3, 2, nu=1), 3)
    assert p["i_max_eq_2"] is False
    # uncovered families stay unspecified rather than invented
    p = predicted_properties(T("Q8", 2, 2), 3)
    assert "i_max" not in p and "i_max_eq_2" not in p
