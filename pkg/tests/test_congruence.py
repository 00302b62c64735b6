import random

import pytest

from pgatlas.fp import Mat2, all_mat2, gl2_enumerate
from pgatlas.congruence import congruence_normal_form, transversal


def test_counts():
    assert len(transversal(2, True)) == 3
    for p in (3, 5, 7):
        assert len(transversal(p, True)) == p + 3
    assert len(transversal(2, False)) == 3
    for p in (3, 5, 7):
        assert len(transversal(p, False)) == 4


def test_p2_exact_lists():
    inv = [cls.representative.entries for cls in transversal(2, True)]
    assert inv == [((1, 0), (0, 1)), ((0, 1), (1, 0)), ((1, 0), (1, 1))]
    sing = [cls.representative.entries for cls in transversal(2, False)]
    assert sing == [((0, 1), (0, 0)), ((0, 0), (0, 1)), ((0, 0), (0, 0))]


def test_zero_matrix_fixed():
    cls, X = congruence_normal_form(Mat2.zero(5))
    assert cls.representative.entries == ((0, 0), (0, 0))
    assert X.entries == Mat2.identity(5).entries


def test_representative_is_its_own_normal_form():
    A = Mat2(((0, 1), (-1, 0)), 5)
    cls, X = congruence_normal_form(A)
    assert cls.representative.entries == A.entries


def test_f2_unipotent():
    # determined by brute force over all 6 invertible X
    A = Mat2(((1, 1), (0, 1)), 2)
    cls, X = congruence_normal_form(A)
    assert X.mul(A).mul(X.transpose()).entries == cls.representative.entries
    orbit = {x.mul(A).mul(x.transpose()).entries for x in gl2_enumerate(2)}
    assert cls.representative.entries in orbit


@pytest.mark.parametrize("p", [2, 3, 5])
def test_orbit_partition_exhaustive(p):
    reps = {
        cls.representative.entries
        for inv in (True, False)
        for cls in transversal(p, inv)
    }
    hit = {}
    for A in all_mat2(p):
        cls, X = congruence_normal_form(A)
        # witness validity
        assert X.mul(A).mul(X.transpose()).entries == cls.representative.entries
        assert X.is_invertible()
        # congruence preserves invertibility and rank
        assert (cls.representative.det() != 0) == (A.det() != 0)
        assert cls.representative.rank() == A.rank()
        hit.setdefault(cls.representative.entries, 0)
        hit[cls.representative.entries] += 1
    assert set(hit) == reps  # every class is met, exactly the printed ones


def test_p7_sampled():
    rng = random.Random(77)
    mats = list(all_mat2(7))
    for A in rng.sample(mats, 60):
        cls, X = congruence_normal_form(A)
        assert X.mul(A).mul(X.transpose()).entries == cls.representative.entries
        assert cls.representative.rank() == A.rank()


def test_representatives_pairwise_non_congruent():
    for p in (2, 3, 5):
        reps = [
            cls.representative
            for inv in (True, False)
            for cls in transversal(p, inv)
        ]
        for i, A in enumerate(reps):
            orbit = {X.mul(A).mul(X.transpose()).entries for X in gl2_enumerate(p)}
            for j, B in enumerate(reps):
                if i != j:
                    assert B.entries not in orbit
