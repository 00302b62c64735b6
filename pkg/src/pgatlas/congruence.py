"""Transversals and normal forms for 2x2 matrices over F_p under the
congruence action A -> X A X^t with X invertible.

The transversal lists are the contract; the normal form is computed by
exhaustive orbit search over GL_2(F_p) rather than by case analysis.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import List, Optional, Tuple

from .fp import Mat2, check_prime, eta, gl2_enumerate

__all__ = ["TransversalClass", "transversal", "congruence_normal_form"]


@dataclass(frozen=True)
class TransversalClass:
    """One congruence class: its printed representative, a family tag
    identifying which lemma item it instantiates, and the item's
    parameters (nu and/or r) where applicable."""

    representative: Mat2
    family: str
    nu: Optional[int] = None
    r: Optional[int] = None


@lru_cache(maxsize=None)
def transversal(p: int, invertible: bool) -> Tuple[TransversalClass, ...]:
    """The congruence transversal: p+3 invertible classes for odd p and 3
    for p = 2; 4 non-invertible classes for odd p (zero included), 3 for
    p = 2."""
    check_prime(p)
    out: List[TransversalClass] = []
    if invertible:
        if p == 2:
            out.append(TransversalClass(Mat2(((1, 0), (0, 1)), p), "p2-1"))
            out.append(TransversalClass(Mat2(((0, 1), (1, 0)), p), "p2-2"))
            out.append(TransversalClass(Mat2(((1, 0), (1, 1)), p), "p2-3"))
        else:
            e = eta(p)
            out.append(TransversalClass(Mat2(((0, 1), (-1, 0)), p), "odd-1"))
            for nu in (1, e):
                out.append(TransversalClass(Mat2(((nu, 1), (-1, 0)), p), "odd-2", nu=nu))
            for nu in (1, e):
                out.append(TransversalClass(Mat2(((1, 0), (0, nu)), p), "odd-3", nu=nu))
            for r in range(1, p - 1):
                out.append(TransversalClass(Mat2(((1, 1), (-1, r)), p), "odd-4", r=r))
    else:
        out.append(TransversalClass(Mat2(((0, 1), (0, 0)), p), "ni-1"))
        if p == 2:
            out.append(TransversalClass(Mat2(((0, 0), (0, 1)), p), "ni-2", nu=1))
        else:
            for nu in (1, eta(p)):
                out.append(TransversalClass(Mat2(((0, 0), (0, nu)), p), "ni-2", nu=nu))
        out.append(TransversalClass(Mat2.zero(p), "ni-3"))
    return tuple(out)


@lru_cache(maxsize=None)
def _rep_index(p: int) -> dict:
    reps = {}
    for inv in (True, False):
        for cls in transversal(p, inv):
            reps[cls.representative.entries] = cls
    return reps


def congruence_normal_form(A: Mat2) -> Tuple[TransversalClass, Mat2]:
    """The unique transversal member congruent to A, with an invertible
    witness X satisfying X A X^t = representative."""
    p = A.p
    reps = _rep_index(p)
    hits = []
    if A.entries in reps:  # already a representative: identity witness
        hits.append((reps[A.entries], Mat2.identity(p)))
    for X in gl2_enumerate(p):
        B = X.mul(A).mul(X.transpose())
        cls = reps.get(B.entries)
        if cls is not None:
            hits.append((cls, X))
    classes = {cls.representative.entries for cls, _ in hits}
    if len(classes) != 1:
        raise AssertionError(
            f"matrix {A.entries} met {len(classes)} transversal members; "
            "the transversal is not a transversal"
        )
    return hits[0]
