"""Normal-form engine for the central extensions under study.

A ``GroupData`` presents a group on generators a, b, c = [a,b] and a
central elementary-abelian subgroup Z = <z_1, ..., z_zrank> via

    a^(p^n) = z^alpha,  b^(p^m) = z^beta,  c^p = z^gamma,
    [c,a] = z^delta,    [c,b] = z^epsilon,

with z^v meaning z_1^(v_1) z_2^(v_2).  Elements are collected normal
forms a^i b^j c^k z^u with i < p^n, j < p^m, k < p, u in F_p^zrank; the
group has order p^(n+m+1+zrank) exactly when the datum is consistent
(see ``check_admissible``).  zrank = 0 encodes the minimal non-abelian
group M_p(n,m,1) itself.

Multiplication is a closed formula obtained by collecting from the left
with the rewrite rules

    c^k a -> a c^k z^(k*delta),    c^k b -> b c^k z^(k*epsilon),
    b a   -> a b c^(p-1) z^(-gamma),

plus exponent wrapping i >= p^n -> z^alpha etc.  Correctness is enforced
by the associativity/consistency tests, not trusted.
"""

from __future__ import annotations

import math
import os
from dataclasses import dataclass
from functools import lru_cache
from hashlib import blake2b
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

import numpy as np

from .fp import SUPPORTED_PRIMES, check_prime
from . import kernel

__all__ = [
    "GroupData",
    "Element",
    "Subgroup",
    "Group",
    "group_for",
    "check_admissible",
    "spans_center",
    "multiply",
    "inverse",
    "power",
    "commutator",
    "order_of",
    "structure",
    "quotient_mod_Z",
    "all_a1_subgroups",
    "i_minmax",
    "maximal_subgroups",
    "subgroup_enum_bound",
    "SizeBoundError",
]

# Desk-scale defaults; PGATLAS_MAX_ORDER overrides both.
DEFAULT_SUBGROUP_ENUM_MAX = 5**5
DEFAULT_ISO_MAX = 2**13


def max_order_override() -> Optional[int]:
    raw = os.environ.get("PGATLAS_MAX_ORDER")
    return int(raw) if raw else None


def subgroup_enum_bound() -> int:
    return max_order_override() or DEFAULT_SUBGROUP_ENUM_MAX


def iso_bound() -> int:
    return max_order_override() or DEFAULT_ISO_MAX


class SizeBoundError(RuntimeError):
    """An operation was asked to run above its configured desk bound."""


class InconsistentPresentationError(ValueError):
    """The datum does not present a group of the full expected order."""


def _tup(v) -> Tuple[int, ...]:
    return tuple(int(x) for x in v)


@dataclass(frozen=True)
class GroupData:
    """Presentation datum; immutable and hashable."""

    p: int
    n: int
    m: int
    zrank: int
    alpha: Tuple[int, ...] = ()
    beta: Tuple[int, ...] = ()
    gamma: Tuple[int, ...] = ()
    delta: Tuple[int, ...] = ()
    epsilon: Tuple[int, ...] = ()

    def __post_init__(self):
        check_prime(self.p)
        if not (1 <= self.m <= self.n):
            raise ValueError(f"need n >= m >= 1, got n={self.n}, m={self.m}")
        if self.p == 2 and self.n < 2:
            raise ValueError("p = 2 requires n >= 2")
        if self.zrank not in (0, 1, 2):
            raise ValueError("zrank must be 0, 1 or 2")
        for name in ("alpha", "beta", "gamma", "delta", "epsilon"):
            v = _tup(getattr(self, name))
            if len(v) != self.zrank:
                raise ValueError(f"{name} must have length zrank={self.zrank}")
            object.__setattr__(self, name, tuple(x % self.p for x in v))

    @property
    def order(self) -> int:
        return self.p ** (self.n + self.m + 1 + self.zrank)

    def to_json(self) -> dict:
        return {
            "p": self.p,
            "n": self.n,
            "m": self.m,
            "zrank": self.zrank,
            "alpha": list(self.alpha),
            "beta": list(self.beta),
            "gamma": list(self.gamma),
            "delta": list(self.delta),
            "epsilon": list(self.epsilon),
        }

    @staticmethod
    def from_json(obj: dict) -> "GroupData":
        return GroupData(
            p=int(obj["p"]),
            n=int(obj["n"]),
            m=int(obj["m"]),
            zrank=int(obj["zrank"]),
            alpha=_tup(obj.get("alpha", ())),
            beta=_tup(obj.get("beta", ())),
            gamma=_tup(obj.get("gamma", ())),
            delta=_tup(obj.get("delta", ())),
            epsilon=_tup(obj.get("epsilon", ())),
        )


@dataclass(frozen=True)
class Element:
    """Normal-form exponent tuple a^i b^j c^k z^u."""

    i: int
    j: int
    k: int
    u: Tuple[int, ...] = ()


def _binom2(x: int) -> int:
    return x * (x - 1) // 2


class _RawOps:
    """Coordinate arithmetic for a datum, with no consistency assumption.

    Everything works on plain tuples (i, j, k, u...); ``Group`` wraps this
    once admissibility is established.
    """

    def __init__(self, data: GroupData):
        self.data = data
        self.p = data.p
        self.pn = data.p**data.n
        self.pm = data.p**data.m
        self.zrank = data.zrank

    def identity(self):
        return (0, 0, 0) + (0,) * self.zrank

    def mul(self, x, y):
        p, pn, pm, zr = self.p, self.pn, self.pm, self.zrank
        d = self.data
        i1, j1, k1 = x[0], x[1], x[2]
        i2, j2, k2 = y[0], y[1], y[2]
        K = k1 - i2 * j1
        i, j = i1 + i2, j1 + j2
        kraw = K + k2
        cd = i2 * k1 - j1 * _binom2(i2)  # coefficient of delta
        ce = K * j2 - i2 * _binom2(j1)  # coefficient of epsilon
        ca, i = divmod(i, pn)
        cb, j = divmod(j, pm)
        cc, k = divmod(kraw, p)
        out = [i, j, k]
        for t in range(zr):
            out.append(
                (
                    x[3 + t]
                    + y[3 + t]
                    + cd * d.delta[t]
                    + ce * d.epsilon[t]
                    + ca * d.alpha[t]
                    + cb * d.beta[t]
                    + cc * d.gamma[t]
                )
                % p
            )
        return tuple(out)

    def gen_power(self, gen: str, e: int):
        """Power of a single generator (unambiguous even when the datum is
        inconsistent, since single-letter words need no collection)."""
        p, pn, pm, zr = self.p, self.pn, self.pm, self.zrank
        d = self.data
        z = [0] * zr
        if gen == "a":
            q, r = divmod(e, pn)
            for t in range(zr):
                z[t] = q * d.alpha[t] % p
            return (r, 0, 0, *z)
        if gen == "b":
            q, r = divmod(e, pm)
            for t in range(zr):
                z[t] = q * d.beta[t] % p
            return (0, r, 0, *z)
        if gen == "c":
            q, r = divmod(e, p)
            for t in range(zr):
                z[t] = q * d.gamma[t] % p
            return (0, 0, r, *z)
        raise ValueError(gen)


def spans_center(data: GroupData) -> bool:
    """True iff gamma, delta, epsilon span F_p^zrank, i.e. Phi(G')G_3
    fills the whole presented central subgroup (required for Property-P
    data: otherwise Z is strictly larger than Phi(G')G_3)."""
    if data.zrank == 0:
        return True
    rows = [data.gamma, data.delta, data.epsilon]
    # rank over F_p by Gaussian elimination on a 3 x zrank matrix
    p = data.p
    mat = [list(r) for r in rows]
    rank, col = 0, 0
    while rank < len(mat) and col < data.zrank:
        piv = next((r for r in range(rank, len(mat)) if mat[r][col] % p), None)
        if piv is None:
            col += 1
            continue
        mat[rank], mat[piv] = mat[piv], mat[rank]
        inv = pow(mat[rank][col], -1, p)
        mat[rank] = [v * inv % p for v in mat[rank]]
        for r in range(len(mat)):
            if r != rank and mat[r][col] % p:
                f = mat[r][col]
                mat[r] = [(mat[r][c] - f * mat[rank][c]) % p for c in range(data.zrank)]
        rank += 1
        col += 1
    return rank == data.zrank


def check_admissible(data: GroupData) -> bool:
    """Consistency of the rewrite system: the presented group has order
    exactly p^(n+m+1+zrank).

    Checked through the collection overlap identities (the power relations
    b^(p^m), a^(p^n), c^p must behave centrally under collection, plus the
    c(ba) = (cb)a overlap), with an exhaustive associativity fallback for
    orders <= 2^6.  Returns False instead of raising.
    """
    try:
        ops = _RawOps(data)
    except Exception:
        return False
    e = ops.identity()
    a = ops.gen_power("a", 1)
    b = ops.gen_power("b", 1)
    c = ops.gen_power("c", 1)
    aN1 = ops.gen_power("a", ops.pn - 1)
    bM1 = ops.gen_power("b", ops.pm - 1)
    cP1 = ops.gen_power("c", ops.p - 1)
    mul = ops.mul
    checks = [
        (mul(mul(b, aN1), a), mul(b, mul(aN1, a))),
        (mul(mul(bM1, b), a), mul(bM1, mul(b, a))),
        (mul(mul(cP1, c), a), mul(cP1, mul(c, a))),
        (mul(mul(cP1, c), b), mul(cP1, mul(c, b))),
        (mul(c, mul(b, a)), mul(mul(c, b), a)),
        (mul(mul(aN1, a), b), mul(aN1, mul(a, b))),
        (mul(mul(c, a), aN1), mul(c, mul(a, aN1))),
        (mul(mul(c, b), bM1), mul(c, mul(b, bM1))),
        (mul(mul(b, a), aN1), mul(b, mul(a, aN1))),
    ]
    if any(lhs != rhs for lhs, rhs in checks):
        return False
    if data.order <= 2**6:
        g = Group(data, _trusted=True)
        t = g.table()
        # left[x,y,z] = (xy)z, right[x,y,z] = x(yz)
        if not np.array_equal(t[t, :], t[:, t]):
            return False
    return True


# ---------------------------------------------------------------------------
# The group engine


class Subgroup:
    """A subgroup given by its sorted member indices plus generator
    witnesses.  Equality and hashing use the member list only."""

    __slots__ = ("group", "members", "gens")

    def __init__(self, group: "Group", members: np.ndarray, gens: Tuple[int, ...]):
        self.group = group
        self.members = np.asarray(members, dtype=np.int32)
        self.gens = tuple(int(g) for g in gens)

    @property
    def order(self) -> int:
        return int(self.members.size)

    def index(self) -> int:
        return self.group.order // self.order

    def contains(self, idx: int) -> bool:
        pos = np.searchsorted(self.members, idx)
        return pos < self.members.size and self.members[pos] == idx

    def signature(self) -> bytes:
        return blake2b(self.members.tobytes(), digest_size=12).digest()

    def elements(self) -> List[Element]:
        return [self.group.element(int(i)) for i in self.members]

    def __eq__(self, other):
        return isinstance(other, Subgroup) and np.array_equal(self.members, other.members)

    def __hash__(self):
        return hash(self.signature())

    def __repr__(self):
        return f"Subgroup(order={self.order}, index={self.index()})"


@dataclass
class StructureRecord:
    order: int
    derived_subgroup: Subgroup
    G3: Subgroup
    center: Subgroup
    frattini: Subgroup
    d: int
    abelianization_type: Tuple[int, ...]
    order_histogram: Dict[int, int]


class Group:
    """Element engine for an admissible datum.

    Elements are indices 0 .. order-1 in the mixed radix (i, j, k, u); all
    operations are pure, so instances are safe to share between threads.
    """

    def __init__(self, data: GroupData, _trusted: bool = False):
        if not _trusted and not check_admissible(data):
            raise InconsistentPresentationError(
                f"datum is not admissible (inconsistent presentation): {data}"
            )
        self.data = data
        self.ops = _RawOps(data)
        self.p = data.p
        self.n = data.n
        self.m = data.m
        self.zrank = data.zrank
        self.order = data.order
        self.pn = data.p**data.n
        self.pm = data.p**data.m
        idx = np.arange(self.order, dtype=np.int64)
        radices = [self.pn, self.pm, self.p] + [self.p] * self.zrank
        coords = []
        rem = idx
        for r in reversed(radices):
            rem, digit = np.divmod(rem, r)
            coords.append(digit)
        coords.reverse()
        self._coords = coords  # [I, J, K, U0, U1...] int64 arrays
        self._weights = []
        w = 1
        for r in reversed(radices):
            self._weights.append(w)
            w *= r
        self._weights.reverse()
        self.identity = 0
        self.a = self.encode((1, 0, 0) + (0,) * self.zrank)
        self.b = self.encode((0, 1, 0) + (0,) * self.zrank)
        self.c = self.encode((0, 0, 1) + (0,) * self.zrank)
        self.z = [
            self.encode((0, 0, 0) + tuple(1 if t == s else 0 for t in range(self.zrank)))
            for s in range(self.zrank)
        ]
        self._table: Optional[np.ndarray] = None
        self._inv: Optional[np.ndarray] = None
        self._orders: Optional[np.ndarray] = None
        self._structure: Optional[StructureRecord] = None
        self._a1_cache: Optional[dict] = None

    # -- encoding ----------------------------------------------------------

    def encode(self, coords) -> int:
        return int(sum(int(c) * w for c, w in zip(coords, self._weights)))

    def decode(self, idx: int) -> tuple:
        return tuple(int(arr[idx]) for arr in self._coords)

    def element(self, idx: int) -> Element:
        t = self.decode(idx)
        return Element(t[0], t[1], t[2], t[3:])

    def index_of(self, x: Element) -> int:
        u = _tup(x.u)
        if len(u) != self.zrank:
            raise ValueError("element has wrong central rank")
        coords = (x.i % self.pn, x.j % self.pm, x.k % self.p) + tuple(v % self.p for v in u)
        return self.encode(coords)

    # -- scalar operations --------------------------------------------------

    def mul(self, x: int, y: int) -> int:
        return self.encode(self.ops.mul(self.decode(x), self.decode(y)))

    def inv(self, x: int) -> int:
        i, j, k = self._coords[0][x], self._coords[1][x], self._coords[2][x]
        i2 = int(-i) % self.pn
        j2 = int(-j) % self.pm
        k2 = (int(i) * j2 - int(k)) % self.p
        partial = (i2, j2, k2) + (0,) * self.zrank
        w = self.ops.mul(partial, self.decode(x))
        u2 = tuple((-w[3 + t]) % self.p for t in range(self.zrank))
        return self.encode((i2, j2, k2) + u2)

    def pow(self, x: int, e: int) -> int:
        if e < 0:
            return self.pow(self.inv(x), -e)
        r, base = self.identity, x
        while e:
            if e & 1:
                r = self.mul(r, base)
            base = self.mul(base, base)
            e >>= 1
        return r

    def comm(self, x: int, y: int) -> int:
        return self.mul(self.mul(self.inv(x), self.inv(y)), self.mul(x, y))

    def conj(self, x: int, g: int) -> int:
        return self.mul(self.mul(self.inv(g), x), g)

    def order_of(self, x: int) -> int:
        o, y = 1, x
        while y != self.identity:
            y = self.pow(y, self.p)
            o *= self.p
        return o

    # -- vectorized operations ---------------------------------------------

    def _decode_vec(self, X: np.ndarray):
        return [arr[X] for arr in self._coords]

    def mul_vec(self, X, Y) -> np.ndarray:
        p, pn, pm = self.p, self.pn, self.pm
        d = self.data
        X = np.asarray(X, dtype=np.int64)
        Y = np.asarray(Y, dtype=np.int64)
        cx = self._decode_vec(X)
        cy = self._decode_vec(Y)
        i1, j1, k1 = cx[0], cx[1], cx[2]
        i2, j2, k2 = cy[0], cy[1], cy[2]
        K = k1 - i2 * j1
        cd = (i2 * k1 - j1 * (i2 * (i2 - 1) // 2)) % p
        ce = (K * j2 - i2 * (j1 * (j1 - 1) // 2)) % p
        ca, i = np.divmod(i1 + i2, pn)
        cb, j = np.divmod(j1 + j2, pm)
        cc, k = np.divmod(K + k2, p)
        out = (i * pm + j) * p + k
        for t in range(self.zrank):
            u = (
                cx[3 + t]
                + cy[3 + t]
                + cd * d.delta[t]
                + ce * d.epsilon[t]
                + ca * d.alpha[t]
                + cb * d.beta[t]
                + cc * d.gamma[t]
            ) % p
            out = out * p + u
        return out

    def pow_vec(self, X, e: int) -> np.ndarray:
        X = np.asarray(X, dtype=np.int64)
        if e < 0:
            return self.pow_vec(self.inv_vec(X), -e)
        r = np.zeros_like(X)
        base = X
        while e:
            if e & 1:
                r = self.mul_vec(r, base)
            base = self.mul_vec(base, base)
            e >>= 1
        return r

    def inv_vec(self, X) -> np.ndarray:
        X = np.asarray(X, dtype=np.int64)
        p, pn, pm = self.p, self.pn, self.pm
        cx = self._decode_vec(X)
        i, j, k = cx[0], cx[1], cx[2]
        i2 = (-i) % pn
        j2 = (-j) % pm
        k2 = (i * j2 - k) % p
        partial = (i2 * pm + j2) * p + k2
        for t in range(self.zrank):
            partial = partial * p
        w = self.mul_vec(partial, X)
        cw = self._decode_vec(w)
        out = (i2 * pm + j2) * p + k2
        for t in range(self.zrank):
            out = out * p + (-cw[3 + t]) % p
        return out

    def comm_vec(self, X, Y) -> np.ndarray:
        X = np.asarray(X, dtype=np.int64)
        Y = np.asarray(Y, dtype=np.int64)
        return self.mul_vec(self.mul_vec(self.inv_vec(X), self.inv_vec(Y)), self.mul_vec(X, Y))

    # -- tables ---------------------------------------------------------------

    def free_table(self) -> None:
        """Drop the cached Cayley table (large for big groups); it is
        rebuilt on demand."""
        self._table = None

    def table(self) -> np.ndarray:
        if self._table is None:
            idx = np.arange(self.order, dtype=np.int64)
            chunk = max(1, (1 << 16) // self.order)
            parts = []
            for lo in range(0, self.order, chunk):
                rows = idx[lo : lo + chunk]
                X = np.repeat(rows, self.order)
                Y = np.tile(idx, rows.size)
                parts.append(self.mul_vec(X, Y).reshape(rows.size, self.order))
            self._table = np.concatenate(parts).astype(np.int32)
        return self._table

    def inv_table(self) -> np.ndarray:
        if self._inv is None:
            self._inv = self.inv_vec(np.arange(self.order, dtype=np.int64)).astype(np.int32)
        return self._inv

    def element_orders(self) -> np.ndarray:
        if self._orders is None:
            cur = np.arange(self.order, dtype=np.int64)
            orders = np.ones(self.order, dtype=np.int64)
            while (cur != 0).any():
                live = cur != 0
                orders[live] *= self.p
                cur = self.pow_vec(cur, self.p) * live
            self._orders = orders
        return self._orders

    # -- subgroup machinery -----------------------------------------------

    def closure(self, gens: Iterable[int]) -> np.ndarray:
        gens = np.unique(np.asarray(list(gens) + [self.identity], dtype=np.int32))
        if self._table is not None:
            return kernel.closure(self._table, gens, self.order)
        # table-free scalar BFS; fine for the small/moderate subgroups that
        # occur outside the A1 descent (which always builds the table first)
        glist = [int(g) for g in gens]
        seen = {self.identity}
        frontier = [self.identity]
        while frontier:
            nxt = []
            for x in frontier:
                for g in glist:
                    y = self.mul(x, g)
                    if y not in seen:
                        seen.add(y)
                        nxt.append(y)
            frontier = nxt
        return np.array(sorted(seen), dtype=np.int32)

    def subgroup(self, gens: Iterable[int]) -> Subgroup:
        gens = [int(g) for g in gens]
        return Subgroup(self, self.closure(gens), tuple(gens))

    def zsubgroup(self) -> Subgroup:
        return self.subgroup(self.z)

    def derived_subgroup(self) -> Subgroup:
        ca, cb = self.comm(self.c, self.a), self.comm(self.c, self.b)
        return self.subgroup([self.c, ca, cb])

    def g3(self) -> Subgroup:
        return self.subgroup([self.comm(self.c, self.a), self.comm(self.c, self.b)])

    def center(self) -> Subgroup:
        idx = np.arange(self.order, dtype=np.int64)
        ca = self.comm_vec(idx, np.full(self.order, self.a, dtype=np.int64))
        cb = self.comm_vec(idx, np.full(self.order, self.b, dtype=np.int64))
        members = np.flatnonzero((ca == 0) & (cb == 0)).astype(np.int32)
        return Subgroup(self, members, tuple(int(x) for x in members[:4]))

    def frattini(self) -> Subgroup:
        gens = [
            self.c,
            self.comm(self.c, self.a),
            self.comm(self.c, self.b),
            self.pow(self.a, self.p),
            self.pow(self.b, self.p),
        ]
        return self.subgroup(gens)

    def structure(self) -> StructureRecord:
        if self._structure is not None:
            return self._structure
        der = self.derived_subgroup()
        frat = self.frattini()
        d = round(math.log(self.order / frat.order, self.p))
        # abelianization: G/G' is 2-generated abelian of type (d1, d2)
        member = np.zeros(self.order, dtype=bool)
        member[der.members] = True
        idx = np.arange(self.order, dtype=np.int64)
        cur = idx.copy()
        expo = np.ones(self.order, dtype=np.int64)
        while not member[cur].all():
            live = ~member[cur]
            expo[live] *= self.p
            cur = np.where(live, self.pow_vec(cur, self.p), cur)
        d1 = int(expo.max())
        d2 = (self.order // der.order) // d1
        ords = self.element_orders()
        vals, counts = np.unique(ords, return_counts=True)
        hist = {int(v): int(c) for v, c in zip(vals, counts)}
        self._structure = StructureRecord(
            order=self.order,
            derived_subgroup=der,
            G3=self.g3(),
            center=self.center(),
            frattini=frat,
            d=d,
            abelianization_type=(d1, d2) if d2 > 1 else (d1,),
            order_histogram=hist,
        )
        return self._structure

    # maximal subgroups ------------------------------------------------------

    def _quotient_basis(self, members: np.ndarray, gens: Sequence[int], phi: np.ndarray):
        """Lift a basis of H/Phi(H) from the generator witnesses."""
        inside = np.zeros(self.order, dtype=bool)
        inside[phi] = True
        span_gens = list(phi_gens_of(self, phi))
        basis: List[int] = []
        for g in list(gens) + [int(x) for x in members]:
            if not inside[g]:
                basis.append(int(g))
                grown = self.closure(span_gens + basis)
                inside[:] = False
                inside[grown] = True
                if grown.size == members.size:
                    break
        return basis

    def maximal_subgroups_of(self, H: Subgroup) -> List[Subgroup]:
        phi_members = self._phi_of(H)
        basis = self._quotient_basis(H.members, H.gens, phi_members)
        d = len(basis)
        p = self.p
        phi_gens = phi_gens_of(self, phi_members)
        out = []
        for functional in _normalized_functionals(p, d):
            kb = _kernel_basis(functional, p)
            lifts = []
            for vec in kb:
                g = self.identity
                for coeff, bg in zip(vec, basis):
                    if coeff:
                        g = self.mul(g, self.pow(bg, coeff))
                lifts.append(g)
            gens = list(phi_gens) + lifts
            out.append(Subgroup(self, self.closure(gens), tuple(gens)))
        return out

    def maximal_subgroups(self) -> List[Subgroup]:
        return self.maximal_subgroups_of(self.full_subgroup())

    def full_subgroup(self) -> Subgroup:
        return Subgroup(self, np.arange(self.order, dtype=np.int32), (self.a, self.b))

    def _phi_of(self, H: Subgroup) -> np.ndarray:
        """Member array of Phi(H) = H' H^p (p-th powers of a generating
        set suffice modulo H')."""
        comm_gens = self._derived_gens(H.gens)
        pgens = [self.pow(g, self.p) for g in H.gens]
        return self.closure(comm_gens + pgens)

    def _derived_gens(self, gens: Sequence[int]) -> List[int]:
        """Generators of <gens>' for class <= 3 ambient groups: pairwise
        commutators plus their commutators with the generators."""
        gens = list(gens)
        s = set()
        for ix, x in enumerate(gens):
            for y in gens[ix + 1 :]:
                w = self.comm(x, y)
                if w != self.identity:
                    s.add(w)
        for w in list(s):
            for g in gens:
                w2 = self.comm(w, g)
                if w2 != self.identity:
                    s.add(w2)
        return sorted(s)

    def is_a1_subgroup(self, H: Subgroup) -> bool:
        """d(H) = 2 and |H'| = p (the minimal non-abelian test)."""
        der_gens = self._derived_gens(H.gens)
        if not der_gens:
            return False
        if self.closure(der_gens).size != self.p:
            return False
        phi = self._phi_of(H)
        return H.order == phi.size * self.p**2

    def phi_ext_g3(self) -> Subgroup:
        """Phi(G')G_3 (= the presented central subgroup for Property-P
        data, computed honestly from the element engine)."""
        ca, cb = self.comm(self.c, self.a), self.comm(self.c, self.b)
        gens = [self.pow(self.c, self.p), self.pow(ca, self.p), self.pow(cb, self.p), ca, cb]
        return self.subgroup(gens)

    # A1 machinery -------------------------------------------------------------

    def _a1_scan(self) -> dict:
        """Explore every non-abelian subgroup through maximal-subgroup
        descent, recording A1 subgroups and relative I_min/I_max values.

        Every non-abelian subgroup K lies under a chain of non-abelian
        subgroups reaching G (any subgroup containing K is non-abelian),
        so the descent is exhaustive.
        """
        if self._a1_cache is not None:
            return self._a1_cache
        if self.order > subgroup_enum_bound():
            raise SizeBoundError(
                f"|G| = {self.order} exceeds the subgroup enumeration bound "
                f"{subgroup_enum_bound()} (set PGATLAS_MAX_ORDER to override)"
            )
        self.table()  # the descent always runs on the compiled/kernel path
        memo: Dict[bytes, tuple] = {}
        a1_members: List[Subgroup] = []

        def visit(H: Subgroup):
            key = H.signature()
            if key in memo:
                return memo[key]
            der_gens = self._derived_gens(H.gens)
            if not der_gens:
                res = (True, False, None, None)  # abelian
                memo[key] = res
                return res
            der = self.closure(der_gens)
            phi = self._phi_of(H)
            d = round(math.log(H.order / phi.size, self.p))
            if der.size == self.p and d == 2:
                res = (False, True, 0, 0)
                memo[key] = res
                a1_members.append(H)
                return res
            imin, imax = None, None
            for M in self.maximal_subgroups_of(H):
                ab, _, mn, mx = visit(M)
                if ab:
                    continue
                imin = mn + 1 if imin is None else min(imin, mn + 1)
                imax = mx + 1 if imax is None else max(imax, mx + 1)
            res = (False, False, imin, imax)
            memo[key] = res
            return res

        top = visit(self.full_subgroup())
        self._a1_cache = {"top": top, "a1": a1_members}
        return self._a1_cache

    def all_a1_subgroups(self) -> List[Subgroup]:
        return list(self._a1_scan()["a1"])

    def a1_subgroups_of(self, H: Subgroup) -> List[Subgroup]:
        """A1 subgroups contained in H (restricted descent)."""
        self._a1_scan()
        return [K for K in self._a1_cache["a1"] if _subset(K.members, H.members)]

    def i_minmax(self) -> Tuple[int, int]:
        ab, is_a1, imin, imax = self._a1_scan()["top"]
        if ab:
            raise RuntimeError("abelian group has no A1 subgroups")
        if is_a1:
            return (0, 0)
        if imin is None:
            raise RuntimeError("internal error: non-abelian group without A1 subgroup")
        return (imin, imax)


def _subset(small: np.ndarray, big: np.ndarray) -> bool:
    pos = np.searchsorted(big, small)
    pos = np.clip(pos, 0, big.size - 1)
    return bool((big[pos] == small).all())


def phi_gens_of(group: Group, phi_members: np.ndarray) -> List[int]:
    """A small generating set for a subgroup given by members: greedy.

    For the Phi-subgroups encountered here a handful of generators always
    suffices; fall back to all members if the greedy pass stalls.
    """
    if phi_members.size == 1:
        return []
    inside = np.zeros(group.order, dtype=bool)
    inside[group.identity] = True
    gens: List[int] = []
    for g in phi_members:
        g = int(g)
        if inside[g]:
            continue
        gens.append(g)
        grown = group.closure(gens)
        inside[:] = False
        inside[grown] = True
        if grown.size == phi_members.size:
            break
    return gens


def _normalized_functionals(p: int, d: int):
    """Nonzero functionals on F_p^d with leading nonzero entry 1: one per
    hyperplane."""
    if d == 0:
        return
    import itertools

    for lead in range(d):
        for rest in itertools.product(range(p), repeat=d - lead - 1):
            yield (0,) * lead + (1,) + rest


def _kernel_basis(functional, p: int):
    d = len(functional)
    lead = functional.index(1)
    basis = []
    for t in range(d):
        if t == lead:
            continue
        vec = [0] * d
        vec[t] = 1
        vec[lead] = (-functional[t]) % p
        basis.append(tuple(vec))
    return basis


@lru_cache(maxsize=512)
def group_for(data: GroupData) -> Group:
    return Group(data)


# ---------------------------------------------------------------------------
# spec-level operations on GroupData


def multiply(data: GroupData, x: Element, y: Element) -> Element:
    g = group_for(data)
    return g.element(g.mul(g.index_of(x), g.index_of(y)))


def inverse(data: GroupData, x: Element) -> Element:
    g = group_for(data)
    return g.element(g.inv(g.index_of(x)))


def power(data: GroupData, x: Element, e: int) -> Element:
    g = group_for(data)
    return g.element(g.pow(g.index_of(x), e))


def commutator(data: GroupData, x: Element, y: Element) -> Element:
    g = group_for(data)
    return g.element(g.comm(g.index_of(x), g.index_of(y)))


def order_of(data: GroupData, x: Element) -> int:
    g = group_for(data)
    return g.order_of(g.index_of(x))


def structure(data: GroupData) -> StructureRecord:
    return group_for(data).structure()


def quotient_mod_Z(data: GroupData) -> GroupData:
    """The zrank = 0 datum of G modulo its presented central subgroup;
    for Property-P data this is M_p(n,m,1)."""
    if data.zrank == 0:
        raise ValueError("datum has no central coordinates to quotient out")
    return GroupData(p=data.p, n=data.n, m=data.m, zrank=0)


def all_a1_subgroups(data: GroupData) -> List[Subgroup]:
    return group_for(data).all_a1_subgroups()


def i_minmax(data: GroupData) -> Tuple[int, int]:
    return group_for(data).i_minmax()


def maximal_subgroups(data: GroupData) -> List[Subgroup]:
    return group_for(data).maximal_subgroups()
