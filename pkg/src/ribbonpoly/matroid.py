"""Matroids given by complete rank tables, and Tutte polynomials of perspectives.

A rank table is indexed by edge-subset bitmask, so ``ranks[H]`` is the rank
of ``H``.  Tables are materialised in full; the ground set is capped at 24
elements and exhaustive axiom checks run up to 12.
"""

from __future__ import annotations

import random
from collections import Counter
from dataclasses import dataclass, field

import numpy as np

from .laurent import LV_VARS, TUTTE_VARS, LaurentPoly, substitute
from .rgraph import RibbonGraph, underlying_graph, Multigraph

MAX_GROUND = 24
EXHAUSTIVE_AXIOMS = 12
EXHAUSTIVE_PERSPECTIVE = 12
CIRCUIT_CHECK = 10
MAX_CIRCUITS = 16


class MatroidError(ValueError):
    pass


class GroundSetTooLarge(MatroidError):
    pass


class MatroidAxiomError(MatroidError):
    pass


class NotAPerspective(MatroidError):
    def __init__(self, msg: str, witness: tuple[int, int] | None = None):
        super().__init__(msg)
        self.witness = witness


def popcount(H: int) -> int:
    return bin(H).count("1")


def _axiom_violation(ranks: np.ndarray, n: int, sample: int | None = None) -> str | None:
    size = 1 << n
    if ranks[0] != 0:
        return "R1: rank of the empty set is not zero"
    idx = np.arange(size, dtype=np.int64)
    rng = random.Random(0)
    for y in range(n):
        by = 1 << y
        base = idx[(idx & by) == 0]
        if sample is not None and len(base) > sample:
            base = np.array(rng.sample(list(base), sample), dtype=np.int64)
        step = ranks[base | by] - ranks[base]
        bad = np.nonzero((step != 0) & (step != 1))[0]
        if len(bad):
            H = int(base[bad[0]])
            return f"R2: r(H+{y}) - r(H) = {int(step[bad[0]])} for H={H:#x}"
        for z in range(y + 1, n):
            bz = 1 << z
            sub = base[(base & bz) == 0]
            r0 = ranks[sub]
            flat = (ranks[sub | by] == r0) & (ranks[sub | bz] == r0)
            bad = np.nonzero(flat & (ranks[sub | by | bz] != r0))[0]
            if len(bad):
                H = int(sub[bad[0]])
                return f"R3: fails for H={H:#x}, y={y}, z={z}"
    return None


@dataclass(frozen=True, eq=True)
class RankOracle:
    n: int
    ranks: tuple[int, ...] = field(repr=False)

    def __post_init__(self):
        if self.n > MAX_GROUND:
            raise GroundSetTooLarge(f"ground set of size {self.n} exceeds {MAX_GROUND}")
        object.__setattr__(self, "ranks", tuple(int(r) for r in self.ranks))
        if len(self.ranks) != 1 << self.n:
            raise MatroidError(f"rank table has {len(self.ranks)} entries, expected {1 << self.n}")
        table = np.asarray(self.ranks, dtype=np.int64)
        if (table < 0).any():
            raise MatroidAxiomError("negative rank")
        sample = None if self.n <= EXHAUSTIVE_AXIOMS else 4096
        problem = _axiom_violation(table, self.n, sample)
        if problem:
            raise MatroidAxiomError(problem)

    def rank(self, H: int = -1) -> int:
        """Rank of ``H``; the whole ground set by default."""
        if H == -1:
            H = self.full
        return self.ranks[H]

    @property
    def full(self) -> int:
        return (1 << self.n) - 1

    def nullity(self, H: int) -> int:
        return popcount(H) - self.ranks[H]

    def independent(self, H: int) -> bool:
        return self.ranks[H] == popcount(H)


def check_axioms(M: RankOracle) -> str | None:
    """Exhaustive R1-R3 check; returns a description of the first failure."""
    return _axiom_violation(np.asarray(M.ranks, dtype=np.int64), M.n)


def _as_multigraph(G: RibbonGraph | Multigraph) -> Multigraph:
    if isinstance(G, RibbonGraph):
        return underlying_graph(G)
    nv, edges = G
    return nv, tuple(tuple(e) for e in edges)


def cycle_matroid(G: RibbonGraph | Multigraph) -> RankOracle:
    """Rank ``v - c(H)`` for every edge subset."""
    nv, edges = _as_multigraph(G)
    n = len(edges)
    if n > MAX_GROUND:
        raise GroundSetTooLarge(f"{n} edges exceeds {MAX_GROUND}")
    ranks = [0] * (1 << n)
    for H in range(1, 1 << n):
        parent = list(range(nv))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        r = 0
        for i in range(n):
            if (H >> i) & 1:
                a, b = find(edges[i][0]), find(edges[i][1])
                if a != b:
                    parent[a] = b
                    r += 1
        ranks[H] = r
    return RankOracle(n, tuple(ranks))


def dual_matroid(M: RankOracle) -> RankOracle:
    full = M.full
    rE = M.ranks[full]
    ranks = tuple(popcount(H) + M.ranks[full ^ H] - rE for H in range(1 << M.n))
    D = RankOracle(M.n, ranks)
    assert M.rank() + D.rank() == M.n
    return D


def bond_matroid(G: RibbonGraph | Multigraph) -> RankOracle:
    return dual_matroid(cycle_matroid(G))


def free_matroid(n: int) -> RankOracle:
    return RankOracle(n, tuple(popcount(H) for H in range(1 << n)))


def zero_matroid(n: int) -> RankOracle:
    return RankOracle(n, (0,) * (1 << n))


def bases(M: RankOracle) -> list[int]:
    r = M.rank()
    return [H for H in range(1 << M.n) if popcount(H) == r and M.ranks[H] == r]


def circuits(M: RankOracle) -> list[int]:
    """Minimal dependent sets, as bitmasks in increasing order."""
    if M.n > MAX_CIRCUITS:
        raise GroundSetTooLarge(f"circuit enumeration capped at {MAX_CIRCUITS} elements")
    out = []
    for H in range(1, 1 << M.n):
        k = popcount(H)
        if M.ranks[H] == k:
            continue
        # minimal iff every H - e is independent
        sub = H
        ok = True
        while sub:
            low = sub & -sub
            if M.ranks[H ^ low] != k - 1:
                ok = False
                break
            sub ^= low
        if ok:
            out.append(H)
    return out


def _submasks(X: int):
    Y = X
    while True:
        yield Y
        if Y == 0:
            return
        Y = (Y - 1) & X


@dataclass(frozen=True)
class Perspective:
    M: RankOracle
    Mp: RankOracle

    @property
    def n(self) -> int:
        return self.M.n


def perspective_violation(M: RankOracle, Mp: RankOracle) -> tuple[int, int] | None:
    """First nested pair ``Y <= X`` breaking the rank inequality, if any.

    Every one of the 3^n pairs is examined.
    """
    rM, rP = M.ranks, Mp.ranks
    for X in range(1 << M.n):
        dX = rM[X] - rP[X]
        for Y in _submasks(X):
            if rM[Y] - rP[Y] > dX:
                return X, Y
    return None


def _covering_violation(M: RankOracle, Mp: RankOracle) -> tuple[int, int] | None:
    # r_M - r_Mp nondecreasing along single-element steps; equivalent to the full test
    d = np.asarray(M.ranks, dtype=np.int64) - np.asarray(Mp.ranks, dtype=np.int64)
    idx = np.arange(1 << M.n, dtype=np.int64)
    for y in range(M.n):
        base = idx[(idx & (1 << y)) == 0]
        bad = np.nonzero(d[base | (1 << y)] < d[base])[0]
        if len(bad):
            Y = int(base[bad[0]])
            return Y | (1 << y), Y
    return None


def circuit_condition_violation(M: RankOracle, Mp: RankOracle) -> int | None:
    """A circuit of M that is not a union of circuits of Mp, if any.

    ``C`` is such a union iff no element of ``C`` is a coloop of ``Mp`` restricted to ``C``.
    """
    rP = Mp.ranks
    for C in circuits(M):
        sub = C
        while sub:
            low = sub & -sub
            if rP[C ^ low] != rP[C]:
                return C
            sub ^= low
    return None


def make_perspective(M: RankOracle, Mp: RankOracle) -> Perspective:
    if M.n != Mp.n:
        raise NotAPerspective(f"ground sets differ: {M.n} vs {Mp.n}")
    if M.n <= EXHAUSTIVE_PERSPECTIVE:
        bad = perspective_violation(M, Mp)
    else:
        bad = _covering_violation(M, Mp)
    if bad is not None:
        X, Y = bad
        raise NotAPerspective(
            f"r_M(X)-r_M(Y) < r_M'(X)-r_M'(Y) for X={X:#x}, Y={Y:#x}", witness=bad
        )
    if M.n <= CIRCUIT_CHECK:
        C = circuit_condition_violation(M, Mp)
        if C is not None:
            raise NotAPerspective(f"circuit {C:#x} of M is not a union of circuits of M'")
    return Perspective(M, Mp)


def _shifted(vars, tally: Counter, shift_vars) -> LaurentPoly:
    # tally holds exponents of (v - 1) for v in shift_vars, plain exponents otherwise
    p = LaurentPoly(vars, tally)
    assignment = {
        v: (LaurentPoly.var(vars, v) - 1 if v in shift_vars else LaurentPoly.var(vars, v))
        for v in vars
    }
    return substitute(p, assignment, vars)


def tutte(M: RankOracle) -> LaurentPoly:
    """Corank-nullity expansion in ``(x, y)``."""
    rE = M.rank()
    tally = Counter()
    for H in range(1 << M.n):
        r = M.ranks[H]
        tally[(rE - r, popcount(H) - r)] += 1
    return _shifted(TUTTE_VARS, tally, {"x", "y"})


def tutte_perspective(P: Perspective) -> LaurentPoly:
    """Three-variable Tutte polynomial of the perspective ``M -> M'`` in ``(x, y, z)``."""
    rM, rP = P.M.ranks, P.Mp.ranks
    full = P.M.full
    rME, rPE = rM[full], rP[full]
    tally = Counter()
    for H in range(1 << P.n):
        corank_p = rPE - rP[H]
        tally[(corank_p, popcount(H) - rM[H], (rME - rM[H]) - corank_p)] += 1
    return _shifted(LV_VARS, tally, {"x", "y"})


@dataclass(frozen=True)
class Verdict:
    ok: bool
    detail: str = ""

    def __bool__(self) -> bool:
        return self.ok


def verify_tutte_recovery(P: Perspective) -> Verdict:
    """Recover ``T_M`` and ``T_M'`` from the perspective polynomial.

    ``T_M(x,y) = T(x,y,x-1)`` is checked directly.  ``T_M'(x,y) =
    (y-1)^d T(x,y,1/(y-1))`` with ``d = r(M) - r(M')`` is checked after clearing
    the denominator: every ``z^j`` becomes ``(y-1)^(d-j)``.
    """
    T = tutte_perspective(P)
    tv = TUTTE_VARS
    x, y = LaurentPoly.var(tv, "x"), LaurentPoly.var(tv, "y")
    first = substitute(T, {"x": x, "y": y, "z": x - 1}, tv)
    TM = tutte(P.M)
    if first != TM:
        return Verdict(False, f"T(x,y,x-1) = {first} but T_M = {TM}")
    d = P.M.rank() - P.Mp.rank()
    zi = LV_VARS.index("z")
    cleared = LaurentPoly.zero(tv)
    for exps, c in T.terms():
        j = exps[zi]
        if j < 0 or j > d:
            return Verdict(False, f"z exponent {j} outside 0..{d}")
        cleared = cleared + x ** exps[0] * y ** exps[1] * (y - 1) ** (d - j) * c
    TMp = tutte(P.Mp)
    if cleared != TMp:
        return Verdict(False, f"(y-1)^{d} T(x,y,1/(y-1)) = {cleared} but T_M' = {TMp}")
    return Verdict(True, "")


def from_rank_function(n: int, rank) -> RankOracle:
    return RankOracle(n, tuple(rank(H) for H in range(1 << n)))
