"""Matroid perspectives ``M → M'`` and their Dawson partitions.

A perspective is a pair of matroids on one ordered ground set such that no
circuit of ``M`` meets a cocircuit of ``M'`` in exactly one element.  Its
independent/spanning sets (independent in ``M``, spanning in ``M'``) index a
partition of the Boolean lattice into intervals
``[B \\ Int_M'(B), B ∪ Ext_M(B)]``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

from .activity import ActivityProfile, active_sets
from .matroid import Matroid, MatroidError, SubsetLike, minor


class PerspectiveError(MatroidError):
    pass


def mp3_violation(m: Matroid, mprime: Matroid):
    """First ``(C, D)`` with ``|C ∩ D| = 1``, ``C`` a circuit of ``m``, ``D`` a cocircuit of ``mprime``."""
    for c in m.circuits:
        for d in mprime.cocircuits:
            common = c & d
            if common and common & (common - 1) == 0:
                return c, d
    return None


def _is_union_of(target: int, family: Iterable[int]) -> bool:
    cover = 0
    for f in family:
        if f & ~target == 0:
            cover |= f
    return cover == target


def mp1(m: Matroid, mprime: Matroid) -> bool:
    """Every circuit of ``m`` is a union of circuits of ``mprime``."""
    return all(_is_union_of(c, mprime.circuits) for c in m.circuits)


def mp2(m: Matroid, mprime: Matroid) -> bool:
    """Every cocircuit of ``mprime`` is a union of cocircuits of ``m``."""
    return all(_is_union_of(d, m.cocircuits) for d in mprime.cocircuits)


def _is_flat(m: Matroid, a: int) -> bool:
    r = m.rank_table[a]
    return all(m.rank_table[a | (1 << e)] > r for e in range(m.n) if not a >> e & 1)


def mp2_flats(m: Matroid, mprime: Matroid) -> bool:
    """Every flat of ``mprime`` is a flat of ``m``."""
    return all(_is_flat(m, a) for a in range(1 << m.n) if _is_flat(mprime, a))


def mp3(m: Matroid, mprime: Matroid) -> bool:
    return mp3_violation(m, mprime) is None


def mp4(m: Matroid, mprime: Matroid) -> bool:
    """Rank increments in ``mprime`` never exceed those in ``m`` along ``Y ⊆ X``.

    Checking single-element steps suffices: the general inequality is a sum
    of them along any maximal chain from ``Y`` to ``X``.
    """
    rm, rp = m.rank_table, mprime.rank_table
    for a in range(1 << m.n):
        for e in range(m.n):
            bit = 1 << e
            if not a & bit:
                if rp[a | bit] - rp[a] > rm[a | bit] - rm[a]:
                    return False
    return True


def mp4_exhaustive(m: Matroid, mprime: Matroid) -> bool:
    """``mp4`` over every pair ``Y ⊆ X`` without the chain shortcut."""
    rm, rp = m.rank_table, mprime.rank_table
    for x in range(1 << m.n):
        sub = x
        while True:
            if rp[x] - rp[sub] > rm[x] - rm[sub]:
                return False
            if sub == 0:
                break
            sub = (sub - 1) & x
    return True


class Perspective:
    """A validated perspective ``m → mprime``.

    ``validate=False`` skips the circuit/cocircuit test; only the
    verification harness uses it, to build negative controls.
    """

    def __init__(self, m: Matroid, mprime: Matroid, *, validate: bool = True):
        if m.ground != mprime.ground:
            raise PerspectiveError(
                f"ground sets differ: {list(m.ground.labels)} vs {list(mprime.ground.labels)}"
            )
        self.m = m
        self.mprime = mprime
        self.ground = m.ground
        self.n = m.n
        if validate:
            bad = mp3_violation(m, mprime)
            if bad is not None:
                c, d = bad
                g = self.ground
                raise PerspectiveError(
                    f"not a perspective (MP3 fails): circuit {g.fmt(c)} of M meets cocircuit {g.fmt(d)} "
                    f"of M' in exactly {g.fmt(c & d)}"
                )

    def __repr__(self):
        return f"<Perspective rank {self.m.rank} -> {self.mprime.rank} on {self.n} elements>"

    def __eq__(self, other):
        return isinstance(other, Perspective) and self.m == other.m and self.mprime == other.mprime

    def __hash__(self):
        return hash((self.m, self.mprime))

    @property
    def is_identity(self) -> bool:
        return self.m == self.mprime

    @cached_property
    def witnesses(self) -> tuple[int, ...]:
        """Independent/spanning sets, by rank queries only, in colex order."""
        rm, rp = self.m.rank_table, self.mprime.rank_table
        rank_p = self.mprime.rank
        return tuple(a for a in range(1 << self.n) if rm[a] == a.bit_count() and rp[a] == rank_p)

    def is_witness(self, a: int) -> bool:
        return self.m.is_independent(a) and self.mprime.is_spanning(a)

    def profile(self, a: SubsetLike) -> ActivityProfile:
        a = self.ground.mask(a)
        return self.profiles[a]

    @cached_property
    def profiles(self) -> list[ActivityProfile]:
        return [active_sets(self.m, self.mprime, a) for a in range(1 << self.n)]

    def rcd(self, a: SubsetLike) -> int:
        a = self.ground.mask(a)
        return (self.m.rank - self.mprime.rank) - (self.m.r(a) - self.mprime.r(a))

    def dual(self) -> Perspective:
        return Perspective(self.mprime.dual(), self.m.dual())


def perspective_new(m: Matroid, mprime: Matroid) -> Perspective:
    return Perspective(m, mprime)


def identity_perspective(m: Matroid) -> Perspective:
    return Perspective(m, m, validate=False)


def major_to_perspective(n: Matroid, ports: SubsetLike) -> Perspective:
    """``N \\ ports → N / ports`` on the remaining elements."""
    ports = n.ground.mask(ports)
    return Perspective(minor(n, delete=ports), minor(n, contract=ports))


def perspective_dual(p: Perspective) -> Perspective:
    return p.dual()


@dataclass(frozen=True)
class DawsonInterval:
    witness: int
    bottom: int
    top: int

    @property
    def free(self) -> int:
        return self.top & ~self.bottom

    def __len__(self):
        return 1 << self.free.bit_count()

    def __contains__(self, a: int) -> bool:
        return a & self.bottom == self.bottom and a & ~self.top == 0

    def members(self):
        """All subsets in the interval."""
        free = self.free
        sub = free
        while True:
            yield self.bottom | sub
            if sub == 0:
                break
            sub = (sub - 1) & free

    def position(self, a: int) -> int:
        """Bits of ``a`` restricted to the free part of the interval."""
        return a & self.free

    def complement(self, a: int) -> int:
        return self.bottom | (self.free & ~a)


def dawson_map(p: Perspective, a: SubsetLike) -> int:
    """``A ∪ P_M'(A) \\ Q_M(A)``: the witness of the interval holding ``A``."""
    prof = p.profile(a)
    return (prof.subset | prof.p_set) & ~prof.q_set


def dawson_interval(p: Perspective, b: SubsetLike) -> DawsonInterval:
    b = p.ground.mask(b)
    if not p.is_witness(b):
        raise PerspectiveError(f"{p.ground.fmt(b)} is not independent in M and spanning in M'")
    prof = p.profile(b)
    return DawsonInterval(b, b & ~prof.int_active, b | prof.ext_active)


def partition_defects(n: int, intervals: Sequence[tuple[int, int]]) -> list[tuple[str, int]]:
    """Subsets covered twice or not at all, as ``("overlap"|"uncovered", mask)``."""
    seen = bytearray(1 << n)
    defects = []
    for bottom, top in intervals:
        if bottom & ~top:
            defects.append(("empty-interval", bottom))
            continue
        for a in DawsonInterval(bottom, bottom, top).members():
            if seen[a]:
                defects.append(("overlap", a))
            seen[a] = 1
    defects.extend(("uncovered", a) for a in range(1 << n) if not seen[a])
    return defects


def dawson_partition(p: Perspective, *, check: bool = True) -> list[DawsonInterval]:
    """One interval per independent/spanning set, sorted by bottom in colex order."""
    intervals = [dawson_interval(p, b) for b in p.witnesses]
    intervals.sort(key=lambda iv: iv.bottom)
    if check:
        defects = partition_defects(p.n, [(iv.bottom, iv.top) for iv in intervals])
        if defects:
            kind, a = defects[0]
            raise PerspectiveError(f"intervals do not partition 2^E: {kind} at {p.ground.fmt(a)}")
    return intervals


def colex_less(a: int, b: int) -> bool:
    """``a < b`` colexicographically: the largest element of ``a Δ b`` lies in ``b``.

    With position-indexed bitmasks this is integer comparison.
    """
    return a < b


def colex_nearest(family: Iterable[int], a: int) -> int:
    """Member ``X`` of ``family`` with ``a Δ X`` colex-smallest."""
    best = None
    for x in family:
        if best is None or (a ^ x) < (a ^ best):
            best = x
    if best is None:
        raise ValueError("empty family")
    return best


def is_dawson_partition(intervals: Sequence[tuple[int, int]], n: int) -> bool:
    """Colex characterisation of Dawson partitions.

    Sorting the intervals by bottom, the tops must come out increasing too.
    """
    defects = partition_defects(n, intervals)
    if defects:
        kind, a = defects[0]
        raise ValueError(f"not a partition of the Boolean lattice: {kind} at mask {a}")
    ordered = sorted(intervals, key=lambda iv: iv[0])
    tops = [top for _, top in ordered]
    return all(t1 < t2 for t1, t2 in zip(tops, tops[1:]))


def phi(p: Perspective, a: SubsetLike) -> int:
    """``A \\ Q_M(A) ∪ Ext_M(A)``."""
    prof = p.profile(a)
    return (prof.subset & ~prof.q_set) | prof.ext_active


def phi_star(p: Perspective, a: SubsetLike) -> int:
    """``A ∪ P_M'(A) \\ Int_M'(A)``."""
    prof = p.profile(a)
    return (prof.subset | prof.p_set) & ~prof.int_active


def duality_involution(p: Perspective, a: SubsetLike, kind: str = "phi") -> int:
    if kind == "phi":
        return phi(p, a)
    if kind in ("phiStar", "phi_star", "phi*"):
        return phi_star(p, a)
    raise ValueError(f"kind must be 'phi' or 'phiStar', not {kind!r}")


def interval_of(p: Perspective, a: SubsetLike) -> DawsonInterval:
    """The Dawson interval containing ``a``, from its own activity sets."""
    prof = p.profile(a)
    a = prof.subset
    return DawsonInterval(
        (a | prof.p_set) & ~prof.q_set,
        a & ~prof.int_active & ~prof.q_set,
        a | prof.ext_active | prof.p_set,
    )
