"""Internal and external activities of arbitrary subsets.

For a subset ``A`` of an ordered matroid ``M``:

* ``Ext_M(A)``: elements ``e ∉ A`` that are smallest in some circuit inside ``A ∪ e``;
* ``Q_M(A)``:   elements ``e ∈ A`` that are smallest in some circuit inside ``A``;
* ``Int_M(A)``: elements ``e ∈ A`` smallest in some cocircuit inside ``(E \\ A) ∪ e``;
* ``P_M(A)``:   elements ``e ∉ A`` smallest in some cocircuit inside ``E \\ A``.

For a perspective ``M → M'`` the internal side (``Int``, ``P``) is taken in
``M'`` and the external side (``Ext``, ``Q``) in ``M``.
"""

from __future__ import annotations

from dataclasses import dataclass

from .matroid import Matroid, MatroidError, SubsetLike, lowest


@dataclass(frozen=True)
class ActivityProfile:
    subset: int
    int_active: int
    p_set: int
    ext_active: int
    q_set: int
    iota: int
    cr: int
    eps: int
    nl: int
    rcd: int

    @property
    def stats(self) -> tuple[int, int, int, int, int]:
        """``(ι', cr', ε, nl, rcd)``."""
        return self.iota, self.cr, self.eps, self.nl, self.rcd


def act(circuits, a: int) -> int:
    """Elements smallest in some circuit ``C`` with ``C`` inside ``a ∪ min(C)``."""
    out = 0
    for c in circuits:
        low = c & -c
        if c & ~low & ~a == 0:
            out |= low
    return out


def ext_active(m: Matroid, a: SubsetLike) -> int:
    a = m.ground.mask(a)
    out = 0
    for c in m.circuits:
        low = c & -c
        if not a & low and (c ^ low) & ~a == 0:
            out |= low
    return out


def q_set(m: Matroid, a: SubsetLike) -> int:
    a = m.ground.mask(a)
    out = 0
    for c in m.circuits:
        if c & ~a == 0:
            out |= c & -c
    return out


def int_active(m: Matroid, a: SubsetLike) -> int:
    a = m.ground.mask(a)
    out = 0
    for d in m.cocircuits:
        low = d & -d
        if d & a == low:
            out |= low
    return out


def p_set(m: Matroid, a: SubsetLike) -> int:
    a = m.ground.mask(a)
    out = 0
    for d in m.cocircuits:
        if not d & a:
            out |= d & -d
    return out


def rank_codrop(m: Matroid, mprime: Matroid, a: int) -> int:
    return (m.rank - mprime.rank) - (m.r(a) - mprime.r(a))


def active_sets(m: Matroid, mprime: Matroid | None, a: SubsetLike) -> ActivityProfile:
    """Full activity profile of ``a`` in the perspective ``m → mprime``.

    Pass ``mprime=None`` (or ``m`` itself) for a plain matroid.
    """
    if mprime is None:
        mprime = m
    if m.ground != mprime.ground:
        raise MatroidError("matroids are on different ordered ground sets")
    a = m.ground.mask(a)
    i_set = int_active(mprime, a)
    p = p_set(mprime, a)
    e_set = ext_active(m, a)
    q = q_set(m, a)
    return ActivityProfile(
        subset=a,
        int_active=i_set,
        p_set=p,
        ext_active=e_set,
        q_set=q,
        iota=i_set.bit_count(),
        cr=p.bit_count(),
        eps=e_set.bit_count(),
        nl=q.bit_count(),
        rcd=rank_codrop(m, mprime, a),
    )


def all_profiles(m: Matroid, mprime: Matroid | None = None) -> list[ActivityProfile]:
    """Profiles of every subset, indexed by mask."""
    if mprime is None:
        mprime = m
    return [active_sets(m, mprime, a) for a in range(1 << m.n)]


def unique_witness_circuit(m: Matroid, a: SubsetLike, e) -> int:
    """The circuit with smallest element ``e`` inside ``(a \\ Q_M(a)) ∪ e``.

    ``e`` must be externally active for ``a`` or lie in ``Q_M(a)``.
    """
    g = m.ground
    a = g.mask(a)
    i = g.element(e)
    bit = 1 << i
    if not (ext_active(m, a) | q_set(m, a)) & bit:
        raise MatroidError(f"{g.labels[i]} is neither externally active nor in Q for {g.fmt(a)}")
    allowed = (a & ~q_set(m, a)) | bit
    found = [c for c in m.circuits if lowest(c) == i and c & ~allowed == 0]
    if len(found) != 1:
        raise AssertionError(f"expected one witness circuit, found {len(found)}")
    return found[0]


def basis_activities(m: Matroid, b: SubsetLike) -> tuple[int, int]:
    """Classical ``(internal, external)`` activity of a basis, from fundamental (co)circuits."""
    g = m.ground
    b = g.mask(b)
    if b not in m.bases:
        raise MatroidError(f"{g.fmt(b)} is not a basis")
    internal = external = 0
    for e in range(m.n):
        bit = 1 << e
        if b & bit:
            within = (g.full & ~b) | bit
            family = m.cocircuits
        else:
            within = b | bit
            family = m.circuits
        (c,) = [c for c in family if c & ~within == 0]
        if lowest(c) == e:
            if b & bit:
                internal += 1
            else:
                external += 1
    return internal, external
