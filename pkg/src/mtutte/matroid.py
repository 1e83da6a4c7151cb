"""Matroids on a linearly ordered ground set.

Subsets are plain ``int`` bitmasks: bit ``i`` stands for the element at
position ``i`` of the ground set, so position 0 is the smallest element.
With that encoding the colexicographic order on subsets is the integer
order on masks, which the Dawson machinery relies on.

:class:`GroundSet` converts between masks and labels.  Every public
function that takes a subset also accepts an iterable of labels.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Sequence, Union

MAX_ELEMENTS = 16
VALIDATION_CAP = 12

SubsetLike = Union[int, Iterable]


class MatroidError(ValueError):
    """Raised for inputs that do not describe a matroid."""


def bits(mask: int):
    """Positions of the set bits of ``mask``, ascending."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def lowest(mask: int) -> int:
    """Position of the smallest element of a nonempty mask."""
    return (mask & -mask).bit_length() - 1


class GroundSet:
    """Ordered, duplicate-free tuple of element labels."""

    __slots__ = ("labels", "index", "n", "full")

    def __init__(self, labels: Iterable):
        labels = tuple(str(lab) for lab in labels)
        index = {}
        for i, lab in enumerate(labels):
            if lab in index:
                raise MatroidError(f"duplicate element label {lab!r}")
            index[lab] = i
        self.labels = labels
        self.index = index
        self.n = len(labels)
        self.full = (1 << self.n) - 1

    def __eq__(self, other):
        return isinstance(other, GroundSet) and self.labels == other.labels

    def __hash__(self):
        return hash(self.labels)

    def __len__(self):
        return self.n

    def __iter__(self):
        return iter(self.labels)

    def __repr__(self):
        return f"GroundSet({list(self.labels)!r})"

    def mask(self, subset: SubsetLike) -> int:
        """Bitmask of ``subset``; accepts a mask, labels, or a string of one-character labels."""
        if isinstance(subset, int):
            if subset < 0 or subset > self.full:
                raise MatroidError(f"mask {subset} outside ground set of size {self.n}")
            return subset
        if isinstance(subset, str):
            if subset in self.index:
                return 1 << self.index[subset]
            if not all(len(lab) == 1 for lab in self.labels):
                raise MatroidError(f"cannot split {subset!r}: labels are not single characters")
            subset = list(subset)
        m = 0
        for lab in subset:
            lab = str(lab)
            if lab not in self.index:
                raise MatroidError(f"element {lab!r} not in ground set")
            m |= 1 << self.index[lab]
        return m

    def element(self, e) -> int:
        """Position of a single element given by its label."""
        lab = str(e)
        if lab not in self.index:
            raise MatroidError(f"element {lab!r} not in ground set")
        return self.index[lab]

    def subset(self, mask: int) -> tuple:
        return tuple(self.labels[i] for i in bits(mask))

    def fmt(self, mask: int) -> str:
        """Brace literal, e.g. ``{1,3}``."""
        return "{" + ",".join(self.subset(mask)) + "}"

    def short(self, mask: int) -> str:
        """Compact rendering: ``134`` for one-character labels, ``∅`` for empty."""
        if not mask:
            return "∅"
        labs = self.subset(mask)
        if all(len(lab) == 1 for lab in self.labels):
            return "".join(labs)
        return ",".join(labs)

    def restrict(self, mask: int) -> tuple[GroundSet, list[int]]:
        """Sub-ground-set on ``mask`` and the old positions in new order."""
        keep = list(bits(mask))
        return GroundSet(self.labels[i] for i in keep), keep


def subset_key(mask: int) -> tuple:
    """Canonical listing order: by size, then by ascending positions."""
    return (mask.bit_count(), tuple(bits(mask)))


def remap(mask: int, positions: Sequence[int]) -> int:
    """Pack the bits at ``positions`` of ``mask`` into a dense mask."""
    out = 0
    for new, old in enumerate(positions):
        if mask >> old & 1:
            out |= 1 << new
    return out


def _rank_table(n: int, bases: Iterable[int]) -> list[int]:
    size = 1 << n
    indep = bytearray(size)
    for b in bases:
        indep[b] = 1
    for m in range(size - 1, 0, -1):
        if indep[m]:
            rest = m
            while rest:
                low = rest & -rest
                indep[m ^ low] = 1
                rest ^= low
    rank = [0] * size
    for m in range(1, size):
        if indep[m]:
            rank[m] = m.bit_count()
        else:
            best = 0
            target = m.bit_count() - 1
            rest = m
            while rest:
                low = rest & -rest
                r = rank[m ^ low]
                if r > best:
                    best = r
                    if best == target:
                        break
                rest ^= low
            rank[m] = best
    return rank


def _minimal_dependent(n: int, rank: list[int]) -> tuple[int, ...]:
    out = []
    for m in range(1, 1 << n):
        size = m.bit_count()
        if rank[m] == size:
            continue
        if rank[m] != size - 1:
            continue
        rest = m
        minimal = True
        while rest:
            low = rest & -rest
            if rank[m ^ low] != size - 1:
                minimal = False
                break
            rest ^= low
        if minimal:
            out.append(m)
    out.sort(key=subset_key)
    return tuple(out)


class Matroid:
    """A matroid given by its bases on an ordered ground set.

    The rank of every subset is tabulated at construction (``2^n`` ints),
    together with the circuits and cocircuits, so all queries are reads.
    """

    def __init__(self, ground: GroundSet | Iterable, bases: Iterable[SubsetLike], *, validate: bool = True):
        if not isinstance(ground, GroundSet):
            ground = GroundSet(ground)
        if ground.n > MAX_ELEMENTS:
            raise MatroidError(f"ground set has {ground.n} elements; the limit is {MAX_ELEMENTS}")
        self.ground = ground
        self.n = ground.n
        base_masks = frozenset(ground.mask(b) for b in bases)
        if not base_masks:
            raise MatroidError("empty basis family")
        sizes = {b.bit_count() for b in base_masks}
        if len(sizes) != 1:
            raise MatroidError(f"bases of unequal sizes {sorted(sizes)}")
        self.rank = sizes.pop()
        self.bases = base_masks
        # validate=False is for constructions that are matroids by design
        self.verified = True
        if validate and self.n > VALIDATION_CAP:
            self.verified = False
        elif validate:
            witness = exchange_violation(base_masks)
            if witness is not None:
                b1, b2, e = witness
                raise MatroidError(
                    f"basis exchange fails: B1={ground.fmt(b1)}, B2={ground.fmt(b2)}, "
                    f"e={ground.labels[e]} has no replacement in B2\\B1"
                )
        self._rank = _rank_table(self.n, base_masks)
        self.circuits = _minimal_dependent(self.n, self._rank)
        self._dual: Matroid | None = None
        self.dual()

    @classmethod
    def _from_rank(cls, ground: GroundSet, rank: list[int], r: int, verified: bool) -> Matroid:
        m = cls.__new__(cls)
        m.ground = ground
        m.n = ground.n
        m.rank = r
        m.bases = frozenset(a for a in range(1 << ground.n) if a.bit_count() == r and rank[a] == r)
        m.verified = verified
        m._rank = rank
        m.circuits = _minimal_dependent(m.n, rank)
        m._dual = None
        return m

    def __repr__(self):
        return f"<Matroid rank {self.rank} on {self.ground.short(self.ground.full)}, {len(self.bases)} bases>"

    def __eq__(self, other):
        return isinstance(other, Matroid) and self.ground == other.ground and self.bases == other.bases

    def __hash__(self):
        return hash((self.ground, self.bases))

    # -- rank queries ----------------------------------------------------

    def r(self, a: SubsetLike) -> int:
        return self._rank[self.ground.mask(a)]

    def corank(self, a: SubsetLike) -> int:
        return self.rank - self.r(a)

    def nullity(self, a: SubsetLike) -> int:
        a = self.ground.mask(a)
        return a.bit_count() - self._rank[a]

    def is_independent(self, a: SubsetLike) -> bool:
        a = self.ground.mask(a)
        return self._rank[a] == a.bit_count()

    def is_spanning(self, a: SubsetLike) -> bool:
        return self._rank[self.ground.mask(a)] == self.rank

    def is_basis(self, a: SubsetLike) -> bool:
        return self.ground.mask(a) in self.bases

    @property
    def rank_table(self) -> list[int]:
        return self._rank

    @property
    def loops(self) -> int:
        """Mask of the loops."""
        return sum(1 << i for i in range(self.n) if self._rank[1 << i] == 0)

    @property
    def coloops(self) -> int:
        return self.dual().loops

    # -- duality -----------------------------------------------------------

    def dual(self) -> Matroid:
        if self._dual is None:
            full = self.ground.full
            rank = self._rank
            r = self.rank
            drank = [a.bit_count() - r + rank[full ^ a] for a in range(1 << self.n)]
            d = Matroid._from_rank(self.ground, drank, self.n - r, self.verified)
            d._dual = self
            self._dual = d
        return self._dual

    @property
    def cocircuits(self) -> tuple[int, ...]:
        return self.dual().circuits


def exchange_violation(bases: frozenset[int]):
    """First ``(B1, B2, e)`` breaking basis exchange, or ``None``."""
    for b1 in bases:
        for b2 in bases:
            if b1 == b2:
                continue
            only1 = b1 & ~b2
            only2 = b2 & ~b1
            for e in bits(only1):
                without = b1 & ~(1 << e)
                if not any((without | (1 << f)) in bases for f in bits(only2)):
                    return b1, b2, e
    return None


def matroid_from_bases(ground: GroundSet | Iterable, bases: Iterable[SubsetLike]) -> Matroid:
    return Matroid(ground, bases)


def matroid_from_circuits(ground: GroundSet | Iterable, circuits: Iterable[SubsetLike]) -> Matroid:
    """Matroid whose minimal dependent sets are exactly ``circuits``."""
    if not isinstance(ground, GroundSet):
        ground = GroundSet(ground)
    if ground.n > MAX_ELEMENTS:
        raise MatroidError(f"ground set has {ground.n} elements; the limit is {MAX_ELEMENTS}")
    cs = sorted({ground.mask(c) for c in circuits}, key=subset_key)
    if 0 in cs:
        raise MatroidError("the empty set cannot be a circuit")
    for c1 in cs:
        for c2 in cs:
            if c1 != c2 and c1 & c2 == c1:
                raise MatroidError(f"circuit family is not an antichain: {ground.fmt(c1)} ⊂ {ground.fmt(c2)}")
    cset = set(cs)
    for i, c1 in enumerate(cs):
        for c2 in cs[i + 1:]:
            common = c1 & c2
            union = c1 | c2
            for e in bits(common):
                rest = union & ~(1 << e)
                if not any(c & rest == c for c in cset):
                    raise MatroidError(
                        f"circuit elimination fails for {ground.fmt(c1)}, {ground.fmt(c2)} "
                        f"on {ground.labels[e]}"
                    )
    size = 1 << ground.n
    dependent = bytearray(size)
    for c in cs:
        dependent[c] = 1
    for m in range(size):
        if not dependent[m]:
            rest = m
            while rest:
                low = rest & -rest
                if dependent[m ^ low]:
                    dependent[m] = 1
                    break
                rest ^= low
    r = max(m.bit_count() for m in range(size) if not dependent[m])
    bases = [m for m in range(size) if not dependent[m] and m.bit_count() == r]
    if not bases:
        raise MatroidError("circuit family yields no bases")
    m = Matroid(ground, bases)
    if set(m.circuits) != cset:
        raise MatroidError("circuit family is not the circuit set of any matroid")
    return m


def uniform_matroid(r: int, ground: GroundSet | Iterable) -> Matroid:
    if not isinstance(ground, GroundSet):
        ground = GroundSet(ground)
    if not 0 <= r <= ground.n:
        raise MatroidError(f"rank {r} out of range for {ground.n} elements")
    bases = [sum(1 << i for i in c) for c in combinations(range(ground.n), r)]
    return Matroid(ground, bases, validate=False)


def free_matroid(ground: GroundSet | Iterable) -> Matroid:
    if not isinstance(ground, GroundSet):
        ground = GroundSet(ground)
    return uniform_matroid(ground.n, ground)


@dataclass
class Graph:
    """Multigraph with labelled edges; loops and parallel edges allowed."""

    vertices: list = field(default_factory=list)
    edges: list = field(default_factory=list)  # (label, end, end)

    def __post_init__(self):
        self.vertices = [str(v) for v in self.vertices]
        self.edges = [(str(lab), str(a), str(b)) for lab, a, b in self.edges]
        if len(set(self.vertices)) != len(self.vertices):
            raise MatroidError("duplicate vertex")
        seen = set()
        for lab, a, b in self.edges:
            if lab in seen:
                raise MatroidError(f"duplicate edge label {lab!r}")
            seen.add(lab)
            for w in (a, b):
                if w not in self.vertices:
                    raise MatroidError(f"edge {lab!r} uses undeclared vertex {w!r}")

    def add_edge(self, label, a, b):
        self.edges.append((str(label), str(a), str(b)))
        self.__post_init__()


def _find(parent, i):
    while parent[i] != i:
        parent[i] = parent[parent[i]]
        i = parent[i]
    return i


def _is_forest(ends: list[tuple[int, int]], mask: int, nvert: int) -> bool:
    parent = list(range(nvert))
    for e in bits(mask):
        a, b = ends[e]
        ra, rb = _find(parent, a), _find(parent, b)
        if ra == rb:
            return False
        parent[ra] = rb
    return True


def graphic_matroid(g: Graph) -> Matroid:
    """Cycle matroid: bases are the spanning forests, ground order = edge order."""
    if not g.edges:
        raise MatroidError("graph has no edges")
    vidx = {v: i for i, v in enumerate(g.vertices)}
    ends = [(vidx[a], vidx[b]) for _, a, b in g.edges]
    parent = list(range(len(g.vertices)))
    r = 0
    for a, b in ends:
        ra, rb = _find(parent, a), _find(parent, b)
        if ra != rb:
            parent[ra] = rb
            r += 1
    ground = GroundSet(lab for lab, _, _ in g.edges)
    bases = []
    for combo in combinations(range(ground.n), r):
        mask = sum(1 << i for i in combo)
        if _is_forest(ends, mask, len(g.vertices)):
            bases.append(mask)
    return Matroid(ground, bases, validate=False)


def rank_stats(m: Matroid, a: SubsetLike) -> tuple[int, int, int]:
    """``(rank, corank, nullity)`` of ``a``."""
    a = m.ground.mask(a)
    r = m.r(a)
    return r, m.rank - r, a.bit_count() - r


def dual(m: Matroid) -> Matroid:
    return m.dual()


def minor(m: Matroid, delete: SubsetLike = 0, contract: SubsetLike = 0) -> Matroid:
    """``m`` with ``delete`` deleted and ``contract`` contracted; order inherited."""
    g = m.ground
    d, c = g.mask(delete), g.mask(contract)
    if d & c:
        raise MatroidError(f"delete and contract sets overlap in {g.fmt(d & c)}")
    keep = g.full & ~(d | c)
    ground, positions = g.restrict(keep)
    rc = m.r(c)
    rank = m.rank_table
    size = 1 << ground.n
    # embed each new mask back into the old ground set
    embed = [0] * size
    for new in range(1, size):
        low = new & -new
        embed[new] = embed[new ^ low] | (1 << positions[low.bit_length() - 1])
    newrank = [rank[embed[a] | c] - rc for a in range(size)]
    return Matroid._from_rank(ground, newrank, newrank[size - 1], m.verified)


def circuit_family(m: Matroid, kind: str = "circuits") -> list[int]:
    if kind == "circuits":
        return list(m.circuits)
    if kind == "cocircuits":
        return list(m.cocircuits)
    raise ValueError(f"kind must be 'circuits' or 'cocircuits', not {kind!r}")


def fundamental(m: Matroid, b: SubsetLike, e, kind: str = "circuit") -> int:
    """Fundamental circuit of ``e ∉ b`` or fundamental cocircuit of ``e ∈ b``."""
    g = m.ground
    b = g.mask(b)
    if b not in m.bases:
        raise MatroidError(f"{g.fmt(b)} is not a basis")
    i = g.element(e)
    bit = 1 << i
    if kind == "circuit":
        if b & bit:
            raise MatroidError(f"{g.labels[i]} lies in the basis; no fundamental circuit")
        within = b | bit
        family = m.circuits
    elif kind == "cocircuit":
        if not b & bit:
            raise MatroidError(f"{g.labels[i]} lies outside the basis; no fundamental cocircuit")
        within = (g.full & ~b) | bit
        family = m.cocircuits
    else:
        raise ValueError(f"kind must be 'circuit' or 'cocircuit', not {kind!r}")
    found = [c for c in family if c & within == c]
    assert len(found) == 1, "fundamental (co)circuit must be unique"
    return found[0]
