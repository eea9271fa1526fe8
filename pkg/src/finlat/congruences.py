"""Partitions, congruences, the congruence lattice, and balance checks.

A congruence of a lattice is an equivalence relation compatible with
meet and join; equivalently a partition whose blocks multiply cleanly.
Everything here runs on the normalized partition representation, so two
equal congruences always have equal ``block_of`` tuples regardless of
how they were produced.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Sequence

from .core import (
    EmptySet,
    FiniteLattice,
    OwnerMismatch,
    SizeMismatch,
    _blocks_compatible,
)


def _normalize(labels: Sequence[int]) -> tuple[int, ...]:
    """Relabel blocks in first-occurrence order (element 0 gets label 0)."""
    seen: dict[int, int] = {}
    out = []
    for lab in labels:
        if lab not in seen:
            seen[lab] = len(seen)
        out.append(seen[lab])
    return tuple(out)


@dataclass(frozen=True, order=True)
class Partition:
    """A partition of {0..size-1} in normalized block-label form."""

    size: int
    block_of: tuple[int, ...]

    @staticmethod
    def from_labels(labels: Sequence[int]) -> "Partition":
        return Partition(len(labels), _normalize(labels))

    @staticmethod
    def from_blocks(size: int, blocks: Iterable[Iterable[int]]) -> "Partition":
        labels = [-1] * size
        for tag, block in enumerate(blocks):
            for e in block:
                if not 0 <= e < size:
                    raise SizeMismatch(f"element {e} outside [0, {size})")
                if labels[e] != -1:
                    raise ValueError(f"element {e} appears in two blocks")
                labels[e] = tag
        if -1 in labels:
            raise ValueError(f"element {labels.index(-1)} not covered by any block")
        return Partition.from_labels(labels)

    @staticmethod
    def identity(size: int) -> "Partition":
        return Partition(size, tuple(range(size)))

    @staticmethod
    def all_in_one(size: int) -> "Partition":
        return Partition(size, (0,) * size)

    def __post_init__(self) -> None:
        if len(self.block_of) != self.size:
            raise SizeMismatch("block_of length differs from size")
        if self.block_of != _normalize(self.block_of):
            raise ValueError("block labels are not normalized")

    @property
    def num_blocks(self) -> int:
        return max(self.block_of) + 1 if self.block_of else 0

    def blocks(self) -> tuple[tuple[int, ...], ...]:
        """Blocks as ascending element tuples, ordered by least element."""
        out: list[list[int]] = [[] for _ in range(self.num_blocks)]
        for e, lab in enumerate(self.block_of):
            out[lab].append(e)
        return tuple(tuple(b) for b in out)

    def block_containing(self, x: int) -> tuple[int, ...]:
        lab = self.block_of[x]
        return tuple(e for e, l in enumerate(self.block_of) if l == lab)

    def refines(self, other: "Partition") -> bool:
        """True iff every block of self lies inside a block of other."""
        if self.size != other.size:
            raise SizeMismatch("partitions have different sizes")
        image: dict[int, int] = {}
        for mine, theirs in zip(self.block_of, other.block_of):
            if image.setdefault(mine, theirs) != theirs:
                return False
        return True

    def __str__(self) -> str:
        return "{" + ",".join("{" + ",".join(map(str, b)) + "}" for b in self.blocks()) + "}"


class Congruence:
    """A partition verified (by its producer) to be meet/join compatible.

    Tied to its owning lattice by object identity; two congruences
    compare equal only when they live on the same lattice object and
    have the same blocks.
    """

    __slots__ = ("lattice", "partition")

    def __init__(self, lattice: FiniteLattice, partition: Partition) -> None:
        if partition.size != lattice.size:
            raise SizeMismatch("partition sized for a different lattice")
        self.lattice = lattice
        self.partition = partition

    def related(self, x: int, y: int) -> bool:
        return self.partition.block_of[x] == self.partition.block_of[y]

    def class_of(self, x: int) -> tuple[int, ...]:
        return self.partition.block_containing(x)

    @property
    def num_blocks(self) -> int:
        return self.partition.num_blocks

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Congruence):
            return NotImplemented
        return self.lattice is other.lattice and self.partition == other.partition

    def __hash__(self) -> int:
        return hash((id(self.lattice), self.partition))

    def __str__(self) -> str:
        return str(self.partition)

    def __repr__(self) -> str:
        return f"Congruence({self.partition})"


def is_congruence(lattice: FiniteLattice, partition: Partition) -> bool:
    """Full x, y, z compatibility scan of a partition."""
    if partition.size != lattice.size:
        raise SizeMismatch("partition sized for a different lattice")
    return _blocks_compatible(lattice, partition.block_of)


def _closure(lattice: FiniteLattice, pairs: Iterable[tuple[int, int]]) -> Partition:
    """Least congruence containing the given pairs.

    Union-find plus a FIFO worklist: whenever two classes merge through
    the pair (x, y), the forced pairs (x∧z, y∧z) and (x∨z, y∨z) are
    queued for every z in ascending order.  Chains of merges compose
    transitively inside the union-find, so enqueueing products for the
    merged pair alone reaches the full fixpoint.
    """
    n = lattice.size
    parent = list(range(n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    meet, join = lattice.meet, lattice.join
    queue: deque[tuple[int, int]] = deque(pairs)
    while queue:
        x, y = queue.popleft()
        rx, ry = find(x), find(y)
        if rx == ry:
            continue
        if ry < rx:
            rx, ry = ry, rx
        parent[ry] = rx
        mx, my, jx, jy = meet[x], meet[y], join[x], join[y]
        for z in range(n):
            if find(mx[z]) != find(my[z]):
                queue.append((mx[z], my[z]))
            if find(jx[z]) != find(jy[z]):
                queue.append((jx[z], jy[z]))
    return Partition.from_labels([find(i) for i in range(n)])


def principal_congruence(lattice: FiniteLattice, a: int, b: int) -> Congruence:
    """The least congruence merging a with b."""
    n = lattice.size
    if not (0 <= a < n and 0 <= b < n):
        raise SizeMismatch(f"elements ({a}, {b}) outside [0, {n})")
    return Congruence(lattice, _closure(lattice, [(a, b)]))


def generated_congruence(lattice: FiniteLattice, elements: Iterable[int]) -> Congruence:
    """The least congruence collapsing all the given elements to one class."""
    members = sorted(set(elements))
    if not members:
        raise EmptySet("generating set is empty")
    n = lattice.size
    if not all(0 <= e < n for e in members):
        raise SizeMismatch(f"elements {members} not all inside [0, {n})")
    first = members[0]
    return Congruence(lattice, _closure(lattice, [(first, e) for e in members[1:]]))


def _require_same_lattice(left: Congruence, right: Congruence) -> FiniteLattice:
    if left.lattice is not right.lattice:
        raise OwnerMismatch("congruences belong to different lattices")
    return left.lattice


def join_congruences(left: Congruence, right: Congruence) -> Congruence:
    """Least congruence containing both (closure of the merged partition)."""
    lattice = _require_same_lattice(left, right)
    pairs: list[tuple[int, int]] = []
    for part in (left.partition, right.partition):
        for block in part.blocks():
            pairs.extend((block[0], e) for e in block[1:])
    return Congruence(lattice, _closure(lattice, pairs))


def meet_congruences(left: Congruence, right: Congruence) -> Congruence:
    """Common refinement; the intersection of congruences is a congruence."""
    lattice = _require_same_lattice(left, right)
    pairs = list(zip(left.partition.block_of, right.partition.block_of))
    seen: dict[tuple[int, int], int] = {}
    labels = [seen.setdefault(p, len(seen)) for p in pairs]
    return Congruence(lattice, Partition.from_labels(labels))


def all_congruences(lattice: FiniteLattice) -> list[Congruence]:
    """Con(L): join-closure of the identity and all principal congruences.

    Every congruence is the join of the principal congruences of its
    related pairs, so closing the principal set under binary join yields
    all of Con(L).  The result is sorted by normalized representation.
    """
    n = lattice.size
    seen: dict[tuple[int, ...], Partition] = {}
    identity = Partition.identity(n)
    seen[identity.block_of] = identity
    frontier: list[Partition] = []
    for a in range(n):
        for b in range(a + 1, n):
            p = _closure(lattice, [(a, b)])
            if p.block_of not in seen:
                seen[p.block_of] = p
                frontier.append(p)
    while frontier:
        p = frontier.pop()
        pairs_p = [
            (block[0], e) for block in p.blocks() for e in block[1:]
        ]
        for q in list(seen.values()):
            pairs = pairs_p + [
                (block[0], e) for block in q.blocks() for e in block[1:]
            ]
            joined = _closure(lattice, pairs)
            if joined.block_of not in seen:
                seen[joined.block_of] = joined
                frontier.append(joined)
    return [Congruence(lattice, p) for p in sorted(seen.values())]


def is_balanced_congruence(lattice: FiniteLattice, cong: Congruence) -> bool:
    """The two class equalities defining balance for one congruence.

    The 0-class must equal the 0-class of the congruence generated by
    collapsing the 1-class, and dually.
    """
    if cong.lattice is not lattice:
        raise OwnerMismatch("congruence belongs to a different lattice")
    zero_class = cong.class_of(lattice.bottom)
    one_class = cong.class_of(lattice.top)
    from_top = generated_congruence(lattice, one_class)
    if from_top.class_of(lattice.bottom) != zero_class:
        return False
    from_bottom = generated_congruence(lattice, zero_class)
    return from_bottom.class_of(lattice.top) == one_class


def is_balanced(lattice: FiniteLattice) -> bool:
    """True iff every congruence of the lattice is balanced."""
    return all(is_balanced_congruence(lattice, c) for c in all_congruences(lattice))


def is_balanced_pairwise(lattice: FiniteLattice) -> bool:
    """Equivalent form: 0-classes agree exactly when 1-classes agree.

    Scans all pairs from Con(L); kept separate from :func:`is_balanced`
    so the two definitions can be cross-checked.
    """
    congs = all_congruences(lattice)
    bottom, top = lattice.bottom, lattice.top
    pairs = [(frozenset(c.class_of(bottom)), frozenset(c.class_of(top))) for c in congs]
    for i, (zero_i, one_i) in enumerate(pairs):
        for zero_j, one_j in pairs[i + 1 :]:
            if (zero_i == zero_j) != (one_i == one_j):
                return False
    return True
