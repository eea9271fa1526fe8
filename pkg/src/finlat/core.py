"""Finite bounded lattices as explicit order and operation tables.

Elements of a lattice of size n are the dense integers 0..n-1.  The
partial order is an explicit boolean matrix; binary meet and join tables
are computed once at construction time, so every algorithm layered on
top is a table lookup.  Bottom and top are discovered by validation, not
fixed by index: input files may label elements freely, while
:func:`canonical_form` renumbers so that bottom is 0 and top is n-1.

All values are immutable after construction and safe to share across
threads.
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass
from functools import lru_cache
from typing import TYPE_CHECKING, Sequence

if TYPE_CHECKING:  # pragma: no cover
    from .congruences import Congruence


class LatticeError(Exception):
    """Base class for every error raised by this package."""


class NotAPartialOrder(LatticeError):
    """The order matrix violates reflexivity, antisymmetry or transitivity."""


class NotALattice(LatticeError):
    """Some pair of elements has no unique meet or join."""


class NotBounded(LatticeError):
    """The order has no unique least or greatest element."""


class UnknownName(LatticeError):
    """Requested catalog lattice does not exist."""


class NotACongruence(LatticeError):
    """A partition is not compatible with meet and join."""


class OwnerMismatch(LatticeError):
    """Operands belong to two different lattices."""


class SizeMismatch(LatticeError):
    """A partition or element set is sized for a different lattice."""


class EmptySet(LatticeError):
    """An operation that needs a nonempty set of elements got an empty one."""


class ParseError(LatticeError):
    """Malformed LATT input.  Carries the 1-based offending line number."""

    def __init__(self, line: int, message: str) -> None:
        super().__init__(message)
        self.line = line


@dataclass(frozen=True)
class Violation:
    """One broken lattice axiom together with the witnessing elements."""

    rule: str
    elements: tuple[int, ...] = ()

    def __str__(self) -> str:
        return f"{self.rule}{list(self.elements)}" if self.elements else self.rule


@dataclass(frozen=True)
class FiniteLattice:
    """A bounded lattice on elements 0..size-1 with precomputed tables.

    ``leq[i][j]`` is True iff i <= j.  ``down_masks[i]`` has bit j set
    iff j <= i, ``up_masks[i]`` has bit j set iff i <= j; both are
    derived from ``leq`` and exist only to make subset arithmetic cheap.
    """

    size: int
    leq: tuple[tuple[bool, ...], ...]
    meet: tuple[tuple[int, ...], ...]
    join: tuple[tuple[int, ...], ...]
    bottom: int
    top: int
    down_masks: tuple[int, ...] = ()
    up_masks: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        if not self.down_masks or not self.up_masks:
            n = self.size
            leq = self.leq
            down = tuple(sum(1 << j for j in range(n) if leq[j][i]) for i in range(n))
            up = tuple(sum(1 << j for j in range(n) if leq[i][j]) for i in range(n))
            object.__setattr__(self, "down_masks", down)
            object.__setattr__(self, "up_masks", up)

    def elements(self) -> range:
        return range(self.size)

    def le(self, x: int, y: int) -> bool:
        return self.leq[x][y]

    def __repr__(self) -> str:
        return f"FiniteLattice(size={self.size}, bottom={self.bottom}, top={self.top})"


@dataclass(frozen=True)
class LatticeHomomorphism:
    """A map between lattices preserving meet, join, bottom and top."""

    source: FiniteLattice
    target: FiniteLattice
    map: tuple[int, ...]

    def __call__(self, x: int) -> int:
        return self.map[x]


def is_homomorphism(hom: LatticeHomomorphism) -> bool:
    """Full-table check of the homomorphism laws, bounds included."""
    src, dst, f = hom.source, hom.target, hom.map
    if len(f) != src.size or any(not 0 <= v < dst.size for v in f):
        return False
    if f[src.bottom] != dst.bottom or f[src.top] != dst.top:
        return False
    for x in range(src.size):
        for y in range(src.size):
            if f[src.meet[x][y]] != dst.meet[f[x]][f[y]]:
                return False
            if f[src.join[x][y]] != dst.join[f[x]][f[y]]:
                return False
    return True


def is_surjective(hom: LatticeHomomorphism) -> bool:
    return len(set(hom.map)) == hom.target.size


def _unique_bound(masks: Sequence[int], candidates: int) -> int | None:
    """The element of ``candidates`` whose mask covers all of them, if any.

    With ``masks = down_masks`` this is the greatest lower bound of the
    pair whose common lower bounds are ``candidates``; with ``up_masks``
    it is the least upper bound.  Uniqueness is automatic: two such
    elements would be mutually comparable.
    """
    rest = candidates
    while rest:
        m = rest.bit_length() - 1
        if candidates & ~masks[m] == 0:
            return m
        rest &= ~(1 << m)
    return None


def from_leq_matrix(matrix: Sequence[Sequence[object]]) -> FiniteLattice:
    """Build a validated bounded lattice from an n-by-n order matrix.

    Raises :class:`NotAPartialOrder`, :class:`NotBounded` or
    :class:`NotALattice` as soon as the corresponding stage fails.
    """
    n = len(matrix)
    if n < 1 or any(len(row) != n for row in matrix):
        raise ValueError("order matrix must be square with n >= 1")
    leq = tuple(tuple(bool(v) for v in row) for row in matrix)
    for i in range(n):
        if not leq[i][i]:
            raise NotAPartialOrder(f"reflexivity fails at {i}")
        for j in range(i + 1, n):
            if leq[i][j] and leq[j][i]:
                raise NotAPartialOrder(f"antisymmetry fails at ({i}, {j})")
    up = [sum(1 << j for j in range(n) if leq[i][j]) for i in range(n)]
    for i in range(n):
        for j in range(n):
            if leq[i][j] and up[j] & ~up[i]:
                k = (up[j] & ~up[i]).bit_length() - 1
                raise NotAPartialOrder(f"transitivity fails at ({i}, {j}, {k})")
    down = [sum(1 << j for j in range(n) if leq[j][i]) for i in range(n)]
    full = (1 << n) - 1
    bottoms = [i for i in range(n) if up[i] == full]
    tops = [i for i in range(n) if down[i] == full]
    if len(bottoms) != 1 or len(tops) != 1:
        raise NotBounded("order has no unique bottom or top element")
    meet_rows = []
    join_rows = []
    for x in range(n):
        mrow = []
        jrow = []
        for y in range(n):
            m = _unique_bound(down, down[x] & down[y])
            if m is None:
                raise NotALattice(f"elements ({x}, {y}) have no meet")
            j = _unique_bound(up, up[x] & up[y])
            if j is None:
                raise NotALattice(f"elements ({x}, {y}) have no join")
            mrow.append(m)
            jrow.append(j)
        meet_rows.append(tuple(mrow))
        join_rows.append(tuple(jrow))
    return FiniteLattice(
        size=n,
        leq=leq,
        meet=tuple(meet_rows),
        join=tuple(join_rows),
        bottom=bottoms[0],
        top=tops[0],
        down_masks=tuple(down),
        up_masks=tuple(up),
    )


def validate(lattice: FiniteLattice) -> list[Violation]:
    """Machine-check every axiom; the empty list means all of them hold.

    Checks run in stages (order axioms, boundedness, table laws, then
    glb/lub agreement); later stages are skipped once an earlier stage
    reports, since their results would be meaningless.
    """
    n = lattice.size
    leq = lattice.leq
    out: list[Violation] = []
    for i in range(n):
        if not leq[i][i]:
            out.append(Violation("reflexivity", (i,)))
        for j in range(i + 1, n):
            if leq[i][j] and leq[j][i]:
                out.append(Violation("antisymmetry", (i, j)))
    for i in range(n):
        for j in range(n):
            if not leq[i][j]:
                continue
            for k in range(n):
                if leq[j][k] and not leq[i][k]:
                    out.append(Violation("transitivity", (i, j, k)))
    if out:
        return out

    bottoms = [i for i in range(n) if all(leq[i][j] for j in range(n))]
    tops = [i for i in range(n) if all(leq[j][i] for j in range(n))]
    if len(bottoms) != 1 or len(tops) != 1:
        minimal = [i for i in range(n) if not any(leq[j][i] for j in range(n) if j != i)]
        maximal = [i for i in range(n) if not any(leq[i][j] for j in range(n) if j != i)]
        out.append(Violation("bounded", tuple(minimal if len(bottoms) != 1 else maximal)))
        return out
    if lattice.bottom != bottoms[0]:
        out.append(Violation("bottom", (lattice.bottom, bottoms[0])))
    if lattice.top != tops[0]:
        out.append(Violation("top", (lattice.top, tops[0])))
    if out:
        return out

    meet, join = lattice.meet, lattice.join
    for x in range(n):
        for y in range(n):
            if not 0 <= meet[x][y] < n or not 0 <= join[x][y] < n:
                out.append(Violation("table-range", (x, y)))
    if out:
        return out
    for x in range(n):
        for y in range(n):
            if meet[x][y] != meet[y][x]:
                out.append(Violation("meet-commutativity", (x, y)))
            if join[x][y] != join[y][x]:
                out.append(Violation("join-commutativity", (x, y)))
        if meet[x][x] != x:
            out.append(Violation("meet-idempotence", (x,)))
        if join[x][x] != x:
            out.append(Violation("join-idempotence", (x,)))
    for x in range(n):
        for y in range(n):
            if meet[x][join[x][y]] != x:
                out.append(Violation("meet-absorption", (x, y)))
            if join[x][meet[x][y]] != x:
                out.append(Violation("join-absorption", (x, y)))
            for z in range(n):
                if meet[meet[x][y]][z] != meet[x][meet[y][z]]:
                    out.append(Violation("meet-associativity", (x, y, z)))
                if join[join[x][y]][z] != join[x][join[y][z]]:
                    out.append(Violation("join-associativity", (x, y, z)))
    if out:
        return out

    down = [sum(1 << j for j in range(n) if leq[j][i]) for i in range(n)]
    up = [sum(1 << j for j in range(n) if leq[i][j]) for i in range(n)]
    for x in range(n):
        for y in range(n):
            if meet[x][y] != _unique_bound(down, down[x] & down[y]):
                out.append(Violation("meet-glb", (x, y)))
            if join[x][y] != _unique_bound(up, up[x] & up[y]):
                out.append(Violation("join-lub", (x, y)))
    return out


# ---------------------------------------------------------------------------
# Catalog of standard bounded lattices
# ---------------------------------------------------------------------------

CATALOG_NAMES = ("chain", "boolean", "n5", "m3")


@lru_cache(maxsize=None)
def _build_standard(name: str, parameter: int | None) -> FiniteLattice:
    if name == "chain":
        k = parameter or 0
        return from_leq_matrix([[i <= j for j in range(k)] for i in range(k)])
    if name == "boolean":
        k = parameter or 0
        m = 1 << k
        return from_leq_matrix([[i & j == i for j in range(m)] for i in range(m)])
    if name == "n5":
        # 0 < 1 < 2 < 4 and 0 < 3 < 4; the pentagon.
        rows = [
            [1, 1, 1, 1, 1],
            [0, 1, 1, 0, 1],
            [0, 0, 1, 0, 1],
            [0, 0, 0, 1, 1],
            [0, 0, 0, 0, 1],
        ]
        return from_leq_matrix(rows)
    # m3: bottom 0, three pairwise-incomparable atoms 1, 2, 3, top 4.
    rows = [
        [1, 1, 1, 1, 1],
        [0, 1, 0, 0, 1],
        [0, 0, 1, 0, 1],
        [0, 0, 0, 1, 1],
        [0, 0, 0, 0, 1],
    ]
    return from_leq_matrix(rows)


def standard_lattice(name: str, parameter: int | None = None) -> FiniteLattice:
    """A named catalog lattice: chain(k), boolean(k), n5 or m3.

    Repeated calls with the same arguments return the same object, so
    congruences computed against one call remain usable with another.
    """
    if name in ("n5", "m3"):
        if parameter is not None:
            raise ValueError(f"{name} takes no size parameter")
        return _build_standard(name, None)
    if name in ("chain", "boolean"):
        if parameter is None:
            raise ValueError(f"{name} needs a size parameter")
        if parameter < 1:
            raise ValueError("size parameter must be >= 1")
        return _build_standard(name, parameter)
    raise UnknownName(f"unknown catalog lattice {name!r}")


def product(first: FiniteLattice, second: FiniteLattice) -> FiniteLattice:
    """Direct product with componentwise order on pairs (x, y) -> x*|L2|+y."""
    n1, n2 = first.size, second.size
    leq1, leq2 = first.leq, second.leq
    size = n1 * n2
    rows = [
        [leq1[x1][x2] and leq2[y1][y2] for x2 in range(n1) for y2 in range(n2)]
        for x1 in range(n1)
        for y1 in range(n2)
    ]
    assert len(rows) == size
    return from_leq_matrix(rows)


def dual(lattice: FiniteLattice) -> FiniteLattice:
    """The order-dual: transpose the order, swapping meet with join."""
    n = lattice.size
    return from_leq_matrix([[lattice.leq[j][i] for j in range(n)] for i in range(n)])


# ---------------------------------------------------------------------------
# Canonical form (isomorph rejection)
# ---------------------------------------------------------------------------


def _refine_colors(n: int, up: Sequence[int], down: Sequence[int]) -> list[int]:
    """Iteratively refined element classes, invariant under isomorphism.

    The initial class of an element is the rank of its down-set size, so
    bottom always lands in the first class and top in the last; each
    round re-ranks by (old class, classes below, classes above) until
    stable.  Classes only ever split, and the relative order of old
    classes is preserved.
    """
    sizes = [down[i].bit_count() for i in range(n)]
    rank = {v: r for r, v in enumerate(sorted(set(sizes)))}
    color = [rank[v] for v in sizes]
    while True:
        sigs = []
        for i in range(n):
            below = sorted(color[j] for j in range(n) if down[i] >> j & 1 and j != i)
            above = sorted(color[j] for j in range(n) if up[i] >> j & 1 and j != i)
            sigs.append((color[i], tuple(below), tuple(above)))
        order = {s: r for r, s in enumerate(sorted(set(sigs)))}
        new = [order[s] for s in sigs]
        if new == color:
            return color
        color = new


def _canonical_from_up_masks(n: int, up: Sequence[int]) -> bytes:
    """Canonical encoding of an order given as up-set bitmask rows.

    Minimizes the row-major 0/1 matrix string over all relabelings that
    respect the refined classes (bottom forced to 0, top to n-1).  The
    class restriction prunes the permutation space without affecting
    canonicity because the classes are themselves isomorphism-invariant.
    """
    down = [sum(1 << j for j in range(n) if up[j] >> i & 1) for i in range(n)]
    color = _refine_colors(n, up, down)
    groups: dict[int, list[int]] = {}
    for e in range(n):
        groups.setdefault(color[e], []).append(e)
    parts = [groups[c] for c in sorted(groups)]
    best: bytes | None = None
    for chosen in itertools.product(*(itertools.permutations(p) for p in parts)):
        order = [e for part in chosen for e in part]
        enc = bytearray()
        for i in range(n):
            row = up[order[i]]
            for j in range(n):
                enc.append(48 + (row >> order[j] & 1))
        cand = bytes(enc)
        if best is None or cand < best:
            best = cand
    assert best is not None
    return f"{n}:".encode() + best


def canonical_form(lattice: FiniteLattice) -> bytes:
    """Canonical byte string: equal for two lattices iff they are isomorphic.

    The encoding renumbers elements so bottom is 0 and top is n-1 and is
    byte-identical across relabelings of the input.
    """
    return _canonical_from_up_masks(lattice.size, lattice.up_masks)


def lattice_from_canonical(form: bytes) -> FiniteLattice:
    """Rebuild the (validated) lattice encoded by a canonical form."""
    head, _, body = form.partition(b":")
    n = int(head)
    if len(body) != n * n:
        raise ValueError("canonical form has wrong length")
    rows = [[body[i * n + j] == 0x31 for j in range(n)] for i in range(n)]
    return from_leq_matrix(rows)


def is_isomorphic(first: FiniteLattice, second: FiniteLattice) -> bool:
    if first.size != second.size:
        return False
    return canonical_form(first) == canonical_form(second)


# ---------------------------------------------------------------------------
# Quotients
# ---------------------------------------------------------------------------


def _blocks_compatible(lattice: FiniteLattice, block_of: Sequence[int]) -> bool:
    """Meet/join compatibility of a block labeling, by full scan."""
    n = lattice.size
    meet, join = lattice.meet, lattice.join
    for x in range(n):
        bx = block_of[x]
        mx, jx = meet[x], join[x]
        for y in range(x + 1, n):
            if block_of[y] != bx:
                continue
            my, jy = meet[y], join[y]
            for z in range(n):
                if block_of[mx[z]] != block_of[my[z]]:
                    return False
                if block_of[jx[z]] != block_of[jy[z]]:
                    return False
    return True


def quotient(
    lattice: FiniteLattice, congruence: "Congruence"
) -> tuple[FiniteLattice, LatticeHomomorphism]:
    """The quotient lattice of blocks plus the projection homomorphism.

    Block X <= block Y iff some x in X and y in Y satisfy x <= y, which
    for congruence blocks is a valid bounded-lattice order.
    """
    if congruence.lattice is not lattice:
        raise OwnerMismatch("congruence belongs to a different lattice")
    block_of = congruence.partition.block_of
    if not _blocks_compatible(lattice, block_of):
        raise NotACongruence("partition is not meet/join compatible")
    n = lattice.size
    k = max(block_of) + 1
    rows = [[False] * k for _ in range(k)]
    for x in range(n):
        for y in range(n):
            if lattice.leq[x][y]:
                rows[block_of[x]][block_of[y]] = True
    image = from_leq_matrix(rows)
    return image, LatticeHomomorphism(lattice, image, tuple(block_of))


# ---------------------------------------------------------------------------
# LATT v1 text format
# ---------------------------------------------------------------------------

_SIZE_LINE = re.compile(r"n=(0|[1-9][0-9]*)\Z")


def parse_latt(data: bytes | str) -> FiniteLattice:
    """Parse the bit-exact LATT v1 format.

    Any deviation (wrong header, bad size line, wrong row count or
    length, characters other than 0/1, missing trailing newline) raises
    :class:`ParseError` with the offending line; an order matrix that
    parses but fails lattice validation is also reported as a
    :class:`ParseError` naming the violated rule.
    """
    if isinstance(data, bytes):
        try:
            text = data.decode("ascii")
        except UnicodeDecodeError as exc:
            line = data[: exc.start].count(b"\n") + 1
            raise ParseError(line, "non-ASCII byte") from None
    else:
        text = data
    if not text:
        raise ParseError(1, "empty input, expected 'LATT 1' header")
    if "\r" in text:
        raise ParseError(text[: text.index("\r")].count("\n") + 1, "carriage return not allowed")
    if not text.endswith("\n"):
        raise ParseError(text.count("\n") + 1, "missing trailing newline")
    lines = text.split("\n")[:-1]
    if not lines or lines[0] != "LATT 1":
        raise ParseError(1, "expected 'LATT 1' header")
    if len(lines) < 2:
        raise ParseError(2, "missing size line 'n=<k>'")
    m = _SIZE_LINE.match(lines[1])
    if m is None:
        raise ParseError(2, "expected size line 'n=<k>'")
    n = int(m.group(1))
    if n < 1:
        raise ParseError(2, "size must be >= 1")
    if len(lines) < 2 + n:
        raise ParseError(len(lines) + 1, f"expected {n} matrix rows, found {len(lines) - 2}")
    if len(lines) > 2 + n:
        raise ParseError(2 + n + 1, "trailing content after matrix")
    rows: list[list[bool]] = []
    for i in range(n):
        line = lines[2 + i]
        if len(line) != n:
            raise ParseError(3 + i, f"expected {n} characters, found {len(line)}")
        bad = next((c for c in line if c not in "01"), None)
        if bad is not None:
            raise ParseError(3 + i, f"invalid character {bad!r}")
        rows.append([c == "1" for c in line])
    try:
        return from_leq_matrix(rows)
    except LatticeError as exc:
        raise ParseError(3, f"{type(exc).__name__}: {exc}") from exc


def format_latt(lattice: FiniteLattice) -> str:
    """Serialize to LATT v1; ``parse_latt`` round-trips it exactly."""
    n = lattice.size
    lines = ["LATT 1", f"n={n}"]
    for i in range(n):
        lines.append("".join("1" if lattice.leq[i][j] else "0" for j in range(n)))
    return "\n".join(lines) + "\n"


def relabel(lattice: FiniteLattice, permutation: Sequence[int]) -> FiniteLattice:
    """The isomorphic copy where element x is renamed permutation[x]."""
    n = lattice.size
    if sorted(permutation) != list(range(n)):
        raise ValueError("not a permutation of the element set")
    rows = [[False] * n for _ in range(n)]
    for x in range(n):
        for y in range(n):
            if lattice.leq[x][y]:
                rows[permutation[x]][permutation[y]] = True
    return from_leq_matrix(rows)
