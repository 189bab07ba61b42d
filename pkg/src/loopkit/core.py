"""Cayley-table loops: validation, nuclei, and exhaustive enumeration.

A loop of order n is stored as an n x n table over the element indices
0..n-1 whose rows and columns are permutations (a Latin square) and which
has a two-sided identity element.  Elements are 0-indexed internally;
every error message, witness rendering, and file format uses the
1-indexed labels that printed Cayley tables and catalogs use.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Sequence

ENUMERATION_CAP = 7


class LoopError(Exception):
    """Base class for everything this package raises on bad loop data."""


class Malformed(LoopError):
    """Input is not a square integer array with entries in 1..n."""


class NotLatin(LoopError):
    """Some row or column of the table repeats an entry."""


class NoIdentity(LoopError):
    """No element acts as a two-sided identity."""


class OrderTooLarge(LoopError):
    """Requested enumeration order exceeds ENUMERATION_CAP."""


class TheoremViolation(LoopError):
    """A proved statement failed on concrete data.

    At the orders this package scans, every statement it cross-checks is
    known to hold, so raising this signals an implementation bug rather
    than interesting input.
    """


@dataclass(frozen=True)
class LoopTable:
    """An order-n loop given by its Cayley table (0-indexed internally).

    rinv maps x to the element with x * rinv[x] = identity; linv maps x
    to the element with linv[x] * x = identity.
    """

    order: int
    table: tuple[tuple[int, ...], ...]
    identity: int
    rinv: tuple[int, ...]
    linv: tuple[int, ...]

    def mul(self, x: int, y: int) -> int:
        return self.table[x][y]

    def raw_rows(self) -> tuple[tuple[int, ...], ...]:
        """The table with 1-indexed entries, as printed in catalogs."""
        return tuple(tuple(v + 1 for v in row) for row in self.table)


@dataclass(frozen=True)
class Witness:
    """The first element tuple falsifying an identity or condition.

    `elements` is the lexicographically least failing tuple under the
    producing scan, 0-indexed; lhs and rhs are the two evaluated sides
    (always distinct).
    """

    identity_id: str
    elements: tuple[int, ...]
    lhs: int
    rhs: int

    def one_indexed(self) -> tuple[int, ...]:
        return tuple(x + 1 for x in self.elements)

    def describe(self) -> str:
        tup = ",".join(str(x) for x in self.one_indexed())
        return f"{self.identity_id} fails at ({tup}): lhs={self.lhs + 1} rhs={self.rhs + 1}"


@dataclass(frozen=True)
class Nucleus:
    """Left/middle/right nuclei, their intersection, and the center."""

    left: frozenset[int]
    middle: frozenset[int]
    right: frozenset[int]
    nucleus: frozenset[int]
    center: frozenset[int]


def validate_table(raw: Sequence[Sequence[int]]) -> LoopTable:
    """Check a 1-indexed square array and build a LoopTable from it.

    Raises Malformed, NotLatin, or NoIdentity; diagnostics use 1-indexed
    rows, columns, and entries.
    """
    n = len(raw)
    if n == 0:
        raise Malformed("empty table")
    for i, row in enumerate(raw):
        if len(row) != n:
            raise Malformed(f"row {i + 1} has {len(row)} entries, expected {n}")
        for v in row:
            if not isinstance(v, int) or not 1 <= v <= n:
                raise Malformed(f"row {i + 1} contains {v!r}, expected an integer in 1..{n}")
    for i, row in enumerate(raw):
        seen: set[int] = set()
        for v in row:
            if v in seen:
                raise NotLatin(f"row {i + 1} repeats entry {v}")
            seen.add(v)
    for j in range(n):
        seen = set()
        for i in range(n):
            v = raw[i][j]
            if v in seen:
                raise NotLatin(f"column {j + 1} repeats entry {v}")
            seen.add(v)

    expected = tuple(range(1, n + 1))
    ident = None
    for e in range(n):
        if tuple(raw[e]) == expected and all(raw[x][e] == x + 1 for x in range(n)):
            ident = e
            break
    if ident is None:
        raise NoIdentity("no element is a two-sided identity")

    table = tuple(tuple(v - 1 for v in row) for row in raw)
    rinv = tuple(row.index(ident) for row in table)
    linv = [0] * n
    for x in range(n):
        linv[rinv[x]] = x
    return LoopTable(n, table, ident, rinv, tuple(linv))


def normalized(L: LoopTable) -> LoopTable:
    """Relabel so the identity becomes element 1 (a reduced Latin square).

    Swaps the identity's label with label 1 and leaves all other labels
    alone; a no-op on already-normalized tables.
    """
    e = L.identity
    if e == 0:
        return L
    p = list(range(L.order))
    p[0], p[e] = e, 0
    raw = [[p[L.table[p[i]][p[j]]] + 1 for j in range(L.order)] for i in range(L.order)]
    return validate_table(raw)


def nuclei(L: LoopTable) -> Nucleus:
    """Compute nuclei and center by definitional scan over all pairs."""
    t = L.table
    rng = range(L.order)
    left = frozenset(
        a for a in rng if all(t[t[a][x]][y] == t[a][t[x][y]] for x in rng for y in rng)
    )
    middle = frozenset(
        a for a in rng if all(t[t[x][a]][y] == t[x][t[a][y]] for x in rng for y in rng)
    )
    right = frozenset(
        a for a in rng if all(t[t[x][y]][a] == t[x][t[y][a]] for x in rng for y in rng)
    )
    nuc = left & middle & right
    center = frozenset(a for a in nuc if all(t[a][x] == t[x][a] for x in rng))
    return Nucleus(left, middle, right, nuc, center)


def second_row_candidates(n: int) -> list[tuple[int, ...]]:
    """All valid completions of the first undetermined row, lexicographic.

    Row 1 of a normalized table starts with 1 and must avoid the value
    already placed in each column by the identity row.  Enumeration
    work-splitting partitions on this list.
    """
    out: list[tuple[int, ...]] = []

    def rec(j: int, row: list[int], used: int) -> None:
        if j == n:
            out.append(tuple(row))
            return
        for v in range(n):
            b = 1 << v
            if v != j and not used & b:
                row.append(v)
                rec(j + 1, row, used | b)
                row.pop()

    rec(1, [1], 1 << 1)
    return out


def enumerate_loops(
    n: int,
    visitor: Callable[[LoopTable], None],
    *,
    part_index: int = 0,
    part_count: int = 1,
) -> int:
    """Visit every normalized loop table of order n exactly once.

    Tables are visited in lexicographic order of row-major content (for
    part_count == 1).  With part_count > 1, only the loops whose row-1
    completion index is congruent to part_index are visited; the parts
    are disjoint, cover everything, and each is internally lexicographic,
    so counts add up and global minima are the min over parts.

    Returns the number of loops visited.
    """
    if n > ENUMERATION_CAP:
        raise OrderTooLarge(f"order {n} exceeds the enumeration cap {ENUMERATION_CAP}")
    if n < 2:
        raise ValueError("order must be at least 2")
    if part_count < 1 or not 0 <= part_index < part_count:
        raise ValueError(f"invalid partition {part_index}/{part_count}")

    full = (1 << n) - 1
    rows: list[tuple[int, ...]] = [tuple(range(n))]
    col_masks = [1 << j for j in range(n)]
    count = 0

    def build() -> LoopTable:
        table = tuple(rows)
        rinv = tuple(row.index(0) for row in table)
        linv = [0] * n
        for x in range(n):
            linv[rinv[x]] = x
        return LoopTable(n, table, 0, rinv, tuple(linv))

    def fill_row(i: int) -> None:
        nonlocal count
        row = [0] * n
        row[0] = i

        def cell(j: int, row_mask: int) -> None:
            nonlocal count
            if j == n:
                rows.append(tuple(row))
                if i == n - 1:
                    count += 1
                    visitor(build())
                else:
                    fill_row(i + 1)
                rows.pop()
                return
            avail = full & ~row_mask & ~col_masks[j]
            while avail:
                b = avail & -avail
                avail ^= b
                row[j] = b.bit_length() - 1
                col_masks[j] |= b
                cell(j + 1, row_mask | b)
                col_masks[j] ^= b

        cell(1, 1 << i)

    candidates = second_row_candidates(n)
    for idx in range(part_index, len(candidates), part_count):
        cand = candidates[idx]
        rows.append(cand)
        for j in range(1, n):
            col_masks[j] |= 1 << cand[j]
        if n == 2:
            count += 1
            visitor(build())
        else:
            fill_row(2)
        for j in range(1, n):
            col_masks[j] ^= 1 << cand[j]
        rows.pop()
    return count
