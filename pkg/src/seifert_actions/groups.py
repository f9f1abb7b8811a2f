"""Finite groups given by explicit multiplication tables.

Elements are the indices 0..N-1; table[a][b] is the product a*b.  Orders
here stay small (a few hundred at most), so every axiom is checked
exhaustively and subgroup questions are answered by direct scans.
"""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path

__all__ = [
    "FiniteGroup",
    "GroupTableError",
    "cyclic_group",
    "dihedral_group",
    "direct_product",
    "format_group",
    "generated_subgroup",
    "is_subgroup",
    "left_cosets",
    "parse_group_file",
    "parse_group_text",
    "quaternion_group",
    "validate_group",
]


class GroupTableError(ValueError):
    """Raised when a multiplication table violates a group axiom."""


@dataclass(frozen=True)
class FiniteGroup:
    table: tuple[tuple[int, ...], ...]
    identity: int

    @property
    def order(self) -> int:
        return len(self.table)

    def elements(self) -> range:
        return range(self.order)

    def mul(self, a: int, b: int) -> int:
        return self.table[a][b]

    def inv(self, a: int) -> int:
        row = self.table[a]
        for b in self.elements():
            if row[b] == self.identity:
                return b
        raise GroupTableError(f"element {a} has no inverse")

    def element_order(self, a: int) -> int:
        x = a
        n = 1
        while x != self.identity:
            x = self.mul(x, a)
            n += 1
        return n


def validate_group(table: list[list[int]]) -> FiniteGroup:
    """Check all four group axioms exhaustively; raise on the first failure."""
    n = len(table)
    if n == 0:
        raise GroupTableError("empty table")
    for g, row in enumerate(table):
        if len(row) != n:
            raise GroupTableError(f"row {g} has {len(row)} entries, expected {n}")
        for h, v in enumerate(row):
            if not 0 <= v < n:
                raise GroupTableError(f"entry [{g}][{h}]={v} out of range 0..{n - 1}")
    full = set(range(n))
    for g in range(n):
        if set(table[g]) != full:
            raise GroupTableError(f"row {g} is not a permutation (table not Latin)")
        if {table[h][g] for h in range(n)} != full:
            raise GroupTableError(f"column {g} is not a permutation (table not Latin)")
    identity = None
    for e in range(n):
        if all(table[e][g] == g and table[g][e] == g for g in range(n)):
            identity = e
            break
    if identity is None:
        raise GroupTableError("no identity element")
    for a in range(n):
        row_a = table[a]
        for b in range(n):
            ab = row_a[b]
            row_ab = table[ab]
            row_b = table[b]
            for c in range(n):
                if row_ab[c] != row_a[row_b[c]]:
                    raise GroupTableError(
                        f"associativity fails at ({a},{b},{c}): "
                        f"({a}*{b})*{c}={row_ab[c]} but {a}*({b}*{c})={row_a[row_b[c]]}"
                    )
    group = FiniteGroup(tuple(tuple(row) for row in table), identity)
    for a in range(n):
        group.inv(a)
    return group


def cyclic_group(n: int) -> FiniteGroup:
    if n < 1:
        raise GroupTableError(f"cyclic group order must be positive, got {n}")
    table = tuple(tuple((a + b) % n for b in range(n)) for a in range(n))
    return FiniteGroup(table, 0)


def direct_product(g1: FiniteGroup, g2: FiniteGroup) -> FiniteGroup:
    """Product group with element (a1, a2) encoded as a1 * |G2| + a2."""
    n2 = g2.order
    table = []
    for a in range(g1.order * n2):
        a1, a2 = divmod(a, n2)
        row = []
        for b in range(g1.order * n2):
            b1, b2 = divmod(b, n2)
            row.append(g1.mul(a1, b1) * n2 + g2.mul(a2, b2))
        table.append(tuple(row))
    return FiniteGroup(tuple(table), g1.identity * n2 + g2.identity)


def dihedral_group(n: int) -> FiniteGroup:
    """Dihedral group of order 2n; 0..n-1 are rotations, n..2n-1 reflections."""
    if n < 1:
        raise GroupTableError(f"dihedral parameter must be positive, got {n}")

    def mul(a: int, b: int) -> int:
        ra, fa = a % n, a // n
        rb, fb = b % n, b // n
        rot = (ra + rb) % n if fa == 0 else (ra - rb) % n
        return rot + n * (fa ^ fb)

    table = tuple(tuple(mul(a, b) for b in range(2 * n)) for a in range(2 * n))
    return FiniteGroup(table, 0)


def quaternion_group() -> FiniteGroup:
    """Quaternion group of order 8: indices 0..7 = 1, i, j, k, -1, -i, -j, -k."""

    def axis_mul(a: int, b: int) -> tuple[int, int]:
        # axes: 0 = 1, 1 = i, 2 = j, 3 = k
        if a == 0:
            return (1, b)
        if b == 0:
            return (1, a)
        if a == b:
            return (-1, 0)
        # cyclic rule i*j = k and anticommutativity
        sign = 1 if (a, b) in ((1, 2), (2, 3), (3, 1)) else -1
        return (sign, 6 - a - b)

    def mul(x: int, y: int) -> int:
        sx, ax = (-1 if x >= 4 else 1), x % 4
        sy, ay = (-1 if y >= 4 else 1), y % 4
        s, axis = axis_mul(ax, ay)
        s *= sx * sy
        return axis if s == 1 else axis + 4

    table = tuple(tuple(mul(a, b) for b in range(8)) for a in range(8))
    return FiniteGroup(table, 0)


def is_subgroup(group: FiniteGroup, elements: list[int]) -> bool:
    members = set(elements)
    if group.identity not in members:
        return False
    for a in members:
        if group.inv(a) not in members:
            return False
        for b in members:
            if group.mul(a, b) not in members:
                return False
    return True


def generated_subgroup(group: FiniteGroup, generators: list[int]) -> frozenset[int]:
    members = {group.identity}
    frontier = list(members)
    while frontier:
        a = frontier.pop()
        for g in generators:
            for x in (group.mul(a, g), group.mul(a, group.inv(g))):
                if x not in members:
                    members.add(x)
                    frontier.append(x)
    return frozenset(members)


def left_cosets(group: FiniteGroup, subgroup: list[int]) -> list[frozenset[int]]:
    if not is_subgroup(group, subgroup):
        raise GroupTableError(f"{sorted(subgroup)} is not a subgroup")
    cosets = []
    seen: set[int] = set()
    for g in group.elements():
        if g in seen:
            continue
        coset = frozenset(group.mul(g, h) for h in subgroup)
        seen.update(coset)
        cosets.append(coset)
    return cosets


def parse_group_text(text: str, source: str = "<string>") -> FiniteGroup:
    """Parse the group file format: `order: N` then N rows of N indices.

    The identity must be element 0.
    """
    lines = text.splitlines()
    header = None
    rows: list[list[int]] = []
    for lineno, raw in enumerate(lines, start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if header is None:
            m = line.split(":")
            if len(m) != 2 or m[0].strip() != "order":
                raise GroupTableError(f"{source}:{lineno}: expected 'order: N'")
            try:
                header = int(m[1])
            except ValueError:
                raise GroupTableError(f"{source}:{lineno}: bad order {m[1]!r}") from None
            continue
        try:
            rows.append([int(tok) for tok in line.split()])
        except ValueError:
            raise GroupTableError(f"{source}:{lineno}: bad table row {line!r}") from None
    if header is None:
        raise GroupTableError(f"{source}: missing 'order:' header")
    if len(rows) != header:
        raise GroupTableError(
            f"{source}: expected {header} table rows, found {len(rows)}"
        )
    group = validate_group(rows)
    if group.identity != 0:
        raise GroupTableError(f"{source}: identity is {group.identity}, must be 0")
    return group


def parse_group_file(path: str | Path) -> FiniteGroup:
    path = Path(path)
    return parse_group_text(path.read_text(encoding="utf-8"), source=str(path))


def format_group(group: FiniteGroup) -> str:
    lines = [f"order: {group.order}"]
    for row in group.table:
        lines.append(" ".join(str(v) for v in row))
    return "\n".join(lines) + "\n"
