"""Integer partitions, Young-diagram cells, and the bead/hole encoding.

Half-integer bead positions are stored as odd integers (x stored as 2x), so
all arithmetic stays in exact integers.
"""

from __future__ import annotations

from typing import FrozenSet, Iterator, Set, Tuple


class EmptyPartitionError(Exception):
    """Bead-move operations are undefined for the empty partition."""


class Partition:
    """A weakly decreasing finite sequence of positive integers."""

    __slots__ = ("parts",)

    def __init__(self, parts=()):
        ps = tuple(int(p) for p in parts)
        if any(p <= 0 for p in ps):
            raise ValueError("parts must be positive")
        if any(ps[i] < ps[i + 1] for i in range(len(ps) - 1)):
            raise ValueError("parts must be weakly decreasing")
        object.__setattr__(self, "parts", ps)

    def __setattr__(self, *a):  # pragma: no cover
        raise AttributeError("Partition is immutable")

    def size(self) -> int:
        return sum(self.parts)

    def is_empty(self) -> bool:
        return not self.parts

    def __len__(self) -> int:
        return len(self.parts)

    def __bool__(self) -> bool:
        return bool(self.parts)

    def __eq__(self, other):
        if not isinstance(other, Partition):
            return NotImplemented
        return self.parts == other.parts

    def __hash__(self):
        return hash(self.parts)

    def __repr__(self):
        return f"Partition{self.parts}"

    def __str__(self):
        return format_partition(self)


def parse_partition(text: str) -> Partition:
    """Parse the CLI text format: "4,2,1"; "-" or "" denotes the empty partition."""
    text = text.strip()
    if text in ("", "-"):
        return Partition()
    return Partition(int(tok) for tok in text.split(","))


def format_partition(p: Partition) -> str:
    return ",".join(str(x) for x in p.parts) if p.parts else "-"


def cells(mu: Partition) -> Set[Tuple[int, int]]:
    """(u, v) is a cell iff v indexes a part and u < that part."""
    return {(u, v) for v, part in enumerate(mu.parts) for u in range(part)}


def in_cells(mu: Partition, u: int, v: int) -> bool:
    return 0 <= v < len(mu.parts) and 0 <= u < mu.parts[v]


class MayaDiagram:
    """Bead/hole encoding of a partition.

    s_plus: beads at positive half-integer positions; s_minus: holes at
    negative positions.  Positions are odd integers equal to twice the
    half-integer.  The charge is |s_plus| - |s_minus|.
    """

    __slots__ = ("s_plus", "s_minus")

    def __init__(self, s_plus, s_minus):
        sp = frozenset(int(x) for x in s_plus)
        sm = frozenset(int(x) for x in s_minus)
        if any(x <= 0 or x % 2 == 0 for x in sp):
            raise ValueError("s_plus must be positive odd integers (2x encoding)")
        if any(x >= 0 or x % 2 == 0 for x in sm):
            raise ValueError("s_minus must be negative odd integers (2x encoding)")
        object.__setattr__(self, "s_plus", sp)
        object.__setattr__(self, "s_minus", sm)

    def __setattr__(self, *a):  # pragma: no cover
        raise AttributeError("MayaDiagram is immutable")

    @property
    def charge(self) -> int:
        return len(self.s_plus) - len(self.s_minus)

    def has_bead(self, pos: int) -> bool:
        """Membership of the full (bi-infinite) bead set at odd position `pos`."""
        if pos > 0:
            return pos in self.s_plus
        return pos not in self.s_minus

    def __eq__(self, other):
        if not isinstance(other, MayaDiagram):
            return NotImplemented
        return self.s_plus == other.s_plus and self.s_minus == other.s_minus

    def __hash__(self):
        return hash((self.s_plus, self.s_minus))

    def __repr__(self):
        sp = sorted(self.s_plus)
        sm = sorted(self.s_minus)
        return f"MayaDiagram(s_plus={sp}, s_minus={sm})"


def maya(lam: Partition) -> MayaDiagram:
    """Charge-0 diagram of lam: beads at lam_t - t + 1/2."""
    k = len(lam.parts)
    beads = {2 * (p - t) + 1 for t, p in enumerate(lam.parts, start=1)}
    s_plus = frozenset(b for b in beads if b > 0)
    s_minus = frozenset(
        h for h in range(-1, -2 * k - 1, -2) if h not in beads
    )
    m = MayaDiagram(s_plus, s_minus)
    assert m.charge == 0
    return m


def partition_of_maya(m: MayaDiagram) -> Partition:
    """Shift beads by -charge and read off the partition; inverse of maya at charge 0."""
    c = m.charge
    shift = 2 * c
    beads = sorted(m.s_plus, reverse=True)
    # after shifting, every position below some bound is a bead; we only need
    # the beads that yield positive parts.
    parts = []
    t = 1
    for b in beads:
        lam_t = (b - shift - 1) // 2 + t
        if lam_t > 0:
            parts.append(lam_t)
        t += 1
    # continue through negative-side beads until parts hit zero
    pos = -1
    while True:
        if m.has_bead(pos):
            lam_t = (pos - shift - 1) // 2 + t
            if lam_t <= 0:
                break
            parts.append(lam_t)
            t += 1
        pos -= 2
    parts.sort(reverse=True)
    return Partition(parts)


def _nonempty_maya(lam: Partition) -> MayaDiagram:
    if lam.is_empty():
        raise EmptyPartitionError("bead moves are undefined for the empty partition")
    return maya(lam)


def min_s_plus(lam: Partition) -> int:
    """Smallest positive bead (odd-integer encoding)."""
    return min(_nonempty_maya(lam).s_plus)


def max_s_minus(lam: Partition) -> int:
    """Largest negative hole (odd-integer encoding)."""
    return max(_nonempty_maya(lam).s_minus)


def op_r(lam: Partition) -> Partition:
    """Remove the smallest positive bead (charge drops to -1)."""
    m = _nonempty_maya(lam)
    b = min(m.s_plus)
    return partition_of_maya(MayaDiagram(m.s_plus - {b}, m.s_minus))


def op_c(lam: Partition) -> Partition:
    """Fill the largest negative hole (charge rises to +1)."""
    m = _nonempty_maya(lam)
    h = max(m.s_minus)
    return partition_of_maya(MayaDiagram(m.s_plus, m.s_minus - {h}))


def op_rc(lam: Partition) -> Partition:
    """Remove the smallest positive bead and fill the largest negative hole."""
    m = _nonempty_maya(lam)
    b = min(m.s_plus)
    h = max(m.s_minus)
    return partition_of_maya(MayaDiagram(m.s_plus - {b}, m.s_minus - {h}))


def partitions_of(n: int) -> Iterator[Partition]:
    """All partitions of n, for exhaustive small-size checks."""

    def rec(remaining: int, cap: int, acc):
        if remaining == 0:
            yield Partition(acc)
            return
        for p in range(min(cap, remaining), 0, -1):
            yield from rec(remaining - p, p, acc + [p])

    yield from rec(n, n, [])
