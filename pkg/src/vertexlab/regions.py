"""Classification of boxes of Z^3 into the leg-overlap regions of a partition triple.

Conventions (single source of truth for every other module):
  cylinder 1 = {(x, u, v) : (u, v) cell of mu1}   (x free)
  cylinder 2 = {(v, y, u) : (u, v) cell of mu2}   (y free)
  cylinder 3 = {(u, v, z) : (u, v) cell of mu3}   (z free)
so membership tests read (y,z) against mu1, (z,x) against mu2, (x,y) against mu3.
"""

from __future__ import annotations

from typing import Dict, List, Set, Tuple

from .partitions import Partition, in_cells

Box = Tuple[int, int, int]

# region tags returned by classify()
OUTSIDE = "outside"
I_MINUS = "I_minus"
I_PLUS_ONLY = "I_plus_only"
III = "III"


def ii_bar(i: int) -> str:
    return f"II_bar_{i}"


def in_octant(b: Box) -> bool:
    return b[0] >= 0 and b[1] >= 0 and b[2] >= 0


class RegionClassifier:
    """Membership oracle for the overlap regions of a partition triple."""

    def __init__(self, mu1: Partition, mu2: Partition, mu3: Partition):
        self.mus = (mu1, mu2, mu3)
        self._ii = None
        self._iii = None

    def in_cyl(self, i: int, b: Box) -> bool:
        x, y, z = b
        if i == 1:
            return in_cells(self.mus[0], y, z)
        if i == 2:
            return in_cells(self.mus[1], z, x)
        if i == 3:
            return in_cells(self.mus[2], x, y)
        raise ValueError("leg index must be 1, 2 or 3")

    def cylinders(self, b: Box) -> Tuple[int, ...]:
        return tuple(i for i in (1, 2, 3) if self.in_cyl(i, b))

    def in_cyl_minus(self, i: int, b: Box) -> bool:
        return self.in_cyl(i, b) and not in_octant(b)

    def in_cyl_plus(self, i: int, b: Box) -> bool:
        return self.in_cyl(i, b) and in_octant(b)

    def classify(self, b: Box) -> str:
        cyls = self.cylinders(b)
        if len(cyls) == 3:
            return III
        if len(cyls) == 2:
            # boxes in two cylinders always lie in the nonnegative octant
            missing = ({1, 2, 3} - set(cyls)).pop()
            return ii_bar(missing)
        if len(cyls) == 1:
            return I_PLUS_ONLY if in_octant(b) else I_MINUS
        return OUTSIDE

    def in_base(self, b: Box) -> bool:
        """Membership of I+ union II union III (equivalently I+, see region algebra)."""
        return in_octant(b) and bool(self.cylinders(b))

    def in_region_ii_or_iii(self, b: Box) -> bool:
        return len(self.cylinders(b)) >= 2

    def in_i_minus(self, b: Box) -> bool:
        return not in_octant(b) and bool(self.cylinders(b))

    def in_i_minus_or_iii(self, b: Box) -> bool:
        """Membership of the stacking region for the first box family."""
        if in_octant(b):
            return len(self.cylinders(b)) == 3
        return bool(self.cylinders(b))

    def scan_bound(self) -> int:
        m = 0
        for mu in self.mus:
            if mu.parts:
                m = max(m, mu.parts[0], len(mu.parts))
        return m + 1

    def region_sets(self) -> Tuple[Set[Box], Set[Box]]:
        """Materialize (II, III) by scanning the bounding box implied by the parts."""
        if self._ii is not None:
            return self._ii, self._iii
        L = self.scan_bound() + 1
        ii: Set[Box] = set()
        iii: Set[Box] = set()
        for x in range(L):
            for y in range(L):
                for z in range(L):
                    n = len(self.cylinders((x, y, z)))
                    if n == 3:
                        iii.add((x, y, z))
                    elif n == 2:
                        ii.add((x, y, z))
        for b in ii | iii:
            assert max(b) < L - 1, "region member touches the scan boundary"
        self._ii, self._iii = ii, iii
        return ii, iii

    def ii_by_sector(self) -> Dict[int, Set[Box]]:
        ii, _ = self.region_sets()
        out: Dict[int, Set[Box]] = {1: set(), 2: set(), 3: set()}
        for b in ii:
            missing = ({1, 2, 3} - set(self.cylinders(b))).pop()
            out[missing].add(b)
        return out

    def w_min(self) -> int:
        """Weight of the minimal asymptotic configuration: -|II| - 2|III|."""
        ii, iii = self.region_sets()
        return -len(ii) - 2 * len(iii)

    def rotated(self) -> "RegionClassifier":
        """Classifier for the cyclically rotated triple (mu2, mu3, mu1)."""
        return RegionClassifier(self.mus[1], self.mus[2], self.mus[0])


def rotate_box(b: Box) -> Box:
    """(x,y,z) -> (y,z,x); maps regions of (mu1,mu2,mu3) to regions of (mu2,mu3,mu1)."""
    return (b[1], b[2], b[0])


def predecessors(b: Box) -> List[Box]:
    x, y, z = b
    return [(x - 1, y, z), (x, y - 1, z), (x, y, z - 1)]


def successors(b: Box) -> List[Box]:
    x, y, z = b
    return [(x + 1, y, z), (x, y + 1, z), (x, y, z + 1)]
