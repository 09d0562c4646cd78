"""Triangular-lattice geometry shared by the dimer and double-dimer models.

Boxes of Z^3 are projected along (1,1,1): p(x,y,z) = (y-x, z-x).  Unit
triangles of the image lattice are the honeycomb-graph vertices:

    U(a,b) has corners (a,b), (a+1,b), (a+1,b+1)      (up-pointing)
    D(a,b) has corners (a,b), (a+1,b+1), (a,b+1)      (down-pointing)

A lozenge (= honeycomb edge = dimer) is a pair of adjacent triangles; the
three edge types record which coordinate face of a box the lozenge is:

    type 1 (face perp. e1): U(a,b) - D(a,b)
    type 2 (face perp. e2): U(a,b) - D(a,b-1)
    type 3 (face perp. e3): U(a,b) - D(a+1,b)

Any down-closed solid V of Z^3 has a canonical tiling: the fiber over a
triangle is a monotone chain of boxes, the chain leaves V exactly once, and
the step at which it leaves picks the covering tile.  No perturbation
conventions are needed.
"""

from __future__ import annotations

from math import sqrt
from typing import Callable, Dict, FrozenSet, Iterable, List, Optional, Set, Tuple

Tri = Tuple[str, int, int]  # ('U'|'D', a, b)
Edge = FrozenSet[Tri]

UP = "U"
DOWN = "D"


def corners(tri: Tri) -> Tuple[Tuple[int, int], ...]:
    kind, a, b = tri
    if kind == UP:
        return ((a, b), (a + 1, b), (a + 1, b + 1))
    return ((a, b), (a + 1, b + 1), (a, b + 1))


def neighbors(tri: Tri) -> List[Tuple[Tri, int]]:
    """Adjacent triangles with the edge type joining them."""
    kind, a, b = tri
    if kind == UP:
        return [((DOWN, a, b), 1), ((DOWN, a, b - 1), 2), ((DOWN, a + 1, b), 3)]
    return [((UP, a, b), 1), ((UP, a, b + 1), 2), ((UP, a - 1, b), 3)]


def edge_type(e: Edge) -> int:
    t1, t2 = sorted(e)
    for nb, ty in neighbors(t1):
        if nb == t2:
            return ty
    raise ValueError(f"not an edge: {e}")


def strip_index(tri: Tri) -> int:
    """Diagonal strip containing the triangle (sector-1 frame)."""
    kind, a, b = tri
    return a - b if kind == UP else a - b - 1


def rho(tri: Tri) -> Tri:
    """120-degree lattice rotation induced by (x,y,z) -> (y,z,x)."""
    kind, a, b = tri
    if kind == UP:
        return (UP, b - a - 1, -a - 1)
    return (DOWN, b - a, -a - 1)


def rho_inv(tri: Tri) -> Tri:
    return rho(rho(tri))


def drawn_position(pt: Tuple[int, int]) -> Tuple[float, float]:
    a, b = pt
    return (a - b / 2.0, b * sqrt(3) / 2.0)


# -- the hexagonal window ----------------------------------------------------


def in_hexagon(tri: Tri, n: int) -> bool:
    return all(
        -n <= a <= n and -n <= b <= n and -n <= a - b <= n
        for a, b in corners(tri)
    )


def hexagon_triangles(n: int) -> FrozenSet[Tri]:
    tris: Set[Tri] = set()
    for a in range(-n, n):
        for b in range(-n, n):
            for kind in (UP, DOWN):
                t = (kind, a, b)
                if in_hexagon(t, n):
                    tris.add(t)
    out = frozenset(tris)
    assert len(out) == 6 * n * n
    return out


def boundary_cycle(n: int) -> List[Tri]:
    """Boundary slots of the window in counterclockwise order.

    Starts at the corner (-n,-n) and walks bottom, lower-right, right, top,
    upper-left, left.
    """
    out: List[Tri] = []
    out += [(UP, a, -n) for a in range(-n, 0)]           # bottom
    out += [(DOWN, b + n, b) for b in range(-n, 0)]      # lower-right
    out += [(UP, n - 1, b) for b in range(0, n)]         # right
    out += [(DOWN, a, n - 1) for a in range(n - 1, -1, -1)]  # top
    out += [(UP, a, a + n) for a in range(-1, -n - 1, -1)]   # upper-left
    out += [(DOWN, -n, b) for b in range(-1, -n - 1, -1)]    # left
    assert len(out) == 6 * n
    return out


def node_sector(tri: Tri, n: int) -> int:
    """Sector arc of a boundary slot: arcs around the three far corners.

    Sector 1 is the right+top arc (around (n,n)), sector 2 upper-left+left
    (around (-n,0)), sector 3 bottom+lower-right (around (0,-n)).
    """
    kind, a, b = tri
    if (kind == UP and a == n - 1 and 0 <= b) or (kind == DOWN and b == n - 1):
        return 1
    if (kind == UP and a - b == -n) or (kind == DOWN and a == -n):
        return 2
    if (kind == UP and b == -n) or (kind == DOWN and a - b == n):
        return 3
    raise ValueError(f"{tri} is not a boundary slot of the side-{n} window")


def sector_strip(tri: Tri, sector: int) -> int:
    """Strip coordinate of a triangle in the given sector's rotated frame."""
    if sector == 1:
        return strip_index(tri)
    if sector == 2:
        return strip_index(rho(tri))
    if sector == 3:
        return strip_index(rho_inv(tri))
    raise ValueError("sector must be 1, 2 or 3")


# -- canonical tiling of a down-closed solid ---------------------------------


class Solid:
    """A down-closed subset of Z^3 given by a membership oracle.

    lo_bound: every box with all coordinates <= lo_bound lies inside.
    hi_bound: every box with all coordinates' minimum > hi_bound lies outside.
    """

    def __init__(self, member: Callable[[Tuple[int, int, int]], bool],
                 lo_bound: int, hi_bound: int):
        self.member = member
        self.lo_bound = lo_bound
        self.hi_bound = hi_bound

    def chain_top(self, a: int, b: int) -> int:
        """max x with (x, x+a, x+b) inside; the fiber leaves the solid once."""
        lo = self.lo_bound - max(0, a, b)
        hi = self.hi_bound - min(0, a, b) + 1
        assert self.member((lo, lo + a, lo + b)), "lo_bound violated"
        assert not self.member((hi, hi + a, hi + b)), "hi_bound violated"
        while hi - lo > 1:
            mid = (lo + hi) // 2
            if self.member((mid, mid + a, mid + b)):
                lo = mid
            else:
                hi = mid
        return lo

    def tile_of(self, tri: Tri) -> Tuple[Tri, int]:
        """Partner triangle and tile type of the tile covering `tri`."""
        kind, a, b = tri
        m = self.chain_top(a, b)
        if kind == UP:
            if not self.member((m, m + a + 1, m + b)):
                return (DOWN, a, b - 1), 2
            if not self.member((m, m + a + 1, m + b + 1)):
                return (DOWN, a + 1, b), 3
            return (DOWN, a, b), 1
        else:
            if not self.member((m, m + a, m + b + 1)):
                return (UP, a - 1, b), 3
            if not self.member((m, m + a + 1, m + b + 1)):
                return (UP, a, b + 1), 2
            return (UP, a, b), 1


def tile_window(solid: Solid, n: int) -> Dict[Tri, Tri]:
    """Tile partner for every window triangle; asserts global consistency."""
    window = hexagon_triangles(n)
    partner: Dict[Tri, Tri] = {}
    for tri in window:
        partner[tri] = solid.tile_of(tri)[0]
    for tri, p in partner.items():
        if p in partner:
            assert partner[p] == tri, f"inconsistent tiling at {tri} / {p}"
    return partner


def window_matching(partner: Dict[Tri, Tri], window: FrozenSet[Tri]) -> Tuple[Set[Edge], Set[Tri]]:
    """Split a window tiling into interior edges and boundary-crossing halves."""
    edges: Set[Edge] = set()
    crossing: Set[Tri] = set()
    for tri, p in partner.items():
        if p in window:
            edges.add(frozenset((tri, p)))
        else:
            crossing.add(tri)
    return edges, crossing
