"""Honeycomb windows, exact perfect-matching counts, boundary-label removal,
the box-stack/dimer correspondence, and the graphical condensation identity.
"""

from __future__ import annotations

from typing import Dict, FrozenSet, Iterable, List, Optional, Set, Tuple

from .dt import DtConfiguration, WindowOverflowError, enumerate_dt
from .partitions import Partition, maya
from .regions import Box, RegionClassifier
from .tilings import (
    DOWN,
    Edge,
    Solid,
    Tri,
    UP,
    boundary_cycle,
    corners,
    hexagon_triangles,
    neighbors,
    rho,
    rho_inv,
    tile_window,
    window_matching,
)


class LabelOutOfRangeError(Exception):
    """A bead/hole label exceeds the boundary extent of the window."""


class BadNodeConfigurationError(Exception):
    """The four condensation vertices violate the colour/cyclic-order rules."""


def dt_label_slot(sector: int, t2: int, n: int) -> Tri:
    """Boundary vertex carrying half-integer label t2/2 in the given sector.

    Positive labels sit on up-triangles, negative on down-triangles; labels
    increase counterclockwise within each sector.
    """
    if t2 % 2 == 0 or t2 == 0:
        raise ValueError("labels are odd integers (twice a half-integer)")
    if abs(t2) > 2 * n - 1:
        raise LabelOutOfRangeError(f"label {t2}/2 outside window of side {n}")
    if t2 > 0:
        tri = (UP, (t2 - 1) // 2 - n, -n)
    else:
        tri = (DOWN, -n, -(t2 + 1) // 2 - n)
    if sector == 1:
        return tri
    if sector == 2:
        return rho_inv(tri)
    if sector == 3:
        return rho(tri)
    raise ValueError("sector must be 1, 2 or 3")


class HoneycombGraph:
    """A vertex-subset of the side-n honeycomb window."""

    __slots__ = ("n", "vertices", "removed")

    def __init__(self, n: int, vertices: Iterable[Tri], removed: Iterable[Tri] = ()):
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "vertices", frozenset(vertices))
        object.__setattr__(self, "removed", frozenset(removed))

    def __setattr__(self, *a):  # pragma: no cover
        raise AttributeError("HoneycombGraph is immutable")

    def edges(self) -> List[Edge]:
        out = set()
        for v in self.vertices:
            for nb, _ in neighbors(v):
                if nb in self.vertices:
                    out.add(frozenset((v, nb)))
        return sorted(out, key=sorted)

    def adjacency(self) -> Dict[Tri, List[Tri]]:
        adj: Dict[Tri, List[Tri]] = {v: [] for v in self.vertices}
        for v in self.vertices:
            for nb, _ in neighbors(v):
                if nb in self.vertices:
                    adj[v].append(nb)
        for v in adj:
            adj[v].sort()
        return adj

    def without(self, cut: Iterable[Tri]) -> "HoneycombGraph":
        cut = frozenset(cut)
        missing = cut - self.vertices
        if missing:
            raise ValueError(f"vertices not present: {sorted(missing)}")
        return HoneycombGraph(self.n, self.vertices - cut, self.removed | cut)

    def colour_classes(self) -> Tuple[int, int]:
        ups = sum(1 for v in self.vertices if v[0] == UP)
        return ups, len(self.vertices) - ups

    def __eq__(self, other):
        if not isinstance(other, HoneycombGraph):
            return NotImplemented
        return self.n == other.n and self.vertices == other.vertices

    def __hash__(self):
        return hash((self.n, self.vertices))


def honeycomb(n: int) -> HoneycombGraph:
    if n < 1:
        raise ValueError("window side must be >= 1")
    return HoneycombGraph(n, hexagon_triangles(n))


def remove_boundary(g: HoneycombGraph, mu1: Partition, mu2: Partition, mu3: Partition) -> HoneycombGraph:
    """Delete the boundary vertices labelled by the bead/hole sets of each leg."""
    cut: Set[Tri] = set()
    for sector, mu in ((1, mu1), (2, mu2), (3, mu3)):
        m = maya(mu)
        for t2 in m.s_plus | m.s_minus:
            cut.add(dt_label_slot(sector, t2, g.n))
    return g.without(cut)


def honeycomb_for(mu1: Partition, mu2: Partition, mu3: Partition, n: int) -> HoneycombGraph:
    return remove_boundary(honeycomb(n), mu1, mu2, mu3)


# -- matching counting -------------------------------------------------------


def count_matchings(g: HoneycombGraph, weights: Optional[Dict[Edge, int]] = None):
    """Exact matching count; with `weights` (edge -> q exponent) returns a
    dict exponent -> count instead of an integer.

    Eliminates the first uncovered vertex in a column sweep, memoizing on the
    bitmask of remaining vertices; the reachable states form a narrow frontier.
    """
    ups, downs = g.colour_classes()
    weighted = weights is not None
    if ups != downs:
        return {} if weighted else 0
    order = sorted(g.vertices, key=lambda t: (t[1], t[2], t[0]))
    index = {v: i for i, v in enumerate(order)}
    nbrs: List[List[Tuple[int, int]]] = []
    for v in order:
        row = []
        for u, _ in neighbors(v):
            if u in index:
                w = weights.get(frozenset((v, u)), 0) if weighted else 0
                row.append((index[u], w))
        nbrs.append(row)
    full = (1 << len(order)) - 1
    memo: Dict[int, object] = {}

    def rec(mask: int):
        if mask == 0:
            return {0: 1} if weighted else 1
        got = memo.get(mask)
        if got is not None:
            return got
        i = (mask & -mask).bit_length() - 1
        total: object = {} if weighted else 0
        for j, w in nbrs[i]:
            if mask & (1 << j):
                sub = rec(mask & ~(1 << i) & ~(1 << j))
                if weighted:
                    for e, c in sub.items():
                        total[e + w] = total.get(e + w, 0) + c
                else:
                    total += sub
        memo[mask] = total
        return total

    res = rec(full)
    return dict(res) if weighted else res


def count_matchings_bruteforce(g: HoneycombGraph) -> int:
    """Plain expansion without memoization; independent cross-check oracle."""
    adj = g.adjacency()
    order = sorted(g.vertices)

    def rec(rem: Set[Tri]) -> int:
        if not rem:
            return 1
        v = None
        for cand in order:
            if cand in rem:
                v = cand
                break
        total = 0
        for u in adj[v]:
            if u in rem:
                rem2 = set(rem)
                rem2.discard(v)
                rem2.discard(u)
                total += rec(rem2)
        return total

    return rec(set(g.vertices))


def enumerate_matchings(g: HoneycombGraph) -> List[FrozenSet[Edge]]:
    adj = g.adjacency()
    order = sorted(g.vertices)
    out: List[FrozenSet[Edge]] = []

    def rec(rem: Set[Tri], acc: List[Edge]):
        if not rem:
            out.append(frozenset(acc))
            return
        v = None
        for cand in order:
            if cand in rem:
                v = cand
                break
        for u in adj[v]:
            if u in rem:
                rem2 = set(rem)
                rem2.discard(v)
                rem2.discard(u)
                acc.append(frozenset((v, u)))
                rec(rem2, acc)
                acc.pop()

    rec(set(g.vertices), [])
    return out


# -- Kuo graphical condensation ----------------------------------------------


def kuo_check(g: HoneycombGraph, a: Tri, b: Tri, c: Tri, d: Tri,
              weights: Optional[Dict[Edge, int]] = None) -> bool:
    """Z(G) Z(G-abcd) == Z(G-ab) Z(G-cd) + Z(G-ad) Z(G-bc), verified exactly.

    Requires a, c in one colour class, b, d in the other, and the four
    vertices in cyclic order on the outer face.
    """
    for v in (a, b, c, d):
        if v not in g.vertices:
            raise BadNodeConfigurationError(f"{v} not a vertex of the graph")
    if not (a[0] == c[0] and b[0] == d[0] and a[0] != b[0]):
        raise BadNodeConfigurationError("need a,c in one colour class and b,d in the other")
    cycle = boundary_cycle(g.n)
    for v in (a, b, c, d):
        if v not in cycle:
            raise BadNodeConfigurationError(f"{v} is not on the outer face")
    labels = [v for v in cycle if v in (a, b, c, d)]
    idx = labels.index(a)
    rotated = labels[idx:] + labels[:idx]
    if rotated not in ([a, b, c, d], [a, d, c, b]):
        raise BadNodeConfigurationError("a, b, c, d are not in cyclic order on the outer face")

    if weights is None:
        z = count_matchings
        mulv = lambda p, q: p * q
        addv = lambda p, q: p + q
    else:
        z = lambda gg: count_matchings(gg, weights={
            e: w for e, w in weights.items()
        })

        def mulv(p, q):
            out = {}
            for e1, c1 in p.items():
                for e2, c2 in q.items():
                    out[e1 + e2] = out.get(e1 + e2, 0) + c1 * c2
            return out

        def addv(p, q):
            out = dict(p)
            for e, cc in q.items():
                out[e] = out.get(e, 0) + cc
            return {e: cc for e, cc in out.items() if cc}

    lhs = mulv(z(g), z(g.without((a, b, c, d))))
    rhs = addv(
        mulv(z(g.without((a, b))), z(g.without((c, d)))),
        mulv(z(g.without((a, d))), z(g.without((b, c)))),
    )
    if weights is not None:
        lhs = {e: cc for e, cc in lhs.items() if cc}
    return lhs == rhs


def condensation_nodes(mu1: Partition, mu2: Partition, mu3: Partition, n: int) -> Tuple[Tri, Tri, Tri, Tri]:
    """The four boundary vertices whose removal turns H(n; mu^rc legs) into H(n; mu legs).

    a, b carry the extreme hole/bead labels of leg 1; c, d those of leg 2.
    """
    from .partitions import max_s_minus, min_s_plus

    a = dt_label_slot(1, max_s_minus(mu1), n)
    b = dt_label_slot(1, min_s_plus(mu1), n)
    c = dt_label_slot(2, max_s_minus(mu2), n)
    d = dt_label_slot(2, min_s_plus(mu2), n)
    return a, b, c, d


# -- box stacks <-> matchings --------------------------------------------------


def dt_solid(cfg: DtConfiguration, hi_bound: int) -> Solid:
    """The down-closed solid whose surface is the box-stack configuration:
    the complement of the octant union the configuration itself."""

    def member(box: Box) -> bool:
        if min(box) <= -1:
            return True
        return cfg.contains(box)

    return Solid(member, -1, hi_bound)


def dt_to_matching(cfg: DtConfiguration, n: int) -> Set[Edge]:
    """Window tiling of a configuration, as a matching of H(n; legs).

    A configuration fits the window exactly when its boundary-crossing tiles
    agree with the minimal configuration's, i.e. the boundary ring is frozen.
    """
    hi = max(cfg.classifier.scan_bound(), n) + 1
    if cfg.extras:
        hi = max(hi, max(max(b) for b in cfg.extras) + 1)
    partner = tile_window(dt_solid(cfg, hi), n)
    window = hexagon_triangles(n)
    edges, crossing = window_matching(partner, window)
    g = honeycomb_for(*cfg.classifier.mus, n)
    if crossing != g.removed:
        raise WindowOverflowError(
            f"configuration does not fit the side-{n} window")
    covered = set()
    for e in edges:
        covered |= e
    assert covered == set(g.vertices)
    return edges


def matching_to_dt(edges: Set[Edge], g: HoneycombGraph,
                   classifier: RegionClassifier) -> DtConfiguration:
    """Invert the correspondence by integrating the fiber-height field."""
    mus = classifier.mus
    n = g.n
    # tile type of each covered triangle
    ttype: Dict[Tri, int] = {}
    from .tilings import edge_type

    for e in edges:
        ty = edge_type(e)
        for tri in e:
            ttype[tri] = ty
    # removed slots carry the frozen boundary-crossing tiles of the minimal
    # configuration; include them so the height field stays connected
    minimal = dt_solid(DtConfiguration(frozenset(), classifier),
                       max(classifier.scan_bound(), n) + 1)
    for slot in g.removed:
        ttype[slot] = minimal.tile_of(slot)[1]
    # chain-top field m(a,b) on fiber bases; relations follow the chain steps
    mu1 = mus[0]
    c1 = 0
    while (c1, c1) in __cells_cache(mu1):
        c1 += 1
    anchor = (-n, -n)
    m: Dict[Tuple[int, int], int] = {anchor: n - 1 + c1}
    # relations from a triangle's tile type
    rel: Dict[Tuple[int, int], List[Tuple[Tuple[int, int], int]]] = {}

    def add_rel(src, dst, delta):
        rel.setdefault(src, []).append((dst, delta))
        rel.setdefault(dst, []).append((src, -delta))

    for tri, ty in ttype.items():
        kind, a, b = tri
        if kind == UP:
            d2 = -1 if ty == 2 else 0
            d3 = -1 if ty in (2, 3) else 0
            add_rel((a, b), (a + 1, b), d2)
            add_rel((a, b), (a + 1, b + 1), d3)
        else:
            d3 = -1 if ty == 3 else 0
            d2 = -1 if ty in (2, 3) else 0
            add_rel((a, b), (a, b + 1), d3)
            add_rel((a, b), (a + 1, b + 1), d2)
    stack = [anchor]
    while stack:
        p = stack.pop()
        for q, delta in rel.get(p, []):
            val = m[p] + delta
            if q in m:
                assert m[q] == val, "inconsistent height field"
            else:
                m[q] = val
                stack.append(q)
    extras = set()
    for (a, b), top in m.items():
        x0 = max(0, -a, -b)
        for x in range(x0, top + 1):
            box = (x, x + a, x + b)
            if not classifier.in_base(box):
                extras.add(box)
    return DtConfiguration(extras, classifier)


def __cells_cache(mu: Partition):
    from .partitions import cells

    return cells(mu)


def base_heights(mu1: Partition, mu2: Partition, mu3: Partition, n: int) -> List[List[int]]:
    """Column heights of the minimal configuration inside the n-cube."""
    from .partitions import in_cells

    def conj(mu: Partition, j: int) -> int:
        return sum(1 for p in mu.parts if p > j)

    h = [[0] * n for _ in range(n)]
    for y in range(n):
        for z in range(n):
            if in_cells(mu1, y, z):
                h[y][z] = n
            else:
                leg2 = conj(mu2, z)                                # x-run of leg 2
                leg3 = mu3.parts[y] if y < len(mu3.parts) else 0   # x-run of leg 3
                h[y][z] = max(leg2, leg3)
    return h


def cube_truncated_count(mu1: Partition, mu2: Partition, mu3: Partition, n: int) -> int:
    """Number of configurations whose extras fit inside the n-cube.

    Independent of both the layered search and the matching counter: counts
    height functions h : [0,n)^2 -> [0,n], weakly decreasing in both axes and
    bounded below by the minimal configuration's columns.  Equals the number
    of window-fitting configurations whenever the window leaves slack around
    the legs (witnessed by the round-trip tests); tall legs admit frozen-ring
    configurations with boxes beyond the cube.
    """
    cl = RegionClassifier(mu1, mu2, mu3)
    if n < cl.scan_bound():
        raise LabelOutOfRangeError("window too small for the leg data")
    base = base_heights(mu1, mu2, mu3, n)

    def rows_between(prev: Optional[Tuple[int, ...]], y: int) -> List[Tuple[int, ...]]:
        out: List[Tuple[int, ...]] = []

        def rec(z: int, acc: List[int]):
            if z == n:
                out.append(tuple(acc))
                return
            lo = max(base[y][z], prev[z] if prev is not None else 0)
            hi = acc[-1] if acc else n
            for v in range(lo, hi + 1):
                acc.append(v)
                rec(z + 1, acc)
                acc.pop()

        rec(0, [])
        return out

    counts: Dict[Tuple[int, ...], int] = {}
    for row in rows_between(None, n - 1):
        counts[row] = counts.get(row, 0) + 1
    for y in range(n - 2, -1, -1):
        nxt: Dict[Tuple[int, ...], int] = {}
        for prev, cnt in counts.items():
            for row in rows_between(prev, y):
                nxt[row] = nxt.get(row, 0) + cnt
        counts = nxt
        if not counts:
            return 0
    return sum(counts.values())


def window_bijection_report(mu1: Partition, mu2: Partition, mu3: Partition, n: int) -> Dict[int, int]:
    """Enumerate all matchings of the labelled window, pull each back to a box
    configuration, and verify the correspondence is a bijection.

    Returns the histogram of configurations by number of extra boxes.  This is
    the defining test of the boundary-labelling convention.
    """
    cl = RegionClassifier(mu1, mu2, mu3)
    g = honeycomb_for(mu1, mu2, mu3, n)
    seen = set()
    hist: Dict[int, int] = {}
    for m in enumerate_matchings(g):
        cfg = matching_to_dt(set(m), g, cl)
        assert cfg.is_order_ideal()
        assert cfg.extras not in seen, "correspondence not injective"
        seen.add(cfg.extras)
        assert dt_to_matching(cfg, n) == set(m), "correspondence does not invert"
        k = len(cfg.extras)
        hist[k] = hist.get(k, 0) + 1
    return hist


def graph_json(g: HoneycombGraph) -> dict:
    from .tilings import corners as tri_corners, drawn_position

    verts = []
    for v in sorted(g.vertices):
        pts = [drawn_position(p) for p in tri_corners(v)]
        cx = sum(p[0] for p in pts) / 3
        cy = sum(p[1] for p in pts) / 3
        verts.append({"id": list(v), "class": v[0], "pos": [round(cx, 4), round(cy, 4)]})
    return {
        "n": g.n,
        "vertices": verts,
        "edges": [[list(min(e)), list(max(e))] for e in g.edges()],
        "removed": [list(v) for v in sorted(g.removed)],
    }
