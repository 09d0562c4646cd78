"""Superpositions of the two sheet tilings attached to an AB configuration.

Each configuration yields two plane tilings: the first-sheet surface carries
the negative legs and the triple-overlap boxes minus A, the second carries
the doubly-covered region minus B (completed by punctured leg walls so the
two sheets agree far from the origin).  Superimposing the two matchings on a
window gives loops, doubled edges, and node-to-node paths; nodes sit on the
three boundary arcs around the corners where the negative legs exit, and the
difference profile of the two sheets pins their positions and colours.
"""

from __future__ import annotations

from typing import Dict, FrozenSet, List, Optional, Sequence, Set, Tuple

from .dimer import HoneycombGraph
from .partitions import Partition
from .pt import AbConfiguration, label_ab
from .regions import Box, RegionClassifier, in_octant
from .tilings import (
    DOWN,
    Edge,
    Tri,
    UP,
    boundary_cycle,
    corners,
    hexagon_triangles,
    neighbors,
    node_sector,
    sector_strip,
)

RED, GREEN, BLUE = "R", "G", "B"

# colour of a node by (sector, sheet flavour); flavour "ab" means the first
# sheet shows a bead on the node's strip where the second shows a hole.
_COLOUR = {
    (1, "ab"): BLUE, (1, "ah"): RED,
    (2, "ab"): RED, (2, "ah"): GREEN,
    (3, "ab"): GREEN, (3, "ah"): BLUE,
}


class WindowTooSmallError(Exception):
    """The window boundary is not frozen for this configuration."""


class NonTripartiteError(Exception):
    """A node colouring admits no (or no unique) planar pairing avoiding likes."""


# -- the two sheet tilings -------------------------------------------------------
#
# Each remaining box of a sheet's region contributes the diagonal lozenge on
# its projection fiber; the rest of each diagonal strip is a path graph cut at
# the covered vertices, and a cut path has a unique perfect matching.  Strips
# never cut by a tile take their phase from the nearest (virtual) leg tile, so
# both sheets share one background at infinity.


def _region_a(cl: RegionClassifier, b: Box) -> bool:
    return cl.in_i_minus_or_iii(b)


def _region_b(cl: RegionClassifier, b: Box) -> bool:
    return cl.in_region_ii_or_iii(b)


def _fiber(b: Box) -> Tuple[int, int]:
    # position of the box's visible diagonal face (one step down the diagonal)
    return (b[1] - b[0] - 1, b[2] - b[0] - 1)


def sheet_tiles(side: str, cfg: AbConfiguration, reach: int) -> Dict[Tuple[int, int], Box]:
    """Diagonal tile positions of a sheet's boxes within reach.

    Both sheets carry the full cylinder background; the first omits the
    doubly-covered region (and A), the second omits the negative legs (and B).
    Raises WindowTooSmallError when two boxes share a fiber (stacked regions
    have no one-tile-per-box realization).
    """
    cl = cfg.classifier
    from .partitions import cells

    if side == "A":
        removed = cfg.a_boxes
        keep = lambda b: not cl.in_region_ii_or_iii(b) or len(cl.cylinders(b)) == 3
    elif side == "B":
        removed = cfg.b_boxes
        keep = lambda b: in_octant(b)
    else:
        raise ValueError("side must be 'A' or 'B'")
    boxes: Set[Box] = set()
    d_hi = 2 * reach + 2
    for i, mu in enumerate(cl.mus, start=1):
        for (u, v) in cells(mu):
            for d in range(-d_hi, d_hi + 1):
                if i == 1:
                    boxes.add((d, u, v))
                elif i == 2:
                    boxes.add((v, d, u))
                else:
                    boxes.add((u, v, d))
    out: Dict[Tuple[int, int], Box] = {}
    for b in sorted(boxes):
        if b in removed or not keep(b):
            continue
        f = _fiber(b)
        if max(abs(f[0]), abs(f[1])) > 2 * reach + 4:
            continue
        # boxes stacked along the projection direction share one tile
        out[f] = b
    return out


def _vacuum_partner(tri: Tri) -> Tri:
    """Room-corner background: tile orientation by the 120-degree wedge."""
    kind, a, b = tri
    if a >= 0 and b >= 0:
        ori = 1
    elif b <= a and b <= 0:
        ori = 3
    else:
        ori = 2
    if kind == UP:
        return {1: (DOWN, a, b), 2: (DOWN, a, b - 1), 3: (DOWN, a + 1, b)}[ori]
    return {1: (UP, a, b), 2: (UP, a, b + 1), 3: (UP, a - 1, b)}[ori]


def sheet_matching(side: str, cfg: AbConfiguration, n: int) -> Tuple[Set[Edge], Set[Tri]]:
    """Window edges and boundary-crossing halves of one sheet tiling.

    Seeds the diagonal tiles of the sheet's boxes, then alternates forced
    moves (a triangle with a unique free neighbour) with room-corner vacuum
    fills applied far from the origin first, so the interior is pinned by the
    boxes and the legs rather than by the fallback.
    """
    from collections import deque

    cl = cfg.classifier
    window = hexagon_triangles(n)
    P = 2 * n + 2 * cl.scan_bound() + 8
    tiles = sheet_tiles(side, cfg, n + cl.scan_bound() + 2)

    def in_pad(t: Tri) -> bool:
        return -P <= t[1] <= P and -P <= t[2] <= P

    matched: Dict[Tri, Tri] = {}
    queue = deque()

    def bind(t: Tri, u: Tri):
        matched[t] = u
        matched[u] = t
        for w in (t, u):
            for nb, _ in neighbors(w):
                if in_pad(nb) and nb not in matched:
                    queue.append(nb)

    for (a, b) in sorted(tiles):
        bind((UP, a, b), (DOWN, a, b))

    def propagate():
        while queue:
            t = queue.popleft()
            if t in matched:
                continue
            fn = [nb for nb, _ in neighbors(t) if in_pad(nb) and nb not in matched]
            if len(fn) == 1:
                bind(t, fn[0])

    propagate()
    margin = P - 2
    order = sorted(
        ((k, a, b) for a in range(-margin, margin + 1)
         for b in range(-margin, margin + 1) for k in (UP, DOWN)),
        key=lambda t: (-(abs(t[1]) + abs(t[2]) + abs(t[1] - t[2])), t),
    )
    for t in order:
        if t in matched:
            continue
        u = _vacuum_partner(t)
        if not in_pad(u) or u in matched:
            continue
        bind(t, u)
        propagate()
    inside: Set[Edge] = set()
    crossing: Set[Tri] = set()
    for t in window:
        u = matched.get(t)
        assert u is not None, f"window triangle {t} left unmatched"
        if u in window:
            inside.add(frozenset((t, u)))
        else:
            crossing.add(t)
    return inside, crossing


def surface_matching(side: str, cfg: AbConfiguration, n: int,
                     check_frozen: bool = True) -> Tuple[Set[Edge], Set[Tri]]:
    """Window matching of one sheet: interior edges plus boundary-crossing halves.

    Raises WindowTooSmallError when the boundary crossings differ from those
    of the empty configuration (the boundary ring must be frozen).
    """
    inside, crossing = sheet_matching(side, cfg, n)
    if check_frozen and (cfg.a_boxes or cfg.b_boxes):
        empty = AbConfiguration(frozenset(), frozenset(), cfg.classifier)
        _, ref_cross = sheet_matching(side, empty, n)
        if crossing != ref_cross:
            raise WindowTooSmallError(
                f"boundary ring not frozen for side {side} at window {n}")
    return inside, crossing


# -- superposition -------------------------------------------------------------


class DoubleDimerConfig:
    """Loops, doubled edges, and node-terminated paths of two sheet matchings."""

    def __init__(self, n: int, edges_a: Set[Edge], edges_b: Set[Edge]):
        self.n = n
        self.edges_a = frozenset(edges_a)
        self.edges_b = frozenset(edges_b)
        self.doubled = self.edges_a & self.edges_b
        diff = (self.edges_a | self.edges_b) - self.doubled
        cover_a: Dict[Tri, int] = {}
        for e in self.edges_a:
            for t in e:
                cover_a[t] = cover_a.get(t, 0) + 1
        cover_b: Dict[Tri, int] = {}
        for e in self.edges_b:
            for t in e:
                cover_b[t] = cover_b.get(t, 0) + 1
        window = hexagon_triangles(n)
        self.nodes: Dict[Tri, str] = {}
        self.removed: Set[Tri] = set()
        for t in window:
            ca, cb = cover_a.get(t, 0), cover_b.get(t, 0)
            assert ca <= 1 and cb <= 1
            if ca + cb == 0:
                self.removed.add(t)
            elif ca + cb == 1:
                self.nodes[t] = "A" if ca else "B"
        adj: Dict[Tri, List[Edge]] = {}
        for e in diff:
            for t in e:
                adj.setdefault(t, []).append(e)
        for t, es in adj.items():
            assert len(es) <= 2
        self.paths: List[List[Tri]] = []
        self.loops: List[List[Tri]] = []
        seen: Set[Edge] = set()
        for start in sorted(self.nodes):
            if start not in adj:
                continue
            for e0 in adj[start]:
                if e0 in seen:
                    continue
                walk = [start]
                cur, e = start, e0
                while True:
                    seen.add(e)
                    nxt = next(t for t in e if t != cur)
                    walk.append(nxt)
                    cur = nxt
                    cont = [x for x in adj.get(cur, []) if x not in seen]
                    if not cont:
                        break
                    e = cont[0]
                self.paths.append(walk)
        for e0 in sorted(diff, key=sorted):
            if e0 in seen:
                continue
            start = min(e0)
            walk = [start]
            cur, e = start, e0
            while True:
                seen.add(e)
                nxt = next(t for t in e if t != cur)
                walk.append(nxt)
                cur = nxt
                cont = [x for x in adj.get(cur, []) if x not in seen]
                if not cont:
                    break
                e = cont[0]
            assert walk[0] == walk[-1], "stranded open walk without node ends"
            self.loops.append(walk[:-1])
        # every path must join two nodes
        for walk in self.paths:
            assert walk[0] in self.nodes and walk[-1] in self.nodes

    def pairing(self) -> FrozenSet[FrozenSet[Tri]]:
        return frozenset(frozenset((w[0], w[-1])) for w in self.paths)


def superpose(edges_a: Set[Edge], edges_b: Set[Edge], n: int) -> DoubleDimerConfig:
    return DoubleDimerConfig(n, edges_a, edges_b)


def superpose_config(cfg: AbConfiguration, n: int) -> DoubleDimerConfig:
    ea, _ = surface_matching("A", cfg, n)
    eb, _ = surface_matching("B", cfg, n)
    return superpose(ea, eb, n)


# -- relative height -----------------------------------------------------------


def _dual_edge(p: Tuple[int, int], q: Tuple[int, int]) -> Edge:
    (a, b), (c, d) = p, q
    da, db = c - a, d - b
    if (da, db) == (1, 0):
        return frozenset(((UP, a, b), (DOWN, a, b - 1)))
    if (da, db) == (0, 1):
        return frozenset(((UP, a - 1, b), (DOWN, a, b)))
    if (da, db) == (1, 1):
        return frozenset(((UP, a, b), (DOWN, a, b)))
    if (da, db) in ((-1, 0), (0, -1), (-1, -1)):
        return _dual_edge(q, p)
    raise ValueError("not a lattice edge")


def relative_height(dd: DoubleDimerConfig) -> Dict[Tuple[int, int], int]:
    """Face heights: change +-1 across single-sheet edges, 0 across the rest.

    The value at a face is the second sheet's fiber height minus the first's,
    so the steps follow the chain relations of the two tilings directly.
    """
    n = dd.n
    window = hexagon_triangles(n)

    def interior(a: int, b: int) -> bool:
        ring = ((UP, a, b), (DOWN, a, b), (UP, a - 1, b), (DOWN, a, b - 1),
                (UP, a - 1, b - 1), (DOWN, a - 1, b - 1))
        return all(t in window for t in ring)

    faces = [
        (a, b)
        for a in range(-n, n + 1)
        for b in range(-n, n + 1)
        if abs(a - b) <= n and interior(a, b)
    ]
    face_set = set(faces)
    h: Dict[Tuple[int, int], int] = {}

    def step(p, q) -> int:
        e = _dual_edge(p, q)
        sa = e in dd.edges_a and e not in dd.doubled
        sb = e in dd.edges_b and e not in dd.doubled
        if not (sa or sb):
            return 0
        d = (q[0] - p[0], q[1] - p[1])
        if d in ((1, 0), (0, 1)):
            sign = 1
        elif d == (1, 1):
            sign = -1
        else:
            return -step(q, p)
        return sign * ((1 if sa else 0) - (1 if sb else 0))

    start = min(faces)
    h[start] = 0
    stack = [start]
    while stack:
        p = stack.pop()
        a, b = p
        for q in ((a + 1, b), (a - 1, b), (a, b + 1), (a, b - 1),
                  (a + 1, b + 1), (a - 1, b - 1)):
            if q not in face_set:
                continue
            val = h[p] + step(p, q)
            if q in h:
                assert h[q] == val, "height field inconsistent"
            else:
                h[q] = val
                stack.append(q)
    return h


# -- labelling of double-dimer configurations -----------------------------------


class DdLabelResult:
    __slots__ = ("success", "path_labels", "free_loops")

    def __init__(self, success, path_labels, free_loops):
        self.success = success
        self.path_labels = tuple(path_labels)
        self.free_loops = tuple(free_loops)


def _loop_polygon(loop: List[Tri]) -> List[Tuple[int, int]]:
    pts = []
    for t in loop:
        cs = corners(t)
        # centres scaled by 6 stay integral: 2 * sum of drawn 3-corner coords
        sx = sum(2 * a - b for a, b in cs)
        sy = sum(b for a, b in cs)
        pts.append((sx, sy))
    return pts


def _point_in_polygon(pt: Tuple[int, int], poly: List[Tuple[int, int]]) -> bool:
    x, y = pt
    inside = False
    m = len(poly)
    for i in range(m):
        x1, y1 = poly[i]
        x2, y2 = poly[(i + 1) % m]
        if (y1 > y) != (y2 > y):
            # exact rational comparison of the crossing abscissa
            t_num = (x2 - x1) * (y - y1)
            if y2 > y1:
                cond = t_num > (x - x1) * (y2 - y1)
            else:
                cond = t_num < (x - x1) * (y2 - y1)
            if cond:
                inside = not inside
    return inside


def _tri_centre6(t: Tri) -> Tuple[int, int]:
    cs = corners(t)
    return (sum(2 * a - b for a, b in cs), sum(b for a, b in cs))


def label_dd(dd: DoubleDimerConfig) -> DdLabelResult:
    """Fail when a path joins different sectors; otherwise label paths by their
    sector and outermost loops as free."""
    n = dd.n
    path_labels = []
    for walk in dd.paths:
        s0 = node_sector(walk[0], n)
        s1 = node_sector(walk[-1], n)
        if s0 != s1:
            return DdLabelResult(False, [], [])
        path_labels.append((tuple(walk), s0))
    polys = [_loop_polygon(lp) for lp in dd.loops]
    free = []
    for i, lp in enumerate(dd.loops):
        probe = _tri_centre6(lp[0])
        enclosed = any(
            j != i and _point_in_polygon(probe, poly)
            for j, poly in enumerate(polys)
        )
        if not enclosed:
            free.append(tuple(lp))
    return DdLabelResult(True, path_labels, free)


def theorem45_check(cfg: AbConfiguration, n: int) -> bool:
    """Outcome agreement between the box labelling and the path labelling."""
    box_side = label_ab(cfg).success
    dd = superpose_config(cfg, n)
    path_side = label_dd(dd).success
    return box_side == path_side


# -- nodes from the sheet difference profiles -----------------------------------


class NodeInfo:
    __slots__ = ("tri", "sector", "strip", "flavour", "colour")

    def __init__(self, tri, sector, strip, flavour, colour):
        self.tri = tri
        self.sector = sector
        self.strip = strip
        self.flavour = flavour
        self.colour = colour

    def __repr__(self):
        return (f"NodeInfo({self.tri}, sector={self.sector}, strip={self.strip}, "
                f"flavour={self.flavour}, colour={self.colour})")


def node_strips(cl: RegionClassifier, sector: int) -> Dict[int, str]:
    """Node strips of a sector with flavours: beads above zero sit at strip
    t - 1/2 >= 0, holes below zero at t - 1/2 <= -1."""
    from .partitions import maya

    m = maya(cl.mus[sector - 1])
    out: Dict[int, str] = {}
    for t2 in m.s_plus:
        out[(t2 - 1) // 2] = "ab"
    for t2 in m.s_minus:
        out[(t2 - 1) // 2] = "ah"
    return out


def node_slot(sector: int, s: int, n: int) -> Tri:
    """Boundary slot of the node at strip s on the given sector's arc."""
    from .dimer import LabelOutOfRangeError

    if not (-n <= s <= n - 1):
        raise LabelOutOfRangeError(f"node strip {s} outside window of side {n}")
    if s >= 0:
        tri = (UP, n - 1, n - 1 - s)
    else:
        tri = (DOWN, n + s, n - 1)
    if sector == 1:
        return tri
    from .tilings import rho, rho_inv

    if sector == 2:
        return rho_inv(tri)
    if sector == 3:
        return rho(tri)
    raise ValueError("sector must be 1, 2 or 3")


def nodes_from_maya(mu1: Partition, mu2: Partition, mu3: Partition, n: int) -> List[NodeInfo]:
    """Boundary nodes determined by the bead/hole sets of the three legs."""
    cl = RegionClassifier(mu1, mu2, mu3)
    out: List[NodeInfo] = []
    for sector in (1, 2, 3):
        for s, flavour in sorted(node_strips(cl, sector).items()):
            tri = node_slot(sector, s, n)
            assert node_sector(tri, n) == sector
            assert sector_strip(tri, sector) == s
            out.append(NodeInfo(tri, sector, s, flavour, _COLOUR[(sector, flavour)]))
    return out


def ordered_nodes_ccw(nodes: Sequence[NodeInfo], n: int) -> List[NodeInfo]:
    cycle = boundary_cycle(n)
    pos = {t: i for i, t in enumerate(cycle)}
    return sorted(nodes, key=lambda nd: pos[nd.tri])


# -- planar pairings ------------------------------------------------------------


def _noncrossing_pairings(colours: Sequence[str]) -> List[FrozenSet[Tuple[int, int]]]:
    m = len(colours)
    if m % 2:
        return []

    memo: Dict[Tuple[int, ...], List[FrozenSet[Tuple[int, int]]]] = {}

    def rec(idx: Tuple[int, ...]) -> List[FrozenSet[Tuple[int, int]]]:
        if not idx:
            return [frozenset()]
        if idx in memo:
            return memo[idx]
        out = []
        i = idx[0]
        for jpos in range(1, len(idx), 2):
            j = idx[jpos]
            if colours[i] == colours[j]:
                continue
            left = idx[1:jpos]
            right = idx[jpos + 1:]
            for pl in rec(left):
                for pr in rec(right):
                    out.append(pl | pr | {(i, j)})
        memo[idx] = out
        return out

    return rec(tuple(range(m)))


def tripartite_pairing(nodes: Sequence[NodeInfo], n: int) -> FrozenSet[FrozenSet[Tri]]:
    """The unique planar pairing never joining like colours; NonTripartite otherwise."""
    ordered = ordered_nodes_ccw(nodes, n)
    pairings = _noncrossing_pairings([nd.colour for nd in ordered])
    if len(pairings) != 1:
        raise NonTripartiteError(
            f"{len(pairings)} colour-avoiding planar pairings (need exactly 1)")
    return frozenset(
        frozenset((ordered[i].tri, ordered[j].tri)) for i, j in next(iter(pairings))
    )


# -- double-dimer partition sums -------------------------------------------------


def zdd_by_pairing(g: HoneycombGraph, nodes: Sequence[Tri],
                   weights: Optional[Dict[Edge, int]] = None) -> Dict[FrozenSet[FrozenSet[Tri]], Dict[int, int]]:
    """Weighted 2^{loops} sums of double-dimer configurations, by node pairing.

    Values are dicts {q-exponent: count}; with no weights everything sits at
    exponent 0.  Every internal vertex must end with degree 2 and every node
    with degree 1; single edges chain into paths and loops, doubled edges are
    inert.
    """
    node_set = set(nodes)
    verts = sorted(g.vertices)
    cap = {v: 1 if v in node_set else 2 for v in verts}
    edges = g.edges()
    if any(len(g.adjacency()[v]) == 0 and cap[v] > 0 for v in verts):
        return {}
    last_edge: Dict[Tri, int] = {}
    for i, e in enumerate(edges):
        for t in e:
            last_edge[t] = i
    used = dict(cap)  # remaining capacity
    ends: Dict[Tri, Tri] = {}  # endpoint of a partial path -> its other end
    out: Dict[FrozenSet[FrozenSet[Tri]], Dict[int, int]] = {}

    def record(loops: int, wexp: int):
        pairing = frozenset(frozenset((v, ends[v])) for v in node_set)
        bucket = out.setdefault(pairing, {})
        bucket[wexp] = bucket.get(wexp, 0) + (1 << loops)

    def rec(i: int, loops: int, wexp: int):
        if i == len(edges):
            record(loops, wexp)
            return
        e = edges[i]
        u, v = sorted(e)
        w = weights.get(e, 0) if weights else 0
        for mult in range(0, 3):
            if mult > used[u] or mult > used[v]:
                break
            journal = []

            def set_end(key, val):
                journal.append((key, ends.get(key, _MISSING)))
                if val is _MISSING:
                    ends.pop(key, None)
                else:
                    ends[key] = val

            used[u] -= mult
            used[v] -= mult
            newloops = loops
            if mult == 1:
                eu = ends.get(u, u)
                ev = ends.get(v, v)
                if eu == v:
                    newloops += 1
                    set_end(u, _MISSING)
                    set_end(v, _MISSING)
                else:
                    if u != eu:
                        set_end(u, _MISSING)
                    if v != ev:
                        set_end(v, _MISSING)
                    set_end(eu, ev)
                    set_end(ev, eu)
            if all(used[t] == 0 or last_edge[t] > i for t in (u, v)):
                rec(i + 1, newloops, wexp + mult * w)
            for key, old in reversed(journal):
                if old is _MISSING:
                    ends.pop(key, None)
                else:
                    ends[key] = old
            used[u] += mult
            used[v] += mult

    rec(0, 0, 0)
    return out


_MISSING = object()


def zdd(g: HoneycombGraph, nodes: Sequence[Tri],
        sigma: FrozenSet[FrozenSet[Tri]],
        weights: Optional[Dict[Edge, int]] = None):
    table = zdd_by_pairing(g, nodes, weights)
    bucket = table.get(sigma, {})
    if weights is None:
        return bucket.get(0, 0)
    return dict(bucket)


def zdd_total(g: HoneycombGraph, nodes: Sequence[Tri]) -> int:
    table = zdd_by_pairing(g, nodes)
    return sum(c for bucket in table.values() for c in bucket.values())


def ordered_pair_total(g: HoneycombGraph, nodes: Sequence[Tri]) -> int:
    """Independent oracle: matchings of G times matchings of G minus all nodes."""
    from .dimer import count_matchings

    return count_matchings(g) * count_matchings(g.without(nodes))


# -- condensation on the double-dimer side ---------------------------------------


def dd_graph(mu1: Partition, mu2: Partition, mu3: Partition, n: int) -> Tuple[HoneycombGraph, List[NodeInfo]]:
    """Full window graph together with the Maya-determined boundary nodes."""
    from .dimer import honeycomb

    return honeycomb(n), nodes_from_maya(mu1, mu2, mu3, n)


def dd_condensation_check(mu1: Partition, mu2: Partition, mu3: Partition, n: int) -> bool:
    """Six-term double-dimer identity with nodes added on legs 1 and 2.

    The four added nodes are the ones that disappear when both legs take the
    bead-and-hole move; all six pairings are the unique tripartite ones.
    """
    from .partitions import max_s_minus, min_s_plus

    g, nodes = dd_graph(mu1, mu2, mu3, n)

    def vanish(sector: int, mu: Partition) -> List[NodeInfo]:
        # the bead/hole pair consumed by the rc move on this leg
        gone = {(min_s_plus(mu) - 1) // 2, (max_s_minus(mu) - 1) // 2}
        got = [nd for nd in nodes if nd.sector == sector and nd.strip in gone]
        assert len(got) == 2, f"expected 2 vanishing nodes in sector {sector}, got {got}"
        return got

    s1 = vanish(1, mu1)
    s2 = vanish(2, mu2)
    a, b = s1
    c, d = s2
    full = list(nodes)

    def z(sub: List[NodeInfo]) -> int:
        sigma = tripartite_pairing(sub, n)
        return zdd(g, [nd.tri for nd in sub], sigma)

    drop = lambda omit: [nd for nd in full if nd not in omit]
    lhs = z(full) * z(drop([a, b, c, d]))
    rhs = (z(drop([a, b])) * z(drop([c, d]))
           + z(drop([a, d])) * z(drop([b, c])))
    rhs_alt = (z(drop([a, b])) * z(drop([c, d]))
               + z(drop([a, c])) * z(drop([b, d])))
    return lhs == rhs or lhs == rhs_alt
