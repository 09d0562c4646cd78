import pytest

from vertexlab.dimer import count_matchings, honeycomb
from vertexlab.double_dimer import (
    DoubleDimerConfig,
    NonTripartiteError,
    WindowTooSmallError,
    dd_condensation_check,
    dd_graph,
    label_dd,
    node_strips,
    nodes_from_maya,
    ordered_nodes_ccw,
    ordered_pair_total,
    relative_height,
    superpose,
    superpose_config,
    surface_matching,
    theorem45_check,
    tripartite_pairing,
    zdd,
    zdd_by_pairing,
    zdd_total,
)
from vertexlab.partitions import Partition, parse_partition
from vertexlab.pt import AbConfiguration, label_ab, _closed_subsets, _a_candidates
from vertexlab.regions import RegionClassifier
from vertexlab.tilings import hexagon_triangles


def cl(*texts):
    return RegionClassifier(*(parse_partition(t) for t in texts))


def cfg_of(c, a_boxes=(), b_boxes=()):
    return AbConfiguration(frozenset(a_boxes), frozenset(b_boxes), c)


def all_ab_configs(c, n_max):
    """Every stacking-closed pair with |A| + |B| <= n_max (labelled or not)."""
    a_sets = _closed_subsets(_a_candidates(c, n_max), lambda b: c.in_i_minus_or_iii(b), n_max)
    ii, iii = c.region_sets()
    b_sets = _closed_subsets(sorted(ii | iii), lambda b: c.in_region_ii_or_iii(b), n_max)
    out = []
    for ka, als in a_sets.items():
        for kb, bls in b_sets.items():
            if ka + kb > n_max:
                continue
            for A in als:
                for B in bls:
                    out.append(cfg_of(c, A, B))
    return out


# -- sheet surfaces -------------------------------------------------------------


def test_trivial_sheets_coincide():
    c = cl("-", "-", "-")
    cfg = cfg_of(c)
    ea, _ = surface_matching("A", cfg, 3)
    eb, _ = surface_matching("B", cfg, 3)
    assert ea == eb
    dd = superpose(ea, eb, 3)
    assert not dd.paths and not dd.loops and not dd.nodes
    assert len(dd.doubled) * 2 == len(hexagon_triangles(3))


def test_sheet_a_depends_only_on_a():
    c = cl("1", "2", "1")
    cfg1 = cfg_of(c, (), ((0, 0, 0), (0, 0, 1)))
    cfg2 = cfg_of(c, (), ())
    ea1, _ = surface_matching("A", cfg1, 5)
    ea2, _ = surface_matching("A", cfg2, 5)
    assert ea1 == ea2


def test_superpose_same_matching_is_all_doubled():
    c = cl("1", "1", "1")
    cfg = cfg_of(c)
    ea, _ = surface_matching("A", cfg, 4)
    dd = superpose(ea, ea, 4)
    assert not dd.paths and not dd.loops
    assert dd.doubled == frozenset(ea)


def test_hexagon_superposition_single_loop():
    g = honeycomb(1)
    tris = sorted(g.vertices)
    from vertexlab.dimer import enumerate_matchings

    m1, m2 = enumerate_matchings(g)
    dd = DoubleDimerConfig(1, set(m1), set(m2))
    assert len(dd.loops) == 1
    assert len(dd.loops[0]) == 6


def test_window_too_small_raises():
    c = cl("1", "2", "1")
    deep = cfg_of(c, tuple((0, 0, -j) for j in range(-0, 4)), ())
    with pytest.raises(WindowTooSmallError):
        surface_matching("A", deep, 3)
    surface_matching("A", deep, 4)  # a larger window freezes the ring again


# -- nodes ----------------------------------------------------------------------


def test_no_nodes_for_empty_triple():
    assert nodes_from_maya(Partition(), Partition(), Partition(), 3) == []


def test_two_nodes_single_leg():
    nodes = nodes_from_maya(parse_partition("1"), Partition(), Partition(), 4)
    assert len(nodes) == 2
    assert all(nd.sector == 1 for nd in nodes)
    assert sorted(nd.strip for nd in nodes) == [-1, 0]
    assert {nd.colour for nd in nodes} == {"R", "B"}


def test_node_counts_match_bead_hole_counts():
    from vertexlab.partitions import maya

    for texts in (("1", "1", "1"), ("1", "2", "1"), ("2,1", "1", "1")):
        mus = tuple(parse_partition(t) for t in texts)
        nodes = nodes_from_maya(*mus, 6)
        for sector, mu in ((1, mus[0]), (2, mus[1]), (3, mus[2])):
            m = maya(mu)
            got = sum(1 for nd in nodes if nd.sector == sector)
            assert got == len(m.s_plus) + len(m.s_minus), (texts, sector)


def test_node_colouring_tripartite():
    for texts in (("1", "1", "1"), ("1", "2", "1"), ("1", "1", "-")):
        mus = tuple(parse_partition(t) for t in texts)
        nodes = nodes_from_maya(*mus, 6)
        if not nodes:
            continue
        sigma = tripartite_pairing(nodes, 6)
        assert len(sigma) * 2 == len(nodes)


def test_colour_arcs_are_circularly_contiguous():
    mus = tuple(parse_partition(t) for t in ("1", "1", "1"))
    nodes = ordered_nodes_ccw(nodes_from_maya(*mus, 5), 5)
    colours = [nd.colour for nd in nodes]
    # rotate so a block boundary is at position 0, then expect 3 runs
    runs = 1
    for i in range(1, len(colours)):
        if colours[i] != colours[i - 1]:
            runs += 1
    if colours[0] == colours[-1]:
        runs -= 1
    assert runs == 3


# -- relative height --------------------------------------------------------------


def test_height_contours_are_loops_and_paths():
    c = cl("1", "2", "1")
    cfg = cfg_of(c, ((0, 0, 0),), ())
    dd = superpose_config(cfg, 5)
    h = relative_height(dd)  # consistency asserted inside
    diff = (dd.edges_a | dd.edges_b) - dd.doubled
    from vertexlab.double_dimer import _dual_edge

    n = 5
    for (a, b) in h:
        for q in ((a + 1, b), (a, b + 1), (a + 1, b + 1)):
            if q not in h:
                continue
            e = _dual_edge((a, b), q)
            step = abs(h[q] - h[(a, b)])
            if e in diff:
                assert step == 1
            else:
                assert step == 0


# -- the equivalence of the two labelling algorithms ------------------------------


def test_paper_examples_agree():
    c = cl("1", "2", "1")
    items = [
        (((0, 0, 0),), ()),
        (((0, 0, 0), (0, 0, -1)), ((0, 0, 1),)),
        ((), ((0, 0, 0), (0, 0, 1))),
        (((0, 0, 0), (0, 0, -1)), ()),
    ]
    outcomes = []
    for a_boxes, b_boxes in items:
        cfg = cfg_of(c, a_boxes, b_boxes)
        assert theorem45_check(cfg, 6)
        outcomes.append(label_ab(cfg).success)
    assert outcomes == [True, True, True, False]


def test_example2_has_two_free_loops():
    c = cl("3,3,1", "3,2,2,1", "5,3,3,1")
    cfg = cfg_of(c, ((3, -1, 0), (3, 0, 0)))
    res = label_ab(cfg)
    assert res.success
    assert len(res.free_components()) == 2
    dd = superpose_config(cfg, 9)
    out = label_dd(dd)
    assert out.success
    assert len(out.free_loops) == 2
    sectors = {s for _, s in out.path_labels}
    assert sectors <= {1, 2}


def test_equivalence_exhaustive_small():
    for texts in (("1", "1", "1"), ("1", "2", "1")):
        c = cl(*texts)
        for cfg in all_ab_configs(c, 4):
            assert theorem45_check(cfg, 7), (texts, cfg)


# -- double-dimer sums -------------------------------------------------------------


def test_zdd_no_nodes_hexagon():
    g = honeycomb(1)
    table = zdd_by_pairing(g, [])
    assert table == {frozenset(): {0: 4}}
    assert zdd_total(g, []) == 4 == ordered_pair_total(g, [])


def test_zdd_single_edge_graph():
    g = honeycomb(1)
    cut = sorted(g.vertices)[2:]
    # keep one adjacent pair only
    from vertexlab.tilings import neighbors

    verts = sorted(g.vertices)
    u = verts[0]
    v = next(nb for nb, _ in neighbors(u) if nb in g.vertices)
    from vertexlab.dimer import HoneycombGraph

    g2 = HoneycombGraph(1, {u, v})
    table = zdd_by_pairing(g2, [u, v])
    sigma = frozenset({frozenset({u, v})})
    assert table == {sigma: {0: 1}}
    assert zdd_total(g2, [u, v]) == 1 == ordered_pair_total(g2, [u, v])


def test_zdd_ordered_pair_oracle_windows():
    for n in (1, 2):
        g = honeycomb(n)
        assert zdd_total(g, []) == ordered_pair_total(g, []) == count_matchings(g) ** 2


def test_zdd_with_nodes_oracle():
    mus = tuple(parse_partition(t) for t in ("1", "-", "-"))
    g, nodes = dd_graph(*mus, 2)
    tris = [nd.tri for nd in nodes]
    assert zdd_total(g, tris) == ordered_pair_total(g, tris)


def test_zdd_unrealizable_pairing_is_zero():
    mus = tuple(parse_partition(t) for t in ("1", "1", "-"))
    g, nodes = dd_graph(*mus, 3)
    tris = [nd.tri for nd in nodes]
    assert len(tris) == 4
    ordered = [nd.tri for nd in ordered_nodes_ccw(nodes, 3)]
    crossing = frozenset({frozenset({ordered[0], ordered[2]}),
                          frozenset({ordered[1], ordered[3]})})
    assert zdd(g, tris, crossing) == 0


def test_tripartite_pairing_structure():
    mus = tuple(parse_partition(t) for t in ("1", "1", "1"))
    n = 5
    nodes = nodes_from_maya(*mus, n)
    sigma = tripartite_pairing(nodes, n)
    # like colours are never paired
    colour = {nd.tri: nd.colour for nd in nodes}
    for pair in sigma:
        u, v = sorted(pair)
        assert colour[u] != colour[v]


def test_dd_condensation_111():
    mus = tuple(parse_partition(t) for t in ("1", "1", "1"))
    assert dd_condensation_check(*mus, 4)
