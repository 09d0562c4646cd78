import pytest

from vertexlab.dimer import (
    BadNodeConfigurationError,
    LabelOutOfRangeError,
    condensation_nodes,
    count_matchings,
    count_matchings_bruteforce,
    cube_truncated_count,
    dt_label_slot,
    dt_to_matching,
    enumerate_matchings,
    graph_json,
    honeycomb,
    honeycomb_for,
    kuo_check,
    matching_to_dt,
    remove_boundary,
    window_bijection_report,
)
from vertexlab.dt import dt_counts
from vertexlab.dt import enumerate_dt
from vertexlab.partitions import Partition, parse_partition
from vertexlab.regions import RegionClassifier
from vertexlab.tilings import UP, DOWN, boundary_cycle, hexagon_triangles


def mus(*texts):
    return tuple(parse_partition(t) for t in texts)


def boxed_count(n: int) -> int:
    """Product formula for stacks inside the n-cube."""
    num = 1
    den = 1
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            for k in range(1, n + 1):
                num *= i + j + k - 1
                den *= i + j + k - 2
    return num // den


def test_hexagon_basics():
    g = honeycomb(1)
    assert len(g.vertices) == 6
    assert len(g.edges()) == 6
    assert g.colour_classes() == (3, 3)


def test_boundary_cycle_covers_slots():
    for n in (1, 2, 3):
        cyc = boundary_cycle(n)
        assert len(cyc) == 6 * n
        assert len(set(cyc)) == 6 * n
        assert all(t in hexagon_triangles(n) for t in cyc)


def test_matching_counts_match_boxed_formula():
    assert count_matchings(honeycomb(1)) == 2
    assert count_matchings(honeycomb(2)) == 20
    assert count_matchings(honeycomb(3)) == 980
    assert count_matchings(honeycomb(4)) == boxed_count(4)


def test_memoized_counter_agrees_with_bruteforce():
    g = honeycomb(2)
    assert count_matchings(g) == count_matchings_bruteforce(g) == len(enumerate_matchings(g))
    h = remove_boundary(g, *mus("1", "-", "-"))
    assert count_matchings(h) == count_matchings_bruteforce(h)


def test_remove_boundary_counts():
    g = honeycomb(3)
    assert remove_boundary(g, *mus("-", "-", "-")) == g
    h = remove_boundary(g, *mus("1", "-", "-"))
    assert len(g.vertices) - len(h.vertices) == 2
    kinds = sorted(v[0] for v in h.removed)
    assert kinds == [DOWN, UP]


def test_label_out_of_range():
    with pytest.raises(LabelOutOfRangeError):
        honeycomb_for(*mus("9", "-", "-"), 3)


def test_window_cube_counts_where_slack_allows():
    """With slack around single-box legs the window configurations are exactly
    the cube-confined stacks, so three counters agree."""
    triples = [
        ("-", "-", "-"),
        ("1", "-", "-"),
        ("1", "1", "-"),
        ("1", "1", "1"),
        ("1", "2", "1"),
    ]
    for texts in triples:
        for n in (3, 4):
            m = count_matchings(honeycomb_for(*mus(*texts), n))
            assert m == cube_truncated_count(*mus(*texts), n), texts


def test_window_bijection_roundtrip():
    """Every matching of the labelled window pulls back to a unique valid
    stack configuration, and the two maps invert each other."""
    cases = [
        (("-", "-", "-"), 3, 980),
        (("1", "-", "-"), 3, 805),
        (("1", "2", "1"), 3, 385),
        (("2,1", "1", "1"), 3, 401),
    ]
    for texts, n, expected in cases:
        assert count_matchings(honeycomb_for(*mus(*texts), n)) == expected
        hist = window_bijection_report(*mus(*texts), n)
        assert sum(hist.values()) == expected


def test_window_histogram_prefix_matches_free_enumeration():
    """Small stacks certainly fit the window, so the extras histogram starts
    with the unrestricted layer counts."""
    for texts in (("1", "2", "1"), ("2,1", "1", "1")):
        mm = mus(*texts)
        hist = window_bijection_report(*mm, 3)
        free = dt_counts(RegionClassifier(*mm), 1)
        for k in range(2):
            assert hist[k] == free[k], texts


def test_dt_matching_roundtrip_on_enumerated_configs():
    from vertexlab.dt import WindowOverflowError

    mm = mus("1", "2", "1")
    cl = RegionClassifier(*mm)
    n = 4
    g = honeycomb_for(*mm, n)
    layers = enumerate_dt(cl, 3)
    seen = set()
    skipped = 0
    for k, cfgs in layers.items():
        for cfg in cfgs:
            try:
                m = dt_to_matching(cfg, n)
            except WindowOverflowError:
                skipped += 1  # tall towers legitimately outgrow the window
                continue
            key = frozenset(m)
            assert key not in seen
            seen.add(key)
            back = matching_to_dt(m, g, cl)
            assert back.extras == cfg.extras
    total = sum(len(v) for v in layers.values())
    assert skipped < total / 4
    assert len(seen) == total - skipped


def test_kuo_on_plain_hexagon():
    g = honeycomb(2)
    cyc = boundary_cycle(2)
    ups = [t for t in cyc if t[0] == UP]
    downs = [t for t in cyc if t[0] == DOWN]
    a, c = ups[0], ups[2]
    pos = {t: i for i, t in enumerate(cyc)}
    b = next(t for t in downs if pos[a] < pos[t] < pos[c])
    d = next(t for t in downs if pos[t] > pos[c])
    assert kuo_check(g, a, b, c, d)


def test_kuo_rejects_bad_colours():
    g = honeycomb(2)
    cyc = boundary_cycle(2)
    ups = [t for t in cyc if t[0] == UP]
    with pytest.raises(BadNodeConfigurationError):
        kuo_check(g, ups[0], ups[1], ups[2], ups[3])


def test_kuo_rejects_bad_order():
    g = honeycomb(2)
    cyc = boundary_cycle(2)
    pos = {t: i for i, t in enumerate(cyc)}
    ups = [t for t in cyc if t[0] == UP]
    downs = [t for t in cyc if t[0] == DOWN]
    a, c = ups[0], ups[2]
    b = next(t for t in downs if pos[a] < pos[t] < pos[c])
    d = next(t for t in downs if pos[t] > pos[c])
    with pytest.raises(BadNodeConfigurationError):
        kuo_check(g, a, c, b, d)


def test_kuo_section_node_choice():
    """Deleting the four extreme-label vertices turns the reduced window into
    the full one, and the condensation identity holds there."""
    mm = mus("1", "1", "-")
    from vertexlab.partitions import op_rc

    n = 4
    g = honeycomb_for(op_rc(mm[0]), op_rc(mm[1]), mm[2], n)
    a, b, c, d = condensation_nodes(*mm, n)
    assert g.without((a, b, c, d)) == honeycomb_for(*mm, n)
    assert kuo_check(g, a, b, c, d)


def test_kuo_degenerate_zero():
    # removing two same-class vertices leaves unbalanced colour classes: 0 = 0
    g = honeycomb(2)
    cyc = boundary_cycle(2)
    ups = [t for t in cyc if t[0] == UP]
    downs = [t for t in cyc if t[0] == DOWN]
    g2 = g.without((ups[0], ups[1]))
    assert count_matchings(g2) == 0
    pos = {t: i for i, t in enumerate(cyc)}
    a, c = ups[2], ups[4]
    b = next(t for t in downs if pos[a] < pos[t] < pos[c])
    d = next(t for t in downs if pos[t] > pos[c])
    assert kuo_check(g2, a, b, c, d)


def test_graph_json_roundtrip_fields():
    g = honeycomb_for(*mus("1", "-", "-"), 2)
    d = graph_json(g)
    assert d["n"] == 2
    assert len(d["vertices"]) == len(g.vertices)
    assert len(d["edges"]) == len(g.edges())
