from vertexlab.partitions import Partition, parse_partition
from vertexlab.pt import (
    AbConfiguration,
    ab_counts,
    enumerate_ab,
    is_ab_config,
    label_ab,
    pt_vertex,
)
from vertexlab.dt import dt_vertex
from vertexlab.qseries import eq_to_order, mac_mahon
from vertexlab.regions import RegionClassifier, successors


def cl(*texts):
    return RegionClassifier(*(parse_partition(t) for t in texts))


C121 = cl("1", "2", "1")


def test_is_ab_config():
    assert is_ab_config(set(), set(), C121)
    assert is_ab_config({(0, 0, 0), (0, 0, -1)}, set(), C121)
    assert not is_ab_config({(0, 0, -2)}, set(), C121)
    # region containment is required
    assert not is_ab_config({(5, 0, 0)}, set(), C121)
    assert not is_ab_config(set(), {(0, 0, -1)}, C121)


def test_labelling_example_item1():
    res = label_ab(AbConfiguration({(0, 0, 0)}, set(), C121))
    assert res.success
    assert res.components == ((frozenset({(0, 0, 0), (0, 0, 1)}), ("sector", 1)),)


def test_labelling_example_item2():
    res = label_ab(AbConfiguration({(0, 0, 0), (0, 0, -1)}, {(0, 0, 1)}, C121))
    assert res.success
    assert res.components == ((frozenset({(0, 0, -1), (0, 0, 0)}), ("sector", 3)),)


def test_labelling_example_item3():
    res = label_ab(AbConfiguration(set(), {(0, 0, 0), (0, 0, 1)}, C121))
    assert res.success
    assert res.components == ((frozenset({(0, 0, 0)}), ("free",)),)


def test_labelling_example_item4():
    res = label_ab(AbConfiguration({(0, 0, 0), (0, 0, -1)}, set(), C121))
    assert not res.success


def test_empty_pair_labels_successfully():
    res = label_ab(AbConfiguration(set(), set(), C121))
    assert res.success
    assert res.components == ((frozenset({(0, 0, 1)}), ("sector", 1)),)


def test_enumerate_empty_triple():
    got = enumerate_ab(cl("-", "-", "-"), 5)
    assert len(got) == 1
    assert got[0][0].total() == 0


def test_enumerate_121_matches_example():
    got = enumerate_ab(C121, 3)
    pairs = {(tuple(sorted(cfg.a_boxes)), tuple(sorted(cfg.b_boxes))) for cfg, _ in got}
    assert (((0, 0, 0),), ()) in pairs
    assert (((0, 0, -1), (0, 0, 0)), ((0, 0, 1),)) in pairs
    assert ((), ((0, 0, 0), (0, 0, 1))) in pairs
    assert (((0, 0, -1), (0, 0, 0)), ()) not in pairs


def test_stacking_closure_of_enumerated():
    c = cl("1", "1", "1")
    for cfg, _ in enumerate_ab(c, 4):
        for b in cfg.a_boxes:
            for s in successors(b):
                if c.in_i_minus_or_iii(s):
                    assert s in cfg.a_boxes
        for b in cfg.b_boxes:
            for s in successors(b):
                if c.in_region_ii_or_iii(s):
                    assert s in cfg.b_boxes


def test_free_swap_closure():
    for c in (cl("1", "1", "1"), cl("1", "2", "1")):
        for cfg, res in enumerate_ab(c, 5):
            for comp in res.free_components():
                a2 = cfg.a_boxes.symmetric_difference(comp)
                b2 = cfg.b_boxes.symmetric_difference(comp)
                assert is_ab_config(a2, b2, c)
                swapped = AbConfiguration(a2, b2, c)
                assert swapped.total() == cfg.total()
                assert label_ab(swapped).success


def test_pt_vertex_trivial_cases():
    assert pt_vertex(*[Partition()] * 3, n=6).coeffs == (1, 0, 0, 0, 0, 0)
    v = pt_vertex(parse_partition("1"), Partition(), Partition(), 5)
    assert [v.coefficient(e) for e in range(5)] == [1, 1, 1, 1, 1]


def test_theorem_check_121():
    mus = [parse_partition(t) for t in ("1", "2", "1")]
    n = 5
    w = pt_vertex(*mus, n=n)
    v = dt_vertex(*mus, n=-3 + n)
    rhs = (mac_mahon(n) * w).shift(-3)
    assert eq_to_order(v, rhs, -3 + n)
