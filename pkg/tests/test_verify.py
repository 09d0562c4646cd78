import pytest

from vertexlab.partitions import EmptyPartitionError, Partition, parse_partition
from vertexlab.verify import (
    AmbiguousFitError,
    CondensationShifts,
    NoFitError,
    fit_condensation,
    kuo_vs_series,
    verify_ptdt,
)


def mus(*texts):
    return tuple(parse_partition(t) for t in texts)


def test_verify_empty_triple():
    rep = verify_ptdt(*mus("-", "-", "-"), 8)
    assert rep.passed
    assert rep.first_mismatch is None
    assert rep.min_exp == 0


def test_verify_single_leg():
    assert verify_ptdt(*mus("1", "-", "-"), 6).passed


def test_verify_121():
    rep = verify_ptdt(*mus("1", "2", "1"), 6)
    assert rep.passed
    assert rep.min_exp == -3


def test_verify_reports_mismatch_location():
    # sanity: a deliberately broken comparison localizes the first bad exponent
    from vertexlab.dt import dt_vertex
    from vertexlab.pt import pt_vertex
    from vertexlab.qseries import mac_mahon

    v = dt_vertex(*mus("1", "1", "-"), n=-1 + 5)
    w = pt_vertex(*mus("1", "1", "-"), 5)
    m = mac_mahon(5)
    rhs = (m * w).shift(-1)
    assert all(v.coefficient(e) == rhs.coefficient(e) for e in range(-1, 4))


def test_fit_requires_nonempty_legs():
    with pytest.raises(EmptyPartitionError):
        fit_condensation("PT", *mus("-", "1", "1"), 4)


def test_fit_matches_between_theories():
    for texts in (("1", "1", "1"), ("1", "1", "-")):
        dt_fit = fit_condensation("DT", *mus(*texts), 4)
        pt_fit = fit_condensation("PT", *mus(*texts), 4)
        assert dt_fit == pt_fit, texts


def test_fit_stable_under_order_increase():
    a = fit_condensation("DT", *mus("1", "1", "1"), 4)
    b = fit_condensation("DT", *mus("1", "1", "1"), 6)
    assert a == b


def test_kuo_vs_series_small():
    assert kuo_vs_series(*mus("1", "1", "-"), N=4, n=4)
    assert kuo_vs_series(*mus("1", "1", "1"), N=5, n=4)
