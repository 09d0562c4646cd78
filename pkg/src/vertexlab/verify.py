"""Top-level identity checks: the vertex correspondence V = M(q)·W after
weight alignment, uniqueness fitting of the condensation exponents, and the
graph-level/series-level consistency check.
"""

from __future__ import annotations

from typing import Dict, List, Optional, Tuple

from .dimer import (
    condensation_nodes,
    count_matchings,
    honeycomb_for,
    kuo_check,
    window_bijection_report,
)
from .dt import dt_vertex
from .partitions import Partition, op_c, op_r, op_rc
from .pt import pt_vertex
from .qseries import InsufficientOrderError, LaurentSeries, mac_mahon
from .regions import RegionClassifier


class NoFitError(Exception):
    """No exponent shifts satisfy the condensation identity."""


class AmbiguousFitError(Exception):
    """Several exponent shifts survive; the computed order is too low."""


class VerifyReport:
    __slots__ = ("passed", "first_mismatch", "compared", "min_exp")

    def __init__(self, passed: bool, first_mismatch: Optional[int], compared: int, min_exp: int):
        self.passed = passed
        self.first_mismatch = first_mismatch
        self.compared = compared
        self.min_exp = min_exp

    def to_dict(self) -> dict:
        return {
            "passed": self.passed,
            "first_mismatch": self.first_mismatch,
            "compared_coefficients": self.compared,
            "min_exp": self.min_exp,
        }

    def __repr__(self):
        return f"VerifyReport(passed={self.passed}, first_mismatch={self.first_mismatch})"


def verify_ptdt(mu1: Partition, mu2: Partition, mu3: Partition, n: int) -> VerifyReport:
    """Compare the box-stack vertex with M(q) times the pair vertex over n coefficients.

    The box-stack series starts at -|II| - 2|III|; the product starts at 0, so
    the comparison aligns the leading exponents before matching coefficients.
    """
    if n < 1:
        raise InsufficientOrderError("need at least one comparable coefficient")
    cl = RegionClassifier(mu1, mu2, mu3)
    w_min = cl.w_min()
    v = dt_vertex(mu1, mu2, mu3, w_min + n)
    w = pt_vertex(mu1, mu2, mu3, n)
    m = mac_mahon(n)
    rhs = (m * w).shift(w_min)
    first_mismatch = None
    for e in range(w_min, w_min + n):
        if v.coefficient(e) != rhs.coefficient(e):
            first_mismatch = e
            break
    return VerifyReport(first_mismatch is None, first_mismatch, n, w_min)


class CondensationShifts:
    """Exponent offsets (b - a, c - a) of the three-term condensation identity."""

    __slots__ = ("b_minus_a", "c_minus_a")

    def __init__(self, b_minus_a: int, c_minus_a: int):
        self.b_minus_a = b_minus_a
        self.c_minus_a = c_minus_a

    def __eq__(self, other):
        if not isinstance(other, CondensationShifts):
            return NotImplemented
        return (self.b_minus_a, self.c_minus_a) == (other.b_minus_a, other.c_minus_a)

    def __hash__(self):
        return hash((self.b_minus_a, self.c_minus_a))

    def __repr__(self):
        return f"CondensationShifts(b-a={self.b_minus_a}, c-a={self.c_minus_a})"

    def to_dict(self):
        return {"b_minus_a": self.b_minus_a, "c_minus_a": self.c_minus_a}


def _vertex(theory: str, mu1: Partition, mu2: Partition, mu3: Partition, order: int) -> LaurentSeries:
    """Normalized vertex series used by the condensation fit.

    For the pair theory the series is shifted down by |II| + 2|III| so that
    both theories satisfy the identity with identical exponents (they differ
    exactly by the MacMahon factor after this alignment).
    """
    cl = RegionClassifier(mu1, mu2, mu3)
    w_min = cl.w_min()
    if theory == "DT":
        return dt_vertex(mu1, mu2, mu3, w_min + order)
    if theory == "PT":
        return pt_vertex(mu1, mu2, mu3, order).shift(w_min)
    raise ValueError("theory must be 'DT' or 'PT'")


def _products(theory: str, mu1: Partition, mu2: Partition, mu3: Partition,
              order: int) -> Tuple[LaurentSeries, LaurentSeries, LaurentSeries]:
    mu1rc, mu2rc = op_rc(mu1), op_rc(mu2)
    t0 = _vertex(theory, mu1, mu2, mu3, order) * _vertex(theory, mu1rc, mu2rc, mu3, order)
    t1 = _vertex(theory, mu1rc, mu2, mu3, order) * _vertex(theory, mu1, mu2rc, mu3, order)
    t2 = _vertex(theory, op_r(mu1), op_c(mu2), mu3, order) * _vertex(
        theory, op_c(mu1), op_r(mu2), mu3, order)
    return t0, t1, t2


def fit_condensation(theory: str, mu1: Partition, mu2: Partition, mu3: Partition,
                     n: int) -> CondensationShifts:
    """Unique integer shifts (b, c) with T0 = q^b T1 + q^c T2 on all computed
    coefficients (the first-term exponent normalized to zero)."""
    if mu1.is_empty() or mu2.is_empty():
        from .partitions import EmptyPartitionError

        raise EmptyPartitionError("condensation needs the first two legs nonempty")
    cl = RegionClassifier(mu1, mu2, mu3)
    ii, iii = cl.region_sets()
    window = len(ii) + 2 * len(iii) + sum(
        mu.size() for mu in (mu1, mu2, mu3, op_rc(mu1), op_rc(mu2), op_r(mu1), op_c(mu2))
    ) + 2
    mu1rc, mu2rc = op_rc(mu1), op_rc(mu2)

    def wmin(*ms):
        return RegionClassifier(*ms).w_min()

    t0min = wmin(mu1, mu2, mu3) + wmin(mu1rc, mu2rc, mu3)
    t1min = wmin(mu1rc, mu2, mu3) + wmin(mu1, mu2rc, mu3)
    t2min = wmin(op_r(mu1), op_c(mu2), mu3) + wmin(op_c(mu1), op_r(mu2), mu3)
    guess_span = max(abs(t0min - t1min), abs(t0min - t2min))
    for pad in (6, 10, 16):
        order = n + guess_span + pad
        t0, t1, t2 = _products(theory, mu1, mu2, mu3, order)
        horizon = min(s.order for s in (t0, t1, t2) if s.order is not None)
        if horizon - max(t0.min_exp, t1.min_exp, t2.min_exp) < 3:
            raise InsufficientOrderError("fewer than 3 comparable coefficients")
        sols = []
        for b in range(-window, window + 1):
            # residual = T0 - q^b T1; c is then forced by the residual's lead
            r = t0 - t1.shift(b)
            hi = min(horizon, (t1.order or horizon) + b)
            if r.is_zero():
                continue
            lead = r.min_exp
            if lead >= hi:
                continue
            c = lead - t2.min_exp
            if abs(c) > window:
                continue
            t2s = t2.shift(c)
            hi2 = min(hi, (t2.order or horizon) + c)
            if all(r.coefficient(e) == t2s.coefficient(e)
                   for e in range(min(r.min_exp, t2s.min_exp), hi2)):
                sols.append((b, c))
        if len(sols) > 1:
            continue  # raise the order and retry
        if not sols:
            raise NoFitError(f"no shifts satisfy the identity for {theory}")
        return CondensationShifts(*sols[0])
    raise AmbiguousFitError(f"multiple shifts {sols} at order {order}")


def kuo_vs_series(mu1: Partition, mu2: Partition, mu3: Partition, N: int, n: int,
                  enumeration_cap: int = 30000) -> bool:
    """Graph-level condensation on the windowed graph of the reduced legs,
    cross-checked against the box-side correspondence and the fitted identity."""
    mu1rc, mu2rc = op_rc(mu1), op_rc(mu2)
    g = honeycomb_for(mu1rc, mu2rc, mu3, N)
    a, b, c, d = condensation_nodes(mu1, mu2, mu3, N)
    if not kuo_check(g, a, b, c, d):
        return False
    if g.without((a, b, c, d)) != honeycomb_for(mu1, mu2, mu3, N):
        return False
    # verify the matching/box-stack bijection at the largest enumerable window
    from .dimer import LabelOutOfRangeError

    for np in range(N, 1, -1):
        try:
            small_enough = count_matchings(honeycomb_for(mu1, mu2, mu3, np)) <= enumeration_cap
        except LabelOutOfRangeError:
            break
        if small_enough:
            window_bijection_report(mu1, mu2, mu3, np)
            break
    fit_condensation("DT", mu1, mu2, mu3, n)  # must exist and be unique
    return True
