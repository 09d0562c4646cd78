"""Truncated Laurent series in q with arbitrary-precision integer coefficients.

A series carries its own validity horizon (`order`): coefficients are
guaranteed correct for every exponent strictly below `order`.  Exactly known
polynomials use ``order=None`` (valid everywhere).  All arithmetic propagates
the tightest provable order, and comparisons past the horizon fail loudly
instead of returning stale data.
"""

from __future__ import annotations

import json
from math import comb
from typing import Iterable, Optional


class InsufficientOrderError(Exception):
    """A comparison or coefficient read was requested past the valid order."""


class NonUnitDivisorError(Exception):
    """Division hit a coefficient that does not divide exactly."""


def _min_order(a: Optional[int], b: Optional[int]) -> Optional[int]:
    if a is None:
        return b
    if b is None:
        return a
    return min(a, b)


class LaurentSeries:
    """Immutable truncated Laurent series sum_{e >= min_exp} coeffs[e - min_exp] q^e."""

    __slots__ = ("min_exp", "coeffs", "order")

    def __init__(self, min_exp: int, coeffs: Iterable[int], order: Optional[int] = None):
        cs = list(coeffs)
        if order is not None:
            # drop anything at or beyond the horizon
            cs = cs[: max(0, order - min_exp)]
        # strip leading zeros so the leading coefficient is nonzero
        while cs and cs[0] == 0:
            cs.pop(0)
            min_exp += 1
        if order is None:
            while cs and cs[-1] == 0:
                cs.pop()
        if not cs:
            min_exp = order if order is not None else 0
        if order is not None and len(cs) != order - min_exp:
            # pad with explicit zeros up to the horizon (trailing zeros are data)
            cs = cs + [0] * (order - min_exp - len(cs))
        object.__setattr__(self, "min_exp", min_exp)
        object.__setattr__(self, "coeffs", tuple(cs))
        object.__setattr__(self, "order", order)

    def __setattr__(self, *a):  # pragma: no cover
        raise AttributeError("LaurentSeries is immutable")

    # -- basic queries ----------------------------------------------------

    def is_zero(self) -> bool:
        return not self.coeffs

    def coefficient(self, e: int) -> int:
        if self.order is not None and e >= self.order:
            raise InsufficientOrderError(
                f"coefficient of q^{e} requested but series only valid below q^{self.order}"
            )
        if e < self.min_exp or e >= self.min_exp + len(self.coeffs):
            return 0
        return self.coeffs[e - self.min_exp]

    def __eq__(self, other) -> bool:
        if not isinstance(other, LaurentSeries):
            return NotImplemented
        return (
            self.min_exp == other.min_exp
            and self.coeffs == other.coeffs
            and self.order == other.order
        )

    def __hash__(self):
        return hash((self.min_exp, self.coeffs, self.order))

    def __repr__(self):
        terms = []
        for i, c in enumerate(self.coeffs):
            if c:
                terms.append(f"{c}*q^{self.min_exp + i}")
        body = " + ".join(terms) if terms else "0"
        tail = f" + O(q^{self.order})" if self.order is not None else ""
        return f"<{body}{tail}>"

    # -- ring operations ---------------------------------------------------

    def __add__(self, other: "LaurentSeries") -> "LaurentSeries":
        order = _min_order(self.order, other.order)
        if self.is_zero():
            return LaurentSeries(other.min_exp, other.coeffs, order)
        if other.is_zero():
            return LaurentSeries(self.min_exp, self.coeffs, order)
        lo = min(self.min_exp, other.min_exp)
        hi = max(self.min_exp + len(self.coeffs), other.min_exp + len(other.coeffs))
        if order is not None:
            hi = min(hi, order)
        cs = [0] * (hi - lo)
        for i, c in enumerate(self.coeffs):
            e = self.min_exp + i
            if e < hi:
                cs[e - lo] += c
        for i, c in enumerate(other.coeffs):
            e = other.min_exp + i
            if e < hi:
                cs[e - lo] += c
        return LaurentSeries(lo, cs, order)

    def __neg__(self) -> "LaurentSeries":
        return LaurentSeries(self.min_exp, [-c for c in self.coeffs], self.order)

    def __sub__(self, other: "LaurentSeries") -> "LaurentSeries":
        return self + (-other)

    def __mul__(self, other: "LaurentSeries") -> "LaurentSeries":
        if self.is_zero() or other.is_zero():
            order = None
            if self.is_zero() and self.order is not None:
                order = _min_order(order, self.order + (other.min_exp if not other.is_zero() else 0))
            if other.is_zero() and other.order is not None:
                order = _min_order(order, other.order + (self.min_exp if not self.is_zero() else 0))
            # zero times exact anything is exactly zero
            if (self.is_zero() and self.order is None) or (other.is_zero() and other.order is None):
                order = None
            return LaurentSeries(0, [], order)
        oa = None if self.order is None else self.order + other.min_exp
        ob = None if other.order is None else other.order + self.min_exp
        order = _min_order(oa, ob)
        lo = self.min_exp + other.min_exp
        hi = self.min_exp + len(self.coeffs) - 1 + other.min_exp + len(other.coeffs) - 1
        if order is not None:
            hi = min(hi, order - 1)
        cs = [0] * (hi - lo + 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            ea = self.min_exp + i
            for j, b in enumerate(other.coeffs):
                if b == 0:
                    continue
                e = ea + other.min_exp + j
                if e <= hi:
                    cs[e - lo] += a * b
        return LaurentSeries(lo, cs, order)

    def shift(self, k: int) -> "LaurentSeries":
        """Multiply by q^k."""
        order = None if self.order is None else self.order + k
        return LaurentSeries(self.min_exp + k, self.coeffs, order)

    def truncate(self, order: int) -> "LaurentSeries":
        if self.order is not None and self.order < order:
            raise InsufficientOrderError(
                f"cannot extend order {self.order} to {order}"
            )
        return LaurentSeries(self.min_exp, self.coeffs, order)


def add(a: LaurentSeries, b: LaurentSeries) -> LaurentSeries:
    return a + b


def mul(a: LaurentSeries, b: LaurentSeries) -> LaurentSeries:
    return a * b


def shift(a: LaurentSeries, k: int) -> LaurentSeries:
    return a.shift(k)


def eq_to_order(a: LaurentSeries, b: LaurentSeries, n: int) -> bool:
    """Compare all coefficients of exponent < n; both operands must be valid there."""
    for s in (a, b):
        if s.order is not None and s.order < n:
            raise InsufficientOrderError(
                f"series valid only below q^{s.order}, comparison to q^{n} requested"
            )
    lo = min(a.min_exp if a.coeffs else n, b.min_exp if b.coeffs else n)
    return all(a.coefficient(e) == b.coefficient(e) for e in range(lo, n))


def divide_by_unit(a: LaurentSeries, u: LaurentSeries) -> LaurentSeries:
    """Exact long division a / u; every step must divide exactly."""
    if u.is_zero():
        raise NonUnitDivisorError("division by zero series")
    lead = u.coeffs[0]
    res_min = a.min_exp - u.min_exp
    oa = None if a.order is None else a.order - u.min_exp
    ou = None if u.order is None else u.order + a.min_exp - 2 * u.min_exp
    order = _min_order(oa, ou)
    if a.is_zero():
        return LaurentSeries(0, [], order)
    if order is None:
        n_terms = len(a.coeffs) - len(u.coeffs) + 1
        if n_terms < 1:
            raise NonUnitDivisorError("exact division of shorter polynomial by longer one")
    else:
        n_terms = order - res_min
    rem = {a.min_exp + i: c for i, c in enumerate(a.coeffs)}
    out = []
    for t in range(n_terms):
        e = res_min + t
        num = rem.get(e + u.min_exp, 0)
        if num % lead != 0:
            raise NonUnitDivisorError(
                f"coefficient {num} at q^{e + u.min_exp} not divisible by leading {lead}"
            )
        c = num // lead
        out.append(c)
        if c:
            for j, uc in enumerate(u.coeffs):
                k = e + u.min_exp + j
                rem[k] = rem.get(k, 0) - c * uc
    if order is None:
        # exact division must leave no remainder
        if any(v != 0 for v in rem.values()):
            raise NonUnitDivisorError("nonzero remainder in exact division")
    return LaurentSeries(res_min, out, order)


def zero(order: Optional[int] = None) -> LaurentSeries:
    return LaurentSeries(0, [], order)


def one() -> LaurentSeries:
    return LaurentSeries(0, [1])


def q_power(k: int) -> LaurentSeries:
    return LaurentSeries(k, [1])


def from_coefficients(min_exp: int, coeffs: Iterable[int], order: Optional[int] = None) -> LaurentSeries:
    return LaurentSeries(min_exp, coeffs, order)


def mac_mahon(n: int) -> LaurentSeries:
    """prod_{i>=1} (1 - q^i)^{-i}, coefficients valid through exponent n-1."""
    if n < 1:
        raise ValueError("order must be >= 1")
    cs = [0] * n
    cs[0] = 1
    for i in range(1, n):
        # multiply by (1 - q^i)^{-i} = sum_m C(m+i-1, i-1) q^{i m}
        nxt = [0] * n
        m = 0
        while i * m < n:
            binom = comb(m + i - 1, i - 1)
            for e in range(0, n - i * m):
                if cs[e]:
                    nxt[e + i * m] += cs[e] * binom
            m += 1
        cs = nxt
    return LaurentSeries(0, cs, n)


# -- JSON wire format ------------------------------------------------------


def series_to_json(s: LaurentSeries) -> str:
    return json.dumps(series_to_dict(s))


def series_to_dict(s: LaurentSeries) -> dict:
    return {
        "min_exp": s.min_exp,
        "order": s.order,
        "coeffs": [str(c) for c in s.coeffs],
    }


def series_from_dict(d: dict) -> LaurentSeries:
    return LaurentSeries(int(d["min_exp"]), [int(c) for c in d["coeffs"]],
                         None if d.get("order") is None else int(d["order"]))


def series_from_json(text: str) -> LaurentSeries:
    return series_from_dict(json.loads(text))
