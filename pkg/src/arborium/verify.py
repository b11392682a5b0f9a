"""Generating-series verification.

Each verifier expands a closed rational (or symbolic-power) expression as a
truncated series in s and compares it, coefficient by coefficient and with
exact arithmetic, against the recursion-computed invariants of the fan
arbors t_n.  Results are collected in a Report that renders as text or JSON.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

from .algebra import (
    MultiPoly,
    TruncatedSeries,
    series_expand_rational,
    series_pow_symbolic,
)
from .arbor import make_tn
from . import invariants

DEFAULT_ORDER = 10

THEOREMS = ("zeta", "m_triangle", "ehrhart", "laplace")

_U = MultiPoly.variable("u")
_X = MultiPoly.variable("X")
_Y = MultiPoly.variable("Y")
_E = MultiPoly.variable("E")
_V = MultiPoly.variable("V")
_S = MultiPoly.variable("s")


@dataclass
class CheckResult:
    n: int
    check: str
    passed: bool
    lhs: str
    rhs: str
    diff: str | None = None


@dataclass
class Report:
    theorem: str
    order: int
    per_order: list = field(default_factory=list)

    @property
    def overall(self) -> bool:
        return all(c.passed for c in self.per_order)

    def add(self, n: int, check: str, lhs: MultiPoly, rhs: MultiPoly):
        passed = lhs == rhs
        diff = None if passed else str(lhs - rhs)
        self.per_order.append(
            CheckResult(n, check, passed, str(lhs), str(rhs), diff))

    def to_dict(self) -> dict:
        per_order = []
        for c in self.per_order:
            item = {"n": c.n, "check": c.check, "passed": c.passed,
                    "lhs": c.lhs, "rhs": c.rhs}
            if c.diff is not None:
                item["diff"] = c.diff
            per_order.append(item)
        return {"theorem": self.theorem, "order": self.order,
                "per_order": per_order, "overall": self.overall}

    def to_json(self, indent=None) -> str:
        return json.dumps(self.to_dict(), indent=indent)

    def render_text(self) -> str:
        lines = [f"theorem {self.theorem}: order {self.order}: "
                 f"{'PASS' if self.overall else 'FAIL'}"]
        for c in self.per_order:
            mark = "pass" if c.passed else "FAIL"
            lines.append(f"  n={c.n:<2d} {c.check:<14s} {mark}")
            if not c.passed:
                lines.append(f"    lhs: {c.lhs}")
                lines.append(f"    rhs: {c.rhs}")
        return "\n".join(lines)


def _compare(report: Report, lhs_terms: dict, rhs: TruncatedSeries, check: str):
    for n, lhs in sorted(lhs_terms.items()):
        report.add(n, check, lhs, rhs.coeff(n))


# -- theorem right-hand sides -------------------------------------------------

def zeta_rhs(order: int) -> TruncatedSeries:
    """((1 - s*u + s)/(1 - s*u))**u, truncated."""
    return series_pow_symbolic(1 + (1 - _U) * _S, 1 - _U * _S, order)


def m_triangle_rhs(order: int) -> TruncatedSeries:
    num = (_X * _Y * _S - _Y * _S - 1) * (_X * _Y * _S - 1)
    den = (2 * _X * _Y * _S - _Y * _S - 1) * (_X * _Y * _S - _Y * _S + _S - 1)
    return series_expand_rational(num, den, order)


def ehrhart_rhs(order: int) -> TruncatedSeries:
    """(1/2) (1 - s/(us+s-1) - (s-1)/(us+s-1)^2), over the common denominator."""
    core = _U * _S + _S - 1
    num = core ** 2 - _S * core - (_S - 1)
    den = 2 * core ** 2
    return series_expand_rational(num, den, order)


def laplace_rhs(order: int) -> TruncatedSeries:
    """V*(s/(EVs - Vs + 1) + Es/(Es - 1)), over the common denominator.

    The series starts at s^1; the verifier asserts the s^0 coefficient is 0
    rather than assuming it.
    """
    d1 = _E * _V * _S - _V * _S + 1
    d2 = _E * _S - 1
    num = _V * (_S * d2 + _E * _S * d1)
    den = d1 * d2
    return series_expand_rational(num, den, order)


# -- verifiers ------------------------------------------------------------------

def verify_zeta(order: int = DEFAULT_ORDER) -> Report:
    """Series of Z(u, 1) over the fan family versus the closed power form,
    plus the log-derivative identity G'(1-us)(1+s-us) = u*G that encodes the
    equivalent exp-integral form."""
    if order < 1:
        raise ValueError("order >= 1 required")
    report = Report("zeta", order)
    rhs = zeta_rhs(order)
    report.add(0, "series", MultiPoly.const(1), rhs.coeff(0))
    lhs = {n: invariants.zeta_poly(make_tn(n)).subs({"X": 1})
           for n in range(1, order + 1)}
    _compare(report, lhs, rhs, "series")

    extended = zeta_rhs(order + 1)
    residual = (extended.differentiate() * ((1 - _U * _S) * (1 + _S - _U * _S))
                - _U * extended).truncate(order)
    for n in range(order + 1):
        report.add(n, "log_derivative", residual.coeff(n), MultiPoly.zero())
    return report


def verify_m_triangle(order: int = DEFAULT_ORDER) -> Report:
    if order < 1:
        raise ValueError("order >= 1 required")
    report = Report("m_triangle", order)
    rhs = m_triangle_rhs(order)
    report.add(0, "series", MultiPoly.const(1), rhs.coeff(0))
    lhs = {n: invariants.m_triangle(make_tn(n)) for n in range(1, order + 1)}
    _compare(report, lhs, rhs, "series")
    return report


def verify_ehrhart(order: int = DEFAULT_ORDER) -> Report:
    """Closed-form counting polynomials versus the rational series; the
    closed form itself is certified against enumeration in the oracle suite."""
    if order < 1:
        raise ValueError("order >= 1 required")
    report = Report("ehrhart", order)
    rhs = ehrhart_rhs(order)
    report.add(0, "series", MultiPoly.const(1), rhs.coeff(0))
    lhs = {n: invariants.ehrhart_tn_closed(n) for n in range(1, order + 1)}
    _compare(report, lhs, rhs, "series")
    return report


def verify_laplace(order: int = DEFAULT_ORDER) -> Report:
    """Truncation-recursion transforms versus the rational series, and
    against the closed form V^n (1-E)^(n-1) - V E^n."""
    if order < 1:
        raise ValueError("order >= 1 required")
    report = Report("laplace", order)
    rhs = laplace_rhs(order)
    report.add(0, "series", MultiPoly.zero(), rhs.coeff(0))
    lhs = {n: invariants.laplace(make_tn(n)) for n in range(1, order + 1)}
    _compare(report, lhs, rhs, "series")
    for n, poly in sorted(lhs.items()):
        report.add(n, "closed_form", poly, invariants.laplace_tn_closed(n))
    return report


VERIFIERS = {
    "zeta": verify_zeta,
    "m_triangle": verify_m_triangle,
    "ehrhart": verify_ehrhart,
    "laplace": verify_laplace,
}


def verify_all(order: int = DEFAULT_ORDER) -> list:
    return [VERIFIERS[name](order) for name in THEOREMS]
