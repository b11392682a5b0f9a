"""Recursions and closed forms for the arbor invariants.

Each invariant is computed bottom-up over sub-trees, re-reading the
sub-tree size n and root cardinality r at every level:

* zeta_poly       height-weighted zeta polynomial Z(u, X)
* k_poly          nonzero-coordinate/height census K(X, Y)
* m_triangle      Moebius triangle M(X, Y) = K(1 - 1/X, X*Y)
* ehrhart         lattice-point counting polynomial (enumeration + interpolation)
* laplace         Laplace transform of the volume function, as a polynomial in E, V
* volume          constant Laurent coefficient of the Laplace transform

plus the closed forms for the fan family t_n.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial

from .algebra import (
    VARIABLES,
    LaurentSeries,
    MultiPoly,
    binom_poly,
    int_binom,
    lagrange_interpolate,
    laplace_laurent,
)
from .arbor import Arbor, make_tn
from . import oracle

_U = MultiPoly.variable("u")
_X = MultiPoly.variable("X")
_Y = MultiPoly.variable("Y")
_E = MultiPoly.variable("E")
_V = MultiPoly.variable("V")


# -- zeta ---------------------------------------------------------------------

def zeta_poly(t: Arbor) -> MultiPoly:
    """Height-weighted zeta polynomial Z(u, X) of the point poset.

    Bottom-up: with W(X) the product of the children's polynomials
    (empty product 1), the X^j coefficient of the current level is
    sum over l of binom_poly(r(u-1)+l-1, l) * W_{j-l}, where l runs from
    max(0, j-n+r) to j, n is the sub-tree size and r its root cardinality.
    """

    def rec(vid) -> MultiPoly:
        w = MultiPoly.const(1)
        for child in t.children[vid]:
            w = w * rec(child)
        n = t.subtree_size(vid)
        r = len(t.vertices[vid])
        w_coeffs = w.coeffs_in("X")
        out = MultiPoly.zero()
        for j in range(n + 1):
            cj = MultiPoly.zero()
            for l in range(max(0, j - n + r), j + 1):
                wc = w_coeffs.get(j - l)
                if wc is None:
                    continue
                cj = cj + binom_poly(r * (_U - 1) + l - 1, l) * wc
            out = out + cj * _X ** j
        return out

    return rec(t.root)


def zeta_tn_closed(n: int) -> MultiPoly:
    """Closed form of Z(u, 1) for the fan arbor t_n."""
    if n < 1:
        raise ValueError("n >= 1 required")
    acc = MultiPoly.zero()
    for k in range(n):
        acc = acc + (int_binom(n - 1, k)
                     * (_U - 1) ** k
                     * binom_poly(_U + (n - k - 1), n - k))
    return acc


# -- K polynomial and M-triangle -------------------------------------------------

def k_poly(t: Arbor) -> MultiPoly:
    """Census K(X, Y) of lattice points by nonzero coordinates and height.

    Bottom-up over sub-trees; the X^j Y^k coefficient combines the children's
    product W(X, Y) through a double binomial sum whose conventions
    (int_binom(-1, 0) = 1, zero for negative lower argument) make the empty
    product reproduce the single-vertex census.
    """

    def rec(vid) -> MultiPoly:
        w = MultiPoly.const(1)
        for child in t.children[vid]:
            w = w * rec(child)
        n = t.subtree_size(vid)
        r = len(t.vertices[vid])
        w_coeffs = {}
        for ei, cx in w.coeffs_in("X").items():
            for ej, c in cx.coeffs_in("Y").items():
                w_coeffs[(ei, ej)] = c.constant_value()
        out = MultiPoly.zero()
        for j in range(n + 1):
            for k in range(j, n + 1):
                acc = Fraction(0)
                for l in range(max(0, j - n + r), min(j, r) + 1):
                    for m in range(max(l, k - n + r), k + l - j + 1):
                        wc = w_coeffs.get((j - l, k - m))
                        if wc:
                            acc += int_binom(r, l) * int_binom(m - 1, m - l) * wc
                if acc:
                    out = out + acc * _X ** j * _Y ** k
        return out

    return rec(t.root)


def k_tn_closed(n: int) -> MultiPoly:
    """Closed form of K(X, Y) for the fan arbor t_n; the division by 1 - Y
    must be exact."""
    if n < 1:
        raise ValueError("n >= 1 required")
    bracket = _X * _Y ** 2 * ((1 + _X * _Y) ** (n - 1) - (_Y * (1 + _X)) ** (n - 1))
    return (1 + _X * _Y) ** n + bracket.exact_div(1 - _Y)


def m_triangle(t: Arbor) -> MultiPoly:
    """Moebius triangle via the substitution X -> 1 - 1/X, Y -> X*Y in k_poly.

    The substitution is Laurent in X; all negative powers must cancel, which
    the substitution machinery asserts by an exact division.
    """
    return k_poly(t).subs({"X": (_X - 1, _X), "Y": _X * _Y})


def m_tn_closed(n: int) -> MultiPoly:
    """Closed form of the M-triangle for t_n.

    With A = 1 + XY - Y and B = 2XY - Y, the result is A^n plus
    (X^2 Y^2 - X Y^2)(A^(n-1) - B^(n-1)) / (1 - XY); combining the two
    fraction terms first keeps everything polynomial.
    """
    if n < 1:
        raise ValueError("n >= 1 required")
    a = 1 + _X * _Y - _Y
    b = 2 * _X * _Y - _Y
    numer = (_X ** 2 * _Y ** 2 - _X * _Y ** 2) * (a ** (n - 1) - b ** (n - 1))
    return a ** n + numer.exact_div(1 - _X * _Y)


# -- Ehrhart ---------------------------------------------------------------------

def ehrhart(t: Arbor) -> MultiPoly:
    """Lattice-point counting polynomial, from exact counts at u = 0..n+1.

    The first n+1 counts determine the degree-n polynomial; the count at
    u = n+1 is replayed as an over-determination check.
    """
    n = t.size
    samples = [(u, oracle.count_points(t, u)) for u in range(n + 2)]
    return lagrange_interpolate(samples, degree=n, var="u")


def ehrhart_tn_closed(n: int) -> MultiPoly:
    """Closed form (u+1)^(n-1) * (u(n+1)/2 + 1) for the fan arbor t_n."""
    if n < 1:
        raise ValueError("n >= 1 required")
    return (_U + 1) ** (n - 1) * (_U * Fraction(n + 1, 2) + 1)


def ehrhart_tn_alternating(n: int) -> MultiPoly:
    """Inclusion-exclusion form: sum of (-1)^j binom(n-1, j) binom((n-j)(u+1), n)."""
    if n < 1:
        raise ValueError("n >= 1 required")
    acc = MultiPoly.zero()
    for j in range(n):
        sign = -1 if j % 2 else 1
        acc = acc + sign * int_binom(n - 1, j) * binom_poly((n - j) * (_U + 1), n)
    return acc


# -- Laplace transform --------------------------------------------------------------

def truncate_laplace(p: MultiPoly, n: int) -> MultiPoly:
    """Restrict the density behind a Laplace-transform polynomial to [0, n].

    Acts linearly on monomials V^(k+1) E^l: the image is 0 when l >= n, and
    otherwise subtracts the boundary corrections
    sum_j (n-l)^(k-j)/(k-j)! * V^(j+1) E^n.  Every monomial must carry a
    positive V-degree.
    """
    extra = p.variables_used() - {"E", "V"}
    if extra:
        raise ValueError(f"expected a polynomial in E and V only, found {sorted(extra)}")
    i_e, i_v = VARIABLES.index("E"), VARIABLES.index("V")
    out = MultiPoly.zero()
    for exps, coeff in p.terms.items():
        vdeg = exps[i_v]
        edeg = exps[i_e]
        if vdeg < 1:
            raise ValueError("every monomial must have V-degree >= 1")
        if edeg >= n:
            continue
        k = vdeg - 1
        term = MultiPoly.monomial(exps, coeff)
        for j in range(k + 1):
            corr = coeff * Fraction((n - edeg) ** (k - j), factorial(k - j))
            term = term - corr * _V ** (j + 1) * _E ** n
        out = out + term
    return out


def laplace(t: Arbor) -> MultiPoly:
    """Laplace transform of the volume function, encoded in E = e^-v, V = 1/v.

    A size-1 arbor gives V - V*E; otherwise the children's transforms are
    multiplied together with the truncated V^r and the product is truncated
    again, both times at the current sub-tree size.
    """

    def rec(vid) -> MultiPoly:
        n = t.subtree_size(vid)
        r = len(t.vertices[vid])
        if n == 1:
            return _V - _V * _E
        prod = truncate_laplace(_V ** r, n)
        for child in t.children[vid]:
            prod = prod * rec(child)
        return truncate_laplace(prod, n)

    return rec(t.root)


def laplace_tn_closed(n: int) -> MultiPoly:
    """Closed form V^n (1-E)^(n-1) - V E^n for the fan arbor t_n."""
    if n < 1:
        raise ValueError("n >= 1 required")
    return _V ** n * (1 - _E) ** (n - 1) - _V * _E ** n


def volume(t: Arbor) -> Fraction:
    """Volume of the tree polytope: the constant Laurent coefficient of the
    Laplace transform.  A negative Laurent degree would mean the transform
    is not entire and is reported as a contract violation."""
    series = laplace_laurent(laplace(t), 0)
    if series.min_degree < 0:
        raise ValueError("Laplace transform has negative Laurent degree")
    return series.constant_term


def laplace_series(t: Arbor, order: int) -> LaurentSeries:
    """Laurent window of the Laplace transform, for inspection and tests."""
    return laplace_laurent(laplace(t), order)


# -- bundle ----------------------------------------------------------------------

INVARIANT_NAMES = ("zeta", "k", "m", "ehrhart", "laplace", "volume")


@dataclass
class InvariantBundle:
    """Requested invariants of one arbor; unrequested fields stay None."""

    arbor: Arbor
    zeta: MultiPoly | None = None
    k: MultiPoly | None = None
    m: MultiPoly | None = None
    ehrhart: MultiPoly | None = None
    laplace: MultiPoly | None = None
    volume: Fraction | None = None


def compute_invariants(t: Arbor, names=INVARIANT_NAMES) -> InvariantBundle:
    bundle = InvariantBundle(arbor=t)
    for name in names:
        if name not in INVARIANT_NAMES:
            raise ValueError(f"unknown invariant {name!r}")
        if name == "zeta":
            bundle.zeta = zeta_poly(t)
        elif name == "k":
            bundle.k = k_poly(t)
        elif name == "m":
            bundle.m = m_triangle(t)
        elif name == "ehrhart":
            bundle.ehrhart = ehrhart(t)
        elif name == "laplace":
            bundle.laplace = laplace(t)
        elif name == "volume":
            bundle.volume = volume(t)
    return bundle


__all__ = [
    "InvariantBundle",
    "compute_invariants",
    "ehrhart",
    "ehrhart_tn_alternating",
    "ehrhart_tn_closed",
    "k_poly",
    "k_tn_closed",
    "laplace",
    "laplace_series",
    "laplace_tn_closed",
    "m_triangle",
    "m_tn_closed",
    "make_tn",
    "truncate_laplace",
    "volume",
    "zeta_poly",
    "zeta_tn_closed",
]
