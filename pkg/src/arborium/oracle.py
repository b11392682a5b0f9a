"""Brute-force ground truth, independent of the recursion machinery.

Lattice points of dilated tree polytopes are enumerated directly from the
defining inequalities; the point poset, multichain counts, and Moebius
tables are computed from first principles.  Everything is exact: Python
integers, plus numpy in bool/int64 roles only, with explicit bounds that
rule out int64 overflow before numpy is trusted.
"""

from __future__ import annotations

from fractions import Fraction

import numpy as np

from .algebra import MultiPoly, lagrange_interpolate
from .arbor import Arbor, constraints

# Posets above this size use int64 matrix-vector products for multichain
# counting, but only when the counting bound provably fits in int64.
_MATVEC_LIMIT = 600


def _budget_tables(t: Arbor, u: int):
    cons = constraints(t)
    budgets = [u * c.bound for c in cons]
    per_label = [
        [ci for ci, c in enumerate(cons) if lab in c.support]
        for lab in range(1, t.size + 1)
    ]
    return budgets, per_label


def enumerate_points(t: Arbor, u: int) -> list:
    """All integer points of the u-th dilate, in lexicographic order."""
    if u < 0:
        raise ValueError("dilation factor must be >= 0")
    n = t.size
    budgets, per_label = _budget_tables(t, u)
    point = [0] * n
    out = []

    def rec(i):
        if i == n:
            out.append(tuple(point))
            return
        cap = min(budgets[ci] for ci in per_label[i])
        for val in range(cap + 1):
            point[i] = val
            for ci in per_label[i]:
                budgets[ci] -= val
            rec(i + 1)
            for ci in per_label[i]:
                budgets[ci] += val
        point[i] = 0

    rec(0)
    return out


def count_points(t: Arbor, u: int) -> int:
    """|u-th dilate ∩ Z^n| without materializing the points."""
    if u < 0:
        raise ValueError("dilation factor must be >= 0")
    n = t.size
    budgets, per_label = _budget_tables(t, u)

    def rec(i):
        cap = min(budgets[ci] for ci in per_label[i])
        if i == n - 1:
            return cap + 1
        total = 0
        for val in range(cap + 1):
            for ci in per_label[i]:
                budgets[ci] -= val
            total += rec(i + 1)
            for ci in per_label[i]:
                budgets[ci] += val
        return total

    return rec(0)


class Poset:
    """Lattice points of the u=1 dilate under coordinatewise order.

    elements are coordinate tuples (lex order), heights are coordinate
    sums, and leq is a boolean matrix with leq[a, b] iff a <= b.
    """

    __slots__ = ("elements", "heights", "leq", "size")

    def __init__(self, elements, heights, leq):
        self.elements = elements
        self.heights = heights
        self.leq = leq
        self.size = len(elements)

    def below(self, b: int) -> list:
        return [int(a) for a in np.nonzero(self.leq[:, b])[0]]

    def above(self, a: int) -> list:
        return [int(b) for b in np.nonzero(self.leq[a, :])[0]]


def build_poset(t: Arbor) -> Poset:
    points = enumerate_points(t, 1)
    n = len(points)
    arr = np.array(points, dtype=np.int64).reshape(n, t.size)
    heights = [int(h) for h in arr.sum(axis=1)]
    leq = np.empty((n, n), dtype=bool)
    chunk = max(1, (1 << 22) // max(1, n * t.size))
    for start in range(0, n, chunk):
        stop = min(n, start + chunk)
        leq[start:stop] = (arr[start:stop, None, :] <= arr[None, :, :]).all(axis=2)
    return Poset(points, heights, leq)


# -- multichain counting -------------------------------------------------------

def multichain_weight_counts(P: Poset, m: int) -> dict:
    """Weighted multichain census for one integer m >= 2.

    Returns {height h: number of multichains e_1 <= ... <= e_{m-1} whose top
    element has height h}.  Counting applies the zeta matrix m-2 times to the
    all-ones vector; counts are exact Python integers unless the int64 bound
    |P|^(m-1) provably fits, in which case numpy may be used.
    """
    if m < 2:
        raise ValueError("multichains need m >= 2")
    applications = m - 2
    if P.size > _MATVEC_LIMIT and P.size ** (m - 1) < 2 ** 62:
        vec = np.ones(P.size, dtype=np.int64)
        zmat = P.leq.astype(np.int64)
        for _ in range(applications):
            vec = vec @ zmat
        totals = [int(x) for x in vec]
    else:
        below = [P.below(b) for b in range(P.size)]
        totals = [1] * P.size
        for _ in range(applications):
            totals = [sum(totals[a] for a in below[b]) for b in range(P.size)]
    counts: dict = {}
    for b, c in enumerate(totals):
        counts[P.heights[b]] = counts.get(P.heights[b], 0) + c
    return counts


def zeta_oracle(t: Arbor) -> MultiPoly:
    """Height-weighted zeta polynomial recovered from raw multichain counts.

    Counts weighted multichains for m = 2..n+3 and interpolates each
    X-coefficient as a degree-<=n polynomial in u; the spare sample is an
    interpolation consistency check.
    """
    n = t.size
    P = build_poset(t)
    X = MultiPoly.variable("X")
    per_m = {m: multichain_weight_counts(P, m) for m in range(2, n + 4)}
    result = MultiPoly.zero()
    for j in range(n + 1):
        samples = [(m, per_m[m].get(j, 0)) for m in range(2, n + 4)]
        result = result + lagrange_interpolate(samples, degree=n, var="u") * X ** j
    return result


# -- Moebius function ----------------------------------------------------------

def mobius_oracle(P: Poset) -> dict:
    """Sparse Moebius table {(a, b): mu(a, b)}; absent comparable pairs are 0.

    For each bottom element a, the defining recursion
    mu(a, b) = -sum_{a <= e < b} mu(a, e) is replayed over the up-set of a
    in height order.  Zeros are never stored, which keeps the inner sums
    proportional to the nonzero support of each row.
    """
    heights = P.heights
    above = [set(np.nonzero(P.leq[a])[0].tolist()) for a in range(P.size)]
    mu: dict = {}
    for a in range(P.size):
        ups = sorted(above[a], key=lambda i: heights[i])
        row = {a: 1}
        for b in ups[1:]:
            s = 0
            for e, val in row.items():
                if e != b and b in above[e]:
                    s += val
            if s:
                row[b] = -s
        for b, val in row.items():
            mu[(a, b)] = val
    return mu


def m_triangle_oracle(P: Poset) -> MultiPoly:
    """Direct sum of mu(a, b) * X^ht(a) * Y^ht(b) over comparable pairs."""
    X = MultiPoly.variable("X")
    Y = MultiPoly.variable("Y")
    hmax = max(P.heights)
    table = [[0] * (hmax + 1) for _ in range(hmax + 1)]
    for (a, b), val in mobius_oracle(P).items():
        table[P.heights[a]][P.heights[b]] += val
    result = MultiPoly.zero()
    for ha, row in enumerate(table):
        for hb, val in enumerate(row):
            if val:
                result = result + Fraction(val) * X ** ha * Y ** hb
    return result


# -- direct statistic sums -------------------------------------------------------

def k_oracle(t: Arbor) -> MultiPoly:
    """Sum of X^(nonzero coordinates) * Y^(coordinate sum) over the point poset."""
    X = MultiPoly.variable("X")
    Y = MultiPoly.variable("Y")
    counts: dict = {}
    for point in enumerate_points(t, 1):
        key = (sum(1 for x in point if x), sum(point))
        counts[key] = counts.get(key, 0) + 1
    result = MultiPoly.zero()
    for (nz, ht), c in counts.items():
        result = result + Fraction(c) * X ** nz * Y ** ht
    return result


def height_distribution_oracle(t: Arbor, m: int) -> MultiPoly:
    """Points of the m-th dilate weighted by X^height."""
    if m < 1:
        raise ValueError("dilation factor must be >= 1")
    X = MultiPoly.variable("X")
    counts: dict = {}
    for point in enumerate_points(t, m):
        ht = sum(point)
        counts[ht] = counts.get(ht, 0) + 1
    result = MultiPoly.zero()
    for ht, c in counts.items():
        result = result + Fraction(c) * X ** ht
    return result
