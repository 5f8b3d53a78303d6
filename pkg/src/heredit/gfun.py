"""The g function of a CRG: exact minimization of x^T M x over the
probability simplex, the closed form for all-gray CRGs, p-cores, and
weighted degree statistics of optimal weight vectors.

Everything here is exact rational arithmetic.  The solver enumerates
candidate supports; for each support it solves the equality-constrained
stationarity system by Gaussian elimination over fractions and keeps the
feasible solutions.  Singleton supports always solve, so the minimum is
always attained, and a global minimizer with inclusion-minimal support
always has a uniquely solvable system, which makes skipping singular
systems safe.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Mapping

from .crg import CRG, sub_crgs
from .errors import ValidationError
from .rationals import format_fraction

MAX_QP_SIZE = 12
MAX_PCORE_SIZE = 10

ZERO = Fraction(0)
ONE = Fraction(1)


@dataclass(frozen=True)
class PMatrix:
    """The cost matrix of a CRG at density p.

    Diagonal entries are p for white vertices and 1-p for black ones;
    off-diagonal entries are p / 1-p / 0 for white / black / gray edges.
    """

    p: Fraction
    entries: tuple[tuple[Fraction, ...], ...]

    @property
    def dimension(self) -> int:
        return len(self.entries)


@dataclass(frozen=True)
class GResult:
    """Optimal value of the simplex program together with one witness.

    ``weights`` has one entry per CRG vertex (zeros off the support),
    sums to one, and satisfies ``value == weights^T M weights`` exactly.
    ``support`` lists the vertices with positive weight.
    """

    value: Fraction
    weights: tuple[Fraction, ...]
    support: tuple[int, ...]

    def as_json_dict(self) -> dict:
        return {
            "value": format_fraction(self.value),
            "weights": [format_fraction(w) for w in self.weights],
            "support": list(self.support),
        }


def build_matrix(k: CRG, p: Fraction) -> PMatrix:
    if not 0 <= p <= 1:
        raise ValidationError(f"p must lie in [0,1], got {p}")
    p = Fraction(p)
    one_minus = 1 - p
    by_color = {"W": p, "B": one_minus, "G": ZERO}
    rows = []
    for i in range(k.m):
        row = []
        for j in range(k.m):
            if i == j:
                row.append(p if k.vcolors[i] == "W" else one_minus)
            else:
                row.append(by_color[k.edge_color(i, j)])
        rows.append(tuple(row))
    return PMatrix(p, tuple(rows))


def _solve_unique(a: list[list[Fraction]], b: list[Fraction]) -> list[Fraction] | None:
    """Solve a square system exactly; None unless the solution is unique."""
    n = len(a)
    for col in range(n):
        piv = next((r for r in range(col, n) if a[r][col] != 0), None)
        if piv is None:
            return None  # singular: no solution or infinitely many
        if piv != col:
            a[col], a[piv] = a[piv], a[col]
            b[col], b[piv] = b[piv], b[col]
        for r in range(col + 1, n):
            if a[r][col] == 0:
                continue
            factor = a[r][col] / a[col][col]
            for c in range(col, n):
                a[r][c] -= factor * a[col][c]
            b[r] -= factor * b[col]
    x = [ZERO] * n
    for r in range(n - 1, -1, -1):
        acc = b[r]
        for c in range(r + 1, n):
            acc -= a[r][c] * x[c]
        x[r] = acc / a[r][r]
    return x


def _stationary_point(
    matrix: tuple[tuple[Fraction, ...], ...], support: tuple[int, ...]
) -> list[Fraction] | None:
    """Unique solution of M_S x = lam*1, 1^T x = 1 on the support, if any."""
    t = len(support)
    a = [
        [matrix[u][v] for v in support] + [Fraction(-1)]
        for u in support
    ]
    a.append([ONE] * t + [ZERO])
    b = [ZERO] * t + [ONE]
    sol = _solve_unique(a, b)
    if sol is None:
        return None
    return sol[:t]


def g_value(k: CRG, p: Fraction) -> GResult:
    """Minimize x^T M_K(p) x over the probability simplex, exactly.

    Ties between optimal supports break toward the smallest support size,
    then the lexicographically smallest vertex set, so the witness is
    deterministic.
    """
    if k.m > MAX_QP_SIZE:
        raise ValidationError(f"g_value supports at most {MAX_QP_SIZE} vertices, got {k.m}")
    return _g_value_cached(k, Fraction(p))


@lru_cache(maxsize=None)
def _g_value_cached(k: CRG, p: Fraction) -> GResult:
    matrix = build_matrix(k, p).entries
    m = k.m
    best_key: tuple | None = None
    best: GResult | None = None
    for size in range(1, m + 1):
        for support in itertools.combinations(range(m), size):
            x = _stationary_point(matrix, support)
            if x is None or any(xi < 0 for xi in x):
                continue
            value = ZERO
            for a, u in enumerate(support):
                row = matrix[u]
                for b, v in enumerate(support):
                    value += row[v] * x[a] * x[b]
            weights = [ZERO] * m
            for a, u in enumerate(support):
                weights[u] = x[a]
            positive = tuple(u for u in range(m) if weights[u] > 0)
            key = (value, len(positive), positive)
            if best_key is None or key < best_key:
                best_key = key
                best = GResult(value, tuple(weights), positive)
    assert best is not None  # singleton supports always solve
    return best


def closed_form_gray(r: int, s: int, p: Fraction) -> Fraction:
    """g of the all-gray CRG K(r, s): p(1-p) / (r(1-p) + sp).

    At the two degenerate corners (p=0 with r=0, and p=1 with s=0) the
    formula reads 0/0; the continuous extension along p (1/s resp. 1/r)
    is returned there, which is what the quadratic program evaluates to.
    """
    if r < 0 or s < 0 or r + s < 1:
        raise ValidationError(f"K(r,s) needs r,s >= 0 and r+s >= 1, got ({r},{s})")
    p = Fraction(p)
    if not 0 <= p <= 1:
        raise ValidationError(f"p must lie in [0,1], got {p}")
    den = r * (1 - p) + s * p
    if den == 0:
        return Fraction(1, s) if p == 0 else Fraction(1, r)
    return p * (1 - p) / den


def is_p_core(k: CRG, p: Fraction) -> bool:
    """True when every proper sub-CRG has strictly larger g at this p."""
    if k.m > MAX_PCORE_SIZE:
        raise ValidationError(f"is_p_core supports at most {MAX_PCORE_SIZE} vertices, got {k.m}")
    gk = g_value(k, p).value
    for sub in sub_crgs(k):
        if g_value(sub, p).value <= gk:
            return False
    return True


@dataclass(frozen=True)
class VertexStats:
    """Weighted degree report for one vertex under an optimal weight vector.

    The vertex's own weight counts toward the class matching its vertex
    color (whites into ``white_weight``, blacks into ``black_weight``);
    under that convention the three weighted degrees sum to exactly 1.
    """

    weight: Fraction
    gray_weight: Fraction
    white_weight: Fraction
    black_weight: Fraction
    gray_degree: int


@dataclass(frozen=True)
class WeightStats:
    vertices: tuple[VertexStats, ...]
    gray_codegree_weight: Mapping[tuple[int, int], Fraction]
    gray_codegree_count: Mapping[tuple[int, int], int]


def weight_stats(k: CRG, res: GResult) -> WeightStats:
    """Per-vertex and pairwise gray-degree statistics for a GResult of ``k``."""
    if len(res.weights) != k.m:
        raise ValidationError("weight vector length does not match the CRG")
    per_vertex = []
    for v in range(k.m):
        sums = {"G": ZERO, "W": ZERO, "B": ZERO}
        gray_degree = 0
        for u in range(k.m):
            if u == v:
                continue
            color = k.edge_color(v, u)
            sums[color] += res.weights[u]
            if color == "G":
                gray_degree += 1
        sums[k.vcolors[v]] += res.weights[v]
        per_vertex.append(
            VertexStats(res.weights[v], sums["G"], sums["W"], sums["B"], gray_degree)
        )
    codegree_weight: dict[tuple[int, int], Fraction] = {}
    codegree_count: dict[tuple[int, int], int] = {}
    for v in range(k.m):
        for w in range(v + 1, k.m):
            total = ZERO
            count = 0
            for u in range(k.m):
                if u in (v, w):
                    continue
                if k.edge_color(u, v) == "G" and k.edge_color(u, w) == "G":
                    total += res.weights[u]
                    count += 1
            codegree_weight[(v, w)] = total
            codegree_count[(v, w)] = count
    return WeightStats(tuple(per_vertex), codegree_weight, codegree_count)
