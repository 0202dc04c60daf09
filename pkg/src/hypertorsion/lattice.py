"""Exact convexity test for finite sets of lattice points.

A set ``S`` is convex when it contains every lattice point of its convex
hull.  The test works in the affine hull of ``S``: points are projected
onto a set of pivot coordinates (an affine isomorphism over Q), the hull
facets are found with integer normals, and every integer point of the
projected bounding box inside all facets is lifted back and checked.
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from math import comb, gcd
from typing import Iterable, List, Optional, Sequence, Set, Tuple

Vec = Tuple[int, ...]

# beyond this many k-subsets the facets are proposed by qhull, then verified
EXACT_FACET_LIMIT = 20000


def int_det(rows: Sequence[Sequence[int]]) -> int:
    """Integer determinant by fraction-free Bareiss elimination."""
    a = [list(r) for r in rows]
    n = len(a)
    if n == 0:
        return 1
    sign, prev = 1, 1
    for k in range(n - 1):
        if a[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if a[i][k]), None)
            if swap is None:
                return 0
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def _pivot_basis(diffs: List[Vec], dim: int, max_rank: Optional[int] = None) -> Tuple[List[int], List[Vec]]:
    """Pivot columns and independent rows of the difference matrix."""
    rows: List[List[int]] = []
    chosen: List[Vec] = []
    pivots: List[int] = []
    limit = dim if max_rank is None else max_rank
    for d in diffs:
        r = list(d)
        for pr, pc in zip(rows, pivots):
            if r[pc]:
                f, g = pr[pc], r[pc]
                r = [x * f - g * y for x, y in zip(r, pr)]
        nz = next((c for c in range(dim) if r[c]), None)
        if nz is not None:
            g = 0
            for x in r:
                g = gcd(g, x)
            rows.append([x // g for x in r])
            pivots.append(nz)
            chosen.append(d)
            if len(rows) == limit:
                break
    return pivots, chosen


def _solve(mat: List[List[Fraction]], rhs: List[Fraction]) -> List[Fraction]:
    n = len(mat)
    a = [row[:] + [b] for row, b in zip(mat, rhs)]
    for c in range(n):
        p = next(i for i in range(c, n) if a[i][c])
        a[c], a[p] = a[p], a[c]
        for i in range(n):
            if i != c and a[i][c]:
                f = a[i][c] / a[c][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[c])]
    return [a[i][n] / a[i][i] for i in range(n)]


def _normal(points: Sequence[Vec]) -> Optional[Vec]:
    """Integer normal of the hyperplane through ``k`` points in Z^k."""
    k = len(points[0])
    base = points[0]
    u = [[p[j] - base[j] for j in range(k)] for p in points[1:]]
    a = []
    for j in range(k):
        minor = [[row[c] for c in range(k) if c != j] for row in u]
        a.append((-1) ** j * int_det(minor))
    if not any(a):
        return None
    g = 0
    for x in a:
        g = gcd(g, abs(x))
    return tuple(x // g for x in a)


def _facets_exact(pts: List[Vec]) -> Set[Tuple[Vec, int]]:
    k = len(pts[0])
    out = set()
    for sub in itertools.combinations(range(len(pts)), k):
        a = _normal([pts[i] for i in sub])
        if a is None:
            continue
        b = sum(x * y for x, y in zip(a, pts[sub[0]]))
        vals = [sum(x * y for x, y in zip(a, p)) for p in pts]
        if all(v <= b for v in vals):
            out.add((a, b))
        elif all(v >= b for v in vals):
            out.add((tuple(-x for x in a), -b))
    return out


def _supporting(pts: List[Vec], on: Sequence[int]) -> Optional[Tuple[Vec, int]]:
    """Exact supporting hyperplane through the points ``on``, if they span one."""
    k = len(pts[0])
    base = pts[on[0]]
    diffs = [tuple(x - y for x, y in zip(pts[i], base)) for i in on[1:]]
    _, basis = _pivot_basis(diffs, k, k - 1)
    if len(basis) != k - 1:
        return None
    a = _normal([base] + [tuple(x + y for x, y in zip(base, d)) for d in basis])
    if a is None:
        return None
    b = sum(x * y for x, y in zip(a, base))
    vals = [sum(x * y for x, y in zip(a, p)) for p in pts]
    if all(v <= b for v in vals):
        return a, b
    if all(v >= b for v in vals):
        return tuple(-x for x in a), -b
    return None


def _facets_qhull(pts: List[Vec]) -> Set[Tuple[Vec, int]]:
    """Facet hyperplanes proposed by qhull, each re-derived and checked exactly.

    Proposals that fail the exact check are dropped, so the result is a set
    of valid inequalities, not necessarily all of them.
    """
    import numpy as np
    from scipy.spatial import ConvexHull

    arr = np.array(pts, dtype=float)
    out = set()
    try:
        hull = ConvexHull(arr)
    except Exception:
        return out
    scale = max(1.0, float(np.abs(arr).max()))
    for eq in np.unique(np.round(hull.equations, 9), axis=0):
        resid = arr @ eq[:-1] + eq[-1]
        on = [int(i) for i in np.flatnonzero(np.abs(resid) < 1e-7 * scale)]
        if len(on) >= len(pts[0]):
            f = _supporting(pts, on)
            if f is not None:
                out.add(f)
    return out


def _in_hull(pts: List[Vec], y: Vec) -> Optional[bool]:
    """Exact certificate that ``y`` lies in the hull of ``pts``.

    An LP proposes a convex combination; its support is re-solved in exact
    arithmetic.  Returns None when no certificate could be produced.
    """
    import numpy as np
    from scipy.optimize import linprog

    n, k = len(pts), len(y)
    a_eq = np.vstack([np.array(pts, dtype=float).T, np.ones(n)])
    b_eq = np.array(list(y) + [1], dtype=float)
    res = linprog(np.zeros(n), A_eq=a_eq, b_eq=b_eq, bounds=(0, None), method="highs")
    if res.status == 2:
        return False
    if res.status != 0:
        return None
    support = [i for i in np.argsort(-res.x) if res.x[i] > 1e-9][: k + 1]
    # exact least-squares-free check: affinely independent support, solve the square system
    chosen = []
    for i in support:
        trial = chosen + [i]
        diffs = [tuple(x - z for x, z in zip(pts[j], pts[trial[0]])) for j in trial[1:]]
        if len(_pivot_basis(diffs, k)[1]) == len(trial) - 1:
            chosen = trial
    if not chosen:
        return None
    base = pts[chosen[0]]
    diffs = [tuple(x - z for x, z in zip(pts[j], base)) for j in chosen[1:]]
    rhs = [y[c] - base[c] for c in range(k)]
    if not diffs:
        return tuple(y) == base or None
    pivots, _ = _pivot_basis(diffs, k)
    m = len(diffs)
    rows = sorted(pivots)
    lam = _solve([[Fraction(diffs[i][c]) for i in range(m)] for c in rows], [Fraction(rhs[c]) for c in rows])
    if any(sum(l * d[c] for l, d in zip(lam, diffs)) != rhs[c] for c in range(k)):
        return None
    if all(l >= 0 for l in lam) and sum(lam) <= 1:
        return True
    return None


def is_convex_lattice_set(s: Iterable[Sequence[int]]) -> bool:
    pts = sorted({tuple(int(x) for x in p) for p in s})
    if not pts:
        return True
    dim = len(pts[0])
    if any(len(p) != dim for p in pts):
        raise ValueError("points of different dimensions")
    if len(pts) == 1:
        return True
    base = pts[0]
    diffs = [tuple(x - y for x, y in zip(p, base)) for p in pts[1:]]
    pivots, basis = _pivot_basis(diffs, dim)
    k = len(pivots)
    order = sorted(range(k), key=lambda i: pivots[i])
    pivots = [pivots[i] for i in order]
    basis = [basis[i] for i in order]
    # lift: x = base + sum_i lam_i basis_i, with lam solving B^T lam = y - base[P]
    bmat = [[Fraction(basis[i][c]) for i in range(k)] for c in pivots]

    def lift(y: Vec) -> Optional[Vec]:
        lam = _solve(bmat, [Fraction(y[j] - base[pivots[j]]) for j in range(k)])
        x = [Fraction(base[c]) + sum(l * b[c] for l, b in zip(lam, basis)) for c in range(dim)]
        if any(v.denominator != 1 for v in x):
            return None
        return tuple(int(v) for v in x)

    proj = [tuple(p[c] for c in pivots) for p in pts]
    pset = set(pts)
    # with every facet known, any lattice point inside them is in the hull;
    # with a partial (but exactly valid) set, a hit still needs a certificate
    complete = True
    if k == 1:
        facets = {((1,), max(proj)[0]), ((-1,), -min(proj)[0])}
    elif comb(len(proj), k) <= EXACT_FACET_LIMIT:
        facets = _facets_exact(proj)
    else:
        facets, complete = _facets_qhull(proj), False
    lows = [min(p[j] for p in proj) for j in range(k)]
    highs = [max(p[j] for p in proj) for j in range(k)]
    projset = set(proj)
    for y in itertools.product(*(range(lo, hi + 1) for lo, hi in zip(lows, highs))):
        if y in projset:
            continue
        if all(sum(a * v for a, v in zip(n, y)) <= b for n, b in facets):
            x = lift(y)
            if x is None or x in pset:
                continue
            if complete:
                return False
            inside = _in_hull(proj, y)
            if inside is None:
                raise ArithmeticError(f"could not certify hull membership of {x}")
            if inside:
                return False
    return True
