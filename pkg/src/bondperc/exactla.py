"""Exact linear algebra over the rationals.

Ranks and nullspaces are computed by fraction-free (Bareiss) elimination
over arbitrary-precision integers: intermediate entries stay integral
(they are minors of the input), divisions are exact, and the reported
dimension is certified rather than estimated.  Floating point appears
nowhere.  Rational inputs are admitted by scaling each row to integers,
which changes neither rank nor nullspace.

Also hosts the small exact polynomial toolbox (evaluation, product,
Lagrange interpolation) used by the witness-space constructions.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm

__all__ = [
    "rank",
    "row_echelon",
    "nullspace",
    "nullspace_int",
    "solve",
    "poly_eval",
    "poly_mul",
    "poly_scale",
    "lagrange_interpolation",
]

Row = list[int]


def _int_rows(rows) -> list[Row]:
    """Copy rows, scaling any rational row by the lcm of its denominators."""
    out: list[Row] = []
    for row in rows:
        row = list(row)
        if any(isinstance(x, Fraction) for x in row):
            scale = lcm(*(Fraction(x).denominator for x in row)) if row else 1
            row = [int(x * scale) for x in row]
        out.append([int(x) for x in row])
    return out


def row_echelon(rows) -> tuple[list[Row], list[int]]:
    """Fraction-free row echelon form.

    Returns ``(echelon, pivot_cols)`` where ``echelon`` holds the eliminated
    integer rows and ``pivot_cols`` the pivot column of each nonzero row in
    order.  One-step Bareiss updates keep every intermediate entry an exact
    minor of the input; the division by the previous pivot is exact.
    """
    m = _int_rows(rows)
    if not m:
        return [], []
    ncols = len(m[0])
    pivots: list[int] = []
    prev = 1
    t = 0
    for c in range(ncols):
        pr = next((i for i in range(t, len(m)) if m[i][c] != 0), None)
        if pr is None:
            continue
        m[t], m[pr] = m[pr], m[t]
        piv = m[t][c]
        for i in range(t + 1, len(m)):
            # every row below is updated, mic == 0 included: the piv/prev
            # rescaling keeps entries equal to minors, so later divisions
            # stay exact
            mic = m[i][c]
            row_i, row_t = m[i], m[t]
            for j in range(c + 1, ncols):
                row_i[j] = (piv * row_i[j] - mic * row_t[j]) // prev
            row_i[c] = 0
        pivots.append(c)
        prev = piv
        t += 1
        if t == len(m):
            break
    return m[:t], pivots


def rank(rows) -> int:
    """Exact rank of a matrix given as an iterable of rows (int/Fraction)."""
    return len(row_echelon(rows)[1])


def nullspace(rows, ncols: int | None = None) -> list[list[Fraction]]:
    """Basis of the right nullspace ``{x : A x = 0}``, one rational vector
    per free column (that column's entry is 1, other free entries 0)."""
    rows = list(rows)
    if ncols is None:
        if not rows:
            raise ValueError("ncols required for an empty matrix")
        ncols = len(rows[0])
    echelon, pivots = row_echelon(rows)
    free = [c for c in range(ncols) if c not in set(pivots)]
    basis: list[list[Fraction]] = []
    for f in free:
        x = [Fraction(0)] * ncols
        x[f] = Fraction(1)
        for i in reversed(range(len(pivots))):
            pc = pivots[i]
            s = sum((Fraction(echelon[i][j]) * x[j] for j in range(pc + 1, ncols)),
                    Fraction(0))
            x[pc] = -s / echelon[i][pc]
        basis.append(x)
    return basis


def _primitive(vec: list[Fraction]) -> list[int]:
    denom = lcm(*(x.denominator for x in vec)) if vec else 1
    ints = [int(x * denom) for x in vec]
    g = 0
    for x in ints:
        g = gcd(g, x)
    return [x // g for x in ints] if g > 1 else ints


def nullspace_int(rows, ncols: int | None = None) -> list[list[int]]:
    """As :func:`nullspace` but with each basis vector scaled to a primitive
    integer vector."""
    return [_primitive(v) for v in nullspace(rows, ncols)]


def solve(rows, rhs) -> list[Fraction] | None:
    """One exact solution of ``A x = b`` (free variables set to 0), or
    ``None`` when the system is inconsistent."""
    rows = list(rows)
    rhs = list(rhs)
    if len(rows) != len(rhs):
        raise ValueError("matrix/right-hand-side size mismatch")
    if not rows:
        return []
    ncols = len(rows[0])
    aug = [[Fraction(x) for x in row] + [Fraction(b)] for row, b in zip(rows, rhs)]
    pivots: list[int] = []
    t = 0
    for c in range(ncols):
        pr = next((i for i in range(t, len(aug)) if aug[i][c] != 0), None)
        if pr is None:
            continue
        aug[t], aug[pr] = aug[pr], aug[t]
        piv = aug[t][c]
        for i in range(len(aug)):
            if i != t and aug[i][c] != 0:
                f = aug[i][c] / piv
                for j in range(c, ncols + 1):
                    aug[i][j] -= f * aug[t][j]
        pivots.append(c)
        t += 1
        if t == len(aug):
            break
    for i in range(t, len(aug)):
        if aug[i][ncols] != 0:
            return None
    x = [Fraction(0)] * ncols
    for i, pc in enumerate(pivots):
        x[pc] = aug[i][ncols] / aug[i][pc]
    return x


# ======================================================================
# Exact univariate polynomials (coefficient lists, constant term first)
# ======================================================================


def poly_eval(coeffs, x) -> Fraction:
    acc = Fraction(0)
    for c in reversed(list(coeffs)):
        acc = acc * x + c
    return acc


def poly_mul(a, b) -> list[Fraction]:
    a, b = list(a), list(b)
    if not a or not b:
        return []
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] += ai * bj
    return out


def poly_scale(a, s) -> list[Fraction]:
    s = Fraction(s)
    return [Fraction(c) * s for c in a]


def lagrange_interpolation(points) -> list[Fraction]:
    """Coefficients of the unique polynomial of degree < len(points) through
    the given ``(x, y)`` pairs; the nodes must be pairwise distinct."""
    pts = [(Fraction(x), Fraction(y)) for x, y in points]
    xs = [x for x, _ in pts]
    if len(set(xs)) != len(xs):
        raise ValueError("interpolation nodes must be distinct")
    out = [Fraction(0)] * max(len(pts), 1)
    for i, (xi, yi) in enumerate(pts):
        if yi == 0:
            continue
        basis = [Fraction(1)]
        denom = Fraction(1)
        for j, (xj, _) in enumerate(pts):
            if j != i:
                basis = poly_mul(basis, [-xj, Fraction(1)])
                denom *= xi - xj
        for k, c in enumerate(poly_scale(basis, yi / denom)):
            out[k] += c
    while len(out) > 1 and out[-1] == 0:
        out.pop()
    if out == [Fraction(0)]:
        return []
    return out
