"""Exact rational scalars and vectors.

Scalars are :class:`fractions.Fraction` (always canonical, positive
denominator).  Vectors are tuples of fractions.  The helpers here are the
only linear algebra the exact paths use.
"""
from fractions import Fraction
from math import gcd, isqrt

from .errors import DimensionMismatch, InvalidInput

ZERO = Fraction(0)
ONE = Fraction(1)


def q(value):
    """Coerce ``value`` to a Fraction.

    Accepts ints, Fractions, and strings such as ``"3"``, ``"-2/7"``.
    Floats are converted exactly (their binary expansion), which is rarely
    what a caller wants, so string input is preferred.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise InvalidInput(f"not a rational: {value!r}")
    if isinstance(value, (int, float)):
        return Fraction(value)
    if isinstance(value, str):
        try:
            return Fraction(value.strip())
        except (ValueError, ZeroDivisionError) as exc:
            raise InvalidInput(f"not a rational: {value!r}") from exc
    raise InvalidInput(f"not a rational: {value!r}")


def vec(values):
    return tuple(q(v) for v in values)


def fmt(x):
    """Canonical string form ``"p/q"`` or ``"p"``."""
    x = q(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def fmt_vec(v):
    return [fmt(x) for x in v]


def zeros(n):
    return (ZERO,) * n


def unit(n, i):
    return tuple(ONE if k == i else ZERO for k in range(n))


def check_dim(u, v):
    if len(u) != len(v):
        raise DimensionMismatch(f"length {len(u)} != {len(v)}")


def dot(u, v):
    check_dim(u, v)
    return sum((a * b for a, b in zip(u, v) if a and b), ZERO)


def add(u, v):
    check_dim(u, v)
    return tuple(a + b for a, b in zip(u, v))


def sub(u, v):
    check_dim(u, v)
    return tuple(a - b for a, b in zip(u, v))


def scale(c, v):
    return tuple(c * a for a in v)


def neg(v):
    return tuple(-a for a in v)


def lincomb(coeffs, vectors):
    """Sum of ``c * v`` over the zipped pairs."""
    vectors = list(vectors)
    out = [ZERO] * len(vectors[0])
    for c, v in zip(coeffs, vectors):
        if c:
            for i, a in enumerate(v):
                if a:
                    out[i] += c * a
    return tuple(out)


def is_zero(v):
    return all(a == 0 for a in v)


def primitive(v):
    """Positive multiple of ``v`` with coprime integer coordinates."""
    if is_zero(v):
        return tuple(ZERO for _ in v)
    den = 1
    for a in v:
        den = den * a.denominator // gcd(den, a.denominator)
    ints = [int(a * den) for a in v]
    g = 0
    for a in ints:
        g = gcd(g, abs(a))
    return tuple(Fraction(a // g) for a in ints)


def rref(rows, ncols=None):
    """Reduced row echelon form.  Returns ``(rows, pivot_columns)``."""
    m = [list(r) for r in rows]
    if ncols is None:
        ncols = len(m[0]) if m else 0
    pivots = []
    r = 0
    for c in range(ncols):
        if r >= len(m):
            break
        p = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if p is None:
            continue
        m[r], m[p] = m[p], m[r]
        pv = m[r][c]
        m[r] = [a / pv for a in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
    return [tuple(row) for row in m[:r]], pivots


def rank(rows, ncols=None):
    if not rows:
        return 0
    return len(rref(rows, ncols)[1])


def nullspace(rows, n):
    """Basis of ``{x : row . x = 0 for every row}`` in dimension ``n``."""
    if not rows:
        return [unit(n, i) for i in range(n)]
    red, pivots = rref(rows, n)
    free = [c for c in range(n) if c not in pivots]
    basis = []
    for f in free:
        x = [ZERO] * n
        x[f] = ONE
        for row, pc in zip(red, pivots):
            x[pc] = -row[f]
        basis.append(primitive(tuple(x)))
    return basis


def solve_linear(rows, rhs):
    """One solution of ``rows x = rhs`` or ``None`` when inconsistent."""
    n = len(rows[0]) if rows else 0
    aug = [tuple(r) + (b,) for r, b in zip(rows, rhs)]
    red, pivots = rref(aug, n + 1)
    if n in pivots:
        return None
    x = [ZERO] * n
    for row, pc in zip(red, pivots):
        x[pc] = row[n]
    return tuple(x)


def in_span(v, basis):
    if not basis:
        return is_zero(v)
    return rank(list(basis) + [v]) == rank(list(basis))


def sqrt_bounds(x, tol):
    """Rationals ``lo <= sqrt(x) <= hi`` with ``hi - lo <= tol``."""
    x = q(x)
    if x < 0:
        raise ValueError("negative radicand")
    if x == 0:
        return ZERO, ZERO
    tol = q(tol)
    # scale so that 1/s <= tol, then use integer square roots
    s = 1
    while Fraction(1, s) > tol:
        s *= 2
    num = x.numerator * s * s
    den = x.denominator
    r = isqrt(num * den)
    lo = Fraction(r, s * den)
    hi = Fraction(r + 1, s * den)
    if lo * lo == x:
        return lo, lo
    # sqrt(num*den)/(s*den) == sqrt(x); isqrt brackets it within 1/(s*den)
    return lo, hi
