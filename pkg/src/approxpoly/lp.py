"""Exact two-phase simplex over the rationals.

Problems have the form ``max (or min) c.x  s.t.  a_i.x <= b_i`` with ``x``
free.  Every outcome carries a certificate that is re-checked before it is
returned:

* ``Optimal`` -- multipliers ``y >= 0`` with ``sum y_i a_i = c`` and
  ``sum y_i b_i = value`` (for ``min`` problems the certificate is for the
  equivalent ``max -c.x``; see :attr:`Optimal.dual`).
* ``Unbounded`` -- a ray ``r`` with ``a_i.r <= 0`` for all rows and
  ``c.r`` improving.
* ``Infeasible`` -- Farkas multipliers ``y >= 0`` with ``sum y_i a_i = 0``
  and ``sum y_i b_i < 0``.

Pivoting uses Bland's rule, so exact arithmetic always terminates.
"""
from dataclasses import dataclass
from fractions import Fraction

from .errors import DimensionMismatch
from .rational import ZERO, dot, q, vec


@dataclass(frozen=True)
class LPProblem:
    objective: tuple
    rows: tuple  # (normal, rhs) pairs meaning normal . x <= rhs
    sense: str = "max"

    @classmethod
    def make(cls, objective, rows, sense="max"):
        return cls(vec(objective), tuple((vec(a), q(b)) for a, b in rows), sense)

    @property
    def dim(self):
        return len(self.objective)


@dataclass(frozen=True)
class Optimal:
    value: Fraction
    point: tuple
    # multipliers for max(s * c).x where s = +1 (max) or -1 (min)
    dual: tuple


@dataclass(frozen=True)
class Unbounded:
    ray: tuple


@dataclass(frozen=True)
class Infeasible:
    farkas: tuple


class CertificateError(AssertionError):
    """Raised if the solver produces a certificate that fails re-checking."""


def lp_solve(problem):
    """Solve ``problem`` exactly; see the module docstring for outcomes."""
    c = problem.objective
    n = len(c)
    if n < 1:
        raise DimensionMismatch("LP needs at least one variable")
    for a, _ in problem.rows:
        if len(a) != n:
            raise DimensionMismatch(f"row of length {len(a)} in a problem of dimension {n}")
    sign = 1 if problem.sense == "max" else -1
    cmax = tuple(sign * x for x in c)
    out = _Simplex(cmax, problem.rows).run()
    if isinstance(out, Optimal) and sign == -1:
        return Optimal(-out.value, out.point, out.dual)
    return out


def maximize(objective, rows):
    return lp_solve(LPProblem.make(objective, rows, "max"))


def minimize(objective, rows):
    return lp_solve(LPProblem.make(objective, rows, "min"))


def feasible_point(rows, n):
    """Some point satisfying all rows, or ``None``."""
    out = lp_solve(LPProblem.make([0] * n, rows, "max"))
    if isinstance(out, Infeasible):
        return None
    return out.point


class _Simplex:
    def __init__(self, c, rows):
        self.c = c
        self.rows = rows
        self.n = n = len(c)
        self.m = m = len(rows)
        self.sign = []
        self.nart = 0
        art_of_row = {}
        for i, (_, b) in enumerate(rows):
            if b < 0:
                self.sign.append(-1)
                art_of_row[i] = self.nart
                self.nart += 1
            else:
                self.sign.append(1)
        self.first_art = 2 * n + m
        self.ncols = self.first_art + self.nart
        T = []
        basis = []
        for i, (a, b) in enumerate(rows):
            s = self.sign[i]
            row = [ZERO] * (self.ncols + 1)
            for j, v in enumerate(a):
                if v:
                    row[j] = s * v
                    row[n + j] = -s * v
            row[2 * n + i] = Fraction(s)
            if s < 0:
                col = self.first_art + art_of_row[i]
                row[col] = Fraction(1)
                basis.append(col)
            else:
                basis.append(2 * n + i)
            row[-1] = s * b
            T.append(row)
        self.T = T
        self.basis = basis
        self.init_col = list(basis)

    def _pivot(self, r, j, obj):
        T = self.T
        pr = T[r]
        piv = pr[j]
        if piv != 1:
            pr = [a / piv for a in pr]
            T[r] = pr
        nz = [k for k, a in enumerate(pr) if a]
        for s, row in enumerate(T):
            if s != r:
                f = row[j]
                if f:
                    for k in nz:
                        row[k] -= f * pr[k]
        f = obj[j]
        if f:
            for k in nz:
                obj[k] -= f * pr[k]
        self.basis[r] = j

    def _iterate(self, obj, allowed):
        T = self.T
        while True:
            j = next((k for k in range(allowed) if obj[k] > 0), None)
            if j is None:
                return None
            best = None
            for r, row in enumerate(T):
                a = row[j]
                if a > 0:
                    ratio = row[-1] / a
                    key = (ratio, self.basis[r])
                    if best is None or key < best[0]:
                        best = (key, r)
            if best is None:
                return j
            self._pivot(best[1], j, obj)

    def _objective_row(self, cost):
        obj = [ZERO] * (self.ncols + 1)
        for j, cj in cost.items():
            obj[j] += cj
        for r, row in enumerate(self.T):
            cb = cost.get(self.basis[r], ZERO)
            if cb:
                for k, a in enumerate(row):
                    if a:
                        obj[k] -= cb * a
        # obj[-1] holds minus the current objective value
        return obj

    def _duals(self, cost):
        y = []
        for i in range(self.m):
            col = self.init_col[i]
            yi = sum((cost.get(self.basis[r], ZERO) * row[col] for r, row in enumerate(self.T)), ZERO)
            y.append(self.sign[i] * yi)
        return tuple(y)

    def run(self):
        n = self.n
        if self.nart:
            cost1 = {self.first_art + k: Fraction(-1) for k in range(self.nart)}
            obj = self._objective_row(cost1)
            self._iterate(obj, self.ncols)
            if -obj[-1] < 0:
                y = self._duals(cost1)
                self._check_farkas(y)
                return Infeasible(y)
            for r in range(self.m):
                if self.basis[r] >= self.first_art:
                    j = next((k for k in range(self.first_art) if self.T[r][k] != 0), None)
                    if j is not None:
                        self._pivot(r, j, obj)
        cost = {}
        for j, cj in enumerate(self.c):
            if cj:
                cost[j] = cj
                cost[n + j] = -cj
        obj = self._objective_row(cost)
        j = self._iterate(obj, self.first_art)
        if j is not None:
            d = [ZERO] * self.ncols
            d[j] = Fraction(1)
            for r, row in enumerate(self.T):
                d[self.basis[r]] = -row[j]
            ray = tuple(d[k] - d[n + k] for k in range(n))
            self._check_ray(ray)
            return Unbounded(ray)
        vals = [ZERO] * self.ncols
        for r, row in enumerate(self.T):
            vals[self.basis[r]] = row[-1]
        x = tuple(vals[k] - vals[n + k] for k in range(n))
        value = -obj[-1]
        y = self._duals(cost)
        self._check_optimal(x, value, y)
        return Optimal(value, x, y)

    def _check_optimal(self, x, value, y):
        for a, b in self.rows:
            if dot(a, x) > b:
                raise CertificateError("primal point violates a row")
        if dot(self.c, x) != value:
            raise CertificateError("primal value mismatch")
        if any(v < 0 for v in y):
            raise CertificateError("negative dual multiplier")
        comb = [ZERO] * self.n
        for yi, (a, _) in zip(y, self.rows):
            if yi:
                for k, v in enumerate(a):
                    comb[k] += yi * v
        if tuple(comb) != tuple(self.c):
            raise CertificateError("dual multipliers do not reproduce the objective")
        if sum((yi * b for yi, (_, b) in zip(y, self.rows)), ZERO) != value:
            raise CertificateError("duality gap")

    def _check_ray(self, ray):
        if any(dot(a, ray) > 0 for a, _ in self.rows) or dot(self.c, ray) <= 0:
            raise CertificateError("bad unbounded ray")

    def _check_farkas(self, y):
        if any(v < 0 for v in y):
            raise CertificateError("negative Farkas multiplier")
        comb = [ZERO] * self.n
        for yi, (a, _) in zip(y, self.rows):
            if yi:
                for k, v in enumerate(a):
                    comb[k] += yi * v
        if any(comb) or sum((yi * b for yi, (_, b) in zip(y, self.rows)), ZERO) >= 0:
            raise CertificateError("bad Farkas certificate")
