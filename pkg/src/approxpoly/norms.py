"""The two polyhedral norms supported on exact paths."""
from dataclasses import dataclass
from itertools import product

from .errors import InvalidInput
from .rational import ONE, ZERO, q, unit


@dataclass(frozen=True)
class Norm:
    """``kind`` is ``"sup"`` (max |x_i|) or ``"sum"`` (sum |x_i|)."""

    kind: str = "sup"

    def __post_init__(self):
        if self.kind not in ("sup", "sum"):
            raise InvalidInput(f"unknown norm {self.kind!r}")

    def __call__(self, v):
        if self.kind == "sup":
            return max((abs(a) for a in v), default=ZERO)
        return sum((abs(a) for a in v), ZERO)

    def dual(self):
        return Norm("sum" if self.kind == "sup" else "sup")

    def ball_rows(self, n, radius=ONE, center=None):
        """H-form rows ``(normal, offset)`` of the closed ball."""
        radius = q(radius)
        center = center or (ZERO,) * n
        rows = []
        if self.kind == "sup":
            for i in range(n):
                e = unit(n, i)
                rows.append((e, center[i] + radius))
                rows.append((tuple(-a for a in e), radius - center[i]))
        else:
            for signs in product((ONE, -ONE), repeat=n):
                off = radius + sum((s * c for s, c in zip(signs, center)), ZERO)
                rows.append((tuple(signs), off))
        return rows

    def ball_vertices(self, n, radius=ONE):
        radius = q(radius)
        if self.kind == "sup":
            return [tuple(s * radius for s in signs) for signs in product((ONE, -ONE), repeat=n)]
        out = []
        for i in range(n):
            out.append(tuple(radius if k == i else ZERO for k in range(n)))
            out.append(tuple(-radius if k == i else ZERO for k in range(n)))
        return out


SUP = Norm("sup")
SUM = Norm("sum")


def as_norm(norm):
    if norm is None:
        return SUP
    if isinstance(norm, Norm):
        return norm
    return Norm(str(norm))
