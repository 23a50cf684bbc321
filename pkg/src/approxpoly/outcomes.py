"""Tagged result values shared by the support and Hausdorff computations."""
from dataclasses import dataclass, field
from fractions import Fraction


@dataclass(frozen=True)
class Finite:
    value: Fraction
    point: tuple = None  # attaining point, when one is known

    is_finite = True


@dataclass(frozen=True)
class PlusInfinity:
    """Unbounded support value; ``ray`` is a recession ray with u.ray > 0 when known."""

    ray: tuple = None

    is_finite = False


@dataclass(frozen=True)
class Infinite:
    """Infinite Hausdorff distance, witnessed by a recession direction of one set only."""

    witness: tuple

    is_finite = False


@dataclass(frozen=True)
class Undecided:
    report: dict = field(default_factory=dict)

    is_finite = False
