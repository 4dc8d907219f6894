"""Brute-force grid oracle for generic sup-convolutions.

The generic convolution of two truth-value functions under an inner
connective * and a combiner (a t-norm for the meet form, a t-conorm for the
join form) is

    (f conv g)(x) = sup{ f(y) * g(z) | combiner(y, z) = x }.

No closed form exists for arbitrary connectives, so this module evaluates
the supremum over a uniform rational grid. When the combiner is min (resp.
max) the solution set is computed exactly -- min(y, z) = x means one
coordinate is x and the other is at least (resp. at most) x -- and the grid
value is the true supremum over grid pairs. For any other combiner, pairs
match a target within a tolerance band, and the result is a certified lower
bound for the true supremum (every reported pair is a genuine admissible
pair up to the band). Lower bounds are first-class here: the separation
arguments this oracle backs only ever need one admissible pair with a large
value.
"""

from __future__ import annotations

import io
import math
from dataclasses import dataclass
from fractions import Fraction

from .connectives import MINIMUM, ScalarConnective, T_CONORM, T_NORM
from .errors import DomainError, ValidationError
from .piecewise import PiecewiseFn, evaluate, falling_ramp, to_json_dict, unit_spike
from .rationals import ONE, ZERO, format_rational, to_rational
from .report import AxiomReport

_EXACT_MEET = "min"
_EXACT_JOIN = "max"


@dataclass(frozen=True)
class GridSpec:
    resolution: int
    tolerance: Fraction | None = None

    def __post_init__(self):
        if self.resolution < 2:
            raise ValidationError("grid resolution must be at least 2")
        tol = self.tolerance
        if tol is None:
            tol = Fraction(1, 2 * self.resolution)
        else:
            tol = to_rational(tol)
            if tol < 0:
                raise ValidationError("tolerance must be nonnegative")
        object.__setattr__(self, "tolerance", tol)

    def points(self) -> list[Fraction]:
        n = self.resolution
        return [Fraction(k, n) for k in range(n + 1)]

    def index_of(self, x) -> int:
        q = to_rational(x)
        k = q * self.resolution
        if k.denominator != 1 or not 0 <= k <= self.resolution:
            raise DomainError(f"{q} is not a point of the 1/{self.resolution} grid")
        return int(k)


@dataclass(frozen=True)
class GridFn:
    resolution: int
    values: tuple[Fraction | None, ...]

    def __post_init__(self):
        if len(self.values) != self.resolution + 1:
            raise ValidationError("need one slot per grid point")

    @property
    def defined(self) -> tuple[bool, ...]:
        return tuple(v is not None for v in self.values)

    def value_at(self, x) -> Fraction | None:
        return self.values[GridSpec(self.resolution).index_of(x)]

    def to_csv(self, decimal: bool = False) -> str:
        out = io.StringIO()
        out.write("x,value,defined\n")
        n = self.resolution
        for k, v in enumerate(self.values):
            x = format_rational(Fraction(k, n), decimal)
            val = "" if v is None else format_rational(v, decimal)
            out.write(f"{x},{val},{'true' if v is not None else 'false'}\n")
        return out.getvalue()


def _grid_values(f: PiecewiseFn, pts: list[Fraction]) -> list[Fraction]:
    return [evaluate(f, x) for x in pts]


def _exact_meet_value(fv, gv, star, k) -> Fraction:
    best = None
    for j in range(k, len(fv)):
        for cand in (star(fv[k], gv[j]), star(fv[j], gv[k])):
            if best is None or cand > best:
                best = cand
    return best


def _exact_join_value(fv, gv, star, k) -> Fraction:
    best = None
    for j in range(0, k + 1):
        for cand in (star(fv[k], gv[j]), star(fv[j], gv[k])):
            if best is None or cand > best:
                best = cand
    return best


def _banded(f, g, star, combiner, grid: GridSpec) -> GridFn:
    n = grid.resolution
    pts = grid.points()
    fv = _grid_values(f, pts)
    gv = _grid_values(g, pts)
    tol = grid.tolerance
    best: list[Fraction | None] = [None] * (n + 1)
    for i in range(n + 1):
        for j in range(n + 1):
            w = combiner(pts[i], pts[j])
            k_lo = max(0, math.ceil((w - tol) * n))
            k_hi = min(n, math.floor((w + tol) * n))
            if k_lo > k_hi:
                continue
            value = star(fv[i], gv[j])
            for k in range(k_lo, k_hi + 1):
                if best[k] is None or value > best[k]:
                    best[k] = value
    if all(v is None for v in best):
        raise DomainError("empty constraint set at every grid point")
    return GridFn(n, tuple(best))


def convolve_meet(
    f: PiecewiseFn,
    g: PiecewiseFn,
    star: ScalarConnective,
    tnorm: ScalarConnective,
    grid: GridSpec,
) -> GridFn:
    """Grid evaluation of the meet-form convolution sup{f(y)*g(z) | y△z = x}."""
    if tnorm.profile != T_NORM:
        raise DomainError(f"combiner {tnorm.name!r} is not declared a t-norm")
    pts = grid.points()
    if tnorm.name == _EXACT_MEET:
        fv = _grid_values(f, pts)
        gv = _grid_values(g, pts)
        values = tuple(
            _exact_meet_value(fv, gv, star, k) for k in range(len(pts))
        )
        return GridFn(grid.resolution, values)
    return _banded(f, g, star, tnorm, grid)


def convolve_join(
    f: PiecewiseFn,
    g: PiecewiseFn,
    star: ScalarConnective,
    tconorm: ScalarConnective,
    grid: GridSpec,
) -> GridFn:
    """Grid evaluation of the join-form convolution sup{f(y)*g(z) | y▽z = x}."""
    if tconorm.profile != T_CONORM:
        raise DomainError(f"combiner {tconorm.name!r} is not declared a t-conorm")
    pts = grid.points()
    if tconorm.name == _EXACT_JOIN:
        fv = _grid_values(f, pts)
        gv = _grid_values(g, pts)
        values = tuple(
            _exact_join_value(fv, gv, star, k) for k in range(len(pts))
        )
        return GridFn(grid.resolution, values)
    return _banded(f, g, star, tconorm, grid)


def convolve_meet_at(f, g, star, tnorm, grid: GridSpec, x) -> Fraction | None:
    """Single grid point of the meet-form convolution (x must lie on the grid)."""
    if tnorm.profile != T_NORM:
        raise DomainError(f"combiner {tnorm.name!r} is not declared a t-norm")
    k = grid.index_of(x)
    pts = grid.points()
    if tnorm.name == _EXACT_MEET:
        fv = _grid_values(f, pts)
        gv = _grid_values(g, pts)
        return _exact_meet_value(fv, gv, star, k)
    return _banded(f, g, star, tnorm, grid).values[k]


def convolve_join_at(f, g, star, tconorm, grid: GridSpec, x) -> Fraction | None:
    """Single grid point of the join-form convolution (x must lie on the grid)."""
    if tconorm.profile != T_CONORM:
        raise DomainError(f"combiner {tconorm.name!r} is not declared a t-conorm")
    k = grid.index_of(x)
    pts = grid.points()
    if tconorm.name == _EXACT_JOIN:
        fv = _grid_values(f, pts)
        gv = _grid_values(g, pts)
        return _exact_join_value(fv, gv, star, k)
    return _banded(f, g, star, tconorm, grid).values[k]


# ---------------------------------------------------------------------------
# properties any inner connective must satisfy to make the convolutions
# (co)norms: evaluating the meet form at 1 collapses to f(1)*g(1), so a
# decreasing affine pair pins down commutativity of * itself, and indicator
# pairs pin down its boundary values.

_COMMUTATIVITY_PAIR = (Fraction(1, 5), Fraction(4, 5))


def _affine_pair_product(star, grid, u, v) -> Fraction:
    return convolve_meet_at(
        falling_ramp(u), falling_ramp(v), star, MINIMUM, grid, ONE
    )


def verify_star_forced_properties(star: ScalarConnective, grid: GridSpec) -> AxiomReport:
    """Check the boundary values and commutativity forced on the inner connective.

    Failures carry the witnessing identity: indicator pairs pushed through
    the oracle for boundary values, the canonical decreasing affine pair for
    commutativity.
    """
    trials = 0
    sample = [_COMMUTATIVITY_PAIR]
    eighths = [Fraction(k, 8) for k in range(9)]
    sample.extend((u, v) for u in eighths for v in eighths if u < v)
    for u, v in sample:
        trials += 1
        lhs = _affine_pair_product(star, grid, u, v)
        rhs = _affine_pair_product(star, grid, v, u)
        if lhs != rhs:
            witness = {
                "check": "commutativity",
                "u": str(u),
                "v": str(v),
                "lhs": str(lhs),
                "rhs": str(rhs),
                "fixtures": [
                    to_json_dict(falling_ramp(u)),
                    to_json_dict(falling_ramp(v)),
                ],
            }
            return AxiomReport(
                "forced-properties",
                False,
                trials,
                witness,
                detail=f"meet-form convolution not commutative at u={u}, v={v}",
            )

    boundary_cases = (
        (ZERO, ZERO, ZERO),
        (ZERO, ONE, ZERO),
        (ONE, ZERO, ZERO),
        (ONE, ONE, ONE),
    )
    for x, y, expected in boundary_cases:
        trials += 1
        got = convolve_meet_at(
            unit_spike(x), unit_spike(y), star, MINIMUM, grid, ONE
        )
        if got != expected:
            witness = {
                "check": "boundary",
                "x": str(x),
                "y": str(y),
                "lhs": str(got),
                "rhs": str(expected),
                "fixtures": [
                    to_json_dict(unit_spike(x)),
                    to_json_dict(unit_spike(y)),
                ],
            }
            return AxiomReport(
                "forced-properties",
                False,
                trials,
                witness,
                detail=f"boundary value {x}*{y} = {got}, expected {expected}",
            )
    return AxiomReport("forced-properties", True, trials)
