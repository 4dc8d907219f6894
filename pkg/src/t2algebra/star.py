"""The threshold product on normal convex functions, and its dual.

Away from the neutral element (the unit spike at 1), the product of f and g
is assembled from four regions governed by two thresholds: eta, where the
pointwise join of the left envelopes first reaches 1, and xi, where the
right envelopes stop being 1. The output follows the envelope join below
eta, sits at 1 on [eta, xi), takes the meet of the right envelopes at xi,
and vanishes beyond. The resulting operation is commutative, associative,
neutral at the unit spike, monotone, and closed on singleton and interval
indicators -- yet provably not expressible as any sup-convolution, which is
the whole point of building it.

The dual of any closed binary operation conjugates by reflection:
(f op* g) = neg((neg f) op (neg g)). Dualizing the threshold product gives
the co-product directly.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

from .errors import DomainError, ValidationError
from .lattice import TOP, join as lattice_join, meet as lattice_meet
from .piecewise import (
    Affine,
    PiecewiseFn,
    canonicalize,
    envelope_left,
    envelope_right,
    equals,
    evaluate,
    in_lattice,
    pointwise_max,
    reflect,
    thresholds,
)
from .rationals import ONE, ZERO


@dataclass(frozen=True)
class TruthValueOp:
    """A named binary operation on normal convex functions."""

    name: str
    fn: Callable[[PiecewiseFn, PiecewiseFn], PiecewiseFn]

    def __call__(self, f: PiecewiseFn, g: PiecewiseFn) -> PiecewiseFn:
        return self.fn(f, g)


def _require_lattice(f: PiecewiseFn, what: str) -> None:
    if not in_lattice(f):
        raise DomainError(f"{what} requires normal convex inputs")


def _assemble(
    breaks: list[Fraction],
    value_at: Callable[[Fraction], Fraction],
    affine_on: Callable[[Fraction, Fraction], Affine],
) -> PiecewiseFn:
    ordered = sorted(breaks)
    bks = [ordered[0]]
    for b in ordered[1:]:
        if b != bks[-1]:
            bks.append(b)
    values = tuple(value_at(b) for b in bks)
    pieces = tuple(affine_on(a, b) for a, b in zip(bks, bks[1:]))
    return canonicalize(PiecewiseFn(tuple(bks), values, pieces))


def star(f: PiecewiseFn, g: PiecewiseFn) -> PiecewiseFn:
    """Threshold product of two normal convex functions."""
    _require_lattice(f, "star")
    _require_lattice(g, "star")
    if equals(f, TOP):
        return canonicalize(g)
    if equals(g, TOP):
        return canonicalize(f)
    t = thresholds(f, g)
    # the envelope join is only consulted below eta
    head = (
        pointwise_max(envelope_left(f), envelope_left(g)) if t.eta > ZERO else None
    )
    tail_value = min(
        evaluate(envelope_right(f), t.xi), evaluate(envelope_right(g), t.xi)
    )

    def value_at(x: Fraction) -> Fraction:
        if x < t.eta:
            return evaluate(head, x)
        if x < t.xi:
            return ONE
        if x == t.xi:
            return tail_value
        return ZERO

    def affine_on(a: Fraction, b: Fraction) -> Affine:
        if b <= t.eta:
            return head.piece_containing((a + b) / 2)
        if b <= t.xi:
            return (ZERO, ONE)
        return (ZERO, ZERO)

    breaks = [ZERO, t.eta, t.xi, ONE]
    if head is not None:
        breaks.extend(b for b in head.breakpoints if b < t.eta)
    return _assemble(breaks, value_at, affine_on)


def star_envelopes(
    f: PiecewiseFn, g: PiecewiseFn
) -> tuple[PiecewiseFn, PiecewiseFn]:
    """Closed-form left and right envelopes of the threshold product.

    Defined away from the neutral element only. Must agree exactly with
    re-running the envelope operators on the product itself.
    """
    _require_lattice(f, "star_envelopes")
    _require_lattice(g, "star_envelopes")
    if equals(f, TOP) or equals(g, TOP):
        raise DomainError("closed-form envelopes exclude the unit spike at 1")
    t = thresholds(f, g)
    head = pointwise_max(envelope_left(f), envelope_left(g))
    tail_value = min(
        evaluate(envelope_right(f), t.xi), evaluate(envelope_right(g), t.xi)
    )

    def left_value(x: Fraction) -> Fraction:
        return evaluate(head, x) if x < t.eta else ONE

    def left_affine(a: Fraction, b: Fraction) -> Affine:
        if b <= t.eta:
            return head.piece_containing((a + b) / 2)
        return (ZERO, ONE)

    left_breaks = [ZERO, t.eta, ONE]
    left_breaks.extend(b for b in head.breakpoints if b < t.eta)
    left = _assemble(left_breaks, left_value, left_affine)

    def right_value(x: Fraction) -> Fraction:
        if x < t.xi:
            return ONE
        if x == t.xi:
            return tail_value
        return ZERO

    def right_affine(a: Fraction, b: Fraction) -> Affine:
        return (ZERO, ONE) if b <= t.xi else (ZERO, ZERO)

    right = _assemble([ZERO, t.xi, ONE], right_value, right_affine)
    return left, right


def costar(f: PiecewiseFn, g: PiecewiseFn) -> PiecewiseFn:
    """Dual of the threshold product: reflect inputs, multiply, reflect back."""
    _require_lattice(f, "costar")
    _require_lattice(g, "costar")
    return reflect(star(reflect(f), reflect(g)))


def dualize(op: TruthValueOp) -> TruthValueOp:
    """Conjugate a closed binary operation by complementation. Involutive."""
    return TruthValueOp(
        f"dual({op.name})", lambda f, g: reflect(op(reflect(f), reflect(g)))
    )


STAR = TruthValueOp("star", star)
COSTAR = TruthValueOp("costar", costar)
MEET = TruthValueOp("meet", lattice_meet)
JOIN = TruthValueOp("join", lattice_join)

# conv-* names resolve to exact operations only where the convolution stays
# inside the piecewise-affine class: inner connective min with combiner
# min/max is precisely the lattice meet/join.
_EXACT_OPS = {
    "star": STAR,
    "costar": COSTAR,
    "meet": MEET,
    "join": JOIN,
    "conv-meet:min:min": MEET,
    "conv-join:max:min": JOIN,
}


def resolve_operation(name: str) -> TruthValueOp:
    """Look up an exactly-computable operation by its CLI name."""
    try:
        return _EXACT_OPS[name]
    except KeyError:
        raise ValidationError(
            f"no exact operation named {name!r}; exact names: "
            + ", ".join(sorted(_EXACT_OPS))
        ) from None
