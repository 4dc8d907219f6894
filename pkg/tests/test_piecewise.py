import random
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

import t2algebra as t
from t2algebra import DomainError, ValidationError

from conftest import lattice_fns, piecewise_fns
from oracles import (
    exact_sup,
    oracle_envelope_left,
    oracle_envelope_left_strict,
    oracle_envelope_right,
    oracle_envelope_right_strict,
    probe_points,
    quasiconcave_violation,
)

F = Fraction


def rational_points(count, seed=0, max_den=97):
    rng = random.Random(seed)
    pts = []
    for _ in range(count):
        den = rng.randint(1, max_den)
        pts.append(F(rng.randint(0, den), den))
    return pts


class TestEvaluate:
    def test_indicator_includes_endpoints(self):
        f = t.indicator(F(1, 5), F(3, 5))
        assert t.evaluate(f, F(1, 5)) == 1
        assert t.evaluate(f, F(3, 5)) == 1
        assert t.evaluate(f, F(2, 5)) == 1
        assert t.evaluate(f, F(1, 10)) == 0

    def test_plateau_step_value_in_tail(self, plateau_step):
        assert t.evaluate(plateau_step, F(4, 5)) == F(1, 2)
        assert t.evaluate(plateau_step, F(3, 4)) == 1

    def test_affine_ramp_at_origin(self):
        assert t.evaluate(t.rising_ramp(F(1, 2)), 0) == F(1, 2)

    def test_rejects_out_of_range(self):
        with pytest.raises(ValidationError):
            t.evaluate(t.constant(0), F(3, 2))


class TestCanonicalize:
    def test_merges_collinear_split(self):
        split = t.PiecewiseFn(
            (F(0), F(1, 2), F(1)),
            (F(1), F(1), F(1)),
            ((F(0), F(1)), (F(0), F(1))),
        )
        assert t.canonicalize(split) == t.constant(1)

    def test_drops_redundant_breakpoint_of_spike(self):
        f = t.PiecewiseFn(
            (F(0), F(3, 10), F(3, 5), F(1)),
            (F(0), F(1), F(0), F(0)),
            ((F(0), F(0)), (F(0), F(0)), (F(0), F(0))),
        )
        g = t.canonicalize(f)
        assert g == t.unit_spike(F(3, 10))
        assert len(g.breakpoints) == 3

    @given(piecewise_fns())
    def test_idempotent(self, f):
        once = t.canonicalize(f)
        assert t.canonicalize(once) == once

    @given(piecewise_fns())
    def test_preserves_pointwise_values(self, f):
        g = t.canonicalize(f)
        for x in probe_points(f, splits=3):
            assert t.evaluate(f, x) == t.evaluate(g, x)


class TestEquals:
    def test_degenerate_interval_is_spike(self):
        assert t.equals(t.indicator(0, 0), t.unit_spike(0))

    def test_plateau_step_is_not_indicator(self, plateau_step):
        assert not t.equals(plateau_step, t.indicator(0, F(3, 4)))

    @given(piecewise_fns())
    def test_canonical_form_agrees_with_sampling(self, f):
        g = t.canonicalize(f)
        assert t.equals(f, g)
        for x in rational_points(50, seed=7):
            assert t.evaluate(f, x) == t.evaluate(g, x)


class TestPointwiseMinMax:
    def test_interval_intersection(self):
        lhs = t.pointwise_min(t.indicator(0, F(1, 2)), t.indicator(F(3, 10), 1))
        assert t.equals(lhs, t.indicator(F(3, 10), F(1, 2)))

    def test_max_idempotent(self, plateau_step):
        assert t.equals(t.pointwise_max(plateau_step, plateau_step), plateau_step)

    def test_crossing_produces_tent(self):
        # min(x, 1-x): crossing computed exactly at (1/2, 1/2)
        tent = t.pointwise_min(t.from_affine(1, 0), t.from_affine(-1, 1))
        assert tent.breakpoints == (F(0), F(1, 2), F(1))
        assert tent.values == (F(0), F(1, 2), F(0))
        assert tent.pieces == ((F(1), F(0)), (F(-1), F(1)))

    @given(piecewise_fns(), piecewise_fns())
    def test_exactness_against_scalar_min_max(self, f, g):
        lo = t.pointwise_min(f, g)
        hi = t.pointwise_max(f, g)
        for x in probe_points(f, g, splits=3):
            fx, gx = t.evaluate(f, x), t.evaluate(g, x)
            assert t.evaluate(lo, x) == min(fx, gx)
            assert t.evaluate(hi, x) == max(fx, gx)

    @given(piecewise_fns(), piecewise_fns())
    def test_leq_matches_max(self, f, g):
        assert t.pointwise_leq(f, g) == t.equals(t.pointwise_max(f, g), g)


class TestReflect:
    def test_interval_maps_to_mirror_interval(self):
        assert t.equals(
            t.reflect(t.indicator(F(1, 5), F(3, 5))), t.indicator(F(2, 5), F(4, 5))
        )

    def test_spike_at_one_maps_to_zero(self):
        assert t.equals(t.reflect(t.unit_spike(1)), t.unit_spike(0))

    @given(piecewise_fns())
    def test_involution(self, f):
        assert t.equals(t.reflect(t.reflect(f)), f)

    @given(piecewise_fns())
    def test_pointwise_mirror(self, f):
        g = t.reflect(f)
        for x in probe_points(f, splits=3):
            assert t.evaluate(g, F(1) - x) == t.evaluate(f, x)


class TestEnvelopes:
    def test_left_envelope_of_interval(self):
        env = t.envelope_left(t.indicator(F(1, 5), F(3, 5)))
        assert t.equals(env, t.pointwise_max(t.indicator(F(1, 5), 1), t.constant(0)))
        assert t.evaluate(env, F(1, 10)) == 0
        assert t.evaluate(env, F(9, 10)) == 1

    def test_left_envelope_at_one_is_sup(self, plateau_step):
        for f in (plateau_step, t.rising_ramp(F(1, 4)), t.constant(F(3, 10))):
            assert t.evaluate(t.envelope_left(f), 1) == t.sup_value(f)
            assert t.evaluate(t.envelope_right(f), 0) == t.sup_value(f)

    def test_falling_ramp_left_envelope_constant(self):
        assert t.equals(t.envelope_left(t.from_affine(-1, 1)), t.constant(1))

    def test_right_envelope_of_plateau_step(self, plateau_step):
        assert t.equals(t.envelope_right(plateau_step), plateau_step)

    def test_right_envelope_of_interval(self):
        env = t.envelope_right(t.indicator(F(1, 5), F(3, 5)))
        assert t.equals(env, t.indicator(0, F(3, 5)))

    @given(piecewise_fns())
    def test_left_envelope_matches_enumeration_oracle(self, f):
        env = t.envelope_left(f)
        for x in probe_points(f, env, splits=3):
            assert t.evaluate(env, x) == oracle_envelope_left(f, x)

    @given(piecewise_fns())
    def test_right_envelope_matches_enumeration_oracle(self, f):
        env = t.envelope_right(f)
        for x in probe_points(f, env, splits=3):
            assert t.evaluate(env, x) == oracle_envelope_right(f, x)

    @given(piecewise_fns())
    def test_idempotence(self, f):
        left = t.envelope_left(f)
        right = t.envelope_right(f)
        assert t.equals(t.envelope_left(left), left)
        assert t.equals(t.envelope_right(right), right)

    @given(piecewise_fns())
    def test_reflect_swaps_envelopes(self, f):
        assert t.equals(
            t.envelope_left(t.reflect(f)), t.reflect(t.envelope_right(f))
        )
        assert t.equals(
            t.envelope_right(t.reflect(f)), t.reflect(t.envelope_left(f))
        )

    @given(piecewise_fns())
    def test_function_below_both_envelopes(self, f):
        both = t.pointwise_min(t.envelope_left(f), t.envelope_right(f))
        assert t.pointwise_leq(f, both)

    @given(piecewise_fns())
    def test_cross_envelopes_are_constant_sup(self, f):
        sup = t.constant(t.sup_value(f))
        assert t.equals(t.envelope_right(t.envelope_left(f)), sup)
        assert t.equals(t.envelope_left(t.envelope_right(f)), sup)
        assert t.equals(
            t.pointwise_max(t.envelope_left(f), t.envelope_right(f)), sup
        )


class TestStrictEnvelopes:
    def test_spike_strict_left_values(self):
        env = t.envelope_left_strict(t.unit_spike(F(1, 2)))
        assert t.evaluate(env, F(1, 2)) == 0
        assert t.evaluate(env, F(3, 5)) == 1
        assert t.evaluate(env, 0) == 0

    def test_boundary_conventions(self, plateau_step):
        assert t.evaluate(t.envelope_left_strict(plateau_step), 0) == t.evaluate(
            plateau_step, 0
        )
        assert t.evaluate(t.envelope_right_strict(plateau_step), 1) == t.evaluate(
            plateau_step, 1
        )

    @given(piecewise_fns())
    def test_matches_enumeration_oracle(self, f):
        left = t.envelope_left_strict(f)
        right = t.envelope_right_strict(f)
        for x in probe_points(f, left, right, splits=3):
            assert t.evaluate(left, x) == oracle_envelope_left_strict(f, x)
            assert t.evaluate(right, x) == oracle_envelope_right_strict(f, x)

    @given(piecewise_fns())
    def test_strict_left_is_left_limit_of_left_envelope(self, f):
        # the strict envelope agrees with sup over [0, x) of the plain one
        strict = t.envelope_left_strict(f)
        plain = t.envelope_left(f)
        for x in probe_points(f, strict, splits=2):
            if x == 0:
                continue
            assert t.evaluate(strict, x) == exact_sup(
                plain, F(0), x, include_hi=False
            )


class TestSupNormalConvex:
    def test_sup_values(self, plateau_step):
        assert t.sup_value(plateau_step) == 1
        assert t.sup_value(t.rising_ramp(F(1, 2))) == 1
        assert t.sup_value(t.constant(F(3, 10))) == F(3, 10)

    def test_sup_counts_unattained_limits(self):
        # climbs to 1 at the right endpoint but drops at the point itself
        f = t.PiecewiseFn((F(0), F(1)), (F(0), F(1, 4)), ((F(1), F(0)),))
        assert t.sup_value(f) == 1
        assert t.is_normal(f)

    def test_plateau_step_in_lattice(self, plateau_step):
        assert t.is_normal(plateau_step)
        assert t.is_convex(plateau_step)

    def test_twin_spikes_not_convex(self):
        f = t.pointwise_max(t.unit_spike(F(3, 10)), t.unit_spike(F(7, 10)))
        assert t.is_normal(f)
        assert not t.is_convex(f)
        assert quasiconcave_violation(f) is not None

    def test_low_constant_convex_not_normal(self):
        f = t.constant(F(9, 10))
        assert not t.is_normal(f)
        assert t.is_convex(f)

    @given(piecewise_fns())
    def test_convexity_agrees_with_quasiconcavity_probe(self, f):
        violation = quasiconcave_violation(f)
        if t.is_convex(f):
            assert violation is None
        if violation is not None:
            assert not t.is_convex(f)

    @given(lattice_fns())
    def test_lattice_strategy_members_pass_predicates(self, f):
        assert t.is_normal(f)
        assert t.is_convex(f)
        assert quasiconcave_violation(f) is None


class TestThresholds:
    def test_spike_pair(self, spike_pair):
        lo, hi = spike_pair
        th = t.thresholds(lo, hi)
        assert th.eta == F(3, 10)
        assert th.xi == F(3, 10)

    def test_full_against_interval(self):
        th = t.thresholds(t.indicator(0, 1), t.indicator(F(1, 5), F(3, 5)))
        assert th.eta == 0
        assert th.xi == F(3, 5)

    def test_full_against_full(self):
        th = t.thresholds(t.indicator(0, 1), t.indicator(0, 1))
        assert (th.eta, th.xi) == (0, 1)

    def test_unattained_peak_thresholds(self):
        f = t.PiecewiseFn((F(0), F(1)), (F(0), F(1, 4)), ((F(1), F(0)),))
        assert t.left_threshold(f) == 1
        assert t.right_threshold(f) == 1

    def test_requires_normal_inputs(self):
        with pytest.raises(DomainError):
            t.thresholds(t.constant(F(1, 2)), t.constant(1))

    @given(lattice_fns(), lattice_fns())
    def test_eta_never_exceeds_xi(self, f, g):
        th = t.thresholds(f, g)
        assert th.eta <= th.xi


class TestIndicator:
    def test_full_interval_is_constant_one(self):
        assert t.equals(t.indicator(0, 1), t.constant(1))

    def test_spike_at_one(self):
        f = t.indicator(1, 1)
        assert t.evaluate(f, 1) == 1
        assert t.evaluate(f, F(99, 100)) == 0

    def test_rejects_reversed_bounds(self):
        with pytest.raises(DomainError):
            t.indicator(F(3, 5), F(1, 5))


class TestValidation:
    def test_unsorted_breakpoints(self):
        with pytest.raises(ValidationError):
            t.PiecewiseFn(
                (F(0), F(3, 4), F(1, 2), F(1)),
                (F(0), F(0), F(0), F(0)),
                ((F(0), F(0)),) * 3,
            )

    def test_value_out_of_range(self):
        with pytest.raises(ValidationError):
            t.PiecewiseFn((F(0), F(1)), (F(0), F(2)), ((F(0), F(0)),))

    def test_piece_escapes_range(self):
        with pytest.raises(ValidationError):
            t.PiecewiseFn((F(0), F(1)), (F(0), F(0)), ((F(2), F(0)),))

    def test_endpoints_required(self):
        with pytest.raises(ValidationError):
            t.PiecewiseFn((F(1, 4), F(1)), (F(0), F(0)), ((F(0), F(0)),))

    def test_float_rejected(self):
        with pytest.raises(ValidationError):
            t.indicator(0.2, 0.6)


class TestJsonRoundTrip:
    def test_bit_exact_round_trip(self, plateau_step):
        text = t.dumps(plateau_step)
        again = t.loads(text)
        assert again == plateau_step
        assert t.dumps(again) == text

    @given(piecewise_fns(den=97))
    def test_round_trip_arbitrary(self, f):
        g = t.canonicalize(f)
        assert t.loads(t.dumps(g)) == g

    def test_malformed_json_rejected(self):
        with pytest.raises(ValidationError):
            t.loads("{not json")
        with pytest.raises(ValidationError):
            t.loads('{"breakpoints": []}')
        with pytest.raises(ValidationError):
            t.loads('{"breakpoints": [{"x": "0", "v": "0"}], "pieces": []}')


@given(lattice_fns())
def test_indicator_membership_predicates(f):
    if t.is_point_indicator(f):
        assert t.is_interval_indicator(f)


def test_indicator_predicates_on_examples():
    assert t.is_point_indicator(t.unit_spike(F(5, 16)))
    assert not t.is_point_indicator(t.indicator(F(1, 4), F(1, 2)))
    assert t.is_interval_indicator(t.indicator(F(1, 4), F(1, 2)))
    assert t.is_interval_indicator(t.constant(1))
    assert not t.is_interval_indicator(t.step(F(1, 2), 1, F(1, 4)))
    assert not t.is_interval_indicator(t.constant(F(1, 2)))


@given(st.integers(0, 16).map(lambda k: F(k, 16)), st.integers(0, 16).map(lambda k: F(k, 16)))
def test_indicator_always_convex(a, b):
    lo, hi = min(a, b), max(a, b)
    f = t.indicator(lo, hi)
    assert t.is_convex(f)
    assert t.is_normal(f)


def test_composed_operations_are_exact_at_random_points(plateau_step):
    # evaluating a composed result equals composing the evaluations
    f = plateau_step
    g = t.indicator(F(1, 5), F(3, 5))
    composed = t.pointwise_max(t.reflect(t.pointwise_min(f, g)), t.envelope_left(g))
    for x in rational_points(1000, seed=11):
        direct = max(
            min(t.evaluate(f, 1 - x), t.evaluate(g, 1 - x)),
            oracle_envelope_left(g, x),
        )
        assert t.evaluate(composed, x) == direct
