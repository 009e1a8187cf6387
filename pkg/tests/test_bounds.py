import cmath
import math
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from rabotnov import RabotnovParams, RatioKind, SeriesKind, lemma2_bound, theorem_bound
from rabotnov.bounds import all_lemma2_bounds, all_theorem_bounds
from rabotnov.verify import COROLLARIES

R = RatioKind


def P(alpha, beta, gamma=1.0):
    return RabotnovParams(alpha=alpha, gamma_shape=gamma, beta=beta)


# frozen by hand from the bound formulas with exact rational |beta|
EXPECTED_CONSTANTS = [
    Fraction(3, 5), Fraction(5, 7), Fraction(0), Fraction(1, 2),
    Fraction(5, 7), Fraction(7, 9), Fraction(1, 3), Fraction(3, 5),
    Fraction(13, 15), Fraction(15, 17), Fraction(5, 7), Fraction(7, 9),
    Fraction(1, 3), Fraction(3, 5),
]


def _exact_bound(ratio, s, b):
    s, b = Fraction(s), Fraction(b)
    return {
        R.F_OVER_FM: (2 * s - 3 * b) / (2 * s - b),
        R.FM_OVER_F: (2 * s - b) / (2 * s + b),
        R.FP_OVER_FMP: (s - 3 * b) / (s - b),
        R.FMP_OVER_FP: (s - b) / (s + b),
        R.I_OVER_IM: (2 * s - 2 * b) / (2 * s - b),
        R.IM_OVER_I: (2 * s - b) / (2 * s),
    }[ratio]


class TestTheoremBound:
    @pytest.mark.parametrize("row, expected", list(zip(COROLLARIES, EXPECTED_CONSTANTS)))
    def test_corollary_constants(self, row, expected):
        _, params, ratio, constant, _ = row
        assert constant == expected
        res = theorem_bound(params, ratio)
        assert res.hypothesis_ok
        assert res.bound == pytest.approx(float(expected), abs=1e-12)

    def test_examples(self):
        assert theorem_bound(P(0, -1 / 3), R.F_OVER_FM).bound == pytest.approx(0.6, abs=1e-15)
        assert theorem_bound(P(1, -0.25), R.F_OVER_FM).bound == pytest.approx(13 / 15, abs=1e-15)
        assert theorem_bound(P(1, -0.25), R.FM_OVER_F).bound == pytest.approx(15 / 17, abs=1e-15)
        assert theorem_bound(P(1, 0.5), R.FP_OVER_FMP).bound == pytest.approx(1 / 3, abs=1e-15)
        assert theorem_bound(P(1, 0.5), R.FMP_OVER_FP).bound == pytest.approx(3 / 5, abs=1e-15)

    @pytest.mark.parametrize("ratio", list(RatioKind))
    def test_zero_beta(self, ratio):
        res = theorem_bound(P(0.7, 0, 2.5), ratio)
        assert res.bound == 1.0
        assert res.hypothesis_ok
        assert res.orientation == "lower"

    @pytest.mark.parametrize("ratio", list(RatioKind))
    @pytest.mark.parametrize("s, b", [(2, 1), (3, "1/2"), (5, "5/3"), (7, 2), ("3/2", "1/4")])
    def test_exact_rationals(self, ratio, s, b):
        s, b = Fraction(s), Fraction(b)
        res = theorem_bound(P(float(s) - 1.0, float(b)), ratio)
        assert res.bound == pytest.approx(float(_exact_bound(ratio, s, b)), abs=1e-14)

    def test_hypothesis_reported_not_enforced(self):
        res = theorem_bound(P(0, 1.0), R.FP_OVER_FMP)
        assert not res.hypothesis_ok
        assert math.isnan(res.bound)  # s == |beta| makes the denominator vanish
        res = theorem_bound(P(0, 0.5), R.FP_OVER_FMP)
        assert not res.hypothesis_ok
        assert res.bound == pytest.approx(-1.0)
        assert "3|beta|" in res.hypothesis_text

    def test_boundaries(self):
        # 2s = 3|beta|
        assert abs(theorem_bound(P(0, 2 / 3), R.F_OVER_FM).bound) <= 1e-15
        assert theorem_bound(P(0, 2 / 3), R.F_OVER_FM).hypothesis_ok
        # s = 3|beta|
        assert abs(theorem_bound(P(0.5, 0.5), R.FP_OVER_FMP).bound) <= 1e-15
        assert theorem_bound(P(0.5, 0.5), R.FP_OVER_FMP).hypothesis_ok
        # s = |beta|
        assert abs(theorem_bound(P(1, 2), R.I_OVER_IM).bound) <= 1e-15
        assert theorem_bound(P(1, 2), R.I_OVER_IM).hypothesis_ok

    @given(
        alpha=st.floats(0, 5),
        gamma=st.floats(1, 5),
        mod=st.floats(0, 1),
        theta=st.floats(-math.pi, math.pi),
    )
    def test_phase_invariance(self, alpha, gamma, mod, theta):
        s = alpha + gamma
        base = P(alpha, mod * s, gamma)
        # rotations that keep |beta| bit-exact
        for beta in (-mod * s, 1j * mod * s, -1j * mod * s):
            for ratio in RatioKind:
                a = theorem_bound(base, ratio).bound
                b = theorem_bound(P(alpha, beta, gamma), ratio).bound
                assert a == b or (math.isnan(a) and math.isnan(b))
        rotated = P(alpha, cmath.rect(mod * s, theta), gamma)
        for ratio in RatioKind:
            a = theorem_bound(base, ratio)
            b = theorem_bound(rotated, ratio)
            if a.hypothesis_ok and b.hypothesis_ok:
                assert a.bound == pytest.approx(b.bound, abs=1e-12)

    @pytest.mark.parametrize("ratio", list(RatioKind))
    def test_monotone_in_beta(self, ratio):
        for alpha in (0.0, 0.5, 2.0):
            for gamma in (1.0, 1.5, 4.0):
                s = alpha + gamma
                values = []
                for b in np.linspace(0, s, 401):
                    res = theorem_bound(P(alpha, float(b), gamma), ratio)
                    if res.hypothesis_ok:
                        values.append(res.bound)
                assert len(values) > 10
                assert all(y <= x + 1e-15 for x, y in zip(values, values[1:]))

    @given(alpha=st.floats(0, 10), gamma=st.floats(1, 10), frac=st.floats(0, 1.2), theta=st.floats(-4, 4))
    def test_unit_interval(self, alpha, gamma, frac, theta):
        p = P(alpha, cmath.rect(frac * (alpha + gamma), theta), gamma)
        for res in all_theorem_bounds(p).values():
            if res.hypothesis_ok:
                assert -1e-15 <= res.bound <= 1.0

    def test_all_keys(self):
        assert list(all_theorem_bounds(P(0, 0.1))) == list(RatioKind)


class TestLemma2Bound:
    def test_examples(self):
        assert lemma2_bound(P(0, -1 / 3), SeriesKind.BASE).bound == pytest.approx(1.4, abs=1e-15)
        assert lemma2_bound(P(1, 1), SeriesKind.DERIVATIVE).bound == pytest.approx(3.0, abs=1e-15)
        assert lemma2_bound(P(1, 0.5), SeriesKind.DERIVATIVE).bound == pytest.approx(5 / 3, abs=1e-15)
        assert lemma2_bound(P(0, 1), SeriesKind.ALEXANDER).bound == pytest.approx(2.0, abs=1e-15)

    @pytest.mark.parametrize("kind", list(SeriesKind))
    def test_zero_beta(self, kind):
        res = lemma2_bound(P(2, 0, 3), kind)
        assert res.bound == 1.0
        assert res.hypothesis_ok
        assert res.orientation == "upper"

    def test_strict_equality(self):
        res = lemma2_bound(P(0, 1), SeriesKind.DERIVATIVE)
        assert not res.hypothesis_ok
        assert res.bound == math.inf
        res = lemma2_bound(P(0, 2), SeriesKind.BASE)
        assert not res.hypothesis_ok
        assert res.bound == math.inf
        assert not lemma2_bound(P(0, 2), SeriesKind.ALEXANDER).hypothesis_ok

    @given(alpha=st.floats(0, 5), gamma=st.floats(1, 5), frac=st.floats(0, 0.99))
    def test_at_least_one(self, alpha, gamma, frac):
        p = P(alpha, frac * (alpha + gamma), gamma)
        for res in all_lemma2_bounds(p).values():
            assert res.hypothesis_ok
            assert res.bound >= 1.0

    def test_ordering(self):
        # derivative bound dominates base, base dominates Alexander
        p = P(0.5, 0.7, 1.2)
        b = all_lemma2_bounds(p)
        assert b[SeriesKind.DERIVATIVE].bound >= b[SeriesKind.BASE].bound >= b[SeriesKind.ALEXANDER].bound


class TestRatioKind:
    @pytest.mark.parametrize(
        "text, expected",
        [("FOverFm", R.F_OVER_FM), ("fmoverf", R.FM_OVER_F), ("F_OVER_FM", R.F_OVER_FM),
         ("fp-over-fmp", R.FP_OVER_FMP), (" ImOverI ", R.IM_OVER_I), ("i_over_im", R.I_OVER_IM)],
    )
    def test_parse(self, text, expected):
        assert RatioKind.parse(text) is expected

    def test_parse_unknown(self):
        with pytest.raises(ValueError):
            RatioKind.parse("FOverG")

    def test_series_kinds(self):
        assert R.F_OVER_FM.kind is SeriesKind.BASE
        assert R.FMP_OVER_FP.kind is SeriesKind.DERIVATIVE
        assert R.IM_OVER_I.kind is SeriesKind.ALEXANDER
        assert [r.full_over_partial for r in RatioKind] == [True, False] * 3
