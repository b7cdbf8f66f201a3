"""Design rules: balance index, next-input rule, history invariants."""

import itertools

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from langlie import (
    LanglieDesign,
    RMSchedule,
    RobbinsMonroDesign,
    SensitivityModel,
    TrialHistory,
    ValidationError,
    balance_index,
    cumulative_sums,
    draw_outcome,
    langlie_next,
    median,
    quantile,
    replay_inputs,
    robbins_monro_next,
    run_design,
    verify_replay,
)

outcome_lists = st.lists(st.sampled_from([-1, 1]), min_size=1, max_size=60)

FIGURE_MODEL = SensitivityModel("probit", 3.333, 9.999)
BRACKET = (-1.5, 1.5)


def balance_count_oracle(y):
    """Direct evaluation of the balance definition by counting outcomes.

    Balance at i: the tail y_{i+1}..y_n holds equally many +1 and -1.
    Returns the maximal balanced i in 1..n-1, else 0.
    """
    n = len(y)
    for i in range(n - 1, 0, -1):
        tail = y[i:]
        if tail.count(1) == tail.count(-1):
            return i
    return 0


def hand_langlie(y_seq, a, b):
    """Langlie input sequence computed step by step via the public rule."""
    h = TrialHistory(a, b)
    xs = []
    for yi in y_seq:
        x = langlie_next(h)
        xs.append(x)
        h = h.with_trial(x, yi)
    return xs, langlie_next(h)


# Hand-computed next-input enumeration for bracket (-1.5, 1.5), X1 = 0:
# all 4 outcome patterns of length 2 (values X1, X2, X3) and all 8 of
# length 3 (values X1..X4); every value is an exact dyadic midpoint.
HAND_N2 = {
    (1, 1): [0.0, -0.75, -1.125],
    (1, -1): [0.0, -0.75, 0.375],
    (-1, 1): [0.0, 0.75, -0.375],
    (-1, -1): [0.0, 0.75, 1.125],
}
HAND_N3 = {
    (1, 1, 1): [0.0, -0.75, -1.125, -1.3125],
    (1, 1, -1): [0.0, -0.75, -1.125, -0.5625],
    (1, -1, 1): [0.0, -0.75, 0.375, 0.1875],
    (1, -1, -1): [0.0, -0.75, 0.375, 0.9375],
    (-1, 1, 1): [0.0, 0.75, -0.375, -0.9375],
    (-1, 1, -1): [0.0, 0.75, -0.375, -0.1875],
    (-1, -1, 1): [0.0, 0.75, 1.125, 0.5625],
    (-1, -1, -1): [0.0, 0.75, 1.125, 1.3125],
}


class TestCumulativeSums:
    def test_examples(self):
        assert cumulative_sums([1, -1, -1, 1]) == [1, 0, -1, 0]
        assert cumulative_sums([1, 1, 1]) == [1, 2, 3]
        assert cumulative_sums([]) == []

    @given(outcome_lists)
    def test_unit_steps_and_parity(self, y):
        s = cumulative_sums(y)
        assert all(abs(b - a) == 1 for a, b in zip([0] + s, s))
        assert all(v % 2 == (k + 1) % 2 for k, v in enumerate(s))

    def test_rejects_bad_values(self):
        with pytest.raises(ValidationError):
            cumulative_sums([1, 0, -1])


class TestBalanceIndex:
    def test_single_trial_has_no_candidates(self):
        assert balance_index([1]) == 0

    def test_balanced_tail_example(self):
        # {y3, y4} = {-1, +1} balances at i=2; i=3 does not
        assert balance_index([1, -1, -1, 1]) == 2
        assert balance_count_oracle([1, -1, -1, 1]) == 2

    def test_index_zero_is_not_a_candidate(self):
        # the whole set {y1, y2} is balanced, but i=0 does not count:
        # S_2 = 0 is not among {S_1} = {1}
        assert balance_index([1, -1]) == 0
        assert balance_count_oracle([1, -1]) == 0

    @given(outcome_lists)
    def test_agrees_with_counting_oracle(self, y):
        assert balance_index(y) == balance_count_oracle(y)

    @pytest.mark.parametrize("k", range(1, 13))
    def test_new_value_criterion_exhaustive(self, k):
        """tau_n = 0 iff the cumsum sits at a never-seen value (all 2^k paths)."""
        for y in itertools.product([-1, 1], repeat=k):
            s = cumulative_sums(y)
            assert (balance_index(y) == 0) == (s[-1] not in s[:-1])
            assert balance_index(y) == balance_count_oracle(list(y))


class TestLanglieNext:
    def test_empty_history_starts_at_midpoint(self):
        assert langlie_next(TrialHistory(-1.5, 1.5)) == 0.0

    def test_success_averages_with_lower_bound(self):
        h = TrialHistory(-1.5, 1.5, [0.0], [1])
        assert langlie_next(h) == -0.75

    def test_failure_with_fresh_cumsum_averages_with_upper_bound(self):
        # S_2 = 0 is a new value, so tau_2 = 0 and the failure branch applies
        h = TrialHistory(-1.5, 1.5, [0.0, -0.75], [1, -1])
        assert balance_index(h.y) == 0
        assert langlie_next(h) == 0.375

    @pytest.mark.parametrize("pattern,want", sorted(HAND_N2.items()))
    def test_two_trial_enumeration(self, pattern, want):
        xs, x_next = hand_langlie(pattern, *BRACKET)
        assert xs + [x_next] == want

    @pytest.mark.parametrize("pattern,want", sorted(HAND_N3.items()))
    def test_three_trial_enumeration(self, pattern, want):
        xs, x_next = hand_langlie(pattern, *BRACKET)
        assert xs + [x_next] == want

    @given(outcome_lists)
    @settings(max_examples=60)
    def test_outputs_stay_strictly_inside_any_bracket(self, y):
        xs, x_next = hand_langlie(y, -2.0, 5.0)
        assert all(-2.0 < v < 5.0 for v in xs + [x_next])

    def test_deterministic(self):
        h = TrialHistory(-1.5, 1.5, [0.0, -0.75], [1, 1])
        assert langlie_next(h) == langlie_next(
            TrialHistory(-1.5, 1.5, [0.0, -0.75], [1, 1]))

    def test_requires_finite_bracket(self):
        with pytest.raises(ValidationError):
            langlie_next(TrialHistory(float("-inf"), float("inf"), [0.0], [1]))


class TestTrialHistoryValidation:
    def test_rejects_reversed_and_degenerate_brackets(self):
        with pytest.raises(ValidationError):
            TrialHistory(1.5, -1.5)
        with pytest.raises(ValidationError):
            TrialHistory(0.0, 0.0)

    def test_rejects_length_mismatch(self):
        with pytest.raises(ValidationError):
            TrialHistory(-1.5, 1.5, [0.0], [])

    def test_rejects_off_midpoint_start(self):
        with pytest.raises(ValidationError):
            TrialHistory(-1.5, 1.5, [0.1], [1])

    def test_rejects_inputs_outside_bracket(self):
        with pytest.raises(ValidationError):
            TrialHistory(-1.5, 1.5, [0.0, 1.5], [1, -1])

    def test_unbounded_history_accepts_free_inputs(self):
        h = TrialHistory(float("-inf"), float("inf"), [3.0, -9.0], [1, -1])
        assert len(h) == 2 and not h.bracketed


class TestRobbinsMonro:
    def test_update_examples(self):
        assert robbins_monro_next(0.0, 1, 1.0) == -0.5
        assert robbins_monro_next(0.0, -1, 1.0) == 0.5
        assert robbins_monro_next(0.2, 1, RMSchedule(c=1.0).step(5)) == pytest.approx(0.1)

    def test_negative_step_rejected(self):
        with pytest.raises(ValidationError):
            robbins_monro_next(0.0, 1, -0.1)

    def test_degenerate_schedule_rejected(self):
        with pytest.raises(ValidationError):
            RMSchedule(c=0.0)
        with pytest.raises(ValidationError):
            RMSchedule(c=1.0, form="constant")

    def test_run_design_replays_through_update_rule(self):
        design = RobbinsMonroDesign(0.0, RMSchedule(c=1.5))
        h = run_design(FIGURE_MODEL, design, 64, np.random.default_rng(5))
        x = 0.0
        for n, (got, y) in enumerate(zip(h.x, h.y), start=1):
            assert got == x
            x = robbins_monro_next(x, y, 1.5 / n)

    def test_terminal_error_shrinks_with_budget(self):
        # proxy for convergence: median |X_N - xi| over 200 seeded paths
        # decreases across decades of N
        xi = median(FIGURE_MODEL)
        design = RobbinsMonroDesign(0.0, RMSchedule(c=1.5))
        meds = []
        for n in (100, 1000, 10_000):
            errs = [abs(run_design(FIGURE_MODEL, design, n,
                                   np.random.default_rng([71, r])).x[-1] - xi)
                    for r in range(200)]
            meds.append(float(np.median(errs)))
        assert meds[0] > meds[1] > meds[2]


class TestRunDesignLanglie:
    def test_single_trial(self):
        h = run_design(FIGURE_MODEL, LanglieDesign(*BRACKET), 1,
                       np.random.default_rng(0))
        assert h.x == (0.0,) and h.y[0] in (-1, 1)

    def test_same_seed_is_bitwise_identical(self):
        runs = [run_design(FIGURE_MODEL, LanglieDesign(*BRACKET), 500,
                           np.random.default_rng(1234)) for _ in range(2)]
        assert runs[0] == runs[1]

    def test_matches_stepwise_conduction_on_one_stream(self):
        """The batch path equals driving the public rule + outcome draws by
        hand on the same generator, uniform for uniform."""
        rng = np.random.default_rng(77)
        h = run_design(FIGURE_MODEL, LanglieDesign(*BRACKET), 40, rng)
        rng = np.random.default_rng(77)
        manual = TrialHistory(*BRACKET)
        for _ in range(40):
            x = langlie_next(manual)
            manual = manual.with_trial(x, draw_outcome(FIGURE_MODEL, x, rng))
        assert h == manual

    @pytest.mark.parametrize("seed", [3, 88, 2024])
    def test_replay_invariant(self, seed):
        h = run_design(FIGURE_MODEL, LanglieDesign(*BRACKET), 300,
                       np.random.default_rng(seed))
        verify_replay(h)
        assert replay_inputs(h.y, h.a, h.b) == list(h.x)

    def test_inputs_stay_inside_bracket(self):
        h = run_design(FIGURE_MODEL, LanglieDesign(*BRACKET), 2000,
                       np.random.default_rng(9))
        assert all(-1.5 < v < 1.5 for v in h.x)

    def test_rejects_empty_run(self):
        with pytest.raises(ValidationError):
            run_design(FIGURE_MODEL, LanglieDesign(*BRACKET), 0,
                       np.random.default_rng(0))

    def test_tampered_history_fails_replay(self):
        h = run_design(FIGURE_MODEL, LanglieDesign(*BRACKET), 20,
                       np.random.default_rng(11))
        bad = TrialHistory(h.a, h.b, h.x[:-1] + (h.x[-1] / 2,), h.y)
        with pytest.raises(ValidationError):
            verify_replay(bad)

    def test_quantile_inside_bracket_for_figure_setup(self):
        xi = quantile(FIGURE_MODEL, 0.5)
        assert BRACKET[0] < xi < BRACKET[1]
