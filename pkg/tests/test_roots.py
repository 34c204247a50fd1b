"""Longhand root extraction: golden traces, the remainder invariant, and
the divisor bookkeeping."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from practica.numerics import int_nth_root_floor
from practica.root_extraction import (
    FULL,
    SIMPLIFIED,
    SpecialNumbers,
    digit_power_table,
    extract_root,
    form_divisor,
    group_points,
    render_trace,
)


# --- the two historical worked examples, field for field ---------------


def test_cube_root_trace_full_divisor():
    rx = extract_root(239483190, 3)
    assert rx.digits == (6, 2, 1)
    assert rx.remainder == 129

    s1, s2, s3 = rx.steps
    assert (s1.point_value, s1.trial_digit, s1.corrected_digit) == (239, 6, 6)
    assert s1.subtrahend == 216
    assert s1.remainder_after == 23

    assert s2.point_value == 23483
    assert s2.divisor == 10980
    assert s2.corrected_digit == 2
    assert s2.subtrahend == 22328
    assert s2.remainder_after == 1155

    assert s3.point_value == 1155190
    assert s3.corrected_digit == 1
    assert s3.remainder_after == 129


def test_cube_root_trace_simplified_divisor():
    rx = extract_root(80621568000, 3, divisor_mode=SIMPLIFIED)
    assert rx.root_scaled == 4320
    assert rx.remainder == 0

    s1, s2 = rx.steps[0], rx.steps[1]
    assert (s1.point_value, s1.corrected_digit, s1.subtrahend) == (80, 4, 64)
    assert s2.point_value == 16621
    assert s2.divisor == 4800  # 300 * 4**2 = 4800, the simplified divisor
    assert s2.corrected_digit == 3
    assert s2.subtrahend == 15480 + 27
    assert s2.remainder_after == 1114


def test_trace_rendering_contains_all_columns():
    text = render_trace(extract_root(239483190, 3))
    for token in ("10980", "22328", "1155", "621", "129"):
        assert token in text
    header = text.splitlines()[0].split()
    assert header == ["step", "point", "divisor", "trial", "digit", "subtrahend", "remainder"]


# --- grouping and special numbers ---------------------------------------


def test_group_points():
    assert group_points(239483190, 3) == [239, 483, 190]
    assert group_points(80621568000, 3) == [80, 621, 568, 0]
    assert group_points(144, 2) == [1, 44]
    assert group_points(0, 5) == [0]


def test_special_numbers_rows():
    assert SpecialNumbers.for_degree(2).values == (20,)
    assert SpecialNumbers.for_degree(3).values == (300, 30)
    assert SpecialNumbers.for_degree(4).values == (4000, 600, 40)
    assert len(SpecialNumbers.for_degree(17).values) == 16


def test_form_divisor_modes():
    sp = SpecialNumbers.for_degree(3)
    # root-so-far 4: full divisor 300*16 + 30*4 = 4920, simplified 4800
    assert form_divisor(4, sp, FULL) == 4920
    assert form_divisor(4, sp, SIMPLIFIED) == 4800
    with pytest.raises(ValueError):
        form_divisor(0, sp, FULL)


def test_digit_power_table():
    assert digit_power_table(3) == [1, 8, 27, 64, 125, 216, 343, 512, 729]


# --- the invariant that defines the algorithm ----------------------------


@given(
    st.integers(min_value=0, max_value=10 ** 40),
    st.integers(min_value=2, max_value=9),
    st.integers(min_value=0, max_value=3),
    st.sampled_from([FULL, SIMPLIFIED]),
)
@settings(max_examples=120, deadline=None)
def test_remainder_invariant(N, n, frac, mode):
    rx = extract_root(N, n, frac_digits=frac, divisor_mode=mode)
    scaled = N * 10 ** (n * frac)
    root = rx.root_scaled
    assert root ** n + rx.remainder == scaled
    assert (root + 1) ** n > scaled
    assert root == int_nth_root_floor(scaled, n) if scaled > 0 else root == 0


@given(st.integers(min_value=2, max_value=10 ** 30), st.integers(min_value=2, max_value=7))
@settings(max_examples=60, deadline=None)
def test_divisor_modes_agree_on_digits(N, n):
    # the trial digit may differ mid-step, but the corrected output never does
    full = extract_root(N, n, divisor_mode=FULL)
    simp = extract_root(N, n, divisor_mode=SIMPLIFIED)
    assert full.digits == simp.digits
    assert full.remainder == simp.remainder


def test_fractional_digits_square_root_of_two():
    rx = extract_root(2, 2, frac_digits=5)
    assert rx.root_string() == "1.41421"
    assert rx.integer_digits == (1,)
    assert rx.fractional_digits == (4, 1, 4, 2, 1)
    assert rx.remainder == 2 * 10 ** 10 - 141421 ** 2


def test_root_string_shapes():
    assert extract_root(144, 2).root_string() == "12"
    assert extract_root(0, 3).root_string() == "0"
    assert extract_root(0, 2, frac_digits=2).root_string() == "0.00"
    # radicand below 1 in the first point still yields a leading digit slot
    assert extract_root(8, 2, frac_digits=1).root_string() == "2.8"


def test_trace_divisor_zero_while_root_is_zero():
    # while the root-so-far is 0 no divisor exists; the 0 sentinel is
    # recorded and the digit falls back to the power-table rule
    rx = extract_root(0, 2, frac_digits=3)
    assert rx.root_string() == "0.000"
    assert all(step.divisor == 0 for step in rx.steps)
    # a zero *digit* after a nonzero leading digit still forms a divisor
    rx2 = extract_root(100, 2)
    assert rx2.digits == (1, 0)
    assert rx2.steps[1].divisor == 20
    assert rx2.steps[1].corrected_digit == 0


def test_validation():
    with pytest.raises(ValueError):
        extract_root(10, 1)
    with pytest.raises(ValueError):
        extract_root(-1, 2)
    with pytest.raises(ValueError):
        extract_root(10, 2, frac_digits=-1)
    with pytest.raises(ValueError):
        extract_root(10, 2, divisor_mode="quick")
    with pytest.raises(TypeError):
        extract_root(10.0, 2)
