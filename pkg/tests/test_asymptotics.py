import cmath
import math
import random
from fractions import Fraction

import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from partition_residues import asymptotics as asy
from partition_residues import (
    BoundaryError,
    KindError,
    SetDifferenceSpec,
    difference_profile,
    dominant_order,
    evaluate_profile,
    generic_profile,
    matches_listed_pattern,
    predict_sign_changes,
    qn_profile,
    set_difference_case,
    set_difference_profile,
    shift_profile,
)
from partition_residues.exact_engine import (
    cyclotomic_polynomial,
    divisors,
    is_cyclotomic_root,
    poly_eval_root,
    qn_exact,
    weighted_combination,
)
from partition_residues.exact_engine.cyclotomic import poly_mul
from partition_residues.special_functions import cpow, dilog_unit
from partition_residues.verification import exact_sign_changes


def phase_close(x, y, tol=1e-12):
    d = abs(x - y) % (2 * math.pi)
    return min(d, 2 * math.pi - d) <= tol


def same_profile(p, q, tol=1e-12):
    assert p.kind == q.kind and p.dominant == q.dominant and p.b == q.b
    assert abs(p.lambda1 - q.lambda1) <= tol and abs(p.lambda2 - q.lambda2) <= tol
    assert abs(p.amplitude - q.amplitude) <= tol * max(1.0, p.amplitude)
    assert phase_close(p.phase, q.phase, tol) or p.amplitude == 0
    assert p.envelope_power == q.envelope_power and p.parity_turn == q.parity_turn
    if p.coefficient is not None:
        assert p.coefficient == q.coefficient


def test_qn_profile_constants():
    p = qn_profile(5, 1)
    assert abs(p.lambda1 - 0.72984) < 5e-5 and abs(p.lambda2 - 0.68327) < 5e-5
    p = qn_profile(6, 1)
    assert abs(complex(p.lambda1, p.lambda2) - (0.8140862520913864 + 0.6233624531812632j)) < 1e-14
    p = qn_profile(3, 1)
    assert p.kind == "zeta3-special" and p.envelope_power == -2 / 3
    assert abs(p.lambda1 - math.pi / (3 * math.sqrt(6))) < 1e-14


def test_qn_profile_routes_exact_cases():
    assert qn_profile(7, 0).kind == "equidistribution-main"
    assert qn_profile(8, 4).kind == "qn-minus-one"
    for b, a in ((5, 3), (11, 7), (9, 6), (13, 8)):
        p, q = qn_profile(b, a), qn_profile(b, b - a)
        assert abs(p.lambda2 + q.lambda2) < 1e-15
        assert phase_close(p.phase, -q.phase)


@pytest.mark.parametrize("b,a", [(5, 1), (5, 2), (7, 3), (6, 1)])
def test_qn_ratio_improves(table1500, b, a):
    p = qn_profile(b, a)

    def dev(n):
        return abs(qn_exact(table1500, b, a, n).evaluate() / evaluate_profile(p, n) - 1)

    assert dev(1500) < dev(400)


def test_difference_profile_known_values():
    p = difference_profile(0, 1, 2)
    assert p.kind == "qn-minus-one" and p.coefficient == 1
    p = difference_profile(1, 4, 5)
    assert abs(p.amplitude - 0.23268) < 5e-5
    with pytest.raises(ValueError):
        difference_profile(2, 2, 5)


@pytest.mark.parametrize("b", range(2, 13))
def test_difference_matches_generic(b):
    for a1 in range(b):
        for a2 in range(b):
            if a1 == a2:
                continue
            explicit = difference_profile(a1, a2, b)
            w = [0] * b
            w[a1], w[a2] = 1, -1
            same_profile(explicit, generic_profile(w, b))


def test_single_pair_set_difference_reduces_to_difference():
    for b in range(5, 13):
        for a1, a2 in ((0, 1), (1, b - 1), (2, 3)):
            same_profile(
                set_difference_profile(SetDifferenceSpec(b, {a1}, {a2})), difference_profile(a1, a2, b)
            )


weights = st.integers(2, 14).flatmap(lambda b: st.lists(st.integers(-5, 5), min_size=b, max_size=b))


@settings(max_examples=150, deadline=None)
@given(weights, st.fractions(Fraction(1, 7), 20))
def test_scaling_invariance(v, c):
    assume(any(v))
    b = len(v)
    try:
        p = generic_profile(v, b)
    except BoundaryError:
        return
    q = generic_profile([c * x for x in v], b)
    assert (p.dominant, p.kind) == (q.dominant, q.kind)
    assert p.lambda1 == q.lambda1 and p.lambda2 == q.lambda2
    assert phase_close(p.phase, q.phase, 1e-12)
    assert abs(q.amplitude - float(c) * p.amplitude) <= 1e-12 * q.amplitude


@settings(max_examples=150, deadline=None)
@given(weights, st.integers(1, 2000))
def test_conjugate_pair_reality(v, n):
    assume(any(v))
    b = len(v)
    try:
        p = generic_profile(v, b)
    except BoundaryError:
        return
    a0 = p.dominant
    if 2 * a0 % b == 0:
        return
    # (1/b) sum over the conjugate pair of P(zeta**-j) Q_n(zeta**j)
    pair = sum(
        poly_eval_root(v, b, -j) * evaluate_profile(qn_profile(b, j), n) for j in (a0, b - a0)
    ) / b
    assert abs(pair.imag) <= 1e-12 * abs(pair)
    value = evaluate_profile(p, n)
    assert value.imag == 0
    assert abs(value.real - pair.real) <= 1e-9 * abs(pair)


def random_cyclotomic_weights(rng):
    b = rng.randint(2, 24)
    poly = [rng.randint(-3, 3) for _ in range(rng.randint(1, 4))]
    for d in divisors(b):
        if rng.random() < 0.4:
            poly = poly_mul(poly, cyclotomic_polynomial(d))
    w = [0] * b
    for k, c in enumerate(poly):
        w[k % b] += c
    return b, w


def test_d0_exact_matches_numeric():
    rng = random.Random(7)
    checked = 0
    while checked < 500:
        b, w = random_cyclotomic_weights(rng)
        if not any(w):
            continue
        exact = [d for d in divisors(b) if not is_cyclotomic_root(w, d)]
        numeric = [d for d in divisors(b) if abs(poly_eval_root(w, b, b // d)) >= 1e-9]
        assert exact == numeric
        checked += 1


def test_d0_of_set_differences():
    assert dominant_order(SetDifferenceSpec(10, {1, 3, 6, 8}, {0, 2, 5, 7})) == 5
    assert dominant_order(SetDifferenceSpec(7, {1}, {2})) == 7
    assert dominant_order(SetDifferenceSpec(12, {0, 4, 8}, {1, 5, 9})) == 4


def test_six_residue_alternating_sum():
    p = generic_profile([-1, 1, -1, 1, -1, 1], 6)
    assert p.kind == "qn-minus-one" and p.coefficient == -1
    assert abs(p.lambda1 - math.pi / (2 * math.sqrt(6))) < 1e-15
    s = set_difference_profile(SetDifferenceSpec(6, {1, 3, 5}, {0, 2, 4}))
    assert s.kind == "qn-minus-one" and s.coefficient == -1
    assert set_difference_case(SetDifferenceSpec(6, {1, 3, 5}, {0, 2, 4})) == asy.PARITY_CLASSES


def test_twelve_residue_family():
    base = [-1, 1, 1, -1, -1, 1, 0, 0, 0, 0, 0, 0]  # (x - 1) * Phi_12(x)
    p = generic_profile(base, 12)
    closed = cpow(1 - 1j * math.sqrt(3), 1.5) / (12 * math.sqrt(2 * math.pi)) * cpow(dilog_unit(Fraction(1, 6)), 0.25)
    assert p.dominant == 2 and p.kind == "cosine-single"
    assert abs(p.amplitude - abs(closed)) < 1e-14
    assert phase_close(p.phase, cmath.phase(closed))
    for r in range(7):
        rolled = [base[(a - r) % 12] for a in range(12)]
        q = generic_profile(rolled, 12)
        assert q.dominant == 2
        assert abs(q.amplitude - p.amplitude) < 1e-12
        assert abs(q.lambda1 - p.lambda1) < 1e-12 and abs(q.lambda2 - p.lambda2) < 1e-12
        assert phase_close(q.phase, p.phase - 2 * math.pi * r / 6)
        same_profile(shift_profile(p, r), q)


@st.composite
def primitive_specs(draw):
    b = draw(st.integers(5, 14))
    pool = draw(st.permutations(range(b)))
    k = draw(st.integers(1, b // 2))
    spec = SetDifferenceSpec(b, pool[:k], pool[k : 2 * k])
    assume(set_difference_case(spec) == asy.PRIMITIVE_D0)
    return spec


@settings(max_examples=100, deadline=None)
@given(primitive_specs(), st.integers(-20, 20))
def test_shift_coherence(spec, r):
    try:
        p = set_difference_profile(spec)
    except BoundaryError:
        return
    q = set_difference_profile(spec.shifted(r))
    s = shift_profile(p, r)
    same_profile(s, q)
    assert s.weights == q.weights and s.d0 == q.d0
    assert phase_close(s.phase, p.phase - 2 * math.pi * r / p.d0)


def test_shift_rejects_other_kinds():
    with pytest.raises(KindError):
        shift_profile(difference_profile(0, 1, 3), 1)
    with pytest.raises(KindError):
        shift_profile(qn_profile(5, 1), 1)


@pytest.mark.parametrize("b,S1,S2,r", [(4, {0}, {2}, 1), (8, {0}, {4}, 2), (12, {0, 1}, {6, 7}, 3)])
def test_quarter_shift_sum_of_squares(table900, b, S1, S2, r):
    spec = SetDifferenceSpec(b, S1, S2)
    p = set_difference_profile(spec)
    assert p.d0 % 4 == 0 and r * 4 == p.d0
    n = 900
    d0 = weighted_combination(spec.weights, b, n, table900)
    d1 = weighted_combination(spec.shifted(r).weights, b, n, table900)
    ratio = float(d0 * d0 + d1 * d1) / (p.amplitude**2 * n**-1.5 * math.exp(4 * p.lambda1 * math.sqrt(n)))
    assert abs(ratio - 1) < 0.03


def test_dominance_ordering():
    ladder = [qn_profile(3, 1), qn_profile(4, 1), qn_profile(2, 1)]
    ladder += [qn_profile(d, 1) for d in range(5, 25)] + [qn_profile(5, 0)]
    rates = [p.lambda1 for p in ladder]
    assert rates == sorted(rates) and len(set(rates)) == len(rates)


def test_listed_patterns():
    assert matches_listed_pattern(SetDifferenceSpec(6, {0, 2, 4}, {1, 3, 5})) is True
    assert matches_listed_pattern(SetDifferenceSpec(9, {0, 3, 6}, {1, 4, 7})) is True
    assert matches_listed_pattern(SetDifferenceSpec(12, {0, 4, 8}, {1, 5, 9})) is True
    assert matches_listed_pattern(SetDifferenceSpec(8, {0, 4}, {1, 5})) is True
    assert set_difference_case(SetDifferenceSpec(12, {0, 6}, {3, 9})) == asy.PRIMITIVE_D0
    assert matches_listed_pattern(SetDifferenceSpec(7, {0}, {1})) is None
    assert set_difference_case(SetDifferenceSpec(7, {0, 1}, {2})) is None


def test_unequal_sizes_equidistribute(table900):
    spec = SetDifferenceSpec(7, {0, 1, 2}, {5})
    p = set_difference_profile(spec)
    assert p.kind == "equidistribution-main" and p.coefficient == Fraction(2, 7)
    exact = weighted_combination(spec.weights, 7, 900, table900)
    assert abs(float(exact) / evaluate_profile(p, 900).real - 1) < 1e-6


def test_third_root_case(table900):
    spec = SetDifferenceSpec(9, {0, 3, 6}, {1, 4, 7})
    p = set_difference_profile(spec)
    assert p.kind == "zeta3-special" and p.dominant == 3 and p.d0 == 3
    # summing classes mod 3 of a modulus-9 count gives the modulus-3 count
    p9, p3 = generic_profile([1, -1, 0] * 3, 9), difference_profile(0, 1, 3)
    assert p9.kind == p3.kind and p9.parity_turn == p3.parity_turn
    assert abs(p9.amplitude - p3.amplitude) < 1e-14 and phase_close(p9.phase, p3.phase)


def test_set_and_spec_validation():
    with pytest.raises(ValueError):
        SetDifferenceSpec(5, {1, 2}, {2, 3})
    with pytest.raises(ValueError):
        SetDifferenceSpec(5, {5}, {1})
    with pytest.raises(ValueError):
        generic_profile([0, 0, 0], 3)
    with pytest.raises(ValueError):
        generic_profile([1, 2], 3)


def test_float_weights_warn(caplog):
    with caplog.at_level("WARNING"):
        p = generic_profile([1.0, -1.0, 0.0, 0.0, 0.0], 5)
    assert "tolerance" in caplog.text
    same_profile(p, difference_profile(0, 1, 5))


def test_tie_raises(monkeypatch):
    monkeypatch.setattr(asy, "L_at_root", lambda a, b: ("psi1", 1.0 + 0j))
    with pytest.raises(BoundaryError):
        generic_profile([1, -1, 0, 0, 0, 0, 0], 7)


def test_profile_validation():
    good = qn_profile(5, 1)
    import dataclasses

    with pytest.raises(ValueError):
        dataclasses.replace(good, amplitude=-1.0)
    with pytest.raises(ValueError):
        dataclasses.replace(good, phase=7.0)
    with pytest.raises(ValueError):
        dataclasses.replace(good, lambda1=0.0)
    with pytest.raises(ValueError):
        dataclasses.replace(good, kind="zeta3-special")
    with pytest.raises(ValueError):
        dataclasses.replace(good, coefficient=Fraction(1))


def test_predicted_sign_changes():
    p = difference_profile(1, 5, 6)
    assert predict_sign_changes(p, 900) == [7, 27, 59, 104, 162, 233, 316, 412, 521, 642, 777]
    # zero of the cosine at n = 0 is not reported
    import dataclasses

    q = dataclasses.replace(p, phase=math.pi / 2)
    got = predict_sign_changes(q, 900)
    assert got and got[0] >= 1
    with pytest.raises(KindError):
        predict_sign_changes(difference_profile(0, 1, 3), 100)
    with pytest.raises(ValueError):
        predict_sign_changes(dataclasses.replace(p, lambda2=0.0), 100)


def test_predictions_bracket_exact_changes(table900):
    p = difference_profile(1, 4, 5)
    values = [weighted_combination(p.weights, 5, n, table900) for n in range(1, 901)]
    exact = exact_sign_changes(values)
    predicted = predict_sign_changes(p, 900)
    assert len(exact) == len(predicted)
    assert all(abs(e - q) <= 1 for e, q in zip(exact[1:], predicted[1:]))
