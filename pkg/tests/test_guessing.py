import pytest

from avoidwords.bivariate import BivariatePolynomial as BP
from avoidwords.elimination import match_equation
from avoidwords.fixtures import reference_equation, reference_recurrence
from avoidwords.guessing import (
    InsufficientTermsError,
    LinearRecurrence,
    NonIntegralExtensionError,
    SingularRecurrenceError,
    extend_with_recurrence,
    guess_algebraic,
    guess_recurrence,
    verify_recurrence,
)
from avoidwords.scheme import CountSequence, word_counts
from avoidwords.series import TruncatedSeries

CATALAN = [1, 1, 2, 5, 14, 42, 132, 429, 1430, 4862, 16796]


def test_catalan_recurrence_guessed():
    rec = guess_recurrence(word_counts(1, 40), 1, 1)
    assert rec.coeffs == ((-2, -4), (2, 1))  # (n+2) w(n+1) = 2(2n+1) w(n)


def test_constant_sequence():
    rec = guess_recurrence(CountSequence(r=None, terms=[1] * 30), 1, 1)
    assert rec.coeffs == ((-1,), (1,))


def test_r2_recurrence_matches_transcription():
    rec = guess_recurrence(word_counts(2, 60), 2, 3)
    assert rec.coeffs == reference_recurrence(2).coeffs


def test_r3_recurrence_matches_transcription():
    rec = guess_recurrence(word_counts(3, 60), 2, 5)
    assert rec.coeffs == reference_recurrence(3).coeffs


def test_search_is_minimal_in_order_plus_degree():
    # generous bounds must not change the result
    rec = guess_recurrence(word_counts(1, 60), 3, 4)
    assert rec.coeffs == ((-2, -4), (2, 1))


def test_insufficient_terms_rejected():
    with pytest.raises(InsufficientTermsError):
        guess_recurrence(word_counts(1, 10), 3, 3)


def test_guess_none_when_no_recurrence_fits():
    # 2^(n^2)-ish growth has no low-order P-recurrence
    terms = [2 ** (n * n) for n in range(40)]
    assert guess_recurrence(CountSequence(r=None, terms=terms), 2, 2) is None


# -------- verification and extension --------

def test_verify_on_catalan():
    rec = reference_recurrence(1)
    assert verify_recurrence(rec, CountSequence(r=1, terms=CATALAN))


def test_verify_rejects_wrong_sequence():
    rec = reference_recurrence(1)
    assert not verify_recurrence(rec, word_counts(2, 20))


def test_extension_reproduces_catalan():
    rec = reference_recurrence(1)
    ext = extend_with_recurrence(rec, word_counts(1, 1), 10)
    assert ext.terms == CATALAN


def test_extension_r2_reaches_43():
    rec = reference_recurrence(2)
    ext = extend_with_recurrence(rec, word_counts(2, 2), 3)
    assert ext.terms[3] == 43


def test_extension_shorter_than_order_returns_initial():
    rec = reference_recurrence(2)
    ext = extend_with_recurrence(rec, word_counts(2, 5), 1)
    assert ext.terms == word_counts(2, 1).terms


def test_singular_extension_detected():
    # leading coefficient n-1 vanishes at n=1
    rec = LinearRecurrence(((1,), (-1, 1)))
    with pytest.raises(SingularRecurrenceError):
        rec.extend([1, 1], 5)


def test_non_integral_extension_detected():
    # 3*w(n+1) = w(n) forces fractions immediately
    rec = LinearRecurrence(((-1,), (3,)))
    with pytest.raises(NonIntegralExtensionError):
        rec.extend([1], 3)


def test_guess_idempotent_after_extension():
    rec = guess_recurrence(word_counts(2, 60), 2, 3)
    longer = extend_with_recurrence(rec, word_counts(2, 5), 140)
    again = guess_recurrence(longer, 2, 3)
    assert again.coeffs == rec.coeffs


def test_normalization_stable_across_prefix_lengths():
    a = guess_recurrence(word_counts(2, 60), 2, 3)
    b = guess_recurrence(word_counts(2, 90), 2, 3)
    assert a.coeffs == b.coeffs


def test_guess_verifies_on_twice_the_terms():
    for r, (mo, md) in [(1, (1, 1)), (2, (2, 3)), (3, (2, 5))]:
        short = word_counts(r, 60)
        rec = guess_recurrence(short, mo, md)
        assert verify_recurrence(rec, word_counts(r, 120)), r


def test_recurrence_json_roundtrip():
    rec = reference_recurrence(3)
    assert LinearRecurrence.from_json(rec.to_json()).coeffs == rec.coeffs


# -------- algebraic guessing --------

def test_catalan_equation_guessed():
    series = word_counts(1, 30).generating_series()
    p = guess_algebraic(series, 1, 2)
    assert p == reference_equation(1)


def test_geometric_series_equation():
    geo = TruncatedSeries([1] * 25, 25)
    p = guess_algebraic(geo, 1, 1)
    assert p == BP({(1, 1): 1, (0, 1): -1, (0, 0): 1})  # canonical (1-x)F - 1


def test_r2_equation_recovered_from_series():
    series = word_counts(2, 40).generating_series()
    p = guess_algebraic(series, 2, 4)
    assert match_equation(p, reference_equation(2))


def test_algebraic_insufficient_terms():
    series = word_counts(1, 10).generating_series()
    with pytest.raises(InsufficientTermsError):
        guess_algebraic(series, 4, 8)


def test_algebraic_returns_none_below_true_degrees():
    series = word_counts(1, 30).generating_series()
    assert guess_algebraic(series, 1, 1) is None
