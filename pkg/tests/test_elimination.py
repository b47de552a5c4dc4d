import pytest

from avoidwords.bivariate import BivariatePolynomial as BP
from avoidwords.elimination import (
    compress_exponents,
    eliminate,
    match_equation,
    verify_annihilation,
    InsufficientSeriesError,
)
from avoidwords.fixtures import reference_equation
from avoidwords.polynomials import (
    MultivariatePolynomial as MP,
    NonDivisibleError,
    polynomial_gcd,
    resultant,
    sylvester_resultant,
)
from avoidwords.scheme import AlgebraicScheme, build_scheme, word_counts


def test_r1_elimination_is_the_defining_equation():
    q = eliminate(build_scheme(1), "buchberger")
    want = MP(("x", "G0_0"), {(1, 2): 1, (0, 1): -1, (0, 0): 1})
    assert q == want


@pytest.mark.parametrize("backend", ["buchberger", "resultants"])
def test_r2_equation_reproduced(backend):
    q = eliminate(build_scheme(2), backend)
    p2 = compress_exponents(q, 2)
    assert match_equation(p2, reference_equation(2)).status in ("equal", "proper-multiple")


def test_backend_agreement_r1_r2():
    for r in (1, 2):
        scheme = build_scheme(r)
        a = compress_exponents(eliminate(scheme, "buchberger"), r)
        b = compress_exponents(eliminate(scheme, "resultants"), r)
        ref = reference_equation(r)
        assert match_equation(a, ref)
        assert match_equation(b, ref)


def test_r2_buchberger_output_even_in_x():
    q = eliminate(build_scheme(2), "buchberger")
    xi = q.variables.index("x")
    assert all(e[xi] % 2 == 0 for e in q.terms)


def test_r3_resultants_within_budget():
    scheme = build_scheme(3)
    q = eliminate(scheme, "resultants", timeout=120)
    p3 = compress_exponents(q, 3)
    m = match_equation(p3, reference_equation(3))
    assert m.status in ("equal", "proper-multiple")
    series = word_counts(3, 60).generating_series()
    assert verify_annihilation(p3, series)


def test_elimination_independent_of_equation_order():
    scheme = build_scheme(2)
    reversed_scheme = AlgebraicScheme(
        r=2,
        variables=scheme.variables,
        equations=dict(sorted(scheme.equations.items(), reverse=True)),
    )
    a = eliminate(scheme, "buchberger")
    b = eliminate(reversed_scheme, "buchberger")
    assert a == b


def test_spec_resultant_example_vs_sylvester():
    # eliminating the middle enumerator from the r=2 system two ways
    scheme = build_scheme(2)
    eq00 = scheme.equations[(0, 0)]
    eq01 = scheme.equations[(0, 1)]
    prs = resultant(eq01, eq00, "G0_1")
    sylv = sylvester_resultant(eq01, eq00, "G0_1")
    assert prs == sylv
    assert not prs.is_zero


# -------- compression --------

def test_compress_identity_for_r1():
    q = MP(("x", "G0_0"), {(1, 2): 1, (0, 1): -1, (0, 0): 1})
    p = compress_exponents(q, 1)
    assert p == BP({(1, 2): 1, (0, 1): -1, (0, 0): 1})


def test_compress_r2_warmup():
    q = eliminate(build_scheme(2), "buchberger")
    p = compress_exponents(q, 2)
    assert p == reference_equation(2)


def test_compress_rejects_mixed_exponents():
    q = MP(("x", "G0_0"), {(1, 0): 1, (2, 0): 1})
    with pytest.raises(NonDivisibleError) as err:
        compress_exponents(q, 2)
    assert "x" in str(err.value)


# -------- annihilation --------

def test_catalan_equation_annihilates_catalan():
    series = word_counts(1, 50).generating_series()
    assert verify_annihilation(reference_equation(1), series)


def test_wrong_series_rejected():
    series = word_counts(2, 50).generating_series()
    assert not verify_annihilation(reference_equation(1), series)


def test_annihilation_needs_margin():
    series = word_counts(1, 3).generating_series()
    with pytest.raises(InsufficientSeriesError):
        verify_annihilation(reference_equation(1), series)


def test_two_cutoffs_never_flip_true_to_false():
    p = reference_equation(2)
    s1 = word_counts(2, 30).generating_series()
    s2 = word_counts(2, 60).generating_series()
    assert verify_annihilation(p, s1) and verify_annihilation(p, s2)


# -------- matching --------

def test_match_identical():
    p = reference_equation(2)
    assert match_equation(p, p).status == "equal"


def test_match_proper_multiple():
    ref = reference_equation(1)
    cofactor = BP({(1, 1): 1, (0, 0): 1})  # x*F + 1
    m = match_equation(ref * cofactor, ref)
    assert m.status == "proper-multiple"
    assert m.quotient == cofactor


def test_match_mismatch():
    assert match_equation(reference_equation(1), reference_equation(2)).status == "mismatch"


# -------- gcd backstop used by the chain --------

def test_final_chain_outputs_share_reference_factor():
    scheme = build_scheme(2)
    a = eliminate(scheme, "buchberger")
    b = eliminate(scheme, "resultants")
    g = polynomial_gcd(a, b)
    p = compress_exponents(g, 2)
    assert match_equation(p, reference_equation(2))
