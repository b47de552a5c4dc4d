"""Numerical growth checks: does w_r(n) behave like C_r * ((r+1)*2^r)^n * n^(-3/2)?

Ratios and normalized terms are computed exactly as rationals, rounded to
128-bit floats only at the boundary, then accelerated by Richardson (Neville
in 1/n) extrapolation. The growth rates and the -3/2 exponent are on firm
footing; the leading constants are conjectural and reported as such.
"""

import json
from dataclasses import dataclass, asdict
from fractions import Fraction

import mpmath
from mpmath import mp, mpf

from .fixtures import load_cached_recurrence
from .guessing import extend_with_recurrence, verify_recurrence
from .scheme import CountSequence, word_counts

PRECISION_BITS = 128
RICHARDSON_DEPTH = 3
TAIL_POINTS = 8


class TooFewTermsError(ValueError):
    """The sequence is too short for a stable extrapolation."""


def conjectured_growth(r):
    return (r + 1) * 2**r


def reference_constant(r):
    """Conjectural leading constant, evaluated from its closed form (r <= 5)."""
    with mp.workprec(PRECISION_BITS):
        inv_sqrt_pi = 1 / mpmath.sqrt(mpmath.pi)
        forms = {
            1: inv_sqrt_pi,
            2: inv_sqrt_pi * 3 * mpmath.sqrt(3) / (7 * mpmath.sqrt(7)),
            3: inv_sqrt_pi / 8,
            4: inv_sqrt_pi / (6 * mpmath.sqrt(6)),
            5: inv_sqrt_pi * 3 * mpmath.sqrt(3) / 125,
        }
        return forms.get(r)


REFERENCE_FIRST_CORRECTION = {
    1: Fraction(-9, 8),
    2: Fraction(-249, 392),
    3: Fraction(-33, 64),
    4: Fraction(-23, 48),
    5: Fraction(-471, 1000),
}


def _frac_to_mpf(fr):
    fr = Fraction(fr)
    return mpf(fr.numerator) / mpf(fr.denominator)


def _richardson(values, indices, depth):
    """Neville extrapolation to h=0 with h=1/n; exact for poly of degree `depth` in 1/n."""
    h = [mpf(1) / n for n in indices]
    table = list(values)
    for m in range(1, depth + 1):
        nxt = []
        for i in range(len(table) - 1):
            num = h[i] * table[i + 1] - h[i + m] * table[i]
            nxt.append(num / (h[i] - h[i + m]))
        table = nxt
    return table[-1]


def _tail_indices(nmax, count):
    start = nmax - count + 1
    return list(range(start, nmax + 1))


def growth_ratio(seq, depth=RICHARDSON_DEPTH, points=TAIL_POINTS):
    """Extrapolated limit of w(n)/w(n-1) from the tail of the sequence."""
    terms = seq.terms if isinstance(seq, CountSequence) else list(seq)
    if len(terms) < 50:
        raise TooFewTermsError("need at least 50 terms for a growth estimate")
    nmax = len(terms) - 1
    idx = _tail_indices(nmax, points + depth)
    with mp.workprec(PRECISION_BITS):
        ratios = [_frac_to_mpf(Fraction(terms[n], terms[n - 1])) for n in idx]
        return _richardson(ratios, idx, depth)


def _normalized_terms(terms, indices, growth, exponent):
    with mp.workprec(PRECISION_BITS):
        g = mpf(growth) if not isinstance(growth, mpf) else growth
        out = []
        for n in indices:
            t = mpf(terms[n])
            out.append(t / (g**n) / mpf(n) ** exponent)
        return out


def fit_constant(seq, growth, exponent, depth=RICHARDSON_DEPTH, points=TAIL_POINTS):
    """Extrapolated limit of w(n) / (growth^n * n^exponent)."""
    terms = seq.terms if isinstance(seq, CountSequence) else list(seq)
    if growth <= 0:
        raise ValueError("growth must be positive")
    nmax = len(terms) - 1
    idx = _tail_indices(nmax, points + depth)
    with mp.workprec(PRECISION_BITS):
        u = _normalized_terms(terms, idx, growth, mpf(exponent))
        return _richardson(u, idx, depth)


def fit_exponent(seq, growth, depth=2, points=TAIL_POINTS):
    """Free fit of e in w(n) ~ C * growth^n * n^e."""
    terms = seq.terms if isinstance(seq, CountSequence) else list(seq)
    nmax = len(terms) - 1
    idx = _tail_indices(nmax, points + depth)
    with mp.workprec(PRECISION_BITS):
        g = mpf(growth)
        es = []
        for n in idx:
            vn = mpf(terms[n]) / g**n
            vp = mpf(terms[n - 1]) / g ** (n - 1)
            es.append(mpmath.log(vn / vp) / mpmath.log(mpf(n) / (n - 1)))
        return _richardson(es, idx, depth)


def fit_first_correction(seq, growth, exponent, depth=2, points=TAIL_POINTS):
    """Extrapolated c1 in w(n) ~ C growth^n n^exponent (1 + c1/n + ...).

    Uses -n(n+1)*(u(n+1)/u(n) - 1) = c1 + O(1/n), which sidesteps the fitted
    constant entirely.
    """
    terms = seq.terms if isinstance(seq, CountSequence) else list(seq)
    nmax = len(terms) - 1
    idx = _tail_indices(nmax - 1, points + depth)
    with mp.workprec(PRECISION_BITS):
        u = _normalized_terms(terms, list(range(idx[0], nmax + 1)), growth, mpf(exponent))
        base = idx[0]
        vals = []
        for n in idx:
            un = u[n - base]
            un1 = u[n + 1 - base]
            vals.append(-mpf(n) * (n + 1) * (un1 / un - 1))
        return _richardson(vals, idx, depth)


@dataclass
class AsymptoticReport:
    r: int
    nmax: int
    n_range: tuple  # tail window the extrapolations actually used
    tolerance: float
    growth_estimate: float
    conjectured_growth: int
    growth_relative_deviation: float
    passed: bool
    fitted_constant: float
    reference_constant: float | None
    constant_relative_deviation: float | None
    fitted_exponent: float
    fitted_first_correction: float
    reference_first_correction: float | None
    constant_squared_times_pi: float
    source: str
    note: str = (
        "growth rate and exponent are checks of rigorous structure; the "
        "leading constant comparisons are conjectural"
    )

    def to_json(self):
        return asdict(self)

    def text_lines(self):
        dev = self.growth_relative_deviation
        lines = [
            f"r={self.r}  (terms to n={self.nmax}, tail window "
            f"{self.n_range[0]}..{self.n_range[1]}, source: {self.source})",
            f"  growth:    estimated {self.growth_estimate:.10g}   "
            f"conjectured {self.conjectured_growth}   rel.dev {dev:.3e}   "
            f"[{'PASS' if self.passed else 'FAIL'} at tol {self.tolerance}]",
            f"  exponent:  fitted {self.fitted_exponent:+.6f}   expected -1.5",
            f"  constant:  fitted {self.fitted_constant:.10g}"
            + (
                f"   reference {self.reference_constant:.10g}   "
                f"rel.dev {self.constant_relative_deviation:.3e}"
                if self.reference_constant is not None
                else "   (no reference value)"
            ),
            f"  1/n term:  fitted {self.fitted_first_correction:+.6f}"
            + (
                f"   reference {float(self.reference_first_correction):+.6f}"
                if self.reference_first_correction is not None
                else ""
            ),
            f"  C^2*pi:    {self.constant_squared_times_pi:.10g}   "
            "(square of constant times pi, for rational-square inspection)",
        ]
        return lines


def sequence_for(r, nmax, verify_terms=30):
    """Terms w_r(0..nmax), preferring linear extension by a cached recurrence.

    The recurrence is re-verified against freshly computed scheme terms
    before it is trusted for the long extension; with no cached recurrence
    the scheme series is used directly (quadratic cost).
    """
    try:
        rec = load_cached_recurrence(r)
    except (FileNotFoundError, KeyError):
        rec = None
    if rec is None:
        return word_counts(r, nmax)
    check_len = max(verify_terms, rec.order + 10)
    initial = word_counts(r, check_len)
    if not verify_recurrence(rec, initial):
        raise ArithmeticError(f"cached recurrence for r={r} fails on fresh terms")
    if nmax <= check_len:
        return CountSequence(r=r, terms=initial.terms[: nmax + 1])
    return extend_with_recurrence(rec, initial, nmax)


def conjecture_check(r, nmax=2000, tol=0.01, seq=None):
    """Full asymptotic report for one r, with the growth pass/fail verdict."""
    if seq is None:
        seq = sequence_for(r, nmax)
    else:
        nmax = len(seq.terms) - 1
    with mp.workprec(PRECISION_BITS):
        growth = growth_ratio(seq)
        target = conjectured_growth(r)
        dev = abs(growth - target) / target
        c = fit_constant(seq, growth=mpf(target), exponent=mpf(-1.5))
        e = fit_exponent(seq, growth=mpf(target))
        c1 = fit_first_correction(seq, growth=mpf(target), exponent=mpf(-1.5))
        cref = reference_constant(r)
        cdev = None if cref is None else float(abs(c - cref) / cref)
        c1ref = REFERENCE_FIRST_CORRECTION.get(r)
        return AsymptoticReport(
            r=r,
            nmax=nmax,
            n_range=(nmax - TAIL_POINTS - RICHARDSON_DEPTH + 1, nmax),
            tolerance=tol,
            growth_estimate=float(growth),
            conjectured_growth=target,
            growth_relative_deviation=float(dev),
            passed=bool(dev <= tol),
            fitted_constant=float(c),
            reference_constant=None if cref is None else float(cref),
            constant_relative_deviation=cdev,
            fitted_exponent=float(e),
            fitted_first_correction=float(c1),
            reference_first_correction=(
                None if c1ref is None else float(c1ref)
            ),
            constant_squared_times_pi=float(c * c * mpmath.pi),
            source="recurrence-extension" if len(seq.terms) > 60 else "scheme-series",
        )


def report_table(reports):
    lines = []
    for rep in reports:
        lines.extend(rep.text_lines())
        lines.append("")
    return "\n".join(lines).rstrip()


def report_json(reports):
    return json.dumps([rep.to_json() for rep in reports], indent=2, sort_keys=True)
