"""Eliminate the auxiliary enumerators from a scheme.

Two independent backends produce a polynomial in {x, G0_0} that annihilates
the g^(0,0) series: a Groebner basis under a block elimination order, and a
chain of resultants (one auxiliary variable at a time, square-free and
content-reduced after each step). Compressing x^r -> x then yields the
algebraic equation satisfied by the counting generating function itself.
"""

import time
from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .bivariate import BivariatePolynomial
from .groebner import EliminationTimeout, block_elimination_key, groebner_basis
from .polynomials import (
    MultivariatePolynomial,
    resultant,
    squarefree_part,
)
from .series import evaluate_bivariate
from .scheme import scheme_pairs, variable_name

DEFAULT_TIMEOUT = 120.0


class EmptyEliminationError(ArithmeticError):
    """No basis element free of the eliminated variables: an internal defect."""


class InsufficientSeriesError(ValueError):
    """The series is too short for a meaningful annihilation check."""


def _integer_terms(poly):
    """Clear denominators, returning {exps: int}."""
    den = 1
    for c in poly.terms.values():
        f = Fraction(c)
        den = den * f.denominator // gcd(den, f.denominator)
    out = {}
    for e, c in poly.terms.items():
        f = Fraction(c) * den
        out[e] = int(f)
    return out


def eliminate(scheme, backend="buchberger", timeout=DEFAULT_TIMEOUT):
    """A nonzero polynomial in {x, G0_0} vanishing on the scheme's solution.

    backend "buchberger": reduced basis under the elimination order, smallest
    member free of the auxiliary variables. backend "resultants": variables
    removed one at a time, largest (i+j, i) first, with square-free part and
    content stripped after every resultant.
    """
    if backend == "buchberger":
        return _eliminate_buchberger(scheme, timeout)
    if backend == "resultants":
        return _eliminate_resultants(scheme, timeout)
    raise ValueError(f"unknown backend {backend!r}")


def _eliminate_buchberger(scheme, timeout):
    variables = scheme.variables
    keep = {"x", variable_name((0, 0))}
    elim_positions = [k for k, v in enumerate(variables) if v not in keep]
    kept_positions = [variables.index(variable_name((0, 0))), variables.index("x")]
    key_fn = block_elimination_key(len(variables), elim_positions, kept_positions)
    gens = [_integer_terms(poly) for poly in scheme.equations.values()]
    basis = groebner_basis(gens, key_fn, timeout=timeout)
    for p in basis:  # sorted by leading monomial, smallest first
        if all(all(e[pos] == 0 for pos in elim_positions) for e in p):
            out = MultivariatePolynomial(variables, p)
            return out.restrict_variables(("x", variable_name((0, 0)))).primitive()
    raise EmptyEliminationError("no Groebner basis element lies in the kept variables")


def _eliminate_resultants(scheme, timeout):
    deadline = None if timeout is None else time.monotonic() + timeout

    def check_time():
        if deadline is not None and time.monotonic() > deadline:
            raise EliminationTimeout("resultant chain exceeded its time budget")

    order = sorted(
        (p for p in scheme_pairs(scheme.r) if p != (0, 0)),
        key=lambda p: (p[0] + p[1], p[0]),
        reverse=True,
    )
    elim_names = [variable_name(p) for p in order]
    # monomial factors x^a * prod G^e never vanish on the series solution
    # (every enumerator has a nonzero series), so stripping them keeps every
    # intermediate a valid annihilator and stops degree creep
    polys = [poly.strip_monomial_content().primitive() for _, poly in sorted(scheme.equations.items())]
    for step, name in enumerate(elim_names):
        check_time()
        having = [p for p in polys if p.degree(name) > 0]
        others = [p for p in polys if p.degree(name) <= 0]
        if not having:
            continue
        if len(having) == 1:
            # the constraint only projects away; dropping it keeps everything
            # that vanishes on the scheme solution
            polys = others
            continue
        pivot = min(having, key=lambda p: (p.degree(name), len(p)))
        next_name = elim_names[step + 1] if step + 1 < len(elim_names) else None
        produced = []
        for q in having:
            if q is pivot:
                continue
            check_time()
            res = resultant(pivot, q, name)
            if res.is_zero:
                res = _split_common_factor(scheme, pivot, q, name)
                if res is None:
                    continue
            res = res.strip_monomial_content().primitive()
            if next_name is not None and res.degree(next_name) > 0:
                res = squarefree_part(res, next_name)
            produced.append(res.strip_monomial_content().primitive())
        polys = others + produced
    final = [p for p in polys if not p.is_zero]
    if not final:
        raise EmptyEliminationError("resultant chain collapsed to zero")
    best = min(final, key=lambda p: (p.total_degree(), len(p)))
    best = best.strip_monomial_content().primitive()
    return best.restrict_variables(("x", variable_name((0, 0)))).primitive()


def _split_common_factor(scheme, pivot, q, name):
    """Salvage a vanishing resultant: pivot and q share a factor in `name`.

    The shared factor is kept when it vanishes on the series solution
    (checked to a healthy cutoff); otherwise the cofactor of q does, and its
    resultant with the pivot replaces the zero.
    """
    from .polynomials import polynomial_gcd, exact_divide
    from .scheme import solve_series
    from .series import TruncatedSeries, evaluate_polynomial_on_series

    g = polynomial_gcd(pivot, q)
    if g.is_constant():
        return None
    cutoff = 12 * scheme.r + 1
    sol = solve_series(scheme, cutoff)
    assignment = {"x": TruncatedSeries.x(cutoff)}
    for pair, s in sol.series.items():
        assignment[variable_name(pair)] = s
    if evaluate_polynomial_on_series(g, assignment).is_zero():
        return g
    # g is nonzero on the solution, so both cofactors vanish on it
    pivot2 = exact_divide(pivot, g)
    q2 = exact_divide(q, g)
    if pivot2.degree(name) > 0 and q2.degree(name) > 0:
        res = resultant(pivot2, q2, name)
        if not res.is_zero:
            return res
    for cofactor in (q2, pivot2):
        if cofactor.degree(name) <= 0 and not cofactor.is_constant():
            return cofactor
    return None


def compress_exponents(poly, r):
    """Substitute x^r -> x and rename G0_0 to F, canonically.

    Every x exponent must be divisible by r; a violation raises
    NonDivisibleError naming the offending monomial.
    """
    compressed = poly.substitute_power("x", r) if r > 1 else poly
    g00 = variable_name((0, 0))
    out = {}
    xi = compressed.variables.index("x")
    gi = compressed.variables.index(g00)
    for e, c in compressed.terms.items():
        out[(e[xi], e[gi])] = c
    return BivariatePolynomial(out).canonical()


def verify_annihilation(poly, f, margin_factor=2.0):
    """True iff poly(x, f(x)) vanishes identically modulo x^cutoff.

    Requires the cutoff to exceed margin_factor*(deg_x + deg_F); anything
    shorter would accept junk.
    """
    need = int(margin_factor * (poly.deg_x() + poly.deg_f()))
    if f.cutoff < need:
        raise InsufficientSeriesError(
            f"series cutoff {f.cutoff} below required margin {need}"
        )
    return evaluate_bivariate(poly, f).is_zero()


@dataclass
class MatchResult:
    status: str  # "equal" | "proper-multiple" | "mismatch"
    quotient: BivariatePolynomial | None = None

    def __bool__(self):
        return self.status in ("equal", "proper-multiple")


def match_equation(ours, reference):
    """Compare canonical forms; a proper multiple of the reference also passes."""
    a = ours.canonical()
    b = reference.canonical()
    if a == b:
        return MatchResult("equal")
    q = a.divide_exact(b)
    if q is not None and not q.is_zero:
        return MatchResult("proper-multiple", q)
    return MatchResult("mismatch")
