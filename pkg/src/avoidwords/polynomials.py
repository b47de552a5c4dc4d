"""Sparse multivariate polynomials with exact rational coefficients.

Polynomials are immutable. Coefficients are Python ints where possible and
``fractions.Fraction`` otherwise; exponent vectors are tuples aligned with a
fixed tuple of variable names. Includes exact division, content/primitive
normalization, pseudo-division, subresultant-PRS resultants and gcds --
everything the elimination machinery needs, at desk scale (schoolbook
algorithms throughout).
"""

import random as _random
from fractions import Fraction
from math import gcd


class NonDivisibleError(ArithmeticError):
    """Exact polynomial division failed: divisor does not divide dividend."""


def _norm_coeff(c):
    # keep ints as ints; demote integral Fractions for speed and clean JSON
    if isinstance(c, Fraction):
        if c.denominator == 1:
            return int(c)
        return c
    return c


class MultivariatePolynomial:
    """A polynomial in named variables, stored as {exponent tuple: coefficient}.

    Zero coefficients are never stored; the zero polynomial has an empty term
    map. Arithmetic requires identical variable tuples (use
    ``extend_variables`` to align).
    """

    __slots__ = ("variables", "terms")

    def __init__(self, variables, terms):
        variables = tuple(variables)
        clean = {}
        nv = len(variables)
        for exps, c in terms.items():
            c = _norm_coeff(c)
            if c == 0:
                continue
            if len(exps) != nv:
                raise ValueError(f"exponent vector {exps} does not match variables {variables}")
            clean[tuple(exps)] = c
        object.__setattr__(self, "variables", variables)
        object.__setattr__(self, "terms", clean)

    def __setattr__(self, name, value):
        raise AttributeError("MultivariatePolynomial is immutable")

    # ---------------- constructors ----------------

    @classmethod
    def zero(cls, variables):
        return cls(variables, {})

    @classmethod
    def constant(cls, variables, c):
        variables = tuple(variables)
        return cls(variables, {(0,) * len(variables): c})

    @classmethod
    def variable(cls, variables, name):
        variables = tuple(variables)
        i = variables.index(name)
        e = [0] * len(variables)
        e[i] = 1
        return cls(variables, {tuple(e): 1})

    @classmethod
    def monomial(cls, variables, exps, c=1):
        return cls(variables, {tuple(exps): c})

    # ---------------- basic queries ----------------

    def __bool__(self):
        return bool(self.terms)

    @property
    def is_zero(self):
        return not self.terms

    def is_constant(self):
        return all(all(e == 0 for e in exps) for exps in self.terms)

    def constant_value(self):
        return self.terms.get((0,) * len(self.variables), 0)

    def degree(self, name):
        """Degree in one variable; -1 for the zero polynomial."""
        if not self.terms:
            return -1
        i = self.variables.index(name)
        return max(e[i] for e in self.terms)

    def total_degree(self):
        if not self.terms:
            return -1
        return max(sum(e) for e in self.terms)

    def __len__(self):
        return len(self.terms)

    def __eq__(self, other):
        if not isinstance(other, MultivariatePolynomial):
            return NotImplemented
        return self.variables == other.variables and self.terms == other.terms

    def __hash__(self):
        return hash((self.variables, frozenset(self.terms.items())))

    # ---------------- ring operations ----------------

    def _check_compatible(self, other):
        if self.variables != other.variables:
            raise ValueError(f"incompatible variable sets {self.variables} vs {other.variables}")

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = MultivariatePolynomial.constant(self.variables, other)
        self._check_compatible(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            s = out.get(e, 0) + c
            if s:
                out[e] = s
            elif e in out:
                del out[e]
        return MultivariatePolynomial(self.variables, out)

    __radd__ = __add__

    def __neg__(self):
        return MultivariatePolynomial(self.variables, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = MultivariatePolynomial.constant(self.variables, other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                return MultivariatePolynomial.zero(self.variables)
            return MultivariatePolynomial(
                self.variables, {e: c * other for e, c in self.terms.items()}
            )
        self._check_compatible(other)
        out = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                s = out.get(e, 0) + c1 * c2
                if s:
                    out[e] = s
                elif e in out:
                    del out[e]
        return MultivariatePolynomial(self.variables, out)

    __rmul__ = __mul__

    def __pow__(self, n):
        if n < 0:
            raise ValueError("negative power")
        result = MultivariatePolynomial.constant(self.variables, 1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base if n > 1 else base
            n >>= 1
        return result

    # ---------------- structure ----------------

    def coefficient_of(self, name, k):
        """The coefficient of name**k, as a polynomial with that exponent zeroed."""
        i = self.variables.index(name)
        out = {}
        for e, c in self.terms.items():
            if e[i] == k:
                ee = list(e)
                ee[i] = 0
                out[tuple(ee)] = c
        return MultivariatePolynomial(self.variables, out)

    def derivative(self, name):
        i = self.variables.index(name)
        out = {}
        for e, c in self.terms.items():
            if e[i] == 0:
                continue
            ee = list(e)
            ee[i] -= 1
            ee = tuple(ee)
            out[ee] = out.get(ee, 0) + c * e[i]
        return MultivariatePolynomial(self.variables, out)

    def substitute_power(self, name, divisor):
        """Replace name**(k*divisor) by name**k; every exponent must divide.

        Raises NonDivisibleError carrying the offending monomial otherwise.
        """
        i = self.variables.index(name)
        out = {}
        for e, c in self.terms.items():
            if e[i] % divisor != 0:
                raise NonDivisibleError(
                    f"exponent of {name} in monomial {self._monom_str(e)} "
                    f"is {e[i]}, not divisible by {divisor}"
                )
            ee = list(e)
            ee[i] //= divisor
            out[tuple(ee)] = c
        return MultivariatePolynomial(self.variables, out)

    def extend_variables(self, variables):
        """Reinterpret over a superset of variables (order given by `variables`)."""
        variables = tuple(variables)
        pos = [variables.index(v) for v in self.variables]
        out = {}
        for e, c in self.terms.items():
            ee = [0] * len(variables)
            for p, k in zip(pos, e):
                ee[p] = k
            out[tuple(ee)] = c
        return MultivariatePolynomial(variables, out)

    def restrict_variables(self, variables):
        """Project onto a variable subset; other exponents must all be zero."""
        variables = tuple(variables)
        drop = [i for i, v in enumerate(self.variables) if v not in variables]
        keep = [self.variables.index(v) for v in variables]
        out = {}
        for e, c in self.terms.items():
            if any(e[i] for i in drop):
                raise ValueError(f"monomial {self._monom_str(e)} uses a dropped variable")
            out[tuple(e[i] for i in keep)] = c
        return MultivariatePolynomial(variables, out)

    def uses_only(self, variables):
        keep = set(variables)
        idx = [i for i, v in enumerate(self.variables) if v not in keep]
        return all(all(e[i] == 0 for i in idx) for e in self.terms)

    # ---------------- normalization ----------------

    def rational_content(self):
        """Positive rational c with self/c integer-primitive; 0 for zero."""
        if not self.terms:
            return Fraction(0)
        num = 0
        den = 1
        for c in self.terms.values():
            f = Fraction(c)
            num = gcd(num, f.numerator)
            den = den * f.denominator // gcd(den, f.denominator)
        return Fraction(num, den)

    def primitive(self):
        """Integer-primitive form with positive leading coefficient (lex order)."""
        if not self.terms:
            return self
        cont = self.rational_content()
        p = self * (1 / cont)
        lead = max(p.terms)  # plain tuple comparison = lex in variable order
        if p.terms[lead] < 0:
            p = -p
        return p

    def integer_coefficients(self):
        return all(isinstance(c, int) for c in self.terms.values())

    def strip_monomial_content(self):
        """Divide out the largest common monomial factor."""
        if not self.terms:
            return self
        mins = None
        for e in self.terms:
            mins = e if mins is None else tuple(map(min, mins, e))
            if not any(mins):
                return self
        return MultivariatePolynomial(
            self.variables,
            {tuple(a - b for a, b in zip(e, mins)): c for e, c in self.terms.items()},
        )

    # ---------------- display / serialization ----------------

    def _monom_str(self, e):
        parts = []
        for v, k in zip(self.variables, e):
            if k == 1:
                parts.append(v)
            elif k > 1:
                parts.append(f"{v}^{k}")
        return "*".join(parts)

    def __str__(self):
        if not self.terms:
            return "0"
        items = sorted(self.terms.items(), key=lambda t: (sum(t[0]), t[0]), reverse=True)
        out = []
        for e, c in items:
            m = self._monom_str(e)
            if not m:
                s = str(c)
            elif c == 1:
                s = m
            elif c == -1:
                s = f"-{m}"
            else:
                s = f"{c}*{m}"
            if out and not s.startswith("-"):
                out.append("+ " + s)
            elif out:
                out.append("- " + s[1:])
            else:
                out.append(s)
        return " ".join(out)

    __repr__ = __str__

    def to_json(self):
        """Canonical JSON form: variables plus sorted (exponents, coeff) terms."""

        def coeff_str(c):
            f = Fraction(c)
            return str(f.numerator) if f.denominator == 1 else f"{f.numerator}/{f.denominator}"

        return {
            "variables": list(self.variables),
            "terms": [
                {"exponents": list(e), "coeff": coeff_str(self.terms[e])}
                for e in sorted(self.terms)
            ],
        }

    @classmethod
    def from_json(cls, data):
        terms = {}
        for t in data["terms"]:
            s = t["coeff"]
            c = Fraction(s) if "/" in s else int(s)
            terms[tuple(t["exponents"])] = c
        return cls(tuple(data["variables"]), terms)


# ---------------- exact division ----------------

def exact_divide(num, den):
    """Return q with num == den*q, else raise NonDivisibleError.

    Long division cancelling leading terms under lex order on exponents.
    """
    if den.is_zero:
        raise ZeroDivisionError("division by zero polynomial")
    num._check_compatible(den)
    variables = num.variables
    lead_d = max(den.terms) if den.terms else None
    cd = den.terms[lead_d]
    rem = dict(num.terms)
    q = {}
    while rem:
        lead_r = max(rem)
        if any(a < b for a, b in zip(lead_r, lead_d)):
            raise NonDivisibleError("leading term not divisible")
        e = tuple(a - b for a, b in zip(lead_r, lead_d))
        c = Fraction(rem[lead_r], cd) if not isinstance(rem[lead_r], Fraction) else rem[lead_r] / cd
        c = _norm_coeff(c)
        q[e] = c
        for ed, cdd in den.terms.items():
            ee = tuple(a + b for a, b in zip(e, ed))
            s = rem.get(ee, 0) - c * cdd
            if s:
                rem[ee] = s
            elif ee in rem:
                del rem[ee]
    return MultivariatePolynomial(variables, q)


def divides(den, num):
    try:
        exact_divide(num, den)
        return True
    except NonDivisibleError:
        return False


# ---------------- univariate views ----------------

def _univ(p, name):
    """Coefficient list [c_0, ..., c_d] of p viewed in `name`; [] for zero."""
    d = p.degree(name)
    if d < 0:
        return []
    return [p.coefficient_of(name, k) for k in range(d + 1)]


def _univ_degree(coeffs):
    return len(coeffs) - 1


def _univ_trim(coeffs):
    while coeffs and coeffs[-1].is_zero:
        coeffs.pop()
    return coeffs


def _univ_to_poly(coeffs, name, variables):
    i = variables.index(name)
    out = MultivariatePolynomial.zero(variables)
    for k, c in enumerate(coeffs):
        if c.is_zero:
            continue
        shifted = {}
        for e, cc in c.terms.items():
            ee = list(e)
            ee[i] += k
            shifted[tuple(ee)] = cc
        out = out + MultivariatePolynomial(variables, shifted)
    return out


def pseudo_division(f, g, name):
    """(q, r) with lc(g)**d * f == q*g + r, deg_name(r) < deg_name(g)."""
    f._check_compatible(g)
    variables = f.variables
    F = _univ(f, name)
    G = _univ(g, name)
    if not G:
        raise ZeroDivisionError("pseudo-division by zero")
    n = _univ_degree(G)
    lc = G[-1]
    m = _univ_degree(F)
    if m < n:
        return MultivariatePolynomial.zero(variables), f
    d = m - n + 1
    Q = [MultivariatePolynomial.zero(variables) for _ in range(m - n + 1)]
    R = list(F)
    steps = 0
    while True:
        _univ_trim(R)
        k = _univ_degree(R)
        if k < n:
            break
        t = R[k]
        # R <- lc*R - t*x^(k-n)*G
        R = [lc * c for c in R]
        Q = [lc * c for c in Q]
        Q[k - n] = Q[k - n] + t
        for j, gc in enumerate(G):
            R[k - n + j] = R[k - n + j] - t * gc
        steps += 1
    scale = lc ** (d - steps)
    Q = [c * scale for c in Q]
    R = [c * scale for c in R]
    q = _univ_to_poly(_univ_trim(Q), name, variables)
    r = _univ_to_poly(_univ_trim(R), name, variables)
    return q, r


def pseudo_rem(f, g, name):
    return pseudo_division(f, g, name)[1]


# ---------------- resultant (subresultant PRS) ----------------

def resultant(p, q, name):
    """Sylvester resultant of p and q with respect to `name`, exact.

    Subresultant PRS (Brown's algorithm); raises ValueError when both inputs
    are degenerate (degree <= 0 in `name`).
    """
    p._check_compatible(q)
    variables = p.variables
    n = p.degree(name)
    m = q.degree(name)
    if n <= 0 and m <= 0:
        raise ValueError(f"both operands degenerate in {name}")
    if p.is_zero or q.is_zero:
        return MultivariatePolynomial.zero(variables)
    res = _prs_resultant(p, q, name)
    return res


def _prs_resultant(f, g, name):
    variables = f.variables
    one = MultivariatePolynomial.constant(variables, 1)
    n = f.degree(name)
    m = g.degree(name)
    sign_swap = 1
    if n < m:
        f, g = g, f
        n, m = m, n
        if n % 2 and m % 2:
            sign_swap = -1
    if m == 0:
        # res(f, const) = const**deg(f)
        return (g ** n) * sign_swap
    d = n - m
    b = one * ((-1) ** (d + 1))
    h = pseudo_rem(f, g, name) * b
    lc = g.coefficient_of(name, m)
    c = lc ** d
    S = [one, c]
    c = -c
    while not h.is_zero:
        k = h.degree(name)
        f, g, n, d = g, h, k, m - k
        m = k
        bb = -lc * (c ** d)
        h = pseudo_rem(f, g, name)
        h = exact_divide(h, bb)
        lc = g.coefficient_of(name, g.degree(name))
        if d > 1:
            c = exact_divide((-lc) ** d, c ** (d - 1))
        else:
            c = -lc
        S.append(-c)
    if g.degree(name) > 0:
        return MultivariatePolynomial.zero(variables)
    return S[-1] * sign_swap


def sylvester_resultant(p, q, name):
    """Resultant via Bareiss determinant of the Sylvester matrix.

    Independent of the PRS path; used as a cross-check oracle in tests.
    """
    p._check_compatible(q)
    variables = p.variables
    m = p.degree(name)
    n = q.degree(name)
    if m <= 0 and n <= 0:
        raise ValueError(f"both operands degenerate in {name}")
    P = _univ(p, name)
    Q = _univ(q, name)
    size = m + n
    zero = MultivariatePolynomial.zero(variables)
    M = [[zero] * size for _ in range(size)]
    for i in range(n):
        for j, c in enumerate(reversed(P)):
            M[i][i + j] = c
    for i in range(m):
        for j, c in enumerate(reversed(Q)):
            M[n + i][i + j] = c
    return _bareiss_det(M, variables)


def _bareiss_det(M, variables):
    n = len(M)
    if n == 0:
        return MultivariatePolynomial.constant(variables, 1)
    M = [row[:] for row in M]
    sign = 1
    prev = MultivariatePolynomial.constant(variables, 1)
    for k in range(n - 1):
        if M[k][k].is_zero:
            for i in range(k + 1, n):
                if not M[i][k].is_zero:
                    M[k], M[i] = M[i], M[k]
                    sign = -sign
                    break
            else:
                return MultivariatePolynomial.zero(variables)
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = M[k][k] * M[i][j] - M[i][k] * M[k][j]
                M[i][j] = exact_divide(num, prev)
            M[i][k] = MultivariatePolynomial.zero(variables)
        prev = M[k][k]
    return M[n - 1][n - 1] * sign


# ---------------- gcd and square-free part ----------------

def polynomial_gcd(p, q):
    """gcd over the rationals, returned integer-primitive with positive lead.

    A random-evaluation screen settles the common trivial case in one
    univariate gcd; a genuinely nontrivial gcd falls through to Brown's
    subresultant remainder sequence.
    """
    if p.is_zero:
        return q.primitive()
    if q.is_zero:
        return p.primitive()
    p._check_compatible(q)
    if p.is_constant() or q.is_constant():
        return MultivariatePolynomial.constant(p.variables, 1)
    common = [v for v in p.variables if p.degree(v) > 0 and q.degree(v) > 0]
    if not common:
        return MultivariatePolynomial.constant(p.variables, 1)
    name = max(common, key=lambda v: min(p.degree(v), q.degree(v)))
    cp, pp = _content_primitive(p, name)
    cq, pq = _content_primitive(q, name)
    cont = polynomial_gcd(cp, cq)
    d = _screened_gcd_degree(pp, pq, name)
    if d == 0:
        return cont.primitive()
    g = _subresultant_gcd(pp, pq, name)
    g = _content_primitive(g, name)[1]
    return (cont * g).primitive()


def _screened_gcd_degree(p, q, name, trials=2):
    """Upper-bound check on deg_name(gcd) by specializing the other variables.

    Returns 0 as soon as one specialization (preserving both leading
    coefficients) has a trivial univariate gcd; otherwise returns a positive
    number (possibly an overestimate -- callers only rely on the 0 case).
    """
    rng = _random.Random(0x5eed)
    others = [v for v in p.variables if v != name]
    lp = p.coefficient_of(name, p.degree(name))
    lq = q.coefficient_of(name, q.degree(name))
    best = None
    attempts = 0
    while trials > 0 and attempts < 12:
        attempts += 1
        point = {v: rng.choice([-7, -5, -4, -3, -2, 2, 3, 4, 5, 7, 8, 11]) for v in others}
        if _eval_at(lp, point) == 0 or _eval_at(lq, point) == 0:
            continue
        a = _eval_univariate(p, name, point)
        b = _eval_univariate(q, name, point)
        d = _int_poly_gcd_degree(a, b)
        best = d if best is None else min(best, d)
        if best == 0:
            return 0
        trials -= 1
    return best if best is not None else max(p.degree(name), q.degree(name))


def _eval_at(p, point):
    total = Fraction(0)
    for e, c in p.terms.items():
        v = Fraction(c)
        for var, k in zip(p.variables, e):
            if k:
                v *= Fraction(point[var]) ** k
        total += v
    return total


def _eval_univariate(p, name, point):
    """Coefficient list of p with every variable but `name` specialized."""
    i = p.variables.index(name)
    out = {}
    for e, c in p.terms.items():
        v = Fraction(c)
        for var, k in zip(p.variables, e):
            if k and var != name:
                v *= Fraction(point[var]) ** k
        out[e[i]] = out.get(e[i], 0) + v
    deg = max((k for k, v in out.items() if v != 0), default=-1)
    return [out.get(k, 0) for k in range(deg + 1)]


def _int_poly_gcd_degree(a, b):
    """Degree of gcd of two univariate rational-coefficient polynomials."""

    def trim(c):
        while c and c[-1] == 0:
            c.pop()
        return c

    a, b = trim(list(a)), trim(list(b))
    if not a:
        return len(b) - 1
    if not b:
        return len(a) - 1
    a = [Fraction(c) for c in a]
    b = [Fraction(c) for c in b]
    while b:
        r = list(a)
        while len(r) >= len(b):
            factor = r[-1] / b[-1]
            shift = len(r) - len(b)
            for k in range(len(b)):
                r[k + shift] -= factor * b[k]
            r = trim(r)
            if not r:
                break
        a, b = b, r
    return len(a) - 1


def _subresultant_gcd(f, g, name):
    """Last nonzero member of Brown's subresultant PRS: a gcd up to content."""
    variables = f.variables
    one = MultivariatePolynomial.constant(variables, 1)
    n = f.degree(name)
    m = g.degree(name)
    if n < m:
        f, g = g, f
        n, m = m, n
    d = n - m
    b = one * ((-1) ** (d + 1))
    h = pseudo_rem(f, g, name) * b
    lc = g.coefficient_of(name, m)
    c = lc ** d
    c = -c
    while not h.is_zero:
        k = h.degree(name)
        if k == 0:
            return one  # gcd is trivial in `name`
        f, g, d = g, h, m - k
        m = k
        bb = -lc * (c ** d)
        h = pseudo_rem(f, g, name)
        h = exact_divide(h, bb)
        lc = g.coefficient_of(name, g.degree(name))
        if d > 1:
            c = exact_divide((-lc) ** d, c ** (d - 1))
        else:
            c = -lc
    return g


def _content_primitive(p, name):
    """(content, primitive part) of p viewed in `name`."""
    coeffs = _univ(p, name)
    cont = MultivariatePolynomial.zero(p.variables)
    for c in coeffs:
        cont = polynomial_gcd(cont, c)
        if cont.is_constant() and not cont.is_zero:
            cont = MultivariatePolynomial.constant(p.variables, 1)
            break
    if cont.is_zero:
        return cont, p
    if cont.is_constant():
        return MultivariatePolynomial.constant(p.variables, 1), p.primitive()
    return cont, exact_divide(p, cont).primitive()


def squarefree_part(p, name):
    """p with repeated factors (in `name`) removed, integer-primitive."""
    if p.degree(name) <= 0:
        return p.primitive() if not p.is_zero else p
    g = polynomial_gcd(p, p.derivative(name))
    if g.is_constant():
        return p.primitive()
    return exact_divide(p, g).primitive()
