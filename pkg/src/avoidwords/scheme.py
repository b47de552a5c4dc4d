"""The algebraic scheme for 231-avoiding words with fixed letter multiplicities.

For each 0 <= i <= j <= r-1 there is one enumerator g^(i,j)(x), counting
231-avoiding words (by length) in which one boundary letter occurs i times,
another occurs j times, and every remaining letter occurs exactly r times.
The r(r+1)/2 enumerators satisfy a closed system of quadratic equations:

    g^(i,j) = [i=0][j=0]
              + x * sum_{t=0}^{r-1} g^(i,t) * g^((r-t) mod r, (j-1) mod r)
              + sum_{m=0}^{i-1} x^(m+1) * g^(i-m, j-1)

with index pairs sorted into canonical (small, large) order, since the
enumerator only depends on the unordered pair. Every right-hand term carries
a factor of x, so the system solves uniquely coefficient by coefficient; the
counting sequence is read off g^(0,0) at exponents divisible by r.
"""

from dataclasses import dataclass, field

from .polynomials import MultivariatePolynomial
from .series import TruncatedSeries, evaluate_polynomial_on_series


def canon_pair(i, j):
    """Sort an index pair; enumerators are symmetric in the two boundary letters."""
    return (i, j) if i <= j else (j, i)


def scheme_pairs(r):
    return [(i, j) for i in range(r) for j in range(i, r)]


def variable_name(pair):
    return f"G{pair[0]}_{pair[1]}"


def scheme_variables(r):
    return ("x",) + tuple(variable_name(p) for p in scheme_pairs(r))


@dataclass(frozen=True)
class AlgebraicScheme:
    """The full equation system for one r; equations are stored as RHS - G_ij."""

    r: int
    variables: tuple
    equations: dict  # (i, j) -> MultivariatePolynomial

    def pretty(self):
        lines = []
        for (i, j), poly in sorted(self.equations.items()):
            g = MultivariatePolynomial.variable(self.variables, variable_name((i, j)))
            rhs = poly + g
            text = str(rhs)
            for (a, b) in scheme_pairs(self.r):
                text = text.replace(variable_name((a, b)), f"g^({a},{b})")
            lines.append(f"g^({i},{j}) = {text}")
        return "\n".join(lines)

    def to_json(self):
        return {
            "r": self.r,
            "variables": list(self.variables),
            "equations": {
                f"{i},{j}": poly.to_json() for (i, j), poly in sorted(self.equations.items())
            },
        }


def build_scheme(r):
    """Construct the r(r+1)/2 equations for the given r."""
    if r < 1:
        raise ValueError("r must be a positive integer")
    variables = scheme_variables(r)

    def G(pair):
        return MultivariatePolynomial.variable(variables, variable_name(canon_pair(*pair)))

    x = MultivariatePolynomial.variable(variables, "x")
    equations = {}
    for (i, j) in scheme_pairs(r):
        rhs = MultivariatePolynomial.zero(variables)
        if i == 0 and j == 0:
            rhs = rhs + 1
        for t in range(r):
            rhs = rhs + x * G((i, t)) * G(((r - t) % r, (j - 1) % r))
        for m in range(i):
            rhs = rhs + (x ** (m + 1)) * G((i - m, j - 1))
        equations[(i, j)] = rhs - G((i, j))
    return AlgebraicScheme(r=r, variables=variables, equations=equations)


@dataclass
class SeriesSolution:
    r: int
    cutoff: int
    series: dict  # (i, j) -> TruncatedSeries

    def residuals(self, scheme):
        """Substitute the solution into every equation; all must vanish."""
        assignment = {"x": TruncatedSeries.x(self.cutoff)}
        for pair, s in self.series.items():
            assignment[variable_name(pair)] = s
        return {
            pair: evaluate_polynomial_on_series(poly, assignment)
            for pair, poly in scheme.equations.items()
        }


def _compile_equations(scheme):
    """Parse each equation into (delta, quadratic terms, linear terms).

    Quadratic terms are (coef, pair_a, pair_b) standing for coef*x*g_a*g_b;
    linear terms are (coef, xpow, pair) standing for coef*x^xpow*g_pair.
    """
    r = scheme.r
    pairs = scheme_pairs(r)
    var_index = {variable_name(p): scheme.variables.index(variable_name(p)) for p in pairs}
    compiled = {}
    for (i, j), poly in scheme.equations.items():
        own = var_index[variable_name((i, j))]
        delta = 0
        quads = []
        lins = []
        for exps, c in poly.terms.items():
            xpow = exps[0]
            gs = []
            for p in pairs:
                e = exps[var_index[variable_name(p)]]
                gs.extend([p] * e)
            if not gs and xpow == 0:
                delta = c
            elif len(gs) == 1 and xpow == 0:
                if gs[0] != (i, j) or c != -1:
                    raise AssertionError(f"unexpected bare term in equation {(i, j)}")
            elif len(gs) == 2 and xpow == 1:
                quads.append((c, gs[0], gs[1]))
            elif len(gs) == 1 and xpow >= 1:
                lins.append((c, xpow, gs[0]))
            else:
                raise AssertionError(f"unexpected term shape in equation {(i, j)}: {exps}")
        compiled[(i, j)] = (delta, quads, lins)
    return compiled


def solve_series(scheme, cutoff):
    """Unique power-series solution of the scheme up to the cutoff.

    Every non-constant right-hand term carries a factor of x, so coefficient
    m of each enumerator depends only on coefficients below m; one sweep per
    degree yields the solution. Exact integer arithmetic throughout.
    """
    if cutoff < 1:
        raise ValueError("cutoff must be >= 1")
    r = scheme.r
    pairs = scheme_pairs(r)
    compiled = _compile_equations(scheme)
    coeffs = {p: [0] * cutoff for p in pairs}
    for p in pairs:
        delta = compiled[p][0]
        if delta:
            coeffs[p][0] = delta
    for m in range(1, cutoff):
        k = m - 1
        conv_cache = {}
        for p in pairs:
            _, quads, lins = compiled[p]
            s = 0
            for c, a, b in quads:
                key = (a, b) if a <= b else (b, a)
                v = conv_cache.get(key)
                if v is None:
                    ca = coeffs[key[0]]
                    cb = coeffs[key[1]]
                    v = 0
                    for t in range(k + 1):
                        at = ca[t]
                        if at:
                            bt = cb[k - t]
                            if bt:
                                v += at * bt
                    conv_cache[key] = v
                s += c * v
            for c, xpow, q in lins:
                if m >= xpow:
                    s += c * coeffs[q][m - xpow]
            coeffs[p][m] = s
    return SeriesSolution(
        r=r, cutoff=cutoff, series={p: TruncatedSeries(coeffs[p], cutoff) for p in pairs}
    )


@dataclass
class CountSequence:
    """w_r(0..nmax): the number of 123-avoiding words with r of each of n letters."""

    r: int
    terms: list = field(default_factory=list)

    def __len__(self):
        return len(self.terms)

    def __getitem__(self, n):
        return self.terms[n]

    def __iter__(self):
        return iter(self.terms)

    def to_json(self):
        return {"r": self.r, "terms": [str(t) for t in self.terms]}

    @classmethod
    def from_json(cls, data):
        return cls(r=data["r"], terms=[int(t) for t in data["terms"]])

    def generating_series(self, cutoff=None):
        """f_r(x) = sum w_r(n) x^n as a TruncatedSeries."""
        if cutoff is None:
            cutoff = len(self.terms)
        return TruncatedSeries(self.terms[:cutoff], cutoff)


def word_counts(r, nmax, scheme=None):
    """First nmax+1 counts, via the series solution of the scheme."""
    if nmax < 0:
        raise ValueError("nmax must be >= 0")
    if scheme is None:
        scheme = build_scheme(r)
    sol = solve_series(scheme, r * nmax + 1)
    g00 = sol.series[(0, 0)]
    return CountSequence(r=r, terms=[g00[r * n] for n in range(nmax + 1)])
