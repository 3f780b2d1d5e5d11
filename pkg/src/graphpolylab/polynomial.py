"""Exact sparse multivariate polynomials over arbitrary-precision rationals.

Terms are stored as a dict mapping exponent tuples to nonzero coefficients.
Coefficients are Python ints whenever they are integral and ``Fraction``
otherwise, so subset-expansion polynomials stay on the integer fast path
while flow/reliability prefactors remain exact.  The normal form (variables
sorted, unused variables dropped, zero coefficients pruned) is maintained by
every constructor, which makes ``==`` a reliable polynomial identity test.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import DomainError


def _norm_coeff(c):
    """Collapse integral Fractions to int; reject floats outright."""
    if isinstance(c, float):
        raise DomainError("floating point coefficients are not allowed")
    if isinstance(c, Fraction):
        return int(c) if c.denominator == 1 else c
    return c


class SparsePolynomial:
    """Immutable multivariate polynomial in normal form."""

    __slots__ = ("_vars", "_terms")

    def __init__(self, variables=(), terms=None):
        vars_in = tuple(variables)
        terms_in = dict(terms) if terms else {}
        # normalize: sorted variables, drop unused ones, prune zeros
        used = [False] * len(vars_in)
        clean = {}
        for exps, coeff in terms_in.items():
            coeff = _norm_coeff(coeff)
            if coeff == 0:
                continue
            exps = tuple(exps)
            if len(exps) != len(vars_in):
                raise DomainError("exponent arity does not match variable list")
            clean[exps] = clean.get(exps, 0) + coeff
        clean = {e: c for e, c in clean.items() if c != 0}
        for exps in clean:
            for i, e in enumerate(exps):
                if e:
                    used[i] = True
        keep = [i for i in range(len(vars_in)) if used[i]]
        kept_vars = [vars_in[i] for i in keep]
        order = sorted(range(len(kept_vars)), key=lambda i: kept_vars[i])
        self._vars = tuple(kept_vars[i] for i in order)
        if len(set(self._vars)) != len(self._vars):
            raise DomainError("duplicate variable names")
        self._terms = {}
        for exps, coeff in clean.items():
            new = tuple(exps[keep[i]] for i in order)
            self._terms[new] = self._terms.get(new, 0) + coeff
        self._terms = {e: c for e, c in self._terms.items() if c != 0}

    # -- construction helpers ------------------------------------------------

    @classmethod
    def zero(cls):
        return cls((), {})

    @classmethod
    def constant(cls, c):
        return cls((), {(): c})

    @classmethod
    def variable(cls, name):
        return cls((name,), {(1,): 1})

    @classmethod
    def monomial(cls, variables, exponents, coeff=1):
        return cls(tuple(variables), {tuple(exponents): coeff})

    # -- basic queries ---------------------------------------------------------

    @property
    def variables(self):
        return self._vars

    @property
    def terms(self):
        """Mapping exponent tuple -> coefficient (do not mutate)."""
        return self._terms

    def is_zero(self):
        return not self._terms

    def is_constant(self):
        return not self._vars

    def constant_value(self):
        if self._vars:
            raise DomainError("polynomial is not constant")
        return self._terms.get((), 0)

    def total_degree(self):
        return max((sum(e) for e in self._terms), default=0)

    def degree(self, var):
        if var not in self._vars:
            return 0
        i = self._vars.index(var)
        return max((e[i] for e in self._terms), default=0)

    def coefficient(self, exponents_by_var):
        """Coefficient of the monomial given as {var: exponent}."""
        exps = tuple(exponents_by_var.get(v, 0) for v in self._vars)
        if any(v not in self._vars and e for v, e in exponents_by_var.items()):
            return 0
        return self._terms.get(exps, 0)

    # -- ring operations -------------------------------------------------------

    def _aligned(self, other):
        union = tuple(sorted(set(self._vars) | set(other._vars)))
        return union, self._remap(union), other._remap(union)

    def _remap(self, union):
        idx = {v: i for i, v in enumerate(union)}
        out = {}
        for exps, coeff in self._terms.items():
            new = [0] * len(union)
            for v, e in zip(self._vars, exps):
                new[idx[v]] = e
            out[tuple(new)] = coeff
        return out

    def __add__(self, other):
        other = _coerce(other)
        union, a, b = self._aligned(other)
        for exps, coeff in b.items():
            a[exps] = a.get(exps, 0) + coeff
        return SparsePolynomial(union, a)

    __radd__ = __add__

    def __neg__(self):
        return SparsePolynomial(self._vars, {e: -c for e, c in self._terms.items()})

    def __sub__(self, other):
        return self + (-_coerce(other))

    def __rsub__(self, other):
        return _coerce(other) + (-self)

    def __mul__(self, other):
        other = _coerce(other)
        union, a, b = self._aligned(other)
        out = {}
        for e1, c1 in a.items():
            for e2, c2 in b.items():
                key = tuple(x + y for x, y in zip(e1, e2))
                out[key] = out.get(key, 0) + c1 * c2
        return SparsePolynomial(union, out)

    __rmul__ = __mul__

    def __pow__(self, n):
        if not isinstance(n, int) or n < 0:
            raise DomainError("polynomial powers must be non-negative integers")
        result = SparsePolynomial.constant(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def scale(self, c):
        c = _norm_coeff(Fraction(c) if not isinstance(c, int) else c)
        return SparsePolynomial(self._vars, {e: k * c for e, k in self._terms.items()})

    # -- substitution / evaluation ----------------------------------------------

    def substitute(self, bindings):
        """Simultaneous substitution of variables by polynomials or rationals."""
        subs = {}
        for var, value in bindings.items():
            subs[var] = _coerce(value)
        if not any(v in subs for v in self._vars):
            return self
        powers = {v: [SparsePolynomial.constant(1)] for v in subs}
        result = SparsePolynomial.zero()
        for exps, coeff in self._terms.items():
            term = SparsePolynomial.constant(coeff)
            for v, e in zip(self._vars, exps):
                if e == 0:
                    continue
                if v in subs:
                    cache = powers[v]
                    while len(cache) <= e:
                        cache.append(cache[-1] * subs[v])
                    term = term * cache[e]
                else:
                    term = term * SparsePolynomial.monomial((v,), (e,))
            result = result + term
        return result

    def evaluate(self, point):
        """Exact value at a rational point covering every variable."""
        missing = [v for v in self._vars if v not in point]
        if missing:
            raise DomainError(f"missing bindings for {missing}")
        vals = {v: Fraction(point[v]) for v in self._vars}
        total = Fraction(0)
        for exps, coeff in self._terms.items():
            prod = Fraction(coeff)
            for v, e in zip(self._vars, exps):
                if e:
                    prod *= vals[v] ** e
            total += prod
        return total

    # -- comparison --------------------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = SparsePolynomial.constant(other)
        if not isinstance(other, SparsePolynomial):
            return NotImplemented
        return self._vars == other._vars and self._terms == other._terms

    def __hash__(self):
        return hash((self._vars, frozenset(self._terms.items())))

    # -- serialization -------------------------------------------------------------

    def _sorted_terms(self):
        # graded lexicographic, highest first
        return sorted(self._terms.items(), key=lambda t: (-sum(t[0]), tuple(-e for e in t[0])))

    def to_text(self):
        if not self._terms:
            return "0"
        pieces = []
        for exps, coeff in self._sorted_terms():
            mono = "*".join(
                v if e == 1 else f"{v}^{e}" for v, e in zip(self._vars, exps) if e
            )
            neg = coeff < 0
            mag = -coeff if neg else coeff
            if mono and mag == 1:
                body = mono
            elif mono:
                body = f"{mag}*{mono}"
            else:
                body = str(mag)
            if not pieces:
                pieces.append(f"-{body}" if neg else body)
            else:
                pieces.append(f"{'-' if neg else '+'} {body}")
        return " ".join(pieces)

    def to_json_dict(self):
        return {
            "variables": list(self._vars),
            "terms": [
                {"exponents": list(exps), "coefficient": str(coeff)}
                for exps, coeff in self._sorted_terms()
            ],
        }

    @classmethod
    def from_json_dict(cls, data):
        variables = tuple(data["variables"])
        terms = {}
        for item in data["terms"]:
            exps = tuple(item["exponents"])
            terms[exps] = terms.get(exps, 0) + Fraction(item["coefficient"])
        return cls(variables, terms)

    @classmethod
    def from_text(cls, text):
        return parse_polynomial(text)

    def __repr__(self):
        return f"SparsePolynomial({self.to_text()!r})"

    __str__ = to_text


def _coerce(value):
    if isinstance(value, SparsePolynomial):
        return value
    if isinstance(value, (int, Fraction)):
        return SparsePolynomial.constant(value)
    raise DomainError(f"cannot coerce {type(value).__name__} to polynomial")


def parse_polynomial(text):
    """Parse the canonical text form, e.g. "x^5 - 4*x^3 + 3*x" or "1/2*x*y^2"."""
    s = text.strip()
    if not s:
        raise DomainError("empty polynomial text")
    # split into signed terms ('/' only appears inside rational coefficients)
    chunks = []
    sign = 1
    buf = ""
    for ch in s:
        if ch in "+-":
            if buf.strip():
                chunks.append((sign, buf.strip()))
                buf = ""
                sign = 1
            if ch == "-":
                sign = -sign
            continue
        buf += ch
    if buf.strip():
        chunks.append((sign, buf.strip()))
    if not chunks:
        raise DomainError(f"cannot parse polynomial text: {text!r}")
    result = SparsePolynomial.zero()
    for sign, chunk in chunks:
        coeff = Fraction(sign)
        exps = {}
        for factor in chunk.split("*"):
            factor = factor.strip()
            if not factor:
                raise DomainError(f"empty factor in term {chunk!r}")
            if factor[0].isdigit() or factor[0] == "/":
                coeff *= Fraction(factor)
            else:
                if "^" in factor:
                    var, _, exp = factor.partition("^")
                    e = int(exp)
                else:
                    var, e = factor, 1
                if not var.isidentifier():
                    raise DomainError(f"bad variable name {var!r}")
                exps[var] = exps.get(var, 0) + e
        variables = tuple(sorted(exps))
        result = result + SparsePolynomial(
            variables, {tuple(exps[v] for v in variables): coeff}
        )
    return result


def interpolate_univariate(xs, values):
    """Exact Newton interpolation; returns ascending coefficient list (Fractions)."""
    if len(set(xs)) != len(xs):
        raise DomainError("duplicate interpolation nodes")
    n = len(xs)
    if n != len(values):
        raise DomainError("node/value length mismatch")
    xs = [Fraction(x) for x in xs]
    divided = [Fraction(v) for v in values]
    for level in range(1, n):
        for i in range(n - 1, level - 1, -1):
            divided[i] = (divided[i] - divided[i - 1]) / (xs[i] - xs[i - level])
    # expand Newton form into monomial coefficients
    coeffs = [Fraction(0)] * n
    for i in range(n - 1, -1, -1):
        # multiply current polynomial by (x - xs[i]) and add divided[i]
        new = [Fraction(0)] * n
        for j in range(n - 1):
            new[j + 1] += coeffs[j]
            new[j] -= coeffs[j] * xs[i]
        new[0] += divided[i]
        coeffs = new
    return coeffs


def interpolate_bivariate(xs, ys, values, variables=("x", "y")):
    """Recover the unique polynomial of bidegree (len(xs)-1, len(ys)-1) from a grid.

    ``values[i][j]`` must equal f(xs[i], ys[j]); all nodes exact integers or
    rationals.  Raises on duplicate nodes.
    """
    if len(set(xs)) != len(xs) or len(set(ys)) != len(ys):
        raise DomainError("duplicate interpolation nodes")
    vx, vy = variables
    rows = []
    for i in range(len(xs)):
        if len(values[i]) != len(ys):
            raise DomainError("ragged value grid")
        rows.append(interpolate_univariate(ys, values[i]))
    result = SparsePolynomial.zero()
    for j in range(len(ys)):
        col = [rows[i][j] for i in range(len(xs))]
        cx = interpolate_univariate(xs, col)
        for i, c in enumerate(cx):
            if c:
                result = result + SparsePolynomial((vx, vy), {(i, j): c})
    return result
