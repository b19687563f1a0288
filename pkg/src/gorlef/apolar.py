"""Polynomial rings S = k[x_0..x_n], R = k[X_0..X_n] and the apolarity action.

S acts on R by differentiation: x_i acts as d/dX_i (true derivatives,
with factorial constants; characteristic zero throughout).  Monomials
are exponent tuples; polynomials are sparse exponent->coefficient maps
with a fixed degree-then-descending-lex term order for deterministic
iteration.
"""

from __future__ import annotations

from fractions import Fraction
from math import comb, factorial
from typing import Dict, Iterator, List, Sequence, Tuple

from .errors import RingMismatchError

Monomial = Tuple[int, ...]

RING_S = "S"  # differential operators, variables x_i
RING_R = "R"  # forms being differentiated, variables X_i


def monomial_degree(m: Monomial) -> int:
    return sum(m)


def monomials_of_degree(n_vars: int, degree: int) -> List[Monomial]:
    """All degree-`degree` monomials in n_vars variables, descending lex.

    Descending lex with x_0 > x_1 > ... : (d,0,..) first, (0,..,0,d) last.
    """
    if n_vars == 0:
        return [()] if degree == 0 else []
    if n_vars == 1:
        return [(degree,)]
    out: List[Monomial] = []
    for first in range(degree, -1, -1):
        for rest in monomials_of_degree(n_vars - 1, degree - first):
            out.append((first,) + rest)
    return out


def count_monomials(n_vars: int, degree: int) -> int:
    return comb(n_vars - 1 + degree, degree)


def monomial_eval(m: Monomial, point: Sequence[Fraction]) -> Fraction:
    """Evaluate the monomial at a coordinate tuple."""
    out = Fraction(1)
    for e, p in zip(m, point):
        if e:
            out *= Fraction(p) ** e
    return out


def _sort_key(m: Monomial):
    # total degree, then descending lex (negated exponents sort lex-descending)
    return (sum(m), tuple(-e for e in m))


class Poly:
    """Sparse multivariate polynomial over Q, tagged with its ring."""

    __slots__ = ("n_vars", "ring", "terms")

    def __init__(self, n_vars: int, ring: str, terms: Dict[Monomial, Fraction] = None):
        if ring not in (RING_S, RING_R):
            raise ValueError(f"unknown ring tag {ring!r}")
        self.n_vars = n_vars
        self.ring = ring
        self.terms: Dict[Monomial, Fraction] = {}
        if terms:
            for m, c in terms.items():
                c = Fraction(c)
                if c == 0:
                    continue
                if len(m) != n_vars:
                    raise ValueError(f"exponent {m} has wrong arity for {n_vars} variables")
                self.terms[tuple(int(e) for e in m)] = c

    @classmethod
    def zero(cls, n_vars: int, ring: str) -> "Poly":
        return cls(n_vars, ring, {})

    @classmethod
    def monomial(cls, n_vars: int, ring: str, m: Monomial, coef=1) -> "Poly":
        return cls(n_vars, ring, {tuple(m): Fraction(coef)})

    @classmethod
    def constant(cls, n_vars: int, ring: str, c) -> "Poly":
        return cls(n_vars, ring, {(0,) * n_vars: Fraction(c)})

    def is_zero(self) -> bool:
        return not self.terms

    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        if not self.terms:
            return -1
        return max(sum(m) for m in self.terms)

    def is_homogeneous(self) -> bool:
        degs = {sum(m) for m in self.terms}
        return len(degs) <= 1

    def sorted_terms(self) -> List[Tuple[Monomial, Fraction]]:
        return sorted(self.terms.items(), key=lambda mc: _sort_key(mc[0]))

    def _check_compat(self, other: "Poly"):
        if self.ring != other.ring or self.n_vars != other.n_vars:
            raise RingMismatchError(
                f"{self.ring}[{self.n_vars}] vs {other.ring}[{other.n_vars}]")

    def __add__(self, other: "Poly") -> "Poly":
        self._check_compat(other)
        terms = dict(self.terms)
        for m, c in other.terms.items():
            terms[m] = terms.get(m, Fraction(0)) + c
        return Poly(self.n_vars, self.ring, terms)

    def __sub__(self, other: "Poly") -> "Poly":
        self._check_compat(other)
        terms = dict(self.terms)
        for m, c in other.terms.items():
            terms[m] = terms.get(m, Fraction(0)) - c
        return Poly(self.n_vars, self.ring, terms)

    def __mul__(self, other: "Poly") -> "Poly":
        self._check_compat(other)
        terms: Dict[Monomial, Fraction] = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = tuple(a + b for a, b in zip(m1, m2))
                terms[m] = terms.get(m, Fraction(0)) + c1 * c2
        return Poly(self.n_vars, self.ring, terms)

    def scale(self, c) -> "Poly":
        c = Fraction(c)
        return Poly(self.n_vars, self.ring,
                    {m: v * c for m, v in self.terms.items()})

    def __neg__(self) -> "Poly":
        return self.scale(-1)

    def __eq__(self, other) -> bool:
        return (isinstance(other, Poly) and self.ring == other.ring
                and self.n_vars == other.n_vars and self.terms == other.terms)

    def evaluate(self, point: Sequence) -> Fraction:
        pt = [Fraction(p) for p in point]
        total = Fraction(0)
        for m, c in self.terms.items():
            total += c * monomial_eval(m, pt)
        return total

    def coefficient(self, m: Monomial) -> Fraction:
        return self.terms.get(tuple(m), Fraction(0))

    def __repr__(self) -> str:
        if not self.terms:
            return "0"
        var = "x" if self.ring == RING_S else "X"
        bits = []
        for m, c in self.sorted_terms():
            factors = [f"{var}{i}" + (f"^{e}" if e > 1 else "")
                       for i, e in enumerate(m) if e]
            body = "*".join(factors) if factors else "1"
            bits.append(f"{c}*{body}" if c != 1 or not factors else body)
        return " + ".join(bits)

    def to_json_dict(self) -> dict:
        return {
            "n_vars": self.n_vars,
            "ring": self.ring,
            "terms": [{"exp": list(m), "coef": str(c)}
                      for m, c in self.sorted_terms()],
        }

    @classmethod
    def from_json_dict(cls, data: dict) -> "Poly":
        terms = {tuple(t["exp"]): Fraction(t["coef"]) for t in data["terms"]}
        return cls(int(data["n_vars"]), data["ring"], terms)


def _falling_product(e_top: Monomial, e_low: Monomial) -> int:
    """prod_k e_top_k * (e_top_k - 1) * ... over e_low_k factors."""
    out = 1
    for t, l in zip(e_top, e_low):
        for step in range(l):
            out *= t - step
    return out


def contract(a: Poly, f: Poly) -> Poly:
    """Apply the differential operator a in S to f in R.

    x^e acts as the mixed partial d^{|e|}/dX^e; extended bilinearly.
    """
    if a.ring != RING_S or f.ring != RING_R:
        raise RingMismatchError(f"contract needs S operand and R target, got {a.ring}, {f.ring}")
    if a.n_vars != f.n_vars:
        raise RingMismatchError(f"variable count mismatch: {a.n_vars} vs {f.n_vars}")
    out: Dict[Monomial, Fraction] = {}
    for ea, ca in a.terms.items():
        for ef, cf in f.terms.items():
            if any(x < y for x, y in zip(ef, ea)):
                continue
            m = tuple(x - y for x, y in zip(ef, ea))
            coef = ca * cf * _falling_product(ef, ea)
            if coef:
                out[m] = out.get(m, Fraction(0)) + coef
    return Poly(f.n_vars, RING_R, out)


def contract_monomial(e: Monomial, f: Poly) -> Poly:
    """Contraction by a single S-monomial, without building the operator."""
    out: Dict[Monomial, Fraction] = {}
    for ef, cf in f.terms.items():
        if any(x < y for x, y in zip(ef, e)):
            continue
        m = tuple(x - y for x, y in zip(ef, e))
        coef = cf * _falling_product(ef, e)
        if coef:
            out[m] = out.get(m, Fraction(0)) + coef
    return Poly(f.n_vars, RING_R, out)


class _LinearForm:
    """Shared guts of linear forms in either ring."""

    __slots__ = ("coeffs",)
    ring = RING_R

    def __init__(self, coeffs: Sequence):
        self.coeffs: Tuple[Fraction, ...] = tuple(Fraction(c) for c in coeffs)
        if not self.coeffs:
            raise ValueError("empty coefficient vector")
        if all(c == 0 for c in self.coeffs):
            raise ValueError("zero linear form")

    @property
    def n_vars(self) -> int:
        return len(self.coeffs)

    def to_poly(self) -> Poly:
        n = self.n_vars
        terms = {}
        for i, c in enumerate(self.coeffs):
            if c:
                e = [0] * n
                e[i] = 1
                terms[tuple(e)] = c
        return Poly(n, self.ring, terms)

    def __eq__(self, other) -> bool:
        return type(self) is type(other) and self.coeffs == other.coeffs

    def __repr__(self) -> str:
        return f"{type(self).__name__}({[str(c) for c in self.coeffs]})"


class LinearFormR(_LinearForm):
    """Linear form L = sum a_i X_i in R (dual of a point)."""

    ring = RING_R

    def power(self, d: int) -> Poly:
        return power_of_linear(self, d)


class LinearFormS(_LinearForm):
    """Linear form ell = sum a_i x_i in S (a Lefschetz candidate)."""

    ring = RING_S

    def point(self) -> Tuple[Fraction, ...]:
        """Coordinates of the point in R-space dual to ell."""
        return self.coeffs

    def pair(self, L: LinearFormR) -> Fraction:
        """ell o L = sum a_i b_i, the first-order contraction."""
        if self.n_vars != L.n_vars:
            raise RingMismatchError("variable count mismatch")
        return sum((a * b for a, b in zip(self.coeffs, L.coeffs)), Fraction(0))

    def power(self, k: int) -> Poly:
        """ell^k expanded in S."""
        n = self.n_vars
        terms: Dict[Monomial, Fraction] = {}
        for m in monomials_of_degree(n, k):
            c = _multinomial(k, m) * monomial_eval(m, self.coeffs)
            if c:
                terms[m] = c
        return Poly(n, RING_S, terms)


def _multinomial(d: int, e: Monomial) -> int:
    out = factorial(d)
    for x in e:
        out //= factorial(x)
    return out


def power_of_linear(L: LinearFormR, d: int) -> Poly:
    """Expand L^d by the multinomial theorem.

    Exact and far cheaper than repeated multiplication for the dense
    powers this package builds constantly.
    """
    if d < 0:
        raise ValueError("negative power")
    n = L.n_vars
    if d == 0:
        return Poly.constant(n, RING_R, 1)
    terms: Dict[Monomial, Fraction] = {}
    for m in monomials_of_degree(n, d):
        c = _multinomial(d, m) * monomial_eval(m, L.coeffs)
        if c:
            terms[m] = c
    return Poly(n, RING_R, terms)


def contract_linear_power(ell: LinearFormS, k: int, f: Poly) -> Poly:
    """ell^k o f via k first-order passes; avoids expanding ell^k."""
    if f.ring != RING_R:
        raise RingMismatchError("target must live in R")
    if ell.n_vars != f.n_vars:
        raise RingMismatchError("variable count mismatch")
    g = f
    for _ in range(k):
        out: Dict[Monomial, Fraction] = {}
        for ef, cf in g.terms.items():
            for i, a in enumerate(ell.coeffs):
                if a == 0 or ef[i] == 0:
                    continue
                m = ef[:i] + (ef[i] - 1,) + ef[i + 1:]
                coef = cf * a * ef[i]
                out[m] = out.get(m, Fraction(0)) + coef
        g = Poly(f.n_vars, RING_R, out)
    return g


def contract_power_formula_check(m: Monomial, L: LinearFormR, d: int) -> bool:
    """Verify x^m o L^d = d!/(d-j)! * m(P_L) * L^(d-j) with j = |m|.

    P_L is the coefficient point of L.  Returns the comparison verdict
    computed from both sides independently.
    """
    j = monomial_degree(m)
    if j > d:
        lhs = contract_monomial(m, power_of_linear(L, d))
        return lhs.is_zero()
    lhs = contract_monomial(m, power_of_linear(L, d))
    scale = Fraction(factorial(d), factorial(d - j)) * monomial_eval(m, L.coeffs)
    rhs = power_of_linear(L, d - j).scale(scale)
    return lhs == rhs
