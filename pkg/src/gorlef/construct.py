"""Realizing SI-sequences by strong-Lefschetz Gorenstein algebras.

Pipeline: flatten the SI-sequence at its first non-increase, realize
the flattened sequence as the Hilbert function of a distraction point
set, and take F = sum alpha_i L_i^d with random nonzero weights.  For
degrees below the stabilization the Hessian determinants are checked
directly; at and above it the multiplication maps act on the coordinate
ring of the points and have full rank whenever ell separates the points.
Both routes are recorded at every degree.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from math import factorial
from typing import List, Optional, Sequence, Tuple

from . import linalg
from .apolar import (LinearFormS, Monomial, Poly, RING_R, monomial_eval,
                     power_of_linear)
from .errors import (BadSubsetSizeError, NoWitnessFoundError,
                     PreconditionViolatedError, RealizationMismatchError)
from .gorenstein import (DegreeRecord, GorensteinAlgebra, SlpCertificate,
                         basis as algebra_basis, multiplication_rank)
from .hvector import HVector, hbar
from .linalg import Mat
from .points import OrderIdeal, PointSet, gen_distraction, lex_order_ideal


@dataclass
class StructuredGenerator:
    """F = sum alpha_i L_i^d for the duals L_i of a point set.

    All weights must be nonzero; that is what makes the piecewise
    Hilbert formula (and hence the whole pipeline) apply.
    """

    x: PointSet
    alphas: Tuple[Fraction, ...]
    d: int

    def __post_init__(self):
        self.alphas = tuple(Fraction(a) for a in self.alphas)
        if len(self.alphas) != self.x.size:
            raise ValueError(f"need {self.x.size} weights, got {len(self.alphas)}")
        if any(a == 0 for a in self.alphas):
            raise ValueError("all weights must be nonzero")
        if self.d < 0:
            raise ValueError("negative degree")
        self._expanded: Optional[Poly] = None

    @property
    def expanded(self) -> Poly:
        if self._expanded is None:
            total = Poly.zero(self.x.n + 1, RING_R)
            for a, L in zip(self.alphas, self.x.duals()):
                total = total + power_of_linear(L, self.d).scale(a)
            self._expanded = total
        return self._expanded

    def to_json_dict(self) -> dict:
        return {
            "points": self.x.to_json_dict(),
            "alphas": [str(a) for a in self.alphas],
            "d": self.d,
        }


def structured_hessian_at(points: Sequence[Sequence[Fraction]],
                          alphas: Sequence[Fraction], d: int, j: int,
                          basis_monomials: Sequence[Monomial],
                          ell: LinearFormS) -> Mat:
    """Hessian of sum alpha_i L_i^d at P_ell, assembled from rank-one pieces.

    Hess^j(L^d) evaluated at P is (d!/(d-2j)!) L(P)^(d-2j) v v^T with
    v_u = b_u(P_L); summing over the points avoids expanding F and is
    the workhorse for weight-indexed determinant studies.  Zero weights
    are allowed here precisely to support those studies.
    """
    if 2 * j > d:
        raise PreconditionViolatedError(f"need 2j <= d, got j={j}, d={d}")
    B = list(basis_monomials)
    size = len(B)
    scale = Fraction(factorial(d), factorial(d - 2 * j))
    p_ell = ell.point()
    m = Mat.zero(size, size)
    for alpha, pt in zip(alphas, points):
        alpha = Fraction(alpha)
        if alpha == 0:
            continue
        beta = sum((a * c for a, c in zip(p_ell, pt)), Fraction(0))
        if beta == 0 and d > 2 * j:
            continue
        v = [monomial_eval(b, pt) for b in B]
        c = alpha * scale * (beta ** (d - 2 * j))
        for a_i in range(size):
            va = v[a_i]
            if va == 0:
                continue
            row = m.entries[a_i]
            for b_i in range(size):
                row[b_i] += c * va * v[b_i]
    return m


def structured_hessian_det(x: PointSet, alphas: Sequence[Fraction], d: int,
                           j: int, basis_monomials: Sequence[Monomial],
                           ell: LinearFormS) -> Fraction:
    return linalg.det(structured_hessian_at(x.points, alphas, d, j,
                                            basis_monomials, ell))


def hilbert_formula_check(g: StructuredGenerator) -> Tuple[bool, Tuple[int, ...], Tuple[int, ...]]:
    """Compare h_A against the piecewise point formula.

    Requires d >= 2 tau(X) - 1 and nonzero weights; then
    h_A(i) = h_{A(X)}(min(i, d-i)).  Returns (match, actual, predicted).
    """
    t = g.x.tau()
    if g.d < 2 * t - 1:
        raise PreconditionViolatedError(
            f"piecewise formula needs d >= 2*tau-1 = {2 * t - 1}, got d={g.d}")
    algebra = GorensteinAlgebra(g.expanded, g.d)
    actual = tuple(algebra.hilbert)
    predicted = tuple(g.x.hilbert(min(i, g.d - i)) for i in range(g.d + 1))
    return (actual == predicted, actual, predicted)


@dataclass
class ConstructionResult:
    """A realized SI-sequence with its full audit trail."""

    h: HVector
    ideal: Optional[OrderIdeal]
    x: PointSet
    generator: StructuredGenerator
    algebra: GorensteinAlgebra
    certificate: SlpCertificate
    attempts_used: int

    def to_json_dict(self) -> dict:
        return {
            "h": list(self.h.entries),
            "points": self.x.to_json_dict(),
            "alphas": [str(a) for a in self.generator.alphas],
            "d": self.generator.d,
            "dual_generator": self.generator.expanded.to_json_dict(),
            "hilbert": list(self.algebra.hilbert.entries),
            "certificate": self.certificate.to_json_dict(),
            "attempts_used": self.attempts_used,
        }


def _certificate_lines(algebra: GorensteinAlgebra, g: StructuredGenerator,
                       ell: LinearFormS, t: int) -> List[DegreeRecord]:
    """Both routes at every degree; Hessians drive j < t, ranks j >= t."""
    records = []
    for j in range(algebra.d // 2 + 1):
        det_val = structured_hessian_det(g.x, g.alphas, g.d, j,
                                         algebra.basis(j), ell)
        rk = multiplication_rank(algebra.f, j, algebra.d - 2 * j, ell, algebra.d)
        method = "hessian-det" if j < t else "map-rank"
        records.append(DegreeRecord(j=j, method=method, det=det_val,
                                    rank=rk, required=algebra.hilbert[j]))
    return records


def _trivial_construction(hv: HVector, seed: Optional[int]) -> ConstructionResult:
    """h = (1) or h_1 = 1: one point in P^0 and F = X_0^d."""
    d = hv.socle_degree
    x = PointSet([[Fraction(1)]])
    g = StructuredGenerator(x=x, alphas=(Fraction(1),), d=d)
    algebra = GorensteinAlgebra(g.expanded, d)
    ell = LinearFormS([Fraction(1)])
    records = _certificate_lines(algebra, g, ell, t=0)
    cert = SlpCertificate(kind="slp", ell=ell, per_degree=records,
                          verdict=all(r.ok() for r in records),
                          seed=seed, attempts=1)
    if not cert.verdict or tuple(algebra.hilbert) != hv.entries:
        raise RealizationMismatchError("trivial realization failed")
    return ConstructionResult(h=hv, ideal=None, x=x, generator=g,
                              algebra=algebra, certificate=cert,
                              attempts_used=1)


def construct_slp_algebra(h, rng: random.Random, attempts: int = 50,
                          box: int = 50, alpha_box: int = 20,
                          seed: Optional[int] = None) -> ConstructionResult:
    """Realize an SI-sequence as the Hilbert function of an SLP algebra.

    Raises NotSIError for inputs outside the SI class and
    NoWitnessFoundError (with diagnostics) if every randomized attempt
    fails; success always carries a verdict-true certificate and an
    algebra whose Hilbert function equals h exactly.
    """
    hv = h if isinstance(h, HVector) else HVector(h)
    bar = hbar(hv)  # raises NotSIError when h is not SI
    d = hv.socle_degree
    if len(hv) == 1 or hv[1] == 1:
        return _trivial_construction(hv, seed)

    n = hv[1] - 1
    ideal = lex_order_ideal(bar.delta(), n)
    x = gen_distraction(ideal)
    t = x.tau()
    if t != bar.t or x.size != bar.s:
        raise RealizationMismatchError(
            f"distraction has tau={t}, s={x.size}; expected {bar.t}, {bar.s}")

    failures = 0
    for attempt in range(1, attempts + 1):
        alphas = tuple(Fraction(_nonzero_int(rng, alpha_box))
                       for _ in range(x.size))
        ell = _separating_form(x, rng, box)
        g = StructuredGenerator(x=x, alphas=alphas, d=d)
        algebra = GorensteinAlgebra(g.expanded, d)
        if tuple(algebra.hilbert) != hv.entries:
            raise RealizationMismatchError(
                f"h_A = {list(algebra.hilbert)} != target {list(hv.entries)}")
        records = _certificate_lines(algebra, g, ell, t)
        if all(r.ok() for r in records):
            cert = SlpCertificate(kind="slp", ell=ell, per_degree=records,
                                  verdict=True, seed=seed, attempts=attempt)
            return ConstructionResult(h=hv, ideal=ideal, x=x, generator=g,
                                      algebra=algebra, certificate=cert,
                                      attempts_used=attempt)
        failures += 1
    raise NoWitnessFoundError(
        f"no Lefschetz witness for {list(hv.entries)} in {attempts} attempts",
        diagnostics={"h": list(hv.entries), "attempts": attempts,
                     "failures": failures})


def _nonzero_int(rng: random.Random, box: int) -> int:
    while True:
        v = rng.randint(-box, box)
        if v:
            return v


def _separating_form(x: PointSet, rng: random.Random, box: int,
                     tries: int = 1000) -> LinearFormS:
    """Integer form with ell o L_i != 0 for every point dual."""
    for _ in range(tries):
        coeffs = [rng.randint(-box, box) for _ in range(x.n + 1)]
        if not any(coeffs):
            continue
        ell = LinearFormS(coeffs)
        if all(sum((a * c for a, c in zip(coeffs, p)), Fraction(0)) != 0
               for p in x.points):
            return ell
    raise NoWitnessFoundError("could not sample a point-separating linear form")


def hess_coefficient_criterion(x: PointSet, j: int, d: int,
                               subset: Sequence[int], rng: random.Random,
                               trials: int = 20,
                               box: int = 50) -> Tuple[bool, bool]:
    """Both sides of the determinant-coefficient criterion.

    For |I| = h_{A(X)}(j), the coefficient of prod_{i in I} alpha_i in
    det Hess^j is nonzero exactly when X_I has the same Hilbert value
    as X in degree j.  Returns (det_route, hilbert_route): the first is
    a randomized nonvanishing verdict on F_I = sum_{i in I} L_i^d, the
    second is exact.  Requires d >= 2 tau(X) - 1 and 0 <= j < tau(X).
    """
    t = x.tau()
    if d < 2 * t - 1:
        raise PreconditionViolatedError(f"need d >= 2*tau-1 = {2 * t - 1}")
    if not 0 <= j <= t - 1:
        raise PreconditionViolatedError(f"need 0 <= j <= tau-1 = {t - 1}")
    idx = list(subset)
    if len(set(idx)) != len(idx) or any(not 0 <= i < x.size for i in idx):
        raise BadSubsetSizeError("subset indices must be distinct and in range")
    if len(idx) != x.hilbert(j):
        raise BadSubsetSizeError(
            f"need |I| = h(j) = {x.hilbert(j)}, got {len(idx)}")

    ones = StructuredGenerator(x=x, alphas=(Fraction(1),) * x.size, d=d)
    frame = algebra_basis(ones.expanded, j, d)
    chosen = set(idx)
    indicator = [Fraction(1) if i in chosen else Fraction(0)
                 for i in range(x.size)]
    det_route = False
    for _ in range(trials):
        coeffs = [rng.randint(-box, box) for _ in range(x.n + 1)]
        if not any(coeffs):
            continue
        ell = LinearFormS(coeffs)
        if structured_hessian_det(x, indicator, d, j, frame, ell) != 0:
            det_route = True
            break
    hilbert_route = x.subset(idx).hilbert(j) == x.hilbert(j)
    return (det_route, hilbert_route)
