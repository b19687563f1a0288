"""Artinian Gorenstein algebras from Macaulay dual generators.

A nonzero form F of degree d in R defines A = S/Ann(F).  Catalecticant
ranks give the Hilbert function, pivot rows give monomial bases of each
graded piece, and higher Hessians evaluated at the point dual to a
linear form ell decide the strong Lefschetz property:

    ell is strong Lefschetz  iff  det Hess^j(F)(P_ell) != 0
                                  for all j <= floor(d/2).

Each Hessian verdict can be cross-checked by the rank of the actual
multiplication map x ell^(d-2j): A_j -> A_(d-j); the two routes agree
by the Hessian criterion and any disagreement is raised as a bug.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from math import factorial
from typing import List, Optional, Sequence, Tuple

from . import linalg
from .apolar import (LinearFormS, Monomial, Poly, RING_R, contract_linear_power,
                     contract_monomial, monomial_eval, monomials_of_degree)
from .errors import (DegreeOutOfRangeError, HessianRankMismatchError,
                     ZeroGeneratorError)
from .hvector import HVector
from .linalg import Mat


def _generator_degree(f: Poly, d: Optional[int]) -> int:
    if d is not None:
        return d
    deg = f.degree()
    if deg < 0:
        raise ZeroGeneratorError("zero dual generator has no degree; pass d explicitly")
    return deg


def catalecticant(f: Poly, j: int, d: Optional[int] = None) -> Mat:
    """Catalecticant matrix of F in degree j.

    Rows run over degree-j monomials of S, columns over degree-(d-j)
    monomials, both in descending lex; entry (u, v) = (x^u x^v) o F,
    a scalar carrying the factorial constants of true differentiation.
    """
    if f.ring != RING_R:
        raise ZeroGeneratorError("dual generator must live in R")
    d = _generator_degree(f, d)
    if j < 0 or j > d:
        raise DegreeOutOfRangeError(f"degree {j} outside 0..{d}")
    rows = monomials_of_degree(f.n_vars, j)
    cols = monomials_of_degree(f.n_vars, d - j)
    entries = []
    for u in rows:
        row = []
        for v in cols:
            e = tuple(a + b for a, b in zip(u, v))
            c = f.terms.get(e)
            if c is None:
                row.append(Fraction(0))
            else:
                k = 1
                for x in e:
                    k *= factorial(x)
                row.append(c * k)
        entries.append(row)
    return Mat(entries)


def hilbert_function(f: Poly, d: Optional[int] = None) -> HVector:
    """Hilbert function of A = S/Ann(F): h(j) = rank Cat^j_F."""
    if f.is_zero():
        raise ZeroGeneratorError("zero dual generator")
    d = _generator_degree(f, d)
    return HVector([linalg.rank(catalecticant(f, j, d)) for j in range(d + 1)])


def basis(f: Poly, j: int, d: Optional[int] = None) -> List[Monomial]:
    """Monomial basis of A_j: pivot rows of the degree-j catalecticant.

    Deterministic: descending-lex monomials with top-to-bottom pivoting.
    """
    d = _generator_degree(f, d)
    cat = catalecticant(f, j, d)
    rows = monomials_of_degree(f.n_vars, j)
    return [rows[i] for i in linalg.pivot_rows(cat)]


def hessian_at(f: Poly, j: int, ell: LinearFormS,
               basis_monomials: Optional[Sequence[Monomial]] = None,
               d: Optional[int] = None) -> Mat:
    """j-th Hessian of F evaluated at the point dual to ell.

    Entry (u, v) = ((b_u b_v) o F)(P) over a monomial basis B_j of A_j
    (computed from F's catalecticant pivots unless supplied).  Passing
    an explicit basis is what lets callers probe degenerate generators
    against a fixed frame.
    """
    d = _generator_degree(f, d)
    if j < 0 or 2 * j > d:
        raise DegreeOutOfRangeError(f"Hessian degree {j} needs 0 <= 2j <= {d}")
    if ell.n_vars != f.n_vars:
        raise DegreeOutOfRangeError("variable count mismatch")
    B = list(basis_monomials) if basis_monomials is not None else basis(f, j, d)
    p = ell.point()
    size = len(B)
    m = Mat.zero(size, size)
    for a in range(size):
        for b in range(a, size):
            e = tuple(x + y for x, y in zip(B[a], B[b]))
            val = contract_monomial(e, f).evaluate(p)
            m.entries[a][b] = val
            m.entries[b][a] = val
    return m


def hessian_det(f: Poly, j: int, ell: LinearFormS,
                basis_monomials: Optional[Sequence[Monomial]] = None,
                d: Optional[int] = None) -> Fraction:
    return linalg.det(hessian_at(f, j, ell, basis_monomials, d))


def sample_linear_form(n_vars: int, rng: random.Random,
                       box: int = 50) -> LinearFormS:
    """Uniform integer coefficients in [-box, box], not all zero."""
    while True:
        coeffs = [rng.randint(-box, box) for _ in range(n_vars)]
        if any(coeffs):
            return LinearFormS(coeffs)


def hessian_det_nonzero_as_polynomial(
        f: Poly, j: int, rng: random.Random, trials: int = 20,
        box: int = 50,
        basis_monomials: Optional[Sequence[Monomial]] = None,
        d: Optional[int] = None) -> Tuple[bool, Optional[LinearFormS], Optional[Fraction]]:
    """Decide whether det Hess^j(F) is the nonzero polynomial in ell.

    Schwartz-Zippel style: evaluate at `trials` random integer points.
    Returns (True, witness, value) on the first nonzero evaluation and
    (False, None, None) otherwise.  One-sided: a False verdict means
    "no witness found", never a proof of vanishing.
    """
    if f.is_zero():
        return (False, None, None)
    d = _generator_degree(f, d)
    B = list(basis_monomials) if basis_monomials is not None else basis(f, j, d)
    for _ in range(trials):
        ell = sample_linear_form(f.n_vars, rng, box)
        val = linalg.det(hessian_at(f, j, ell, B, d))
        if val != 0:
            return (True, ell, val)
    return (False, None, None)


def multiplication_rank(f: Poly, i: int, k: int, ell: LinearFormS,
                        d: Optional[int] = None) -> int:
    """Rank of x ell^k : A_i -> A_(i+k), computed without Hessians.

    Uses the matrix [(x^u x^v ell^k) o F] with u over degree-i and v
    over degree-(d-i-k) monomials; spanning sets suffice because the
    apolarity pairing is perfect on A.
    """
    d = _generator_degree(f, d)
    if i < 0 or k < 0 or i + k > d:
        raise DegreeOutOfRangeError(f"need 0 <= i, 0 <= k, i+k <= {d}")
    g = contract_linear_power(ell, k, f)  # degree d - k
    if g.is_zero():
        return 0
    return linalg.rank(catalecticant(g, i, d - k))


@dataclass(frozen=True)
class DegreeRecord:
    """Per-degree certificate line: both verification routes."""

    j: int
    method: str  # "hessian-det" (drives the verdict) or "map-rank"
    det: Optional[Fraction]
    rank: int
    required: int

    def ok(self) -> bool:
        good_rank = self.rank == self.required
        if self.det is None:
            return good_rank
        return good_rank and self.det != 0

    def to_json_dict(self) -> dict:
        return {
            "j": self.j,
            "method": self.method,
            "det": None if self.det is None else str(self.det),
            "rank": self.rank,
            "required": self.required,
        }


@dataclass
class SlpCertificate:
    """Outcome of a randomized Lefschetz check.

    verdict=True means every degree line passed at `ell`; verdict=False
    after exhausting attempts means only that no witness was found.
    """

    kind: str  # "slp" or "wlp"
    ell: Optional[LinearFormS]
    per_degree: List[DegreeRecord] = field(default_factory=list)
    verdict: bool = False
    seed: Optional[int] = None
    attempts: int = 0

    def to_json_dict(self) -> dict:
        return {
            "kind": self.kind,
            "ell": None if self.ell is None else [str(c) for c in self.ell.coeffs],
            "degrees": [r.to_json_dict() for r in self.per_degree],
            "verdict": self.verdict,
            "seed": self.seed,
            "attempts": self.attempts,
        }


class GorensteinAlgebra:
    """A = S/Ann(F) with cached Hilbert function and graded bases."""

    def __init__(self, f: Poly, d: Optional[int] = None):
        if f.is_zero():
            raise ZeroGeneratorError("zero dual generator")
        if not f.is_homogeneous():
            raise ZeroGeneratorError("dual generator must be homogeneous")
        self.f = f
        self.d = _generator_degree(f, d)
        self.n_vars = f.n_vars
        self.hilbert: HVector = hilbert_function(f, self.d)
        self._bases: dict = {}

    def basis(self, j: int) -> List[Monomial]:
        if j not in self._bases:
            self._bases[j] = basis(self.f, j, self.d)
        return self._bases[j]

    def codimension(self) -> int:
        return self.hilbert[1] if self.hilbert.socle_degree >= 1 else 0


def _slp_lines_at(algebra: GorensteinAlgebra, ell: LinearFormS) -> List[DegreeRecord]:
    """Evaluate both routes at every j <= floor(d/2); raise on disagreement."""
    f, d, h = algebra.f, algebra.d, algebra.hilbert
    records = []
    for j in range(d // 2 + 1):
        dv = linalg.det(hessian_at(f, j, ell, algebra.basis(j), d))
        rk = multiplication_rank(f, j, d - 2 * j, ell, d)
        if (dv != 0) != (rk == h[j]):
            raise HessianRankMismatchError(
                f"j={j}: det={dv} but rank={rk}, required {h[j]}")
        records.append(DegreeRecord(j=j, method="hessian-det", det=dv,
                                    rank=rk, required=h[j]))
    return records


def check_slp(f: Poly, rng: random.Random, attempts: int = 50,
              box: int = 50, seed: Optional[int] = None,
              d: Optional[int] = None) -> SlpCertificate:
    """Search for a strong Lefschetz element of A = S/Ann(F).

    Samples integer linear forms and certifies via Hessian determinants
    at every j <= floor(d/2), cross-validated by multiplication ranks.
    """
    algebra = GorensteinAlgebra(f, d)
    cert = SlpCertificate(kind="slp", ell=None, seed=seed)
    for attempt in range(1, attempts + 1):
        ell = sample_linear_form(algebra.n_vars, rng, box)
        records = _slp_lines_at(algebra, ell)
        cert.attempts = attempt
        if all(r.ok() for r in records):
            cert.ell = ell
            cert.per_degree = records
            cert.verdict = True
            return cert
        cert.per_degree = records  # keep the last failure for diagnostics
    cert.verdict = False
    return cert


def check_wlp(f: Poly, rng: random.Random, attempts: int = 50,
              box: int = 50, seed: Optional[int] = None,
              d: Optional[int] = None) -> SlpCertificate:
    """Search for a weak Lefschetz element: x ell full rank in each degree."""
    algebra = GorensteinAlgebra(f, d)
    h = algebra.hilbert
    d_ = algebra.d
    cert = SlpCertificate(kind="wlp", ell=None, seed=seed)
    for attempt in range(1, attempts + 1):
        ell = sample_linear_form(algebra.n_vars, rng, box)
        records = []
        for i in range(d_):
            rk = multiplication_rank(algebra.f, i, 1, ell, d_)
            need = min(h[i], h[i + 1])
            records.append(DegreeRecord(j=i, method="map-rank", det=None,
                                        rank=rk, required=need))
        cert.attempts = attempt
        if all(r.ok() for r in records):
            cert.ell = ell
            cert.per_degree = records
            cert.verdict = True
            return cert
        cert.per_degree = records
    cert.verdict = False
    return cert
