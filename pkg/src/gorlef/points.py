"""Finite point sets in projective space and their Hilbert functions.

h_{A(X)}(i) is the rank of the evaluation matrix of degree-i monomials
at the points; it increases to s = |X| and stabilizes there from the
regularity degree tau(X) on.  Generators produce the standard
configurations (rational normal curves, two lines, distractions of
monomial order ideals) used by the realization pipeline and the
theorem verifiers.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import comb
from typing import Dict, FrozenSet, List, Optional, Sequence, Tuple

from . import linalg
from .apolar import LinearFormR, Monomial, monomial_eval, monomials_of_degree
from .errors import (DuplicateParameterError, NotOSequenceError,
                     NotPlaneConfigError, RealizationMismatchError)
from .hvector import HVector, is_O_sequence, macaulay_bound
from .linalg import Mat


def _normalize(coords: Sequence) -> Tuple[Fraction, ...]:
    v = [Fraction(c) for c in coords]
    for c in v:
        if c != 0:
            return tuple(x / c for x in v)
    raise ValueError("zero coordinate vector is not a projective point")


class PointSet:
    """Distinct points of P^n, normalized to leading coordinate 1."""

    def __init__(self, points: Sequence[Sequence]):
        if not points:
            raise ValueError("empty point set")
        norm = [_normalize(p) for p in points]
        n_coords = len(norm[0])
        if any(len(p) != n_coords for p in norm):
            raise ValueError("points of mixed dimension")
        if len(set(norm)) != len(norm):
            raise ValueError("duplicate projective points")
        self.points: Tuple[Tuple[Fraction, ...], ...] = tuple(norm)
        self.n = n_coords - 1
        self._hilbert: Dict[int, int] = {0: 1}
        self._tau: Optional[int] = None
        self._tau = self.tau()  # eager; also fills the hilbert cache

    @property
    def size(self) -> int:
        return len(self.points)

    def duals(self) -> List[LinearFormR]:
        """Linear forms L_i in R whose coefficients are the coordinates."""
        return [LinearFormR(p) for p in self.points]

    def evaluation_matrix(self, i: int) -> Mat:
        mons = monomials_of_degree(self.n + 1, i)
        return Mat([[monomial_eval(m, p) for m in mons] for p in self.points])

    def hilbert(self, i: int) -> int:
        if i < 0:
            return 0
        if i not in self._hilbert:
            self._hilbert[i] = linalg.rank(self.evaluation_matrix(i))
        return self._hilbert[i]

    def hilbert_vector(self, through: int) -> Tuple[int, ...]:
        return tuple(self.hilbert(i) for i in range(through + 1))

    def tau(self) -> int:
        """Least degree where the Hilbert function reaches s."""
        if self._tau is not None:
            return self._tau
        i = 0
        while self.hilbert(i) < self.size:
            i += 1
        self._tau = i
        return i

    def subset(self, indices: Sequence[int]) -> "PointSet":
        return PointSet([self.points[i] for i in indices])

    def __eq__(self, other) -> bool:
        return isinstance(other, PointSet) and self.points == other.points

    def __repr__(self) -> str:
        return f"PointSet(n={self.n}, s={self.size})"

    def to_json_dict(self) -> dict:
        return {
            "n": self.n,
            "points": [[str(c) for c in p] for p in self.points],
        }

    @classmethod
    def from_json_dict(cls, data: dict) -> "PointSet":
        return cls([[Fraction(c) for c in p] for p in data["points"]])


def hilbert_of_points(x: PointSet, i: int) -> int:
    return x.hilbert(i)


def tau(x: PointSet) -> int:
    return x.tau()


# ---------------------------------------------------------------------------
# Generators


def gen_rnc(n: int, s: int, params: Sequence) -> PointSet:
    """s points (1 : t : t^2 : ... : t^n) on the rational normal curve."""
    ts = [Fraction(t) for t in params]
    if len(ts) != s:
        raise ValueError(f"need {s} parameters, got {len(ts)}")
    if len(set(ts)) != len(ts):
        raise DuplicateParameterError("curve parameters must be distinct")
    return PointSet([[t ** k for k in range(n + 1)] for t in ts])


def gen_collinear(n: int, s: int) -> PointSet:
    """s points (1 : k : 0 : ... : 0) on a line in P^n."""
    if n < 1:
        raise ValueError("need n >= 1")
    pts = []
    for k in range(s):
        p = [Fraction(0)] * (n + 1)
        p[0], p[1] = Fraction(1), Fraction(k)
        pts.append(p)
    return PointSet(pts)


def gen_two_lines(s1: int, s2: int, share_intersection: bool) -> PointSet:
    """Points on the singular conic x0*x1 = 0 in P^2.

    Group 1 sits on {x1 = 0}, group 2 on {x0 = 0}.  When sharing, the
    intersection (0:0:1) is counted in both groups but appears once, so
    s = s1 + s2 - 1; otherwise it is excluded and s = s1 + s2.
    Group membership is recoverable from the coordinates.
    """
    if s1 < 1 or s2 < 1:
        raise ValueError("each line needs at least one point")
    pts: List[List[Fraction]] = []
    if share_intersection:
        pts.append([Fraction(0), Fraction(0), Fraction(1)])
        for k in range(s1 - 1):
            pts.append([Fraction(1), Fraction(0), Fraction(k)])
        for k in range(s2 - 1):
            pts.append([Fraction(0), Fraction(1), Fraction(k)])
    else:
        for k in range(s1):
            pts.append([Fraction(1), Fraction(0), Fraction(k)])
        for k in range(s2):
            pts.append([Fraction(0), Fraction(1), Fraction(k)])
    return PointSet(pts)


def gen_generic(n: int, s: int, rng: random.Random, box: int = 30,
                attempts: int = 200) -> PointSet:
    """s points with the generic Hilbert function min(C(n+i, i), s).

    Rejection-sampled with integer affine coordinates and verified
    exactly before returning.
    """
    for _ in range(attempts):
        seen = set()
        pts = []
        while len(pts) < s:
            p = (Fraction(1),) + tuple(Fraction(rng.randint(-box, box))
                                       for _ in range(n))
            if p not in seen:
                seen.add(p)
                pts.append(p)
        x = PointSet(pts)
        i = 0
        good = True
        while True:
            expect = min(comb(n + i, i), s)
            if x.hilbert(i) != expect:
                good = False
                break
            if expect == s:
                break
            i += 1
        if good:
            return x
    raise RealizationMismatchError(
        f"no generic configuration of {s} points in P^{n} after {attempts} draws")


# ---------------------------------------------------------------------------
# Order ideals and distractions


class OrderIdeal:
    """Finite downward-closed set of monomials, containing 1."""

    def __init__(self, n_vars: int, monomials: Sequence[Monomial]):
        mons: FrozenSet[Monomial] = frozenset(tuple(m) for m in monomials)
        if (0,) * n_vars not in mons:
            raise ValueError("order ideal must contain the monomial 1")
        for m in mons:
            if len(m) != n_vars or any(e < 0 for e in m):
                raise ValueError(f"bad exponent vector {m}")
            for i in range(n_vars):
                if m[i] > 0:
                    q = m[:i] + (m[i] - 1,) + m[i + 1:]
                    if q not in mons:
                        raise ValueError(
                            f"not downward closed: {m} present, {q} missing")
        self.n_vars = n_vars
        self.monomials = mons

    @property
    def size(self) -> int:
        return len(self.monomials)

    def max_degree(self) -> int:
        return max(sum(m) for m in self.monomials)

    def degree_counts(self) -> Tuple[int, ...]:
        d = self.max_degree()
        counts = [0] * (d + 1)
        for m in self.monomials:
            counts[sum(m)] += 1
        return tuple(counts)

    def sorted_monomials(self) -> List[Monomial]:
        """Degree-major, descending lex within a degree."""
        return sorted(self.monomials,
                      key=lambda m: (sum(m), tuple(-e for e in m)))

    def __eq__(self, other) -> bool:
        return (isinstance(other, OrderIdeal)
                and self.n_vars == other.n_vars
                and self.monomials == other.monomials)


def lex_order_ideal(delta: Sequence[int], n_vars: int) -> OrderIdeal:
    """Order ideal with prescribed degree counts: lex-smallest segments.

    Per degree, take the delta(i) smallest monomials in lex order; their
    union is downward closed whenever delta is an O-sequence (taking the
    largest monomials instead can dead-end, e.g. on (1,3,3,4)).
    Succeeds exactly when delta is an O-sequence with delta(1) <= n_vars.
    """
    counts = [int(x) for x in delta]
    while counts and counts[-1] == 0:
        counts.pop()
    if not counts or counts[0] != 1 or not is_O_sequence(counts):
        raise NotOSequenceError(f"{list(delta)} is not an O-sequence")
    if len(counts) > 1 and counts[1] > n_vars:
        raise NotOSequenceError(
            f"delta(1) = {counts[1]} needs at least that many variables, have {n_vars}")
    chosen: List[Monomial] = [(0,) * n_vars]
    prev = {(0,) * n_vars}
    for i in range(1, len(counts)):
        need = counts[i]
        level: List[Monomial] = []
        for m in reversed(list(monomials_of_degree(n_vars, i))):
            if len(level) == need:
                break
            ok = True
            for v in range(n_vars):
                if m[v] > 0:
                    q = m[:v] + (m[v] - 1,) + m[v + 1:]
                    if q not in prev:
                        ok = False
                        break
            if ok:
                level.append(m)
        if len(level) < need:
            raise NotOSequenceError(
                f"cannot reach {need} closure-compatible monomials in degree {i}")
        chosen.extend(level)
        prev = set(level)
    return OrderIdeal(n_vars, chosen)


def gen_distraction(ideal: OrderIdeal) -> PointSet:
    """Distraction of an order ideal: x^a maps to (1 : a_1 : ... : a_n).

    The resulting points satisfy h_{A(X)}(i) = sum of the ideal's degree
    counts through i (capped at s); verified exactly before returning.
    """
    pts = [(Fraction(1),) + tuple(Fraction(e) for e in m)
           for m in ideal.sorted_monomials()]
    x = PointSet(pts)
    counts = ideal.degree_counts()
    s = ideal.size
    running = 0
    for i in range(len(counts) + 1):
        running += counts[i] if i < len(counts) else 0
        expect = min(running, s)
        if x.hilbert(i) != expect:
            raise RealizationMismatchError(
                f"distraction Hilbert value {x.hilbert(i)} != {expect} in degree {i}")
    return x


# ---------------------------------------------------------------------------
# Incidence helpers (plane configurations)


def _curve_incidence(x: PointSet, coeffs: Sequence[Fraction],
                     degree: int) -> Tuple[int, ...]:
    """Indices of points where the plane curve of given degree vanishes."""
    mons = monomials_of_degree(x.n + 1, degree)
    out = []
    for idx, p in enumerate(x.points):
        val = sum((c * monomial_eval(m, p) for c, m in zip(coeffs, mons)),
                  Fraction(0))
        if val == 0:
            out.append(idx)
    return tuple(out)


def find_subset_on_curve(x: PointSet, degree: int,
                         count: int) -> Optional[Tuple[int, ...]]:
    """First index subset of exactly `count` points on a degree-r curve.

    r=1 scans lines through pairs; r=2 scans conics through 5-tuples
    (kernel vectors of the evaluation matrix).  Deterministic order.
    """
    if x.n != 2:
        raise NotPlaneConfigError("curve search requires points in P^2")
    probe = degree * (degree + 3) // 2  # points determine a degree-r plane curve
    if x.size < probe:
        return None
    ev = x.evaluation_matrix(degree)
    seen = set()
    for idxs in combinations(range(x.size), probe):
        sub = Mat([list(ev.entries[i]) for i in idxs])
        for v in linalg.nullspace(sub):
            inc = _curve_incidence(x, v, degree)
            if inc in seen:
                continue
            seen.add(inc)
            if len(inc) == count:
                return inc
    return None


def has_collinear_triple(x: PointSet) -> bool:
    if x.n != 2:
        raise NotPlaneConfigError("collinearity test requires P^2")
    for i, j, k in combinations(range(x.size), 3):
        a, b, c = x.points[i], x.points[j], x.points[k]
        d = linalg.det(Mat([list(a), list(b), list(c)]))
        if d == 0:
            return True
    return False


# ---------------------------------------------------------------------------
# Davis decomposition hint


@dataclass(frozen=True)
class DavisHint:
    """Flat first-difference detected past the first ideal generator.

    A repeat Delta h(j) = Delta h(j+1) = r with j >= t0 forces a
    degree-r curve through part of X; `complement_delta` is the forced
    first difference of the off-curve remainder.
    """

    r: int
    j: int
    complement_delta: Tuple[int, ...]

    def describe(self) -> str:
        kind = {1: "line", 2: "conic"}.get(self.r, f"degree-{self.r} curve")
        return (f"Delta h repeats value {self.r} at degrees {self.j},{self.j + 1}: "
                f"part of X lies on a {kind}")


def davis_hint(x: PointSet) -> Optional[DavisHint]:
    """Scan Delta h_{A(X)} for a flat repeat past t0.

    t0 is the least degree where X fails to impose independent
    conditions, i.e. h(i) < C(n+i, i).  Informational only; callers may
    use it to locate special subconfigurations.
    """
    if x.n != 2:
        raise NotPlaneConfigError("decomposition hint requires P^2")
    t = x.tau()
    h = [x.hilbert(i) for i in range(t + 2)]
    t0 = None
    for i in range(t + 2):
        if h[i] < comb(x.n + i, i):
            t0 = i
            break
    if t0 is None:
        return None
    delta = [h[i] - (h[i - 1] if i else 0) for i in range(t + 2)]
    for j in range(t0, t):  # need j+1 <= tau so the repeat is genuine
        r = delta[j]
        if r >= 1 and delta[j + 1] == r:
            rest = tuple(delta[i] - r for i in range(r, j))
            return DavisHint(r=r, j=j, complement_delta=rest)
    return None
