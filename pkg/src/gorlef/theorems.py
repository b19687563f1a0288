"""Executable checks for the structural results behind the pipeline.

Each verifier builds its configuration, validates the hypotheses at
runtime (loudly; never trusting the generator), certifies the claimed
conclusion, and raises TheoremTensionError when a theorem instance
unexpectedly fails.  Randomized nonvanishing verdicts remain one-sided.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

from . import linalg
from .apolar import (LinearFormS, Poly, RING_R, contract_monomial,
                     power_of_linear)
from .construct import (StructuredGenerator, _nonzero_int,
                        structured_hessian_det)
from .errors import (NoWitnessFoundError, NotPlaneConfigError,
                     PreconditionViolatedError, ShapeMismatchError,
                     TheoremTensionError)
from .gorenstein import (GorensteinAlgebra, SlpCertificate, check_slp,
                         hessian_at, sample_linear_form)
from .linalg import Mat
from .points import (PointSet, find_subset_on_curve, gen_rnc, gen_two_lines,
                     has_collinear_triple)


# ---------------------------------------------------------------------------
# Overlapping-block determinant identity


@dataclass(frozen=True)
class BlockPair:
    """Two m x m blocks sharing one diagonal cell in a (2m-1) frame."""

    m: int
    b: Mat
    c: Mat

    def __post_init__(self):
        if self.b.rows != self.m or self.b.cols != self.m:
            raise ValueError(f"B must be {self.m}x{self.m}")
        if self.c.rows != self.m or self.c.cols != self.m:
            raise ValueError(f"C must be {self.m}x{self.m}")

    def assemble(self) -> Mat:
        """The (2m-1) x (2m-1) matrix with B top-left, C bottom-right.

        The shared cell (m, m) holds B[m][m] + C[1][1]; everything
        outside the two blocks is zero.
        """
        m = self.m
        n = 2 * m - 1
        a = Mat.zero(n, n)
        for i in range(m):
            for j in range(m):
                a.entries[i][j] += self.b.entries[i][j]
        for i in range(m):
            for j in range(m):
                a.entries[m - 1 + i][m - 1 + j] += self.c.entries[i][j]
        return a


def _minor(mat: Mat, drop_row: int, drop_col: int) -> Mat:
    return Mat([[mat.entries[i][j] for j in range(mat.cols) if j != drop_col]
                for i in range(mat.rows) if i != drop_row])


def block_det_identity(pair: BlockPair) -> Tuple[Fraction, Fraction, bool]:
    """det(assembled) vs det(B-)det(C) + det(B)det(C-).

    B- drops the last row/column of B, C- the first of C; an empty
    determinant counts as 1.  Returns (lhs, rhs, equal).
    """
    a = pair.assemble()
    lhs = linalg.det(a)
    b_minor = _minor(pair.b, pair.m - 1, pair.m - 1)
    c_minor = _minor(pair.c, 0, 0)
    det_b_minor = linalg.det(b_minor) if pair.m > 1 else Fraction(1)
    det_c_minor = linalg.det(c_minor) if pair.m > 1 else Fraction(1)
    rhs = det_b_minor * linalg.det(pair.c) + linalg.det(pair.b) * det_c_minor
    return (lhs, rhs, lhs == rhs)


# ---------------------------------------------------------------------------
# Rational normal curves


def verify_rnc_slp(n: int, s: int, d: int, rng: random.Random,
                   attempts: int = 50, alpha_box: int = 20,
                   box: int = 50) -> SlpCertificate:
    """Points on a rational normal curve give SLP algebras.

    Checks tau = ceil((s-1)/n), requires d >= 2 tau, then certifies the
    SLP for random nonzero weights.  A false verdict raises
    TheoremTensionError rather than returning quietly.
    """
    params = rng.sample(range(-(s + 3), s + 4), s)
    x = gen_rnc(n, s, params)
    t = x.tau()
    expected_tau = -(-(s - 1) // n)
    if t != expected_tau:
        raise ShapeMismatchError(f"tau = {t}, expected {expected_tau}")
    if d < 2 * t:
        raise PreconditionViolatedError(f"need d >= 2*tau = {2 * t}, got {d}")
    g = StructuredGenerator(
        x=x, alphas=tuple(Fraction(_nonzero_int(rng, alpha_box))
                          for _ in range(s)), d=d)
    cert = check_slp(g.expanded, rng, attempts=attempts, box=box, d=d)
    if not cert.verdict:
        raise TheoremTensionError(
            f"no Lefschetz witness for {s} curve points in P^{n}, d={d}",
            certificate=cert)
    return cert


# ---------------------------------------------------------------------------
# Two lines: the Hessian decomposition


@dataclass
class ConicReport:
    """Outcome of the two-line verification."""

    x: PointSet
    d: int
    tau: int
    display_match: bool  # h_A(i) == min(2i+1, s) pattern
    certificate: Optional[SlpCertificate] = None
    decomposition_checks: int = 0


def _split_two_lines(x: PointSet) -> Tuple[List[int], List[int]]:
    """Recover the line groups; the shared point goes to group 1."""
    g1, g2 = [], []
    for i, p in enumerate(x.points):
        if p[1] == 0:  # on {x1 = 0}, including (0:0:1)
            g1.append(i)
        elif p[0] == 0:
            g2.append(i)
        else:
            raise ShapeMismatchError(f"point {p} on neither line")
    return g1, g2


def verify_conic_slp(s1: int, s2: int, share: bool, d: int,
                     rng: random.Random, attempts: int = 50,
                     eval_points: int = 20, alpha_box: int = 20,
                     box: int = 50) -> ConicReport:
    """Points on the singular conic give SLP algebras, decomposably.

    Verifies the on-conic bound h_A(i) <= min(2i+1, s) (hard failure),
    records whether the rising-odd display matches exactly (it does not
    for lopsided splits), certifies SLP, and checks the Hessian
    decomposition identity at random evaluation points: with F = F1 + F2
    split along the lines,

      det Hess^j(F) = det Hess^(j-1)(F1') det Hess^j(F2)
                    + det Hess^(j-1)(F2') det Hess^j(F1),

    F1' = x0^2 o F1, F2' = x1^2 o F2, over the monomial frame
    {x0^j, .., x0 x2^(j-1), x2^j, x2^(j-1) x1, .., x1^j}.
    """
    x = gen_two_lines(s1, s2, share)
    s = x.size
    t = x.tau()
    if d < 2 * t:
        raise PreconditionViolatedError(f"need d >= 2*tau = {2 * t}, got {d}")
    alphas = tuple(Fraction(_nonzero_int(rng, alpha_box)) for _ in range(s))
    g = StructuredGenerator(x=x, alphas=alphas, d=d)
    algebra = GorensteinAlgebra(g.expanded, d)
    h = algebra.hilbert
    display = tuple(min(2 * i + 1, 2 * (d - i) + 1, s) for i in range(d + 1))
    for i in range(d + 1):
        if h[i] > display[i]:
            raise ShapeMismatchError(
                f"h_A({i}) = {h[i]} exceeds the on-conic bound {display[i]}")
    display_match = tuple(h) == display

    cert = check_slp(g.expanded, rng, attempts=attempts, box=box, d=d)
    if not cert.verdict:
        raise TheoremTensionError(
            f"no Lefschetz witness for two-line config ({s1},{s2},share={share})",
            certificate=cert)

    # Split F along the lines and test the decomposition identity.
    g1, g2 = _split_two_lines(x)
    duals = x.duals()
    f1 = Poly.zero(3, RING_R)
    for i in g1:
        f1 = f1 + power_of_linear(duals[i], d).scale(alphas[i])
    f2 = Poly.zero(3, RING_R)
    for i in g2:
        f2 = f2 + power_of_linear(duals[i], d).scale(alphas[i])

    f1p = contract_monomial((2, 0, 0), f1)
    f2p = contract_monomial((0, 2, 0), f2)

    checks = 0
    for j in range(1, d // 2 + 1):
        # x0^j .. x0 x2^(j-1), then x2^j shared, then x2^(j-1) x1 .. x1^j
        b_frame = [(j - i, 0, i) for i in range(j + 1)]
        c_frame = [(0, i, j - i) for i in range(j + 1)]
        frame = b_frame + c_frame[1:]
        bm_frame = [(j - 1 - i, 0, i) for i in range(j)]
        cm_frame = [(0, i, j - 1 - i) for i in range(j)]
        for _ in range(eval_points):
            ell = sample_linear_form(3, rng, box)
            big = hessian_at(g.expanded, j, ell, frame, d)
            b = hessian_at(f1, j, ell, b_frame, d)
            c = hessian_at(f2, j, ell, c_frame, d)
            pair = BlockPair(m=j + 1, b=b, c=c)
            if pair.assemble() != big:
                raise TheoremTensionError(
                    f"block assembly mismatch at j={j}")
            det_b_minor = linalg.det(hessian_at(f1p, j - 1, ell, bm_frame, d - 2))
            det_c_minor = linalg.det(hessian_at(f2p, j - 1, ell, cm_frame, d - 2))
            rhs = (det_b_minor * linalg.det(c)
                   + linalg.det(b) * det_c_minor)
            lhs = linalg.det(big)
            if lhs != rhs:
                raise TheoremTensionError(
                    f"Hessian decomposition fails at j={j}, ell={ell}")
            checks += 1

    return ConicReport(x=x, d=d, tau=t, display_match=display_match,
                       certificate=cert, decomposition_checks=checks)


# ---------------------------------------------------------------------------
# Tail nonvanishing (line and conic tails)


@dataclass
class TailReport:
    """Nonvanishing witnesses across the guaranteed degree range."""

    kind: str
    x: PointSet
    d: int
    k: int
    tau: int
    curve_indices: Tuple[int, ...]
    off_indices: Tuple[int, ...]
    witnesses: Dict[int, Tuple[LinearFormS, Fraction]] = field(default_factory=dict)
    zero_forcing_checks: int = 0


_TAIL_R = {"line": 1, "conic": 2}


def make_tail_config(kind: str, tau_target: int, off: int,
                     rng: random.Random, box: int = 12,
                     attempts: int = 200) -> Tuple[PointSet, int]:
    """Curve points plus generic off-curve points with a valid tail shape.

    Returns (X, k) where Delta h_{A(X)} ends with the value r from
    degree k < tau through tau.  Raises when the requested combination
    cannot produce such a shape (small caps make some impossible).
    """
    r = _TAIL_R[kind]
    on_count = r * tau_target + 1
    for _ in range(attempts):
        if kind == "conic":
            params = rng.sample(range(-(on_count + 3), on_count + 4), on_count)
            base = [(Fraction(1), Fraction(p), Fraction(p) ** 2) for p in params]
            def on_curve(q):  # the smooth conic x0 x2 = x1^2
                return q[0] * q[2] == q[1] ** 2
        else:
            base = [(Fraction(1), Fraction(i), Fraction(0))
                    for i in range(on_count)]
            def on_curve(q):  # the line x2 = 0
                return q[2] == 0
        pts = list(base)
        seen = set(pts)
        while len(pts) < on_count + off:
            q = (Fraction(1), Fraction(rng.randint(-box, box)),
                 Fraction(rng.randint(-box, box)))
            if q in seen or on_curve(q):
                continue
            seen.add(q)
            pts.append(q)
        x = PointSet(pts)
        t = x.tau()
        if t != tau_target:
            continue
        h = [x.hilbert(i) for i in range(t + 1)]
        delta = [h[i] - (h[i - 1] if i else 0) for i in range(t + 1)]
        k = t
        while k - 1 >= 1 and delta[k - 1] == r:
            k -= 1
        if delta[t] == r and 1 <= k <= t:
            return (x, k)
    raise ShapeMismatchError(
        f"no {kind} tail shape for tau={tau_target}, off={off}")


def verify_tail_nonvanishing(kind: str, x: PointSet, d: int, k: int,
                             rng: random.Random, trials: int = 30,
                             alpha_box: int = 20,
                             box: int = 50) -> TailReport:
    """Flat Delta-tails force nonzero Hessian determinants.

    For a tail of r's (r = 1 line, r = 2 conic) from degree k <= tau:
    every j in [k-1, floor(d/2)] gets a nonzero-det witness, and zeroing
    any off-curve weight kills the determinant identically (checked at
    `trials` random forms).  The curve subset of exactly r*tau+1 points
    is found by exact search, never trusted from the generator; that is
    what keeps the boundary case k = tau sound, where the Hilbert
    function alone would not pin down the geometry.
    """
    if kind not in _TAIL_R:
        raise ValueError(f"unknown tail kind {kind!r}")
    if x.n != 2:
        raise NotPlaneConfigError("tail theorems live in P^2")
    r = _TAIL_R[kind]
    t = x.tau()
    if d < 2 * t:
        raise PreconditionViolatedError(f"need d >= 2*tau = {2 * t}, got {d}")
    h = [x.hilbert(i) for i in range(t + 1)]
    delta = [h[i] - (h[i - 1] if i else 0) for i in range(t + 1)]
    if not 1 <= k <= t:
        raise ShapeMismatchError(f"need 1 <= k <= tau = {t}, got k={k}")
    if any(delta[i] != r for i in range(k, t + 1)):
        raise ShapeMismatchError(
            f"Delta h = {delta} lacks a {r}-tail from degree {k}")
    if delta[0] != 1 or delta[1] != 2:
        raise ShapeMismatchError(f"Delta h = {delta} is not a plane shape")

    curve_count = r * t + 1
    curve = find_subset_on_curve(x, r, curve_count)
    if curve is None:
        raise ShapeMismatchError(
            f"no degree-{r} curve through exactly {curve_count} points")
    off = tuple(i for i in range(x.size) if i not in set(curve))

    alphas = tuple(Fraction(_nonzero_int(rng, alpha_box)) for _ in range(x.size))
    g = StructuredGenerator(x=x, alphas=alphas, d=d)
    algebra = GorensteinAlgebra(g.expanded, d)

    report = TailReport(kind=kind, x=x, d=d, k=k, tau=t,
                        curve_indices=tuple(curve), off_indices=off)
    for j in range(k - 1, d // 2 + 1):
        frame = algebra.basis(j)
        found = False
        for _ in range(trials):
            ell = sample_linear_form(3, rng, box)
            val = structured_hessian_det(x, alphas, d, j, frame, ell)
            if val != 0:
                report.witnesses[j] = (ell, val)
                found = True
                break
        if not found:
            raise NoWitnessFoundError(
                f"no nonzero Hess^{j} witness in {trials} trials",
                diagnostics={"kind": kind, "j": j, "d": d})

    # Factorization side: each off-curve weight divides the determinant.
    checks = 0
    for i in off:
        for j in range(k - 1, d // 2 + 1):
            frame = algebra.basis(j)
            for _ in range(trials):
                trial_alphas = [Fraction(_nonzero_int(rng, alpha_box))
                                for _ in range(x.size)]
                trial_alphas[i] = Fraction(0)
                ell = sample_linear_form(3, rng, box)
                val = structured_hessian_det(x, trial_alphas, d, j, frame, ell)
                if val != 0:
                    raise TheoremTensionError(
                        f"det survives zeroing off-curve weight {i} at j={j}")
                checks += 1
    report.zero_forcing_checks = checks
    return report


# ---------------------------------------------------------------------------
# The five first-difference families


_FAMILIES = (
    ("1,2,1^m", lambda m: (1, 2) + (1,) * m),
    ("1,2,2,1^m", lambda m: (1, 2, 2) + (1,) * m),
    ("1,2,3,1^m", lambda m: (1, 2, 3) + (1,) * m),
    ("1,2^m", lambda m: (1,) + (2,) * m),
    ("1,2,3,2^m", lambda m: (1, 2, 3) + (2,) * m),
)


@dataclass
class FamilyReport:
    name: str
    m: int
    delta: Tuple[int, ...]
    x: PointSet
    d: int
    certificate: SlpCertificate


def verify_corollary_families(m_values: Sequence[int], rng: random.Random,
                              attempts: int = 50, alpha_box: int = 20,
                              box: int = 50) -> List[FamilyReport]:
    """All five flat-tail Delta families give SLP algebras at d = 2 tau."""
    from .points import gen_distraction, lex_order_ideal
    out = []
    for name, make in _FAMILIES:
        for m in m_values:
            delta = make(m)
            x = gen_distraction(lex_order_ideal(delta, 2))
            t = x.tau()
            if t != len(delta) - 1:
                raise ShapeMismatchError(f"family {name}, m={m}: tau={t}")
            d = 2 * t
            alphas = tuple(Fraction(_nonzero_int(rng, alpha_box))
                           for _ in range(x.size))
            g = StructuredGenerator(x=x, alphas=alphas, d=d)
            cert = check_slp(g.expanded, rng, attempts=attempts, box=box, d=d)
            if not cert.verdict:
                raise TheoremTensionError(
                    f"family {name}, m={m} has no Lefschetz witness",
                    certificate=cert)
            out.append(FamilyReport(name=name, m=m, delta=delta, x=x, d=d,
                                    certificate=cert))
    return out


# ---------------------------------------------------------------------------
# Near-top Hilbert values


@dataclass
class PropReport:
    kind: int
    j: int
    d: int
    ell: LinearFormS
    det: Fraction


def verify_prop_s_minus(x: PointSet, d: int, j: int, kind: int,
                        rng: random.Random, trials: int = 30,
                        alpha_box: int = 20, box: int = 50) -> PropReport:
    """Hessian nonvanishing when h_A(j) is s-1 (kind 1) or s-2 (kind 2).

    kind 2 additionally requires plane points in general linear
    position with s >= 3.  Needs 2j <= d so the Hessian exists; the
    witness search is randomized and raises NoWitnessFoundError when
    exhausted.
    """
    if kind not in (1, 2):
        raise ValueError("kind must be 1 or 2")
    if not 0 <= 2 * j <= d:
        raise PreconditionViolatedError(f"need 0 <= 2j <= d, got j={j}, d={d}")
    if kind == 2:
        if x.n != 2:
            raise NotPlaneConfigError("kind 2 requires points in P^2")
        if x.size < 3:
            raise PreconditionViolatedError("kind 2 requires s >= 3")
        if has_collinear_triple(x):
            raise PreconditionViolatedError("points must be in general linear position")
    target = x.size - kind
    alphas = tuple(Fraction(_nonzero_int(rng, alpha_box)) for _ in range(x.size))
    g = StructuredGenerator(x=x, alphas=alphas, d=d)
    algebra = GorensteinAlgebra(g.expanded, d)
    if algebra.hilbert[j] != target:
        raise PreconditionViolatedError(
            f"h_A({j}) = {algebra.hilbert[j]}, need {target}")
    frame = algebra.basis(j)
    for _ in range(trials):
        ell = sample_linear_form(x.n + 1, rng, box)
        val = structured_hessian_det(x, alphas, d, j, frame, ell)
        if val != 0:
            return PropReport(kind=kind, j=j, d=d, ell=ell, det=val)
    raise NoWitnessFoundError(
        f"no Hess^{j} witness for kind {kind} in {trials} trials",
        diagnostics={"kind": kind, "j": j, "d": d})
