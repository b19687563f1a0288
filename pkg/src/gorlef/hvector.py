"""Finite h-vectors and Macaulay growth machinery.

Implements the i-binomial expansion, the Macaulay bound h^<i>, and the
classification predicates (O-sequence, differentiable, SI) together
with the stabilized sequence used by the realization pipeline.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb
from typing import List, Optional, Sequence, Tuple

from .errors import NotSIError


class HVector:
    """Finite sequence of nonnegative integers with h_d != 0.

    Trailing zeros are trimmed on construction (at least one entry is
    always kept).  h_0 is recorded as given; the classification
    predicates, not the constructor, require h_0 = 1.
    """

    __slots__ = ("entries",)

    def __init__(self, entries: Sequence[int]):
        vals = [int(x) for x in entries]
        if not vals:
            raise ValueError("empty h-vector")
        if any(x < 0 for x in vals):
            raise ValueError("negative entry in h-vector")
        while len(vals) > 1 and vals[-1] == 0:
            vals.pop()
        self.entries: Tuple[int, ...] = tuple(vals)

    @classmethod
    def parse(cls, text: str) -> "HVector":
        """Parse either comma-separated integers or a JSON-style list."""
        t = text.strip()
        if t.startswith("[") and t.endswith("]"):
            t = t[1:-1]
        parts = [p.strip() for p in t.split(",") if p.strip()]
        if not parts:
            raise ValueError(f"cannot parse h-vector from {text!r}")
        return cls([int(p) for p in parts])

    @property
    def socle_degree(self) -> int:
        return len(self.entries) - 1

    @property
    def peak(self) -> int:
        return max(self.entries)

    def __getitem__(self, i: int) -> int:
        return self.entries[i]

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

    def __eq__(self, other) -> bool:
        if isinstance(other, HVector):
            return self.entries == other.entries
        return self.entries == tuple(other)

    def __hash__(self) -> int:
        return hash(self.entries)

    def __repr__(self) -> str:
        return f"HVector({list(self.entries)})"

    def first_difference(self) -> Tuple[int, ...]:
        """Delta h: (h_0, h_1 - h_0, ...).  Entries may be negative."""
        e = self.entries
        return tuple(e[i] - (e[i - 1] if i else 0) for i in range(len(e)))

    def is_symmetric(self) -> bool:
        return self.entries == self.entries[::-1]

    def is_unimodal(self) -> bool:
        e = self.entries
        i = 0
        while i + 1 < len(e) and e[i] <= e[i + 1]:
            i += 1
        while i + 1 < len(e) and e[i] >= e[i + 1]:
            i += 1
        return i == len(e) - 1


@dataclass(frozen=True)
class BinomialExpansion:
    """The unique i-binomial expansion h = sum C(m_k, k)."""

    h: int
    i: int
    parts: Tuple[Tuple[int, int], ...]  # ((m_i, i), (m_{i-1}, i-1), ...)

    def value(self) -> int:
        return sum(comb(m, k) for m, k in self.parts)


def binomial_expand(h: int, i: int) -> BinomialExpansion:
    """Greedy i-binomial expansion of h >= 1 with i >= 1.

    Produces m_i > m_{i-1} > ... > m_j >= j >= 1; greedy choice of the
    largest C(m, k) <= remainder at each level yields the unique such
    decomposition.
    """
    if h < 1 or i < 1:
        raise ValueError(f"need h >= 1 and i >= 1, got h={h}, i={i}")
    parts: List[Tuple[int, int]] = []
    rem = h
    k = i
    while rem > 0:
        if k < 1:
            raise AssertionError(f"expansion of {h} at level {i} ran out of levels")
        m = k
        while comb(m + 1, k) <= rem:
            m += 1
        parts.append((m, k))
        rem -= comb(m, k)
        k -= 1
    return BinomialExpansion(h, i, tuple(parts))


def macaulay_bound(h: int, i: int) -> int:
    """h^<i>: the maximal growth of h in degree i, with 0^<i> = 0."""
    if h == 0:
        return 0
    exp = binomial_expand(h, i)
    return sum(comb(m + 1, k + 1) for m, k in exp.parts)


def _entries(h) -> Tuple[int, ...]:
    if isinstance(h, HVector):
        return h.entries
    return tuple(int(x) for x in h)


def first_macaulay_violation(h) -> Optional[int]:
    """Index of the first entry exceeding the Macaulay bound, if any.

    Checks h_{i+1} <= h_i^<i> for i >= 1 and returns the index i+1 of
    the offending entry.  h_0 = 1 failures report index 0.
    """
    e = _entries(h)
    if e[0] != 1:
        return 0
    for i in range(1, len(e) - 1):
        if e[i + 1] > macaulay_bound(e[i], i):
            return i + 1
    return None


def is_O_sequence(h) -> bool:
    """Macaulay's criterion: h_0 = 1 and h_{i+1} <= h_i^<i> for i >= 1."""
    e = _entries(h)
    if any(x < 0 for x in e):
        return False
    return first_macaulay_violation(e) is None


def is_differentiable(h) -> bool:
    """True when the first difference is nonnegative and an O-sequence."""
    e = _entries(h)
    delta = tuple(e[i] - (e[i - 1] if i else 0) for i in range(len(e)))
    if any(x < 0 for x in delta):
        return False
    return is_O_sequence(delta)


def is_SI(h) -> bool:
    """Symmetric, unimodal, and differentiable through the middle."""
    hv = h if isinstance(h, HVector) else HVector(_entries(h))
    if not hv.is_symmetric() or not hv.is_unimodal():
        return False
    d = hv.socle_degree
    first_half = hv.entries[: d // 2 + 1]
    return is_differentiable(first_half)


@dataclass(frozen=True)
class Hbar:
    """Stabilization of an SI-sequence: h_i up to t, then constant s."""

    values: Tuple[int, ...]  # h_0 .. h_t
    t: int
    s: int

    def value(self, i: int) -> int:
        if i < 0:
            raise ValueError("negative index")
        return self.values[i] if i <= self.t else self.s

    def delta(self) -> Tuple[int, ...]:
        """First difference through degree t; zero afterwards."""
        v = self.values
        return tuple(v[i] - (v[i - 1] if i else 0) for i in range(len(v)))


def hbar(h) -> Hbar:
    """Flatten an SI-sequence at its first non-increase.

    t = min{i : h_i >= h_{i+1}} (with h_{d+1} = 0 as sentinel) and
    s = h_t; symmetry and unimodality give d >= 2t, and the flattened
    sequence is the Hilbert function of the realizing point set.
    """
    hv = h if isinstance(h, HVector) else HVector(_entries(h))
    if not is_SI(hv):
        raise NotSIError(f"{list(hv.entries)} is not an SI-sequence")
    e = hv.entries + (0,)
    t = next(i for i in range(len(e) - 1) if e[i] >= e[i + 1])
    return Hbar(values=hv.entries[: t + 1], t=t, s=hv.entries[t])
