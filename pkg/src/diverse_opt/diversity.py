"""The weighted sum-of-pairwise-Hamming-distances measure and its copy weights."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Sequence

from .errors import NegativeWeightError, WeightBoundError

ACCUMULATOR_LIMIT = 2**62


def copy_weight(w_e: int, k: int, i: int) -> int:
    """Weight of the ``i``-th copy (1-based) of an element of weight ``w_e``.

    The first ``m`` copies sum to ``w_e * m * (k - m)``, the element's
    contribution when it appears in ``m`` of the ``k`` solutions.
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    if not 1 <= i <= k:
        raise ValueError(f"copy index {i} out of range [1, {k}]")
    return w_e * (k - 2 * i + 1)


def check_weights(w: Sequence[int], k: int) -> None:
    """Reject negative weights and instances that could overflow int64 sums."""
    if k < 1:
        raise ValueError("k must be >= 1")
    total = 0
    for x in w:
        x = int(x)
        if x < 0:
            raise NegativeWeightError("weights must be >= 0")
        total += x
    if k * k * total >= ACCUMULATOR_LIMIT:
        raise WeightBoundError(f"k^2 * sum(w) = {k * k * total} exceeds 2^62")


def _normalize(sets: Iterable[Iterable[int]]) -> tuple[tuple[int, ...], ...]:
    return tuple(tuple(sorted(set(s))) for s in sets)


def diversity_pairwise(sets: Iterable[Iterable[int]], w: Sequence[int]) -> int:
    """Sum over all pairs of the weight of their symmetric difference."""
    frozen = [frozenset(s) for s in sets]
    return sum(
        sum(w[e] for e in a ^ b) for a, b in combinations(frozen, 2)
    )


def multiplicities(sets: Iterable[Iterable[int]]) -> dict[int, int]:
    m: Counter[int] = Counter()
    for s in _normalize(sets):
        m.update(s)
    return dict(sorted(m.items()))


def diversity_multiplicity(sets: Iterable[Iterable[int]], w: Sequence[int]) -> int:
    """Same value as ``diversity_pairwise``, via ``sum_e w(e) m(e) (k - m(e))``."""
    sets = _normalize(sets)
    k = len(sets)
    return sum(w[e] * m * (k - m) for e, m in multiplicities(sets).items())


@dataclass(frozen=True)
class SolutionSet:
    """``k`` solutions over a ground set of element ids.

    ``packing_weight`` is the copy-weight total of the packing the solutions
    were decoded from, when they came from one; it must equal ``diversity``.
    """

    sets: tuple[tuple[int, ...], ...]
    multiplicity: dict[int, int] = field(compare=False)
    diversity: int
    packing_weight: int | None = None

    @classmethod
    def from_sets(cls, sets, w, packing_weight=None) -> SolutionSet:
        sets = _normalize(sets)
        return cls(sets, multiplicities(sets), diversity_multiplicity(sets, w), packing_weight)

    @property
    def k(self) -> int:
        return len(self.sets)

    def verify(self, w) -> bool:
        """Both diversity formulas agree, and agree with the packing weight if any."""
        pair = diversity_pairwise(self.sets, w)
        ok = pair == self.diversity == diversity_multiplicity(self.sets, w)
        if self.packing_weight is not None:
            ok = ok and self.packing_weight == pair
        return ok
