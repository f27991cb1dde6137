"""Weighted diverse matroid bases through the copied matroid and matroid partition.

Every element ``e`` gets ``k`` copies ``(e, i)``.  A set of copies is
independent in the copied matroid when it holds at most one copy of each
element and the underlying elements are independent.  Copies are scanned
by decreasing copy weight and kept whenever the kept set can still be split
into ``k`` independent parts; that greedy yields a maximum-weight base of
the ``k``-fold union, i.e. ``k`` disjoint bases of the copied matroid.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Callable, Iterable, Sequence

from .diversity import SolutionSet, check_weights, copy_weight
from .graph import UndirectedGraph

Copy = tuple[int, int]  # (element id, copy index 1..k)


@dataclass
class IndependenceOracle:
    """Ground set ``0..size-1`` and an independence test over element collections."""

    size: int
    test: Callable[[frozenset[int]], bool]
    name: str = "matroid"
    queries: int = field(default=0, compare=False)

    def is_independent(self, elements: Iterable[int]) -> bool:
        self.queries += 1
        return self.test(frozenset(elements))

    def rank(self) -> int:
        basis: set[int] = set()
        for e in range(self.size):
            if self.is_independent(basis | {e}):
                basis.add(e)
        return len(basis)


def graphic_matroid(g: UndirectedGraph) -> IndependenceOracle:
    """Edge sets of ``g`` are independent when they contain no cycle."""
    us, vs = g.us.tolist(), g.vs.tolist()

    def acyclic(edges: frozenset[int]) -> bool:
        parent: dict[int, int] = {}

        def find(x):
            root = x
            while parent.get(root, root) != root:
                root = parent[root]
            while parent.get(x, x) != root:
                parent[x], x = root, parent[x]
            return root

        for e in edges:
            a, b = find(us[e]), find(vs[e])
            if a == b:
                return False
            parent[a] = b
        return True

    return IndependenceOracle(g.m, acyclic, "graphic")


def uniform_matroid(n: int, r: int) -> IndependenceOracle:
    if not 0 <= r <= n:
        raise ValueError(f"uniform matroid needs 0 <= r <= n, got r={r}, n={n}")
    return IndependenceOracle(n, lambda f: len(f) <= r, f"U({r},{n})")


class CopiedMatroid:
    """``k`` copies of each element of ``base``, weighted ``w(e) (k - 2i + 1)``."""

    def __init__(self, base: IndependenceOracle, w: Sequence[int], k: int):
        if len(w) != base.size:
            raise ValueError("one weight per ground-set element is required")
        self.base = base
        self.k = k
        self.w = list(w)

    @property
    def elements(self) -> list[Copy]:
        return [(e, i) for e in range(self.base.size) for i in range(1, self.k + 1)]

    def weight(self, c: Copy) -> int:
        return copy_weight(self.w[c[0]], self.k, c[1])

    def is_independent(self, copies: Iterable[Copy]) -> bool:
        originals = [e for e, _ in copies]
        if len(set(originals)) != len(originals):
            return False
        return self.base.is_independent(originals)


@dataclass
class BasePartition:
    """``k`` pairwise disjoint parts, each independent in the copied matroid."""

    parts: list[set[Copy]]

    @classmethod
    def empty(cls, k: int) -> BasePartition:
        return cls([set() for _ in range(k)])

    def owner(self) -> dict[Copy, int]:
        return {c: j for j, part in enumerate(self.parts) for c in part}

    def __len__(self):
        return sum(len(p) for p in self.parts)


def matroid_partition_augment(matroid: CopiedMatroid, partition: BasePartition,
                              candidate: Copy) -> bool:
    """Try to absorb ``candidate``; returns False and leaves ``partition`` as is on failure.

    Breadth-first search over the exchange graph: from an element ``y``
    waiting for a home, either some part ``j`` accepts ``y`` outright, or
    ``y`` may replace any ``z`` in part ``j`` with ``part_j - z + y``
    independent, after which ``z`` needs a home.  Augmenting along a
    shortest such sequence keeps every part independent.
    """
    owner = partition.owner()
    if candidate in owner:
        raise ValueError(f"{candidate} is already placed")
    parts = partition.parts
    cache: dict[tuple[int, Copy, Copy | None], bool] = {}

    def fits(j: int, y: Copy, drop: Copy | None) -> bool:
        key = (j, y, drop)
        if key not in cache:
            members = [c for c in parts[j] if c != drop]
            members.append(y)
            cache[key] = matroid.is_independent(members)
        return cache[key]

    parent: dict[Copy, Copy | None] = {candidate: None}
    queue = deque([candidate])
    while queue:
        y = queue.popleft()
        home = owner.get(y)
        for j in range(len(parts)):
            if j == home:
                continue
            if fits(j, y, None):
                _augment(parts, owner, parent, y, j)
                return True
        for j in range(len(parts)):
            if j == home:
                continue
            for z in sorted(parts[j]):
                if z not in parent and fits(j, y, z):
                    parent[z] = y
                    queue.append(z)
    return False


def _augment(parts, owner, parent, last, j):
    parts[j].add(last)
    z = last
    while parent[z] is not None:
        y = parent[z]
        home = owner[z]
        parts[home].discard(z)
        parts[home].add(y)
        z = y


def weighted_diverse_bases(m: IndependenceOracle, w: Sequence[int], k: int, *,
                           check: bool = True) -> SolutionSet:
    """``k`` bases of ``m`` maximizing the weighted sum of pairwise Hamming distances."""
    check_weights(w, k)
    copied = CopiedMatroid(m, w, k)
    target = k * m.rank()
    order = sorted(copied.elements, key=lambda c: (-copied.weight(c), c[0], c[1]))
    partition = BasePartition.empty(k)
    picked = 0
    for c in order:
        if picked == target:
            break
        if matroid_partition_augment(copied, partition, c):
            picked += 1
            if check and not all(copied.is_independent(p) for p in partition.parts):
                raise AssertionError("augmentation produced a dependent part")
    if picked != target:
        raise AssertionError("copied matroid lacks k disjoint bases")
    packing = sum(copied.weight(c) for part in partition.parts for c in part)
    sets = [[e for e, _ in sorted(part)] for part in partition.parts]
    return SolutionSet.from_sets(sets, w, packing_weight=packing)
