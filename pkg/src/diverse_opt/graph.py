"""Graph containers, text-format parsers and the unit grid generator.

Both graph classes store their arcs column-wise in read-only int64 arrays,
so a graph can be shared freely once built.  Lengths are positive integers
and weights are non-negative integers.
"""

from __future__ import annotations

import io
import json
from dataclasses import dataclass
from typing import Iterable, TextIO

import numpy as np

from .errors import NegativeWeightError, ParseError

MAX_LENGTH = 2**31
_LENGTH_SUM_LIMIT = 2**62


def _frozen(values) -> np.ndarray:
    arr = np.array(values, dtype=np.int64).reshape(-1)
    arr.flags.writeable = False
    return arr


def _validate(n, u, v, length, weight, kind):
    if n < 0:
        raise ValueError("vertex count must be non-negative")
    m = len(u)
    if not (len(v) == len(length) == len(weight) == m):
        raise ValueError(f"{kind} columns have different lengths")
    if m == 0:
        return
    if u.min() < 0 or v.min() < 0 or u.max() >= n or v.max() >= n:
        raise ValueError(f"{kind} endpoint out of range [0, {n})")
    if length.min() < 1:
        raise ValueError(f"{kind} length must be >= 1")
    if length.max() > MAX_LENGTH:
        raise ValueError(f"{kind} length exceeds {MAX_LENGTH}")
    if int(length.sum()) >= _LENGTH_SUM_LIMIT:
        raise ValueError("total length too large for 64-bit distances")
    if weight.min() < 0:
        raise NegativeWeightError(f"{kind} weight must be >= 0")


class DirectedGraph:
    """Directed multigraph with integer arc lengths and weights.

    Arc ``i`` is ``(tails[i], heads[i])`` with length ``lengths[i]`` and
    weight ``weights[i]``.  Parallel arcs and self-loops are allowed.
    """

    __slots__ = ("n", "tails", "heads", "lengths", "weights", "_csr", "_rcsr")

    def __init__(self, n, tails, heads, lengths, weights=None):
        self.n = int(n)
        self.tails = _frozen(tails)
        self.heads = _frozen(heads)
        self.lengths = _frozen(lengths)
        self.weights = self.lengths if weights is None else _frozen(weights)
        _validate(self.n, self.tails, self.heads, self.lengths, self.weights, "arc")
        self._csr = None
        self._rcsr = None

    @classmethod
    def from_arcs(cls, n: int, arcs: Iterable[tuple[int, int, int, int]]) -> DirectedGraph:
        arcs = [tuple(a) for a in arcs]
        if any(len(a) != 4 for a in arcs):
            raise ValueError("arcs must be (tail, head, length, weight) tuples")
        cols = list(zip(*arcs)) if arcs else [(), (), (), ()]
        return cls(n, *cols)

    @property
    def m(self) -> int:
        return len(self.tails)

    @property
    def arcs(self) -> list[tuple[int, int, int, int]]:
        return list(
            zip(
                self.tails.tolist(),
                self.heads.tolist(),
                self.lengths.tolist(),
                self.weights.tolist(),
            )
        )

    def csr(self) -> tuple[np.ndarray, np.ndarray]:
        """Forward adjacency: ``(indptr, arc_ids)`` with arcs grouped by tail."""
        if self._csr is None:
            self._csr = _build_csr(self.n, self.tails)
        return self._csr

    def reverse_csr(self) -> tuple[np.ndarray, np.ndarray]:
        """Backward adjacency: ``(indptr, arc_ids)`` with arcs grouped by head."""
        if self._rcsr is None:
            self._rcsr = _build_csr(self.n, self.heads)
        return self._rcsr

    def __eq__(self, other):
        if not isinstance(other, DirectedGraph):
            return NotImplemented
        return self.n == other.n and self.arcs == other.arcs

    def __repr__(self):
        return f"DirectedGraph(n={self.n}, m={self.m})"


class UndirectedGraph:
    """Undirected multigraph without self-loops.

    ``to_directed()`` gives arcs ``2i = (u, v)`` and ``2i + 1 = (v, u)`` for
    edge ``i``, so ``arc // 2`` recovers the edge id.
    """

    __slots__ = ("n", "us", "vs", "lengths", "weights", "_directed")

    def __init__(self, n, us, vs, lengths, weights=None):
        self.n = int(n)
        self.us = _frozen(us)
        self.vs = _frozen(vs)
        self.lengths = _frozen(lengths)
        self.weights = self.lengths if weights is None else _frozen(weights)
        _validate(self.n, self.us, self.vs, self.lengths, self.weights, "edge")
        if np.any(self.us == self.vs):
            raise ValueError("self-loops are not allowed in undirected graphs")
        self._directed = None

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int, int, int]]) -> UndirectedGraph:
        edges = [tuple(e) for e in edges]
        if any(len(e) != 4 for e in edges):
            raise ValueError("edges must be (u, v, length, weight) tuples")
        cols = list(zip(*edges)) if edges else [(), (), (), ()]
        return cls(n, *cols)

    @property
    def m(self) -> int:
        return len(self.us)

    @property
    def edges(self) -> list[tuple[int, int, int, int]]:
        return list(
            zip(self.us.tolist(), self.vs.tolist(), self.lengths.tolist(), self.weights.tolist())
        )

    def to_directed(self) -> DirectedGraph:
        if self._directed is None:
            m = self.m
            tails = np.empty(2 * m, dtype=np.int64)
            heads = np.empty(2 * m, dtype=np.int64)
            tails[0::2], tails[1::2] = self.us, self.vs
            heads[0::2], heads[1::2] = self.vs, self.us
            self._directed = DirectedGraph(
                self.n, tails, heads, np.repeat(self.lengths, 2), np.repeat(self.weights, 2)
            )
        return self._directed

    def __eq__(self, other):
        if not isinstance(other, UndirectedGraph):
            return NotImplemented
        return self.n == other.n and self.edges == other.edges

    def __repr__(self):
        return f"UndirectedGraph(n={self.n}, m={self.m})"


def _build_csr(n, keys):
    order = np.argsort(keys, kind="stable").astype(np.int64)
    counts = np.bincount(keys, minlength=n) if len(keys) else np.zeros(n, dtype=np.int64)
    indptr = np.zeros(n + 1, dtype=np.int64)
    np.cumsum(counts, out=indptr[1:])
    order.flags.writeable = False
    indptr.flags.writeable = False
    return indptr, order


# --------------------------------------------------------------------------
# text formats


def _lines(text: str | TextIO) -> Iterable[str]:
    if isinstance(text, str):
        return io.StringIO(text)
    return text


def _int(token, lineno):
    try:
        return int(token)
    except ValueError:
        raise ParseError(f"expected an integer, got {token!r}", lineno) from None


def round_to_100(length: int) -> int:
    """Round half-up to the nearest multiple of 100, with 100 as the floor."""
    return max(100, (length + 50) // 100 * 100)


def parse_dimacs_gr(text, *, round100: bool = False, weight: str = "length") -> DirectedGraph:
    """Parse a 9th DIMACS challenge ``.gr`` shortest-path file.

    ``weight="length"`` reuses each (possibly rounded) length as the arc
    weight; ``weight="unit"`` sets every weight to 1.
    """
    if weight not in ("length", "unit"):
        raise ValueError(f"unknown weight mode {weight!r}")
    n = m = None
    tails, heads, lengths = [], [], []
    for lineno, raw in enumerate(_lines(text), 1):
        line = raw.strip()
        if not line or line[0] == "c":
            continue
        tok = line.split()
        if tok[0] == "p":
            if n is not None:
                raise ParseError("duplicate problem line", lineno)
            if len(tok) != 4 or tok[1] != "sp":
                raise ParseError("malformed problem line, expected 'p sp <n> <m>'", lineno)
            n, m = _int(tok[2], lineno), _int(tok[3], lineno)
            if n < 0 or m < 0:
                raise ParseError("malformed problem line, negative size", lineno)
        elif tok[0] == "a":
            if n is None:
                raise ParseError("arc line before problem line", lineno)
            if len(tok) != 4:
                raise ParseError("malformed arc line, expected 'a <u> <v> <w>'", lineno)
            u, v, w = (_int(x, lineno) for x in tok[1:])
            if not (1 <= u <= n and 1 <= v <= n):
                raise ParseError(f"vertex id out of range [1, {n}]", lineno)
            if w <= 0:
                raise ParseError("arc length must be positive", lineno)
            tails.append(u - 1)
            heads.append(v - 1)
            lengths.append(round_to_100(w) if round100 else w)
        else:
            raise ParseError(f"unknown line type {tok[0]!r}", lineno)
    if n is None:
        raise ParseError("missing problem line")
    if len(tails) != m:
        raise ParseError(f"arc count mismatch: header says {m}, found {len(tails)}")
    weights = lengths if weight == "length" else [1] * len(lengths)
    return DirectedGraph(n, tails, heads, lengths, weights)


def parse_snap_edgelist(text) -> DirectedGraph:
    """Parse a SNAP edge list; ids are remapped densely in first-appearance order."""
    ids: dict[int, int] = {}
    tails, heads = [], []
    for lineno, raw in enumerate(_lines(text), 1):
        line = raw.strip()
        if not line or line[0] == "#":
            continue
        tok = line.split()
        if len(tok) != 2:
            raise ParseError(f"expected 2 tokens, got {len(tok)}", lineno)
        a, b = _int(tok[0], lineno), _int(tok[1], lineno)
        if a < 0 or b < 0:
            raise ParseError("vertex ids must be non-negative", lineno)
        tails.append(ids.setdefault(a, len(ids)))
        heads.append(ids.setdefault(b, len(ids)))
    ones = [1] * len(tails)
    return DirectedGraph(len(ids), tails, heads, ones, ones)


def parse_undirected_edgelist(text) -> UndirectedGraph:
    """Parse ``u v [w]`` lines (0-based ids, ``#`` comments) into an undirected graph.

    Lengths are 1; the optional third column is the weight (default 1).
    The vertex count is one more than the largest id seen.
    """
    us, vs, ws = [], [], []
    for lineno, raw in enumerate(_lines(text), 1):
        line = raw.strip()
        if not line or line[0] == "#":
            continue
        tok = line.split()
        if len(tok) not in (2, 3):
            raise ParseError(f"expected 2 or 3 tokens, got {len(tok)}", lineno)
        vals = [_int(x, lineno) for x in tok]
        if vals[0] < 0 or vals[1] < 0:
            raise ParseError("vertex ids must be non-negative", lineno)
        if vals[0] == vals[1]:
            raise ParseError("self-loop", lineno)
        if len(vals) == 3 and vals[2] < 0:
            raise NegativeWeightError(f"line {lineno}: weight must be >= 0")
        us.append(vals[0])
        vs.append(vals[1])
        ws.append(vals[2] if len(vals) == 3 else 1)
    n = max(us + vs) + 1 if us else 0
    return UndirectedGraph(n, us, vs, [1] * len(us), ws)


def serialize_dimacs_gr(g: DirectedGraph) -> str:
    """Write lengths only; weights are not representable in ``.gr``."""
    out = [f"p sp {g.n} {g.m}"]
    out.extend(f"a {u + 1} {v + 1} {l}" for u, v, l, _ in g.arcs)
    return "\n".join(out) + "\n"


def serialize_snap_edgelist(g: DirectedGraph) -> str:
    return "".join(f"{u} {v}\n" for u, v, _, _ in g.arcs)


def graph_to_json(g: DirectedGraph | UndirectedGraph) -> str:
    if isinstance(g, DirectedGraph):
        return json.dumps({"n": g.n, "arcs": [list(a) for a in g.arcs]})
    return json.dumps({"n": g.n, "edges": [list(e) for e in g.edges]})


def graph_from_json(text: str) -> DirectedGraph | UndirectedGraph:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc}") from None
    if not isinstance(doc, dict) or "n" not in doc:
        raise ParseError("graph JSON needs an 'n' field")
    try:
        if "arcs" in doc:
            return DirectedGraph.from_arcs(doc["n"], doc["arcs"])
        if "edges" in doc:
            return UndirectedGraph.from_edges(doc["n"], doc["edges"])
    except NegativeWeightError:
        raise
    except (TypeError, ValueError) as exc:
        raise ParseError(str(exc)) from None
    raise ParseError("graph JSON needs 'arcs' or 'edges'")


# --------------------------------------------------------------------------
# grid instances


@dataclass(frozen=True)
class GridSpec:
    p: int


def generate_grid(spec: GridSpec | int) -> tuple[UndirectedGraph, int, int]:
    """Unit ``p x p`` grid with row-major vertex ids; returns ``(graph, s, t)``.

    ``s`` is the top-left corner and ``t`` the bottom-right one.
    """
    p = spec.p if isinstance(spec, GridSpec) else int(spec)
    if p < 2:
        raise ValueError("grid side must be >= 2")
    us, vs = [], []
    for r in range(p):
        for c in range(p):
            v = r * p + c
            if c + 1 < p:
                us.append(v)
                vs.append(v + 1)
            if r + 1 < p:
                us.append(v)
                vs.append(v + p)
    ones = np.ones(len(us), dtype=np.int64)
    return UndirectedGraph(p * p, us, vs, ones, ones), 0, p * p - 1
