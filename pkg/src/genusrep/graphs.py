"""Sparsity graphs of Y and the admissibility exclusion rules.

A graph records which matrix elements of a hermitian Y are nonzero;
self-loops mark nonzero diagonal entries. Vertices are 0-based. The
exclusion rules can only prove a graph forbidden; everything else is
reported as "not excluded", never as admissible.
"""

from __future__ import annotations

import itertools
from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Iterator

import numpy as np

from .linalg import require_hermitian

__all__ = [
    "MatrixGraph",
    "GraphVerdict",
    "graph_of",
    "is_connected",
    "count_walks",
    "forbidden_check",
    "enumerate_small_graphs",
]


@dataclass(frozen=True)
class MatrixGraph:
    """Undirected graph with optional self-loops on vertices 0..n-1."""

    n: int
    edges: frozenset[tuple[int, int]] = field(default_factory=frozenset)

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        if n < 1:
            raise ValueError(f"vertex count must be >= 1, got {n}")
        norm = set()
        for i, j in edges:
            if not (0 <= i < n and 0 <= j < n):
                raise ValueError(f"edge ({i}, {j}) out of range for n={n}")
            norm.add((min(i, j), max(i, j)))
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "edges", frozenset(norm))

    def has_edge(self, i: int, j: int) -> bool:
        return (min(i, j), max(i, j)) in self.edges

    def loops(self) -> set[int]:
        return {i for i, j in self.edges if i == j}

    def simple_edges(self) -> set[tuple[int, int]]:
        return {e for e in self.edges if e[0] != e[1]}

    def adjacency(self) -> np.ndarray:
        """0/1 adjacency matrix; a self-loop contributes diagonal 1."""
        a = np.zeros((self.n, self.n), dtype=np.int64)
        for i, j in self.edges:
            a[i, j] = 1
            a[j, i] = 1
        return a

    def degree(self, i: int) -> int:
        """Number of distinct neighbors via non-loop edges."""
        return sum(1 for e in self.simple_edges() if i in e)


@dataclass(frozen=True)
class GraphVerdict:
    """Outcome of the exclusion rules.

    A forbidden verdict names the rule and carries a witness that can be
    re-checked independently: the cycle length, or the vertex pair whose
    walk structure produces the contradiction.
    """

    forbidden: bool
    rule: str | None = None
    witness: tuple | None = None
    detail: str = ""

    @property
    def status(self) -> str:
        return "Forbidden" if self.forbidden else "NotExcluded"


def graph_of(y, tol: float | None = None) -> MatrixGraph:
    """Graph of a hermitian matrix: edge (i, j) wherever ``|y_ij| > tol``.

    The default threshold is 1e-10 times the largest entry magnitude,
    making the zero pattern scale invariant.
    """
    y = require_hermitian(y, "Y")
    mags = np.abs(y)
    if tol is None:
        tol = 1e-10 * float(mags.max())
    if tol < 0:
        raise ValueError(f"tolerance must be nonnegative, got {tol}")
    n = y.shape[0]
    edges = [(i, j) for i in range(n) for j in range(i, n) if mags[i, j] > tol]
    return MatrixGraph(n, edges)


def is_connected(g: MatrixGraph) -> bool:
    """Connectivity in the usual sense; self-loops are irrelevant."""
    adj: list[list[int]] = [[] for _ in range(g.n)]
    for i, j in g.simple_edges():
        adj[i].append(j)
        adj[j].append(i)
    seen = {0}
    queue = deque([0])
    while queue:
        v = queue.popleft()
        for w in adj[v]:
            if w not in seen:
                seen.add(w)
                queue.append(w)
    return len(seen) == g.n


def _bfs_distances(g: MatrixGraph, start: int) -> list[float]:
    dist = [float("inf")] * g.n
    dist[start] = 0
    adj: list[list[int]] = [[] for _ in range(g.n)]
    for i, j in g.simple_edges():
        adj[i].append(j)
        adj[j].append(i)
    queue = deque([start])
    while queue:
        v = queue.popleft()
        for w in adj[v]:
            if dist[w] == float("inf"):
                dist[w] = dist[v] + 1
                queue.append(w)
    return dist


def count_walks(g: MatrixGraph, i: int, j: int, length: int) -> int:
    """Number of walks of the given length from i to j.

    Self-loop traversals count as steps, so the count equals the (i, j)
    entry of the length-th power of the adjacency matrix.
    """
    if not (0 <= i < g.n and 0 <= j < g.n):
        raise ValueError(f"vertex out of range for n={g.n}: ({i}, {j})")
    if length < 0:
        raise ValueError(f"walk length must be >= 0, got {length}")
    power = np.linalg.matrix_power(g.adjacency(), length)
    return int(power[i, j])


def _is_cycle(g: MatrixGraph) -> bool:
    return (
        g.n >= 3
        and not g.loops()
        and len(g.simple_edges()) == g.n
        and all(g.degree(i) == 2 for i in range(g.n))
        and is_connected(g)
    )


def _is_tree(g: MatrixGraph) -> bool:
    return not g.loops() and len(g.simple_edges()) == g.n - 1 and is_connected(g)


def forbidden_check(g: MatrixGraph) -> GraphVerdict:
    """Apply the exclusion rules; report Forbidden with a witness, or
    NotExcluded (never "admissible"; the rules are one-sided).

    Rules: a cycle of length outside {4, 6}; a tree of diameter >= 3;
    a vertex pair with a unique walk of length 3 but no direct edge.
    """
    if _is_cycle(g) and g.n not in (4, 6):
        return GraphVerdict(
            forbidden=True, rule="cycle-length", witness=(g.n,),
            detail=f"cycle of length {g.n}; only lengths 4 and 6 are not excluded",
        )
    if _is_tree(g):
        for i in range(g.n):
            dist = _bfs_distances(g, i)
            for j in range(g.n):
                if dist[j] == 3:
                    return GraphVerdict(
                        forbidden=True, rule="tree-diameter", witness=(i, j),
                        detail=f"tree with d({i}, {j}) = 3; admissible trees are stars",
                    )
    walks3 = np.linalg.matrix_power(g.adjacency(), 3)
    for i in range(g.n):
        for j in range(i, g.n):
            if walks3[i, j] == 1 and not g.has_edge(i, j):
                return GraphVerdict(
                    forbidden=True, rule="unique-walk", witness=(i, j),
                    detail=f"unique walk of length 3 from {i} to {j} but ({i}, {j}) is not an edge",
                )
    return GraphVerdict(forbidden=False)


def _edge_slots(n: int) -> list[tuple[int, int]]:
    return [(i, i) for i in range(n)] + [(i, j) for i in range(n) for j in range(i + 1, n)]


def enumerate_small_graphs(n: int) -> Iterator[MatrixGraph]:
    """All connected loop-graphs on n labeled vertices, one representative
    per isomorphism class (n <= 5, so brute-force canonicalization over
    all vertex permutations is cheap)."""
    if not 1 <= n <= 5:
        raise ValueError(f"enumeration supports 1 <= n <= 5, got {n}")
    slots = _edge_slots(n)
    k = len(slots)
    slot_index = {e: s for s, e in enumerate(slots)}

    # Connectivity depends only on the non-loop part of the mask.
    pair_slots = list(range(n, k))
    connected_pair_masks = []
    for bits in itertools.product((0, 1), repeat=len(pair_slots)):
        edges = [slots[s] for s, b in zip(pair_slots, bits) if b]
        if is_connected(MatrixGraph(n, edges)):
            mask = sum(1 << s for s, b in zip(pair_slots, bits) if b)
            connected_pair_masks.append(mask)

    masks = np.array(
        sorted(pm | lm for pm in connected_pair_masks for lm in range(1 << n)),
        dtype=np.int64,
    )
    bits = (masks[:, None] >> np.arange(k)) & 1

    canon = np.full(masks.shape, np.iinfo(np.int64).max, dtype=np.int64)
    for perm in itertools.permutations(range(n)):
        weights = np.zeros(k, dtype=np.int64)
        for s, (i, j) in enumerate(slots):
            ti, tj = perm[i], perm[j]
            weights[s] = 1 << slot_index[(min(ti, tj), max(ti, tj))]
        canon = np.minimum(canon, bits @ weights)

    for mask in masks[masks == canon]:
        edges = [slots[s] for s in range(k) if mask >> s & 1]
        yield MatrixGraph(n, edges)
