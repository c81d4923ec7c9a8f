"""Finite simple graphs, bicliques, biclique systems, and exact verification.

Vertices are dense integer indices 0..N-1.  Every construction documents its
canonical index map so that identities between graphs built by different
routes can be tested by comparing adjacency arrays directly, with no
isomorphism search.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Iterator, Sequence

import numpy as np


class Graph:
    """Immutable simple graph backed by a dense boolean adjacency matrix."""

    __slots__ = ("_adj",)

    def __init__(self, adjacency: np.ndarray):
        adj = np.asarray(adjacency, dtype=bool)
        if adj.ndim != 2 or adj.shape[0] != adj.shape[1]:
            raise ValueError(f"adjacency must be square, got shape {adj.shape}")
        if adj.size and bool(np.diagonal(adj).any()):
            raise ValueError("adjacency has a loop (nonzero diagonal)")
        if not np.array_equal(adj, adj.T):
            raise ValueError("adjacency is not symmetric")
        adj = adj.copy()
        adj.flags.writeable = False
        self._adj = adj

    @classmethod
    def _trusted(cls, adjacency: np.ndarray) -> "Graph":
        """Wrap an array known to be symmetric and irreflexive (skips checks)."""
        g = cls.__new__(cls)
        adjacency.flags.writeable = False
        g._adj = adjacency
        return g

    @classmethod
    def empty(cls, n: int) -> "Graph":
        return cls._trusted(np.zeros((n, n), dtype=bool))

    @classmethod
    def complete(cls, n: int) -> "Graph":
        adj = np.ones((n, n), dtype=bool)
        np.fill_diagonal(adj, False)
        return cls._trusted(adj)

    @classmethod
    def cycle(cls, n: int) -> "Graph":
        if n < 3:
            raise ValueError("cycle needs at least 3 vertices")
        return cls.from_edges(n, [(i, (i + 1) % n) for i in range(n)])

    @classmethod
    def path(cls, n: int) -> "Graph":
        return cls.from_edges(n, [(i, i + 1) for i in range(n - 1)])

    @classmethod
    def from_edges(cls, n: int, edges: Sequence[tuple[int, int]]) -> "Graph":
        adj = np.zeros((n, n), dtype=bool)
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u},{v}) out of range for order {n}")
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            adj[u, v] = adj[v, u] = True
        return cls._trusted(adj)

    @property
    def order(self) -> int:
        return self._adj.shape[0]

    @property
    def adjacency(self) -> np.ndarray:
        """Read-only adjacency matrix view."""
        return self._adj

    def edge_count(self) -> int:
        return int(self._adj.sum()) // 2

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self._adj[u, v])

    def degree(self, v: int) -> int:
        return int(self._adj[v].sum())

    def neighbors(self, v: int) -> list[int]:
        return [int(u) for u in np.flatnonzero(self._adj[v])]

    def edges(self) -> Iterator[tuple[int, int]]:
        """Edges as (u, v) with u < v, in row-major order."""
        for u, v in zip(*np.nonzero(np.triu(self._adj))):
            yield int(u), int(v)

    def complement(self) -> "Graph":
        adj = ~self._adj
        np.fill_diagonal(adj, False)
        return Graph._trusted(adj)

    def induced(self, vertices: Sequence[int]) -> "Graph":
        vs = list(vertices)
        return Graph._trusted(self._adj[np.ix_(vs, vs)].copy())

    def neighbor_masks(self) -> list[int]:
        """Per-vertex neighbor sets packed into Python int bitmasks (bit v = vertex v)."""
        packed = np.packbits(self._adj, axis=1, bitorder="little")
        return [int.from_bytes(row.tobytes(), "little") for row in packed]

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Graph) and np.array_equal(self._adj, other._adj)

    __hash__ = None  # mutable-size payload; not intended as a dict key

    def __repr__(self) -> str:
        return f"Graph(order={self.order}, edges={self.edge_count()})"


@dataclass(frozen=True)
class Biclique:
    """A complete bipartite subgraph with ordered parts (left, right).

    Parts are stored as sorted tuples; both must be nonempty and disjoint.
    The side order is meaningful (characteristic vectors distinguish it).
    """

    left: tuple[int, ...]
    right: tuple[int, ...]

    def __post_init__(self):
        left = tuple(sorted(self.left))
        right = tuple(sorted(self.right))
        if not left or not right:
            raise ValueError("biclique sides must be nonempty")
        if len(set(left)) != len(left) or len(set(right)) != len(right):
            raise ValueError("biclique sides must not repeat vertices")
        if set(left) & set(right):
            raise ValueError(f"biclique sides overlap: {set(left) & set(right)}")
        if min(left[0], right[0]) < 0:
            raise ValueError("negative vertex index")
        object.__setattr__(self, "left", left)
        object.__setattr__(self, "right", right)

    def edge_count(self) -> int:
        return len(self.left) * len(self.right)

    def edges(self) -> Iterator[tuple[int, int]]:
        for u in self.left:
            for w in self.right:
                yield (u, w) if u < w else (w, u)


@dataclass(frozen=True)
class BicliqueSystem:
    """A list of bicliques over a common host vertex range, with a multiplicity bound.

    ``multiplicity_bound`` t = 1 declares an intended exact edge partition;
    t > 1 declares a cover touching each edge at most t times.  Validity
    against a concrete graph is established by :func:`verify_biclique_system`.
    """

    host_order: int
    parts: tuple[Biclique, ...]
    multiplicity_bound: int = 1

    def __post_init__(self):
        if self.multiplicity_bound < 1:
            raise ValueError("multiplicity bound must be >= 1")
        parts = tuple(self.parts)
        for i, b in enumerate(parts):
            top = max(b.left[-1], b.right[-1])
            if top >= self.host_order:
                raise ValueError(
                    f"part {i + 1} uses vertex {top} outside host order {self.host_order}"
                )
        object.__setattr__(self, "parts", parts)

    def __len__(self) -> int:
        return len(self.parts)


@dataclass(frozen=True)
class Certificate:
    """Machine-checkable record of one verified claim.

    ``witness`` holds a structured counterexample on failure, or an achieved
    value (e.g. an observed maximum) on success.  All payloads are plain
    JSON-serializable structures so certificates round-trip byte-stably.
    """

    claim: str
    parameters: dict[str, Any] = field(default_factory=dict)
    verdict: bool = False
    witness: Any = None

    def __post_init__(self):
        if not self.verdict and self.witness is None:
            raise ValueError("failing certificate requires a witness")


def verify_biclique_system(graph: Graph, system: BicliqueSystem) -> Certificate:
    """Check that ``system`` is a valid t-cover of ``graph``'s edges.

    Passes iff (i) each part's cross pairs are all edges of the graph,
    (ii) every edge is covered between 1 and t times, and (iii) no
    non-edge pair is covered.  The failure witness names the offending
    pair and its multiplicity.  Verdict is independent of part order.
    """
    if system.host_order != graph.order:
        raise ValueError(
            f"system host order {system.host_order} != graph order {graph.order}"
        )
    n = graph.order
    t = system.multiplicity_bound
    adj = graph.adjacency
    params = {
        "host_order": n,
        "parts": len(system.parts),
        "multiplicity_bound": t,
    }

    count = np.zeros((n, n), dtype=np.int16)
    for i, b in enumerate(system.parts):
        lu, lw = list(b.left), list(b.right)
        block = adj[np.ix_(lu, lw)]
        if not block.all():
            r, c = np.argwhere(~block)[0]
            return Certificate(
                claim="biclique-system",
                parameters=params,
                verdict=False,
                witness={
                    "kind": "part-not-biclique",
                    "part": i + 1,
                    "pair": [int(lu[r]), int(lw[c])],
                },
            )
        count[np.ix_(lu, lw)] += 1
        count[np.ix_(lw, lu)] += 1

    max_mult = 0
    chunk = 2048
    for lo in range(0, n, chunk):
        hi = min(lo + chunk, n)
        a = adj[lo:hi]
        c = count[lo:hi]
        if c.size:
            max_mult = max(max_mult, int(c.max()))
        # the diagonal is never flagged: sides are disjoint, so count[v,v] == 0
        bad_edge = a & ((c < 1) | (c > t))
        bad_non = (~a) & (c != 0)
        bad = bad_edge | bad_non
        if bad.any():
            r, cidx = np.argwhere(bad)[0]
            u, v = int(lo + r), int(cidx)
            return Certificate(
                claim="biclique-system",
                parameters=params,
                verdict=False,
                witness={
                    "kind": "bad-multiplicity",
                    "pair": [u, v],
                    "multiplicity": int(count[u, v]),
                    "is_edge": bool(adj[u, v]),
                },
            )
    return Certificate(
        claim="biclique-system",
        parameters=params,
        verdict=True,
        witness={"max_multiplicity": max_mult},
    )


def star_partition(graph: Graph) -> BicliqueSystem:
    """Partition the edges into at most N-1 stars.

    Vertices are processed in increasing index order; part i is the star
    from vertex i to its higher-indexed neighbors, when that set is
    nonempty.  Always a valid exact partition.
    """
    parts = []
    adj = graph.adjacency
    for v in range(graph.order):
        later = np.flatnonzero(adj[v, v + 1 :])
        if later.size:
            parts.append(Biclique((v,), tuple(int(v + 1 + u) for u in later)))
    return BicliqueSystem(graph.order, tuple(parts), 1)


def blowup(graph: Graph, m: int) -> Graph:
    """Replace each vertex by m independent copies; copy (v,a) gets index v*m + a.

    Copies of u and v are adjacent iff u != v are adjacent in the source.
    """
    if m < 1:
        raise ValueError("blowup factor must be >= 1")
    big = np.kron(graph.adjacency, np.ones((m, m), dtype=bool))
    return Graph._trusted(big)


def or_product(g: Graph, h: Graph) -> Graph:
    """OR product: (a,b) ~ (a',b') iff a ~ a' in g or b ~ b' in h.

    Vertex (a, b) gets index a*|h| + b.
    """
    ga, ha = g.adjacency, h.adjacency
    prod = (ga[:, None, :, None] | ha[None, :, None, :]).reshape(
        g.order * h.order, g.order * h.order
    )
    return Graph._trusted(prod)
