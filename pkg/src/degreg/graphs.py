"""Simple graphs, common-neighbour graphs and label-free component shapes."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable

#: components above this size get a weaker (degree-sequence) certificate
MAX_CERT_SIZE = 12


class SimpleGraph:
    """Undirected graph without loops or parallel edges.

    ``vertices`` may be an int ``n`` (meaning ``range(n)``) or any iterable
    of vertex labels.
    """

    def __init__(self, vertices, edges: Iterable = ()):
        if isinstance(vertices, int):
            vertices = range(vertices)
        self.vertices = tuple(sorted(vertices))
        vs = set(self.vertices)
        es = set()
        for a, b in edges:
            if a == b:
                raise ValueError(f"loop at {a}")
            if a not in vs or b not in vs:
                raise ValueError(f"edge {a}{b} leaves the vertex set")
            es.add((a, b) if a < b else (b, a))
        self.edges = frozenset(es)

    @property
    def n(self) -> int:
        return len(self.vertices)

    @cached_property
    def adjacency(self) -> dict:
        adj = {v: [] for v in self.vertices}
        for a, b in self.edges:
            adj[a].append(b)
            adj[b].append(a)
        return {v: tuple(sorted(ns)) for v, ns in adj.items()}

    def relabel(self, perm) -> "SimpleGraph":
        return SimpleGraph((perm[v] for v in self.vertices), ((perm[a], perm[b]) for a, b in self.edges))

    def components(self) -> list[tuple]:
        adj = self.adjacency
        seen = set()
        comps = []
        for s in self.vertices:
            if s in seen:
                continue
            comp = [s]
            seen.add(s)
            i = 0
            while i < len(comp):
                for w in adj[comp[i]]:
                    if w not in seen:
                        seen.add(w)
                        comp.append(w)
                i += 1
            comps.append(tuple(sorted(comp)))
        return comps

    def __eq__(self, other):
        return (
            isinstance(other, SimpleGraph)
            and self.vertices == other.vertices
            and self.edges == other.edges
        )

    def __hash__(self):
        return hash((self.vertices, self.edges))

    def __repr__(self):
        return f"SimpleGraph({len(self.vertices)} vertices, {len(self.edges)} edges)"


def complete_graph(n: int) -> SimpleGraph:
    return SimpleGraph(n, ((a, b) for a in range(n) for b in range(a + 1, n)))


def edge_graph(K) -> SimpleGraph:
    """The 1-skeleton of a complex."""
    return SimpleGraph(K.n, K.edges)


def common_neighbor_graph(G: SimpleGraph, k: int) -> SimpleGraph:
    """Join ``u != v`` iff they have exactly ``k`` common neighbours in ``G``."""
    nb = {v: set(ns) for v, ns in G.adjacency.items()}
    vs = G.vertices
    edges = [
        (a, b)
        for i, a in enumerate(vs)
        for b in vs[i + 1:]
        if len(nb[a] & nb[b]) == k
    ]
    return SimpleGraph(vs, edges)


# ---------------------------------------------------------------------------
# shapes
# ---------------------------------------------------------------------------

_KIND_ORDER = {"C": 0, "P": 1, "X": 2, "I": 3}


@dataclass(frozen=True, order=True)
class Component:
    """One connected component: kind is ``C`` (cycle), ``P`` (path),
    ``I`` (isolated vertex) or ``X`` (anything else, with a certificate)."""

    kind: str
    size: int
    cert: str = ""

    def sort_key(self):
        return (_KIND_ORDER[self.kind], -self.size, self.cert)

    def __str__(self):
        if self.kind == "I":
            return "I"
        if self.kind == "X":
            return f"X{self.size}:{self.cert}"
        return f"{self.kind}{self.size}"


@dataclass(frozen=True)
class GraphShape:
    """Multiset of component descriptors, stored in a fixed order."""

    components: tuple[Component, ...]

    @classmethod
    def of(cls, comps: Iterable[Component]) -> "GraphShape":
        return cls(tuple(sorted(comps, key=Component.sort_key)))

    @property
    def counts(self) -> Counter:
        return Counter(self.components)

    @property
    def n(self) -> int:
        return sum(c.size for c in self.components)

    def __str__(self):
        parts = []
        seen = []
        counts = self.counts
        for c in self.components:
            if c in seen:
                continue
            seen.append(c)
            k = counts[c]
            parts.append(str(c) if k == 1 else f"{k}×{c}")
        return "+".join(parts)

    @classmethod
    def parse(cls, text: str) -> "GraphShape":
        """Inverse of ``str`` for shapes without ``X`` components."""
        comps = []
        for part in text.split("+"):
            k = 1
            if "×" in part:
                ks, part = part.split("×")
                k = int(ks)
            if part == "I":
                comps.extend([Component("I", 1)] * k)
            elif part[0] in "CP":
                comps.extend([Component(part[0], int(part[1:]))] * k)
            else:
                raise ValueError(f"cannot parse component {part!r}")
        return cls.of(comps)


def _certificate(adj: dict, verts: tuple) -> str:
    """Least adjacency code over degree-sorted vertex orderings.

    The code lists, for each position i, the adjacency bits to positions < i.
    Restricting to orderings with nondecreasing degree keeps it invariant.
    """
    k = len(verts)
    deg = {v: len(adj[v]) for v in verts}
    degseq = sorted(deg.values())
    if k > MAX_CERT_SIZE:
        return "deg" + "-".join(map(str, degseq)) + f"/e{sum(degseq) // 2}"
    nbset = {v: set(adj[v]) for v in verts}
    best: list[int] | None = None
    order: list = []
    used = set()

    def rec(i: int, rows: list[int]):
        nonlocal best
        if i == k:
            if best is None or rows < best:
                best = rows[:]
            return
        for v in verts:
            if v in used or deg[v] != degseq[i]:
                continue
            row = 0
            for j, w in enumerate(order):
                if w in nbset[v]:
                    row |= 1 << j
            if best is not None and row > best[i] and rows == best[:i]:
                continue
            used.add(v)
            order.append(v)
            rows.append(row)
            rec(i + 1, rows)
            rows.pop()
            order.pop()
            used.discard(v)

    rec(0, [])
    return "".join(f"{r:x}." for r in best)


def graph_shape(G: SimpleGraph) -> GraphShape:
    adj = G.adjacency
    comps = []
    for comp in G.components():
        k = len(comp)
        degs = [len(adj[v]) for v in comp]
        n_edges = sum(degs) // 2
        if k == 1:
            comps.append(Component("I", 1))
        elif all(x == 2 for x in degs):
            comps.append(Component("C", k))
        elif max(degs) <= 2 and n_edges == k - 1:
            comps.append(Component("P", k))
        else:
            comps.append(Component("X", k, _certificate(adj, comp)))
    return GraphShape.of(comps)


def fingerprint(K) -> list[GraphShape]:
    """Shapes of ``G_k(EG(K))`` for ``k = 0 .. n-2``."""
    eg = edge_graph(K)
    return [graph_shape(common_neighbor_graph(eg, k)) for k in range(K.n - 1)]
