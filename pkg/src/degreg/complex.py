"""Abstract simplicial 2-complexes and the basic surface invariants.

A :class:`TriangulationComplex` is a vertex set ``range(n)`` together with a set
of triangles.  Everything here is a pure function of an immutable complex.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Sequence

from .errors import (
    DegenerateFace,
    EmptyInput,
    NotACycle,
    NotConnected,
    NotManifold,
    OddParity,
    ParseError,
    UnknownVertex,
)
from .graphs import SimpleGraph

Triangle = tuple[int, int, int]

#: Letter labels used for the last two vertices of 12-vertex complexes.
LETTER_LABELS = {"u": 10, "v": 11}


@dataclass(frozen=True)
class TriangulationComplex:
    """A pure 2-dimensional simplicial complex on the vertices ``0..n-1``.

    ``faces`` is a sorted tuple of sorted triples.  Use :func:`build_complex`
    to construct one from arbitrary labels.
    """

    n: int
    faces: tuple[Triangle, ...]

    def __post_init__(self):
        used = {v for f in self.faces for v in f}
        if used != set(range(self.n)):
            raise ValueError("every vertex 0..n-1 must lie in some face")

    @cached_property
    def face_set(self) -> frozenset[Triangle]:
        return frozenset(self.faces)

    @cached_property
    def edges(self) -> tuple[tuple[int, int], ...]:
        es = set()
        for a, b, c in self.faces:
            es.update(((a, b), (a, c), (b, c)))
        return tuple(sorted(es))

    @cached_property
    def incidence(self) -> tuple[tuple[Triangle, ...], ...]:
        """Faces through each vertex."""
        inc: list[list[Triangle]] = [[] for _ in range(self.n)]
        for f in self.faces:
            for v in f:
                inc[v].append(f)
        return tuple(tuple(fs) for fs in inc)

    @cached_property
    def edge_faces(self) -> dict[tuple[int, int], tuple[Triangle, ...]]:
        ef: dict[tuple[int, int], list[Triangle]] = {}
        for f in self.faces:
            a, b, c = f
            for e in ((a, b), (a, c), (b, c)):
                ef.setdefault(e, []).append(f)
        return {e: tuple(fs) for e, fs in ef.items()}

    @cached_property
    def neighbors(self) -> tuple[frozenset[int], ...]:
        nb: list[set[int]] = [set() for _ in range(self.n)]
        for a, b in self.edges:
            nb[a].add(b)
            nb[b].add(a)
        return tuple(frozenset(s) for s in nb)

    @property
    def degrees(self) -> tuple[int, ...]:
        return tuple(len(s) for s in self.neighbors)

    @property
    def f_vector(self) -> tuple[int, int, int]:
        return (self.n, len(self.edges), len(self.faces))

    @cached_property
    def link_cycles(self) -> tuple[tuple[int, ...], ...]:
        """Link cycle of every vertex; raises :class:`NotACycle` if any fails."""
        return tuple(link_cycle(self, v) for v in range(self.n))

    def has_face(self, a: int, b: int, c: int) -> bool:
        return tuple(sorted((a, b, c))) in self.face_set

    def relabel(self, perm: Sequence[int]) -> "TriangulationComplex":
        """Image of the complex under the vertex map ``v -> perm[v]``."""
        return TriangulationComplex(
            self.n,
            tuple(sorted(tuple(sorted((perm[a], perm[b], perm[c]))) for a, b, c in self.faces)),
        )

    def is_connected(self) -> bool:
        seen = {0}
        todo = [0]
        while todo:
            v = todo.pop()
            for w in self.neighbors[v]:
                if w not in seen:
                    seen.add(w)
                    todo.append(w)
        return len(seen) == self.n

    def __repr__(self):
        return f"TriangulationComplex(n={self.n}, f={self.f_vector})"


def _normalize_label(label) -> int:
    if isinstance(label, bool):
        raise ParseError(f"bad vertex label {label!r}")
    if isinstance(label, int):
        if label < 0:
            raise ParseError(f"negative vertex label {label}")
        return label
    if isinstance(label, str):
        s = label.strip()
        if s in LETTER_LABELS:
            return LETTER_LABELS[s]
        if s.isdigit():
            return int(s)
    raise ParseError(f"bad vertex label {label!r}")


def build_complex(face_list: Iterable[Sequence]) -> TriangulationComplex:
    """Build a complex from 3-tuples of labels.

    Labels may be nonnegative integers or the letters ``u``/``v`` (10, 11).
    Labels are then renumbered densely in increasing order and duplicate
    faces are collapsed.
    """
    raw = []
    for tup in face_list:
        tup = tuple(tup)
        if len(tup) != 3:
            raise DegenerateFace(f"face {tup!r} does not have 3 vertices")
        labels = tuple(_normalize_label(x) for x in tup)
        if len(set(labels)) != 3:
            raise DegenerateFace(f"face {tup!r} repeats a vertex")
        raw.append(labels)
    if not raw:
        raise EmptyInput("no faces given")
    used = sorted({v for f in raw for v in f})
    dense = {v: i for i, v in enumerate(used)}
    faces = {tuple(sorted(dense[v] for v in f)) for f in raw}
    return TriangulationComplex(len(used), tuple(sorted(faces)))


def parse_face_list(text: str) -> TriangulationComplex:
    """Parse the ``.tri`` text format: one face per line, ``#`` comments."""
    rows = []
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) != 3:
            raise ParseError(f"line {lineno}: expected 3 labels, got {len(parts)}")
        rows.append(parts)
    return build_complex(rows)


def format_face_list(K: TriangulationComplex, header: str | None = None) -> str:
    lines = []
    if header:
        lines.extend(f"# {h}" for h in header.splitlines())
    lines.extend(f"{a} {b} {c}" for a, b, c in K.faces)
    return "\n".join(lines) + "\n"


def load_complex(path) -> TriangulationComplex:
    with open(path, encoding="utf-8") as fh:
        return parse_face_list(fh.read())


# ---------------------------------------------------------------------------
# links and manifold checks
# ---------------------------------------------------------------------------


def _check_vertex(K: TriangulationComplex, v: int):
    if not 0 <= v < K.n:
        raise UnknownVertex(f"vertex {v} not in complex with {K.n} vertices")


def link_of(K: TriangulationComplex, v: int) -> SimpleGraph:
    """Link of ``v``: graph on the neighbours of ``v``, ``xy`` an edge iff ``vxy`` is a face."""
    _check_vertex(K, v)
    edges = []
    for f in K.incidence[v]:
        x, y = (w for w in f if w != v)
        edges.append((x, y))
    return SimpleGraph(tuple(sorted(K.neighbors[v])), edges)


def link_cycle(K: TriangulationComplex, v: int) -> tuple[int, ...]:
    """Link of ``v`` as a cycle, starting at the smallest neighbour and
    heading towards the smaller of its two cycle neighbours."""
    g = link_of(K, v)
    adj = g.adjacency
    if len(g.vertices) < 3:
        raise NotACycle(v, "fewer than 3 neighbours")
    for x in g.vertices:
        if len(adj[x]) != 2:
            raise NotACycle(v, f"neighbour {x} has link degree {len(adj[x])}")
    start = g.vertices[0]
    prev, cur = start, min(adj[start])
    cyc = [start]
    while cur != start:
        cyc.append(cur)
        a, b = adj[cur]
        prev, cur = cur, (b if a == prev else a)
    if len(cyc) != len(g.vertices):
        raise NotACycle(v, "link is disconnected")
    return tuple(cyc)


@dataclass(frozen=True)
class ManifoldReport:
    ok: bool
    vertex: int | None = None
    reason: str | None = None

    def __bool__(self):
        return self.ok


def is_combinatorial_2_manifold(K: TriangulationComplex) -> ManifoldReport:
    for v in range(K.n):
        try:
            link_cycle(K, v)
        except NotACycle as exc:
            return ManifoldReport(False, v, exc.reason)
    return ManifoldReport(True)


def euler_characteristic(K: TriangulationComplex) -> int:
    f0, f1, f2 = K.f_vector
    return f0 - f1 + f2


def degree_regular_type(K: TriangulationComplex) -> int | None:
    degs = set(K.degrees)
    return degs.pop() if len(degs) == 1 else None


# ---------------------------------------------------------------------------
# orientation
# ---------------------------------------------------------------------------


def _cyclic(tri: Sequence[int]) -> tuple[int, int, int]:
    """Rotate a cyclically ordered triple so that its smallest entry is first."""
    a, b, c = tri
    if a < b and a < c:
        return (a, b, c)
    if b < a and b < c:
        return (b, c, a)
    return (c, a, b)


@dataclass(frozen=True)
class OrientationAssignment:
    """Sign per face: ``+1`` means the cyclic order of the sorted triple."""

    signs: dict[Triangle, int] = field(hash=False)

    def oriented(self, face: Sequence[int]) -> tuple[int, int, int]:
        f = tuple(sorted(face))
        a, b, c = f
        return (a, b, c) if self.signs[f] > 0 else (a, c, b)

    def sign_of(self, tri: Sequence[int]) -> int:
        """+1 if the cyclic triple ``tri`` agrees with the assigned orientation."""
        return 1 if _cyclic(tri) == _cyclic(self.oriented(tri)) else -1

    def is_coherent(self) -> bool:
        directed = set()
        for f in self.signs:
            a, b, c = self.oriented(f)
            for e in ((a, b), (b, c), (c, a)):
                if e in directed:
                    return False
                directed.add(e)
        return True


@dataclass(frozen=True)
class Orientability:
    orientable: bool
    orientation: OrientationAssignment | None = None
    #: closed walk of faces along which the propagated orientation flips
    obstruction: tuple[Triangle, ...] | None = None

    def __bool__(self):
        return self.orientable


def _require_connected_manifold(K: TriangulationComplex):
    rep = is_combinatorial_2_manifold(K)
    if not rep:
        raise NotManifold(f"link of vertex {rep.vertex} is not a cycle ({rep.reason})")
    if not K.is_connected():
        raise NotConnected("complex is not connected")


def orientability(K: TriangulationComplex) -> Orientability:
    """Propagate an orientation across shared edges breadth-first.

    The least face gets the orientation of its sorted vertex order.
    """
    _require_connected_manifold(K)
    root = K.faces[0]
    orient: dict[Triangle, tuple[int, int, int]] = {root: root}
    parent: dict[Triangle, Triangle | None] = {root: None}
    queue = deque([root])
    while queue:
        f = queue.popleft()
        a, b, c = orient[f]
        for x, y in ((a, b), (b, c), (c, a)):
            for g in K.edge_faces[tuple(sorted((x, y)))]:
                if g == f:
                    continue
                (z,) = (w for w in g if w not in (x, y))
                want = _cyclic((y, x, z))
                if g not in orient:
                    orient[g] = want
                    parent[g] = f
                    queue.append(g)
                elif orient[g] != want:
                    return Orientability(False, obstruction=_face_loop(parent, f, g))
    signs = {f: (1 if o == f else -1) for f, o in orient.items()}
    return Orientability(True, OrientationAssignment(signs))


def _face_loop(parent, f, g):
    def chain(x):
        out = []
        while x is not None:
            out.append(x)
            x = parent[x]
        return out

    cf, cg = chain(f), chain(g)
    common = set(cf) & set(cg)
    head = [x for x in cf if x not in common]
    tail = [x for x in cg if x not in common]
    meet = next(x for x in cf if x in common)
    return tuple(head + [meet] + tail[::-1] + ([head[0]] if head else [f]))


def genus(K: TriangulationComplex) -> int:
    """Genus of an orientable connected closed surface."""
    if not orientability(K):
        raise NotManifold("genus is only defined here for orientable surfaces")
    chi = euler_characteristic(K)
    if (2 - chi) % 2:
        raise OddParity(f"odd 2 - chi for chi={chi}")
    return (2 - chi) // 2


def star_union_face_count(K: TriangulationComplex, S: Iterable[int]) -> int:
    """Number of faces meeting at least one vertex of ``S``."""
    S = set(S)
    if not S:
        raise ValueError("vertex set must be nonempty")
    for v in S:
        _check_vertex(K, v)
    return len({f for v in S for f in K.incidence[v]})


# ---------------------------------------------------------------------------
# admissible parameters
# ---------------------------------------------------------------------------


def admissible_parameters(chi: int, max_n: int = 12) -> list[tuple[int, int]]:
    """All ``(n, d)`` with ``n(6-d)/6 = chi``, ``nd = 0 mod 6``, ``n > d >= 3``.

    For ``chi = 0`` the family is infinite and is cut off at ``max_n``.
    """
    if chi > 2:
        return []
    out = []
    if chi == 0:
        return [(n, 6) for n in range(7, max_n + 1)]
    for d in range(3, 6) if chi > 0 else ():
        if (6 * chi) % (6 - d) == 0:
            n = 6 * chi // (6 - d)
            if n > d and (n * d) % 6 == 0:
                out.append((n, d))
    if chi < 0:
        m = -6 * chi
        for n in range(1, m + 1):
            if m % n == 0:
                d = 6 + m // n
                if n > d and (n * d) % 6 == 0:
                    out.append((n, d))
    return sorted(out)


def admissible_equivelar_parameters(chi: int, max_n: int = 12) -> list[tuple[int, int, int]]:
    """All ``(n, p, q)`` for a ``{p, q}``-equivelar map on ``n`` vertices.

    Requires ``n - nq/2 + nq/p = chi`` with integral edge and face counts and
    enough vertex pairs for the edges and face diagonals:
    ``nq(p-3)/2 + nq/2 <= C(n, 2)``.
    """
    if chi > 2:
        return []
    bound = 6 * abs(chi) + 24
    out = []
    for p in range(3, bound):
        for q in range(3, bound):
            den = 2 * p - p * q + 2 * q
            if den == 0:
                if chi != 0:
                    continue
                ns = range(p + 1, max_n + 1)
            else:
                if (2 * p * chi) % den:
                    continue
                ns = [2 * p * chi // den]
            for n in ns:
                if n <= 0 or (n * q) % 2 or (n * q) % p:
                    continue
                if n * q * (p - 2) <= n * (n - 1):
                    out.append((n, p, q))
    return sorted(out)

