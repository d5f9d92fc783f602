"""Polyhedral maps: surfaces tiled by polygons, their duals and isomorphisms.

A face is a cyclic sequence of distinct vertices.  A valid map has every
edge in exactly two faces, any two faces meeting in nothing, one vertex or
one common edge, and the faces around each vertex forming a single cycle.
"""

from __future__ import annotations

import json
from collections import defaultdict
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

from .complex import TriangulationComplex, _normalize_label, is_combinatorial_2_manifold
from .errors import EmptyInput, InvalidMap, NotManifold, ParseError
from .isomorphism import Permutation


def normalize_face(face: Sequence[int]) -> tuple[int, ...]:
    """Representative of a cyclic sequence up to rotation and reflection."""
    f = tuple(face)
    i = f.index(min(f))
    f = f[i:] + f[:i]
    if len(f) > 2 and f[-1] < f[1]:
        f = (f[0],) + tuple(reversed(f[1:]))
    return f


def _face_edges(face: Sequence[int]):
    k = len(face)
    for i in range(k):
        a, b = face[i], face[(i + 1) % k]
        yield (a, b) if a < b else (b, a)


@dataclass(frozen=True)
class PolyhedralMap:
    n: int
    faces: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        object.__setattr__(self, "faces", tuple(sorted(normalize_face(f) for f in self.faces)))
        self._validate()

    # -- structure ---------------------------------------------------------

    @cached_property
    def edges(self) -> tuple[tuple[int, int], ...]:
        return tuple(sorted({e for f in self.faces for e in _face_edges(f)}))

    @cached_property
    def edge_faces(self) -> dict[tuple[int, int], list[int]]:
        out = defaultdict(list)
        for i, f in enumerate(self.faces):
            for e in _face_edges(f):
                out[e].append(i)
        return dict(out)

    @cached_property
    def vertex_faces(self) -> tuple[tuple[int, ...], ...]:
        out = [[] for _ in range(self.n)]
        for i, f in enumerate(self.faces):
            for v in f:
                out[v].append(i)
        return tuple(tuple(x) for x in out)

    @property
    def f_vector(self) -> tuple[int, int, int]:
        return (self.n, len(self.edges), len(self.faces))

    def face_cycle(self, v: int) -> tuple[int, ...]:
        """Indices of the faces around ``v`` in cyclic order.

        Each face through ``v`` contributes the edge (previous, next) to the
        link of ``v``; walking that link cycle from its least vertex, towards
        the smaller of its two neighbours, lists the faces in order.
        """
        by_nb = defaultdict(list)
        for i in self.vertex_faces[v]:
            f = self.faces[i]
            k = len(f)
            j = f.index(v)
            a, b = f[j - 1], f[(j + 1) % k]
            by_nb[a].append((b, i))
            by_nb[b].append((a, i))
        start = min(by_nb)
        cur, first = min(by_nb[start])
        order = [first]
        while cur != start and len(order) <= len(by_nb):
            cur, i = next((w, i) for w, i in by_nb[cur] if i != order[-1])
            order.append(i)
        return tuple(order)

    def relabel(self, perm: Sequence[int]) -> "PolyhedralMap":
        return PolyhedralMap(self.n, tuple(tuple(perm[v] for v in f) for f in self.faces))

    # -- validation --------------------------------------------------------

    def _validate(self):
        if not self.faces:
            raise InvalidMap("map has no faces")
        seen = set()
        for f in self.faces:
            if len(f) < 3:
                raise InvalidMap(f"face {f} has fewer than 3 vertices")
            if len(set(f)) != len(f):
                raise InvalidMap(f"face {f} repeats a vertex")
            if any(not 0 <= v < self.n for v in f):
                raise InvalidMap(f"face {f} uses a vertex outside 0..{self.n - 1}")
            seen.update(f)
        if len(seen) != self.n:
            raise InvalidMap(f"vertices {sorted(set(range(self.n)) - seen)} lie in no face")
        for e, fs in self.edge_faces.items():
            if len(fs) != 2:
                raise InvalidMap(f"edge {e} lies in {len(fs)} faces, expected 2")
        edge_sets = [set(_face_edges(f)) for f in self.faces]
        vsets = [set(f) for f in self.faces]
        for v in range(self.n):
            fs = self.vertex_faces[v]
            for x in range(len(fs)):
                for y in range(x + 1, len(fs)):
                    i, j = fs[x], fs[y]
                    if i > j or v != min(vsets[i] & vsets[j]):
                        continue
                    common = vsets[i] & vsets[j]
                    if len(common) == 1:
                        continue
                    pair = tuple(sorted(common))
                    if len(common) > 2 or pair not in edge_sets[i] or pair not in edge_sets[j]:
                        raise InvalidMap(f"faces {self.faces[i]} and {self.faces[j]} meet in {sorted(common)}")
        for v in range(self.n):
            if len(self.face_cycle(v)) != len(self.vertex_faces[v]):
                raise InvalidMap(f"the faces around vertex {v} do not form a single cycle")
        if not self._connected():
            raise InvalidMap("map is not connected")

    def _connected(self) -> bool:
        adj = defaultdict(set)
        for a, b in self.edges:
            adj[a].add(b)
            adj[b].add(a)
        stack, seen = [0], {0}
        while stack:
            for w in adj[stack.pop()]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        return len(seen) == self.n


def make_map(faces: Iterable[Sequence], n: int | None = None) -> PolyhedralMap:
    faces = [tuple(_normalize_label(x) for x in f) for f in faces]
    if not faces:
        raise EmptyInput("no faces given")
    if n is None:
        n = max(max(f) for f in faces) + 1
    return PolyhedralMap(n, tuple(faces))


def from_triangulation(K: TriangulationComplex) -> PolyhedralMap:
    rep = is_combinatorial_2_manifold(K)
    if not rep:
        raise NotManifold(f"vertex {rep.vertex}: {rep.reason}")
    return PolyhedralMap(K.n, K.faces)


def dual(M: PolyhedralMap) -> PolyhedralMap:
    """Dual map: face ``i`` of ``M`` (in sorted order) becomes vertex ``i``."""
    return PolyhedralMap(len(M.faces), tuple(M.face_cycle(v) for v in range(M.n)))


@dataclass(frozen=True)
class EquivelarType:
    p: int
    q: int

    def __str__(self):
        return f"{{{self.p},{self.q}}}"


def equivelar_type(M: PolyhedralMap) -> EquivelarType | None:
    ps = {len(f) for f in M.faces}
    qs = {len(fs) for fs in M.vertex_faces}
    if len(ps) == 1 and len(qs) == 1:
        return EquivelarType(ps.pop(), qs.pop())
    return None


def map_euler_characteristic(M: PolyhedralMap) -> int:
    v, e, f = M.f_vector
    return v - e + f


# ---------------------------------------------------------------------------
# isomorphism via flags
# ---------------------------------------------------------------------------


def _flags(M: PolyhedralMap):
    """Flags ``(v, e, f)`` and the three involutions on their indices."""
    flags = []
    for i, f in enumerate(M.faces):
        for a, b in _face_edges(f):
            flags.append((a, (a, b), i))
            flags.append((b, (a, b), i))
    index = {fl: k for k, fl in enumerate(flags)}
    r0, r1, r2 = [], [], []
    for v, e, i in flags:
        a, b = e
        r0.append(index[(b if v == a else a, e, i)])
        other = next(x for x in _face_edges(M.faces[i]) if v in x and x != e)
        r1.append(index[(v, other, i)])
        j = next(x for x in M.edge_faces[e] if x != i)
        r2.append(index[(v, e, j)])
    return flags, (r0, r1, r2)


def _signature(M: PolyhedralMap):
    return (
        M.f_vector,
        sorted(len(f) for f in M.faces),
        sorted(len(fs) for fs in M.vertex_faces),
    )


def maps_isomorphic(M1: PolyhedralMap, M2: PolyhedralMap) -> Permutation | None:
    """A vertex bijection carrying the faces of ``M1`` onto those of ``M2``, or None.

    A map isomorphism is determined by the image of one flag, so we fix a
    flag of ``M1`` and try every flag of ``M2`` as its image, extending along
    the three flag involutions.
    """
    if _signature(M1) != _signature(M2):
        return None
    flags1, inv1 = _flags(M1)
    flags2, inv2 = _flags(M2)
    m = len(flags1)
    for target in range(len(flags2)):
        img = [-1] * m
        img[0] = target
        stack = [0]
        ok = True
        while stack and ok:
            x = stack.pop()
            for r1, r2 in zip(inv1, inv2):
                y, z = r1[x], r2[img[x]]
                if img[y] == -1:
                    img[y] = z
                    stack.append(y)
                elif img[y] != z:
                    ok = False
                    break
        if not ok:
            continue
        vmap = [-1] * M1.n
        for x, t in enumerate(img):
            v, w = flags1[x][0], flags2[t][0]
            if vmap[v] not in (-1, w):
                ok = False
                break
            vmap[v] = w
        if ok and M1.relabel(vmap) == M2:
            return Permutation(tuple(vmap))
    return None


# ---------------------------------------------------------------------------
# text and JSON
# ---------------------------------------------------------------------------


def parse_map(text: str) -> PolyhedralMap:
    """One face per line as a cyclic label sequence; ``#`` starts a comment."""
    faces = []
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        try:
            faces.append(tuple(_normalize_label(x) for x in line.split()))
        except Exception as exc:
            raise ParseError(f"line {lineno}: {exc}") from exc
    return make_map(faces)


def format_map(M: PolyhedralMap, header: str | None = None) -> str:
    lines = [f"# {h}" for h in header.splitlines()] if header else []
    lines.extend(" ".join(map(str, f)) for f in M.faces)
    return "\n".join(lines) + "\n"


def map_to_dict(M: PolyhedralMap) -> dict:
    t = equivelar_type(M)
    return {
        "n": M.n,
        "f_vector": list(M.f_vector),
        "chi": map_euler_characteristic(M),
        "type": None if t is None else {"p": t.p, "q": t.q},
        "faces": [list(f) for f in M.faces],
    }


def map_to_json(M: PolyhedralMap) -> str:
    return json.dumps(map_to_dict(M))
