"""Isomorph-free generation of degree-regular combinatorial 2-manifolds.

The search grows a complex face by face from the closed star of vertex 0,
whose link is fixed to the cycle ``1, 2, ..., d``.  At every node it looks at
all *open* edges (edges lying in exactly one face), counts the legal third
vertices for each, and branches on the edge with the fewest.  A third vertex
is legal when no edge ends up in three faces, no vertex exceeds degree ``d``,
every partial link stays a disjoint union of paths (a link may only close up
into a cycle through all ``d`` neighbours) and, for orientable-only runs, the
induced orientation stays coherent.  Vertices not yet used by any face are
interchangeable, so only the least of them is ever tried.

Leaves are reduced to canonical form and deduplicated, so the output has one
complex per isomorphism class.
"""

from __future__ import annotations

import logging
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field, replace
from typing import Iterable

from .complex import (
    TriangulationComplex,
    admissible_parameters,
    degree_regular_type,
    euler_characteristic,
    is_combinatorial_2_manifold,
    orientability,
)
from .errors import InfeasibleParameters
from .graphs import GraphShape, fingerprint
from .isomorphism import GroupId, automorphism_group, canonical_labeling, identify_group

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class SearchConfig:
    orientable_only: bool = False
    prune_star_bound: bool = True
    #: depth of the node frontier that is split into independent tasks
    parallel_width: int = 0
    jobs: int = 1
    #: stop after this many classes (the run is then not exhaustive)
    limit: int | None = None
    #: for orientable-only runs, reject incoherent faces during the search
    #: rather than only filtering the finished leaves
    orient_during_search: bool = True

    @property
    def orient_in_search(self) -> bool:
        return self.orientable_only and self.orient_during_search


def star_union_lower_bound(m: int, d: int) -> int:
    """Least number of faces meeting some ``m`` vertices of a type-``d`` manifold.

    One vertex: ``d``.  Two: ``2d - 2`` (adjacent pair).  Three or more:
    ``3d - 6`` (a triangle of edges that is not a face).
    """
    if m <= 0:
        return 0
    if m == 1:
        return d
    if m == 2:
        return 2 * d - 2
    return 3 * d - 6


class PartialComplex:
    """Mutable search state.  Faces are added and removed in stack order."""

    def __init__(self, n: int, d: int):
        self.n = n
        self.d = d
        self.total = n * d // 3
        nn = n * n
        self.ec = [0] * nn
        self.lk: list[list[int]] = [[] for _ in range(nn)]
        self.dr = [False] * nn
        self.deg = [0] * n
        self.openc = [0] * n
        self.faces: list[tuple[int, int, int]] = []
        self.oriented: list[tuple[int, int, int]] = []
        self.open_edges: set[tuple[int, int]] = set()
        self.fresh = 0
        self._fresh_stack: list[int] = []

    # -- queries -----------------------------------------------------------

    def closed(self, v: int) -> bool:
        return self.deg[v] > 0 and self.openc[v] == 0

    def _path_end(self, v: int, s: int) -> tuple[int, int]:
        """Walk the path of lk(v) starting at endpoint ``s``; return (end, #vertices)."""
        lk, n = self.lk, self.n
        base = v * n
        prev, cur, cnt = -1, s, 1
        while True:
            nb = lk[base + cur]
            if prev != -1 and len(nb) == 1:
                return cur, cnt
            nxt = nb[0] if nb[0] != prev else nb[1]
            prev, cur = cur, nxt
            cnt += 1

    def _link_ok(self, v: int, x: int, y: int) -> bool:
        """May the edge ``xy`` be added to lk(v)?"""
        n = self.n
        if self.ec[v * n + x] == 1 and self.ec[v * n + y] == 1:
            end, cnt = self._path_end(v, x)
            if end == y:
                return cnt == self.d and cnt == self.deg[v]
        return True

    def orientation_for(self, a: int, b: int, c: int):
        """A cyclic order of ``abc`` coherent with existing faces, or None."""
        n, dr = self.n, self.dr
        for o in ((a, b, c), (a, c, b)):
            x, y, z = o
            if not (dr[x * n + y] or dr[y * n + z] or dr[z * n + x]):
                return o
        return None

    def legal(self, a: int, b: int, c: int, orientable: bool) -> bool:
        n, d, ec, deg = self.n, self.d, self.ec, self.deg
        eab, eac, ebc = ec[a * n + b], ec[a * n + c], ec[b * n + c]
        if eab == 2 or eac == 2 or ebc == 2:
            return False
        if eab and eac and ebc and c in self.lk[a * n + b]:
            return False
        if deg[a] + (eab == 0) + (eac == 0) > d:
            return False
        if deg[b] + (eab == 0) + (ebc == 0) > d:
            return False
        if deg[c] + (eac == 0) + (ebc == 0) > d:
            return False
        if orientable and self.orientation_for(a, b, c) is None:
            return False
        return self._link_ok(a, b, c) and self._link_ok(b, a, c) and self._link_ok(c, a, b)

    def candidates(self, a: int, b: int, orientable: bool) -> list[int]:
        """Legal third vertices for the open edge ``ab``."""
        top = min(self.fresh + 1, self.n)
        (z,) = self.lk[a * self.n + b]
        deg = self.deg
        out = []
        for y in range(top):
            if y == a or y == b or y == z:
                continue
            if deg[y] and self.openc[y] == 0:
                continue
            if self.legal(a, b, y, orientable):
                out.append(y)
        return out

    # -- updates -----------------------------------------------------------

    def _bump(self, p: int, q: int, r: int, delta: int):
        n = self.n
        i, j = p * n + q, q * n + p
        before = self.ec[i]
        after = before + delta
        self.ec[i] = self.ec[j] = after
        if delta > 0:
            self.lk[i].append(r)
            self.lk[j].append(r)
        else:
            self.lk[i].remove(r)
            self.lk[j].remove(r)
        if before == 0:
            self.deg[p] += 1
            self.deg[q] += 1
        elif after == 0:
            self.deg[p] -= 1
            self.deg[q] -= 1
        key = (p, q) if p < q else (q, p)
        if after == 1:
            self.openc[p] += 1
            self.openc[q] += 1
            self.open_edges.add(key)
        elif before == 1:
            self.openc[p] -= 1
            self.openc[q] -= 1
            self.open_edges.discard(key)

    def add(self, a: int, b: int, c: int, orient=None):
        if orient is None:
            orient = self.orientation_for(a, b, c) or (a, b, c)
        x, y, z = orient
        n = self.n
        self._bump(a, b, c, 1)
        self._bump(a, c, b, 1)
        self._bump(b, c, a, 1)
        for p, q in ((x, y), (y, z), (z, x)):
            self.dr[p * n + q] = True
        self.faces.append((a, b, c))
        self.oriented.append(orient)
        self._fresh_stack.append(self.fresh)
        self.fresh = max(self.fresh, a + 1, b + 1, c + 1)

    def pop(self):
        a, b, c = self.faces.pop()
        x, y, z = self.oriented.pop()
        n = self.n
        for p, q in ((x, y), (y, z), (z, x)):
            self.dr[p * n + q] = False
        self._bump(b, c, a, -1)
        self._bump(a, c, b, -1)
        self._bump(a, b, c, -1)
        self.fresh = self._fresh_stack.pop()

    # -- pruning -----------------------------------------------------------

    def star_bound_violated(self) -> bool:
        """Too few faces remain for the stars of the vertices still to be finished.

        Applied to the untouched vertices and to the vertices whose links are
        not yet closed: every face avoiding that set is already known, so the
        faces meeting it number at most ``total - known``.
        """
        remaining = self.total - len(self.faces)
        untouched = self.n - self.fresh
        if untouched and remaining < star_union_lower_bound(untouched, self.d):
            return True
        closed = [self.closed(v) for v in range(self.n)]
        open_vs = closed.count(False)
        inside = sum(1 for a, b, c in self.faces if closed[a] and closed[b] and closed[c])
        return self.total - inside < star_union_lower_bound(open_vs, self.d)

    def to_complex(self) -> TriangulationComplex:
        return TriangulationComplex(self.n, tuple(sorted(tuple(sorted(f)) for f in self.faces)))


def prune_star_bound(state: PartialComplex) -> bool:
    return state.star_bound_violated()


def seed_state(n: int, d: int, faces: Iterable[tuple[int, int, int]] | None = None) -> PartialComplex:
    """State with ``lk(0) = C_d(1, ..., d)``, or with the given faces."""
    st = PartialComplex(n, d)
    if faces is None:
        faces = [(0, i, i % d + 1) for i in range(1, d + 1)]
    for f in faces:
        a, b, c = f
        if not st.legal(a, b, c, orientable=False):
            raise ValueError(f"seed face {f} is inconsistent with the earlier ones")
        st.add(a, b, c)
    return st


# ---------------------------------------------------------------------------
# search
# ---------------------------------------------------------------------------


@dataclass
class SearchStats:
    nodes: int = 0
    leaves: int = 0
    prunes: Counter = field(default_factory=Counter)

    def merge(self, other: "SearchStats"):
        self.nodes += other.nodes
        self.leaves += other.leaves
        self.prunes.update(other.prunes)

    def as_dict(self) -> dict:
        return {"nodes": self.nodes, "leaves": self.leaves, "prunes": dict(sorted(self.prunes.items()))}


def _choose(st: PartialComplex, orientable: bool):
    best_edge, best_cands = None, None
    for a, b in sorted(st.open_edges):
        cands = st.candidates(a, b, orientable)
        if best_cands is None or len(cands) < len(best_cands):
            best_edge, best_cands = (a, b), cands
            if not cands:
                break
    return best_edge, best_cands


def _dfs(st: PartialComplex, cfg: SearchConfig, stats: SearchStats, leaves: list, depth_limit=None, frontier=None):
    """Depth-first completion.  With ``depth_limit`` set, states at that depth
    are recorded in ``frontier`` (as face lists) instead of being expanded."""
    orientable = cfg.orient_in_search

    def rec(depth):
        stats.nodes += 1
        if cfg.prune_star_bound and st.star_bound_violated():
            stats.prunes["star_bound"] += 1
            return
        if not st.open_edges:
            if len(st.faces) == st.total and all(st.closed(v) for v in range(st.n)):
                stats.leaves += 1
                leaves.append(st.to_complex())
            else:
                stats.prunes["closed_early"] += 1
            return
        if depth_limit is not None and depth == depth_limit:
            frontier.append((list(st.faces), list(st.oriented)))
            return
        edge, cands = _choose(st, orientable)
        if not cands:
            stats.prunes["dead_end"] += 1
            return
        a, b = edge
        for y in cands:
            st.add(a, b, y)
            rec(depth + 1)
            st.pop()

    rec(0)


def _leaf_ok(K: TriangulationComplex, d: int, orientable_only: bool) -> bool:
    if not is_combinatorial_2_manifold(K) or degree_regular_type(K) != d:
        return False
    return not orientable_only or bool(orientability(K))


def _run_task(args):
    n, d, cfg, faces, oriented = args
    st = PartialComplex(n, d)
    for f, o in zip(faces, oriented):
        st.add(*f, orient=o)
    stats = SearchStats()
    leaves: list = []
    _dfs(st, cfg, stats, leaves)
    classes = {}
    for K in leaves:
        if not _leaf_ok(K, d, cfg.orientable_only):
            stats.prunes["rejected_leaf"] += 1
            continue
        res = canonical_labeling(K)
        classes.setdefault(res.key, TriangulationComplex(n, res.faces))
    return classes, stats


@dataclass
class Certificate:
    chi: int
    orientable: bool
    degree_type: int | None
    aut: GroupId
    aut_order: int
    fingerprint: list[GraphShape]

    def as_dict(self) -> dict:
        return {
            "chi": self.chi,
            "orientable": self.orientable,
            "degree_type": self.degree_type,
            "aut": str(self.aut),
            "aut_order": self.aut_order,
            "fingerprint": [{"n": k, "shape": str(s)} for k, s in enumerate(self.fingerprint)],
        }


def certify(K: TriangulationComplex) -> Certificate:
    g = automorphism_group(K)
    orient = orientability(K) if K.is_connected() else None
    return Certificate(
        chi=euler_characteristic(K),
        orientable=bool(orient),
        degree_type=degree_regular_type(K),
        aut=identify_group(g),
        aut_order=g.order,
        fingerprint=fingerprint(K),
    )


@dataclass
class ClassificationResult:
    n: int
    d: int
    complexes: list[TriangulationComplex]
    stats: SearchStats
    exhaustive: bool = True
    _certs: list[Certificate] | None = field(default=None, repr=False)

    @property
    def certificates(self) -> list[Certificate]:
        if self._certs is None:
            self._certs = [certify(K) for K in self.complexes]
        return self._certs

    def __len__(self):
        return len(self.complexes)


def check_parameters(n: int, d: int):
    if d < 3 or n <= d or (n * d) % 6:
        raise InfeasibleParameters(f"no degree-regular manifold of type {d} on {n} vertices: need nd = 0 mod 6, d >= 3, n > d")


def enumerate_degree_regular(n: int, d: int, config: SearchConfig | None = None,
                             seed_faces=None) -> ClassificationResult:
    """All isomorphism classes of type-``d`` combinatorial 2-manifolds on ``n`` vertices.

    ``seed_faces`` replaces the default star of vertex 0 as the starting state
    (used to complete partially known complexes); the output is then the set
    of classes that contain a completion of those faces.
    """
    cfg = config or SearchConfig()
    check_parameters(n, d)
    if seed_faces is None:
        st = seed_state(n, d)
    else:
        st = PartialComplex(n, d)
        for a, b, c in seed_faces:
            if not st.legal(a, b, c, cfg.orient_in_search):
                return ClassificationResult(n, d, [], SearchStats())
            st.add(a, b, c)
    stats = SearchStats()
    if cfg.parallel_width > 0:
        frontier: list = []
        leaves: list = []
        _dfs(st, cfg, stats, leaves, depth_limit=cfg.parallel_width, frontier=frontier)
        tasks = [(n, d, cfg, f, o) for f, o in frontier]
        classes = {}
        for K in leaves:
            if _leaf_ok(K, d, cfg.orientable_only):
                res = canonical_labeling(K)
                classes.setdefault(res.key, TriangulationComplex(n, res.faces))
        if cfg.jobs > 1:
            with ProcessPoolExecutor(cfg.jobs) as ex:
                results = list(ex.map(_run_task, tasks))
        else:
            results = [_run_task(t) for t in tasks]
        for cl, s in results:
            stats.merge(s)
            for key, K in cl.items():
                classes.setdefault(key, K)
    else:
        classes, stats = _run_task((n, d, cfg, st.faces, st.oriented))
    complexes = sorted(classes.values(), key=lambda K: K.faces)
    exhaustive = True
    if cfg.limit is not None and len(complexes) > cfg.limit:
        complexes = complexes[: cfg.limit]
        exhaustive = False
    log.info("n=%d d=%d: %d classes, %d nodes", n, d, len(complexes), stats.nodes)
    return ClassificationResult(n, d, complexes, stats, exhaustive)


def classify_chi(chi: int, orientable_only: bool = False, config: SearchConfig | None = None,
                 max_n: int = 12) -> list[ClassificationResult]:
    """Run the enumeration for every admissible ``(n, d)`` with Euler characteristic ``chi``."""
    cfg = config or SearchConfig(orientable_only=orientable_only)
    if cfg.orientable_only != orientable_only:
        cfg = replace(cfg, orientable_only=orientable_only)
    return [enumerate_degree_regular(n, d, cfg) for n, d in admissible_parameters(chi, max_n=max_n)]
