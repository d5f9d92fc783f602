"""Slow, independent reference implementations used to check the package.

Nothing here imports the package: complexes are plain lists of sorted
triples on vertices ``0..n-1``.
"""

from __future__ import annotations

from itertools import combinations, permutations


def _links_are_cycles(n, faces):
    for v in range(n):
        adj = {}
        for f in faces:
            if v in f:
                a, b = [x for x in f if x != v]
                adj.setdefault(a, []).append(b)
                adj.setdefault(b, []).append(a)
        if not adj or any(len(ns) != 2 for ns in adj.values()):
            return False
        start = next(iter(adj))
        seen, stack = {start}, [start]
        while stack:
            for w in adj[stack.pop()]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        if len(seen) != len(adj):
            return False
    return True


def _connected(n, faces):
    adj = {v: set() for v in range(n)}
    for f in faces:
        for a, b in combinations(f, 2):
            adj[a].add(b)
            adj[b].add(a)
    seen, stack = {0}, [0]
    while stack:
        for w in adj[stack.pop()]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return len(seen) == n


def labelled_degree_regular_manifolds(n: int, d: int) -> list[tuple]:
    """Every labelled connected type-``d`` manifold on ``n`` vertices.

    Walks all subsets of the C(n,3) triangles in lexicographic order,
    pruning a branch only when a necessary condition already fails: an edge
    in three faces, a vertex of degree above ``d``, too many faces, or an
    edge whose triangles are all decided but which lies in exactly one face.
    """
    if (n * d) % 3:
        return []
    target = n * d // 3
    tris = list(combinations(range(n), 3))
    # index of the last triangle containing each edge
    last = {}
    for i, t in enumerate(tris):
        for e in combinations(t, 2):
            last[e] = i
    closing = [[] for _ in tris]
    for e, i in last.items():
        closing[i].append(e)
    ec = {e: 0 for e in last}
    nbrs = [set() for _ in range(n)]
    out = []
    chosen = []

    def deg_ok(t):
        for v in t:
            new = {w for w in t if w != v} - nbrs[v]
            if len(nbrs[v]) + len(new) > d:
                return False
        return True

    def rec(i):
        if len(chosen) == target:
            if all(c in (0, 2) for c in ec.values()):
                faces = list(chosen)
                if all(len(nbrs[v]) == d for v in range(n)) and _links_are_cycles(n, faces) and _connected(n, faces):
                    out.append(tuple(faces))
            return
        if i == len(tris) or len(chosen) + (len(tris) - i) < target:
            return
        t = tris[i]
        es = list(combinations(t, 2))
        # take t
        if all(ec[e] < 2 for e in es) and deg_ok(t):
            added = []
            for e in es:
                ec[e] += 1
            for a, b in es:
                if b not in nbrs[a]:
                    nbrs[a].add(b)
                    nbrs[b].add(a)
                    added.append((a, b))
            chosen.append(t)
            if all(ec[e] != 1 for e in closing[i]):
                rec(i + 1)
            chosen.pop()
            for a, b in added:
                nbrs[a].discard(b)
                nbrs[b].discard(a)
            for e in es:
                ec[e] -= 1
        # skip t
        if all(ec[e] != 1 for e in closing[i]):
            rec(i + 1)

    rec(0)
    return out


def orbit_canonical(n: int, faces) -> tuple:
    """Least sorted face list over all n! relabellings."""
    best = None
    for p in permutations(range(n)):
        img = tuple(sorted(tuple(sorted(p[v] for v in f)) for f in faces))
        if best is None or img < best:
            best = img
    return best


def count_classes_brute(n: int, d: int) -> int:
    """Isomorphism classes of type-``d`` manifolds on ``n`` vertices, by brute force."""
    return len({orbit_canonical(n, fs) for fs in labelled_degree_regular_manifolds(n, d)})


def _edge_adjacency(n, faces):
    adj = [set() for _ in range(n)]
    for f in faces:
        for a, b in combinations(f, 2):
            adj[a].add(b)
            adj[b].add(a)
    return adj


def isomorphisms(n: int, faces1, faces2, first_only: bool = False) -> list[tuple]:
    """All vertex bijections carrying ``faces1`` onto ``faces2`` (edge-preserving backtracking)."""
    f2 = {tuple(sorted(f)) for f in faces2}
    if len(f2) != len({tuple(sorted(f)) for f in faces1}):
        return []
    a1, a2 = _edge_adjacency(n, faces1), _edge_adjacency(n, faces2)
    img = [-1] * n
    used = [False] * n
    found = []

    def rec(v):
        if first_only and found:
            return
        if v == n:
            if all(tuple(sorted(img[x] for x in f)) in f2 for f in faces1):
                found.append(tuple(img))
            return
        for w in range(n):
            if used[w] or len(a1[v]) != len(a2[w]):
                continue
            if any((img[u] in a2[w]) != (u in a1[v]) for u in range(v)):
                continue
            img[v], used[w] = w, True
            rec(v + 1)
            img[v], used[w] = -1, False

    rec(0)
    return found


def automorphism_count(n: int, faces) -> int:
    return len(isomorphisms(n, faces, faces))


def star_union(faces, S) -> int:
    S = set(S)
    return sum(1 for f in faces if S & set(f))
