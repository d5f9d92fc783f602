"""Isomorphism, canonical forms and automorphism groups of complexes.

For a connected combinatorial 2-manifold a relabelling is determined by where
one *flag* goes: a vertex, one of its neighbours and a direction around the
link.  From such a root we label vertices breadth first, walking each link
cycle from its least-labelled vertex, and record the walk as a code.  The
least code over all roots is canonical, and the roots attaining it are in
bijection with the automorphisms.  Other complexes (disconnected, or not
manifolds) fall back to a brute-force search over degree-compatible labellings,
which is only meant for small inputs.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import permutations, product
from typing import Iterable, Sequence

from .complex import (
    OrientationAssignment,
    TriangulationComplex,
    is_combinatorial_2_manifold,
    orientability,
)
from .errors import NotAutomorphism, NotOrientable

#: largest number of labellings the brute-force fallback will try
BRUTE_FORCE_LIMIT = 2_000_000


class Permutation:
    """A bijection of ``range(n)``, stored as its image list.

    ``(p * q)(x) == p(q(x))``.
    """

    __slots__ = ("image",)

    def __init__(self, image: Iterable[int]):
        self.image = tuple(image)
        if sorted(self.image) != list(range(len(self.image))):
            raise ValueError(f"not a permutation: {self.image}")

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(range(n))

    @classmethod
    def from_cycles(cls, n: int, cycles: Iterable[Sequence[int]]) -> "Permutation":
        img = list(range(n))
        for cyc in cycles:
            for i, x in enumerate(cyc):
                img[x] = cyc[(i + 1) % len(cyc)]
        return cls(img)

    @property
    def n(self) -> int:
        return len(self.image)

    def __call__(self, x: int) -> int:
        return self.image[x]

    def __getitem__(self, x: int) -> int:
        return self.image[x]

    def __mul__(self, other: "Permutation") -> "Permutation":
        return Permutation(self.image[x] for x in other.image)

    def inverse(self) -> "Permutation":
        inv = [0] * self.n
        for x, y in enumerate(self.image):
            inv[y] = x
        return Permutation(inv)

    def __pow__(self, k: int) -> "Permutation":
        if k < 0:
            return self.inverse() ** (-k)
        out = Permutation.identity(self.n)
        for _ in range(k):
            out = out * self
        return out

    def is_identity(self) -> bool:
        return all(x == y for x, y in enumerate(self.image))

    def cycles(self) -> list[tuple[int, ...]]:
        """Nontrivial cycles, each starting at its least element."""
        seen = set()
        out = []
        for s in range(self.n):
            if s in seen:
                continue
            cyc = [s]
            seen.add(s)
            x = self.image[s]
            while x != s:
                cyc.append(x)
                seen.add(x)
                x = self.image[x]
            if len(cyc) > 1:
                out.append(tuple(cyc))
        return out

    def order(self) -> int:
        return math.lcm(*(len(c) for c in self.cycles())) if not self.is_identity() else 1

    def cycle_string(self) -> str:
        cs = self.cycles()
        if not cs:
            return "()"
        return "".join("(" + ",".join(map(str, c)) + ")" for c in cs)

    def __eq__(self, other):
        return isinstance(other, Permutation) and self.image == other.image

    def __lt__(self, other):
        return self.image < other.image

    def __hash__(self):
        return hash(self.image)

    def __repr__(self):
        return f"Permutation({self.cycle_string()})"


# ---------------------------------------------------------------------------
# flag-rooted labelling of connected manifolds
# ---------------------------------------------------------------------------


def _root_code(cycles, n, v, w, step, best=None):
    """Label from the root (v, w, step); return ``(cmp, code, labels)``.

    ``cmp`` is -1/0/+1 against ``best`` (0 when ``best`` is None).  When the
    walk is already worse than ``best`` it stops early and returns ``(1, None,
    None)``.
    """
    label = [-1] * n
    label[v] = 0
    label[w] = 1
    order = [v, w]
    code = []
    cmp = 0
    idx = 0
    for i in range(n):
        if i >= len(order):
            raise ValueError("complex is not connected")
        x = order[i]
        cyc = cycles[x]
        k = len(cyc)
        if i == 0:
            p = cyc.index(w)
            s = step
        else:
            p = min(range(k), key=lambda j: label[cyc[j]] if label[cyc[j]] >= 0 else n)
            a, b = label[cyc[(p + 1) % k]], label[cyc[(p - 1) % k]]
            s = 1 if a < b else -1
        seq = [k]
        for j in range(k):
            y = cyc[(p + s * j) % k]
            if label[y] < 0:
                label[y] = len(order)
                order.append(y)
            seq.append(label[y])
        if best is not None and cmp == 0:
            for c in seq:
                b = best[idx]
                idx += 1
                if c != b:
                    if c > b:
                        return 1, None, None
                    cmp = -1
                    break
            else:
                code.extend(seq)
                continue
        code.extend(seq)
    return cmp, code, label


def _roots(K: TriangulationComplex, cycles):
    dmin = min(len(c) for c in cycles)
    for v in range(K.n):
        if len(cycles[v]) != dmin:
            continue
        for w in cycles[v]:
            for step in (1, -1):
                yield v, w, step


def _is_connected_manifold(K: TriangulationComplex) -> bool:
    return bool(is_combinatorial_2_manifold(K)) and K.is_connected()


@dataclass
class CanonicalResult:
    faces: tuple[tuple[int, int, int], ...]
    #: every labelling (old vertex -> new label) that produces ``faces``
    labelings: list[tuple[int, ...]]
    key: tuple


def _canonical_manifold(K: TriangulationComplex) -> CanonicalResult:
    cycles = K.link_cycles
    best = None
    labelings = []
    for v, w, step in _roots(K, cycles):
        cmp, code, label = _root_code(cycles, K.n, v, w, step, best)
        if cmp > 0:
            continue
        if best is None or cmp < 0:
            best = code
            labelings = [tuple(label)]
        else:
            labelings.append(tuple(label))
    faces = K.relabel(labelings[0]).faces
    return CanonicalResult(faces, labelings, ("M", tuple(best)))


def _degree_classes(K: TriangulationComplex):
    degs = K.degrees
    by_deg: dict[int, list[int]] = {}
    for v in range(K.n):
        by_deg.setdefault(degs[v], []).append(v)
    return [by_deg[d] for d in sorted(by_deg)]


def _canonical_brute(K: TriangulationComplex) -> CanonicalResult:
    classes = _degree_classes(K)
    total = math.prod(math.factorial(len(c)) for c in classes)
    if total > BRUTE_FORCE_LIMIT:
        raise ValueError(
            f"brute-force canonical labelling would try {total} labellings; "
            "only connected manifolds are handled efficiently"
        )
    slots = []
    start = 0
    for c in classes:
        slots.append(list(range(start, start + len(c))))
        start += len(c)
    best = None
    labelings = []
    for choice in product(*(permutations(s) for s in slots)):
        label = [0] * K.n
        for cls, labels in zip(classes, choice):
            for v, lab in zip(cls, labels):
                label[v] = lab
        faces = tuple(sorted(tuple(sorted((label[a], label[b], label[c]))) for a, b, c in K.faces))
        if best is None or faces < best:
            best = faces
            labelings = [tuple(label)]
        elif faces == best:
            labelings.append(tuple(label))
    return CanonicalResult(best, labelings, ("B", best))


def canonical_labeling(K: TriangulationComplex) -> CanonicalResult:
    if _is_connected_manifold(K):
        return _canonical_manifold(K)
    return _canonical_brute(K)


def canonical_form(K: TriangulationComplex) -> tuple[tuple[int, int, int], ...]:
    """A face list that is equal for two complexes iff they are isomorphic."""
    return canonical_labeling(K).faces


def canonical_complex(K: TriangulationComplex) -> TriangulationComplex:
    return TriangulationComplex(K.n, canonical_form(K))


def canonical_key(K: TriangulationComplex) -> tuple:
    """Hashable isomorphism-class key (cheaper to compare than face lists)."""
    return canonical_labeling(K).key


def are_isomorphic(K1: TriangulationComplex, K2: TriangulationComplex) -> Permutation | None:
    """Return ``w`` with ``K1.relabel(w) == K2``, or ``None``."""
    if K1.f_vector != K2.f_vector or sorted(K1.degrees) != sorted(K2.degrees):
        return None
    m1, m2 = _is_connected_manifold(K1), _is_connected_manifold(K2)
    if m1 != m2:
        return None
    if m1:
        c1, c2 = K1.link_cycles, K2.link_cycles
        v, w, step = next(_roots(K1, c1))
        _, code1, lab1 = _root_code(c1, K1.n, v, w, step)
        for root in _roots(K2, c2):
            cmp, _, lab2 = _root_code(c2, K2.n, *root, best=code1)
            if cmp == 0:
                return _witness(lab1, lab2)
        return None
    r1, r2 = _canonical_brute(K1), _canonical_brute(K2)
    if r1.faces != r2.faces:
        return None
    return _witness(r1.labelings[0], r2.labelings[0])


def _witness(lab1, lab2) -> Permutation:
    inv2 = [0] * len(lab2)
    for x, y in enumerate(lab2):
        inv2[y] = x
    return Permutation(inv2[lab1[x]] for x in range(len(lab1)))


# ---------------------------------------------------------------------------
# automorphism groups
# ---------------------------------------------------------------------------


def generate_group(gens: Sequence[Permutation], n: int) -> list[Permutation]:
    """All elements of the group generated by ``gens``, sorted."""
    ident = Permutation.identity(n)
    elems = {ident}
    frontier = [ident]
    while frontier:
        nxt = []
        for g in frontier:
            for s in gens:
                h = s * g
                if h not in elems:
                    elems.add(h)
                    nxt.append(h)
        frontier = nxt
    return sorted(elems)


@dataclass
class AutGroup:
    n: int
    generators: list[Permutation]
    elements: list[Permutation]

    @property
    def order(self) -> int:
        return len(self.elements)

    def orbit(self, x: int) -> set[int]:
        return {g(x) for g in self.elements}


def _small_generating_set(elements: list[Permutation], n: int) -> list[Permutation]:
    target = len(elements)
    gens: list[Permutation] = []
    span = {Permutation.identity(n)}
    for g in sorted(elements, key=lambda p: (-p.order(), p.image)):
        if len(span) == target:
            break
        if g not in span:
            gens.append(g)
            span = set(generate_group(gens, n))
    return gens


def automorphism_group(K: TriangulationComplex) -> AutGroup:
    res = canonical_labeling(K)
    base = res.labelings[0]
    elems = sorted({_witness(base, lab) for lab in res.labelings})
    return AutGroup(K.n, _small_generating_set(elems, K.n), elems)


def is_automorphism(K: TriangulationComplex, p: Permutation) -> bool:
    return K.relabel(p.image).faces == K.faces


# ---------------------------------------------------------------------------
# group identification
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class GroupId:
    """``kind`` is Trivial, Cyclic, Dihedral, KleinFour or Other.

    ``m`` is the cyclic order, the dihedral index (``Dihedral(m)`` has order
    ``2m``) or the group order for ``Other``.
    """

    kind: str
    m: int = 0

    def __str__(self):
        if self.kind in ("Trivial", "KleinFour"):
            return self.kind
        return f"{self.kind}({self.m})"

    @property
    def order(self) -> int:
        return {"Trivial": 1, "KleinFour": 4, "Dihedral": 2 * self.m}.get(self.kind, self.m)

    @classmethod
    def parse(cls, text: str) -> "GroupId":
        if "(" in text:
            kind, rest = text.split("(", 1)
            return cls(kind, int(rest.rstrip(")")))
        return cls(text)


def identify_group(G: AutGroup | Sequence[Permutation]) -> GroupId:
    elems = G.elements if isinstance(G, AutGroup) else list(G)
    order = len(elems)
    if order > 200:
        return GroupId("Other", order)
    if order == 1:
        return GroupId("Trivial")
    orders = {g: g.order() for g in elems}
    if max(orders.values()) == order:
        return GroupId("Cyclic", order)
    if order == 4 and all(o <= 2 for o in orders.values()):
        return GroupId("KleinFour")
    if order % 2 == 0 and order >= 6:
        m = order // 2
        for r, o in orders.items():
            if o != m:
                continue
            rot = {r ** k for k in range(m)}
            rinv = r.inverse()
            for s, so in orders.items():
                if so == 2 and s not in rot and s * r * s == rinv:
                    return GroupId("Dihedral", m)
    return GroupId("Other", order)


# ---------------------------------------------------------------------------
# orientation character and transitivity
# ---------------------------------------------------------------------------


def orientation_character(
    K: TriangulationComplex, p: Permutation, orientation: OrientationAssignment | None = None
) -> int:
    """+1 if ``p`` maps positively oriented faces to positively oriented faces."""
    if not is_automorphism(K, p):
        raise NotAutomorphism(f"{p} is not an automorphism")
    if orientation is None:
        res = orientability(K)
        if not res:
            raise NotOrientable("complex is not orientable")
        orientation = res.orientation
    signs = {orientation.sign_of(tuple(p(x) for x in orientation.oriented(f))) for f in K.faces}
    if len(signs) != 1:
        raise NotOrientable("orientation is not coherent on this complex")
    return signs.pop()


def flags(K: TriangulationComplex) -> list[tuple[int, tuple[int, int], tuple[int, int, int]]]:
    out = []
    for f in K.faces:
        a, b, c = f
        for e in ((a, b), (a, c), (b, c)):
            for u in e:
                out.append((u, e, f))
    return out


def _act_on_flag(p: Permutation, flag):
    u, (a, b), f = flag
    return (p(u), tuple(sorted((p(a), p(b)))), tuple(sorted(p(x) for x in f)))


def is_vertex_transitive(K: TriangulationComplex, group: AutGroup | None = None) -> bool:
    group = group or automorphism_group(K)
    return len(group.orbit(0)) == K.n


def is_flag_transitive(K: TriangulationComplex, group: AutGroup | None = None) -> bool:
    group = group or automorphism_group(K)
    fl = flags(K)
    orbit = {_act_on_flag(g, fl[0]) for g in group.elements}
    return len(orbit) == len(fl)
