"""A handful of small, well-known triangulated surfaces."""

from __future__ import annotations

import math
from itertools import combinations, product

from .complex import TriangulationComplex, build_complex


def tetrahedron() -> TriangulationComplex:
    return build_complex(combinations(range(4), 3))


def octahedron() -> TriangulationComplex:
    # antipodal pairs (0,1), (2,3), (4,5); a face picks one vertex of each pair
    return build_complex(product((0, 1), (2, 3), (4, 5)))


def _icosahedron_points():
    phi = (1 + math.sqrt(5)) / 2
    pts = []
    for s1, s2 in product((1, -1), repeat=2):
        pts.append((0.0, s1 * 1.0, s2 * phi))
        pts.append((s1 * 1.0, s2 * phi, 0.0))
        pts.append((s2 * phi, 0.0, s1 * 1.0))
    return pts


def _icosahedron_faces(pts):
    def close(p, q):
        return abs(math.dist(p, q) - 2.0) < 1e-9

    return [
        t
        for t in combinations(range(len(pts)), 3)
        if close(pts[t[0]], pts[t[1]]) and close(pts[t[0]], pts[t[2]]) and close(pts[t[1]], pts[t[2]])
    ]


def icosahedron() -> TriangulationComplex:
    pts = _icosahedron_points()
    return build_complex(_icosahedron_faces(pts))


def real_projective_plane_6() -> TriangulationComplex:
    """The 6-vertex projective plane, as the antipodal quotient of the icosahedron."""
    pts = _icosahedron_points()
    cls = {}
    for i, p in enumerate(pts):
        anti = next(j for j, q in enumerate(pts) if all(abs(a + b) < 1e-9 for a, b in zip(p, q)))
        cls[i] = min(i, anti)
    return build_complex({tuple(sorted(cls[v] for v in f)) for f in _icosahedron_faces(pts)})


def torus_7() -> TriangulationComplex:
    """Moebius' 7-vertex torus."""
    faces = []
    for i in range(7):
        faces.append((i, (i + 1) % 7, (i + 3) % 7))
        faces.append((i, (i + 2) % 7, (i + 3) % 7))
    return build_complex(faces)


def stacked_tetrahedron() -> TriangulationComplex:
    """Tetrahedron boundary with the face 123 subdivided by a new vertex 4."""
    return build_complex([(0, 1, 2), (0, 1, 3), (0, 2, 3), (1, 2, 4), (1, 3, 4), (2, 3, 4)])


def cube_faces() -> list[tuple[int, ...]]:
    """Quadrilateral faces of the cube, as cyclic vertex sequences."""
    return [(0, 1, 3, 2), (4, 6, 7, 5), (0, 4, 5, 1), (2, 3, 7, 6), (0, 2, 6, 4), (1, 5, 7, 3)]
