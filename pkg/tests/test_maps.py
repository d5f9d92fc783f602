import json
from itertools import combinations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from degreg.complex import build_complex, euler_characteristic
from degreg.errors import InvalidMap, NotManifold
from degreg.isomorphism import Permutation
from degreg.maps import (
    EquivelarType,
    dual,
    equivelar_type,
    format_map,
    from_triangulation,
    make_map,
    map_euler_characteristic,
    map_to_json,
    maps_isomorphic,
    normalize_face,
    parse_map,
)
from degreg.standard import cube_faces, icosahedron, octahedron, real_projective_plane_6, tetrahedron, torus_7


def test_normalize_face():
    assert normalize_face((3, 1, 2)) == (1, 2, 3)
    assert normalize_face((3, 2, 1)) == (1, 2, 3)
    assert normalize_face((2, 0, 5, 4)) == (0, 2, 4, 5)
    assert normalize_face((4, 5, 0, 2)) == (0, 2, 4, 5)


def test_from_triangulation_types(catalog):
    assert equivelar_type(from_triangulation(tetrahedron())) == EquivelarType(3, 3)
    assert equivelar_type(from_triangulation(octahedron())) == EquivelarType(3, 4)
    M = from_triangulation(catalog["N1"].complex)
    assert equivelar_type(M) == EquivelarType(3, 7)
    assert len(M.faces) == 28
    with pytest.raises(NotManifold):
        from_triangulation(build_complex([(0, 1, 2), (0, 1, 3)]))


def test_icosahedron_and_cube():
    M = from_triangulation(icosahedron())
    assert equivelar_type(M) == EquivelarType(3, 5)
    assert map_euler_characteristic(M) == 2
    C = make_map(cube_faces())
    assert equivelar_type(C) == EquivelarType(4, 3)
    assert C.f_vector == (8, 12, 6)
    D = dual(C)
    assert equivelar_type(D) == EquivelarType(3, 4)
    assert maps_isomorphic(D, from_triangulation(octahedron())) is not None


def test_duals_of_catalog(catalog):
    duals = {}
    for name, e in catalog.items():
        M = from_triangulation(e.complex)
        D = dual(M)
        assert D.f_vector == (28, 42, 12)
        assert equivelar_type(D) == EquivelarType(7, 3)
        assert map_euler_characteristic(D) == -2
        assert maps_isomorphic(dual(D), M) is not None
        duals[name] = D
    for a, b in combinations(sorted(duals), 2):
        assert maps_isomorphic(duals[a], duals[b]) is None


def test_dual_vertex_order_follows_primal_faces():
    M = from_triangulation(tetrahedron())
    D = dual(M)
    # dual vertex i is primal face i; dual face of primal vertex v lists the faces through v
    for v in range(4):
        through = {i for i, f in enumerate(M.faces) if v in f}
        assert any(set(f) == through for f in D.faces)


def test_tetrahedron_self_dual():
    T = from_triangulation(tetrahedron())
    assert maps_isomorphic(dual(T), T) is not None


def test_dual_sigma_witness(reference_labelled):
    K = reference_labelled["N1"]
    sigma = [(i + 1) % 12 for i in range(12)]
    D1 = dual(from_triangulation(K))
    D2 = dual(from_triangulation(K.relabel(sigma)))
    assert maps_isomorphic(D1, D2) is not None
    # a relabelling that is not an automorphism also gives isomorphic duals
    swap = [0, 2, 1] + list(range(3, 12))
    assert K.relabel(swap) != K
    assert maps_isomorphic(D1, dual(from_triangulation(K.relabel(swap)))) is not None


def test_relabelled_map_witness():
    M = make_map(cube_faces())
    perm = [3, 5, 0, 7, 1, 2, 6, 4]
    w = maps_isomorphic(M, M.relabel(perm))
    assert isinstance(w, Permutation)
    assert M.relabel(w.image) == M.relabel(perm)


def test_validation_rejects_bad_maps():
    # two squares sharing the diagonal 0-2 (pinched intersection)
    with pytest.raises(InvalidMap):
        make_map([(0, 1, 2, 3), (0, 4, 2, 5), (0, 1, 4), (1, 2, 4), (2, 3, 5), (0, 3, 5)])
    with pytest.raises(InvalidMap):
        make_map([(0, 1, 2, 3)])
    with pytest.raises(InvalidMap):
        make_map([(0, 1, 1)])
    # two tetrahedra sharing a vertex: faces around 0 form two cycles
    t = [(0, 1, 2), (0, 1, 3), (0, 2, 3), (1, 2, 3)]
    with pytest.raises(InvalidMap):
        make_map(t + [(0, 4, 5), (0, 4, 6), (0, 5, 6), (4, 5, 6)])
    # disconnected
    with pytest.raises(InvalidMap):
        make_map(t + [(a + 4, b + 4, c + 4) for a, b, c in t])


def test_pinched_quads():
    # faces 0123 and 0426 share 0 and 2, which is not an edge of either
    faces = [(0, 1, 2, 3), (0, 4, 2, 6)]
    with pytest.raises(InvalidMap):
        make_map(faces)


def test_text_and_json():
    C = make_map(cube_faces())
    text = format_map(C, "cube")
    assert text.startswith("# cube\n")
    assert parse_map(text) == C
    doc = json.loads(map_to_json(C))
    assert doc["type"] == {"p": 4, "q": 3}
    assert doc["chi"] == 2
    assert doc["f_vector"] == [8, 12, 6]
    assert json.loads(map_to_json(dual(from_triangulation(torus_7()))))["type"] == {"p": 6, "q": 3}


def test_non_equivelar_map():
    from degreg.standard import stacked_tetrahedron

    M = from_triangulation(stacked_tetrahedron())
    assert equivelar_type(M) is None
    assert equivelar_type(dual(M)) is None
    assert json.loads(map_to_json(M))["type"] is None


# -- random small manifolds -------------------------------------------------


def _subdivide(K, i):
    """Stellar subdivision of face ``i``: a new vertex joined to its corners."""
    a, b, c = K.faces[i % len(K.faces)]
    v = K.n
    faces = [f for f in K.faces if f != (a, b, c)] + [(a, b, v), (a, c, v), (b, c, v)]
    return build_complex(faces)


bases = st.sampled_from([tetrahedron, octahedron, icosahedron, torus_7, real_projective_plane_6])


@settings(max_examples=20)
@given(base=bases, steps=st.lists(st.integers(0, 100), max_size=4), data=st.data())
def test_dual_properties_random(base, steps, data):
    K = base()
    for i in steps:
        K = _subdivide(K, i)
    perm = data.draw(st.permutations(range(K.n)))
    K = K.relabel(perm)
    M = from_triangulation(K)
    D = dual(M)
    assert map_euler_characteristic(D) == map_euler_characteristic(M) == euler_characteristic(K)
    assert D.f_vector == (M.f_vector[2], M.f_vector[1], M.f_vector[0])
    t = equivelar_type(M)
    if t is not None:
        assert equivelar_type(D) == EquivelarType(t.q, t.p)
    assert maps_isomorphic(dual(D), M) is not None
