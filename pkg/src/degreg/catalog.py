"""The six orientable degree-regular 12-vertex triangulations of the double torus.

Entries are stored in canonical-form labels under ``data/catalog``: one
``.tri`` face list per class and a ``certificates.json`` summary.  Each class
is named by its identification key (G_2 shape, G_5 shape, Aut structure).
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import lru_cache
from importlib import resources
from pathlib import Path

from .complex import (
    TriangulationComplex,
    degree_regular_type,
    euler_characteristic,
    format_face_list,
    is_combinatorial_2_manifold,
    orientability,
    parse_face_list,
)
from .errors import CorruptCatalog, DegRegError, NoMatch
from .graphs import GraphShape, common_neighbor_graph, edge_graph, graph_shape
from .isomorphism import (
    AutGroup,
    GroupId,
    automorphism_group,
    canonical_complex,
    identify_group,
    is_vertex_transitive,
)

NAMES = ("N1", "N2", "N3", "N4", "N5", "N6")

#: (G_2 shape, G_5 shape or None when unused, Aut structure)
KEYS: dict[str, tuple[str, str | None, str]] = {
    "N1": ("C12", "2×C6", "Cyclic(12)"),
    "N2": ("12×I", None, "Cyclic(12)"),
    "N3": ("C12", "2×C6", "Dihedral(6)"),
    "N4": ("P3+9×I", None, "Cyclic(2)"),
    "N5": ("3×P2+6×I", "3×C4", "Dihedral(3)"),
    "N6": ("4×P2+4×I", None, "KleinFour"),
}


@dataclass(frozen=True)
class Key:
    g2: GraphShape
    g5: GraphShape
    aut: GroupId

    def matches(self, name: str) -> bool:
        g2, g5, aut = KEYS[name]
        return str(self.g2) == g2 and (g5 is None or str(self.g5) == g5) and str(self.aut) == aut


def identification_key(K: TriangulationComplex, group: AutGroup | None = None) -> Key:
    eg = edge_graph(K)
    g = group or automorphism_group(K)
    return Key(
        graph_shape(common_neighbor_graph(eg, 2)),
        graph_shape(common_neighbor_graph(eg, 5)),
        identify_group(g),
    )


def identify(K: TriangulationComplex) -> str:
    """Catalogue name of a 12-vertex degree-7 orientable manifold."""
    if K.n != 12 or degree_regular_type(K) != 7:
        raise NoMatch(f"not a 12-vertex degree-7 complex (n={K.n}, type={degree_regular_type(K)})")
    key = identification_key(K)
    for name in NAMES:
        if key.matches(name):
            return name
    raise NoMatch(f"no catalogue class has key ({key.g2}, {key.g5}, {key.aut})")


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    complex: TriangulationComplex
    key: Key
    aut_order: int
    generators: tuple[str, ...]
    chi: int
    orientable: bool
    degree_type: int
    vertex_transitive: bool

    @property
    def faces(self):
        return self.complex.faces

    def certificate(self) -> dict:
        return {
            "name": self.name,
            "f_vector": list(self.complex.f_vector),
            "chi": self.chi,
            "orientable": self.orientable,
            "degree_type": self.degree_type,
            "aut": {
                "order": self.aut_order,
                "structure": str(self.key.aut),
                "generators": list(self.generators),
            },
            "g2_shape": str(self.key.g2),
            "g5_shape": str(self.key.g5),
            "vertex_transitive": self.vertex_transitive,
        }


def make_entry(K: TriangulationComplex, name: str | None = None) -> CatalogEntry:
    """Entry for ``K`` in canonical labels; the name is looked up unless given."""
    K = canonical_complex(K)
    g = automorphism_group(K)
    key = identification_key(K, g)
    return CatalogEntry(
        name=name or identify(K),
        complex=K,
        key=key,
        aut_order=g.order,
        generators=tuple(p.cycle_string() for p in g.generators),
        chi=euler_characteristic(K),
        orientable=bool(orientability(K)),
        degree_type=degree_regular_type(K),
        vertex_transitive=is_vertex_transitive(K, g),
    )


def build_catalog(complexes) -> list[CatalogEntry]:
    """Name the classes found by the enumerator; all six must be present once."""
    entries = sorted((make_entry(K) for K in complexes), key=lambda e: e.name)
    names = [e.name for e in entries]
    if names != list(NAMES):
        raise CorruptCatalog(f"expected classes {list(NAMES)}, got {names}")
    return entries


def write_catalog(entries, directory) -> None:
    out = Path(directory)
    out.mkdir(parents=True, exist_ok=True)
    for e in entries:
        (out / f"{e.name}.tri").write_bytes(export(e, "text"))
    certs = [e.certificate() for e in entries]
    (out / "certificates.json").write_text(json.dumps(certs, indent=2, ensure_ascii=False) + "\n", encoding="utf-8")


def default_catalog_dir():
    return resources.files("degreg") / "data" / "catalog"


def load_catalog(directory=None) -> list[CatalogEntry]:
    """Read, validate and re-identify the stored catalogue."""
    if directory is None:
        return list(_load_default())
    return _load(Path(directory))


@lru_cache(maxsize=1)
def _load_default() -> tuple[CatalogEntry, ...]:
    return tuple(_load(default_catalog_dir()))


def _load(directory) -> list[CatalogEntry]:
    try:
        certs = json.loads((directory / "certificates.json").read_text(encoding="utf-8"))
        by_name = {c["name"]: c for c in certs}
    except (OSError, ValueError, KeyError, TypeError) as exc:
        raise CorruptCatalog(f"cannot read certificates: {exc}") from exc
    entries = []
    for name in NAMES:
        try:
            text = (directory / f"{name}.tri").read_text(encoding="utf-8")
            K = parse_face_list(text)
        except (OSError, DegRegError) as exc:
            raise CorruptCatalog(f"{name}: {exc}") from exc
        if not is_combinatorial_2_manifold(K) or not orientability(K):
            raise CorruptCatalog(f"{name}: not an orientable combinatorial 2-manifold")
        if K.f_vector != (12, 42, 28) or degree_regular_type(K) != 7:
            raise CorruptCatalog(f"{name}: wrong f-vector {K.f_vector} or degree type")
        try:
            found = identify(K)
        except NoMatch as exc:
            raise CorruptCatalog(f"{name}: {exc}") from exc
        if found != name:
            raise CorruptCatalog(f"{name}.tri identifies as {found}")
        entry = make_entry(K, name)
        stored = by_name.get(name)
        if stored is None or stored != entry.certificate():
            raise CorruptCatalog(f"{name}: stored certificate does not match the complex")
        entries.append(entry)
    return entries


def get_entry(name: str) -> CatalogEntry:
    for e in _load_default():
        if e.name == name:
            return e
    raise KeyError(name)


def export(entry: CatalogEntry, format: str = "text") -> bytes:
    if format == "text":
        header = f"{entry.name}: {entry.key.g2} / {entry.key.aut}, chi={entry.chi}"
        return format_face_list(entry.complex, header).encode("utf-8")
    if format == "json":
        doc = dict(entry.certificate(), faces=[list(f) for f in entry.faces])
        return (json.dumps(doc, ensure_ascii=False) + "\n").encode("utf-8")
    raise ValueError(f"unknown export format {format!r}")
