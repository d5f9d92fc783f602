"""Command-line interface.

Exit codes: 0 on success, 1 on a negative verdict (not a manifold, not
isomorphic, incomplete search), 2 on unreadable input or bad usage.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import catalog as cat
from .complex import (
    TriangulationComplex,
    degree_regular_type,
    euler_characteristic,
    format_face_list,
    genus,
    is_combinatorial_2_manifold,
    orientability,
    parse_face_list,
)
from .enumeration import SearchConfig, classify_chi
from .errors import DegRegError, InvalidMap, NoMatch, NotConnected, NotManifold
from .graphs import fingerprint
from .isomorphism import (
    are_isomorphic,
    automorphism_group,
    identify_group,
    is_flag_transitive,
    is_vertex_transitive,
)
from .maps import dual, equivelar_type, format_map, from_triangulation, map_euler_characteristic, map_to_dict, parse_map


class UsageError(Exception):
    pass


def _chi(x: int) -> str:
    return str(x).replace("-", "−")


def _read(path: str) -> str:
    try:
        return sys.stdin.read() if path == "-" else Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror or exc}") from exc


def _load(path: str) -> TriangulationComplex:
    return parse_face_list(_read(path))


def _emit(args, doc: dict, text: str):
    if args.format == "json":
        print(json.dumps(doc, ensure_ascii=False))
    else:
        print(text)


def _orientable(K: TriangulationComplex):
    if not is_combinatorial_2_manifold(K) or not K.is_connected():
        return None
    return bool(orientability(K))


# ---------------------------------------------------------------------------
# subcommands
# ---------------------------------------------------------------------------


def cmd_check(args) -> int:
    K = _load(args.file)
    rep = is_combinatorial_2_manifold(K)
    doc = {"file": args.file, "f_vector": list(K.f_vector), "chi": euler_characteristic(K), "manifold": bool(rep)}
    if not rep:
        doc.update(vertex=rep.vertex, reason=rep.reason)
        _emit(args, doc, f"not a combinatorial 2-manifold: vertex {rep.vertex}: {rep.reason}")
        return 1
    if not K.is_connected():
        doc.update(connected=False)
        _emit(args, doc, "combinatorial 2-manifold, disconnected")
        return 0
    o = orientability(K)
    d = degree_regular_type(K)
    doc.update(connected=True, orientable=o.orientable, degree_type=d, genus=genus(K) if o.orientable else None)
    if not o.orientable:
        doc["obstruction"] = [list(f) for f in o.obstruction]
    parts = ["combinatorial 2-manifold", "orientable" if o.orientable else "non-orientable",
             f"χ={_chi(doc['chi'])}"]
    parts.append(f"degree-regular type {d}" if d is not None else "not degree-regular")
    _emit(args, doc, ", ".join(parts))
    return 0


def cmd_invariants(args) -> int:
    K = _load(args.file)
    g = automorphism_group(K)
    fp = fingerprint(K)
    doc = {
        "f_vector": list(K.f_vector),
        "chi": euler_characteristic(K),
        "degrees": list(K.degrees),
        "degree_type": degree_regular_type(K),
        "manifold": bool(is_combinatorial_2_manifold(K)),
        "orientable": _orientable(K),
        "aut": {"order": g.order, "structure": str(identify_group(g))},
        "vertex_transitive": is_vertex_transitive(K, g),
        "G_n": [{"n": k, "shape": str(s)} for k, s in enumerate(fp)],
    }
    try:
        doc["catalog"] = cat.identify(K) if doc["orientable"] else None
    except NoMatch:
        doc["catalog"] = None
    lines = [
        f"f-vector: {tuple(K.f_vector)}",
        f"χ: {_chi(doc['chi'])}",
        f"degree type: {doc['degree_type']}",
        f"manifold: {doc['manifold']}, orientable: {doc['orientable']}",
        f"Aut: {doc['aut']['structure']} (order {g.order}), vertex-transitive: {doc['vertex_transitive']}",
    ]
    lines += [f"G_{k}: {s}" for k, s in enumerate(fp)]
    if doc["catalog"]:
        lines.append(f"catalog: {doc['catalog']}")
    _emit(args, doc, "\n".join(lines))
    return 0


def separating_invariant(K1: TriangulationComplex, K2: TriangulationComplex) -> tuple[str, str, str] | None:
    """First of (f-vector, degrees, orientability, fingerprint, Aut) that differs."""
    tests = [
        ("f-vector", lambda K: str(K.f_vector)),
        ("degree sequence", lambda K: str(sorted(K.degrees))),
        ("orientability", lambda K: {True: "orientable", False: "non-orientable", None: "n/a"}[_orientable(K)]),
    ]
    for name, f in tests:
        a, b = f(K1), f(K2)
        if a != b:
            return name, a, b
    fp1, fp2 = fingerprint(K1), fingerprint(K2)
    for k, (a, b) in enumerate(zip(fp1, fp2)):
        if a != b:
            return f"G_{k} shape", str(a), str(b)
    a, b = str(identify_group(automorphism_group(K1))), str(identify_group(automorphism_group(K2)))
    if a != b:
        return "Aut structure", a, b
    return None


def cmd_iso(args) -> int:
    K1, K2 = _load(args.first), _load(args.second)
    w = are_isomorphic(K1, K2)
    if w is not None:
        _emit(args, {"isomorphic": True, "witness": list(w.image)},
              f"isomorphic; witness {w.cycle_string()}")
        return 0
    sep = separating_invariant(K1, K2)
    doc = {"isomorphic": False}
    if sep:
        doc["separating_invariant"] = {"name": sep[0], "first": sep[1], "second": sep[2]}
        text = f"not isomorphic; {sep[0]}: {sep[1]} vs {sep[2]}"
    else:
        text = "not isomorphic; no computed invariant separates them"
    _emit(args, doc, text)
    return 1


def cmd_aut(args) -> int:
    K = _load(args.file)
    g = automorphism_group(K)
    gid = identify_group(g)
    doc = {
        "order": g.order,
        "structure": str(gid),
        "generators": [p.cycle_string() for p in g.generators],
        "vertex_transitive": is_vertex_transitive(K, g),
    }
    if is_combinatorial_2_manifold(K):
        doc["flag_transitive"] = is_flag_transitive(K, g)
    if args.elements:
        doc["elements"] = [p.cycle_string() for p in g.elements]
    lines = [f"Aut: {gid}, order {g.order}", "generators: " + (", ".join(doc["generators"]) or "none"),
             f"vertex-transitive: {doc['vertex_transitive']}"]
    if "flag_transitive" in doc:
        lines.append(f"flag-transitive: {doc['flag_transitive']}")
    if args.elements:
        lines += doc["elements"]
    _emit(args, doc, "\n".join(lines))
    return 0


def cmd_dual(args) -> int:
    text = _read(args.file)
    rows = [line.split("#", 1)[0].split() for line in text.splitlines()]
    rows = [r for r in rows if r]
    if rows and all(len(r) == 3 for r in rows):
        M = from_triangulation(parse_face_list(text))
    else:
        M = parse_map(text)
    D = dual(M)
    t = equivelar_type(D)
    out = format_map(D, f"dual: f-vector {D.f_vector}, type {t or 'mixed'}, chi={map_euler_characteristic(D)}")
    if args.output:
        Path(args.output).write_text(out, encoding="utf-8")
    if args.format == "json":
        print(json.dumps(map_to_dict(D)))
    elif not args.output:
        sys.stdout.write(out)
    else:
        print(f"dual written to {args.output}: f-vector {D.f_vector}, type {t or 'mixed'}")
    return 0


def cmd_classify(args) -> int:
    cfg = SearchConfig(
        orientable_only=args.orientable,
        prune_star_bound=not args.no_prune,
        parallel_width=args.parallel_width or (6 if args.jobs > 1 else 0),
        jobs=args.jobs,
        limit=args.limit,
    )
    results = classify_chi(args.chi, args.orientable, cfg, max_n=args.max_n)
    doc = {"chi": args.chi, "orientable_only": args.orientable, "runs": []}
    lines = []
    if not results:
        lines.append(f"χ={_chi(args.chi)}: no admissible (n, d)")
    exhaustive = True
    out_dir = Path(args.out) if args.out else None
    for r in results:
        exhaustive &= r.exhaustive
        names = _names(r, args)
        run = {"n": r.n, "d": r.d, "classes": len(r), "exhaustive": r.exhaustive, "complexes": []}
        lines.append(f"(n, d) = ({r.n}, {r.d}): {_classes(len(r))}" + ("" if r.exhaustive else " (truncated)"))
        certs = []
        for i, (K, c) in enumerate(zip(r.complexes, r.certificates)):
            label = names[i] if names else f"n{r.n}d{r.d}_{i + 1}"
            cd = dict(c.as_dict(), name=label, f_vector=list(K.f_vector))
            certs.append(cd)
            run["complexes"].append(dict(cd, faces=[list(f) for f in K.faces]))
            lines.append(f"  {label}: {'orientable' if c.orientable else 'non-orientable'}, Aut {c.aut} (order {c.aut_order})")
            if out_dir:
                out_dir.mkdir(parents=True, exist_ok=True)
                (out_dir / f"{label}.tri").write_text(format_face_list(K, f"{label}: Aut {c.aut}"), encoding="utf-8")
        if out_dir:
            (out_dir / f"certificates_n{r.n}_d{r.d}.json" if len(results) > 1 else out_dir / "certificates.json"
             ).write_text(json.dumps(certs, indent=2, ensure_ascii=False) + "\n", encoding="utf-8")
        if args.stats:
            run["stats"] = r.stats.as_dict()
            lines.append(f"  stats: {r.stats.as_dict()}")
        doc["runs"].append(run)
    doc["exhaustive"] = exhaustive
    if len(results) == 1:
        lines.append(_classes(len(results[0])))
    _emit(args, doc, "\n".join(lines))
    return 0 if exhaustive else 1


def _classes(k: int) -> str:
    return f"{k} class" if k == 1 else f"{k} classes"


def _names(r, args) -> list[str] | None:
    if (r.n, r.d) != (12, 7) or not args.orientable:
        return None
    try:
        return [cat.identify(K) for K in r.complexes]
    except NoMatch:
        return None


def cmd_catalog(args) -> int:
    entries = cat.load_catalog(args.dir)
    if args.name:
        entry = next((e for e in entries if e.name == args.name), None)
        if entry is None:
            raise UsageError(f"no catalogue entry {args.name!r}")
        fmt = "json" if args.format == "json" else "text"
        sys.stdout.write(cat.export(entry, fmt).decode("utf-8"))
        return 0
    doc = [e.certificate() for e in entries]
    lines = [
        f"{e.name}: G_2 {e.key.g2}, G_5 {e.key.g5}, Aut {e.key.aut} (order {e.aut_order})"
        + (", vertex-transitive" if e.vertex_transitive else "")
        for e in entries
    ]
    if args.format == "json":
        print(json.dumps(doc, ensure_ascii=False))
    else:
        print("\n".join(lines))
    return 0


def cmd_verify_proof(args) -> int:
    from .proof import verify_proof_maps

    results = verify_proof_maps(cat.load_catalog(args.dir))
    doc, lines, ok = [], [], True
    for r in results:
        doc.append({
            "subcase": r.name, "target": r.target, "listed_faces": r.listed_faces,
            "completed": r.completed, "isomorphic": r.isomorphic, "notes": r.notes,
        })
        if r.complex is None:
            lines.append(f"Subcase {r.name}: reconstruction incomplete ({'; '.join(r.notes)})")
            continue
        ok &= bool(r.isomorphic)
        how = f"{r.listed_faces} listed faces" + (", unique completion" if r.completed else "")
        lines.append(f"Subcase {r.name} -> {r.target}: {'isomorphic' if r.isomorphic else 'NOT isomorphic'} ({how})")
    if args.format == "json":
        print(json.dumps(doc))
    else:
        print("\n".join(lines))
    return 0 if ok else 1


# ---------------------------------------------------------------------------
# parser
# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default="text")

    p = argparse.ArgumentParser(prog="degreg", description="Degree-regular triangulated surfaces.")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("check", parents=[common], help="manifold, orientability, χ and degree type")
    s.add_argument("file")
    s.set_defaults(func=cmd_check)

    s = sub.add_parser("invariants", parents=[common], help="f-vector, Aut and the G_n shapes")
    s.add_argument("file")
    s.set_defaults(func=cmd_invariants)

    s = sub.add_parser("iso", parents=[common], help="isomorphism test with a witness or a separating invariant")
    s.add_argument("first")
    s.add_argument("second")
    s.set_defaults(func=cmd_iso)

    s = sub.add_parser("aut", parents=[common], help="automorphism group")
    s.add_argument("file")
    s.add_argument("--elements", action="store_true", help="list every element")
    s.set_defaults(func=cmd_aut)

    s = sub.add_parser("dual", parents=[common], help="dual polyhedral map")
    s.add_argument("file", help="triangulation (.tri) or map face list")
    s.add_argument("-o", "--output")
    s.set_defaults(func=cmd_dual)

    s = sub.add_parser("classify", parents=[common], help="enumerate degree-regular manifolds of given χ")
    s.add_argument("--chi", type=int, required=True)
    s.add_argument("--orientable", action="store_true", help="keep orientable classes only")
    s.add_argument("--stats", action="store_true", help="report search counters")
    s.add_argument("--jobs", type=int, default=1)
    s.add_argument("--parallel-width", type=int, default=0, help="depth at which subtrees become tasks")
    s.add_argument("--no-prune", action="store_true", help="disable the star-union face bound")
    s.add_argument("--limit", type=int)
    s.add_argument("--max-n", type=int, default=12)
    s.add_argument("--out", help="directory for .tri files and certificates.json")
    s.set_defaults(func=cmd_classify)

    s = sub.add_parser("catalog", parents=[common], help="list or export the stored catalogue")
    s.add_argument("name", nargs="?", choices=cat.NAMES)
    s.add_argument("--dir", help="catalogue directory (default: the shipped one)")
    s.set_defaults(func=cmd_catalog)

    s = sub.add_parser("verify-proof", parents=[common], help="rebuild the worked subcases and match them")
    s.add_argument("--dir", help="catalogue directory (default: the shipped one)")
    s.set_defaults(func=cmd_verify_proof)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (NotManifold, NotConnected, InvalidMap) as exc:
        print(f"degreg {args.command}: {exc}", file=sys.stderr)
        return 1
    except (UsageError, DegRegError) as exc:
        print(f"degreg {args.command}: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
