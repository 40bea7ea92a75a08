"""Command-line front end.

Exit status is 0 on success, 1 on a domain error (with a one-line diagnostic on
stderr) and 2 on a usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import List, Optional

from . import atlas
from .io import builtin, dumps, load_quiver, load_rep
from .linalg import field_from_tag
from .moment import lemma_m2_check
from .quiver import InfiniteAlgebraError
from .reps import change_field, classify_AA, decompose, validate_rep
from .reptype import MAX_CELLS, binary_dim_vectors, census_many, is_psd, radical_lattice, tits_form
from .verify import SUITES


class DomainError(Exception):
    pass


def _out(text: str = ""):
    sys.stdout.write(text + "\n")


def _presentation(args):
    if args.builtin:
        return builtin(args.builtin)
    return load_quiver(args.file)


def _load_rep(args):
    """Read a representation file, reducing it to ``--field`` when one is given."""
    V = load_rep(args.file)
    if args.field:
        V = change_field(V, field_from_tag(args.field))
    return V


def _matrix_lines(m) -> List[str]:
    return [" ".join(f"{x:>2}" for x in row) for row in m]


# -- atlas --------------------------------------------------------------------

def cmd_atlas_list(args):
    cases = atlas.list_cases()
    if args.json:
        _out(dumps([{"family": c.family, "params": list(c.params), "constraint": c.constraint,
                     "description": c.description} for c in cases]))
        return
    for c in cases:
        params = " ".join(f"--{p} {p.upper()}" for p in c.params)
        cons = f" [{c.constraint}]" if c.constraint else ""
        _out(f"{c.family:<10} {params:<16} {c.description}{cons}")


def cmd_atlas_show(args):
    tmpl = atlas.template(args.case)
    params = {p: getattr(args, p) for p in tmpl.params}
    rec = atlas.get_case(args.case, **params)
    if args.json:
        _out(dumps(rec.to_dict()))
        return
    _out(f"case {rec.name}   dim X = {rec.dim_X}")
    _out("orbits:")
    for o in rec.orbits:
        _out(f"  {o.label:<8} codim {o.codim:<4} component group order {o.component_group}"
             f"   simples {', '.join(o.vertices)}")
    q = rec.quiver
    _out(f"quiver: {len(q.vertices)} vertices, {len(q.arrows)} arrows, "
         f"{len(q.relations)} relations")
    _out("  vertices: " + " ".join(q.vertices))
    for a in q.arrows:
        _out(f"  arrow {a.tail} -> {a.head}")
    for r in q.relations:
        _out("  zero: " + " . ".join(r))
    iso = rec.isolated_vertices()
    _out("  isolated: " + (" ".join(iso) if iso else "none"))
    if rec.f_degree is not None:
        roots = ", ".join(atlas._fmt(r) for r in rec.b_roots)
        _out(f"semi-invariant: degree {rec.f_degree}; b-function roots {roots}")
    else:
        _out("semi-invariant: none")
    if rec.fourier:
        seen, pairs = set(), []
        for v, w in rec.fourier.items():
            if v in seen:
                continue
            seen |= {v, w}
            pairs.append(f"{v}<->{w}" if v != w else f"{v} fixed")
        tag = " (partial)" if rec.fourier_partial else ""
        _out(f"fourier{tag}: " + ", ".join(pairs))
    else:
        _out("fourier: not determined")


# -- quiver -------------------------------------------------------------------

def cmd_quiver_paths(args):
    pres = _presentation(args)
    paths = pres.nonzero_paths()
    if args.json:
        _out(dumps([{"source": str(p.source), "target": str(p.target),
                     "arrows": [str(a) for a in p.arrows]} for p in paths]))
        return
    _out(f"{len(paths)} nonzero paths")
    for p in paths:
        _out(f"  {p.source} -> {p.target}: {p}")


def cmd_quiver_cartan(args):
    pres = _presentation(args)
    c = pres.cartan_matrix()
    if args.json:
        _out(dumps({"vertices": [str(v) for v in pres.vertices], "cartan": c}))
        return
    _out("vertices: " + " ".join(str(v) for v in pres.vertices))
    for line in _matrix_lines(c):
        _out(line)


# -- representations ------------------------------------------------------------

def cmd_rep_validate(args):
    V = _load_rep(args)
    rep = validate_rep(V)
    if args.json:
        _out(dumps({"ok": rep.ok, "violated": list(rep.violated.arrows) if rep.violated else None}))
    else:
        _out("ok" if rep.ok else f"violation: relation {rep.violated} is nonzero")
    if not rep.ok:
        raise SystemExit(1)


def cmd_rep_decompose(args):
    V = _load_rep(args)
    if not validate_rep(V).ok:
        raise DomainError("representation violates the relations")
    dec = decompose(V)
    if args.json:
        _out(dumps({"summands": [s.to_dict() for s in dec.summands]}))
        return
    _out(f"{len(dec.summands)} indecomposable summand(s)")
    for k, s in enumerate(dec.summands):
        _out(f"  [{k}] dims {s.dim_vector}")


def cmd_rep_classify(args):
    V = _load_rep(args)
    specs = classify_AA(V)
    if args.json:
        _out(dumps([{"n": s.n, "i": s.i, "j": s.j, "sigma": s.sigma} for s in specs]))
        return
    _out(" + ".join(str(s) for s in specs))


# -- Tits and census --------------------------------------------------------------

def cmd_tits(args):
    pres = _presentation(args)
    q = tits_form(pres)
    psd = is_psd(q)
    rad = radical_lattice(q)
    if args.json:
        _out(dumps({"vertices": [str(v) for v in q.vertices],
                    "coefficients": [[i, j, c] for (i, j), c in q.coeffs.items()],
                    "psd": psd, "radical": rad}))
        return
    _out(f"q(x) = {q}")
    _out(f"positive semidefinite: {'yes' if psd else 'no'}")
    _out("radical basis: " + (", ".join(str(tuple(r)) for r in rad) if rad else "none"))


def _parse_dims(text, pres):
    try:
        dims = [int(x) for x in text.split(",")]
    except ValueError:
        raise DomainError(f"bad dimension vector {text!r}") from None
    if len(dims) != len(pres.vertices):
        raise DomainError(f"dimension vector needs {len(pres.vertices)} entries")
    return dims


def cmd_census(args):
    pres = _presentation(args)
    if args.max_cells > MAX_CELLS:
        raise DomainError(f"--max-cells is capped at {MAX_CELLS}")
    if args.all_binary:
        vectors = binary_dim_vectors(len(pres.vertices))
    else:
        vectors = [_parse_dims(args.dims, pres)]
    for d in vectors:
        cells = sum(d[pres.quiver.index(a.head)] * d[pres.quiver.index(a.tail)] for a in pres.arrows)
        if cells > args.max_cells:
            raise DomainError(f"{cells} matrix entries exceed --max-cells {args.max_cells}")
    reports = census_many(pres, vectors, args.prime, workers=args.workers)
    if args.json:
        _out(dumps({"reports": [r.to_dict() for r in reports],
                    "indecomposable_total": sum(r.count for r in reports)}))
        return
    for r in reports:
        for line in r.lines():
            _out(line)
    _out(f"total indecomposable classes: {sum(r.count for r in reports)}")


# -- verify ---------------------------------------------------------------------

def cmd_verify(args):
    if args.suite == "lemma-m2":
        rep = lemma_m2_check()
        if args.json:
            _out(dumps(rep.to_dict()))
        else:
            for line in rep.lines():
                _out(line)
        if not rep.ok:
            raise SystemExit(1)
        return
    names = list(SUITES) if args.suite == "all" else [args.suite]
    failed = 0
    results = {}
    for name in names:
        checks = SUITES[name]()
        results[name] = checks
        failed += sum(not c.ok for c in checks)
    if args.json:
        _out(dumps({n: [{"name": c.name, "ok": c.ok, "detail": c.detail} for c in cs]
                    for n, cs in results.items()}))
    else:
        for n, cs in results.items():
            bad = [c for c in cs if not c.ok]
            _out(f"{n}: {len(cs) - len(bad)}/{len(cs)} PASS")
            for c in bad:
                _out(f"  FAIL {c.name} {c.detail}".rstrip())
        _out("PASS" if not failed else f"FAIL ({failed} checks)")
    if failed:
        raise SystemExit(1)


# -- parser -----------------------------------------------------------------------

def _quiver_source(p):
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--builtin", metavar="SPEC", help="AA:<n>, AA3c, EE6, B8 or B8op")
    g.add_argument("--file", metavar="PATH", help="quiver JSON file")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="quiveratlas",
                                 description="Quivers with relations, representations and the "
                                             "atlas of equivariant D-module categories.")
    sub = ap.add_subparsers(dest="command", required=True)

    a = sub.add_parser("atlas", help="query the atlas").add_subparsers(dest="action", required=True)
    p = a.add_parser("list")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_atlas_list)
    p = a.add_parser("show")
    p.add_argument("case", choices=atlas.FAMILIES)
    p.add_argument("--n", type=int)
    p.add_argument("--m", type=int)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_atlas_show)

    q = sub.add_parser("quiver", help="paths and Cartan matrices").add_subparsers(
        dest="action", required=True)
    for name, fn in (("paths", cmd_quiver_paths), ("cartan", cmd_quiver_cartan)):
        p = q.add_parser(name)
        _quiver_source(p)
        p.add_argument("--json", action="store_true")
        p.set_defaults(func=fn)

    r = sub.add_parser("rep", help="representation files").add_subparsers(dest="action", required=True)
    for name, fn in (("validate", cmd_rep_validate), ("decompose", cmd_rep_decompose),
                     ("classify-aa", cmd_rep_classify)):
        p = r.add_parser(name)
        p.add_argument("file")
        p.add_argument("--field", metavar="TAG", help="Q or Fp:<p>; entries are mapped into this field")
        p.add_argument("--json", action="store_true")
        p.set_defaults(func=fn)

    t = sub.add_parser("tits", help="Tits form analysis").add_subparsers(dest="action", required=True)
    p = t.add_parser("analyze")
    _quiver_source(p)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_tits)

    p = sub.add_parser("census", help="finite-field census of representations")
    _quiver_source(p)
    p.add_argument("--dims", help="comma-separated dimension vector")
    p.add_argument("--all-binary", action="store_true", help="all nonzero 0/1 dimension vectors")
    p.add_argument("--prime", type=int, default=2, choices=(2, 3, 5, 7))
    p.add_argument("--max-cells", type=int, default=MAX_CELLS)
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_census)

    p = sub.add_parser("verify", help="run verification suites")
    p.add_argument("suite", choices=["all", "lemma-m2", *SUITES])
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_verify)
    return ap


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)  # exits with status 2 on usage errors
    if args.command == "atlas" and args.action == "show":
        missing = [p for p in atlas.template(args.case).params if getattr(args, p) is None]
        if missing:
            parser.error(f"atlas show {args.case} requires " + " ".join(f"--{p}" for p in missing))
    if args.command == "census" and not (args.dims or args.all_binary):
        parser.error("census requires --dims or --all-binary")
    try:
        args.func(args)
    except SystemExit as exc:
        return int(exc.code or 0)
    except (DomainError, InfiniteAlgebraError, ValueError, ArithmeticError, OSError,
            json.JSONDecodeError) as exc:
        msg = str(exc).splitlines()[0] if str(exc) else type(exc).__name__
        sys.stderr.write(f"error: {msg}\n")
        return 1
    return 0


run = main

if __name__ == "__main__":
    sys.exit(main())
