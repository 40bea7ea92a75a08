"""Equivariant D-module categories on irreducible spherical vector spaces as data.

Each :class:`CaseRecord` stores the orbits of one space with their codimensions
and component groups, the quiver with relations whose representations model the
category of equivariant D-modules, b-function roots of the semi-invariant, and
partial Fourier data. :func:`verify_case_invariants` cross-checks all of it.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import permutations
from math import comb
from typing import Dict, List, Optional, Sequence, Tuple

from .quiver import (Arrow, Quiver, QuiverPresentation, _automorphism_over,
                     find_isomorphism, make_AA, opposite)

FAMILIES = (
    "gl_m_gl_n", "skew", "symmetric", "sp2n_gl2", "sp2n_gl3", "sp4_glm", "sp4_gl4",
    "sp_2n", "spin10", "so_n", "spin7", "spin9", "g2", "e6",
)


@dataclass(frozen=True)
class CaseTemplate:
    family: str
    params: Tuple[str, ...]
    constraint: str
    description: str


_TEMPLATES = [
    CaseTemplate("gl_m_gl_n", ("m", "n"), "m >= 1, n >= 1", "GL_m x GL_n on m x n matrices"),
    CaseTemplate("skew", ("n",), "n >= 2", "GL_n on skew-symmetric n x n matrices"),
    CaseTemplate("symmetric", ("n",), "n >= 1", "GL_n on symmetric n x n matrices"),
    CaseTemplate("sp2n_gl2", ("n",), "n >= 2", "Sp_2n x GL_2 on 2n x 2 matrices"),
    CaseTemplate("sp2n_gl3", ("n",), "n >= 2", "Sp_2n x GL_3 on 2n x 3 matrices"),
    CaseTemplate("sp4_glm", ("m",), "m > 4", "Sp_4 x GL_m on 4 x m matrices"),
    CaseTemplate("sp4_gl4", (), "", "Sp_4 x GL_4 on 4 x 4 matrices"),
    CaseTemplate("sp_2n", ("n",), "n >= 1", "Sp_2n on its defining representation"),
    CaseTemplate("spin10", (), "", "Spin_10 on a half-spin representation"),
    CaseTemplate("so_n", ("n",), "n >= 3", "SO_n x C* on C^n"),
    CaseTemplate("spin7", (), "", "Spin_7 x C* on the spin representation"),
    CaseTemplate("spin9", (), "", "Spin_9 x C* on the spin representation"),
    CaseTemplate("g2", (), "", "G_2 x C* on C^7"),
    CaseTemplate("e6", (), "", "E_6 x C* on C^27"),
]


def list_cases() -> List[CaseTemplate]:
    return list(_TEMPLATES)


def template(family: str) -> CaseTemplate:
    for t in _TEMPLATES:
        if t.family == family:
            return t
    raise ValueError(f"unknown family {family!r}; expected one of {', '.join(FAMILIES)}")


@dataclass(frozen=True)
class Orbit:
    label: str
    codim: int
    component_group: int  # order of the (abelian) component group
    vertices: Tuple[str, ...]  # one simple per irreducible local system


@dataclass
class CaseRecord:
    family: str
    params: Dict[str, int]
    dim_X: int
    orbits: List[Orbit]
    closure: List[Tuple[str, str]]  # (a, b): O_a lies in the closure of O_b, a != b
    quiver: QuiverPresentation
    vertex_orbit: Dict[str, Tuple[str, int]]  # vertex -> (orbit label, local system index)
    f_degree: Optional[int] = None
    b_roots: Tuple[Fraction, ...] = ()
    fourier: Optional[Dict[str, str]] = None
    fourier_partial: bool = False
    notes: Dict[str, str] = field(default_factory=dict)

    @property
    def name(self) -> str:
        args = ",".join(f"{k}={v}" for k, v in self.params.items())
        return f"{self.family}({args})" if args else self.family

    def orbit(self, label: str) -> Orbit:
        for o in self.orbits:
            if o.label == label:
                return o
        raise ValueError(f"unknown orbit {label!r} in {self.name}")

    @property
    def zero_orbit(self) -> Orbit:
        return max(self.orbits, key=lambda o: o.codim)

    @property
    def open_orbit(self) -> Orbit:
        return min(self.orbits, key=lambda o: o.codim)

    def isolated_vertices(self) -> List[str]:
        touched = {a.tail for a in self.quiver.arrows} | {a.head for a in self.quiver.arrows}
        return [v for v in self.quiver.vertices if v not in touched]

    def components(self) -> List[List[str]]:
        """Connected components of the quiver, each in vertex order."""
        parent = {v: v for v in self.quiver.vertices}

        def find(v):
            while parent[v] != v:
                parent[v] = parent[parent[v]]
                v = parent[v]
            return v

        for a in self.quiver.arrows:
            parent[find(a.tail)] = find(a.head)
        groups: Dict[str, List[str]] = {}
        for v in self.quiver.vertices:
            groups.setdefault(find(v), []).append(v)
        return list(groups.values())

    def to_dict(self) -> dict:
        d = self.quiver.to_dict()
        d.update({
            "family": self.family,
            "params": dict(self.params),
            "dim_X": self.dim_X,
            "orbits": [{"label": o.label, "codim": o.codim,
                        "component_group": o.component_group,
                        "vertices": list(o.vertices)} for o in self.orbits],
            "closure": [list(p) for p in self.closure],
            "vertex_orbit": {v: [o, k] for v, (o, k) in self.vertex_orbit.items()},
            "f_degree": self.f_degree,
            "b_roots": [_fmt(r) for r in self.b_roots],
            "fourier": dict(self.fourier) if self.fourier else None,
            "fourier_partial": self.fourier_partial,
            "notes": dict(self.notes),
        })
        return d


def _fmt(r: Fraction) -> str:
    return str(r.numerator) if r.denominator == 1 else f"{r.numerator}/{r.denominator}"


# -- quiver assembly ----------------------------------------------------------

def _assemble(vertices: Sequence[str], edges: Sequence[Tuple[str, str]],
              kill_all: Sequence[Tuple[str, str]] = (), all_compositions: bool = False
              ) -> QuiverPresentation:
    """Doubled edges with 2-cycles zero.

    Every composition involving an arrow of an edge in ``kill_all`` is also
    zero; ``all_compositions`` kills every length-2 path.
    """
    arrows = []
    for u, v in edges:
        arrows.append(Arrow(f"{u}->{v}", u, v))
        arrows.append(Arrow(f"{v}->{u}", v, u))
    killed = {f"{u}->{v}" for u, v in kill_all} | {f"{v}->{u}" for u, v in kill_all}
    rels = []
    for a in arrows:
        for b in arrows:
            if a.head != b.tail:
                continue
            two_cycle = a.tail == b.head
            if two_cycle or all_compositions or a.id in killed or b.id in killed:
                rels.append((a.id, b.id))
    return QuiverPresentation(Quiver(vertices, arrows), rels)


def _chain(labels: Sequence[str]) -> List[Tuple[str, str]]:
    return list(zip(labels, labels[1:]))


def _lab(*xs) -> str:
    return "(" + ",".join(str(x) for x in xs) + ")"


def _total_closure(labels: Sequence[str]) -> List[Tuple[str, str]]:
    """Closure relations for a chain of orbits listed from smallest to largest."""
    return [(a, b) for i, a in enumerate(labels) for b in labels[i + 1:]]


def _simple_orbits(labels, codims, groups=None):
    groups = groups or {}
    out, vo = [], {}
    for lab, c in zip(labels, codims):
        g = groups.get(lab, 1)
        verts = tuple([lab] + [lab + "'" * k for k in range(1, g)])
        out.append(Orbit(lab, c, g, verts))
        for k, v in enumerate(verts):
            vo[v] = (lab, k)
    return out, vo


def _roots(*xs) -> Tuple[Fraction, ...]:
    return tuple(sorted({Fraction(x) for x in xs}, reverse=True))


# -- codimension formulas -----------------------------------------------------

def sp_gl_orbits(n: int, m: int) -> List[Tuple[int, int]]:
    """Admissible (rank, isometry type) labels: 2r-2n <= s <= r <= m, s even."""
    return [(r, s) for r in range(0, m + 1) for s in range(0, r + 1, 2) if 2 * r - 2 * n <= s]


def sp_gl_codim(n: int, m: int, r: int, s: int) -> int:
    if (r, s) not in sp_gl_orbits(n, m):
        raise ValueError(f"orbit ({r},{s}) is not admissible for Sp_{2 * n} x GL_{m}")
    return (2 * n - r) * (m - r) + (r - s) * (r - s - 1) // 2


def orbit_codim(family: str, label, **params) -> int:
    """Codimension of an orbit from the family's closed formula.

    Matrix families take the rank index ``i`` (for skew matrices the rank is
    ``2i``); Sp x GL families take the pair ``(r, s)``. Other families are
    looked up in the stored record.
    """
    if isinstance(label, str):
        label = _parse_label(label)
    if family == "gl_m_gl_n":
        m, n = params["m"], params["n"]
        (i,) = label
        if not 0 <= i <= min(m, n):
            raise ValueError(f"rank {i} out of range")
        return (m - i) * (n - i)
    if family == "skew":
        n = params["n"]
        (i,) = label
        if not 0 <= 2 * i <= n:
            raise ValueError(f"rank {2 * i} out of range")
        return comb(n - 2 * i, 2)
    if family == "symmetric":
        n = params["n"]
        (i,) = label
        if not 0 <= i <= n:
            raise ValueError(f"rank {i} out of range")
        return comb(n - i + 1, 2)
    if family in ("sp2n_gl2", "sp2n_gl3", "sp4_glm", "sp4_gl4"):
        n, m = _sp_params(family, params)
        r, s = label
        return sp_gl_codim(n, m, r, s)
    rec = get_case(family, **params)
    return rec.orbit(_lab(*label)).codim


def _parse_label(s: str) -> tuple:
    s = s.strip().rstrip("'")
    return tuple(int(x) for x in s.strip("()").split(","))


def _sp_params(family, params) -> Tuple[int, int]:
    if family == "sp2n_gl2":
        return params["n"], 2
    if family == "sp2n_gl3":
        return params["n"], 3
    if family == "sp4_glm":
        return 2, params["m"]
    return 2, 4


def _sp_gl_roots(n: int, m: int) -> Tuple[Fraction, ...]:
    return _roots(*[-k for k in range(1, m, 2)], *[-(2 * n) + k for k in range(0, m - 1, 2)])


# -- families -----------------------------------------------------------------

def _check(cond, msg):
    if not cond:
        raise ValueError(msg)


def _gl(m: int, n: int) -> CaseRecord:
    _check(m >= 1 and n >= 1, "gl_m_gl_n needs m >= 1 and n >= 1")
    k = min(m, n)
    labels = [_lab(i) for i in range(k + 1)]
    orbits, vo = _simple_orbits(labels, [(m - i) * (n - i) for i in range(k + 1)])
    notes = {"codim": "determinantal variety of rank <= i has codimension (m-i)(n-i)"}
    if m == n:
        pres = _assemble(labels, _chain(labels))
        fourier = {labels[i]: labels[n - i] for i in range(n + 1)}
        notes.update(quiver="doubled chain on the rank orbits with all 2-cycles zero",
                     roots="b-function of det has roots -1..-n",
                     fourier="F(C[X]) is the simple on the zero orbit; the only "
                             "involutive automorphism doing this reverses the chain")
        return CaseRecord("gl_m_gl_n", {"m": m, "n": n}, m * n, orbits,
                          _total_closure(labels), pres, vo, n,
                          _roots(*range(-1, -n - 1, -1)), fourier, False, notes)
    notes["quiver"] = "semisimple category: all vertices isolated, no semi-invariant"
    return CaseRecord("gl_m_gl_n", {"m": m, "n": n}, m * n, orbits, _total_closure(labels),
                      _assemble(labels, []), vo, notes=notes)


def _skew(n: int) -> CaseRecord:
    _check(n >= 2, "skew needs n >= 2")
    r = n // 2
    labels = [_lab(i) for i in range(r + 1)]
    orbits, vo = _simple_orbits(labels, [comb(n - 2 * i, 2) for i in range(r + 1)])
    notes = {"codim": "skew matrices of rank <= 2i have codimension C(n-2i, 2)",
             "labels": "orbit (i) consists of skew matrices of rank 2i"}
    if n % 2 == 0:
        notes.update(quiver="doubled chain with all 2-cycles zero",
                     roots="Pfaffian b-function roots -1,-3,...,-(n-1)")
        return CaseRecord("skew", {"n": n}, comb(n, 2), orbits, _total_closure(labels),
                          _assemble(labels, _chain(labels)), vo, r,
                          _roots(*range(-1, -n, -2)), notes=notes)
    notes["quiver"] = "semisimple category: all vertices isolated"
    return CaseRecord("skew", {"n": n}, comb(n, 2), orbits, _total_closure(labels),
                      _assemble(labels, []), vo, notes=notes)


def _symmetric(n: int) -> CaseRecord:
    _check(n >= 1, "symmetric needs n >= 1")
    labels = [_lab(i) for i in range(n + 1)]
    groups = {lab: 2 for lab in labels[1:]}
    orbits, vo = _simple_orbits(labels, [comb(n - i + 1, 2) for i in range(n + 1)], groups)
    eps = n % 2
    chain_a = [_lab(k) for k in range(1 - eps, n, 2)] + [_lab(n)]
    chain_b = [(_lab(k) + "'" if k else _lab(0)) for k in range(eps, n + 1, 2)]
    verts = [v for o in orbits for v in o.vertices]
    pres = _assemble(verts, _chain(chain_a) + _chain(chain_b))
    notes = {
        "codim": "symmetric matrices of rank <= i have codimension C(n-i+1, 2)",
        "component_group": "nonzero orbits have stabilizers with two components; "
                           "(i)' is the sign local system, and (0)' = (0)",
        "quiver": "two doubled chains with all 2-cycles zero; the other n-1 vertices isolated",
        "roots": "b-function of the symmetric determinant has roots -1,-3/2,...,-(n+1)/2",
        "fourier": "only F(C[X]) = simple on the zero orbit is determined",
    }
    return CaseRecord("symmetric", {"n": n}, comb(n + 1, 2), orbits, _total_closure(labels),
                      pres, vo, n, _roots(*[Fraction(-(k + 1), 2) for k in range(1, n + 1)]),
                      {_lab(n): _lab(0), _lab(0): _lab(n)}, True, notes)


def _sp_gl_base(family, params, n, m):
    labs = sp_gl_orbits(n, m)
    labels = [_lab(r, s) for r, s in labs]
    orbits, vo = _simple_orbits(labels, [sp_gl_codim(n, m, r, s) for r, s in labs])
    closure = [(_lab(*a), _lab(*b)) for a in labs for b in labs
               if a != b and a[0] <= b[0] and a[1] <= b[1]]
    notes = {"codim": "codim O_(r,s) = (2n-r)(m-r) + (r-s)(r-s-1)/2",
             "closure": "(r,s) <= (r',s') iff r <= r' and s <= s'",
             "labels": "r is the rank, s the rank of the induced skew form"}
    return labels, orbits, vo, closure, notes


def _sp2n_gl2(n: int) -> CaseRecord:
    _check(n >= 2, "sp2n_gl2 needs n >= 2")
    labels, orbits, vo, closure, notes = _sp_gl_base("sp2n_gl2", {"n": n}, n, 2)
    pres = _assemble(labels, _chain(["(0,0)", "(2,0)", "(2,2)"]))
    notes.update(quiver="doubled chain (0,0),(2,0),(2,2) with 2-cycles zero; (1,0) isolated",
                 roots="Pfaffian of Y^t J Y has b-function roots -1, -2n")
    return CaseRecord("sp2n_gl2", {"n": n}, 4 * n, orbits, closure, pres, vo, 2,
                      _sp_gl_roots(n, 2), notes=notes)


def _sp2n_gl3(n: int) -> CaseRecord:
    _check(n >= 2, "sp2n_gl3 needs n >= 2")
    labels, orbits, vo, closure, notes = _sp_gl_base("sp2n_gl3", {"n": n}, n, 3)
    notes["roots"] = "no semi-invariant (odd number of columns)"
    if n == 2:
        pres = _assemble(labels, _chain(["(1,0)", "(2,0)", "(2,2)"]), all_compositions=True)
        fourier = {"(2,2)": "(1,0)", "(1,0)": "(2,2)", "(2,0)": "(2,0)",
                   "(3,2)": "(0,0)", "(0,0)": "(3,2)"}
        notes.update(
            quiver="doubled chain (1,0),(2,0),(2,2) with every composition zero, since "
                   "the projective cover of S_(2,2) has length two; (3,2), (0,0) isolated",
            fourier="F swaps (2,2) and (1,0), hence fixes (2,0); zero and open orbit "
                    "simples are exchanged as in every case")
    else:
        pres = _assemble(labels, [("(1,0)", "(3,0)"), ("(2,0)", "(2,2)")])
        fourier = {"(3,2)": "(0,0)", "(0,0)": "(3,2)", "(2,2)": "(1,0)", "(1,0)": "(2,2)",
                   "(3,0)": "(2,0)", "(2,0)": "(3,0)"}
        notes.update(quiver="two doubled pairs {(1,0),(3,0)} and {(2,0),(2,2)}; "
                            "(3,2), (0,0) isolated",
                     fourier="F: (3,2)<->(0,0), (2,2)<->(1,0), (3,0)<->(2,0)",
                     characteristic_cycles="charC(S_(r,s)) is the conormal closure of "
                                           "O_(r,s) with multiplicity one")
    return CaseRecord("sp2n_gl3", {"n": n}, 6 * n, orbits, closure, pres, vo,
                      fourier=fourier, notes=notes)


def _sp4_glm(m: int) -> CaseRecord:
    _check(m > 4, "sp4_glm needs m > 4 (use sp4_gl4 for m = 4)")
    labels, orbits, vo, closure, notes = _sp_gl_base("sp4_glm", {"m": m}, 2, m)
    pres = _assemble(labels, [("(2,0)", "(2,2)")])
    notes.update(quiver="one doubled pair (2,0),(2,2); four isolated vertices",
                 roots="no semi-invariant for m > 4")
    return CaseRecord("sp4_glm", {"m": m}, 4 * m, orbits, closure, pres, vo, notes=notes)


def _sp4_gl4() -> CaseRecord:
    labels, orbits, vo, closure, notes = _sp_gl_base("sp4_gl4", {}, 2, 4)
    chain = ["(0,0)", "(1,0)", "(2,2)", "(3,2)", "(4,4)"]
    pres = _assemble(labels, _chain(chain) + [("(2,0)", "(2,2)")],
                     kill_all=[("(2,0)", "(2,2)")])
    notes.update(quiver="doubled chain (0,0),(1,0),(2,2),(3,2),(4,4) with (2,0) attached "
                        "to (2,2); 2-cycles and compositions through (2,0) are zero",
                 roots="Pfaffian of Y^t J Y (degree 4) has roots -1,-3 and -4,-2")
    return CaseRecord("sp4_gl4", {}, 16, orbits, closure, pres, vo, 4,
                      _sp_gl_roots(2, 4), notes=notes)


def _isolated_case(family, params, dim_X, codims, groups=None, notes=None, fourier=None):
    labels = [_lab(i) for i in range(len(codims))]
    orbits, vo = _simple_orbits(labels, codims, groups)
    verts = [v for o in orbits for v in o.vertices]
    return CaseRecord(family, params, dim_X, orbits, _total_closure(labels),
                      _assemble(verts, []), vo, fourier=fourier, notes=notes or {})


def _sp_2n(n: int) -> CaseRecord:
    _check(n >= 1, "sp_2n needs n >= 1")
    return _isolated_case(
        "sp_2n", {"n": n}, 2 * n, [2 * n, 0],
        notes={"quiver": "two isolated vertices (simply connected orbits)",
               "fourier": "F exchanges the delta module at 0 and O_X"},
        fourier={"(0)": "(1)", "(1)": "(0)"})


def _spin10() -> CaseRecord:
    return _isolated_case(
        "spin10", {}, 16, [16, 5, 0],
        notes={"quiver": "three isolated vertices",
               "codim": "the highest weight orbit has dimension 11"})


def _quadric(family, params, dim_X, even: bool, roots, note) -> CaseRecord:
    labels = ["(0)", "(1)", "(2)"]
    orbits, vo = _simple_orbits(labels, [dim_X, 1, 0], {"(2)": 2})
    verts = ["(0)", "(1)", "(2)", "(2)'"]
    if even:
        pres = _assemble(verts, _chain(["(0)", "(1)", "(2)"]))
        q = "doubled chain (0),(1),(2) with 2-cycles zero; (2)' isolated"
    else:
        pres = _assemble(verts, [("(1)", "(2)"), ("(0)", "(2)'")])
        q = "doubled pairs (1),(2) and (0),(2)' with 2-cycles zero"
    notes = {"quiver": q, "roots": note,
             "component_group": "the open orbit carries two simples with full support"}
    return CaseRecord(family, params, dim_X, orbits, _total_closure(labels), pres, vo, 2,
                      roots, notes=notes)


def _so_n(n: int) -> CaseRecord:
    _check(n >= 3, "so_n needs n >= 3")
    return _quadric("so_n", {"n": n}, n, n % 2 == 0, _roots(-1, Fraction(-n, 2)),
                    "quadric b-function roots -1, -n/2")


def _spin7() -> CaseRecord:
    return _quadric("spin7", {}, 8, True, _roots(-1, -4),
                    "the invariant quadric in 8 variables has roots -1, -4")


def _g2() -> CaseRecord:
    return _quadric("g2", {}, 7, False, _roots(-1, Fraction(-7, 2)),
                    "the invariant quadric in 7 variables has roots -1, -7/2")


def _spin9() -> CaseRecord:
    labels = ["(0)", "(1)", "(2)", "(3)"]
    orbits, vo = _simple_orbits(labels, [16, 5, 1, 0], {"(3)": 2})
    verts = ["(0)", "(1)", "(2)", "(3)", "(3)'"]
    pres = _assemble(verts, _chain(["(0)", "(2)", "(3)"]))
    notes = {"quiver": "doubled chain (0),(2),(3) with 2-cycles zero; (1), (3)' isolated",
             "roots": "the invariant quadric in 16 variables has roots -1, -8"}
    return CaseRecord("spin9", {}, 16, orbits, _total_closure(labels), pres, vo, 2,
                      _roots(-1, -8), notes=notes)


def _e6() -> CaseRecord:
    labels = ["(0)", "(1)", "(2)", "(3)"]
    orbits, vo = _simple_orbits(labels, [27, 10, 1, 0])
    notes = {"quiver": "doubled chain (0),(1),(2),(3) with 2-cycles zero",
             "roots": "cubic invariant with b-function roots -1,-5,-9",
             "codim": "orbit dimensions 0, 17, 26, 27"}
    return CaseRecord("e6", {}, 27, orbits, _total_closure(labels),
                      _assemble(labels, _chain(labels)), vo, 3, _roots(-1, -5, -9), notes=notes)


_BUILDERS = {
    "gl_m_gl_n": lambda p: _gl(p["m"], p["n"]),
    "skew": lambda p: _skew(p["n"]),
    "symmetric": lambda p: _symmetric(p["n"]),
    "sp2n_gl2": lambda p: _sp2n_gl2(p["n"]),
    "sp2n_gl3": lambda p: _sp2n_gl3(p["n"]),
    "sp4_glm": lambda p: _sp4_glm(p["m"]),
    "sp4_gl4": lambda p: _sp4_gl4(),
    "sp_2n": lambda p: _sp_2n(p["n"]),
    "spin10": lambda p: _spin10(),
    "so_n": lambda p: _so_n(p["n"]),
    "spin7": lambda p: _spin7(),
    "spin9": lambda p: _spin9(),
    "g2": lambda p: _g2(),
    "e6": lambda p: _e6(),
}

_CACHE: Dict[tuple, CaseRecord] = {}


def get_case(family: str, **params) -> CaseRecord:
    """Build the record for a family; parameters are keyword arguments ``n``/``m``."""
    t = template(family)
    params = {k: v for k, v in params.items() if v is not None}
    missing = [p for p in t.params if p not in params]
    extra = [p for p in params if p not in t.params]
    if missing:
        raise ValueError(f"{family} needs parameter(s) {', '.join(missing)}")
    if extra:
        raise ValueError(f"{family} takes no parameter(s) {', '.join(extra)}")
    key = (family, tuple(sorted(params.items())))
    if key not in _CACHE:
        _CACHE[key] = _BUILDERS[family]({k: int(v) for k, v in params.items()})
    return _CACHE[key]


def parameter_grid(lo: int = 2, hi: int = 6) -> List[Tuple[str, Dict[str, int]]]:
    """Every family with its parameters in the valid range intersected with [lo, hi]."""
    out = []
    for t in _TEMPLATES:
        if not t.params:
            out.append((t.family, {}))
            continue
        if t.params == ("m", "n"):
            out += [(t.family, {"m": m, "n": n}) for m in range(lo, hi + 1)
                    for n in range(lo, hi + 1)]
            continue
        (p,) = t.params
        for v in range(lo, hi + 1):
            try:
                get_case(t.family, **{p: v})
            except ValueError:
                continue
            out.append((t.family, {p: v}))
    return out


# -- derived data ------------------------------------------------------------

def fourier_permutation(rec: CaseRecord) -> Optional[Dict[str, str]]:
    return dict(rec.fourier) if rec.fourier else None


def pyasetskii(rec: CaseRecord) -> Optional[Dict[str, str]]:
    """Orbit involution obtained from the Fourier data by forgetting local systems."""
    if not rec.fourier:
        return None
    out = {}
    for v, w in rec.fourier.items():
        a, b = rec.vertex_orbit[v][0], rec.vertex_orbit[w][0]
        if out.get(a, b) != b:
            raise ValueError(f"Fourier data does not descend to orbits at {a}")
        out[a] = b
    return out


CharCycle = Tuple[str, Optional[List[Tuple[str, int]]]]


def characteristic_cycle(rec: CaseRecord, vertex: str) -> CharCycle:
    """``("known", [(orbit, multiplicity)])`` or ``("multiplicity-free", None)``."""
    if vertex not in rec.vertex_orbit:
        raise ValueError(f"unknown vertex {vertex!r} in {rec.name}")
    orbit = rec.vertex_orbit[vertex][0]
    if rec.family == "sp2n_gl3" and rec.params["n"] >= 3:
        return ("known", [(orbit, 1)])
    if orbit == rec.zero_orbit.label:
        # the delta module at the origin
        return ("known", [(orbit, 1)])
    return ("multiplicity-free", None)


def projective_cover_dims(rec: CaseRecord, vertex: str) -> Dict[str, int]:
    """Dimension vector of the projective cover of the simple at ``vertex``."""
    q = rec.quiver
    if vertex not in q.vertices:
        raise ValueError(f"unknown vertex {vertex!r} in {rec.name}")
    row = q.cartan_matrix()[q.quiver.index(vertex)]
    return dict(zip(q.vertices, row))


# -- invariant checks ---------------------------------------------------------

@dataclass
class Check:
    name: str
    ok: bool
    detail: str = ""


def _self_opposite_identity(pres: QuiverPresentation) -> bool:
    # compare pres with its opposite over the identity vertex map
    op = opposite(pres)
    q = pres.quiver
    groups, ogroups = {}, {}
    for a in q.arrows:
        groups.setdefault((a.tail, a.head), []).append(a.id)
    for a in op.quiver.arrows:
        ogroups.setdefault((a.tail, a.head), []).append(a.id)
    if {k: len(v) for k, v in groups.items()} != {k: len(v) for k, v in ogroups.items()}:
        return False
    amap = {}
    for (t, h), ids in groups.items():
        amap.update(zip(ids, ogroups[(t, h)]))
    rels = set(op.relations)
    return all(tuple(amap[a] for a in r) in rels for r in pres.relations)


def extend_to_automorphism(pres: QuiverPresentation, partial: Dict[str, str]
                           ) -> Optional[Dict[str, str]]:
    """An automorphism of ``pres`` agreeing with ``partial``, or None.

    Isolated vertices outside ``partial`` stay fixed; the remaining vertices are
    searched by brute force among those of equal in/out degree.
    """
    q = pres.quiver
    deg = {v: (len(q.out_arrows(v)), len(q.in_arrows(v))) for v in pres.vertices}
    free = [v for v in pres.vertices if v not in partial and deg[v] != (0, 0)]
    targets = [v for v in free if v not in partial.values()]
    base = dict(partial)
    base.update({v: v for v in pres.vertices if v not in partial and deg[v] == (0, 0)})
    for perm in permutations(targets):
        vmap = dict(base, **dict(zip(free, perm)))
        if all(deg[v] == deg[w] for v, w in vmap.items()) and _automorphism_over(pres, vmap):
            return vmap
    return None


def verify_case_invariants(rec: CaseRecord) -> List[Check]:
    checks = []
    q = rec.quiver

    def add(name, ok, detail=""):
        checks.append(Check(name, bool(ok), detail))

    want = sorted(v for o in rec.orbits for v in o.vertices)
    add("vertex count = local systems", sorted(q.vertices) == want,
        f"{len(q.vertices)} vertices, {len(want)} (orbit, local system) pairs")
    add("vertex labels match orbits",
        all(rec.orbit(o).vertices[k] == v for v, (o, k) in rec.vertex_orbit.items()))
    try:
        cartan = q.cartan_matrix()
        add("finite algebra", True)
        add("Cartan entries <= 1", all(x <= 1 for row in cartan for x in row))
        add("Cartan diagonal = 1", all(cartan[i][i] == 1 for i in range(len(cartan))))
    except ValueError as exc:
        add("finite algebra", False, str(exc))
    add("self-opposite", find_isomorphism(q, opposite(q)) is not None
        and _self_opposite_identity(q))

    if rec.f_degree is not None and rec.b_roots:
        add("distinct roots = deg f", len(set(rec.b_roots)) == rec.f_degree,
            f"{len(set(rec.b_roots))} roots, deg f = {rec.f_degree}")
        add("roots negative", all(r < 0 for r in rec.b_roots))

    labels = [o.label for o in rec.orbits]
    le = set(rec.closure) | {(a, a) for a in labels}
    antisym = all(not ((a, b) in le and (b, a) in le) for a, b in rec.closure)
    trans = all((a, c) in le for a, b in le for b2, c in le if b == b2)
    add("closure is a partial order", antisym and trans)
    codim = {o.label: o.codim for o in rec.orbits}
    add("codim drops along closure", all(codim[a] > codim[b] for a, b in rec.closure))
    add("open orbit codim 0", rec.open_orbit.codim == 0
        and sum(1 for o in rec.orbits if o.codim == 0) == 1)
    add("zero orbit codim = dim X", rec.zero_orbit.codim == rec.dim_X)
    add("zero orbit below all", all((rec.zero_orbit.label, b) in le for b in labels))
    add("open orbit above all", all((a, rec.open_orbit.label) in le for a in labels))

    if rec.family in ("gl_m_gl_n", "skew", "symmetric", "sp2n_gl2", "sp2n_gl3",
                      "sp4_glm", "sp4_gl4"):
        add("codims match formula", all(
            orbit_codim(rec.family, o.label, **rec.params) == o.codim for o in rec.orbits))

    if rec.fourier:
        f = rec.fourier
        add("fourier is involutive", all(f.get(f[v]) == v for v in f)
            and set(f.values()) <= set(q.vertices))
        if rec.fourier_partial:
            add("fourier extends to a quiver automorphism", extend_to_automorphism(q, f) is not None)
        else:
            add("fourier is a quiver automorphism",
                set(f) == set(q.vertices) and _automorphism_over(q, f))
        pya = pyasetskii(rec)
        add("pyasetskii swaps zero and open orbits",
            pya.get(rec.zero_orbit.label) == rec.open_orbit.label
            and pya.get(rec.open_orbit.label) == rec.zero_orbit.label)

    if rec.family == "gl_m_gl_n" and rec.params["m"] == rec.params["n"]:
        add("quiver isomorphic to doubled chain",
            find_isomorphism(q, make_AA(rec.params["n"] + 1)) is not None)
    return checks
