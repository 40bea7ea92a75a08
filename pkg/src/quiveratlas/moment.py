"""Sparse rational polynomials and moment-map symbols of linear matrix actions.

A Lie algebra element ``xi = (A, B)`` acts on ``p x q`` matrices by
``xi.x = A x - x B``. Its symbol on the cotangent space is the bilinear
polynomial ``H_xi(x, y) = <xi.x, y>`` where ``y`` is the dual matrix.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, Iterable, List, Mapping, Sequence, Tuple

from . import linalg as la
from .linalg import QQ


def _vkey(v):
    return v if isinstance(v, tuple) else (v,)


class MultiPoly:
    """Polynomial over the rationals stored as ``{monomial: coefficient}``.

    A monomial is a tuple of ``(variable, exponent)`` pairs sorted by variable;
    zero coefficients are never stored.
    """

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping = None):
        clean = {}
        for mono, c in (terms or {}).items():
            c = Fraction(c)
            if c:
                mono = _normalize(mono)
                clean[mono] = clean.get(mono, Fraction(0)) + c
                if not clean[mono]:
                    del clean[mono]
        self.terms = clean

    @classmethod
    def const(cls, c) -> "MultiPoly":
        return cls({(): c})

    @classmethod
    def var(cls, name) -> "MultiPoly":
        return cls({((name, 1),): 1})

    def __add__(self, other):
        other = _lift(other)
        out = dict(self.terms)
        for m, c in other.terms.items():
            out[m] = out.get(m, 0) + c
        return MultiPoly(out)

    __radd__ = __add__

    def __neg__(self):
        return MultiPoly({m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-_lift(other))

    def __rsub__(self, other):
        return _lift(other) - self

    def __mul__(self, other):
        other = _lift(other)
        out: Dict[tuple, Fraction] = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = _mul_mono(m1, m2)
                out[m] = out.get(m, 0) + c1 * c2
        return MultiPoly(out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power")
        out = MultiPoly.const(1)
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = MultiPoly.const(other)
        return isinstance(other, MultiPoly) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __bool__(self):
        return bool(self.terms)

    def variables(self) -> List:
        return sorted({v for m in self.terms for v, _ in m}, key=_vkey)

    def degree(self) -> int:
        return max((sum(e for _, e in m) for m in self.terms), default=0)

    def diff(self, var) -> "MultiPoly":
        out = {}
        for m, c in self.terms.items():
            d = dict(m)
            e = d.get(var, 0)
            if not e:
                continue
            if e == 1:
                del d[var]
            else:
                d[var] = e - 1
            out[tuple(d.items())] = c * e
        return MultiPoly(out)

    def eval(self, point: Mapping) -> Fraction:
        total = Fraction(0)
        for m, c in self.terms.items():
            t = c
            for v, e in m:
                if v not in point:
                    raise ValueError(f"point does not assign variable {_vname(v)}")
                t *= Fraction(point[v]) ** e
            total += t
        return total

    __call__ = eval

    def __repr__(self):
        if not self.terms:
            return "0"
        parts = []
        for m in sorted(self.terms, key=lambda m: [(_vkey(v), -e) for v, e in m]):
            c = self.terms[m]
            mono = "*".join(_vname(v) + (f"^{e}" if e > 1 else "") for v, e in m)
            if not mono:
                parts.append(str(c))
            elif c == 1:
                parts.append(mono)
            elif c == -1:
                parts.append("-" + mono)
            else:
                parts.append(f"{c}*{mono}")
        return " + ".join(parts).replace("+ -", "- ")


def _vname(v) -> str:
    if isinstance(v, tuple) and len(v) == 3:
        return f"{v[0]}_{{{v[1]},{v[2]}}}"
    return str(v)


def _normalize(mono) -> tuple:
    d = {}
    for v, e in mono:
        if e:
            d[v] = d.get(v, 0) + e
    return tuple(sorted(d.items(), key=lambda t: _vkey(t[0])))


def _mul_mono(m1, m2) -> tuple:
    return _normalize(m1 + m2)


def _lift(x) -> MultiPoly:
    return x if isinstance(x, MultiPoly) else MultiPoly.const(x)


def evaluate(p: MultiPoly, point: Mapping) -> Fraction:
    return p.eval(point)


def xvar(i, j) -> MultiPoly:
    return MultiPoly.var(("x", i, j))


def yvar(i, j) -> MultiPoly:
    return MultiPoly.var(("y", i, j))


# -- linear actions -----------------------------------------------------------

def _unit(n, i, j):
    m = la.zeros(QQ, n, n)
    m[i][j] = Fraction(1)
    return m


def gl_basis(n: int) -> List[List[list]]:
    return [_unit(n, i, j) for i in range(n) for j in range(n)]


def standard_J(n: int) -> List[list]:
    """The skew form ``[[0, I_n], [-I_n, 0]]``."""
    J = la.zeros(QQ, 2 * n, 2 * n)
    for i in range(n):
        J[i][n + i] = Fraction(1)
        J[n + i][i] = Fraction(-1)
    return J


def sp_basis(n: int, J: List[list] = None) -> List[List[list]]:
    """Basis of ``{A : J A symmetric}`` (the symplectic Lie algebra of ``J``)."""
    J = J or standard_J(n)
    N = 2 * n
    # A is symplectic iff J A - (J A)^T = 0; solve the linear system in the entries of A.
    rows = []
    for r in range(N):
        for c in range(r + 1, N):
            row = [Fraction(0)] * (N * N)
            for k in range(N):
                row[k * N + c] += J[r][k]
                row[k * N + r] -= J[c][k]
            rows.append(row)
    return [[[v[i * N + j] for j in range(N)] for i in range(N)]
            for v in la.nullspace(QQ, rows, N * N)]


def is_symplectic(A, J) -> bool:
    JA = la.matmul(QQ, J, A)
    return JA == la.transpose(JA)


@dataclass
class LinearAction:
    """A Lie algebra acting on ``rows x cols`` matrices by ``x -> A x - x B``."""

    rows: int
    cols: int
    basis: List[Tuple[list, list]]
    name: str = ""
    J: list = None

    def __post_init__(self):
        p, q = self.rows, self.cols
        for A, B in self.basis:
            if len(A) != p or any(len(r) != p for r in A) or len(B) != q or any(len(r) != q for r in B):
                raise ValueError("basis element has the wrong shape")
            if self.J is not None and not is_symplectic(A, self.J):
                raise ValueError("basis element violates the symplectic constraint")
        flat = [[x for r in A for x in r] + [x for r in B for x in r] for A, B in self.basis]
        if flat and la.rank(QQ, flat) != len(flat):
            raise ValueError("basis elements are linearly dependent")

    @property
    def dim(self) -> int:
        return len(self.basis)

    def act(self, xi, x):
        A, B = xi
        return la.matsub(QQ, _mul(A, x, self.rows, self.rows, self.cols),
                         _mul(x, B, self.rows, self.cols, self.cols))

    def act_dual(self, xi, y):
        A, B = xi
        return la.matsub(QQ, _mul(la.transpose(A), y, self.rows, self.rows, self.cols),
                         _mul(y, la.transpose(B), self.rows, self.cols, self.cols))


def _mul(a, b, r, k, c):
    if r == 0 or c == 0 or k == 0:
        return la.zeros(QQ, r, c)
    return la.matmul(QQ, a, b)


def gl_gl_action(p: int, q: int) -> LinearAction:
    zp, zq = la.zeros(QQ, p, p), la.zeros(QQ, q, q)
    basis = [(E, zq) for E in gl_basis(p)] + [(zp, E) for E in gl_basis(q)]
    return LinearAction(p, q, basis, f"gl_{p} x gl_{q}")


def sp_gl_action(n: int, q: int, J=None) -> LinearAction:
    J = J or standard_J(n)
    zp, zq = la.zeros(QQ, 2 * n, 2 * n), la.zeros(QQ, q, q)
    basis = [(A, zq) for A in sp_basis(n, J)] + [(zp, E) for E in gl_basis(q)]
    return LinearAction(2 * n, q, basis, f"sp_{2 * n} x gl_{q}", J)


def zero_action(p: int, q: int) -> LinearAction:
    return LinearAction(p, q, [], "0")


@dataclass
class MomentSystem:
    action: LinearAction
    polys: List[MultiPoly] = field(default_factory=list)

    @property
    def variables(self) -> List[tuple]:
        p, q = self.action.rows, self.action.cols
        return ([("x", i, j) for i in range(1, p + 1) for j in range(1, q + 1)]
                + [("y", i, j) for i in range(1, p + 1) for j in range(1, q + 1)])


def moment_system(action: LinearAction) -> MomentSystem:
    return MomentSystem(action, [symbol(action, xi) for xi in action.basis])


def symbol(action: LinearAction, xi) -> MultiPoly:
    """``H_xi(x, y) = sum_ij (A x - x B)_ij y_ij`` as a polynomial."""
    A, B = xi
    p, q = action.rows, action.cols
    out = MultiPoly()
    for i in range(p):
        for j in range(q):
            entry = MultiPoly()
            for k in range(p):
                if A[i][k]:
                    entry = entry + A[i][k] * xvar(k + 1, j + 1)
            for k in range(q):
                if B[k][j]:
                    entry = entry - B[k][j] * xvar(i + 1, k + 1)
            if entry:
                out = out + entry * yvar(i + 1, j + 1)
    return out


def moment_polys(sys: MomentSystem) -> List[MultiPoly]:
    return list(sys.polys)


Point = Tuple[list, list]


def _as_assignment(sys: MomentSystem, point: Point) -> Dict:
    x, y = point
    p, q = sys.action.rows, sys.action.cols
    for m in (x, y):
        if len(m) != p or any(len(r) != q for r in m):
            raise ValueError(f"point matrices must be {p}x{q}")
    a = {}
    for i in range(p):
        for j in range(q):
            a[("x", i + 1, j + 1)] = Fraction(x[i][j])
            a[("y", i + 1, j + 1)] = Fraction(y[i][j])
    return a


def jacobian_rank(sys: MomentSystem, point: Point) -> int:
    """Rank of the gradients of all ``H_xi`` at ``(x, y)``."""
    a = _as_assignment(sys, point)
    vars_ = sys.variables
    rows = [[h.diff(v).eval(a) for v in vars_] for h in sys.polys]
    return la.rank(QQ, rows) if rows else 0


def orbit_tangent_rank(sys: MomentSystem, point: Point) -> int:
    """Rank of the span of ``(xi.x, -xi*.y)`` over the Lie algebra basis."""
    x, y = point
    _as_assignment(sys, point)
    x = [[Fraction(v) for v in r] for r in x]
    y = [[Fraction(v) for v in r] for r in y]
    act = sys.action
    rows = []
    for xi in act.basis:
        vx = act.act(xi, x)
        vy = act.act_dual(xi, y)
        rows.append([e for r in vx for e in r] + [-e for r in vy for e in r])
    return la.rank(QQ, rows) if rows else 0


def sample_points(p: int, q: int, count: int = 20, seed: int = 0) -> List[Point]:
    """Deterministic rational points, mixing generic, low-rank and sparse ones."""
    rng = random.Random(seed)
    vals = [Fraction(a, b) for a in range(-3, 4) for b in (1, 2, 3)]

    def generic():
        return [[rng.choice(vals) for _ in range(q)] for _ in range(p)]

    def rank_one():
        u = [rng.choice(vals) for _ in range(p)]
        v = [rng.choice(vals) for _ in range(q)]
        return [[a * b for b in v] for a in u]

    def sparse():
        m = [[Fraction(0)] * q for _ in range(p)]
        for _ in range(2):
            m[rng.randrange(p)][rng.randrange(q)] = rng.choice(vals[1:]) or Fraction(1)
        return m

    zero = [[Fraction(0)] * q for _ in range(p)]
    makers = [(generic, generic), (rank_one, generic), (generic, rank_one),
              (rank_one, rank_one), (sparse, sparse), (sparse, lambda: zero)]
    out = []
    for k in range(count):
        fx, fy = makers[k % len(makers)]
        out.append((fx(), fy()))
    return out


# -- the P_(2,2) certificate --------------------------------------------------

def _g(i, j) -> MultiPoly:
    """Symbol of ``sum_k x_(i,k) dx_(j,k)`` on 4 x 3 matrices."""
    return sum((xvar(i, k) * yvar(j, k) for k in range(1, 4)), MultiPoly())


def _h(i, j) -> MultiPoly:
    """Symbol of ``sum_l x_(l,i) dx_(l,j)`` on 4 x 3 matrices."""
    return sum((xvar(l, i) * yvar(l, j) for l in range(1, 5)), MultiPoly())


def lemma_m2_data():
    """Generator symbols, the certifying polynomial ``h`` and the point ``v``.

    Returns ``(generators, h, v)`` where ``generators`` is a list of
    ``(name, MultiPoly)`` and ``v`` assigns every ``x``/``y`` variable of the
    4 x 3 space.
    """
    g, hh = _g, _h
    gens = [
        ("g11-g33", g(1, 1) - g(3, 3)), ("g12-g43", g(1, 2) - g(4, 3)),
        ("g21-g34", g(2, 1) - g(3, 4)), ("g22-g44", g(2, 2) - g(4, 4)),
        ("g14+g23", g(1, 4) + g(2, 3)), ("g13", g(1, 3)), ("g24", g(2, 4)),
        ("g31", g(3, 1)), ("g32+g41", g(3, 2) + g(4, 1)), ("g42", g(4, 2)),
        ("h11+2", hh(1, 1)), ("h21", hh(2, 1)), ("h31", hh(3, 1)), ("h22", hh(2, 2)),
        ("h33", hh(3, 3)), ("h23", hh(2, 3)), ("h32", hh(3, 2)),
        ("h13^3", hh(1, 3) ** 3), ("h12^3", hh(1, 2) ** 3),
    ]
    x, y = xvar, yvar
    h = (x(2, 1) * y(2, 3) * y(3, 2) - x(2, 1) * y(2, 2) * y(3, 3)
         - x(1, 1) * y(2, 3) * y(4, 2) + x(1, 1) * y(2, 2) * y(4, 3)
         - x(4, 1) * y(3, 3) * y(4, 2) + x(4, 1) * y(3, 2) * y(4, 3))
    vx = [[1, 0, 0], [0, 0, 0], [0, 0, 0], [0, 0, 0]]
    vy = [[0, 0, 0], [0, 1, 0], [0, 0, 0], [0, 0, 1]]
    v = {}
    for i in range(4):
        for j in range(3):
            v[("x", i + 1, j + 1)] = Fraction(vx[i][j])
            v[("y", i + 1, j + 1)] = Fraction(vy[i][j])
    return gens, h, v


def lemma_m2_lie_elements() -> List[list]:
    """The 4x4 matrices ``A`` behind the ``g`` generators (``g_(i,j)`` is ``E_(j,i)``)."""
    def E(i, j):
        return _unit(4, j - 1, i - 1)

    def add(a, b, s=1):
        return [[x + s * y for x, y in zip(r, t)] for r, t in zip(a, b)]

    return [add(E(1, 1), E(3, 3), -1), add(E(1, 2), E(4, 3), -1), add(E(2, 1), E(3, 4), -1),
            add(E(2, 2), E(4, 4), -1), add(E(1, 4), E(2, 3)), E(1, 3), E(2, 4), E(3, 1),
            add(E(3, 2), E(4, 1)), E(4, 2)]


@dataclass
class LemmaM2Report:
    values: Dict[str, Fraction]
    h_value: Fraction
    spans_sp4: bool

    @property
    def generators_vanish(self) -> bool:
        return all(v == 0 for v in self.values.values())

    @property
    def ok(self) -> bool:
        return self.generators_vanish and self.h_value != 0 and self.spans_sp4

    def lines(self) -> List[str]:
        out = [f"{name} (v) = {val}" for name, val in self.values.items()]
        out.append(f"generators vanish at v: {'yes' if self.generators_vanish else 'no'}")
        out.append(f"g-generators span sp_4 for J = [[0,I],[-I,0]]: "
                   f"{'yes' if self.spans_sp4 else 'no'}")
        out.append(f"h(v) = {self.h_value}")
        out.append("PASS" if self.ok else "FAIL")
        return out

    def to_dict(self) -> dict:
        return {"values": {k: str(v) for k, v in self.values.items()},
                "h_value": str(self.h_value), "generators_vanish": self.generators_vanish,
                "spans_sp4": self.spans_sp4, "ok": self.ok}


def lemma_m2_check() -> LemmaM2Report:
    gens, h, v = lemma_m2_data()
    values = {name: p.eval(v) for name, p in gens}
    listing = [[x for r in A for x in r] for A in lemma_m2_lie_elements()]
    sp4 = [[x for r in A for x in r] for A in sp_basis(2)]
    spans = (la.rank(QQ, listing) == len(listing) == len(sp4)
             and la.rank(QQ, listing + sp4) == len(sp4))
    return LemmaM2Report(values, h.eval(v), spans)


def rank_sweep(count: int = 20, seed: int = 0) -> List[Tuple[str, int, int, int]]:
    """``(action, point index, jacobian rank, orbit rank)`` over the standard actions."""
    out = []
    for act, (p, q) in ((gl_gl_action(2, 2), (2, 2)), (gl_gl_action(2, 3), (2, 3)),
                        (sp_gl_action(2, 3), (4, 3))):
        sys = moment_system(act)
        for k, pt in enumerate(sample_points(p, q, count, seed)):
            out.append((act.name, k, jacobian_rank(sys, pt), orbit_tangent_rank(sys, pt)))
    return out
