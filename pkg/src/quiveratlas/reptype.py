"""Representation type: Tits forms and a brute-force census over finite fields."""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field as dc_field
from fractions import Fraction
from itertools import product
from typing import Dict, List, Sequence, Tuple

from . import linalg as la
from .linalg import GF, QQ
from .quiver import QuiverPresentation, make_AA
from .reps import (Rep, change_field, classify_AA, indecomposability, is_isomorphic,
                   rank_invariants, validate_rep)

# -- Tits form ----------------------------------------------------------------


class TitsForm:
    """Integral quadratic form ``q(x) = sum_{i<=j} c_ij x_i x_j`` on vertex space.

    ``coeffs`` maps index pairs ``(i, j)`` with ``i <= j`` to integers.
    """

    def __init__(self, vertices: Sequence, coeffs: Dict[Tuple[int, int], int]):
        self.vertices = tuple(vertices)
        self.coeffs = {k: v for k, v in sorted(coeffs.items()) if v}

    def __call__(self, x: Sequence[int]) -> int:
        return sum(c * x[i] * x[j] for (i, j), c in self.coeffs.items())

    value = __call__

    def coefficient(self, u, v) -> int:
        i, j = sorted((self.vertices.index(u), self.vertices.index(v)))
        return self.coeffs.get((i, j), 0)

    def gram(self) -> List[List[int]]:
        """Symmetric integer matrix ``G`` with ``x^T G x = 2 q(x)``."""
        n = len(self.vertices)
        g = [[0] * n for _ in range(n)]
        for (i, j), c in self.coeffs.items():
            if i == j:
                g[i][i] += 2 * c
            else:
                g[i][j] += c
                g[j][i] += c
        return g

    def __eq__(self, other):
        return isinstance(other, TitsForm) and (self.vertices, self.coeffs) == (
            other.vertices, other.coeffs)

    def __str__(self):
        terms = []
        for (i, j), c in self.coeffs.items():
            mono = f"x{self.vertices[i]}^2" if i == j else f"x{self.vertices[i]}*x{self.vertices[j]}"
            sign = "-" if c < 0 else "+"
            mag = "" if abs(c) == 1 else f"{abs(c)}*"
            terms.append(f"{sign} {mag}{mono}")
        s = " ".join(terms)
        return s[2:] if s.startswith("+ ") else (s or "0")


def tits_form(pres: QuiverPresentation) -> TitsForm:
    """Sum of squares, minus one term per arrow, plus one term per relation."""
    idx = pres.quiver.index
    coeffs: Dict[Tuple[int, int], int] = {}

    def bump(u, v, c):
        key = tuple(sorted((idx(u), idx(v))))
        coeffs[key] = coeffs.get(key, 0) + c

    for v in pres.vertices:
        bump(v, v, 1)
    for a in pres.arrows:
        bump(a.tail, a.head, -1)
    for p in pres.relation_paths():
        bump(p.source, p.target, 1)
    return TitsForm(pres.vertices, coeffs)


def is_psd(form: TitsForm) -> bool:
    """Exact symmetric pivoting on the Gram matrix."""
    g = [[Fraction(x) for x in row] for row in form.gram()]
    n = len(g)
    for k in range(n):
        piv = g[k][k]
        if piv < 0:
            return False
        if piv == 0:
            if any(g[k][j] != 0 for j in range(k + 1, n)):
                return False
            continue
        for i in range(k + 1, n):
            if g[i][k] == 0:
                continue
            f = g[i][k] / piv
            for j in range(k + 1, n):
                g[i][j] -= f * g[k][j]
    return True


def radical_lattice(form: TitsForm) -> List[List[int]]:
    """Hermite-reduced integer basis of the kernel of the Gram matrix."""
    return la.integer_kernel(form.gram(), len(form.vertices))


# -- census -------------------------------------------------------------------

MAX_CELLS = 24
CENSUS_PRIMES = (2, 3, 5, 7)


class BudgetExceeded(ValueError):
    pass


@dataclass
class CensusReport:
    """Isomorphism classes of representations with a fixed dimension vector."""

    presentation: QuiverPresentation
    dims: tuple
    p: int
    classes: List[Rep] = dc_field(default_factory=list)
    indecomposables: List[Rep] = dc_field(default_factory=list)
    assignments: int = 0

    @property
    def count(self) -> int:
        return len(self.indecomposables)

    @property
    def total_classes(self) -> int:
        return len(self.classes)

    def lines(self) -> List[str]:
        out = [f"census dims={self.dims} p={self.p} assignments={self.assignments} "
               f"classes={self.total_classes} indecomposable={self.count}"]
        for k, r in enumerate(self.indecomposables):
            mats = " ".join(f"{a}={[list(map(int, row)) for row in m]}"
                            for a, m in r.maps.items() if m and m[0])
            out.append(f"[{k}] dims={r.dim_vector} {mats}".rstrip())
        return out

    def to_dict(self) -> dict:
        return {
            "quiver": self.presentation.to_dict(),
            "dims": list(self.dims), "p": self.p, "assignments": self.assignments,
            "total_classes": self.total_classes, "indecomposable_count": self.count,
            "indecomposables": [r.to_dict(inline_quiver=False) for r in self.indecomposables],
        }


def _cells(pres, dims):
    return [(a.id, r, c) for a in pres.arrows
            for r in range(dims[a.head]) for c in range(dims[a.tail])]


def enumerate_reps(pres: QuiverPresentation, dims: Dict, p: int):
    """Yield all relation-respecting representations in lexicographic order of entries."""
    F = GF(p)
    cells = _cells(pres, dims)
    if len(cells) > MAX_CELLS:
        raise BudgetExceeded(f"{len(cells)} matrix entries exceed the budget of {MAX_CELLS}")
    # a relation can be tested once the last of its cells has been assigned
    last_cell = {}
    pos = {}
    for k, (aid, _, _) in enumerate(cells):
        pos[aid] = k
    for rel in pres.relations:
        if all(dims[pres.quiver.arrow(a).head] and dims[pres.quiver.arrow(a).tail] for a in rel):
            k = max(pos[a] for a in rel)
            last_cell.setdefault(k, []).append(pres.path(*rel))
    values = [0] * len(cells)

    def build():
        maps = {a.id: [[0] * dims[a.tail] for _ in range(dims[a.head])] for a in pres.arrows}
        for (aid, r, c), x in zip(cells, values):
            maps[aid][r][c] = x
        return Rep(pres, dims, maps, F)

    def rec(k):
        if k == len(cells):
            yield build()
            return
        for x in range(p):
            values[k] = x
            if k in last_cell:
                partial = build()
                if any(not la.is_zero(partial.path_matrix(path)) for path in last_cell[k]):
                    continue
            yield from rec(k + 1)
        values[k] = 0

    if not cells:
        yield build()
        return
    yield from rec(0)


def census(pres: QuiverPresentation, dims, p: int, strategy: str = "ranks") -> CensusReport:
    """Count isomorphism classes (and indecomposable ones) at a dimension vector over F_p.

    ``strategy`` selects the bucketing invariant: ``"ranks"`` uses ranks of all
    nonzero path composites, ``"reversed"`` the same list reversed, ``"none"``
    puts everything in one bucket.
    """
    if p not in CENSUS_PRIMES:
        raise ValueError(f"census prime must be one of {CENSUS_PRIMES}")
    if not isinstance(dims, dict):
        dims = dict(zip(pres.vertices, dims))
    dims = {v: int(dims.get(v, 0)) for v in pres.vertices}
    report = CensusReport(pres, tuple(dims[v] for v in pres.vertices), p)
    buckets: Dict[tuple, List[Rep]] = {}
    for V in enumerate_reps(pres, dims, p):
        report.assignments += 1
        if strategy == "ranks":
            key = rank_invariants(V)
        elif strategy == "reversed":
            key = tuple(reversed(rank_invariants(V)))
        elif strategy == "none":
            key = ()
        else:
            raise ValueError(f"unknown strategy {strategy!r}")
        reps = buckets.setdefault(key, [])
        if not any(is_isomorphic(V, W) for W in reps):
            reps.append(V)
            report.classes.append(V)
    if sum(dims.values()):
        report.indecomposables = [V for V in report.classes
                                  if indecomposability(V) == "indecomposable"]
    return report


def _census_job(args):
    pres, dims, p, strategy = args
    return census(pres, dims, p, strategy)


def census_many(pres: QuiverPresentation, dim_vectors: Sequence, p: int,
                strategy: str = "ranks", workers: int = 1) -> List[CensusReport]:
    """Census at several dimension vectors; results come back in input order."""
    jobs = [(pres, tuple(d), p, strategy) for d in dim_vectors]
    if workers <= 1:
        return [_census_job(j) for j in jobs]
    with ProcessPoolExecutor(max_workers=workers) as ex:
        return list(ex.map(_census_job, jobs))


def binary_dim_vectors(n: int) -> List[tuple]:
    return [d for d in product((0, 1), repeat=n) if any(d)]


def lift_to_Q(V: Rep):
    """Lift a representation with 0/1 entries to the rationals; None if not possible."""
    if any(x not in (0, 1) for m in V.maps.values() for row in m for x in row):
        return None
    W = change_field(V, QQ)
    return W if validate_rep(W).ok else None


@dataclass
class FiniteTypeReport:
    n: int
    p: int
    indecomposables: int
    matched: int
    spot_indecomposables: int
    ok: bool


def finite_type_check(n: int, p: int, workers: int = 1) -> FiniteTypeReport:
    """Census the doubled chain on ``n`` vertices and match every indecomposable to a string."""
    if not 1 <= n <= 4:
        raise ValueError("finite_type_check supports 1 <= n <= 4")
    if p not in CENSUS_PRIMES:
        raise ValueError(f"census prime must be one of {CENSUS_PRIMES}")
    pres = make_AA(n)
    reports = census_many(pres, binary_dim_vectors(n), p, workers=workers)
    found = matched = 0
    for rep in reports:
        for V in rep.indecomposables:
            found += 1
            W = lift_to_Q(V)
            if W is not None and len(classify_AA(W)) == 1:
                matched += 1
    spot = [2] + [1] + [0] * (n - 2) if n >= 2 else [2]
    spot_report = census(pres, spot, p)
    expected = sum((n - l) * 2 ** l for l in range(n))
    ok = (matched == found == expected and spot_report.count == 0)
    return FiniteTypeReport(n, p, found, matched, spot_report.count, ok)
