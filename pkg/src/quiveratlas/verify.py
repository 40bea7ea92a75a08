"""Self-verification suites; each returns a list of :class:`Check` entries."""

from __future__ import annotations

import random
from itertools import combinations
from typing import Callable, Dict, List

from .atlas import Check, get_case, parameter_grid, verify_case_invariants
from .moment import lemma_m2_check, rank_sweep
from .quiver import (is_self_opposite, make_AA, make_AA3c, make_B8, make_B8_opposite,
                     make_EE6, opposite)
from .reps import (all_string_specs, end_algebra, is_indecomposable, is_isomorphic,
                   string_module, validate_rep)
from .reptype import finite_type_check, is_psd, radical_lattice, tits_form

B8_RADICAL = [1, 3, 4, 3, 1, 2, 1, 1]


def quiver_suite() -> List[Check]:
    out = []
    builders = [(f"AA:{n}", make_AA(n)) for n in range(1, 7)] + [
        ("AA3c", make_AA3c()), ("EE6", make_EE6()), ("B8", make_B8()), ("B8op", make_B8_opposite())]
    for name, p in builders:
        rel_ok = all(len(r) >= 2 for r in p.relations)
        c = p.cartan_matrix()
        paths = p.nonzero_paths()
        words = {(q.source, q.arrows) for q in paths}
        closed = all((p.quiver.arrow(q.arrows[i]).tail, q.arrows[i:j]) in words
                     for q in paths for i in range(len(q.arrows))
                     for j in range(i + 1, len(q.arrows) + 1))
        out.append(Check(f"{name}: relations valid", rel_ok))
        out.append(Check(f"{name}: Cartan diagonal 1", all(c[i][i] == 1 for i in range(len(c)))))
        out.append(Check(f"{name}: Cartan entries <= 1", all(x <= 1 for r in c for x in r)))
        out.append(Check(f"{name}: nonzero paths closed under subwords", closed))
        out.append(Check(f"{name}: opposite is an involution", opposite(opposite(p)) == p))
    out.append(Check("EE6 self-opposite", is_self_opposite(make_EE6())))
    return out


def reps_suite(max_validate: int = 8, max_indec: int = 5, max_pairwise: int = 4) -> List[Check]:
    out = []
    ok = all(validate_rep(string_module(s)).ok
             for n in range(1, max_validate + 1) for s in all_string_specs(n))
    out.append(Check(f"string modules valid (n <= {max_validate})", ok))
    ok = all(is_indecomposable(string_module(s)) and len(end_algebra(string_module(s))) == 1
             for n in range(1, max_indec + 1) for s in all_string_specs(n))
    out.append(Check(f"string modules indecomposable with End = Q (n <= {max_indec})", ok))
    for n in range(1, max_pairwise + 1):
        mods = [string_module(s) for s in all_string_specs(n)]
        ok = all(not is_isomorphic(a, b) for a, b in combinations(mods, 2))
        out.append(Check(f"string modules pairwise non-isomorphic (n = {n})", ok))
    return out


def tits_suite(samples: int = 1000, seed: int = 2024) -> List[Check]:
    q = tits_form(make_B8())
    out = [Check("B8 Tits form is PSD", is_psd(q)),
           Check("B8 radical lattice", radical_lattice(q) == [B8_RADICAL], str(radical_lattice(q)))]
    out.append(Check("q vanishes on the radical",
                     all(q([k * x for x in B8_RADICAL]) == 0 for k in range(-3, 4))))
    vecs = off_radical_vectors(samples, seed)
    out.append(Check(f"q > 0 on {samples} off-radical vectors", all(q(v) > 0 for v in vecs)))
    return out


def off_radical_vectors(count: int = 1000, seed: int = 2024) -> List[List[int]]:
    """Deterministic integer vectors in [-5, 5]^8 that are not multiples of the radical."""
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        v = [rng.randint(-5, 5) for _ in range(8)]
        if any(v[i] * B8_RADICAL[j] != v[j] * B8_RADICAL[i] for i in range(8) for j in range(8)):
            out.append(v)
    return out


def census_suite() -> List[Check]:
    out = []
    for n, p in ((2, 2), (3, 2), (3, 3), (4, 2)):
        r = finite_type_check(n, p)
        out.append(Check(f"AA_{n} over F_{p}: indecomposables are strings", r.ok,
                         f"{r.indecomposables} found, {r.matched} matched"))
    return out


def atlas_suite(lo: int = 2, hi: int = 6) -> List[Check]:
    out = []
    for fam, params in parameter_grid(lo, hi):
        rec = get_case(fam, **params)
        for c in verify_case_invariants(rec):
            out.append(Check(f"{rec.name}: {c.name}", c.ok, c.detail))
    return out


def moment_suite() -> List[Check]:
    sweep = rank_sweep()
    out = [Check(f"{name} point {k}: jacobian rank = orbit rank", a == b, f"{a} vs {b}")
           for name, k, a, b in sweep]
    rep = lemma_m2_check()
    out.append(Check("lemma-m2 certificate", rep.ok, f"h(v) = {rep.h_value}"))
    return out


SUITES: Dict[str, Callable[[], List[Check]]] = {
    "quiver": quiver_suite,
    "reps": reps_suite,
    "tits": tits_suite,
    "census": census_suite,
    "atlas": atlas_suite,
    "moment": moment_suite,
}


def run_all() -> Dict[str, List[Check]]:
    return {name: fn() for name, fn in SUITES.items()}
