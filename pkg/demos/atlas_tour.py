"""A walk through the atlas of prehomogeneous spaces.

Each case record stores the orbit quiver, codimensions, the b-function roots
when the space has a semi-invariant, and the Fourier involution on orbits.
"""
from quiveratlas import make_EE6
from quiveratlas.atlas import (fourier_permutation, get_case, list_cases, parameter_grid,
                               projective_cover_dims, verify_case_invariants)
from quiveratlas.quiver import find_isomorphism

for tmpl in list_cases():
    print(tmpl.family, tmpl.params)

rec = get_case("sp2n_gl3", n=3)
for o in rec.orbits:
    print(o.label, "codim", o.codim)
print("fourier:", fourier_permutation(rec))
print("isolated:", rec.isolated_vertices())

sym = get_case("symmetric", n=3)
print(sym.name, "components:", sym.components(), "roots:", [str(r) for r in sym.b_roots])

# sp_4 x GL_4 has the same orbit quiver as EE6
print("sp4_gl4 ~ EE6:", find_isomorphism(get_case("sp4_gl4").quiver, make_EE6()) is not None)

# Projective cover of a simple at one orbit
print(projective_cover_dims(get_case("sp2n_gl3", n=2), "(2,2)"))

# The full grid, invariants checked case by case
bad = 0
grid = parameter_grid(2, 6)
for fam, params in grid:
    bad += sum(not c.ok for c in verify_case_invariants(get_case(fam, **params)))
print(len(grid), "cases,", bad, "failed checks")
