"""Moment map symbols and the m2 certificate.

For a linear action G on V the moment map sends (x, y) in V + V* to the
functional xi -> <xi x, y>. At a generic point its Jacobian rank matches the
rank of the orbit tangent map.
"""
from quiveratlas.moment import (gl_gl_action, jacobian_rank, lemma_m2_check, lemma_m2_data,
                                moment_polys, moment_system, orbit_tangent_rank, rank_sweep,
                                sample_points, sp_gl_action)

sys = moment_system(gl_gl_action(2, 2))
for p in moment_polys(sys)[:3]:
    print(p)

pt = sample_points(2, 2, count=1, seed=3)[0]
print("jacobian rank", jacobian_rank(sys, pt), "tangent rank", orbit_tangent_rank(sys, pt))

sp = moment_system(sp_gl_action(2, 3))
print(len(moment_polys(sp)), "symbols for sp_4 x gl_3")

for name, k, a, b in rank_sweep(count=3, seed=1):
    print(name, k, a, b)

gens, h, v = lemma_m2_data()
print(len(gens), "generators, h =", h)
print({k: x for k, x in v.items() if x})
rep = lemma_m2_check()
print("generators vanish:", rep.generators_vanish, " h(v) =", rep.h_value)
