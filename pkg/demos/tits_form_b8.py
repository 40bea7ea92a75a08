"""Tits form of the B8 presentation.

q(x) = sum x_i^2 - sum over arrows + sum over relations. For B8 the form is
positive semidefinite with a rank one radical.
"""
import random

from quiveratlas import make_B8
from quiveratlas.reptype import is_psd, radical_lattice, tits_form

pres = make_B8()
q = tits_form(pres)
print(q)

print("psd:", is_psd(q))
rad = radical_lattice(q)
print("radical basis:", rad)

h = rad[0]
print("q(h) =", q(h), " q(2h) =", q([2 * x for x in h]))

# Off the radical line q is strictly positive
rng = random.Random(0)
vals = []
for _ in range(200):
    v = [rng.randint(-3, 3) for _ in range(8)]
    if any(v):
        vals.append(q(v))
print("min q over 200 random vectors:", min(vals))

# Gram matrix, for comparison with other tools
for row in q.gram():
    print(row)
