"""String modules of the doubled chain and a finite-field census.

Every indecomposable over the doubled A_n chain (relations ab = ba = 0) is a
string module I_{i,j}^sigma. We build a few by hand, decompose a direct sum,
then count isomorphism classes over F_2 and check each indecomposable lifts to
a string.
"""
from quiveratlas import make_AA
from quiveratlas.reps import (StringSpec, all_string_specs, classify_AA, decompose, direct_sum,
                              hom_dim, is_indecomposable, string_module)
from quiveratlas.reptype import binary_dim_vectors, census, census_many, lift_to_Q

AA3 = make_AA(3)
print(AA3.quiver.vertices, len(AA3.quiver.arrows), "arrows")

# The strings on three vertices
specs = all_string_specs(3)
print(len(specs), "strings:", ", ".join(map(str, specs)))

M = string_module(StringSpec(3, 1, 3, "+-"))
print(M.dims, is_indecomposable(M))

# Hom between two strings
N = string_module(StringSpec(3, 2, 3, "-"))
print("dim Hom(M, N) =", hom_dim(M, N), " dim Hom(N, M) =", hom_dim(N, M))

# Krull-Schmidt picks the summands back out
S = direct_sum([M, N, string_module(StringSpec(3, 2, 2, ""))])
print("summands:", [str(s) for s in classify_AA(S)])
print(len(decompose(S).summands), "indecomposable summands")

# Small census: dimension vector (1, 1) on AA2
r = census(make_AA(2), (1, 1), 2)
for line in r.lines():
    print(line)

# Binary census over F_2, each indecomposable lifted to Q and named
reports = census_many(AA3, binary_dim_vectors(3), 2)
indec = [V for rep in reports for V in rep.indecomposables]
names = sorted(str(classify_AA(lift_to_Q(V))[0]) for V in indec)
print(len(indec), "indecomposables:", names)
