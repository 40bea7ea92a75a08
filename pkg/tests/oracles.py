"""Naive reference computations used to freeze expected values.

Nothing here imports the library's linear algebra or isomorphism machinery:
orbits are found by applying every group element, indecomposability by listing
every endomorphism over F_p, and paths by enumerating words.
"""

from itertools import product


def mat_mul(a, b, p):
    n, k = len(a), len(b)
    m = len(b[0]) if b else 0
    return tuple(tuple(sum(a[i][t] * b[t][j] for t in range(k)) % p for j in range(m))
                 for i in range(n))


def all_matrices(r, c, p):
    for entries in product(range(p), repeat=r * c):
        yield tuple(tuple(entries[i * c:(i + 1) * c]) for i in range(r))


def _det(m, p):
    n = len(m)
    if n == 0:
        return 1
    if n == 1:
        return m[0][0] % p
    return sum((-1) ** j * m[0][j] * _det(tuple(row[:j] + row[j + 1:] for row in m[1:]), p)
               for j in range(n)) % p


def _inverse(m, p):
    n = len(m)
    for cand in all_matrices(n, n, p):
        if mat_mul(m, cand, p) == tuple(tuple(int(i == j) for j in range(n)) for i in range(n)):
            return cand
    raise ValueError("singular")


def general_linear(n, p):
    return [g for g in all_matrices(n, n, p) if _det(g, p) != 0]


def words(arrows, relations, max_len):
    """All composable arrow words avoiding relation subwords, length <= max_len.

    ``arrows``: dict id -> (tail, head); a word lists arrows in the order traversed.
    """
    rels = [tuple(r) for r in relations]
    out = []

    def bad(w):
        return any(w[i:i + len(r)] == r for r in rels for i in range(len(w) - len(r) + 1))

    frontier = [(a,) for a in arrows]
    for _ in range(max_len):
        frontier = [w for w in frontier if not bad(w)]
        out.extend(frontier)
        frontier = [w + (b,) for w in frontier for b in arrows
                    if arrows[w[-1]][1] == arrows[b][0]]
    return out


def cartan(vertices, arrows, relations, max_len):
    idx = {v: i for i, v in enumerate(vertices)}
    c = [[int(i == j) for j in range(len(vertices))] for i in range(len(vertices))]
    for w in words(arrows, relations, max_len):
        c[idx[arrows[w[0]][0]]][idx[arrows[w[-1]][1]]] += 1
    return c


def rep_space(vertices, arrows, relations, dims, p):
    """All relation-satisfying assignments, as dicts arrow -> matrix over range(p)."""
    ids = list(arrows)
    shapes = [(dims[arrows[a][1]], dims[arrows[a][0]]) for a in ids]
    out = []
    for mats in product(*(list(all_matrices(r, c, p)) for r, c in shapes)):
        rep = dict(zip(ids, mats))
        ok = True
        for rel in relations:
            src = arrows[rel[0]][0]
            cur = tuple(tuple(int(i == j) for j in range(dims[src])) for i in range(dims[src]))
            for a in rel:
                cur = mat_mul(rep[a], cur, p) if cur else cur
            if any(any(row) for row in cur):
                ok = False
                break
        if ok:
            out.append(rep)
    return out


def _key(rep):
    return tuple(sorted(rep.items()))


def orbits(vertices, arrows, relations, dims, p):
    """Orbits of prod GL(d_v) acting by g_head M g_tail^-1, as lists of reps."""
    space = rep_space(vertices, arrows, relations, dims, p)
    groups = [general_linear(dims[v], p) for v in vertices]
    inv = {}
    seen, result = set(), []
    for rep in space:
        if _key(rep) in seen:
            continue
        orbit = set()
        for gs in product(*groups):
            g = dict(zip(vertices, gs))
            img = {}
            for a, (t, h) in arrows.items():
                if dims[t] == 0 or dims[h] == 0:
                    img[a] = rep[a]
                    continue
                gt = g[t]
                if gt not in inv:
                    inv[gt] = _inverse(gt, p)
                img[a] = mat_mul(mat_mul(g[h], rep[a], p), inv[gt], p)
            orbit.add(_key(img))
        seen |= orbit
        result.append(rep)
    return result


def endomorphisms(vertices, arrows, dims, rep, p):
    """Every tuple (phi_v) with phi_head M_a = M_a phi_tail."""
    spaces = [list(all_matrices(dims[v], dims[v], p)) for v in vertices]
    out = []
    for phis in product(*spaces):
        phi = dict(zip(vertices, phis))
        if all(dims[t] == 0 or dims[h] == 0
               or mat_mul(phi[h], rep[a], p) == mat_mul(rep[a], phi[t], p)
               for a, (t, h) in arrows.items()):
            out.append(phi)
    return out


def is_indecomposable(vertices, arrows, dims, rep, p):
    if sum(dims.values()) == 0:
        return False
    zero = {v: tuple(tuple(0 for _ in range(dims[v])) for _ in range(dims[v])) for v in vertices}
    one = {v: tuple(tuple(int(i == j) for j in range(dims[v])) for i in range(dims[v]))
           for v in vertices}
    for phi in endomorphisms(vertices, arrows, dims, rep, p):
        if phi in (zero, one):
            continue
        if all(mat_mul(phi[v], phi[v], p) == phi[v] for v in vertices if dims[v]):
            return False
    return True


def census(vertices, arrows, relations, dims, p):
    """(number of classes, number of indecomposable classes)."""
    reps = orbits(vertices, arrows, relations, dims, p)
    indec = sum(is_indecomposable(vertices, arrows, dims, r, p) for r in reps)
    return len(reps), indec


def doubled_chain(n):
    vertices = list(range(1, n + 1))
    arrows = {}
    for i in range(1, n):
        arrows[f"a{i}"] = (i, i + 1)
        arrows[f"b{i}"] = (i + 1, i)
    relations = [(f"a{i}", f"b{i}") for i in range(1, n)] + \
                [(f"b{i}", f"a{i}") for i in range(1, n)]
    return vertices, arrows, relations
