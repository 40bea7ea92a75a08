"""Finite quivers with monomial relations.

A :class:`QuiverPresentation` is a quiver together with a set of paths that are
declared zero. All relations are monomial, so a path is zero exactly when it
contains one of them as a contiguous subword, and the nonzero paths form a
basis of the quiver algebra.
"""

from __future__ import annotations

from collections import namedtuple
from dataclasses import dataclass
from itertools import permutations, product
from typing import Dict, Hashable, List, Optional, Sequence, Tuple

Arrow = namedtuple("Arrow", ["id", "tail", "head"])


class InfiniteAlgebraError(ValueError):
    """Raised when a presentation has arbitrarily long nonzero paths."""


class Quiver:
    """A finite directed multigraph with ordered vertices and named arrows."""

    def __init__(self, vertices: Sequence[Hashable], arrows: Sequence):
        self.vertices = tuple(vertices)
        if len(set(self.vertices)) != len(self.vertices):
            raise ValueError("vertex ids must be unique")
        vset = set(self.vertices)
        arrs = []
        for a in arrows:
            a = Arrow(*a)
            if a.tail not in vset or a.head not in vset:
                raise ValueError(f"arrow {a.id!r} references an unknown vertex")
            arrs.append(a)
        self.arrows = tuple(arrs)
        self._by_id = {a.id: a for a in self.arrows}
        if len(self._by_id) != len(self.arrows):
            raise ValueError("arrow ids must be unique")
        self._index = {v: i for i, v in enumerate(self.vertices)}

    def arrow(self, arrow_id) -> Arrow:
        try:
            return self._by_id[arrow_id]
        except KeyError:
            raise ValueError(f"unknown arrow {arrow_id!r}") from None

    def index(self, vertex) -> int:
        return self._index[vertex]

    def out_arrows(self, vertex) -> List[Arrow]:
        return [a for a in self.arrows if a.tail == vertex]

    def in_arrows(self, vertex) -> List[Arrow]:
        return [a for a in self.arrows if a.head == vertex]

    def __eq__(self, other):
        return (
            isinstance(other, Quiver)
            and self.vertices == other.vertices
            and self.arrows == other.arrows
        )

    def __hash__(self):
        return hash((self.vertices, self.arrows))

    def __repr__(self):
        return f"Quiver({len(self.vertices)} vertices, {len(self.arrows)} arrows)"


@dataclass(frozen=True)
class PathWord:
    """A path ``source -> ... -> target`` written as arrow ids in travel order."""

    source: Hashable
    target: Hashable
    arrows: Tuple = ()

    def __len__(self):
        return len(self.arrows)

    @property
    def is_trivial(self) -> bool:
        return not self.arrows

    def __str__(self):
        if not self.arrows:
            return f"e_{self.source}"
        return "*".join(str(a) for a in self.arrows)


def trivial_path(vertex) -> PathWord:
    return PathWord(vertex, vertex, ())


def make_path(quiver: Quiver, arrow_ids: Sequence, source=None) -> PathWord:
    """Build and validate a path from arrow ids; ``source`` is needed only if empty."""
    arrow_ids = tuple(arrow_ids)
    if not arrow_ids:
        if source is None:
            raise ValueError("empty path needs an explicit vertex")
        return trivial_path(source)
    arrs = [quiver.arrow(a) for a in arrow_ids]
    for prev, nxt in zip(arrs, arrs[1:]):
        if prev.head != nxt.tail:
            raise ValueError(
                f"arrows {prev.id!r} and {nxt.id!r} do not compose "
                f"({prev.head!r} vs {nxt.tail!r})"
            )
    if source is not None and source != arrs[0].tail:
        raise ValueError("path does not start at the given vertex")
    return PathWord(arrs[0].tail, arrs[-1].head, arrow_ids)


def compose(p: PathWord, q: PathWord) -> PathWord:
    """Concatenate ``p`` followed by ``q``."""
    if p.target != q.source:
        raise ValueError(
            f"cannot compose: path ends at {p.target!r}, next starts at {q.source!r}"
        )
    return PathWord(p.source, q.target, p.arrows + q.arrows)


def _contains(word: Tuple, sub: Tuple) -> bool:
    k = len(sub)
    return any(word[i:i + k] == sub for i in range(len(word) - k + 1))


class QuiverPresentation:
    """A quiver together with monomial relations.

    Args:
        quiver: the underlying quiver.
        relations: sequences of arrow ids, each a composable path of length at
            least two that is declared zero.
        check_finite: reject presentations whose algebra is infinite-dimensional.
    """

    def __init__(self, quiver: Quiver, relations: Sequence[Sequence] = (),
                 check_finite: bool = True):
        self.quiver = quiver
        rels = []
        for r in relations:
            if isinstance(r, PathWord):
                r = r.arrows
            r = tuple(r)
            if len(r) < 2:
                raise ValueError(f"relation {r!r} has length < 2")
            make_path(quiver, r)
            if r not in rels:
                rels.append(r)
        self.relations = tuple(rels)
        self._paths = None
        if check_finite:
            self.nonzero_paths()

    @property
    def vertices(self):
        return self.quiver.vertices

    @property
    def arrows(self):
        return self.quiver.arrows

    def path(self, *arrow_ids, source=None) -> PathWord:
        return make_path(self.quiver, arrow_ids, source)

    def relation_paths(self) -> List[PathWord]:
        return [make_path(self.quiver, r) for r in self.relations]

    def is_zero_path(self, p: PathWord) -> bool:
        make_path(self.quiver, p.arrows, p.source)
        return any(_contains(p.arrows, r) for r in self.relations)

    def nonzero_paths(self) -> List[PathWord]:
        if self._paths is None:
            self._paths = _enumerate(self)
        return list(self._paths)

    def cartan_matrix(self) -> List[List[int]]:
        idx = self.quiver.index
        n = len(self.vertices)
        c = [[0] * n for _ in range(n)]
        for p in self.nonzero_paths():
            c[idx(p.source)][idx(p.target)] += 1
        return c

    def to_dict(self) -> dict:
        return {
            "vertices": [str(v) for v in self.vertices],
            "arrows": [
                {"id": str(a.id), "tail": str(a.tail), "head": str(a.head)}
                for a in self.arrows
            ],
            "relations": [[str(a) for a in r] for r in self.relations],
        }

    def __eq__(self, other):
        return (
            isinstance(other, QuiverPresentation)
            and self.quiver == other.quiver
            and set(self.relations) == set(other.relations)
        )

    def __hash__(self):
        return hash((self.quiver, frozenset(self.relations)))

    def __repr__(self):
        return (f"QuiverPresentation({len(self.vertices)} vertices, "
                f"{len(self.arrows)} arrows, {len(self.relations)} relations)")


def _enumerate(pres: QuiverPresentation) -> List[PathWord]:
    # Extending a nonzero path only needs its last (L-1) arrows checked, where
    # L is the longest relation. Those suffixes form a finite state space, so a
    # nonzero path longer than (#states + L) repeats a state and can be pumped.
    q = pres.quiver
    max_rel = max((len(r) for r in pres.relations), default=1)
    rels = set(pres.relations)
    lengths = sorted({len(r) for r in rels})

    layer = [trivial_path(v) for v in q.vertices]
    result = list(layer)
    states = set()
    length = 0
    while layer:
        length += 1
        nxt = []
        for p in layer:
            for a in q.out_arrows(p.target):
                word = p.arrows + (a.id,)
                if any(len(word) >= k and word[-k:] in rels for k in lengths):
                    continue
                nxt.append(PathWord(p.source, a.head, word))
        if max_rel > 1:
            states.update(p.arrows[-(max_rel - 1):] for p in nxt
                          if len(p.arrows) >= max_rel - 1)
        bound = (len(states) if max_rel > 1 else len(q.vertices)) + max_rel
        if nxt and length > bound:
            raise InfiniteAlgebraError(
                "infinite algebra: nonzero paths of unbounded length exist"
            )
        nxt.sort(key=lambda p: tuple(str(a) for a in p.arrows))
        result.extend(nxt)
        layer = nxt
    return result


def enumerate_nonzero_paths(pres: QuiverPresentation) -> List[PathWord]:
    return pres.nonzero_paths()


def is_zero_path(pres: QuiverPresentation, p: PathWord) -> bool:
    return pres.is_zero_path(p)


def cartan_matrix(pres: QuiverPresentation) -> List[List[int]]:
    return pres.cartan_matrix()


# -- opposites and isomorphisms ---------------------------------------------

def opposite(pres: QuiverPresentation) -> QuiverPresentation:
    """Reverse every arrow and every relation word."""
    q = pres.quiver
    arrows = [Arrow(a.id, a.head, a.tail) for a in q.arrows]
    rels = [tuple(reversed(r)) for r in pres.relations]
    return QuiverPresentation(Quiver(q.vertices, arrows), rels, check_finite=False)


def find_isomorphism(p1: QuiverPresentation, p2: QuiverPresentation
                     ) -> Optional[Tuple[Dict, Dict]]:
    """Search for vertex and arrow bijections carrying ``p1`` onto ``p2``.

    Returns ``(vertex_map, arrow_map)`` or ``None``.
    """
    q1, q2 = p1.quiver, p2.quiver
    if (len(q1.vertices), len(q1.arrows), len(p1.relations)) != (
            len(q2.vertices), len(q2.arrows), len(p2.relations)):
        return None

    def counts(q):
        c = {}
        for a in q.arrows:
            c[(a.tail, a.head)] = c.get((a.tail, a.head), 0) + 1
        return c

    c1, c2 = counts(q1), counts(q2)

    def signature(q, pres, v):
        rel_src = sorted(len(r) for r in pres.relations if q.arrow(r[0]).tail == v)
        rel_tgt = sorted(len(r) for r in pres.relations if q.arrow(r[-1]).head == v)
        return (len(q.out_arrows(v)), len(q.in_arrows(v)),
                sum(1 for a in q.arrows if a.tail == v == a.head),
                tuple(rel_src), tuple(rel_tgt))

    sig2 = {v: signature(q2, p2, v) for v in q2.vertices}
    order = sorted(q1.vertices, key=lambda v: -(len(q1.out_arrows(v)) + len(q1.in_arrows(v))))
    sig1 = {v: signature(q1, p1, v) for v in q1.vertices}
    rels2 = set(p2.relations)

    def arrow_maps(vmap):
        groups1, groups2 = {}, {}
        for a in q1.arrows:
            groups1.setdefault((a.tail, a.head), []).append(a.id)
        for a in q2.arrows:
            groups2.setdefault((a.tail, a.head), []).append(a.id)
        keys = list(groups1)
        choices = [permutations(groups2[(vmap[t], vmap[h])]) for t, h in keys]
        for combo in product(*[list(c) for c in choices]):
            amap = {}
            for key, perm in zip(keys, combo):
                amap.update(zip(groups1[key], perm))
            yield amap

    def extend(i, vmap, used):
        if i == len(order):
            for amap in arrow_maps(vmap):
                if all(tuple(amap[a] for a in r) in rels2 for r in p1.relations):
                    return dict(vmap), amap
            return None
        v = order[i]
        for w in q2.vertices:
            if w in used or sig1[v] != sig2[w]:
                continue
            ok = True
            for u, x in vmap.items():
                if (c1.get((v, u), 0) != c2.get((w, x), 0)
                        or c1.get((u, v), 0) != c2.get((x, w), 0)):
                    ok = False
                    break
            if ok and c1.get((v, v), 0) == c2.get((w, w), 0):
                vmap[v] = w
                used.add(w)
                found = extend(i + 1, vmap, used)
                if found:
                    return found
                del vmap[v]
                used.discard(w)
        return None

    return extend(0, {}, set())


def is_isomorphic_presentation(p1: QuiverPresentation, p2: QuiverPresentation) -> bool:
    return find_isomorphism(p1, p2) is not None


def is_self_opposite(pres: QuiverPresentation) -> bool:
    return find_isomorphism(pres, opposite(pres)) is not None


def is_automorphism(pres: QuiverPresentation, vmap: Dict) -> bool:
    """True if the vertex permutation ``vmap`` extends to a presentation automorphism."""
    q = pres.quiver
    if set(vmap) != set(q.vertices) or set(vmap.values()) != set(q.vertices):
        return False
    return _automorphism_over(pres, vmap)


def _automorphism_over(pres: QuiverPresentation, vmap: Dict) -> bool:
    q = pres.quiver
    groups = {}
    for a in q.arrows:
        groups.setdefault((a.tail, a.head), []).append(a.id)
    keys = list(groups)
    for key in keys:
        image = (vmap[key[0]], vmap[key[1]])
        if len(groups.get(image, [])) != len(groups[key]):
            return False
    rels = set(pres.relations)
    choices = [list(permutations(groups[(vmap[t], vmap[h])])) for t, h in keys]
    for combo in product(*choices):
        amap = {}
        for key, perm in zip(keys, combo):
            amap.update(zip(groups[key], perm))
        if all(tuple(amap[a] for a in r) in rels for r in pres.relations):
            return True
    return False


# -- builders ---------------------------------------------------------------

def double_chain(vertices: Sequence, all_compositions: bool = False,
                 prefix: Tuple[str, str] = ("a", "b")) -> Tuple[List[Arrow], List[Tuple]]:
    """Arrows and relations of a doubled linear chain on ``vertices``.

    Arrow ``a{i}`` goes right from the i-th to the (i+1)-th vertex and ``b{i}``
    goes back. Relations kill every 2-cycle, or every composition of two
    arrows when ``all_compositions`` is set.
    """
    ra, rb = prefix
    arrows = []
    for i, (u, v) in enumerate(zip(vertices, vertices[1:]), start=1):
        arrows.append(Arrow(f"{ra}{i}", u, v))
        arrows.append(Arrow(f"{rb}{i}", v, u))
    if all_compositions:
        rels = _all_length_two(arrows)
    else:
        rels = []
        for i in range(1, len(vertices)):
            rels.append((f"{ra}{i}", f"{rb}{i}"))
            rels.append((f"{rb}{i}", f"{ra}{i}"))
    return arrows, rels


def _all_length_two(arrows: Sequence[Arrow]) -> List[Tuple]:
    return [(a.id, b.id) for a in arrows for b in arrows if a.head == b.tail]


def make_AA(n: int) -> QuiverPresentation:
    """The doubled chain on vertices 1..n with all 2-cycles zero."""
    if n < 1:
        raise ValueError("make_AA needs n >= 1")
    verts = list(range(1, n + 1))
    arrows, rels = double_chain(verts)
    return QuiverPresentation(Quiver(verts, arrows), rels)


def make_AA3c() -> QuiverPresentation:
    """The doubled chain on three vertices with every composition zero."""
    verts = [1, 2, 3]
    arrows, rels = double_chain(verts, all_compositions=True)
    return QuiverPresentation(Quiver(verts, arrows), rels)


def make_EE6() -> QuiverPresentation:
    """Doubled chain 1..5 with vertex 6 attached to 3 by ``alpha: 6->3``, ``beta: 3->6``.

    All 2-cycles vanish, as does every composition through ``alpha`` or ``beta``.
    """
    verts = [1, 2, 3, 4, 5, 6]
    arrows, rels = double_chain(verts[:5])
    arrows += [Arrow("alpha", 6, 3), Arrow("beta", 3, 6)]
    for a, b in _all_length_two(arrows):
        if "alpha" in (a, b) or "beta" in (a, b):
            if (a, b) not in rels:
                rels.append((a, b))
    return QuiverPresentation(Quiver(verts, arrows), rels)


def make_B8() -> QuiverPresentation:
    """The eight-vertex tree with the two paths 7->2->1 and 8->4->5 zero."""
    arrows = [
        Arrow("c1", 2, 1), Arrow("c2", 3, 2), Arrow("c3", 3, 4), Arrow("c4", 4, 5),
        Arrow("c5", 3, 6), Arrow("c6", 7, 2), Arrow("c7", 8, 4),
    ]
    return QuiverPresentation(Quiver(range(1, 9), arrows), [("c6", "c1"), ("c7", "c4")])


def make_B8_opposite() -> QuiverPresentation:
    return opposite(make_B8())


def single_vertex() -> QuiverPresentation:
    return make_AA(1)
