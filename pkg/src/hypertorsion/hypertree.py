"""Hypergraphs and their hypertrees.

Hypertree sets are computed two ways: from spanning trees of the bipartite
incidence graph, and as lattice points cut out of the hyperplane
``sum f = |V| - 1`` by the ``mu`` inequalities.  Vectors are tuples indexed
by hyperedge position.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Dict, FrozenSet, Iterable, Iterator, List, Optional, Sequence, Set, Tuple

from .lattice import is_convex_lattice_set  # noqa: F401  (part of this module's interface)
from .planar import Trinity, color_code, point_name

Vec = Tuple[int, ...]


@dataclass(frozen=True)
class Hypergraph:
    vertices: Tuple[str, ...]
    hyperedges: Tuple[FrozenSet[str], ...]
    edge_names: Optional[Tuple[str, ...]] = None

    def __post_init__(self):
        vs = set(self.vertices)
        if len(vs) != len(self.vertices):
            raise ValueError("duplicate vertex")
        for k, e in enumerate(self.hyperedges):
            if not e:
                raise ValueError(f"hyperedge {k} is empty")
            if not e <= vs:
                raise ValueError(f"hyperedge {k} uses unknown vertices {sorted(e - vs)}")

    @classmethod
    def build(cls, vertices: Iterable, hyperedges: Iterable[Iterable], edge_names=None) -> "Hypergraph":
        return cls(tuple(str(v) for v in vertices),
                   tuple(frozenset(str(v) for v in e) for e in hyperedges),
                   tuple(edge_names) if edge_names is not None else None)

    @classmethod
    def from_json(cls, data) -> "Hypergraph":
        return cls.build(data["vertices"], data["hyperedges"], data.get("names"))

    def to_json(self) -> dict:
        out = {"vertices": list(self.vertices),
               "hyperedges": [sorted(e, key=self.vertices.index) for e in self.hyperedges]}
        if self.edge_names is not None:
            out["names"] = list(self.edge_names)
        return out

    @property
    def rank(self) -> int:
        """``|V| - 1``, the coordinate sum of every hypertree."""
        return len(self.vertices) - 1

    def bip_edges(self) -> List[Tuple[int, int]]:
        """Edges of bip(H) as (hyperedge index, vertex index)."""
        pos = {v: i for i, v in enumerate(self.vertices)}
        return [(k, pos[v]) for k, e in enumerate(self.hyperedges) for v in sorted(e, key=pos.get)]

    def is_connected(self) -> bool:
        if not self.hyperedges:
            return False
        uf = _UnionFind(len(self.vertices) + len(self.hyperedges))
        nv = len(self.vertices)
        for k, i in self.bip_edges():
            uf.union(nv + k, i)
        return len({uf.find(x) for x in range(nv + len(self.hyperedges))}) == 1


class _UnionFind:
    def __init__(self, n: int):
        self.parent = list(range(n))

    def find(self, x: int) -> int:
        while self.parent[x] != x:
            self.parent[x] = self.parent[self.parent[x]]
            x = self.parent[x]
        return x

    def union(self, a: int, b: int) -> bool:
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return False
        self.parent[ra] = rb
        return True


@dataclass(frozen=True)
class HypertreeSet:
    hypergraph: Hypergraph
    vectors: FrozenSet[Vec]

    def sorted(self) -> List[Vec]:
        return sorted(self.vectors)

    def __len__(self) -> int:
        return len(self.vectors)


def abstract_dual(h: Hypergraph) -> Hypergraph:
    """Swap the roles of vertices and hyperedges (multiset hyperedges become
    distinct vertices named by position unless names are given)."""
    names = h.edge_names or tuple(f"h{k}" for k in range(len(h.hyperedges)))
    if len(set(names)) != len(names):
        raise ValueError("abstract dual needs distinct hyperedge names")
    new_edges = [frozenset(names[k] for k, e in enumerate(h.hyperedges) if v in e) for v in h.vertices]
    return Hypergraph(tuple(names), tuple(new_edges), tuple(h.vertices))


# --- spanning trees ----------------------------------------------------------

def spanning_trees(num_vertices: int, edges: Sequence[Tuple[int, int]]) -> Iterator[FrozenSet[int]]:
    """Spanning trees of a multigraph as sets of edge indices.

    Backtracking over edges in order: an edge is skipped only if the edges
    still available keep the graph connected, and taken only if it joins
    two components.
    """
    m = len(edges)

    def connected_without(excluded: Set[int]) -> bool:
        uf = _UnionFind(num_vertices)
        comps = num_vertices
        for i, (a, b) in enumerate(edges):
            if i not in excluded and uf.union(a, b):
                comps -= 1
        return comps == 1

    if num_vertices == 0 or not connected_without(set()):
        return

    chosen: List[int] = []
    excluded: Set[int] = set()

    def rec(i: int, uf_parent: List[int], comps: int):
        if comps == 1:
            yield frozenset(chosen)
            return
        if i == m:
            return
        a, b = edges[i]
        uf = _UnionFind(0)
        uf.parent = list(uf_parent)
        if uf.find(a) != uf.find(b):
            uf.union(a, b)
            chosen.append(i)
            yield from rec(i + 1, uf.parent, comps - 1)
            chosen.pop()
        excluded.add(i)
        # a bridge of the remaining graph cannot be skipped
        if connected_without(excluded):
            yield from rec(i + 1, uf_parent, comps)
        excluded.discard(i)

    yield from rec(0, list(range(num_vertices)), num_vertices)


def hypertrees_from_spanning_trees(h: Hypergraph) -> FrozenSet[Vec]:
    """Degree vectors (minus one) of every spanning tree of bip(H).

    Plain enumeration of all spanning trees; exponential, for tiny inputs
    and as an oracle for :func:`enumerate_hypertrees_bruteforce`.
    """
    if not h.is_connected():
        raise ValueError("bip(H) is not connected")
    nv = len(h.vertices)
    bedges = h.bip_edges()
    graph_edges = [(nv + k, i) for k, i in bedges]
    out = set()
    for tree in spanning_trees(nv + len(h.hyperedges), graph_edges):
        f = [-1] * len(h.hyperedges)
        for j in tree:
            f[bedges[j][0]] += 1
        out.add(tuple(f))
    return frozenset(out)


def enumerate_hypertrees_bruteforce(h: Hypergraph) -> HypertreeSet:
    """Hypertrees of ``h`` by spanning-tree search in bip(H).

    Hyperedges are processed in order; each picks the nonempty set of its
    vertices it is joined to, and the choice must hit distinct components
    of the partial forest.  Search states with the same vertex partition
    and the same degree prefix lead to the same completions, so they are
    visited once.
    """
    if not h.is_connected():
        raise ValueError("bip(H) is not connected")
    nv = len(h.vertices)
    pos = {v: i for i, v in enumerate(h.vertices)}
    members = [sorted(pos[v] for v in e) for e in h.hyperedges]
    # state: (component label per vertex, degree prefix)
    states: Set[Tuple[Vec, Vec]] = {(tuple(range(nv)), ())}
    for mem in members:
        nxt: Set[Tuple[Vec, Vec]] = set()
        for comp, prefix in states:
            for size in range(1, len(mem) + 1):
                for sub in itertools.combinations(mem, size):
                    labels = {comp[x] for x in sub}
                    if len(labels) != size:
                        continue
                    target = min(labels)
                    new = tuple(target if c in labels else c for c in comp)
                    nxt.add((new, prefix + (size - 1,)))
        states = nxt
    vectors = frozenset(prefix for comp, prefix in states if len(set(comp)) == 1)
    return HypertreeSet(h, vectors)


# --- polytope description ------------------------------------------------------

def mu(h: Hypergraph, sub: Iterable[int]) -> int:
    """``|union| - c`` for the hyperedges with indices in ``sub``."""
    sub = sorted(set(sub))
    if not sub or len(sub) >= len(h.hyperedges):
        raise ValueError("mu needs a nonempty proper subset of the hyperedges")
    return _mu(h, sub)


def _mu(h: Hypergraph, sub: Sequence[int]) -> int:
    covered = sorted(set().union(*(h.hyperedges[k] for k in sub)))
    idx = {v: i for i, v in enumerate(covered)}
    uf = _UnionFind(len(covered) + len(sub))
    for j, k in enumerate(sub):
        for v in h.hyperedges[k]:
            uf.union(len(covered) + j, idx[v])
    comps = len({uf.find(x) for x in range(len(covered) + len(sub))})
    return len(covered) - comps


def mu_table(h: Hypergraph) -> Dict[int, int]:
    """``mu`` for every nonempty proper subset, keyed by bitmask."""
    m = len(h.hyperedges)
    return {mask: _mu(h, [k for k in range(m) if mask >> k & 1]) for mask in range(1, (1 << m) - 1)}


def is_hypertree_polytope(h: Hypergraph, f: Sequence[int], table: Optional[Dict[int, int]] = None) -> bool:
    """Whether ``f`` is a lattice point of the hypertree polytope."""
    m = len(h.hyperedges)
    if len(f) != m or any(x < 0 for x in f) or sum(f) != h.rank:
        return False
    table = mu_table(h) if table is None else table
    for mask, bound in table.items():
        if sum(f[k] for k in range(m) if mask >> k & 1) > bound:
            return False
    return True


def compositions(total: int, parts: int) -> Iterator[Vec]:
    if parts == 0:
        if total == 0:
            yield ()
        return
    if parts == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for rest in compositions(total - first, parts - 1):
            yield (first,) + rest


def enumerate_hypertrees_polytope(h: Hypergraph) -> HypertreeSet:
    """Hypertrees as the lattice points of Pi satisfying every mu inequality."""
    if not h.is_connected():
        raise ValueError("bip(H) is not connected")
    table = mu_table(h)
    vecs = frozenset(f for f in compositions(h.rank, len(h.hyperedges))
                     if is_hypertree_polytope(h, f, table))
    return HypertreeSet(h, vecs)


def is_submodular(h: Hypergraph) -> bool:
    """Check that mu, extended by mu(empty) = 0 and mu(E) = |V| - 1, is
    non-decreasing and submodular."""
    m = len(h.hyperedges)
    full = (1 << m) - 1
    table = dict(mu_table(h))
    table[0] = 0
    table[full] = h.rank
    for a in range(full + 1):
        for b in range(full + 1):
            if table[a] + table[b] < table[a | b] + table[a & b]:
                return False
            if a & b == a and table[a] > table[b]:
                return False
    return True


# --- planar duals ----------------------------------------------------------------

def planar_dual(t: Trinity, color_vertices: str, color_edges: str) -> Hypergraph:
    """Hypergraph on one color class whose hyperedges are the points of
    another, with containment given by adjacency in the trinity."""
    cv, ce = color_code(color_vertices), color_code(color_edges)
    if cv == ce:
        raise ValueError("planar dual needs two different colors")
    verts = [point_name((cv, k)) for k in range(t.count(cv))]
    hyper = []
    for k in range(t.count(ce)):
        nbrs = set()
        for tri in t.white + t.black:
            if tri.corner(ce) == k:
                nbrs.add(point_name((cv, tri.corner(cv))))
        hyper.append(nbrs)
    names = [point_name((ce, k)) for k in range(t.count(ce))]
    return Hypergraph.build(verts, hyper, names)


def all_six_hypergraphs(t: Trinity) -> Dict[Tuple[str, str], Hypergraph]:
    return {(a, b): planar_dual(t, a, b) for a in "REV" for b in "REV" if a != b}


# --- lattice-set operations --------------------------------------------------------

def normalize_translation(s: Iterable[Vec]) -> FrozenSet[Vec]:
    """Translate so the coordinatewise minimum is the origin."""
    s = list(s)
    if not s:
        return frozenset()
    low = tuple(min(c) for c in zip(*s))
    return frozenset(tuple(x - l for x, l in zip(v, low)) for v in s)


def negate(s: Iterable[Vec]) -> FrozenSet[Vec]:
    return frozenset(tuple(-x for x in v) for v in s)


def translation_between(a: Iterable[Vec], b: Iterable[Vec]) -> Optional[Vec]:
    """The vector ``d`` with ``a + d == b``, or None."""
    a, b = list(a), list(b)
    if len(a) != len(b):
        return None
    if not a:
        return ()
    d = tuple(y - x for x, y in zip(min(a), min(b)))
    shifted = {tuple(x + dx for x, dx in zip(v, d)) for v in a}
    return d if shifted == set(b) else None


def subdivide_edge_set(q: Iterable[Vec], r1: int, r2: int) -> FrozenSet[Vec]:
    """``(q + e_r1) | (q + e_r2)``."""
    q = list(q)
    if not q:
        return frozenset()
    dim = len(q[0])
    for r in (r1, r2):
        if not 0 <= r < dim:
            raise ValueError(f"hyperedge {r} out of range for dimension {dim}")
    out = set()
    for v in q:
        for r in (r1, r2):
            w = list(v)
            w[r] += 1
            out.add(tuple(w))
    return frozenset(out)


def product_support(a: Iterable[Vec], b: Iterable[Vec]) -> FrozenSet[Vec]:
    return frozenset(x + y for x in a for y in b)


def generating_polynomial(s: Iterable[Vec]):
    """The lattice set as a Laurent polynomial (one monomial per point)."""
    from .polyring import LaurentPoly, monomial
    return LaurentPoly({monomial(enumerate(v)): 1 for v in s})
