"""Loops, words and the Turaev torsion of a trinity's Seifert surface complement.

Choices
-------
An arborescence ``A`` of the red dual, rooted at ``r0``, picks for every
non-root red point ``r_j`` the G-edge whose white triangle carries the arc
into ``r_j``.  The remaining G-edges form the spanning tree ``Gamma``, which
always contains ``kappa``, the G-edge of ``t0``.

Word letters
------------
Walking along a G-edge ``x`` records the red corner of the white triangle of
``x``, with exponent ``+1`` when the step runs violet -> emerald and ``-1``
when it runs emerald -> violet.  Loops start at ``v0``, so letters alternate
``+, -, +, ...`` and end with ``-``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple

from .freegroup import Word, fox_jacobian, torsion_determinant
from .hypertree import normalize_translation
from .planar import (Arborescence, MapError, Point, Trinity, adjacency_matrix, enhanced_matrix,
                     enumerate_arborescences, is_arborescence, parse_point, point_name,
                     tree_parent_triangles)
from .polyring import (ONE, LaurentPoly, PolyMatrix, canonical_form, det, equal_up_to_monomial,
                       support_vectors)

Step = Tuple[int, Point, Point]      # (G-edge / white triangle index, from, to)


class InadmissibleOrder(ValueError):
    pass


# --- choices ---------------------------------------------------------------------

@dataclass
class DualTreePair:
    trinity: Trinity
    arborescence: Arborescence
    tree: List[int]                  # white triangles whose G-edge lies in Gamma
    into: Dict[int, int]             # red point j >= 1 -> triangle of the arc entering it
    kappa: int = 0

    def non_tree_edge(self, j: int) -> int:
        return self.into[j]


def dual_tree_pair(t: Trinity, a: Arborescence) -> DualTreePair:
    """Pair an arborescence of the red dual with its dual spanning tree in G."""
    if a.color != "R" or a.root != 0:
        raise ValueError("expected an arborescence of the red dual rooted at r0")
    d = t.oriented_dual("R")
    if not is_arborescence(d, 0, a.arcs):
        raise ValueError("arcs do not form a spanning arborescence rooted at r0")
    into = {d.arcs[i][1]: i for i in a.arcs}
    tree = [i for i in range(t.n) if i not in a.arcs]
    tree_parent_triangles(t, a)          # raises unless Gamma spans
    return DualTreePair(t, a, tree, into)


def arborescence_from_names(t: Trinity, names: Sequence[str]) -> Arborescence:
    """``["t4", "t10", "t9"]`` -> arborescence of the red dual."""
    arcs = []
    for s in names:
        s = s.strip()
        if not s.startswith("t") or not s[1:].isdigit() or not 0 <= int(s[1:]) < t.n:
            raise ValueError(f"bad triangle name {s!r}")
        arcs.append(int(s[1:]))
    return Arborescence("R", 0, frozenset(arcs))


def default_arborescence(t: Trinity) -> Arborescence:
    """The first arborescence of the red dual in enumeration order."""
    found = enumerate_arborescences(t.oriented_dual("R"), 0)
    if not found:
        raise MapError("red dual has no spanning arborescence")
    return min(found, key=lambda a: sorted(a.arcs))


# --- loops -----------------------------------------------------------------------

@dataclass
class LoopSystem:
    pair: DualTreePair
    generators: List[int]                          # red points 1 .. |R|-1
    loops: List[List[Step]]
    words: List[Word]
    cross_at: List[int]                            # position of the letter from the non-tree edge

    def prefix(self, j: int) -> Word:
        """``U_j``: the part of the ``j``-th word before its non-tree letter."""
        k = self.generators.index(j)
        return Word(self.words[k].letters[: self.cross_at[k]])


def _letter(t: Trinity, step: Step) -> Tuple[int, int]:
    i, a, _ = step
    return (t.white[i].red, 1 if a[0] == "V" else -1)


def _tree_paths(t: Trinity, tree: Sequence[int]) -> Dict[Point, List[Step]]:
    """Path in Gamma from ``v0`` to every emerald and violet point."""
    adj: Dict[Point, List[Tuple[Point, int]]] = {}
    for i in tree:
        e, v = t.g_edge_of_white(i)
        adj.setdefault(e, []).append((v, i))
        adj.setdefault(v, []).append((e, i))
    start = ("V", 0)
    paths: Dict[Point, List[Step]] = {start: []}
    frontier = [start]
    while frontier:
        x = frontier.pop(0)
        for y, i in sorted(adj.get(x, []), key=lambda z: z[1]):
            if y not in paths:
                paths[y] = paths[x] + [(i, x, y)]
                frontier.append(y)
    return paths


def build_loops(p: DualTreePair) -> LoopSystem:
    t = p.trinity
    paths = _tree_paths(t, p.tree)
    gens = list(range(1, t.count("R")))
    loops, words, cross = [], [], []
    for j in gens:
        i = p.into[j]
        e, v = t.g_edge_of_white(i)
        back = [(k, b, a) for k, a, b in reversed(paths[e])]
        loop = paths[v] + [(i, v, e)] + back
        word = Word(tuple(_letter(t, s) for s in loop))
        exps = [x for _, x in word.letters]
        if any(x == y for x, y in zip(exps, exps[1:])) or exps[0] != 1 or exps[-1] != -1:
            raise AssertionError(f"word for r{j} does not alternate: {word}")
        if word.letters[len(paths[v])] != (j, 1):
            raise AssertionError(f"non-tree letter of the word for r{j} is not r{j}")
        loops.append(loop)
        words.append(word)
        cross.append(len(paths[v]))
    return LoopSystem(p, gens, loops, words, cross)


def boundary_word(t: Trinity, j: int, forward: bool = True) -> Word:
    """Word of the loop based at ``v0`` that runs once along the boundary of
    red region ``r_j``: along its face walk, or against it if not ``forward``."""
    g = t.graph
    walk = t.red_faces[j]
    v0 = t.violet_ids[0]
    k = next((n for n, d in enumerate(walk) if g.dart_tail(d) == v0), None)
    if k is None:
        raise ValueError(f"v0 is not on the boundary of r{j}")
    walk = walk[k:] + walk[:k]
    white_of = {tri.edge: i for i, tri in enumerate(t.white)}
    if forward:
        steps = [(white_of[e], s == 1) for e, s in walk]
    else:
        steps = [(white_of[e], s == 0) for e, s in reversed(walk)]
    return Word(tuple((t.white[i].red, 1 if up else -1) for i, up in steps))


# --- torsion ---------------------------------------------------------------------

def torsion_raw(loops: LoopSystem, keep_r0: bool = True) -> LaurentPoly:
    """Fox-Jacobian determinant of the loop words, before normalization."""
    if not loops.words:
        return ONE
    return torsion_determinant(loops.words, loops.generators, keep_symbolic=keep_r0)


def torsion(t: Trinity, choices: Optional[DualTreePair] = None, keep_r0: bool = True) -> LaurentPoly:
    """Turaev torsion of the complement of the Seifert surface, in canonical form."""
    if choices is None:
        choices = dual_tree_pair(t, default_arborescence(t))
    return canonical_form(torsion_raw(build_loops(choices), keep_r0))[0]


@dataclass
class SupportSet:
    points: frozenset
    homogeneous: bool = True
    source: str = "torsion"

    def sorted(self) -> List[Tuple[int, ...]]:
        return sorted(self.points)

    def __len__(self) -> int:
        return len(self.points)


def support_from_torsion(p: LaurentPoly, t: Trinity) -> SupportSet:
    """Exponent vectors over ``r0..r_{|R|-1}``, with the ``r0`` coordinate
    completed so every point sums to ``|E| - 1``, then min-translated."""
    nr = t.count("R")
    if p.variables() and max(p.variables()) >= nr:
        raise ValueError(f"polynomial uses variables beyond r{nr - 1}")
    total = t.count("E") - 1
    pts = []
    for v in support_vectors(p, nr):
        pts.append((total - sum(v[1:]),) + tuple(v[1:]))
    return SupportSet(normalize_translation(pts), True, "torsion")


# --- deconstruction order and elimination ------------------------------------------

@dataclass
class DeconstructionOrder:
    order: List[Point]                       # smallest first
    matching: Dict[Point, int]               # point -> white triangle

    def names(self) -> List[str]:
        return [point_name(q) for q in self.order]


def deconstruction_order(p: DualTreePair, order: Optional[Sequence] = None) -> DeconstructionOrder:
    """Validate ``order`` (point names or points) or build the default one,
    which strips the leaf with the smallest (emerald before violet, index)."""
    t = p.trinity
    nbrs: Dict[Point, Dict[Point, int]] = {}
    for i in p.tree:
        e, v = t.g_edge_of_white(i)
        nbrs.setdefault(e, {})[v] = i
        nbrs.setdefault(v, {})[e] = i
    todo = [q for q in t.non_root_points() if q[0] != "R"]
    if order is not None:
        order = [parse_point(q) if isinstance(q, str) else tuple(q) for q in order]
        if sorted(order) != sorted(todo):
            raise InadmissibleOrder("order must list every non-root emerald and violet point once")
    seq: List[Point] = []
    matching: Dict[Point, int] = {}
    remaining = set(todo)
    for k in range(len(todo)):
        if order is None:
            q = min((x for x in remaining if len(nbrs.get(x, {})) == 1), key=lambda x: (x[0], x[1]))
        else:
            q = order[k]
            if len(nbrs.get(q, {})) != 1:
                raise InadmissibleOrder(f"{point_name(q)} is not a leaf when it is removed")
        (other, i), = nbrs[q].items()
        matching[q] = i
        del nbrs[other][q]
        del nbrs[q]
        remaining.discard(q)
        seq.append(q)
    if matching != tree_parent_triangles(t, p.arborescence):
        raise AssertionError("leaf-stripping matching disagrees with the tree description")
    return DeconstructionOrder(seq, matching)


@dataclass
class ReplayResult:
    row_labels: List[str]
    col_labels: List[str]
    steps: List[PolyMatrix]                  # the start matrix, then one per pivot
    pivots: List[LaurentPoly]                # bottom-up
    block: PolyMatrix
    pivot_product: LaurentPoly
    det_sign: Optional[int]                  # det B * pivots == det_sign * det M_{r->e}
    column_units: List[Optional[LaurentPoly]]
    max_cans: int

    @property
    def columns_match(self) -> bool:
        return all(u is not None and u == ONE for u in self.column_units)


def replay_elimination(t: Trinity, choices: DualTreePair, order: DeconstructionOrder,
                       check_det: bool = True) -> ReplayResult:
    """Pivot on the matched diagonal from the bottom up, clearing each pivot
    row to its left by column operations, and return the top-left block."""
    nr = t.count("R")
    base_rows = t.non_root_points()
    rows = [("R", j) for j in range(1, nr)] + list(reversed(order.order))
    cols = [choices.into[j] for j in range(1, nr)] + [order.matching[q] for q in reversed(order.order)]
    m0 = enhanced_matrix(t, "R", "E")
    a = m0.permuted([base_rows.index(q) for q in rows], [i - 1 for i in cols])
    size = a.rows
    start_det = det(a) if check_det else None
    ent = a.entries()
    steps = [a]
    pivots = []
    max_cans = 0
    for k in range(size - 1, nr - 2, -1):
        piv = ent.get((k, k))
        if piv is None or not piv.is_monomial():
            raise AssertionError(f"pivot at {point_name(rows[k])} is {piv}, not a monomial")
        inv = piv.inverse_unit()
        col_k = {r: x for (r, c), x in ent.items() if c == k}
        for c in range(k):
            x = ent.get((k, c))
            if x is None:
                continue
            f = x * inv
            for r, y in col_k.items():
                z = ent.get((r, c), LaurentPoly()) - f * y
                if z:
                    ent[(r, c)] = z
                else:
                    ent.pop((r, c), None)
        pivots.append(piv)
        cur = PolyMatrix(size, size, ent)
        steps.append(cur)
        for c in range(nr - 1):
            cans = sum(1 for r in range(nr - 1, size) if (r, c) in ent)
            max_cans = max(max_cans, cans)
        if check_det and det(cur) != start_det:
            raise AssertionError("column operation changed the determinant")
    block = PolyMatrix(nr - 1, nr - 1, {(r, c): x for (r, c), x in ent.items() if r < nr - 1 and c < nr - 1})
    prod = ONE
    for x in pivots:
        prod = prod * x
    target = det(m0)
    lhs = det(block) * prod
    det_sign = 1 if lhs == target else (-1 if lhs == -target else None)
    loops = build_loops(choices)
    jac = fox_jacobian(loops.words, loops.generators)
    units = []
    for k, j in enumerate(loops.generators):
        scaled = [jac[r, k] * loops.prefix(j).abelianize().inverse_unit() for r in range(nr - 1)]
        col = [block[r, k] for r in range(nr - 1)]
        units.append(ONE if col == scaled else _column_unit(col, scaled))
    return ReplayResult([point_name(q) for q in rows], [f"t{i}" for i in cols], steps, pivots, block,
                        prod, det_sign, units, max_cans)


def _column_unit(col: List[LaurentPoly], ref: List[LaurentPoly]) -> Optional[LaurentPoly]:
    """The unit ``u`` with ``col == u * ref`` entrywise, or None."""
    unit = None
    for x, y in zip(col, ref):
        if x.is_zero() != y.is_zero():
            return None
        if x.is_zero():
            continue
        ok, u = equal_up_to_monomial(x, y)
        if not ok or (unit is not None and u != unit) or x != u * y:
            return None
        unit = u
    return unit


def alexander_leading_coefficient(t: Trinity) -> int:
    """``|det M|``: the number of Tutte matchings of the trinity."""
    d = det(adjacency_matrix(t))
    if d.is_zero():
        return 0
    if not d.is_monomial() or d.variables():
        raise AssertionError("adjacency determinant is not an integer")
    (_, c), = d.items()
    return abs(c)


def hypertree_monomial(t: Trinity, matching: Dict[Point, int]) -> Tuple[int, ...]:
    """Exponent vector over red points of the emerald part of a Tutte matching."""
    vec = [0] * t.count("R")
    for q, i in matching.items():
        if q[0] == "E":
            vec[t.white[i].red] += 1
    return tuple(vec)
