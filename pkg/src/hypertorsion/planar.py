"""Plane bipartite graphs as rotation systems, and the trinities they span.

Conventions
-----------
* Rotations list the edge ids at each vertex in counterclockwise order.
* Faces are traced with the face on the left: arriving at ``h`` along edge
  ``x`` we leave along the edge preceding ``x`` in the rotation at ``h``.
* Each G-edge ``i`` has two darts: ``(i, 0)`` runs emerald -> violet and
  ``(i, 1)`` runs violet -> emerald.  The face left of ``(i, 0)`` holds the
  white triangle of edge ``i`` and the face left of ``(i, 1)`` its black
  triangle, so (red, emerald, violet) is counterclockwise exactly around
  white triangles.
* White triangle ``t_i`` is the white triangle of G-edge ``i`` after the
  root edge has been moved to index 0.

Points are ``(color, index)`` pairs with colors ``"R"``, ``"E"``, ``"V"``.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass
from typing import Dict, FrozenSet, Iterable, List, Mapping, Optional, Sequence, Tuple

from .polyring import LaurentPoly, PolyMatrix

COLORS = ("R", "E", "V")
COLOR_NAMES = {"R": "red", "E": "emerald", "V": "violet"}
_COLOR_ALIASES = {"emerald": "E", "e": "E", "E": "E", "violet": "V", "v": "V", "V": "V",
                  "red": "R", "r": "R", "R": "R"}

Point = Tuple[str, int]
Dart = Tuple[int, int]


class MapError(ValueError):
    """Malformed or unsupported combinatorial map."""


class NotTwoConnected(MapError):
    pass


def color_code(c: str) -> str:
    try:
        return _COLOR_ALIASES[c]
    except KeyError:
        raise ValueError(f"unknown color {c!r}") from None


def point_name(p: Point) -> str:
    return f"{p[0].lower()}{p[1]}"


def parse_point(name: str) -> Point:
    name = name.strip()
    c = color_code(name[0])
    if not name[1:].isdigit():
        raise ValueError(f"bad point name {name!r}")
    return (c, int(name[1:]))


# --- combinatorial maps ------------------------------------------------------

@dataclass
class CombMap:
    """A connected plane bipartite graph given by a rotation system.

    ``edges[i]`` is stored as ``(emerald vertex, violet vertex)``.
    ``face_order`` optionally fixes the face labels: entry ``k`` is an edge
    whose white triangle lies in face ``k``.
    """

    vertex_ids: List[str]
    colors: Dict[str, str]
    edges: List[Tuple[str, str]]
    rotations: Dict[str, List[int]]
    outer_face: Optional[int] = None
    face_order: Optional[List[int]] = None

    def __post_init__(self):
        self._check()

    @classmethod
    def from_json(cls, data: Mapping) -> "CombMap":
        try:
            verts = data["vertices"]
            raw_edges = data["edges"]
            rots = data["rotations"]
        except (KeyError, TypeError) as exc:
            raise MapError(f"graph JSON is missing field {exc}") from None
        ids, colors = [], {}
        for v in verts:
            vid = str(v["id"])
            if vid in colors:
                raise MapError(f"duplicate vertex {vid!r}")
            try:
                colors[vid] = color_code(v["color"])
            except ValueError as exc:
                raise MapError(f"vertex {vid!r}: {exc}") from None
            if colors[vid] == "R":
                raise MapError(f"vertex {vid!r}: graph vertices are emerald or violet")
            ids.append(vid)
        edges = []
        for k, e in enumerate(raw_edges):
            if len(e) != 2:
                raise MapError(f"edge {k} must have two endpoints")
            u, v = str(e[0]), str(e[1])
            for x in (u, v):
                if x not in colors:
                    raise MapError(f"edge {k} uses unknown vertex {x!r}")
            if u == v:
                raise MapError(f"edge {k} is a loop at {u!r}")
            if colors[u] == colors[v]:
                raise MapError(f"edge {k} joins two {COLOR_NAMES[colors[u]]} vertices")
            edges.append((u, v) if colors[u] == "E" else (v, u))
        rotations = {}
        for vid, lst in rots.items():
            if str(vid) not in colors:
                raise MapError(f"rotation given for unknown vertex {vid!r}")
            rotations[str(vid)] = [int(x) for x in lst]
        return cls(ids, colors, edges, rotations,
                   data.get("outer_face"), data.get("face_order"))

    @classmethod
    def load(cls, path) -> "CombMap":
        with open(path) as fh:
            return cls.from_json(json.load(fh))

    @classmethod
    def from_face_walks(cls, vertex_ids: Sequence[str], colors: Mapping[str, str],
                        edges: Sequence[Tuple[str, str]], walks: Sequence[Sequence[Dart]],
                        **kw) -> "CombMap":
        """Recover the rotation system from face walks (face on the left)."""
        edges = [tuple(e) for e in edges]
        succ: Dict[str, Dict[int, int]] = {v: {} for v in vertex_ids}
        for walk in walks:
            for k, d_out in enumerate(walk):
                d_in = walk[k - 1]
                e, v = edges[d_in[0]]
                h = v if d_in[1] == 0 else e
                succ[h][d_out[0]] = d_in[0]
        rotations = {}
        for v in vertex_ids:
            nxt = succ[v]
            if not nxt:
                raise MapError(f"vertex {v!r} appears in no face walk")
            start = min(nxt)
            cyc = [start]
            while nxt[cyc[-1]] != start:
                cyc.append(nxt[cyc[-1]])
                if len(cyc) > len(nxt):
                    raise MapError(f"face walks do not close up at {v!r}")
            rotations[v] = cyc
        return cls(list(vertex_ids), {v: color_code(c) for v, c in colors.items()},
                   edges, rotations, **kw)

    def to_json(self) -> dict:
        out = {
            "vertices": [{"id": v, "color": COLOR_NAMES[self.colors[v]]} for v in self.vertex_ids],
            "edges": [list(e) for e in self.edges],
            "rotations": {v: list(self.rotations[v]) for v in self.vertex_ids},
        }
        if self.outer_face is not None:
            out["outer_face"] = self.outer_face
        if self.face_order is not None:
            out["face_order"] = list(self.face_order)
        return out

    def _check(self):
        incident: Dict[str, List[int]] = {v: [] for v in self.vertex_ids}
        for i, (e, v) in enumerate(self.edges):
            incident[e].append(i)
            incident[v].append(i)
        for vid in self.vertex_ids:
            rot = self.rotations.get(vid)
            if rot is None:
                raise MapError(f"vertex {vid!r} has no rotation")
            if sorted(rot) != sorted(incident[vid]):
                raise MapError(f"rotation at vertex {vid!r} does not list exactly its incident edges")
        if not self.edges:
            raise MapError("graph has no edges")
        seen = {self.vertex_ids[0]}
        stack = [self.vertex_ids[0]]
        while stack:
            x = stack.pop()
            for i in incident[x]:
                e, v = self.edges[i]
                y = v if x == e else e
                if y not in seen:
                    seen.add(y)
                    stack.append(y)
        if len(seen) != len(self.vertex_ids):
            raise MapError("graph is not connected")

    # darts

    def dart_tail(self, d: Dart) -> str:
        e, v = self.edges[d[0]]
        return e if d[1] == 0 else v

    def dart_head(self, d: Dart) -> str:
        e, v = self.edges[d[0]]
        return v if d[1] == 0 else e

    def next_dart(self, d: Dart) -> Dart:
        h = self.dart_head(d)
        rot = self.rotations[h]
        x = d[0]
        y = rot[(rot.index(x) - 1) % len(rot)]
        return (y, 0) if self.edges[y][0] == h else (y, 1)

    def faces(self) -> List[List[Dart]]:
        return trace_faces(self)

    def emerald(self) -> List[str]:
        return [v for v in self.vertex_ids if self.colors[v] == "E"]

    def violet(self) -> List[str]:
        return [v for v in self.vertex_ids if self.colors[v] == "V"]


def trace_faces(g: CombMap) -> List[List[Dart]]:
    """Face boundary walks as dart cycles, face on the left.

    Faces are numbered by the first emerald->violet dart they contain when
    darts are scanned in edge order (``face_order`` overrides this). Raises
    when the Euler count of the sphere fails.
    """
    owner: Dict[Dart, int] = {}
    walks: List[List[Dart]] = []
    for i in range(len(g.edges)):
        for s in (0, 1):
            d = (i, s)
            if d in owner:
                continue
            walk = []
            x = d
            while x not in owner:
                owner[x] = len(walks)
                walk.append(x)
                x = g.next_dart(x)
            if x != d:
                raise MapError("inconsistent rotation system")
            walks.append(walk)
    euler = len(g.vertex_ids) - len(g.edges) + len(walks)
    if euler != 2:
        raise MapError(f"rotation system is not a sphere (V - E + F = {euler})")
    # relabel faces by white darts
    order: List[int] = []
    if g.face_order is not None:
        if len(g.face_order) != len(walks):
            raise MapError(f"face_order names {len(g.face_order)} faces, map has {len(walks)}")
        order = [owner[(int(i), 0)] for i in g.face_order]
        if len(set(order)) != len(order):
            raise MapError("face_order names the same face twice")
    else:
        for i in range(len(g.edges)):
            f = owner[(i, 0)]
            if f not in order:
                order.append(f)
    out = []
    for f in order:
        walk = walks[f]
        # start each walk at its first emerald->violet dart in edge order
        start = min(range(len(walk)), key=lambda k: (walk[k][1], walk[k][0]))
        out.append(walk[start:] + walk[:start])
    return out


def face_vertices(g: CombMap, walk: Sequence[Dart]) -> List[str]:
    return [g.dart_tail(d) for d in walk]


def is_two_connected(g: CombMap) -> bool:
    """A connected plane map is 2-connected iff every face walk is a simple cycle."""
    for walk in trace_faces(g):
        verts = face_vertices(g, walk)
        if len(set(verts)) != len(verts) or len({d[0] for d in walk}) != len(walk):
            return False
    return True


# --- map editing (used to grow test instances) -------------------------------

def subdivide_map_edge(g: CombMap, edge: int, new_violet: str, new_emerald: str) -> CombMap:
    """Replace ``edge = (e, v)`` by the path e - new_violet - new_emerald - v.

    The old edge id now names (e, new_violet); two new edges are appended:
    (new_emerald, new_violet) and (new_emerald, v).
    """
    e, v = g.edges[edge]
    edges = list(g.edges)
    n = len(edges)
    edges[edge] = (e, new_violet)
    edges.append((new_emerald, new_violet))
    edges.append((new_emerald, v))
    rot = {k: list(r) for k, r in g.rotations.items()}
    rot[v] = [n + 1 if x == edge else x for x in rot[v]]
    rot[new_violet] = [edge, n]
    rot[new_emerald] = [n, n + 1]
    colors = dict(g.colors)
    colors[new_violet] = "V"
    colors[new_emerald] = "E"
    return CombMap(g.vertex_ids + [new_violet, new_emerald], colors, edges, rot,
                   g.outer_face, g.face_order)


def add_chord(g: CombMap, face: int, k1: int, k2: int) -> CombMap:
    """Add an edge inside face ``face`` joining the tails of darts ``k1`` and
    ``k2`` of its walk (they must have different colors)."""
    walk = trace_faces(g)[face]
    a, b = g.dart_tail(walk[k1]), g.dart_tail(walk[k2])
    if g.colors[a] == g.colors[b]:
        raise MapError("chord endpoints must have different colors")
    new = len(g.edges)
    rot = {k: list(r) for k, r in g.rotations.items()}
    for k, x in ((k1, a), (k2, b)):
        out_edge = walk[k][0]
        in_edge = walk[k - 1][0]
        # corner at x sits between out_edge and in_edge (ccw: out, in)
        r = rot[x]
        pos = r.index(out_edge)
        if r[(pos + 1) % len(r)] != in_edge:
            raise MapError("corner not found in rotation")
        r.insert(pos + 1, new)
    e, v = (a, b) if g.colors[a] == "E" else (b, a)
    return CombMap(list(g.vertex_ids), dict(g.colors), g.edges + [(e, v)], rot,
                   g.outer_face, g.face_order)


# --- trinities -----------------------------------------------------------------

@dataclass(frozen=True)
class Triangle:
    red: int
    emerald: int
    violet: int
    shade: str
    edge: int            # G-edge id (input numbering)

    def corner(self, c: str) -> int:
        return {"R": self.red, "E": self.emerald, "V": self.violet}[c]

    def corners(self) -> Tuple[Point, Point, Point]:
        return (("R", self.red), ("E", self.emerald), ("V", self.violet))


@dataclass
class OrientedDual:
    """Dual of one color's graph; arc ``i`` crosses the ``color``-edge of
    white triangle ``t_i`` and runs from the black side to the white side."""

    color: str
    num_points: int
    arcs: Dict[int, Tuple[int, int]]      # triangle index -> (tail, head)

    def incoming(self, p: int) -> List[int]:
        return [i for i, (a, b) in self.arcs.items() if b == p and a != p]


@dataclass
class Arborescence:
    color: str
    root: int
    arcs: FrozenSet[int]                  # white triangle indices


@dataclass
class Trinity:
    """Three-colored triangulation of the sphere built from a plane bipartite graph."""

    graph: CombMap
    red_faces: List[List[Dart]]                 # red point j -> face walk
    emerald_ids: List[str]                      # emerald point k -> vertex id
    violet_ids: List[str]
    white: List[Triangle]                       # t_i
    black: List[Triangle]                       # b_i, same G-edge as t_i

    @property
    def n(self) -> int:
        return len(self.white)

    def count(self, c: str) -> int:
        return {"R": len(self.red_faces), "E": len(self.emerald_ids), "V": len(self.violet_ids)}[c]

    def points(self, c: Optional[str] = None, include_root: bool = True) -> List[Point]:
        cols = COLORS if c is None else (c,)
        start = 0 if include_root else 1
        return [(col, k) for col in cols for k in range(start, self.count(col))]

    def non_root_points(self) -> List[Point]:
        return self.points(include_root=False)

    def roots(self) -> Tuple[Point, Point, Point]:
        return (("R", 0), ("E", 0), ("V", 0))

    def point_id(self, p: Point) -> str:
        """Input vertex id (E/V) or ``face<k>`` (R) behind a point."""
        if p[0] == "E":
            return self.emerald_ids[p[1]]
        if p[0] == "V":
            return self.violet_ids[p[1]]
        return point_name(p)

    def white_adjacent(self, p: Point) -> List[int]:
        return [i for i, t in enumerate(self.white) if t.corner(p[0]) == p[1]]

    def g_edge_of_white(self, i: int) -> Tuple[Point, Point]:
        t = self.white[i]
        return ("E", t.emerald), ("V", t.violet)

    def c_edge(self, t: Triangle, c: str) -> Tuple[Point, Point]:
        """Endpoints of the ``c``-colored edge of triangle ``t``."""
        a, b = [x for x in COLORS if x != c]
        return (a, t.corner(a)), (b, t.corner(b))

    def oriented_dual(self, c: str) -> OrientedDual:
        c = color_code(c)
        if c == "R":
            black_of = {i: self.black[i] for i in range(self.n)}
        else:
            # the c-edge of a white triangle is shared with the black
            # triangle having the same two non-c corners on the same G-face side
            black_of = {}
            index = {}
            for b in self.black:
                index.setdefault(self._c_key(b, c), []).append(b)
            for i, t in enumerate(self.white):
                cands = index.get(self._c_key(t, c), [])
                if len(cands) != 1:
                    raise MapError(f"{COLOR_NAMES[c]} edge of t{i} is not shared by exactly one black triangle")
                black_of[i] = cands[0]
        arcs = {i: (black_of[i].corner(c), self.white[i].corner(c)) for i in range(self.n)}
        return OrientedDual(c, self.count(c), arcs)

    @staticmethod
    def _c_key(t: Triangle, c: str):
        # For c in {E, V} the c-edge joins the red point and the third color;
        # 2-connectivity makes that point pair unique among trinity edges.
        if c == "E":
            return (t.red, t.violet)
        if c == "V":
            return (t.red, t.emerald)
        return t.edge

    def summary(self) -> Dict[str, int]:
        return {"R": self.count("R"), "E": self.count("E"), "V": self.count("V"), "n": self.n}

    def to_json(self) -> dict:
        pts = []
        for p in self.points():
            pts.append({"name": point_name(p), "color": COLOR_NAMES[p[0]],
                        "root": p[1] == 0, "source": self.point_id(p)})
        tris = []
        for shade, lst, prefix in (("white", self.white, "t"), ("black", self.black, "b")):
            for i, t in enumerate(lst):
                tris.append({"name": f"{prefix}{i}", "shade": shade,
                             "corners": [point_name(q) for q in t.corners()], "edge": t.edge})
        duals = {}
        for c in COLORS:
            d = self.oriented_dual(c)
            duals[COLOR_NAMES[c]] = [{"arc": f"t{i}", "tail": point_name((c, a)), "head": point_name((c, b))}
                                     for i, (a, b) in sorted(d.arcs.items())]
        return {"summary": self.summary(), "points": pts, "triangles": tris, "duals": duals}


def build_trinity(g: CombMap, outer_triangle: Optional[int] = None) -> Trinity:
    """Build the trinity of a 2-connected plane bipartite graph.

    ``outer_triangle`` is a G-edge id whose white triangle becomes ``t_0``;
    by default it is the smallest-id white triangle in ``g.outer_face``
    (face 0 when unset).
    """
    faces = trace_faces(g)
    for k, walk in enumerate(faces):
        verts = face_vertices(g, walk)
        if len(set(verts)) != len(verts) or len({d[0] for d in walk}) != len(walk):
            raise NotTwoConnected(f"face {k} boundary repeats a vertex or edge; graph is not 2-connected")
    face_of: Dict[Dart, int] = {d: k for k, walk in enumerate(faces) for d in walk}
    if outer_triangle is None:
        of = g.outer_face if g.outer_face is not None else 0
        if not 0 <= of < len(faces):
            raise MapError(f"outer face {of} out of range (map has {len(faces)} faces)")
        outer_triangle = min(i for i in range(len(g.edges)) if face_of[(i, 0)] == of)
    if not 0 <= outer_triangle < len(g.edges):
        raise MapError(f"outer triangle {outer_triangle} out of range")
    root_face = face_of[(outer_triangle, 0)]
    e_root, v_root = g.edges[outer_triangle]

    def front(seq, first):
        return [first] + [x for x in seq if x != first]

    red_order = front(range(len(faces)), root_face)
    emeralds = front(g.emerald(), e_root)
    violets = front(g.violet(), v_root)
    edge_order = front(range(len(g.edges)), outer_triangle)
    rpos = {f: j for j, f in enumerate(red_order)}
    epos = {x: k for k, x in enumerate(emeralds)}
    vpos = {x: k for k, x in enumerate(violets)}
    white, black = [], []
    for i in edge_order:
        e, v = g.edges[i]
        white.append(Triangle(rpos[face_of[(i, 0)]], epos[e], vpos[v], "white", i))
        black.append(Triangle(rpos[face_of[(i, 1)]], epos[e], vpos[v], "black", i))
    t = Trinity(g, [faces[f] for f in red_order], emeralds, violets, white, black)
    _check_trinity(t)
    return t


def _check_trinity(t: Trinity) -> None:
    if len(t.white) != len(t.black):
        raise MapError("white and black triangle counts differ")
    if t.count("R") + t.count("E") + t.count("V") != t.n + 2:
        raise MapError("Euler count fails: points must exceed white triangles by 2")
    t0 = t.white[0]
    if (t0.red, t0.emerald, t0.violet) != (0, 0, 0):
        raise MapError("outer triangle is not adjacent to all three roots")


# --- matrices -----------------------------------------------------------------

def _row_points(t: Trinity) -> List[Point]:
    return t.non_root_points()


def adjacency_matrix(t: Trinity) -> PolyMatrix:
    """0/1 matrix: rows non-root points (red, emerald, violet), columns t_1..t_{n-1}."""
    rows = _row_points(t)
    ent = {}
    for r, p in enumerate(rows):
        for i in t.white_adjacent(p):
            if i:
                ent[(r, i - 1)] = LaurentPoly.const(1)
    return PolyMatrix(len(rows), t.n - 1, ent)


def enhanced_matrix(t: Trinity, from_color: str = "R", to_color: str = "E") -> PolyMatrix:
    """Adjacency matrix whose ``to_color`` rows carry the ``from_color``
    corner of each triangle as a variable (variable index = point index)."""
    fc, tc = color_code(from_color), color_code(to_color)
    if fc == tc:
        raise ValueError("enhanced matrix needs two different colors")
    rows = _row_points(t)
    ent = {}
    for r, p in enumerate(rows):
        for i in t.white_adjacent(p):
            if not i:
                continue
            if p[0] == tc:
                ent[(r, i - 1)] = LaurentPoly.var(t.white[i].corner(fc))
            else:
                ent[(r, i - 1)] = LaurentPoly.const(1)
    return PolyMatrix(len(rows), t.n - 1, ent)


def row_labels(t: Trinity) -> List[str]:
    return [point_name(p) for p in _row_points(t)]


def column_labels(t: Trinity) -> List[str]:
    return [f"t{i}" for i in range(1, t.n)]


# --- Tutte matchings and arborescences -----------------------------------------

def enumerate_tutte_matchings(t: Trinity) -> List[Dict[Point, int]]:
    """All bijections non-root points -> adjacent non-outer white triangles."""
    rows = _row_points(t)
    adj = [[i for i in t.white_adjacent(p) if i] for p in rows]
    order = sorted(range(len(rows)), key=lambda r: len(adj[r]))
    out: List[Dict[Point, int]] = []
    used: set = set()
    chosen: Dict[Point, int] = {}

    def rec(k: int):
        if k == len(order):
            out.append(dict(chosen))
            return
        r = order[k]
        for i in adj[r]:
            if i not in used:
                used.add(i)
                chosen[rows[r]] = i
                rec(k + 1)
                used.discard(i)
                del chosen[rows[r]]

    rec(0)
    return out


def is_arborescence(d: OrientedDual, root: int, arcs: Iterable[int]) -> bool:
    arcs = list(arcs)
    if len(arcs) != d.num_points - 1:
        return False
    parent: Dict[int, int] = {}
    for i in arcs:
        a, b = d.arcs[i]
        if b == root or b in parent or a == b:
            return False
        parent[b] = a
    for p in range(d.num_points):
        seen = set()
        x = p
        while x != root:
            if x in seen or x not in parent:
                return False
            seen.add(x)
            x = parent[x]
    return True


def enumerate_arborescences(d: OrientedDual, root: int = 0) -> List[Arborescence]:
    """All spanning arborescences rooted at ``root`` (exhaustive backtracking:
    each non-root point picks one incoming arc, cycles are pruned)."""
    if not 0 <= root < d.num_points:
        raise ValueError(f"root {root} not a point of the dual")
    others = [p for p in range(d.num_points) if p != root]
    inc = {p: d.incoming(p) for p in others}
    others.sort(key=lambda p: len(inc[p]))
    parent: Dict[int, int] = {}
    chosen: List[int] = []
    out: List[Arborescence] = []

    def creates_cycle(p: int) -> bool:
        x = parent[p]
        steps = 0
        while x in parent:
            if x == p:
                return True
            x = parent[x]
            steps += 1
            if steps > d.num_points:
                return True
        return x == p

    def rec(k: int):
        if k == len(others):
            out.append(Arborescence(d.color, root, frozenset(chosen)))
            return
        p = others[k]
        for i in inc[p]:
            parent[p] = d.arcs[i][0]
            if not creates_cycle(p):
                chosen.append(i)
                rec(k + 1)
                chosen.pop()
            del parent[p]

    rec(0)
    return out


def dual_tree_edges(t: Trinity, a: Arborescence) -> List[int]:
    """White triangles whose ``a.color``-edge is not crossed by ``a``: the
    dual spanning tree, as a subset of t_0..t_{n-1}."""
    return [i for i in range(t.n) if i not in a.arcs]


def tree_parent_triangles(t: Trinity, a: Arborescence) -> Dict[Point, int]:
    """For each non-root vertex of the dual tree, the triangle of its tree
    edge pointing toward the edge crossed by ``t_0``."""
    c = a.color
    tree = dual_tree_edges(t, a)
    if 0 not in tree:
        raise ValueError("arborescence uses the outer triangle")
    adj: Dict[Point, List[Tuple[Point, int]]] = {}
    for i in tree:
        x, y = t.c_edge(t.white[i], c)
        adj.setdefault(x, []).append((y, i))
        adj.setdefault(y, []).append((x, i))
    k1, k2 = t.c_edge(t.white[0], c)
    expected = [p for p in t.points() if p[0] != c]
    parent_tri: Dict[Point, int] = {}
    seen = {k1, k2}
    frontier = [k1, k2]
    while frontier:
        x = frontier.pop()
        for y, i in adj.get(x, []):
            if y not in seen:
                seen.add(y)
                parent_tri[y] = i
                frontier.append(y)
    if len(seen) != len(expected) or len(tree) != len(expected) - 1:
        raise ValueError("complement of the arborescence is not a spanning tree")
    return parent_tri


def matching_from_arborescence(t: Trinity, a: Arborescence) -> Dict[Point, int]:
    """Extend an arborescence of one dual to the Tutte matching it determines."""
    d = t.oriented_dual(a.color)
    if a.root != 0 or not is_arborescence(d, 0, a.arcs):
        raise ValueError("not a spanning arborescence rooted at the root point")
    match: Dict[Point, int] = {}
    for i in a.arcs:
        match[(a.color, d.arcs[i][1])] = i
    match.update(tree_parent_triangles(t, a))
    return match


def decompose_matching(t: Trinity, matching: Mapping[Point, int]) -> Dict[str, FrozenSet[int]]:
    """Split a Tutte matching into its arc sets in the three oriented duals."""
    out = {c: set() for c in COLORS}
    for p, i in matching.items():
        out[p[0]].add(i)
    return {c: frozenset(s) for c, s in out.items()}


def matching_sign(t: Trinity, matching: Mapping[Point, int]) -> int:
    """Sign of the expansion term of ``det M`` given by a matching."""
    rows = _row_points(t)
    perm = [matching[p] - 1 for p in rows]
    inv = sum(1 for x, y in itertools.combinations(perm, 2) if x > y)
    return -1 if inv % 2 else 1


def trinity_from_json_file(path, outer_triangle: Optional[int] = None) -> Trinity:
    return build_trinity(CombMap.load(path), outer_triangle)
