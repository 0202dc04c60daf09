"""Command line interface.

Exit codes: 0 success, 2 input error, 3 precondition violation, 4 a property
check failed.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import List, Optional

from . import hypertree as ht
from .lattice import is_convex_lattice_set
from .planar import (COLOR_NAMES, CombMap, MapError, NotTwoConnected, adjacency_matrix, build_trinity,
                     color_code, enhanced_matrix, enumerate_arborescences)
from .polyring import LaurentPoly, canonical_form, det, equal_up_to_monomial, format_poly
from .torsion import (InadmissibleOrder, arborescence_from_names, build_loops, deconstruction_order,
                      dual_tree_pair, replay_elimination, support_from_torsion, torsion_raw)

EXIT_OK, EXIT_INPUT, EXIT_PRECONDITION, EXIT_CHECK = 0, 2, 3, 4


class CliError(Exception):
    def __init__(self, code: int, message: str):
        super().__init__(message)
        self.code = code


# --- loading -----------------------------------------------------------------

def _read_json(path: str):
    try:
        with open(path) as fh:
            return json.load(fh)
    except OSError as exc:
        raise CliError(EXIT_INPUT, f"cannot read {path}: {exc.strerror}") from None
    except json.JSONDecodeError as exc:
        raise CliError(EXIT_INPUT, f"{path}: invalid JSON ({exc})") from None


class Instance:
    """A graph file, its trinity, and the arborescence/order choices in force."""

    def __init__(self, path: str, args):
        self.data = _read_json(path)
        try:
            g = CombMap.from_json(self.data)
        except MapError as exc:
            raise CliError(EXIT_INPUT, f"{path}: {exc}") from None
        overridden = args.outer_face is not None or args.outer_triangle is not None
        if args.outer_face is not None:
            g.outer_face = args.outer_face
        try:
            self.t = build_trinity(g, args.outer_triangle)
        except NotTwoConnected as exc:
            raise CliError(EXIT_PRECONDITION, str(exc)) from None
        except MapError as exc:
            raise CliError(EXIT_INPUT, f"{path}: {exc}") from None
        # stored choices refer to the stored root; drop them when roots move
        self.stored_arb = None if overridden else self.data.get("arborescence")
        self.stored_order = None if overridden else self.data.get("order")
        self.args = args

    def arborescences(self):
        arbs = enumerate_arborescences(self.t.oriented_dual("R"), 0)
        return sorted(arbs, key=lambda a: sorted(a.arcs))

    def pair(self, index: Optional[int] = None):
        index = self.args.arborescence if index is None else index
        try:
            if index is None and self.stored_arb is not None:
                a = arborescence_from_names(self.t, self.stored_arb)
            else:
                arbs = self.arborescences()
                k = index or 0
                if not 0 <= k < len(arbs):
                    raise CliError(EXIT_INPUT, f"arborescence index {k} out of range (0..{len(arbs) - 1})")
                a = arbs[k]
            return dual_tree_pair(self.t, a)
        except ValueError as exc:
            raise CliError(EXIT_PRECONDITION, str(exc)) from None

    def order(self, pair, explicit: bool = True):
        names = None
        if self.args.order:
            names = [x for x in self.args.order.split(",") if x.strip()]
        elif explicit and self.args.arborescence is None and self.stored_order is not None:
            names = self.stored_order
        try:
            return deconstruction_order(pair, names)
        except InadmissibleOrder as exc:
            raise CliError(EXIT_PRECONDITION, str(exc)) from None
        except ValueError as exc:
            raise CliError(EXIT_INPUT, str(exc)) from None


def _poly(p: LaurentPoly, nv: int) -> str:
    return format_poly(p, nv)


def _canon(p: LaurentPoly) -> LaurentPoly:
    return canonical_form(p)[0] if p else p


# --- commands ----------------------------------------------------------------

def cmd_trinity(args) -> dict:
    inst = Instance(args.input, args)
    return inst.t.to_json()


def cmd_hypertrees(args) -> dict:
    data = _read_json(args.input)
    try:
        if "hyperedges" in data:
            h = ht.Hypergraph.from_json(data)
        else:
            cv, ce = (color_code(c) for c in args.colors.split(","))
            h = ht.planar_dual(Instance(args.input, args).t, cv, ce)
    except (KeyError, TypeError, ValueError) as exc:
        raise CliError(EXIT_INPUT, f"{args.input}: {exc}") from None
    if not h.is_connected():
        raise CliError(EXIT_PRECONDITION, "bip(H) is not connected")
    brute = ht.enumerate_hypertrees_bruteforce(h)
    poly = ht.enumerate_hypertrees_polytope(h)
    if brute.vectors != poly.vectors:
        raise CliError(EXIT_CHECK, "enumeration methods disagree")
    vecs = brute.sorted()
    return {"hypergraph": h.to_json(), "count": len(vecs), "hypertrees": [list(v) for v in vecs],
            "generating_polynomial": format_poly(ht.generating_polynomial(vecs), len(h.hyperedges))}


def cmd_torsion(args) -> dict:
    inst = Instance(args.input, args)
    t = inst.t
    nv = t.count("R")
    loops = build_loops(inst.pair())
    raw = torsion_raw(loops, keep_r0=args.keep_r0)
    tau = _canon(raw)
    enhanced = det(enhanced_matrix(t))
    ok, unit = equal_up_to_monomial(raw, enhanced if args.keep_r0 else enhanced.substitute({0: 1}))
    return {"words": [str(w) for w in loops.words], "torsion": _poly(tau, nv),
            "detM_enhanced": _poly(_canon(enhanced), nv),
            "unit": _poly(unit, nv) if ok else None}


def cmd_replay(args) -> dict:
    inst = Instance(args.input, args)
    p = inst.pair()
    order = inst.order(p)
    r = replay_elimination(inst.t, p, order)
    nv = inst.t.count("R")
    mats = [[[_poly(x, nv) for x in row] for row in m.to_rows()] for m in r.steps]
    return {"arborescence": [f"t{i}" for i in sorted(p.arborescence.arcs)],
            "order": order.names(),
            "rows": r.row_labels, "columns": r.col_labels, "steps": mats,
            "pivots": [_poly(x, nv) for x in r.pivots],
            "block": [[_poly(x, nv) for x in row] for row in r.block.to_rows()],
            "pivot_product": _poly(r.pivot_product, nv),
            "det_relation": r.det_sign, "columns_match": r.columns_match, "max_cans": r.max_cans}


def cmd_verify(args) -> dict:
    inst = Instance(args.input, args)
    t = inst.t
    nv = t.count("R")
    d_m = det(adjacency_matrix(t))
    d_enh = det(enhanced_matrix(t))
    q_er = ht.enumerate_hypertrees_bruteforce(ht.planar_dual(t, "E", "R"))
    q_vr = ht.enumerate_hypertrees_bruteforce(ht.planar_dual(t, "V", "R"))
    target = ht.normalize_translation(q_er.vectors)
    checks = {}
    pairs = [inst.pair(k) for k in range(len(inst.arborescences()))] if args.all_arborescences else [inst.pair()]
    supports, theorem = None, True
    taus = set()
    for p in pairs:
        tau = _canon(torsion_raw(build_loops(p)))
        taus.add(tau)
        sup = support_from_torsion(tau, t)
        if supports is None:
            supports = sup
        theorem &= sup.points == target
    checks["theorem"] = theorem
    checks["choice_independence"] = len(taus) == 1
    checks["symmetry"] = ht.translation_between(target, ht.normalize_translation(ht.negate(q_vr.vectors))) is not None
    checks["convexity"] = is_convex_lattice_set(q_er.vectors) and is_convex_lattice_set(supports.points)
    dm = abs(next(iter(d_m.terms.values()))) if d_m else 0
    counts = {c: len(enumerate_arborescences(t.oriented_dual(c), 0)) for c in "REV"}
    sizes = [len(ht.enumerate_hypertrees_bruteforce(h)) for h in ht.all_six_hypergraphs(t).values()]
    checks["cardinalities"] = all(v == dm for v in counts.values()) and all(s == dm for s in sizes) \
        and len(supports) == dm
    report = {"summary": t.summary(), "detM": dm, "detM_enhanced": _poly(_canon(d_enh), nv),
              "torsion": _poly(next(iter(taus)), nv),
              "hypertrees": [list(v) for v in q_er.sorted()],
              "support": [list(v) for v in supports.sorted()],
              "arborescence_counts": {COLOR_NAMES[c]: n for c, n in counts.items()}}
    p = pairs[0]
    r = replay_elimination(t, p, inst.order(p, explicit=not args.all_arborescences), check_det=args.replay)
    report["pivot_product"] = _poly(r.pivot_product, nv)
    if args.replay:
        checks["replay"] = r.det_sign is not None and r.columns_match and r.max_cans <= 2
    report["theorem_holds"] = theorem
    report["checks"] = checks
    report["ok"] = all(checks.values())
    return report


# --- text rendering ----------------------------------------------------------

def _text(command: str, out: dict) -> str:
    lines: List[str] = []
    if command == "trinity":
        s = out["summary"]
        lines.append(f"|R|={s['R']} |E|={s['E']} |V|={s['V']} n={s['n']}")
        for tri in out["triangles"]:
            lines.append(f"{tri['name']}: {' '.join(tri['corners'])}")
    elif command == "hypertrees":
        lines += [" ".join(map(str, v)) for v in out["hypertrees"]]
        lines.append(out["generating_polynomial"])
    elif command == "torsion":
        lines += [f"W{k + 1} = {w}" for k, w in enumerate(out["words"])]
        lines.append(f"torsion: {out['torsion']}")
    elif command == "replay":
        lines.append("rows: " + " ".join(out["rows"]))
        lines.append("columns: " + " ".join(out["columns"]))
        for k, m in enumerate(out["steps"]):
            lines.append(f"-- step {k}")
            lines += [" | ".join(row) for row in m]
        lines.append("pivots: " + ", ".join(out["pivots"]))
        lines.append("pivot product: " + out["pivot_product"])
    else:
        for key in ("detM", "detM_enhanced", "torsion", "pivot_product", "theorem_holds"):
            lines.append(f"{key}: {out[key]}")
        for name, ok in out["checks"].items():
            lines.append(f"{'PASS' if ok else 'FAIL'} {name}")
    return "\n".join(lines)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="hypertorsion",
                                     description="Trinities, hypertrees and Turaev torsion of plane bipartite graphs.")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("input", help="graph JSON (or hypergraph JSON for 'hypertrees')")
    common.add_argument("--outer-face", type=int, help="face whose red point becomes r0")
    common.add_argument("--outer-triangle", type=int, help="G-edge whose white triangle becomes t0")
    common.add_argument("--arborescence", type=int, help="index into the sorted red-dual arborescences")
    common.add_argument("--order", help="deconstruction order, e.g. v3,v2,e3")
    common.add_argument("--format", choices=("json", "text"), default="json")
    sub = parser.add_subparsers(dest="command", required=True)
    sub.add_parser("trinity", parents=[common], help="describe the trinity")
    p = sub.add_parser("hypertrees", parents=[common], help="enumerate hypertrees")
    p.add_argument("--colors", default="E,R", help="vertex color, hyperedge color (default E,R)")
    p = sub.add_parser("torsion", parents=[common], help="loop words and Turaev torsion")
    p.add_argument("--keep-r0", action="store_true", help="keep r0 symbolic instead of setting it to 1")
    sub.add_parser("replay", parents=[common], help="replay the elimination on the enhanced matrix")
    p = sub.add_parser("verify", parents=[common], help="run every check")
    p.add_argument("--all-arborescences", action="store_true")
    p.add_argument("--replay", action="store_true")
    return parser


COMMANDS = {"trinity": cmd_trinity, "hypertrees": cmd_hypertrees, "torsion": cmd_torsion,
            "replay": cmd_replay, "verify": cmd_verify}


def main(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        out = COMMANDS[args.command](args)
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.code
    if args.format == "json":
        print(json.dumps(out, indent=2))
    else:
        print(_text(args.command, out))
    if args.command == "verify" and not out["ok"]:
        failed = next(k for k, v in out["checks"].items() if not v)
        print(f"check failed: {failed}", file=sys.stderr)
        return EXIT_CHECK
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
