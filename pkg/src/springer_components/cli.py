"""Command-line front end.

Exit codes: 0 success, 1 a verification found a counterexample, 2 invalid
input, 3 the requested enumeration exceeds the budget.
"""

from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ProcessPoolExecutor
from typing import Callable, Sequence

from . import components as comp
from . import exceptional as exc
from . import lusztig
from .clusters import clusters, open_partition
from .errors import Infeasible, InvalidInput
from .f2 import monomial
from .ncp import enumerate_even_ncp, ncp_group, render_ncp_diagram, s_set
from .partitions import (
    OrbitDatum,
    datum_for,
    format_parts,
    parse_parts,
    springer_fiber_dim,
    sweep_partitions,
    validate_partition,
)
from .tableaux import DominoTableau, domino_kinds, enumerate_sdt, is_admissible

EXIT_OK, EXIT_COUNTEREXAMPLE, EXIT_INVALID, EXIT_INFEASIBLE = 0, 1, 2, 3


# --- rendering -------------------------------------------------------------

def render_tableau(t: DominoTableau, signs: dict[int, str] | None = None) -> str:
    """Box drawing of a domino tableau.

    Interior walls are drawn only between boxes of different dominoes.  The
    label sits in the first box of each domino; when ``signs`` maps an I+ label
    to '+' or '-', the sign is printed in its second box.
    """
    if not t.shape:
        return ""
    rows, cols = len(t.shape), t.shape[0]
    h, w = 2 * rows + 1, 4 * cols + 1
    canvas = [[" "] * w for _ in range(h)]

    def lab(r, c):
        if 0 <= r < rows and 0 <= c < t.shape[r]:
            return t.grid[r][c]
        return None

    for r in range(rows + 1):
        for c in range(cols):
            above, below = lab(r - 1, c), lab(r, c)
            if (above is not None or below is not None) and above != below:
                for x in range(4 * c + 1, 4 * c + 4):
                    canvas[2 * r][x] = "-"
    for r in range(rows):
        for c in range(cols + 1):
            left, right = lab(r, c - 1), lab(r, c)
            if (left is not None or right is not None) and left != right:
                canvas[2 * r + 1][4 * c] = "|"
    for y in range(0, h, 2):
        for x in range(0, w, 4):
            horiz = (x > 0 and canvas[y][x - 1] != " ") or (x + 1 < w and canvas[y][x + 1] != " ")
            vert = (y > 0 and canvas[y - 1][x] != " ") or (y + 1 < h and canvas[y + 1][x] != " ")
            left = x > 0 and canvas[y][x - 1] != " "
            right = x + 1 < w and canvas[y][x + 1] != " "
            up = y > 0 and canvas[y - 1][x] != " "
            down = y + 1 < h and canvas[y + 1][x] != " "
            if vert and not horiz and up and down:
                canvas[y][x] = "|"
            elif horiz and not vert and left and right:
                canvas[y][x] = "-"
            elif horiz or vert:
                canvas[y][x] = "+"

    def put(box, text):
        r, c = box
        text = text.center(3)
        for k, ch in enumerate(text):
            canvas[2 * r + 1][4 * c + 1 + k] = ch

    if t.has_center_box:
        put((0, 0), "0")
    for label, d in t.dominoes.items():
        first, second = d.boxes
        put(first, str(label))
        if signs and label in signs:
            put(second, signs[label])
    return "\n".join("".join(line).rstrip() for line in canvas)


def class_signs_for_render(c: comp.SignedClass) -> dict[int, str]:
    """Sign of each cluster, drawn in the first I+ domino of that cluster."""
    d = c.decomposition
    out = {}
    for cid, members in d.iplus_members.items():
        if members and cid != d.base_cluster:
            out[members[0]] = "+" if c.sign_of[cid] > 0 else "-"
    return out


# --- helpers ---------------------------------------------------------------

def _datum(args) -> OrbitDatum:
    if not args.partition:
        raise InvalidInput("--partition is required")
    return datum_for(parse_parts(args.partition), args.type, args.isogeny)


def _emit(args, payload, text: str) -> None:
    if args.format == "json":
        print(json.dumps(payload, indent=2))
    else:
        print(text)


def _subgroup_json(s) -> dict:
    d = s.to_dict()
    d["text"] = str(s)
    return d


# --- subcommands -----------------------------------------------------------

def cmd_sdt(args) -> int:
    parts = parse_parts(args.partition)
    shape = tuple(sorted(parts, reverse=True))
    tabs = enumerate_sdt(shape)
    items, blocks = [], []
    for k, t in enumerate(tabs, 1):
        adm = is_admissible(t, args.type) if _classifiable(shape, args.type) else False
        kinds = None
        if adm:
            kinds = {str(lab): str(kind) for lab, kind in domino_kinds(t, args.type).items()}
        items.append({**t.to_dict(), "admissible": adm, "kinds": kinds})
        tag = "admissible" if adm else "not admissible"
        blocks.append(f"T{k} ({tag})\n{render_tableau(t)}")
    payload = {"shape": list(shape), "type": args.type, "count": len(tabs), "tableaux": items}
    _emit(args, payload, f"{len(tabs)} standard domino tableaux of shape {format_parts(shape)}\n\n" + "\n\n".join(blocks))
    return EXIT_OK


def _classifiable(shape, lie_type) -> bool:
    try:
        validate_partition(shape, lie_type)
    except InvalidInput:
        return False
    return True


def cmd_components(args) -> int:
    d = _datum(args)
    classes = comp.enumerate_components(d, args.budget)
    items = [c.to_dict() for c in classes]
    blocks = []
    for k, c in enumerate(classes, 1):
        signs = " ".join(f"{cid}:{'+' if s > 0 else '-'}" for cid, s in c.signs)
        blocks.append(f"class {k}  signs {signs}\n{render_tableau(c.tableau, class_signs_for_render(c))}")
    payload = {"partition": list(d.partition.parts), "count": len(classes), "classes": items}
    _emit(args, payload, f"{len(classes)} components for {d.partition}\n\n" + "\n\n".join(blocks))
    return EXIT_OK


def cmd_clusters(args) -> int:
    d = _datum(args)
    if d.lie_type != "C":
        raise InvalidInput("cluster decompositions are implemented for type C only")
    items, blocks = [], []
    for k, t in enumerate(comp._tableaux(d), 1):
        dec = clusters(t)
        good = comp.good_open_clusters(dec, d)
        items.append({"tableau": t.to_dict(), **dec.to_dict(), "good": sorted(good)})
        lines = [f"T{k}", render_tableau(t)]
        for cid, members in dec.clusters.items():
            status = "open" if cid in dec.open_set else "closed"
            pre = sorted(dec.preimage(cid), reverse=True)
            over = f" <- {pre}" if pre else ""
            lines.append(f"  cluster {list(members)} {status}{over}")
        blocks.append("\n".join(lines))
        blocks[-1] += "\n  open partition: " + " ".join(
            "{" + ",".join(map(str, sorted(b))) + "}" for b in open_partition(dec)
        )
    payload = {"partition": list(d.partition.parts), "decompositions": items}
    _emit(args, payload, "\n\n".join(blocks))
    return EXIT_OK


def cmd_stab(args) -> int:
    d = _datum(args)
    rep = comp.orbit_report(d, args.budget)
    payload = rep.to_dict()
    payload["stabSet"] = [_subgroup_json(s) for s in sorted(rep.stab_set)]
    payload["consistent"] = rep.consistent()
    lines = [f"{d.partition}: {rep.total} components in {len(rep.orbits)} orbits"]
    for o in rep.orbits:
        lines.append(f"  orbit of size {o.size}, stabilizer {o.stabilizer}")
    lines.append("Stab(e) = {" + ", ".join(str(s) for s in sorted(rep.stab_set)) + "}")
    _emit(args, payload, "\n".join(lines))
    return EXIT_OK


def cmd_ncp(args) -> int:
    d = _datum(args)
    items, blocks = [], []
    for p in enumerate_even_ncp(d):
        g = ncp_group(p, d)
        items.append({"ncp": p.to_dict(), "group": _subgroup_json(g)})
        blocks.append(f"{p}  ->  {g}\n{render_ncp_diagram(p)}")
    groups = sorted(s_set(d))
    payload = {
        "partition": list(d.partition.parts),
        "type": d.lie_type,
        "ncps": items,
        "s_set": [_subgroup_json(s) for s in groups],
    }
    text = "\n\n".join(blocks) + "\n\nS(e) = {" + ", ".join(map(str, groups)) + "}"
    _emit(args, payload, text)
    return EXIT_OK


def cmd_tl(args) -> int:
    d = _datum(args)
    q = lusztig.canonical_quotient(d)
    items, lines = [], [f"Z = {list(lusztig.tl_zset(d))}"]
    for t in lusztig.enumerate_tl(d):
        h = lusztig.h_sigma(t, d)
        items.append({"pattern": t.to_dict(), "h_sigma": _subgroup_json(h), "h_text": q.describe(h)})
        lines.append(f"  {t}  ->  {q.describe(h)}")
    payload = {"partition": list(d.partition.parts), "z": list(lusztig.tl_zset(d)), "patterns": items}
    _emit(args, payload, "\n".join(lines))
    return EXIT_OK


def cmd_quotient(args) -> int:
    d = _datum(args)
    q = lusztig.canonical_quotient(d)
    names = q.basis_names()
    proj = {f"t{j}": monomial(q.projection[j - 1], names) for j in range(1, d.ell + 1)}
    payload = {
        "partition": list(d.partition.parts),
        "kernel": _subgroup_json(q.kernel),
        "quotient_basis": list(q.quotient_basis_indexes),
        "rank": q.rank,
        "projection": proj,
        "springer_fiber_dim": springer_fiber_dim(d.partition),
    }
    text = "\n".join([
        f"K_e = {q.kernel}",
        f"quotient basis: {', '.join(names) or '(trivial quotient)'}",
        "projection: " + ", ".join(f"{k} -> {v}" for k, v in proj.items()),
        f"dim of the Springer fiber: {springer_fiber_dim(d.partition)}",
    ])
    _emit(args, payload, text)
    return EXIT_OK


# --- verification harness ---------------------------------------------------

def _check_mainthm(parts: tuple[int, ...]) -> dict:
    d = datum_for(parts, "C")
    rep = comp.orbit_report(d)
    want = s_set(d)
    ok = rep.consistent() and rep.stab_set == want
    out = {"partition": list(parts), "verdict": "pass" if ok else "fail", "components": rep.total}
    if not ok:
        out["stab_set"] = sorted(map(str, rep.stab_set))
        out["s_set"] = sorted(map(str, want))
        out["formula_matches_brute_force"] = rep.consistent()
    return out


def _check_evidence(parts: tuple[int, ...]) -> dict:
    rep = lusztig.verify_evidence(datum_for(parts, "C"))
    out = {"partition": list(parts), "verdict": "pass" if rep.passed else "fail"}
    if not rep.passed:
        q = rep.quotient
        out["images"] = sorted(q.describe(s) for s in rep.image_set)
        out["h_sigma"] = sorted(q.describe(s) for s in rep.h_set)
    return out


def _sweep(args, check: Callable[[tuple[int, ...]], dict]) -> int:
    if args.type != "C":
        raise InvalidInput("the verification sweeps are implemented for type C only")
    todo = [p.parts for p in sweep_partitions(args.max, "C")]
    failures = []

    def report(res):
        if res["verdict"] != "pass":
            failures.append(res)
        if args.format == "json":
            print(json.dumps(res), flush=True)
        else:
            print(f"{res['verdict'].upper()}  {format_parts(res['partition'])}", flush=True)

    if args.jobs > 1:
        with ProcessPoolExecutor(args.jobs) as pool:
            for res in pool.map(check, todo):  # map keeps partition order
                report(res)
    else:
        for parts in todo:
            report(check(parts))
    summary = {
        "range": f"2n <= {args.max}",
        "partitions": len(todo),
        "failures": len(failures),
        "counterexamples": failures,
    }
    if args.format == "json":
        print(json.dumps({"summary": summary}))
    else:
        verdict = "all pass" if not failures else f"{len(failures)} counterexample(s)"
        print(f"{len(todo)} partitions with 2n <= {args.max}: {verdict}")
    return EXIT_OK if not failures else EXIT_COUNTEREXAMPLE


def cmd_verify_mainthm(args) -> int:
    return _sweep(args, _check_mainthm)


def cmd_verify_evidence(args) -> int:
    return _sweep(args, _check_evidence)


def cmd_exceptional_solve(args) -> int:
    family, chi = args.family, None
    if args.input:
        with open(args.input) as fh:
            data = json.load(fh)
        family, chi = data.get("family", family), data.get("chi")
    if args.chi:
        chi = [int(x) for x in args.chi.split(",")]
    if not family:
        raise InvalidInput("--family is required")
    table = exc.build_table(exc.get_family(family), check=False)
    if args.show_table or chi is None:
        lines = ["\t".join([f"{table.family.label}"] + table.column_labels)]
        lines += ["\t".join([name] + [str(x) for x in row]) for name, row in zip(table.row_names, table.rows)]
        rank_note = "invertible" if exc.is_invertible(table) else f"rank {exc.table_rank(table)} (singular)"
        _emit(args, {**table.to_dict(), "invertible": exc.is_invertible(table)}, "\n".join(lines) + f"\n{rank_note}")
        if chi is None:
            return EXIT_OK
    if not exc.is_invertible(table):
        raise exc.SingularTable(f"the {table.family.label} table has dependent rows; multiplicities are not unique")
    a = exc.solve_multiplicities(table, chi)
    payload = exc.multiplicities_dict(table, a)
    _emit(args, payload, "\n".join(f"{name}: {v}" for name, v in zip(table.row_names, a)))
    return EXIT_OK


# --- parser ------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="springer-components",
        description="Springer-fiber components via signed domino tableaux and noncrossing partitions.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, partition=True):
        p.add_argument("--type", default="C", choices=["B", "C", "D"], help="classical type (default C)")
        if partition:
            p.add_argument("--partition", help="parts, e.g. 4,4,2,2 or 100^3,38^3,16^2")
        p.add_argument("--isogeny", default="O", choices=["O", "SO"], help="B/D only")
        p.add_argument("--format", default="ascii", choices=["ascii", "json"])
        p.add_argument("--budget", type=int, default=comp.DEFAULT_BUDGET, help="cap on enumerated components")
        return p

    table = [
        ("sdt", cmd_sdt, "standard domino tableaux of a shape, with admissibility"),
        ("components", cmd_components, "signed classes parameterizing the components"),
        ("clusters", cmd_clusters, "cluster decomposition of every admissible tableau"),
        ("stab", cmd_stab, "orbits and stabilizers of the component-group action"),
        ("ncp", cmd_ncp, "even noncrossing partitions and their subgroups"),
        ("tl", cmd_tl, "Temperley-Lieb patterns and their subgroups"),
        ("quotient", cmd_quotient, "canonical quotient of the component group"),
    ]
    for name, fn, help_text in table:
        p = common(sub.add_parser(name, help=help_text))
        p.set_defaults(func=fn)
    for name, fn in (("verify-mainthm", cmd_verify_mainthm), ("verify-evidence", cmd_verify_evidence)):
        p = common(sub.add_parser(name, help="sweep all type-C partitions up to --max"), partition=False)
        p.add_argument("--max", type=int, required=True, help="largest 2n to sweep")
        p.add_argument("--jobs", type=int, default=1, help="worker processes")
        p.set_defaults(func=fn)
    p = sub.add_parser("exceptional-solve", help="orbit multiplicities from permutation-character values")
    p.add_argument("--family", help="S2, S3, G2(a1), E8(b6), S4 or S5")
    p.add_argument("--chi", help="character values on the classes, comma separated")
    p.add_argument("--input", help='JSON file {"family": ..., "chi": [...]}')
    p.add_argument("--show-table", action="store_true")
    p.add_argument("--format", default="ascii", choices=["ascii", "json"])
    p.set_defaults(func=cmd_exceptional_solve)
    return parser


def run(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except InvalidInput as e:
        print(f"error: {type(e).__name__}: {e}", file=sys.stderr)
        return EXIT_INVALID
    except Infeasible as e:
        print(f"error: {type(e).__name__}: {e}", file=sys.stderr)
        return EXIT_INFEASIBLE


def main(argv: Sequence[str] | None = None) -> None:
    sys.exit(run(argv))


if __name__ == "__main__":
    main()
