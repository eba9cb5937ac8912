"""Command-line interface.

Subcommands: validate, gamma-set, tableaux, delta-char, decomp, terrain,
chi, transport, tensor-factor, selfcheck.  Results go to stdout or --out
as json, csv, or latex.  Exit codes: 0 success, 1 validation failure,
2 computation failure, 3 engine disagreement.
"""

from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ProcessPoolExecutor

from .contextio import (
    ParseError,
    context_to_json,
    multipartition_to_json,
    parse_context,
    parse_multipartition,
)
from .diagonals import chi_sequence, format_chi, i_diagonals
from .equivalence import chi_equivalent
from .gamma import NotInGamma
from .laurent import LaurentPoly, PositivityViolation
from .params import ValidationError
from .peeling import (
    EngineDisagreement,
    NonSaturatedPoset,
    decomp_number,
    gamma_peel_matrix,
    peel_matrix,
)
from .selfcheck import cross_validate
from .tableaux import delta_character, enumerate_sstd
from .tensor import factor_check, factor_context, psi_multipartition
from .terrain import UnbalancedDecoration, decorate, terrain_of
from .transport import TransportMap
from .render import terrain_ascii, terrain_svg

EXIT_OK, EXIT_VALIDATION, EXIT_COMPUTE, EXIT_DISAGREE = 0, 1, 2, 3


def _emit(payload, args):
    """Write the structured payload in the requested format."""
    fmt = getattr(args, "format", "json")
    if fmt == "json":
        text = json.dumps(payload, indent=2, sort_keys=True)
    elif fmt == "csv":
        text = _to_csv(payload)
    elif fmt == "latex":
        text = _to_latex(payload)
    else:
        raise ValueError(f"unknown format {fmt}")
    out = getattr(args, "out", None)
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
    else:
        print(text)


def _to_csv(payload) -> str:
    rows = payload.get("rows")
    if rows is None:
        rows = [[k, json.dumps(v)] for k, v in sorted(payload.items())]
    header = payload.get("columns")
    lines = []
    if header:
        lines.append(",".join(header))
    for row in rows:
        lines.append(",".join(_csv_cell(x) for x in row))
    return "\n".join(lines)


def _csv_cell(x) -> str:
    s = x if isinstance(x, str) else json.dumps(x)
    if any(ch in s for ch in ',"\n'):
        s = '"' + s.replace('"', '""') + '"'
    return s


def _to_latex(payload) -> str:
    if "latex" in payload:
        return payload["latex"]
    rows = payload.get("rows")
    if rows is None:
        return json.dumps(payload)
    lines = ["\\begin{array}{%s}" % ("l" * len(rows[0]))]
    for row in rows:
        lines.append(" & ".join(str(x) for x in row) + " \\\\")
    lines.append("\\end{array}")
    return "\n".join(lines)


def _poly_payload(poly: LaurentPoly) -> dict:
    return {
        "coefficients": poly.to_sorted_dict(),
        "pretty": str(poly),
        "latex": poly.to_latex(),
    }


def _load(args, attr="context"):
    ctx, gctx, eps = parse_context(getattr(args, attr))
    return ctx, gctx, eps


def _need_gamma(gctx):
    if gctx is None:
        raise ValidationError("this command needs gamma/residues/multiset in the context file")
    return gctx


def _mp_arg(text, name):
    return parse_multipartition(json.loads(text), name)


# ---------------------------------------------------------------------------
# subcommands
# ---------------------------------------------------------------------------


def cmd_validate(args):
    ctx, gctx, _ = _load(args)
    payload = context_to_json(ctx, gctx)
    payload["valid"] = True
    if gctx is not None:
        payload["family_size"] = len(gctx)
    _emit(payload, args)
    return EXIT_OK


def cmd_gamma_set(args):
    _, gctx, _ = _load(args)
    gctx = _need_gamma(gctx)
    edges = []
    for i, lam in enumerate(gctx.elements):
        for j, mu in enumerate(gctx.elements):
            if i == j or not gctx.leq(mu, lam):
                continue
            # Hasse edge: nothing strictly between
            if not any(
                k not in (i, j) and gctx.leq(gctx.elements[k], lam) and gctx.leq(mu, gctx.elements[k])
                for k in range(len(gctx.elements))
            ):
                edges.append([i, j])
    payload = {
        "top": multipartition_to_json(gctx.top),
        "bottom": multipartition_to_json(gctx.bottom),
        "members": [multipartition_to_json(m) for m in gctx.elements],
        "hasse_edges": edges,
        "rows": [[i, json.dumps(multipartition_to_json(m))] for i, m in enumerate(gctx.elements)],
        "columns": ["index", "multipartition"],
    }
    _emit(payload, args)
    return EXIT_OK


def cmd_tableaux(args):
    ctx, gctx, _ = _load(args)
    lam = _mp_arg(args.shape, "shape")
    mu = _mp_arg(args.weight, "weight")
    tabs = enumerate_sstd(lam, mu, ctx, gctx if args.restricted else None)
    rows = []
    for tab in tabs:
        moved = {str(a): str(b) for a, b in sorted(tab.mapping.items()) if a != b}
        rows.append([tab.degree(ctx), json.dumps(moved)])
    payload = {
        "count": len(tabs),
        "degrees": sorted(t.degree(ctx) for t in tabs),
        "rows": rows,
        "columns": ["degree", "moved_nodes"],
    }
    _emit(payload, args)
    return EXIT_OK


def cmd_delta_char(args):
    ctx, gctx, _ = _load(args)
    lam = _mp_arg(args.shape, "shape")
    mu = _mp_arg(args.weight, "weight")
    poly = delta_character(lam, mu, ctx, gctx if args.restricted else None)
    _emit(_poly_payload(poly), args)
    return EXIT_OK


def cmd_decomp(args):
    ctx, gctx, _ = _load(args)
    gctx = _need_gamma(gctx)
    if args.pair:
        lam = _mp_arg(args.pair[0], "shape")
        mu = _mp_arg(args.pair[1], "weight")
        result = decomp_number(lam, mu, gctx, engine=args.engine)
        payload = _poly_payload(result.value)
        payload["engine"] = result.engine
        if result.valid_any_field is not None:
            payload["valid_any_field"] = result.valid_any_field
        _emit(payload, args)
        return EXIT_OK
    if args.engine == "nested":
        from .terrain import nested_decomposition_number

        order = list(gctx.elements)
        entries_by_pair = {}
        for lam in order:
            for mu in order:
                if gctx.leq(mu, lam):
                    value = nested_decomposition_number(lam, mu, gctx).value
                    if value:
                        entries_by_pair[(lam, mu)] = value
    else:
        matrix = _matrix_with_jobs(gctx, args)
        if args.engine == "both":
            from .terrain import nested_decomposition_number

            for lam in gctx.elements:
                for mu in gctx.elements:
                    if not gctx.leq(mu, lam):
                        continue
                    nested = nested_decomposition_number(lam, mu, gctx).value
                    if nested != matrix.entry(lam, mu):
                        raise EngineDisagreement(
                            f"d[{lam},{mu}]: nested {nested} vs peeled {matrix.entry(lam, mu)}"
                        )
        order = matrix.order
        entries_by_pair = matrix.d
    index = {m: i for i, m in enumerate(order)}
    ordered_items = sorted(
        entries_by_pair.items(), key=lambda kv: (index[kv[0][0]], index[kv[0][1]])
    )
    entries = {
        f"{index[lam]},{index[mu]}": poly.to_sorted_dict()
        for (lam, mu), poly in ordered_items
    }
    rows = [[index[lam], index[mu], str(poly)] for (lam, mu), poly in ordered_items]
    payload = {
        "order": [multipartition_to_json(m) for m in order],
        "entries": entries,
        "rows": rows,
        "columns": ["row", "col", "d"],
    }
    _emit(payload, args)
    return EXIT_OK


def _matrix_with_jobs(gctx, args):
    jobs = getattr(args, "jobs", 1) or 1
    if jobs <= 1:
        return gamma_peel_matrix(gctx)
    doc = context_to_json(gctx.ctx, gctx)
    n = len(gctx.elements)
    pairs = [
        (i, j)
        for i in range(n)
        for j in range(n)
        if gctx.leq(gctx.elements[j], gctx.elements[i])
    ]
    table = {}
    with ProcessPoolExecutor(max_workers=jobs, initializer=_init_worker, initargs=(doc,)) as pool:
        for i, j, coeffs in pool.map(_char_worker, pairs, chunksize=16):
            table[(gctx.elements[i], gctx.elements[j])] = LaurentPoly.from_dict(coeffs)

    def characters(lam, mu):
        return table.get((lam, mu), LaurentPoly.zero())

    return peel_matrix(gctx.elements, gctx.leq, characters)


_WORKER_GCTX = None


def _init_worker(doc):
    global _WORKER_GCTX
    _WORKER_GCTX = parse_context(doc)[1]


def _char_worker(pair):
    i, j = pair
    g = _WORKER_GCTX
    poly = delta_character(g.elements[i], g.elements[j], g.ctx, gctx=g)
    return i, j, poly.to_sorted_dict()


def cmd_terrain(args):
    ctx, gctx, _ = _load(args)
    mu = _mp_arg(args.weight, "weight")
    if args.residue is not None:
        residue = ctx.residue(args.residue)
    else:
        gctx = _need_gamma(gctx)
        residue = gctx.residue
    terr = terrain_of(mu, residue, ctx)
    dt = None
    if args.decorate:
        lam = _mp_arg(args.decorate, "decorate")
        dt = decorate(mu, lam, residue, ctx)
    if args.render == "svg":
        text = terrain_svg(terr, dt)
        out = getattr(args, "out", None)
        if out:
            with open(out, "w", encoding="utf-8") as fh:
                fh.write(text + "\n")
        else:
            print(text)
        return EXIT_OK
    if args.render == "ascii":
        print(terrain_ascii(terr, dt))
        if args.paths and dt is not None:
            from .terrain import latticed_paths

            for pair in dt.pairs:
                for p in latticed_paths(dt, pair):
                    print(f"pair {pair}, norm {p.norm}:")
                    print(terrain_ascii(terr, dt, path=p))
        return EXIT_OK
    payload = {
        "residue": residue,
        "steps": [
            {"direction": "up" if s.up else "down", "node": list(s.node)}
            for s in terr.steps
        ],
    }
    if dt is not None:
        payload["opens"] = list(dt.opens)
        payload["closes"] = list(dt.closes)
        payload["pairs"] = [list(p) for p in dt.pairs]
    _emit(payload, args)
    return EXIT_OK


def cmd_chi(args):
    ctx, gctx, eps = _load(args)
    gctx = _need_gamma(gctx)
    seq = chi_sequence(gctx.gamma, gctx.residue, ctx)
    diags = i_diagonals(gctx.gamma, gctx.residue, ctx)
    payload = {
        "chi": format_chi(seq),
        "x_order": [str(d.x) for d in diags],
        "x_numeric": [str(d.x.numeric(eps)) for d in diags],
    }
    if args.compare:
        octx, ogctx, _ = parse_context(args.compare)
        ogctx = _need_gamma(ogctx)
        other = chi_sequence(ogctx.gamma, ogctx.residue, octx)
        report = chi_equivalent(seq, other, depth=args.depth)
        payload["other_chi"] = format_chi(other)
        payload["status"] = report.status
        if report.trace is not None:
            payload["trace"] = [step.describe() for step in report.trace]
            payload["rules_used"] = sorted(report.rules_used)
        if report.separating_invariant is not None:
            payload["separating_invariant"] = [
                [list(x) for x in inv] for inv in report.separating_invariant
            ]
    _emit(payload, args)
    return EXIT_OK


def cmd_transport(args):
    ctx, gctx, _ = _load(args)
    gctx = _need_gamma(gctx)
    tctx, tgctx, _ = parse_context(args.target)
    tgctx = _need_gamma(tgctx)
    tmap = TransportMap(gctx, tgctx)
    if args.shape:
        lam = _mp_arg(args.shape, "shape")
        payload = {
            "source": multipartition_to_json(lam),
            "target": multipartition_to_json(tmap.multipartition(lam)),
        }
    else:
        rows = [
            [
                json.dumps(multipartition_to_json(lam)),
                json.dumps(multipartition_to_json(tmap.multipartition(lam))),
            ]
            for lam in gctx.elements
        ]
        payload = {"rows": rows, "columns": ["source", "target"]}
    _emit(payload, args)
    return EXIT_OK


def cmd_tensor_factor(args):
    ctx, gctx, _ = _load(args)
    gctx = _need_gamma(gctx)
    fctx = factor_context(gctx)
    payload = {
        "active_residues": fctx.active_residues,
        "child_sizes": {str(r): len(fctx.children[r]) for r in fctx.active_residues},
        "family_size": len(gctx),
        "splits": [
            {
                "member": multipartition_to_json(lam),
                "factors": {
                    str(r): multipartition_to_json(p)
                    for r, p in psi_multipartition(lam, fctx).items()
                },
            }
            for lam in gctx.elements
        ],
    }
    if args.verify:
        report = factor_check(fctx)
        payload["verified"] = report.ok
        payload["pairs_checked"] = report.pairs_checked
        payload["tableaux_checked"] = report.tableaux_checked
        if not report.ok:
            payload["failure"] = report.failure
            _emit(payload, args)
            return EXIT_COMPUTE
    _emit(payload, args)
    return EXIT_OK


def cmd_selfcheck(args):
    run = cross_validate(count=args.count, seed=args.seed)
    payload = {
        "contexts": run.contexts,
        "pairs": run.pairs,
        "ok": run.ok,
    }
    if not run.ok:
        payload["failure"] = run.failure
        _emit(payload, args)
        return EXIT_DISAGREE
    _emit(payload, args)
    return EXIT_OK


# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="chercomb",
        description="graded combinatorics of diagrammatic Cherednik algebras",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, context=True):
        if context:
            p.add_argument("context", help="context file (JSON) or inline JSON text")
        p.add_argument("--out", help="write output to this file")
        p.add_argument(
            "--format", choices=["json", "csv", "latex"], default="json"
        )

    p = sub.add_parser("validate", help="validate a context file")
    common(p)
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("gamma-set", help="list the family, extremes, and Hasse edges")
    common(p)
    p.set_defaults(func=cmd_gamma_set)

    p = sub.add_parser("tableaux", help="list semistandard tableaux with degrees")
    common(p)
    p.add_argument("shape")
    p.add_argument("weight")
    p.add_argument("--restricted", action="store_true", help="pin the base nodes")
    p.set_defaults(func=cmd_tableaux)

    p = sub.add_parser("delta-char", help="graded standard character")
    common(p)
    p.add_argument("shape")
    p.add_argument("weight")
    p.add_argument("--restricted", action="store_true")
    p.set_defaults(func=cmd_delta_char)

    p = sub.add_parser("decomp", help="graded decomposition numbers")
    common(p)
    p.add_argument("--engine", choices=["nested", "kn", "both"], default="both")
    p.add_argument("--pair", nargs=2, metavar=("SHAPE", "WEIGHT"))
    p.add_argument("--matrix", action="store_true")
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(func=cmd_decomp)

    p = sub.add_parser("terrain", help="terrain of a weight, optionally decorated")
    common(p)
    p.add_argument("weight")
    p.add_argument("--decorate", metavar="SHAPE")
    p.add_argument("--residue", type=int)
    p.add_argument("--render", choices=["ascii", "svg"])
    p.add_argument("--paths", action="store_true", help="also draw every latticed path")
    p.set_defaults(func=cmd_terrain)

    p = sub.add_parser("chi", help="brick signature, optionally compared")
    common(p)
    p.add_argument("--compare", metavar="OTHER_CONTEXT")
    p.add_argument("--depth", type=int, default=8)
    p.set_defaults(func=cmd_chi)

    p = sub.add_parser("transport", help="slot transport into another context")
    common(p)
    p.add_argument("--target", required=True, metavar="OTHER_CONTEXT")
    p.add_argument("--shape")
    p.set_defaults(func=cmd_transport)

    p = sub.add_parser("tensor-factor", help="split an adjacency-free family by residue")
    common(p)
    p.add_argument("--verify", action="store_true")
    p.set_defaults(func=cmd_tensor_factor)

    p = sub.add_parser("selfcheck", help="random cross-validation of both engines")
    common(p, context=False)
    p.add_argument("--count", type=int, default=50)
    p.add_argument("--seed", type=int, default=20240)
    p.set_defaults(func=cmd_selfcheck)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except EngineDisagreement as exc:
        print(json.dumps({"error": "engine disagreement", "detail": str(exc)}))
        return EXIT_DISAGREE
    except (PositivityViolation, NonSaturatedPoset) as exc:
        print(json.dumps({"error": "computation failure", "detail": str(exc)}))
        return EXIT_COMPUTE
    except (ParseError, ValidationError, ValueError, NotInGamma, UnbalancedDecoration) as exc:
        print(json.dumps({"error": "validation failure", "detail": str(exc)}))
        return EXIT_VALIDATION


if __name__ == "__main__":
    sys.exit(main())
