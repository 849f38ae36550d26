"""Command-line entry point: ``modcontent <subcommand> ...``.

Exit codes: 0 success, 1 invalid input, 2 size bound exceeded, 3 internal
inconsistency.  Data goes to stdout, diagnostics to stderr.
"""
from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from . import __version__
from .cyclotomic import cyclotomic
from .dessin import build_dessin, export_dessin, surface_invariants
from .errors import (LiftFailure, ModContentError, NegativeArrowCount, NoMediant, NonConvergence,
                     SizeBoundExceeded)
from .farey import format_symbol, iguanodon_symbol, parse_symbol, symbol_to_json, triangulate
from .habiro import (clique_graph, comaximal, cyclotomic_resultant, evaluate_at_root, kontsevich,
                     zagier_radial_check)
from .permgroup import CLASS_ENUM_BOUND, Permutation, PermutationGroup, group_from_dessin
from .quiver import (DimensionVector5, dimvec_from_character, euler_form, family_dimension,
                     modular_content, one_quiver_modular, part_dimension_vectors,
                     surface_local_quiver)
from .reptheory import (BRUTE_BOUND, character_table, decompose_permutation,
                        tqft_count_brute, tqft_count_characters)

INTERNAL_ERRORS = (LiftFailure, NegativeArrowCount, NoMediant, NonConvergence)


def _emit(args, report: dict, lines: Sequence[str]) -> None:
    if args.json:
        report = {"version": __version__, "seed": args.seed, **report}
        sys.stdout.write(json.dumps(report, indent=2, sort_keys=True) + "\n")
    else:
        sys.stdout.write("\n".join(lines) + "\n")


def _symbol(args):
    if getattr(args, "iguanodon", None) is not None:
        return iguanodon_symbol(args.iguanodon)
    if not args.symbol:
        raise argparse.ArgumentTypeError("give a symbol or --iguanodon N")
    return parse_symbol(args.symbol)


def _vector(text: str) -> DimensionVector5:
    parts = text.replace(";", ",").split(",")
    if len(parts) != 5:
        raise argparse.ArgumentTypeError(f"expected five comma-separated integers, got {text!r}")
    return DimensionVector5(*(int(x) for x in parts))


# -- subcommands ---------------------------------------------------------------

def cmd_farey(args) -> None:
    s = _symbol(args)
    tri = triangulate(s)
    report = {"symbol": format_symbol(s), "json": symbol_to_json(s),
              "triangles": len(tri.triangles),
              "pairings": {k: s.count(k) for k in ("even", "odd", "free")}}
    _emit(args, report, [f"symbol: {report['symbol']}",
                         f"triangles: {report['triangles']}",
                         "pairings: " + ", ".join(f"{k} {v}" for k, v in report["pairings"].items())])


def cmd_dessin(args) -> None:
    D = build_dessin(_symbol(args))
    if args.export:
        sys.stdout.write(export_dessin(D, args.export).rstrip("\n") + "\n")
        return
    inv = surface_invariants(D)
    report = {"degree": D.degree, "sigma0": D.sigma0.to_images(), "sigma1": D.sigma1.to_images(),
              "genus": inv.genus, "cusps": inv.cusps, "e2": inv.e2, "e3": inv.e3}
    _emit(args, report, [f"degree: {D.degree}",
                         f"sigma0: {D.sigma0.cycle_string()}",
                         f"sigma1: {D.sigma1.cycle_string()}",
                         f"genus {inv.genus}, cusps {inv.cusps}, e2 {inv.e2}, e3 {inv.e3}"])


def _group_from_args(args) -> PermutationGroup:
    if args.perm:
        gens = [Permutation.from_cycles(p, args.degree) for p in args.perm]
        return PermutationGroup(gens, degree=args.degree, seed=args.seed)
    return group_from_dessin(build_dessin(_symbol(args)), seed=args.seed)


def cmd_group(args) -> None:
    G = _group_from_args(args)
    order = G.order()
    transitive = G.is_transitive()
    report = {"degree": G.degree, "order": order, "transitive": transitive,
              "two_transitive": G.is_2transitive() if transitive else False,
              "classification": G.is_alternating_or_symmetric()}
    lines = [f"degree: {G.degree}", f"order: {order}", f"transitive: {transitive}",
             f"2-transitive: {report['two_transitive']}",
             f"classification: {report['classification']}"]
    if args.table:
        table = character_table(G, args.class_bound)
        report["character_table"] = table.to_json()
        lines.append(f"character degrees: {' '.join(map(str, table.degrees))}")
    if args.tqft is not None:
        counts = {"genus": args.tqft, "characters": tqft_count_characters(args.tqft, G, args.class_bound)}
        if order ** (2 * args.tqft) <= args.brute_bound:
            counts["brute"] = tqft_count_brute(args.tqft, G, args.brute_bound)
        report["tqft"] = counts
        lines.append(f"homomorphisms from the genus-{args.tqft} surface group: {counts['characters']}"
                     + (f" (brute force {counts['brute']})" if "brute" in counts else ""))
    _emit(args, report, lines)


def content_report(s, seed: int = 0, class_bound: int = CLASS_ENUM_BOUND,
                   iguanodon: int | None = None) -> dict:
    """Full pipeline: symbol -> dessin -> group -> decomposition -> local quiver."""
    D = build_dessin(s)
    inv = surface_invariants(D)
    G = group_from_dessin(D, seed=seed)
    order = G.order()
    two = G.is_2transitive()
    dec = decompose_permutation(G, D, bound=class_bound)
    dims = part_dimension_vectors(dec)
    whole = dimvec_from_character(D.degree, D.sigma1.fixed_points(), D.sigma0.fixed_points(),
                                  (D.sigma0 * D.sigma0).fixed_points())
    total = DimensionVector5(0, 0, 0, 0, 0)
    for p, v in zip(dec.parts, dims):
        total = total + v.scaled(p.multiplicity)
    if total != whole or sum(p.multiplicity * p.degree for p in dec.parts) != D.degree:
        raise LiftFailure("decomposition is inconsistent with the permutation representation")
    quiver = modular_content(dec)
    report = {
        "symbol": format_symbol(s),
        "degree": D.degree,
        "sigma0_cycle_type": D.sigma0.cycle_type(),
        "sigma1_cycle_type": D.sigma1.cycle_type(),
        "group_order": order,
        "transitive": True,
        "two_transitive": two,
        "classification": {"tag": G.is_alternating_or_symmetric(), "order": order},
        "surface": {"genus": inv.genus, "cusps": inv.cusps, "e2": inv.e2, "e3": inv.e3},
        "decomposition": {
            "method": dec.method,
            "parts": [{"label": p.label, "multiplicity": p.multiplicity, "degree": p.degree,
                       "chi_sigma0": p.at_sigma0.to_json(),
                       "chi_sigma0_sq": p.at_sigma0_sq.to_json(),
                       "chi_sigma1": p.at_sigma1.to_json()} for p in dec.parts],
        },
        "dimension_vectors": {"parts": [v.to_list() for v in dims], "permutation": whole.to_list()},
        "content": quiver.to_json(),
        "notes": [],
    }
    n = iguanodon
    if n is not None and len(dec.parts) == 2 and quiver.arrows[1][1] == 2 * n * n:
        report["notes"].append(
            f"loops at the second vertex are 1 - chi(alpha, alpha) = 2n^2 = {2 * n * n}; "
            f"a drawing with n^2 = {n * n} doubled loops counts the same arrows in pairs")
    return report


def cmd_content(args) -> None:
    report = content_report(_symbol(args), args.seed, args.class_bound, args.iguanodon)
    lines = [f"symbol: {report['symbol']}",
             f"degree: {report['degree']}",
             f"group order: {report['group_order']} ({report['classification']['tag']})",
             f"2-transitive: {report['two_transitive']}",
             "surface: genus {genus}, cusps {cusps}, e2 {e2}, e3 {e3}".format(**report["surface"]),
             f"decomposition ({report['decomposition']['method']}):"]
    for part, dim in zip(report["decomposition"]["parts"], report["dimension_vectors"]["parts"]):
        lines.append(f"  {part['label']}: multiplicity {part['multiplicity']}, "
                     f"degree {part['degree']}, dimension vector {dim}")
    lines.append(f"permutation dimension vector: {report['dimension_vectors']['permutation']}")
    lines.append(f"content arrows: {report['content']['arrows']}")
    lines += [f"note: {n}" for n in report["notes"]]
    _emit(args, report, lines)


def cmd_quiver(args) -> None:
    if args.quiver_cmd == "one-modular":
        q = one_quiver_modular()
        if args.dot:
            sys.stdout.write(q.to_dot())
            return
        _emit(args, q.to_json(), [f"vertices: {' '.join(q.vertices)}"]
              + [" ".join(map(str, row)) for row in q.arrows])
    elif args.quiver_cmd == "euler":
        value = euler_form(args.alpha, args.beta)
        _emit(args, {"alpha": args.alpha.to_list(), "beta": args.beta.to_list(), "euler": value},
              [str(value)])
    elif args.quiver_cmd == "family":
        value = family_dimension(args.alpha)
        _emit(args, {"alpha": args.alpha.to_list(), "family_dimension": value}, [str(value)])
    elif args.quiver_cmd == "surface":
        q = surface_local_quiver(args.genus, args.dims)
        if args.dot:
            sys.stdout.write(q.to_dot())
            return
        _emit(args, q.to_json(), [" ".join(map(str, row)) for row in q.arrows])


def cmd_habiro(args) -> None:
    sub = args.habiro_cmd
    if sub == "phi":
        poly = cyclotomic(args.n)
        _emit(args, {"n": args.n, "coeffs": list(poly.coeffs)}, [str(poly)])
    elif sub == "comax":
        ok = comaximal(args.m, args.n)
        res = cyclotomic_resultant(args.m, args.n)
        text = f"comaximal, resultant {res}" if ok else f"not comaximal, resultant {res}"
        _emit(args, {"m": args.m, "n": args.n, "comaximal": ok, "resultant": res}, [text])
    elif sub == "clique":
        nodes = [int(x) for x in args.set.replace(" ", "").split(",") if x]
        g = clique_graph(nodes)
        _emit(args, {"nodes": list(g.nodes), "edges": [list(e) for e in g.edges],
                     "components": [list(c) for c in g.components]},
              [" ".join(map(str, c)) for c in g.components])
    elif sub == "eval-kontsevich":
        level = args.level if args.level is not None else args.m
        value = evaluate_at_root(kontsevich(level), args.m)
        _emit(args, {"m": args.m, "level": level, "value": value.to_json()},
              [f"{list(value.coeffs)} mod Phi_{args.m}"])
    elif sub == "zagier-check":
        rep = zagier_radial_check(args.m, tolerance=args.tol)
        report = {"m": rep.m, "exact": rep.exact.to_json(),
                  "exact_value": [rep.exact_value.real, rep.exact_value.imag],
                  "radii": list(rep.radii),
                  "extrapolated": [rep.extrapolated.real, rep.extrapolated.imag],
                  "difference": rep.difference, "tolerance": rep.tolerance, "passed": rep.passed}
        _emit(args, report, [f"exact {rep.exact_value:.12g}", f"radial limit {rep.extrapolated:.12g}",
                             f"difference {rep.difference:.3g} "
                             f"({'within' if rep.passed else 'outside'} tolerance {rep.tolerance})"])
        if not rep.passed:
            raise _CheckFailed


class _CheckFailed(Exception):
    pass


# -- parser ------------------------------------------------------------------------

class _Parser(argparse.ArgumentParser):
    """Usage errors are invalid input (exit 1); exit 2 is reserved for size bounds."""

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def _global_flags(parser: argparse.ArgumentParser, suppress: bool) -> None:
    kw = {"default": argparse.SUPPRESS} if suppress else {}
    parser.add_argument("--json", action="store_true", help="machine-readable output", **kw)
    parser.add_argument("--seed", type=int, help="group engine seed (default 0)", **kw)
    parser.add_argument("--class-bound", type=int, help="largest group order for class enumeration", **kw)
    parser.add_argument("--brute-bound", type=int, help="largest |G|^(2g) for brute-force counts", **kw)


def _symbol_args(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("symbol", nargs="?", help='Farey symbol, e.g. "inf o 0 o 1 o inf"')
    parser.add_argument("--iguanodon", type=int, metavar="N", help="use the Iguanodon symbol I_N")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="modcontent", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    _global_flags(parser, suppress=False)
    parser.set_defaults(json=False, seed=0, class_bound=CLASS_ENUM_BOUND, brute_bound=BRUTE_BOUND)
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help):
        p = sub.add_parser(name, help=help)
        _global_flags(p, suppress=True)
        p.set_defaults(func=func)
        return p

    _symbol_args(add("farey", cmd_farey, "validate a Farey symbol"))
    p = add("dessin", cmd_dessin, "build the dessin of a symbol")
    _symbol_args(p)
    p.add_argument("--export", choices=("json", "dot"))
    p = add("group", cmd_group, "monodromy group of a dessin or of given permutations")
    _symbol_args(p)
    p.add_argument("--perm", action="append", help='generator in cycle notation "(1 2 3)(4 5)"')
    p.add_argument("--degree", type=int, help="degree for --perm generators")
    p.add_argument("--table", action="store_true", help="compute the character table")
    p.add_argument("--tqft", type=int, metavar="GENUS", help="count surface-group homomorphisms")
    _symbol_args(add("content", cmd_content, "modular content of a symbol"))

    p = add("quiver", cmd_quiver, "modular quiver computations")
    qs = p.add_subparsers(dest="quiver_cmd", required=True)
    q = qs.add_parser("one-modular", help="hexagon one-quiver")
    q.add_argument("--dot", action="store_true")
    q = qs.add_parser("euler", help="Euler form of two dimension vectors")
    q.add_argument("alpha", type=_vector)
    q.add_argument("beta", type=_vector)
    q = qs.add_parser("family", help="1 - chi(alpha, alpha)")
    q.add_argument("alpha", type=_vector)
    q = qs.add_parser("surface", help="local quiver for a surface group")
    q.add_argument("genus", type=int)
    q.add_argument("dims", type=int, nargs="+")
    q.add_argument("--dot", action="store_true")
    for q in qs.choices.values():
        _global_flags(q, suppress=True)

    p = add("habiro", cmd_habiro, "cyclotomic and Habiro-ring computations")
    hs = p.add_subparsers(dest="habiro_cmd", required=True)
    h = hs.add_parser("phi", help="cyclotomic polynomial")
    h.add_argument("n", type=int)
    h = hs.add_parser("comax", help="comaximality of Phi_m and Phi_n")
    h.add_argument("m", type=int)
    h.add_argument("n", type=int)
    h = hs.add_parser("clique", help="components of the comaximality graph")
    h.add_argument("set", help='comma-separated integers, e.g. "1,2,3,6"')
    h = hs.add_parser("eval-kontsevich", help="value of sum (q;q)_n at a primitive m-th root")
    h.add_argument("m", type=int)
    h.add_argument("--level", type=int)
    h = hs.add_parser("zagier-check", help="compare with the radial limit of the theta series")
    h.add_argument("m", type=int)
    h.add_argument("--tol", type=float, default=0.05)
    for h in hs.choices.values():
        _global_flags(h, suppress=True)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        args.func(args)
    except SizeBoundExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except INTERNAL_ERRORS as exc:
        print(f"internal error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 3
    except _CheckFailed:
        return 1
    except (ModContentError, ValueError, argparse.ArgumentTypeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except Exception as exc:  # anything else is a bug
        print(f"internal error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 3
    return 0


if __name__ == "__main__":
    sys.exit(main())
