"""Command-line front end.

Inputs are either a signed edge-list file or the book shorthand
``book M N [--l L] [--star] [--digon]``.

Exit codes: 2 parse error, 3 budget exceeded, 4 method/input mismatch,
5 cross-check or internal arithmetic failure.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass

from . import arrangements, book, chromatic, graph
from .errors import (BudgetExceeded, GraphFormatError, InexactDivision, InterpolationError,
                     ModeMismatch)
from .polynomials import IntPolynomial, as_linear_power, latex_terms

EXIT_PARSE, EXIT_BUDGET, EXIT_MISMATCH, EXIT_CROSSCHECK = 2, 3, 4, 5
BUDGET_ENV = "SIGNED_CHROMA_BUDGET"


@dataclass
class Budgets:
    max_vertices: int = graph.DEFAULT_MAX_VERTICES
    max_edges: int = chromatic.DEFAULT_MAX_EDGES
    max_colorings: int = chromatic.DEFAULT_MAX_COLORINGS
    max_enum_edges: int = graph.DEFAULT_MAX_ENUM_EDGES
    max_flats: int = arrangements.DEFAULT_MAX_FLATS


@dataclass
class Input:
    graph: graph.SignedMultigraph
    spec: book.BookSpec | None = None
    custom_sigma: bool = False
    names: list[str] | None = None

    @property
    def label(self) -> str:
        if self.spec is None:
            return "graph"
        return self.spec.describe() + (" (custom signature)" if self.custom_sigma else "")


# ---------------------------------------------------------------------------
# input parsing


def parse_sigma(text: str, g: graph.SignedMultigraph) -> tuple[int, ...]:
    """``a-b[#index],...`` marks edges negative; ``@file`` reads an explicit sign list."""
    if text.startswith("@"):
        with open(text[1:], encoding="utf-8") as fh:
            tokens = fh.read().replace(",", " ").split()
        signs = []
        for tok in tokens:
            if tok in ("+", "+1", "1"):
                signs.append(1)
            elif tok in ("-", "-1"):
                signs.append(-1)
            else:
                raise GraphFormatError(f"bad sign token {tok!r}")
        if len(signs) != g.edge_count:
            raise GraphFormatError(f"sign file has {len(signs)} entries; graph has {g.edge_count} edges")
        return tuple(signs)
    signs = [1] * g.edge_count
    for item in filter(None, (t.strip() for t in text.split(","))):
        pair, _, idx = item.partition("#")
        try:
            a, b = (int(x) for x in pair.split("-"))
        except ValueError:
            raise GraphFormatError(f"bad signature item {item!r}; expected a-b or a-b#index") from None
        key = (min(a, b), max(a, b))
        matches = [i for i, e in enumerate(g.edges) if e[:2] == key]
        if not matches:
            raise GraphFormatError(f"no edge joins {a} and {b}")
        if idx:
            if not idx.isdigit() or int(idx) not in matches:
                raise GraphFormatError(f"edge index {idx!r} does not join {a} and {b}")
            signs[int(idx)] = -1
        elif len(matches) > 1:
            raise GraphFormatError(f"{a}-{b} is ambiguous among parallel edges {matches}; add #index")
        else:
            signs[matches[0]] = -1
    return tuple(signs)


def load_input(args) -> Input:
    tokens = args.input
    if tokens[0] == "book":
        if len(tokens) != 3 or not all(t.isdigit() for t in tokens[1:]):
            raise GraphFormatError("book shorthand is: book M N [--l L] [--star] [--digon]")
        m, n = int(tokens[1]), int(tokens[2])
        try:
            spec = book.BookSpec(m, n, args.l or 0, args.star, args.digon)
        except ValueError as exc:
            raise GraphFormatError(str(exc)) from None
        g = book.build_book(spec)
        names = book.vertex_names(m, n)
        if args.sigma:
            g = g.with_signs(parse_sigma(args.sigma, g))
            return Input(g, spec, True, names)
        return Input(g, spec, False, names)
    if len(tokens) != 1:
        raise GraphFormatError("expected a single graph file or 'book M N'")
    try:
        g = graph.read_edge_list(tokens[0])
    except OSError as exc:
        raise GraphFormatError(str(exc)) from None
    if args.sigma:
        g = g.with_signs(parse_sigma(args.sigma, g))
    return Input(g)


# ---------------------------------------------------------------------------
# methods


def _engine(inp: Input, mode: str, budgets: Budgets) -> IntPolynomial:
    return chromatic.chromatic_poly(inp.graph, mode, budgets.max_edges)


def _bruteforce(inp: Input, mode: str, budgets: Budgets) -> IntPolynomial:
    return chromatic.chromatic_poly_oracle(inp.graph, mode, budgets.max_colorings)


def _whitney(inp: Input, mode: str, budgets: Budgets) -> IntPolynomial:
    return arrangements.chromatic_poly_whitney(inp.graph, mode, budgets.max_vertices, budgets.max_flats)


def _formula(inp: Input, mode: str, budgets: Budgets) -> IntPolynomial:
    if inp.spec is None or inp.custom_sigma:
        raise ModeMismatch("method 'formula' needs a book family input without --sigma")
    return book.formula_for_spec(inp.spec, mode)


METHODS = {
    "engine": _engine,
    "bruteforce": _bruteforce,
    "whitney": _whitney,
    "formula": _formula,
}


# ---------------------------------------------------------------------------
# rendering


def half_basis_text(p: IntPolynomial, latex: bool) -> str | None:
    """The polynomial in k (lambda = 2k+1 or 2k), or None for unrestricted parity."""
    if p.parity == "all":
        return None
    return latex_terms(p.in_half_basis(), "k", braces=latex)


def render_poly(p: IntPolynomial, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(p.to_json())
    latex = fmt == "latex"
    lines = []
    var = r"\lambda" if latex else "lambda"
    lines.append(f"lambda: {latex_terms(p.coefficients, var, braces=latex)}")
    lp = as_linear_power(p)
    if lp is not None:
        root, d = lp
        base = f"{var}-{root}" if root > 0 else (f"{var}+{-root}" if root < 0 else var)
        lines.append(f"factored: ({base})^{{{d}}}" if latex else f"factored: ({base})^{d}")
    k_form = half_basis_text(p, latex)
    if k_form is not None:
        lines.append(f"k ({'lambda=2k+1' if p.parity == 'odd' else 'lambda=2k'}): {k_form}")
    return "\n".join(lines)


def _sign_list(signs) -> str:
    return "".join("+" if s > 0 else "-" for s in signs)


# ---------------------------------------------------------------------------
# commands


def cmd_poly(args, budgets: Budgets) -> int:
    inp = load_input(args)
    p = METHODS[args.method](inp, args.mode, budgets)
    print(render_poly(p, args.format))
    return 0


def cmd_whitney(args, budgets: Budgets) -> int:
    inp = load_input(args)
    flats = arrangements.coloring_poset(inp.graph, args.mode, budgets.max_vertices, budgets.max_flats)
    w = arrangements.whitney_numbers(flats, inp.graph.vertex_count)
    p = arrangements.chromatic_from_whitney(w, inp.graph.vertex_count, args.mode)
    if args.format == "json":
        print(json.dumps({"whitney": w, "flats": [f.dump() for f, _ in flats],
                          "polynomial": p.to_json()}))
        return 0
    print("whitney: " + " ".join(str(x) for x in w))
    print(arrangements.dump_poset(flats), end="")
    print(render_poly(p, args.format))
    return 0


def cmd_classify(args, budgets: Budgets) -> int:
    inp = load_input(args)
    spec = inp.spec
    if spec is not None and spec.family != "digon":
        m, n = spec.m, spec.n
        sigma = inp.graph.signs
        cls = book.classify_signature(m, n, sigma)
        reduced, f = book.reduce_signature(m, n, sigma)
        if args.format == "json":
            print(json.dumps({"unbalanced_pages": cls.unbalanced_pages,
                              "representative": cls.canonical_rep.describe(),
                              "reduced_signs": list(reduced), "switching": f}))
            return 0
        names = inp.names
        negatives = [f"{names[a]}{names[b]}" for a, b, s in
                     inp.graph.with_signs(reduced).edges if s < 0]
        print(f"t = {cls.unbalanced_pages}")
        print(f"representative: {cls.canonical_rep.describe()}")
        print(f"reduced signature: {{{', '.join(negatives)}}}")
        print(f"switching: {' '.join('+' if x > 0 else '-' for x in f)}")
        return 0
    g = inp.graph
    reps = graph.switching_isomorphism_classes(g, budgets.max_enum_edges, budgets.max_vertices)
    autos = graph.graph_isomorphisms(g, g, budgets.max_vertices)
    idx = next(i for i, r in enumerate(reps)
               if graph.switching_isomorphic(g, g.signs, g, r, isomorphisms=autos))
    if args.format == "json":
        print(json.dumps({"class": idx, "classes": len(reps), "representative": list(reps[idx])}))
    else:
        print(f"class {idx} of {len(reps)}")
        print(f"representative: {_sign_list(reps[idx])}")
    return 0


def cmd_classes(args, budgets: Budgets) -> int:
    inp = load_input(args)
    spec = inp.spec
    mode = args.mode if args.mode != "unsigned" else "signed"
    rows = []
    if spec is not None and spec.family != "digon":
        for cls in book.enumerate_classes(spec.m, spec.n):
            g = book.build_book(cls.canonical_rep)
            p = chromatic.chromatic_poly(g, mode, budgets.max_edges)
            rows.append((f"t={cls.unbalanced_pages}", cls.canonical_rep.describe(), g.signs, p))
    else:
        g = inp.graph
        for i, rep in enumerate(graph.switching_isomorphism_classes(
                g, budgets.max_enum_edges, budgets.max_vertices)):
            p = chromatic.chromatic_poly(g.with_signs(rep), mode, budgets.max_edges)
            rows.append((f"class {i}", _sign_list(rep), rep, p))
    if args.format == "json":
        print(json.dumps([{"label": lab, "representative": desc, "signs": list(s),
                           "polynomial": p.to_json()} for lab, desc, s, p in rows]))
        return 0
    print(f"{len(rows)} classes")
    latex = args.format == "latex"
    for lab, desc, _, p in rows:
        var = r"\lambda" if latex else "lambda"
        print(f"{lab}  {desc}  {latex_terms(p.coefficients, var, braces=latex)}")
    return 0


def _applicable_methods(inp: Input) -> list[str]:
    names = ["engine", "bruteforce", "whitney"]
    if inp.spec is not None and not inp.custom_sigma:
        names.append("formula")
    return names


def verify_one(inp: Input, mode: str, budgets: Budgets) -> tuple[bool, list[str]]:
    """Compute by every applicable method; return (agree, report lines)."""
    results: dict[str, IntPolynomial] = {}
    lines = []
    for name in _applicable_methods(inp):
        try:
            results[name] = METHODS[name](inp, mode, budgets)
        except BudgetExceeded as exc:
            lines.append(f"  skip {name}: {exc}")
    values = list(results.values())
    agree = all(v == values[0] for v in values)
    if agree:
        lines.insert(0, f"PASS {inp.label} [{mode}] ({' = '.join(results)})")
    else:
        lines.insert(0, f"FAIL {inp.label} [{mode}]")
        for name, p in results.items():
            lines.append(f"  {name:<10} {list(p.coefficients)}")
    return agree, lines


def _sweep_cells(m_max: int, n_max: int, max_vertices: int):
    for m in range(3, m_max + 1):
        for n in range(1, n_max + 1):
            if n * (m - 2) + 2 > max_vertices:
                continue
            yield book.BookSpec(m, n), "unsigned"
            for mode in ("signed", "balanced"):
                for l in range(0, n + 1):
                    yield book.BookSpec(m, n, l), mode
                    if l:
                        yield book.BookSpec(m, n, l, has_uv=True), mode
                yield book.BookSpec(m, n, digon=True), mode


def cmd_verify(args, budgets: Budgets) -> int:
    ok = True
    if args.sweep:
        m_max, n_max = args.sweep
        for spec, mode in _sweep_cells(m_max, n_max, budgets.max_vertices):
            inp = Input(book.build_book(spec), spec)
            agree, lines = verify_one(inp, mode, budgets)
            if spec.has_uv:
                chain = book.formula_signed_book_star_recursion(spec.m, spec.n, spec.l, mode)
                if chain != book.formula_for_spec(spec, mode):
                    agree = False
                    lines.append(f"  star recursion disagrees: {list(chain.coefficients)}")
            ok &= agree
            print("\n".join(lines))
    else:
        inp = load_input(args)
        agree, lines = verify_one(inp, args.mode, budgets)
        ok = agree
        print("\n".join(lines))
    if not ok:
        return EXIT_CROSSCHECK
    return 0


def cmd_export(args, budgets: Budgets) -> int:
    inp = load_input(args)
    if args.format == "dot":
        print(graph.to_dot(inp.graph, inp.names), end="")
    elif args.format == "text":
        print(graph.format_edge_list(inp.graph, inp.label if inp.spec else None), end="")
    else:
        raise ModeMismatch("export supports --format dot or text")
    return 0


COMMANDS = {
    "poly": cmd_poly,
    "whitney": cmd_whitney,
    "classify": cmd_classify,
    "classes": cmd_classes,
    "verify": cmd_verify,
    "export": cmd_export,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="signed-chroma",
        description="Chromatic polynomials and switching classes of signed graphs.")
    sub = parser.add_subparsers(dest="command", required=True)
    for name in COMMANDS:
        p = sub.add_parser(name)
        p.add_argument("input", nargs="*", help="graph file, or: book M N")
        p.add_argument("--l", type=int, default=0, help="signature size of a signed book")
        p.add_argument("--star", action="store_true", help="signature contains uv (B*_l)")
        p.add_argument("--digon", action="store_true", help="digon book B_m^n")
        p.add_argument("--sigma", help="negative edges as a-b[#i],... or @file of signs")
        p.add_argument("--method", choices=list(METHODS), default="engine")
        p.add_argument("--mode", choices=list(chromatic.MODES), default="signed")
        default_fmt = "dot" if name == "export" else "text"
        p.add_argument("--format", choices=["json", "latex", "text", "dot"], default=default_fmt)
        p.add_argument("--max-vertices", type=int)
        p.add_argument("--max-edges", type=int)
        p.add_argument("--max-colorings", type=int)
        p.add_argument("--max-flats", type=int)
        if name == "verify":
            p.add_argument("--sweep", nargs=2, type=int, metavar=("M_MAX", "N_MAX"))
    return parser


def _budgets(args) -> Budgets:
    b = Budgets()
    env = os.environ.get(BUDGET_ENV)
    if env:
        try:
            b.max_colorings = int(env)
        except ValueError:
            print(f"warning: ignoring non-integer {BUDGET_ENV}={env!r}", file=sys.stderr)
    for flag, attr in (("max_vertices", "max_vertices"), ("max_edges", "max_edges"),
                       ("max_colorings", "max_colorings"), ("max_flats", "max_flats")):
        value = getattr(args, flag)
        if value is not None:
            print(f"warning: overriding {attr} budget to {value}", file=sys.stderr)
            setattr(b, attr, value)
            if attr == "max_edges":
                b.max_enum_edges = value
    return b


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if not args.input and not (args.command == "verify" and args.sweep):
        parser.error("an input is required (graph file or 'book M N')")
    budgets = _budgets(args)
    try:
        return COMMANDS[args.command](args, budgets)
    except GraphFormatError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except BudgetExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except ModeMismatch as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_MISMATCH
    except (InexactDivision, InterpolationError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CROSSCHECK


if __name__ == "__main__":
    sys.exit(main())
