"""Command-line interface: ``jonesrep <command> ...``.

Exit status is 0 on success, 1 on a domain error (inadmissible color,
nonplanar graph, ...) and 2 on a usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import linalg as la
from .analysis import (
    GroupTable,
    adjoint_irreducible,
    char_poly,
    classify_discreteness,
    connectivity_certificate,
    elliptic_witness,
    fingerprint,
    format_factored,
    format_poly,
    projective_image,
)
from .arith import DomainError, ParameterSpec
from .potts import PlanarGraph, potts_partition
from .rep import build, cob_expected, cob_matrix, dimension, gram_matrix
from .skein import bracket_state_sum, closure_bracket, enumerate_basis, parse_braid_word, parse_pd


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _parameter(args) -> ParameterSpec:
    chosen = [x for x in (args.t_rational, args.root_of_unity, args.theta, args.t_trace) if x is not None]
    if len(chosen) > 1 or (chosen and args.generic):
        raise UsageError("choose exactly one parameter mode")
    if args.t_rational is not None:
        return ParameterSpec.rational(Fraction(args.t_rational))
    if args.root_of_unity is not None:
        return ParameterSpec.root_of_unity(args.root_of_unity, args.k)
    if args.theta is not None:
        return ParameterSpec.unit_circle(Fraction(args.theta))
    if args.t_trace is not None:
        coeffs, _, approx = args.t_trace.partition("@")
        if not approx:
            raise UsageError("--t-trace expects COEFFS@APPROX, e.g. -3,1@3")
        return ParameterSpec.from_trace([Fraction(c) for c in coeffs.split(",")], float(approx))
    return ParameterSpec.generic()


def _add_parameter_flags(p: argparse.ArgumentParser):
    g = p.add_argument_group("parameter (default: generic)")
    g.add_argument("--generic", action="store_true", help="t is an indeterminate")
    g.add_argument("--t-rational", metavar="Q", help="t = Q, a nonzero rational")
    g.add_argument("--root-of-unity", metavar="R", type=int, help="t = exp(2 pi i K / R)")
    g.add_argument("--k", type=int, default=1, help="numerator K for --root-of-unity")
    g.add_argument("--theta", metavar="FRAC", help="t = exp(i pi FRAC)")
    g.add_argument("--t-trace", metavar="COEFFS@APPROX",
                   help="t + 1/t is the root near APPROX of the polynomial with these coefficients (low to high)")
    p.add_argument("--normalization", choices=("bracket", "rescaled"), default="bracket")
    p.add_argument("--json", action="store_true", help="machine-readable output")


def _matrix_text(m) -> str:
    rows = la.to_strings(m)
    if not rows:
        return "[]"
    width = max(len(x) for row in rows for x in row)
    return "\n".join("[ " + "  ".join(x.rjust(width) for x in row) + " ]" for row in rows)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="jonesrep", description="Jones representations of braid groups, exactly.")
    sub = parser.add_subparsers(dest="command", parser_class=_Parser)
    sub.required = True

    def add(name, help_text, *positional):
        p = sub.add_parser(name, help=help_text)
        for arg, kw in positional:
            p.add_argument(arg, **kw)
        _add_parameter_flags(p)
        return p

    nc = [("n", {"type": int}), ("c", {"type": int})]
    word = ("word", {"help": "braid word, e.g. '1 -2 3' or '[2, 2 3 -1]'"})
    add("dim", "dimension d(n, c, r)", *nc, ("r", {"type": int, "nargs": "?"}))
    add("basis", "canonical matching basis", *nc)
    p = add("matrix", "matrix of a braid word", *nc, word)
    p.add_argument("--printed", action="store_true", help="use the recorded printed basis when available")
    add("gram", "Gram matrix of the pairing", *nc)
    add("charpoly", "characteristic polynomial of a braid word", *nc, word)
    add("fingerprint", "twist fingerprint (n, kappa, dim)", *nc)
    p = add("connectivity", "strong connectivity certificate", *nc)
    p.add_argument("--space", choices=("plain", "adjoint"), default="adjoint")
    p.add_argument("--control", action="store_true", help="negative control with both splittings equal")
    p = add("irreducible", "Burnside test for adjoint irreducibility", *nc)
    p.add_argument("--cap", type=int, default=12, help="maximal word length")
    p = add("image-order", "order of the finite projective image", *nc)
    p.add_argument("--cap", type=int, default=2000)
    p.add_argument("--simple", action="store_true", help="also test simplicity")
    p = add("elliptic", "elliptic infinite-order witness", *nc, word)
    p.add_argument("--projective", action="store_true", help="use the eigenvalue ratio of a 2x2 matrix")
    add("discrete", "discreteness of B_3 on X(3*1, 1, t)")
    p = add("bracket", "Kauffman bracket of a PD code file", ("pdfile", {"nargs": "?"}))
    p.add_argument("--braid", help="braid word whose closure to evaluate instead of a file")
    p.add_argument("--strands", type=int, help="strand count for --braid")
    add("potts", "Potts partition function of a planar graph file", ("graphfile", {}))
    add("cob", "change-of-basis coefficients for color c", ("c", {"type": int}))
    add("selftest", "run the acceptance suite")
    return parser


def run(args) -> tuple[str, object]:
    """Execute a parsed command; returns (text, json-able object)."""
    cmd = args.command
    if cmd == "selftest":
        from .acceptance import run_all

        lines: list[str] = []
        results = run_all(lines.append)
        ok = all(r.passed for r in results)
        data = {"passed": ok, "criteria": [{"key": r.key, "title": r.title, "passed": r.passed,
                                            "seconds": round(r.seconds, 3), "detail": r.detail} for r in results]}
        if not ok:
            raise _SelftestFailed("\n".join(lines), data)
        return "\n".join(lines), data
    p = _parameter(args)
    if cmd == "dim":
        r = args.r if args.r is not None else p.order
        d = dimension(args.n, args.c, r)
        return str(d), {"n": args.n, "c": args.c, "r": r, "dimension": d}
    if cmd == "basis":
        basis = enumerate_basis(args.n, args.c)
        return "\n".join(m.describe() for m in basis), [m.to_json() for m in basis]
    if cmd == "discrete":
        v = classify_discreteness(p)
        text = f"{'discrete' if v.discrete else 'indiscrete'} ({v.regime}); {v.evidence}"
        return text, v.to_json()
    if cmd == "cob":
        m = cob_matrix(args.c, p)
        ok = la.equal(m, cob_expected(args.c, p))
        return _matrix_text(m) + f"\nidentity holds: {ok}", {"matrix": la.to_strings(m), "identity_holds": ok}
    if cmd == "bracket":
        if args.braid is not None:
            w = parse_braid_word(args.braid)
            strands = args.strands or (max((abs(k) for k in w), default=0) + 1)
            value = closure_bracket(w, strands, p)
        elif args.pdfile:
            with open(args.pdfile) as fh:
                value = bracket_state_sum(parse_pd(fh.read()), p)
        else:
            raise UsageError("bracket needs a PD file or --braid")
        return str(value), {"bracket": str(value)}
    if cmd == "potts":
        with open(args.graphfile) as fh:
            g = PlanarGraph.from_json(fh.read(), p)
        res = potts_partition(g, p)
        text = f"Z = {res.z_skein}"
        if res.z_oracle is not None:
            text += f"\ncoloring sum = {res.z_oracle} (agree: {res.agree})"
        return text, res.to_json()
    if cmd == "gram":
        g = gram_matrix(args.n, args.c, p)
        return _matrix_text(g), {"gram": la.to_strings(g)}
    h = build(args.n, args.c, p, args.normalization)
    if cmd == "matrix":
        m = h.word_matrix(parse_braid_word(args.word))
        if args.printed:
            if "printed" not in h.base_change:
                raise DomainError("no printed basis recorded for this space")
            m = h.in_basis("printed", m)
        return _matrix_text(m), {"matrix": la.to_strings(m), "basis": [b.describe() for b in h.basis]}
    if cmd == "charpoly":
        cp = char_poly(h.word_matrix(parse_braid_word(args.word)), h.field)
        return format_factored(cp, h.field), {"charpoly": format_poly(cp),
                                              "factored": format_factored(cp, h.field),
                                              "coefficients": [str(x) for x in cp]}
    if cmd == "fingerprint":
        fp = fingerprint(args.n, args.c, h=h)
        return f"n = {fp.n}, kappa = {fp.kappa}, dim = {fp.dim}", fp.to_json()
    if cmd == "connectivity":
        cert = connectivity_certificate(h, args.space, args.control)
        text = "\n".join(f"{a} -> {b}" for a, b in cert.edges)
        return text + f"\nstrongly connected: {cert.strongly_connected}", cert.to_json()
    if cmd == "irreducible":
        v = adjoint_irreducible(h, args.cap)
        return f"{v.label} (span {v.span_dim}/{v.full_dim}, words up to length {v.word_length})", v.to_json()
    if cmd == "image-order":
        image = projective_image(h, args.cap)
        data = {"order": image.order}
        text = str(image.order)
        if args.simple and isinstance(image.order, int):
            simple = GroupTable.from_image(image, h.field).is_simple()
            data["simple"] = simple
            text += f"\nsimple: {simple}"
        return text, data
    if cmd == "elliptic":
        w = elliptic_witness(h, parse_braid_word(args.word), args.projective)
        text = f"{w.verdict}"
        if w.eigenvalue is not None:
            text += f"; |theta| = {w.angle_degrees:.6f} deg; degree bound {w.degree_bound}"
        return text, w.to_json()
    raise UsageError(f"unknown command {cmd}")


class _SelftestFailed(Exception):
    def __init__(self, text, data):
        super().__init__(text)
        self.text, self.data = text, data


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 2
    try:
        text, data = run(args)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 2
    except _SelftestFailed as exc:
        print(json.dumps(exc.data, indent=2) if getattr(args, "json", False) else exc.text)
        return 1
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except (ValueError, OSError) as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 2
    print(json.dumps(data, indent=2) if getattr(args, "json", False) else text)
    return 0


if __name__ == "__main__":
    sys.exit(main())
