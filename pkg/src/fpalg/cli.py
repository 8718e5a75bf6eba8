"""Batch front end: normal forms, equality, bases, certificates, lattices.

Exit codes: 0 for success or a positive answer, 1 for a legitimate negative
answer (unequal terms, failed check, ill-defined morphism), 2 for usage or
parse errors.  Output is deterministic byte-for-byte for a fixed input.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .certificates import certificate_to_json, verify_certificate
from .coeffs import CoeffError
from .lattice import (
    Antichain,
    LatticeError,
    LatticePresentation,
    lat_congruence,
    lat_nf_free,
    parse_lattice_term,
    term_table,
)
from .poly import MonomialOrder, poly_to_str
from .presentation import (
    Presentation,
    PresentationError,
    certificate_from_json,
    parse_morphism,
)
from .terms import ParseError, TermError

USER_ERRORS = (
    ParseError,
    TermError,
    PresentationError,
    LatticeError,
    CoeffError,
    ValueError,
    OSError,
    json.JSONDecodeError,
    KeyError,
)


def _emit_json(data) -> None:
    sys.stdout.write(json.dumps(data, indent=2, sort_keys=True) + "\n")


def _load_presentation(path: str, order_override: str | None) -> Presentation:
    pres = Presentation.load(path)
    if order_override:
        pres = Presentation(pres.ring, pres.varnames, pres.relations, MonomialOrder(order_override))
    return pres


def _cmd_gb(args) -> int:
    pres = _load_presentation(args.presentation, args.order)
    gb = pres.basis()
    fmt = lambda p: poly_to_str(p, pres.varnames, pres.order)
    if args.json:
        data = {
            "order": pres.order.kind,
            "flavor": gb.flavor,
            "reduced": gb.reduced,
            "basis": [fmt(p) for p in gb.basis],
        }
        if args.transition:
            data["transition"] = [[fmt(h) for h in row] for row in gb.transition]
        _emit_json(data)
    else:
        for p in gb.basis:
            print(fmt(p))
        if args.transition:
            for i, row in enumerate(gb.transition):
                print(f"transition {i}: " + ", ".join(fmt(h) for h in row))
    return 0


def _cmd_nf(args) -> int:
    pres = _load_presentation(args.presentation, args.order)
    t = pres.parse_term(args.term)
    result = pres.format_term(pres.nf(t))
    if args.json:
        _emit_json({"term": args.term, "normal_form": result})
    else:
        print(result)
    return 0


def _cmd_eq(args) -> int:
    pres = _load_presentation(args.presentation, args.order)
    t = pres.parse_term(args.lhs)
    u = pres.parse_term(args.rhs)
    equal = pres.eq(t, u)
    if args.json:
        _emit_json({"equal": equal})
    else:
        print("true" if equal else "false")
    return 0 if equal else 1


def _cmd_cert(args) -> int:
    pres = _load_presentation(args.presentation, args.order)
    t = pres.parse_term(args.lhs)
    if args.rhs is None:
        cert = pres.nf_certificate(t)
    else:
        cert = pres.certify(t, pres.parse_term(args.rhs))
    if cert is None:
        print("not-equal")
        return 1
    _emit_json(certificate_to_json(cert))
    return 0


def _cmd_check(args) -> int:
    with open(args.certificate, "r", encoding="utf-8") as fh:
        data = json.load(fh)
    cert = certificate_from_json(data)
    result = verify_certificate(cert)
    if args.json:
        _emit_json({"valid": result.ok, "reason": result.reason})
    else:
        print("valid" if result.ok else f"invalid: {result.reason}")
    return 0 if result.ok else 1


def _cmd_hom(args) -> int:
    base = os.path.dirname(os.path.abspath(args.morphism))

    def load(ref: str) -> Presentation:
        return Presentation.load(os.path.join(base, ref))

    with open(args.morphism, "r", encoding="utf-8") as fh:
        morphism = parse_morphism(fh.read(), load)
    ok, certs = morphism.well_defined()
    if args.json:
        _emit_json(
            {
                "well_defined": ok,
                "certificates": [
                    certificate_to_json(c) if c is not None else None for c in certs
                ],
            }
        )
    else:
        print("true" if ok else "false")
    return 0 if ok else 1


def _antichain_json(ac: Antichain, gennames) -> list:
    return [[gennames[i] for i in s] for s in ac.subsets]


def _cmd_lat_nf(args) -> int:
    pres = LatticePresentation.load(args.presentation)
    t = parse_lattice_term(args.term, pres)
    if pres.relations:
        table = lat_congruence(pres)
        rep = table.representative(term_table(t, pres.ngens))
        ac = Antichain.from_table(rep, pres.ngens)
    else:
        ac = lat_nf_free(t)
    if args.json:
        _emit_json({"term": args.term, "normal_form": _antichain_json(ac, pres.gennames)})
    else:
        print(ac.to_text(pres.gennames))
    return 0


def _cmd_lat_eq(args) -> int:
    pres = LatticePresentation.load(args.presentation)
    t = parse_lattice_term(args.lhs, pres)
    u = parse_lattice_term(args.rhs, pres)
    table = lat_congruence(pres)
    a, b = term_table(t, pres.ngens), term_table(u, pres.ngens)
    equal = table.same(a, b)
    if args.json:
        data = {"equal": equal}
        if equal:
            names = pres.gennames
            data["trace"] = [
                {
                    "left": _antichain_json(Antichain.from_table(m.left, pres.ngens), names),
                    "right": _antichain_json(Antichain.from_table(m.right, pres.ngens), names),
                    "law": m.law,
                    "op": m.op,
                    "context": (
                        _antichain_json(Antichain.from_table(m.context, pres.ngens), names)
                        if m.context is not None
                        else None
                    ),
                }
                for m in table.trace(a, b)
            ]
        _emit_json(data)
    else:
        print("true" if equal else "false")
    return 0 if equal else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="fpalg",
        description="Certified normal forms for finitely presented algebras and lattices.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, order=True):
        p.add_argument("--json", action="store_true", help="emit the interchange format")
        if order:
            p.add_argument("--order", choices=["lex", "grlex", "degrevlex"],
                           help="override the presentation's monomial order")

    p = sub.add_parser("gb", help="print the reduced basis of the relation ideal")
    p.add_argument("presentation")
    p.add_argument("--transition", action="store_true",
                   help="also print each basis element as a combination of the relations")
    common(p)
    p.set_defaults(func=_cmd_gb)

    p = sub.add_parser("nf", help="normal form of a term")
    p.add_argument("presentation")
    p.add_argument("term")
    common(p)
    p.set_defaults(func=_cmd_nf)

    p = sub.add_parser("eq", help="decide equality of two terms")
    p.add_argument("presentation")
    p.add_argument("lhs")
    p.add_argument("rhs")
    common(p)
    p.set_defaults(func=_cmd_eq)

    p = sub.add_parser("cert", help="emit an equality certificate (rhs defaults to the normal form)")
    p.add_argument("presentation")
    p.add_argument("lhs")
    p.add_argument("rhs", nargs="?")
    common(p)
    p.set_defaults(func=_cmd_cert)

    p = sub.add_parser("check", help="verify a certificate document")
    p.add_argument("certificate")
    common(p, order=False)
    p.set_defaults(func=_cmd_check)

    p = sub.add_parser("hom", help="check a morphism file for well-definedness")
    p.add_argument("morphism")
    common(p, order=False)
    p.set_defaults(func=_cmd_hom)

    p = sub.add_parser("lat-nf", help="normal form of a lattice term")
    p.add_argument("presentation")
    p.add_argument("term")
    common(p, order=False)
    p.set_defaults(func=_cmd_lat_nf)

    p = sub.add_parser("lat-eq", help="decide equality of two lattice terms")
    p.add_argument("presentation")
    p.add_argument("lhs")
    p.add_argument("rhs")
    common(p, order=False)
    p.set_defaults(func=_cmd_lat_eq)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    try:
        return args.func(args)
    except USER_ERRORS as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
