"""JSON-in/JSON-out command line interface.

Matrices travel as documents {"n": k, "rows": [[...], ...]}; entries that
do not fit in 64 bits are serialized as decimal strings so nothing is ever
rounded.  All results go to stdout as a single JSON value, diagnostics to
stderr.  Exit codes: 0 success, 2 parse error, 3 precondition violation,
4 verification suite found a counterexample.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import congruence, involution, transvection, verify
from .exactmat import IntMatrix

_INT64_MIN = -(2**63)
_INT64_MAX = 2**63 - 1


class ParseError(Exception):
    pass


def _encode_int(x: int):
    return x if _INT64_MIN <= x <= _INT64_MAX else str(x)


def _decode_int(value) -> int:
    if isinstance(value, bool):
        raise ParseError("matrix entries must be integers")
    if isinstance(value, int):
        return value
    if isinstance(value, str):
        try:
            return int(value, 10)
        except ValueError as exc:
            raise ParseError(f"bad integer literal: {value!r}") from exc
    raise ParseError(f"bad matrix entry: {value!r}")


def matrix_payload(M: IntMatrix) -> dict:
    return {"n": M.n, "rows": [[_encode_int(x) for x in row] for row in M.rows]}


def parse_matrix_document(doc) -> IntMatrix:
    if not isinstance(doc, dict):
        raise ParseError("matrix document must be a JSON object")
    if "n" not in doc or "rows" not in doc:
        raise ParseError('matrix document needs "n" and "rows"')
    n = doc["n"]
    rows = doc["rows"]
    if not isinstance(n, int) or isinstance(n, bool) or n < 1:
        raise ParseError('"n" must be a positive integer')
    if not isinstance(rows, list) or len(rows) != n:
        raise ParseError(f'"rows" must be a list of {n} rows')
    parsed = []
    for row in rows:
        if not isinstance(row, list) or len(row) != n:
            raise ParseError(f"every row must have {n} entries")
        parsed.append(tuple(_decode_int(x) for x in row))
    return IntMatrix(tuple(parsed))


def _read_document(path: str | None) -> IntMatrix:
    text = sys.stdin.read() if path is None else open(path, "r", encoding="utf-8").read()
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON input: {exc}") from exc
    return parse_matrix_document(doc)


def _emit(obj) -> None:
    print(json.dumps(obj))


def _vector_payload(v) -> list:
    return [_encode_int(x) for x in v]


def _kind_payload(kind: involution.InvolutionKind) -> dict:
    return {"kind": kind.name, "gamma": kind.gamma}


def cmd_classify(args) -> int:
    M = _read_document(args.file)
    if not M.is_automorphism:
        print("input is not an automorphism of Z^n", file=sys.stderr)
        return 3
    report: dict = {"n": M.n, "det": _encode_int(M.det())}
    if involution.is_involution(M):
        prof = involution.profile(M)
        kind = involution.classify(M)
        report["is_involution"] = True
        report["profile"] = [prof.a, prof.b, prof.p]
        report["diagonalizable"] = prof.diagonalizable
        report["residue"] = prof.p
        report.update(_kind_payload(kind))
    else:
        report["is_involution"] = False
        report["profile"] = None
        report["kind"] = None
    data = transvection.recognize_transvection(M)
    if data is None:
        report["is_transvection"] = False
        report["transvection"] = None
    else:
        report["is_transvection"] = True
        report["transvection"] = {
            "x": _vector_payload(data.x),
            "delta": _vector_payload(data.delta),
            "m": data.m,
        }
    report["gamma_levels"] = [m for m in range(2, 13) if congruence.in_gamma(M, m)]
    _emit(report)
    return 0


def cmd_canon(args) -> int:
    M = _read_document(args.file)
    cb = involution.canonical_form(M)
    _emit(
        {
            "profile": [cb.profile.a, cb.profile.b, cb.profile.p],
            "diagonalizable": cb.profile.diagonalizable,
            "U": matrix_payload(cb.U),
            "block": matrix_payload(cb.block_matrix()),
            "layout": {
                "fixed": list(cb.layout.fixed),
                "negated": list(cb.layout.negated),
                "pairs": [list(p) for p in cb.layout.pairs],
            },
        }
    )
    return 0


def cmd_factor(args) -> int:
    M = _read_document(args.file)
    factorization = congruence.elementary_factorization(M)
    classes = congruence.factor_mod2_classes(factorization)
    _emit(
        {
            "n": factorization.n,
            "length": len(factorization),
            "round_trip": factorization.product() == M,
            "factors": [
                {
                    "i": f.i,
                    "j": f.j,
                    "c": _encode_int(f.c),
                    "trivial_mod2": cls.trivial_mod2,
                    "square_root_c": (
                        _encode_int(cls.square_root.c) if cls.square_root else None
                    ),
                }
                for f, cls in zip(factorization.factors, classes)
            ],
        }
    )
    return 0


def cmd_lift(args) -> int:
    if args.row is not None:
        a, c = args.row
        M = congruence.lift_row_to_sl3(a, c)
        _emit({"mode": "row", "a": a, "c": c, "matrix": matrix_payload(M)})
        return 0
    Mbar = _read_document(args.file)
    M = congruence.lift_mod2(Mbar)
    _emit(
        {
            "mode": "mod2",
            "matrix": matrix_payload(M),
            "det": _encode_int(M.det()),
            "reduction": matrix_payload(M.mod(2)),
        }
    )
    return 0


def cmd_witness(args) -> int:
    M = _read_document(args.file)
    if args.order3:
        witness = involution.order3_witness(M)
        product = M * witness
        _emit(
            {
                "mode": "order3",
                "witness": matrix_payload(witness),
                "product": matrix_payload(product),
                "product_order": 3,
            }
        )
    else:
        witness = involution.four_involution_witness(M)
        product = M * witness
        kind = involution.classify(product)
        _emit(
            {
                "mode": "four",
                "witness": matrix_payload(witness),
                "product": matrix_payload(product),
                "product_kind": kind.name,
                "product_gamma": kind.gamma,
            }
        )
    return 0


def cmd_gamma(args) -> int:
    M = _read_document(args.file)
    member = congruence.in_gamma(M, args.m)
    _emit({"level": args.m, "member": member})
    return 0


def cmd_identities(args) -> int:
    del args
    report = congruence.commutator_identities()
    solutions = congruence.braid_involution_solutions()
    roots = congruence.unipotent_sqrt_sl2(IntMatrix(((1, 2), (0, 1))))
    _emit(
        {
            "commutators": [matrix_payload(m) for m in report.commutators],
            "candidates": [matrix_payload(m) for m in report.candidates],
            "candidate_has_minus_one": list(report.candidate_has_minus_one),
            "commutator_has_minus_one": list(report.commutator_has_minus_one),
            "shear_index": report.shear_index,
            "braid_involutions": [matrix_payload(m) for m in solutions],
            "double_shear_roots": [matrix_payload(m) for m in roots],
        }
    )
    return 0


def cmd_verify(args) -> int:
    report = verify.run_suite(args.suite, args.n, args.trials, args.seed)
    _emit(report.to_jsonable())
    return 0 if report.passed else 4


def _add_matrix_input(p: argparse.ArgumentParser) -> None:
    p.add_argument("--file", help="read the matrix document from a file instead of stdin")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="glnz",
        description="exact computations with automorphisms of Z^n",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("classify", help="involution/transvection/congruence report")
    _add_matrix_input(p)
    p.set_defaults(handler=cmd_classify)

    p = sub.add_parser("canon", help="canonical basis of an involution")
    _add_matrix_input(p)
    p.set_defaults(handler=cmd_canon)

    p = sub.add_parser("factor", help="shear factorization of a determinant-1 matrix")
    _add_matrix_input(p)
    p.set_defaults(handler=cmd_factor)

    p = sub.add_parser("lift", help="lift mod-2 matrices or (odd, even) rows")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--mod2", action="store_true", help="lift an invertible mod-2 matrix")
    group.add_argument("--row", nargs=2, type=int, metavar=("A", "C"),
                       help="complete a coprime odd/even column in rank 3")
    _add_matrix_input(p)
    p.set_defaults(handler=cmd_lift)

    p = sub.add_parser("witness", help="order-3 or 4-involution witness conjugates")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--order3", action="store_true")
    group.add_argument("--four", action="store_true")
    _add_matrix_input(p)
    p.set_defaults(handler=cmd_witness)

    p = sub.add_parser("gamma", help="principal congruence subgroup membership")
    p.add_argument("--m", type=int, required=True, help="congruence level (>= 2)")
    _add_matrix_input(p)
    p.set_defaults(handler=cmd_gamma)

    p = sub.add_parser("identities", help="rank-2/rank-3 identity report")
    p.set_defaults(handler=cmd_identities)

    p = sub.add_parser("verify", help="run a seeded verification suite")
    p.add_argument("--suite", required=True, choices=list(verify.SUITE_IDS))
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--trials", type=int, required=True)
    p.add_argument("--seed", type=int, required=True)
    p.set_defaults(handler=cmd_verify)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.handler(args)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return 2
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
