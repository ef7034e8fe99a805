"""Command-line interface.

Exit codes: 0 success, 1 a verification failed or a table row mismatched,
2 malformed input or invalid parameters.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from typing import Callable, List, Optional

from .algebra import (
    LieSuperalgebra,
    center,
    derived,
    lower_central_series,
    nilpotency_class,
    quotient,
    super_nilindex,
    validate,
    verify_iso,
)
from .algebra import HomSpec
from .cohomology import multiplier_sdim
from .core import RATIONAL, Field, SuperDim
from .extensions import (
    PreconditionError,
    is_central,
    is_maximal_stem,
    is_stem,
    stem_deformation,
    stem_denominator,
    verify_extension,
)
from .families import FamilyId, build, build_cover, multiplier_formula
from .freepres import ClassBoundError, PresentationError, cover_from_free, hopf_multiplier
from .serialize import (
    DocumentError,
    _field_doc,
    algebra_to_doc,
    doc_to_algebra,
    doc_to_extension,
    dumps,
    extension_to_doc,
    parse_json,
)

__all__ = ["main", "table_rows"]

OK, FAIL, BAD = 0, 1, 2


class _Malformed(Exception):
    pass


def _read(path: str) -> str:
    try:
        if path == "-":
            return sys.stdin.read()
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise _Malformed(f"cannot read {path}: {exc.strerror}") from None


def _notice_if_rewritten(text: str, canonical: str, err) -> None:
    if text != canonical:
        err.write("notice: input was not in canonical form; using the canonical form\n")


def _load_algebra(path: str, err, strict: bool = True) -> LieSuperalgebra:
    text = _read(path)
    L = doc_to_algebra(parse_json(text), strict=strict)
    _notice_if_rewritten(text, dumps(algebra_to_doc(L)), err)
    return L


def _load_valid_algebra(path: str, err) -> LieSuperalgebra:
    L = _load_algebra(path, err)
    report = validate(L, limit=1)
    if not report.ok:
        raise _Malformed(f"not a Lie superalgebra: {report.lines(L)[0]}")
    return L


def _load_extension(path: str, err):
    text = _read(path)
    e = doc_to_extension(parse_json(text))
    _notice_if_rewritten(text, dumps(extension_to_doc(e)), err)
    return e


def _sd(d: SuperDim) -> dict:
    return {"even": d.even, "odd": d.odd}


def _subspace_json(X) -> dict:
    return {"sdim": _sd(X.sdim()), "basis": [[X.field.format(c) for c in v] for v in X.basis]}


# ---------------------------------------------------------------------------
# commands


def cmd_validate(args, out, err) -> int:
    L = _load_algebra(args.file, err, strict=False)
    report = validate(L)
    if report.ok:
        out.write(f"ok: {L.sdim()} Lie superalgebra over {L.field}\n")
        return OK
    for line in report.lines(L):
        out.write(line + "\n")
    out.write(f"{len(report.violations)} violation(s)\n")
    return FAIL


def cmd_invariants(args, out, err) -> int:
    L = _load_valid_algebra(args.file, err)
    series = lower_central_series(L)
    nil = super_nilindex(L)
    doc = {
        "field": _field_doc(L.field),
        "sdim": _sd(L.sdim()),
        "center": _subspace_json(center(L)),
        "derived": _subspace_json(derived(L)),
        "lower_central_series": [_sd(X.sdim()) for X in series],
        "nilpotency_class": nilpotency_class(L),
        "super_nilindex": list(nil) if nil is not None else None,
    }
    out.write(dumps(doc))
    return OK


def _family_id(args) -> FamilyId:
    kind = args.kind.replace("-", "_")
    try:
        if kind == "heisenberg_even":
            return FamilyId(kind, p=args.p, q=args.q)
        if kind == "heisenberg_odd":
            return FamilyId(kind, n=args.n)
        return FamilyId(kind, n=args.n, m=args.m)
    except ValueError as exc:
        raise _Malformed(str(exc)) from None


def _field(args) -> Field:
    if args.prime is None:
        return RATIONAL
    try:
        return Field(args.prime)
    except ValueError as exc:
        raise _Malformed(str(exc)) from None


def cmd_family(args, out, err) -> int:
    fid = _family_id(args)
    field = _field(args)
    if not args.cover:
        out.write(dumps(algebra_to_doc(build(fid, field))))
        return OK
    if args.from_free or fid.kind == "heisenberg_even":
        ext = cover_from_free(build(fid, field))
    else:
        try:
            ext = build_cover(fid, field)
        except ValueError as exc:
            raise _Malformed(str(exc)) from None
    out.write(dumps(extension_to_doc(ext)))
    return OK


def cmd_multiplier(args, out, err) -> int:
    L = _load_valid_algebra(args.file, err)
    if args.method == "h2":
        if args.class_bound is not None or args.denominator is not None:
            raise _Malformed("--class-bound and --denominator only apply to --method hopf")
        out.write(f"{multiplier_sdim(L)}\n")
        return OK
    cls = nilpotency_class(L)
    if cls is None:
        raise _Malformed("the hopf method needs a nilpotent algebra")
    if args.class_bound is not None and args.class_bound < cls + 1:
        raise _Malformed(f"--class-bound {args.class_bound} is below class + 1 = {cls + 1}")
    try:
        d = hopf_multiplier(L, args.class_bound, (args.denominator or "rf").upper())
    except ClassBoundError as exc:
        err.write(f"error: {exc}\n")
        return FAIL
    out.write(f"{d}\n")
    return OK


def _yes(flag: bool) -> str:
    return "yes" if flag else "no"


def cmd_verify_stem(args, out, err) -> int:
    e = _load_extension(args.file, err)
    report = verify_extension(e)
    for p in report.problems:
        out.write(f"extension: FAIL: {p}\n")
    if not report.ok:
        return FAIL
    out.write("extension: ok\n")
    central, stem = is_central(e), is_stem(e)
    out.write(f"central: {_yes(central)}\n")
    out.write(f"stem: {_yes(stem)}\n")
    good = stem
    if args.maximal:
        M = multiplier_sdim(e.base)
        maximal = is_maximal_stem(e)
        out.write(f"kernel: {e.kernel.sdim()}\n")
        out.write(f"multiplier: {M}\n")
        out.write(f"maximal: {_yes(maximal)}\n")
        good = good and maximal
    return OK if good else FAIL


def cmd_stem_deform(args, out, err) -> int:
    e = _load_extension(args.file, err)
    report = verify_extension(e)
    if not report.ok:
        for p in report.problems:
            err.write(f"error: {p}\n")
        return FAIL
    if not is_central(e):
        err.write("error: the extension is not central\n")
        return FAIL
    out.write(dumps(extension_to_doc(stem_deformation(e, stem_denominator(e)))))
    return OK


def _family_grid(kind: str, N: int) -> List[FamilyId]:
    if kind == "heisenberg_odd":
        return [FamilyId(kind, n=n) for n in range(1, N + 1)]
    if kind == "heisenberg_even":
        return [FamilyId(kind, p=p, q=s - p) for s in range(1, N + 1) for p in range(s + 1)]
    return [f for n in range(1, N + 1) for m in range(N + 1)
            for f in [FamilyId(kind, n=n, m=m)] if f.is_model_filiform]


def table_rows(kind: str, N: int, method: str = "h2") -> List[dict]:
    """Computed against closed-form multiplier superdimensions for one family."""
    compute: Callable[[LieSuperalgebra], SuperDim]
    compute = multiplier_sdim if method == "h2" else (lambda L: hopf_multiplier(L, check_stability=False))
    rows = []
    for fid in _family_grid(kind, N):
        got = compute(build(fid))
        want = multiplier_formula(fid)
        rows.append({
            "parameters": " ".join(f"{k}={v}" for k, v in fid.params.items()),
            "computed_even": got.even,
            "computed_odd": got.odd,
            "formula_even": want.even,
            "formula_odd": want.odd,
            "match": got == want,
        })
    return rows


def cmd_table(args, out, err) -> int:
    if args.max < 1:
        raise _Malformed("--max must be at least 1")
    rows = table_rows(args.kind.replace("-", "_"), args.max, args.method)
    if args.format == "json":
        out.write(dumps(rows))
    else:
        buf = io.StringIO()
        w = csv.DictWriter(buf, fieldnames=list(rows[0]), lineterminator="\n")
        w.writeheader()
        for r in rows:
            w.writerow({**r, "match": "true" if r["match"] else "false"})
        out.write(buf.getvalue())
    bad = sum(not r["match"] for r in rows)
    if bad:
        err.write(f"{bad} of {len(rows)} rows do not match the closed form\n")
    return FAIL if bad else OK


def cmd_canonicalize(args, out, err) -> int:
    text = _read(args.file)
    doc = parse_json(text)
    if isinstance(doc, dict) and "total" in doc:
        canon = dumps(extension_to_doc(doc_to_extension(doc)))
    else:
        canon = dumps(algebra_to_doc(doc_to_algebra(doc)))
    _notice_if_rewritten(text, canon, err)
    out.write(canon)
    return OK


def cmd_check_quotient(args, out, err) -> int:
    """B/A against L through the map induced by the projection."""
    e = _load_extension(args.file, err)
    report = verify_extension(e)
    if not report.ok:
        for p in report.problems:
            err.write(f"error: {p}\n")
        return FAIL
    Q, proj = quotient(e.total, e.kernel)
    induced = HomSpec(Q, e.base, e.projection.compose(HomSpec(Q, e.total, proj.section)).matrix)
    iso = verify_iso(induced)
    out.write(f"isomorphism: {_yes(iso)}\n")
    return OK if iso else FAIL


# ---------------------------------------------------------------------------
# argument parsing


KINDS = ["heisenberg-even", "heisenberg-odd", "model-filiform"]


def _parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="superschur",
                                 description="Multipliers and covers of Lie superalgebras.")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", help="check the Lie superalgebra axioms")
    p.add_argument("file")
    p.set_defaults(run=cmd_validate)

    p = sub.add_parser("invariants", help="center, derived algebra, lower central series")
    p.add_argument("file")
    p.set_defaults(run=cmd_invariants)

    p = sub.add_parser("family", help="emit a family member or its cover")
    p.add_argument("kind", choices=KINDS)
    for flag in ("--p", "--q", "--n", "--m"):
        p.add_argument(flag, type=int, default=0)
    p.add_argument("--cover", action="store_true", help="emit a maximal stem extension")
    p.add_argument("--from-free", action="store_true",
                   help="build the cover from a free nilpotent presentation")
    p.add_argument("--prime", type=int, default=None, help="work over GF(prime)")
    p.set_defaults(run=cmd_family)

    p = sub.add_parser("multiplier", help="superdimension of the multiplier")
    p.add_argument("file")
    p.add_argument("--method", choices=["h2", "hopf"], required=True)
    p.add_argument("--class-bound", type=int, default=None)
    p.add_argument("--denominator", choices=["rf", "rr"], default=None)
    p.set_defaults(run=cmd_multiplier)

    p = sub.add_parser("verify-stem", help="check an extension is (maximal) stem")
    p.add_argument("file")
    p.add_argument("--maximal", action="store_true")
    p.set_defaults(run=cmd_verify_stem)

    p = sub.add_parser("stem-deform", help="quotient a central extension to a stem one")
    p.add_argument("file")
    p.set_defaults(run=cmd_stem_deform)

    p = sub.add_parser("check-quotient", help="check total/kernel is isomorphic to base")
    p.add_argument("file")
    p.set_defaults(run=cmd_check_quotient)

    p = sub.add_parser("table", help="computed vs closed-form multipliers")
    p.add_argument("kind", choices=KINDS)
    p.add_argument("--max", type=int, required=True)
    p.add_argument("--format", choices=["csv", "json"], default="csv")
    p.add_argument("--method", choices=["h2", "hopf"], default="h2")
    p.set_defaults(run=cmd_table)

    p = sub.add_parser("canonicalize", help="print the canonical form of a document")
    p.add_argument("file")
    p.set_defaults(run=cmd_canonicalize)
    return ap


def main(argv: Optional[List[str]] = None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    ap = _parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return BAD if exc.code else OK
    try:
        return args.run(args, out, err)
    except (_Malformed, DocumentError, PresentationError, PreconditionError) as exc:
        err.write(f"error: {exc}\n")
        return BAD


def run() -> None:
    sys.exit(main())


if __name__ == "__main__":
    run()
