"""Command-line front end.

Exit codes: 0 success, 1 usage or parse error, 2 a dimension did not
stabilise, 3 a regression value did not match.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from concurrent.futures import ProcessPoolExecutor

from . import catalog, classify, operations
from .germ import GermError, MonoGerm, MultiGerm, format_germ_file, read_germ_file
from .invariants import DEFAULT_MAX_ORDER, DEFAULT_WINDOW, ae_codim
from .jetlin import CodimReport
from .liftables import cuspidal_quotient, double_fold_quotient
from .poly import ParseError, Poly

EXIT_OK, EXIT_USAGE, EXIT_UNBOUNDED, EXIT_MISMATCH = 0, 1, 2, 3


class CliError(Exception):
    def __init__(self, message: str, code: int = EXIT_USAGE):
        super().__init__(message)
        self.code = code


def _read(path: str) -> MultiGerm:
    try:
        return read_germ_file(path)
    except ParseError as e:
        raise CliError(f"{path}:{e}") from e
    except OSError as e:
        raise CliError(f"{path}: {e.strerror}") from e


def _restrict(F: MultiGerm, s: int) -> MultiGerm:
    """The germ recovered from an s-parameter unfolding by zeroing the parameters."""
    if F.n <= s or F.p <= s:
        raise CliError(f"an {s}-parameter unfolding needs more than {s} source and target variables")
    ring = F.source_vars[: F.n - s]
    subst = [Poly.var(ring, i) for i in range(F.n - s)] + [Poly.zero(ring)] * s
    return MultiGerm(tuple(MonoGerm(tuple(c.compose(subst) for c in b.components[: F.p - s])) for b in F.branches))


def _germ_and_unfolding(args, s: int) -> tuple[MultiGerm, MultiGerm]:
    if args.F is None:
        raise CliError("--F (the stable unfolding) is required")
    F = _read(args.F)
    f = _read(args.f) if args.f else _restrict(F, s)
    return f, F


def _report_table(rep: CodimReport) -> str:
    rows = ["order  dim"] + [f"{k:>5}  {d}" for k, d in rep.history]
    return "\n".join(rows)


def _emit_report(rep: CodimReport, args, label: str = "") -> int:
    if args.json:
        print(json.dumps(dict(rep.as_dict(), name=label) if label else rep.as_dict()))
    else:
        print(rep.summary())
        if not rep.stable:
            print("the dimension keeps growing with the truncation order: the germ looks not finitely determined")
        print(_report_table(rep))
    return EXIT_OK if rep.stable else EXIT_UNBOUNDED


def cmd_codim(args) -> int:
    h = _read(args.file)
    return _emit_report(ae_codim(h, args.window, args.max_order), args)


def _write_germ(h: MultiGerm, args, comment: str):
    text = format_germ_file(h, comment)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    elif not args.json:
        sys.stdout.write(text)
    return text


def _finish_op(h: MultiGerm, args, comment: str, predicted: int | None = None, note: str = "") -> int:
    text = _write_germ(h, args, comment)
    result = {"germ": text}
    code = EXIT_OK
    if args.check:
        rep = ae_codim(h, args.window, args.max_order)
        result.update(direct=rep.value, predicted=predicted, note=note)
        if not rep.stable:
            code = EXIT_UNBOUNDED
        elif predicted is not None and rep.value != predicted:
            code = EXIT_MISMATCH
        if not args.json:
            line = f"predicted = {predicted if predicted is not None else 'n/a'}, direct = {rep.value}"
            if predicted is not None and rep.stable:
                line += "  (agree)" if rep.value == predicted else "  (MISMATCH)"
            print(line + (f"  [{note}]" if note else ""))
    if args.json:
        print(json.dumps(result))
    return code


def cmd_augment(args) -> int:
    if args.H is None and args.h is None:
        raise CliError("give --H (the unfolding) and optionally --h")
    if args.H is None:
        H = _read(args.h)
        h = _restrict(H, 1)
    else:
        H = _read(args.H)
        h = _read(args.h) if args.h else _restrict(H, 1)
    phi = operations.as_poly(args.phi)
    out = operations.augment(h, H, phi)
    predicted, note = None, ""
    if args.check:
        bound, qh = operations.predicted_codim_augment(h, phi, args.window, args.max_order)
        predicted = bound if qh else None
        note = f"lower bound {bound}" + ("" if qh else ", phi not known to be quasihomogeneous")
    return _finish_op(out, args, f"augmentation by {args.phi}", predicted, note)


def cmd_concat(args) -> int:
    kind = args.kind
    predicted, note = None, ""
    if kind == "monic":
        f, F = _germ_and_unfolding(args, 1)
        out = operations.monic_concat(f, F, args.k)
        if args.check:
            predicted = ae_codim(f, args.window, args.max_order).value
            note = "codimension of f"
    elif kind == "aug":
        f, F = _germ_and_unfolding(args, 1)
        if not args.phi:
            raise CliError("--phi is required for --kind aug")
        out = operations.aug_concat(f, F, args.phi)
        if args.check:
            bound, exact = operations.predicted_codim_aug_concat(f, F, args.phi, args.window, args.max_order)
            predicted = bound if exact else None
            note = f"lower bound {bound}" + ("" if exact else ", equality not certified")
    elif kind == "cuspidal":
        f, F = _germ_and_unfolding(args, 2)
        out = operations.cuspidal_concat(f, F)
        if args.check:
            predicted = cuspidal_quotient(F, window=args.window).value
            note = "cuspidal quotient of the unfolding"
    elif kind == "double-fold":
        f, F = _germ_and_unfolding(args, 2)
        out = operations.double_fold_concat(f, F)
        if args.check:
            first = MultiGerm(out.branches[: F.r + 1])
            a = ae_codim(first, args.window, args.max_order)
            q = double_fold_quotient(first, window=args.window)
            if a.stable and q.stable:
                predicted = a.value + q.value
            note = f"codim with the first fold {a.value} + double fold quotient {q.value}"
    elif kind == "binary":
        if not (args.F and args.G):
            raise CliError("--F and --G are required for --kind binary")
        F, G = _read(args.F), _read(args.G)
        f0 = _read(args.f) if args.f else _restrict(F, 1)
        g0 = _read(args.g) if args.g else _restrict(G, 1)
        out = operations.binary_concat(f0, g0, F, G)
    elif kind == "generalised":
        if not (args.F and args.gbar):
            raise CliError("--F and --gbar are required for --kind generalised")
        F = _read(args.F)
        f = _read(args.f) if args.f else None
        out = operations.generalised_concat(F, _read(args.gbar), f)
    else:  # argparse restricts the choices
        raise CliError(f"unknown kind {kind}")
    return _finish_op(out, args, f"{kind} concatenation", predicted, note)


def _run_entry(job):
    name, h, window, max_order = job
    t0 = time.perf_counter()
    rep = ae_codim(h, window, max_order)
    return rep, time.perf_counter() - t0


def cmd_verify(args) -> int:
    entries = [e for e in catalog.paper_catalog() if e.expected_codim is not None]
    if args.filter:
        entries = [e for e in entries if e.matches(args.filter)]
    if not entries:
        raise CliError(f"no catalog entry matches {args.filter!r}")
    jobs = [(e.name, e.germ, args.window, args.max_order) for e in entries]
    if args.jobs == 1:
        results = list(map(_run_entry, jobs))
    else:
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            results = list(pool.map(_run_entry, jobs))
    rows, bad = [], 0
    for e, (rep, secs) in zip(entries, results):
        ok = rep.value == e.expected_codim
        bad += not ok
        rows.append(
            {
                "name": e.name,
                "expected": e.expected_codim,
                "computed": rep.value,
                "certified_order": rep.certified_order,
                "runtime_s": round(secs, 2),
                "status": "ok" if ok else "MISMATCH",
            }
        )
    if args.json:
        print(json.dumps({"rows": rows, "mismatches": bad}))
    else:
        w = max(len(r["name"]) for r in rows)
        print(f"{'name':<{w}}  expected  computed  order  runtime  status")
        for r in rows:
            order = "-" if r["certified_order"] is None else r["certified_order"]
            print(
                f"{r['name']:<{w}}  {str(r['expected']):>8}  {str(r['computed']):>8}  {order!s:>5}"
                f"  {r['runtime_s']:>6.2f}s  {r['status']}"
            )
        print(f"{len(rows) - bad}/{len(rows)} match")
        for r in rows:
            if r["status"] != "ok":
                print(f"mismatch: {r['name']}: expected {r['expected']}, computed {r['computed']}")
    return EXIT_MISMATCH if bad else EXIT_OK


def cmd_classify(args) -> int:
    h = _read(args.file)
    rep = ae_codim(h, args.window, args.max_order)
    if not rep.stable:
        print(f"error: {rep.summary()}", file=sys.stderr)
        return EXIT_UNBOUNDED
    if rep.value != 2:
        raise CliError(f"codim = {rep.value}, not 2")
    labs = classify.classify_codim2(h, args.window, args.max_order)
    if args.json:
        print(json.dumps([{"label": l.label, "f": [i + 1 for i in l.f_branches], "g": [i + 1 for i in l.g_branches],
                           "evidence": {k: str(v) for k, v in l.evidence.items()}} for l in labs]))
        return EXIT_OK
    if not labs:
        print("no split of the branches falls under a labelled case")
    for l in labs:
        print(l)
    if any(len(l.f_branches) > 1 or len(l.g_branches) > 1 for l in labs):
        print("note: transversality between multigerm parts is evaluated branch by branch")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--max-order", type=int, default=DEFAULT_MAX_ORDER, help="highest truncation order (default %(default)s)")
    common.add_argument("--window", type=int, default=DEFAULT_WINDOW, help="orders a dimension must stay constant (default %(default)s)")
    common.add_argument("--json", action="store_true", help="machine-readable output")

    p = argparse.ArgumentParser(prog="germtools", description="Ae-codimension, operations and classification of map-germs.")
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("codim", parents=[common], help="Ae-codimension of a germ file")
    c.add_argument("file")
    c.set_defaults(func=cmd_codim)

    op = sub.add_parser("op", help="build a germ by augmentation or concatenation")
    opsub = op.add_subparsers(dest="operation", required=True)
    io = argparse.ArgumentParser(add_help=False)
    io.add_argument("--out", help="write the germ file here instead of stdout")
    io.add_argument("--check", action="store_true", help="compare the direct codimension with the predicted one")

    a = opsub.add_parser("augment", parents=[common, io], help="(x, z) -> (h_{phi(z)}(x), z)")
    a.add_argument("--h", help="germ file of h (default: the unfolding at parameter 0)")
    a.add_argument("--H", help="germ file of a stable 1-parameter unfolding of h")
    a.add_argument("--phi", required=True, help="augmenting function, e.g. 'z^3'")
    a.set_defaults(func=cmd_augment)

    k = opsub.add_parser("concat", parents=[common, io], help="monic, aug, binary, generalised, cuspidal or double-fold concatenation")
    k.add_argument("--kind", required=True, choices=["monic", "aug", "binary", "generalised", "cuspidal", "double-fold"])
    k.add_argument("--f", help="germ file of f (default: the unfolding with parameters set to 0)")
    k.add_argument("--F", help="germ file of the stable unfolding of f")
    k.add_argument("--g", help="binary: germ file of g0")
    k.add_argument("--G", help="binary: germ file of the unfolding of g0")
    k.add_argument("--gbar", help="generalised: germ file of the stable germ gbar")
    k.add_argument("--k", type=int, default=1, help="monic: number of squared variables (default 1)")
    k.add_argument("--phi", help="aug: one-variable augmenting function")
    k.set_defaults(func=cmd_concat)

    v = sub.add_parser("verify-paper", parents=[common], help="recompute every catalog codimension")
    v.add_argument("--filter", help="name substring or tag (table, augmentation, aug-concat, monic, cuspidal, double-fold, special, nadatrans, stable)")
    v.add_argument("--jobs", type=int, default=None, help="worker processes (default: CPU count)")
    v.set_defaults(func=cmd_verify)

    cl = sub.add_parser("classify", parents=[common], help="operation labels of a codimension-2 multigerm")
    cl.add_argument("file")
    cl.set_defaults(func=cmd_classify)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except CliError as e:
        print(f"error: {e}", file=sys.stderr)
        return e.code
    except (GermError, ParseError, ValueError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except ArithmeticError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_UNBOUNDED


if __name__ == "__main__":
    sys.exit(main())
