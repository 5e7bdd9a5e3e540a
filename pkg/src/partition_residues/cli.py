"""Command-line interface: exact values, profile constants, checks and CSV exports."""

from __future__ import annotations

import argparse
import contextlib
import csv
import logging
import math
import sys
from fractions import Fraction

from . import asymptotics as asy
from .errors import BoundaryError, BracketError, CapacityError, KindError, SingularFactorError
from .exact_engine import DEFAULT_BUDGET, build_table, qn_exact, residue_counts, weighted_combination
from .special_functions import L_function, find_crossings
from .verification import convergence_report, exact_sign_changes, overlay

EXIT_OK, EXIT_USAGE, EXIT_NUMERIC = 0, 2, 3

# default selectors per figure: (b, a1, a2)
FIGURE_DEFAULTS = {1: (5, 1, 4), 2: (5, 1, 4), 4: (6, 1, 5)}


class UsageError(Exception):
    pass


def _int_list(text: str) -> list[int]:
    return [int(x) for x in text.replace(" ", "").split(",") if x]


def _weight_list(text: str) -> list:
    out = []
    for x in text.replace(" ", "").split(","):
        if not x:
            continue
        try:
            out.append(Fraction(x))
        except ValueError:
            out.append(float(x))
    return out


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="partition-residues",
        description="Partitions counted by number of parts modulo b: exact values and asymptotic main terms.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def selectors(p, twist=False):
        p.add_argument("--b", type=int, help="modulus b >= 2")
        p.add_argument("--a", type=int, help="single residue (compute) or twist of Q_n (constants)")
        if twist:
            p.add_argument("--j", type=int, help="twist j: Q_n(zeta_b**j) as a cyclotomic integer")
        p.add_argument("--a1", type=int)
        p.add_argument("--a2", type=int)
        p.add_argument("--s1", type=_int_list, help="comma-separated residues")
        p.add_argument("--s2", type=_int_list, help="comma-separated residues")
        p.add_argument("--weights", type=_weight_list, help="comma-separated weights v_0,...,v_{b-1}; use --weights=-1,... when the first is negative")
        p.add_argument("--budget", type=int, default=DEFAULT_BUDGET, help="largest table size allowed")
        p.add_argument("--digits", type=int, default=12, help="significant digits for floats")

    p = sub.add_parser("compute", help="exact p(a,b,n), combinations or Q_n(zeta_b**j)")
    selectors(p, twist=True)
    p.add_argument("--n", type=int, required=True)

    p = sub.add_parser("constants", help="print the asymptotic profile")
    selectors(p)

    p = sub.add_parser("verify", help="windowed residual summary of exact vs predicted")
    selectors(p)
    p.add_argument("--nmax", type=int, default=900)

    p = sub.add_parser("signchanges", help="exact and predicted sign-change indices")
    selectors(p)
    p.add_argument("--nmax", type=int, default=900)

    p = sub.add_parser("export-figure", help="write CSV data for a figure")
    selectors(p)
    p.add_argument("--figure", type=int, choices=(1, 2, 3, 4), required=True)
    p.add_argument("--nmax", type=int, default=900)
    p.add_argument("--output", help="CSV path (standard output if omitted)")
    p.add_argument("--step", type=float, default=1e-3, help="theta step for figure 3")

    p = sub.add_parser("crossings", help="print theta13 and theta23")
    p.add_argument("--digits", type=int, default=12)
    return parser


def _fmt(x, digits: int) -> str:
    if isinstance(x, bool):
        return str(x)
    if isinstance(x, int):
        return str(x)
    if isinstance(x, Fraction):
        return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"
    if isinstance(x, complex):
        return f"{x.real:.{digits}g}{x.imag:+.{digits}g}i"
    return f"{x:.{digits}g}"


def _selector(args, allow_single=False):
    """Return (kind, payload) for the one selector group given."""
    given = []
    if allow_single and getattr(args, "a", None) is not None:
        given.append(("a", args.a))
    if getattr(args, "j", None) is not None:
        given.append(("j", args.j))
    if args.a1 is not None or args.a2 is not None:
        if args.a1 is None or args.a2 is None:
            raise UsageError("--a1 and --a2 go together")
        given.append(("pair", (args.a1, args.a2)))
    if args.s1 is not None or args.s2 is not None:
        given.append(("sets", (args.s1 or [], args.s2 or [])))
    if args.weights is not None:
        given.append(("weights", args.weights))
    if not allow_single and getattr(args, "a", None) is not None:
        raise UsageError("--a is not valid for this command")
    if len(given) > 1:
        raise UsageError("give exactly one of: --a, --j, --a1/--a2, --s1/--s2, --weights")
    return given[0] if given else (None, None)


def _need_b(args) -> int:
    if args.b is None:
        raise UsageError("--b is required")
    if args.b < 2:
        raise UsageError("--b must be at least 2")
    return args.b


def _profile(args, kind, payload):
    b = _need_b(args)
    if kind == "a":
        if not 1 <= payload < b:
            raise UsageError(f"--a must lie in [1, {b})")
        return asy.qn_profile(b, payload)
    if kind == "pair":
        a1, a2 = payload
        if not (0 <= a1 < b and 0 <= a2 < b) or a1 == a2:
            raise UsageError(f"--a1/--a2 must be distinct residues in [0, {b})")
        return asy.difference_profile(a1, a2, b)
    if kind == "sets":
        try:
            spec = asy.SetDifferenceSpec(b, *payload)
        except ValueError as exc:
            raise UsageError(str(exc)) from exc
        return asy.set_difference_profile(spec)
    if kind == "weights":
        if len(payload) != b:
            raise UsageError(f"--weights needs {b} entries, got {len(payload)}")
        if not any(payload):
            raise UsageError("--weights must not be all zero")
        return asy.generic_profile(payload, b)
    raise UsageError("a selector is required: --a1/--a2, --s1/--s2 or --weights")


def _table(n_max: int, budget: int):
    if n_max < 1:
        raise UsageError("n must be at least 1")
    return build_table(n_max, budget)


def cmd_compute(args, out) -> None:
    b = _need_b(args)
    kind, payload = _selector(args, allow_single=True)
    table = _table(max(args.n, 1), args.budget)
    n = args.n
    if kind is None:
        res = residue_counts(table, b, n)
        for a, c in enumerate(res.entries):
            print(f"p({a},{b},{n}) = {c}", file=out)
        print(f"p({n}) = {res.total()}", file=out)
        return
    if kind == "a":
        print(f"p({payload},{b},{n}) = {residue_counts(table, b, n)[payload]}", file=out)
        return
    if kind == "j":
        if not 0 <= payload < b:
            raise UsageError(f"--j must lie in [0, {b})")
        q = qn_exact(table, b, payload, n)
        print("coefficients of zeta^k, k = 0..b-1: " + " ".join(str(c) for c in q.coeffs), file=out)
        print("reduced mod cyclotomic polynomial: " + " ".join(str(c) for c in q.reduced()), file=out)
        print(f"value = {_fmt(q.evaluate(), args.digits)}", file=out)
        return
    weights = _weights_for(b, kind, payload)
    value = weighted_combination(weights, b, n, table)
    print(f"value = {_fmt(value, args.digits)}", file=out)


def _weights_for(b, kind, payload):
    if kind == "pair":
        a1, a2 = payload
        w = [0] * b
        w[a1] += 1
        w[a2] -= 1
        return w
    if kind == "sets":
        return list(asy.SetDifferenceSpec(b, *payload).weights)
    if len(payload) != b:
        raise UsageError(f"--weights needs {b} entries, got {len(payload)}")
    return payload


def cmd_constants(args, out) -> None:
    kind, payload = _selector(args, allow_single=True)
    prof = _profile(args, kind, payload)
    d = args.digits
    print(f"b = {prof.b}", file=out)
    print(f"selector = {kind} {payload}", file=out)
    print(f"kind = {prof.kind}", file=out)
    print(f"target = {prof.target}", file=out)
    print(f"regime = {prof.regime}", file=out)
    print(f"dominant = {prof.dominant}", file=out)
    if prof.d0 is not None:
        print(f"d0 = {prof.d0}", file=out)
    print(f"lambda1 = {_fmt(prof.lambda1, d)}", file=out)
    print(f"lambda2 = {_fmt(prof.lambda2, d)}", file=out)
    print(f"amplitude = {_fmt(prof.amplitude, d)}", file=out)
    print(f"phase = {_fmt(prof.phase, d)}", file=out)
    print(f"envelope_power = {_fmt(prof.envelope_power, d)}", file=out)
    if prof.parity_turn is not None:
        print(f"discrete_turn = {_fmt(prof.parity_turn, d)}", file=out)
    if prof.coefficient is not None:
        print(f"coefficient = {_fmt(prof.coefficient, d)}", file=out)
    if prof.secondary is not None:
        for i, t in enumerate(prof.secondary, start=1):
            print(
                f"secondary{i} = amplitude {_fmt(t.amplitude, d)}, phase {_fmt(t.phase, d)}, "
                f"turn {_fmt(t.turn, d)}",
                file=out,
            )


def cmd_verify(args, out) -> None:
    kind, payload = _selector(args)
    prof = _profile(args, kind, payload)
    table = _table(args.nmax, args.budget)
    rows = overlay(table, prof, range(1, args.nmax + 1))
    d = args.digits
    print("lo,hi,count,max_abs_residual,median_abs_residual", file=out)
    for w in convergence_report(rows):
        print(f"{w.lo},{w.hi},{w.count},{_fmt(w.max_abs_residual, d)},{_fmt(w.median_abs_residual, d)}", file=out)


def cmd_signchanges(args, out) -> None:
    kind, payload = _selector(args)
    prof = _profile(args, kind, payload)
    table = _table(args.nmax, args.budget)
    values = [weighted_combination(prof.weights, prof.b, n, table) for n in range(1, args.nmax + 1)]
    exact = exact_sign_changes(values, start=1)
    print("exact = " + ",".join(map(str, exact)), file=out)
    try:
        predicted = asy.predict_sign_changes(prof, args.nmax)
    except KindError as exc:
        print(f"predicted = unavailable ({exc})", file=out)
        return
    print("predicted = " + ",".join(map(str, predicted)), file=out)
    diff = [(i + 1, e, p) for i, (e, p) in enumerate(zip(exact, predicted)) if e != p]
    print("differing positions = " + ";".join(f"{i}:{e}/{p}" for i, e, p in diff), file=out)
    if len(exact) != len(predicted):
        print(f"count mismatch: exact {len(exact)}, predicted {len(predicted)}", file=out)
    print("symmetric difference = " + ",".join(map(str, sorted(set(exact) ^ set(predicted)))), file=out)


def _figure_profile(args):
    kind, payload = _selector(args)
    if kind is None:
        b, a1, a2 = FIGURE_DEFAULTS[args.figure]
        if args.b is not None and args.b != b:
            raise UsageError("--b without a selector only accepts the figure's default modulus")
        args.b = b
        return asy.difference_profile(a1, a2, b)
    return _profile(args, kind, payload)


def cmd_export(args, out) -> None:
    d = args.digits
    writer = csv.writer(out, lineterminator="\n")
    if args.figure == 3:
        if not 0 < args.step <= 0.1:
            raise UsageError("--step must lie in (0, 0.1]")
        cr = find_crossings()
        writer.writerow(["theta", "reL"])
        count = int(round(math.pi / args.step))
        for i in range(count + 1):
            theta = min(i * args.step, math.pi)
            if min(abs(theta - cr.theta13), abs(theta - cr.theta23)) < 1e-12:
                continue
            writer.writerow([_fmt(theta, d), _fmt(L_function(theta).real, d)])
        return
    prof = _figure_profile(args)
    table = _table(args.nmax, args.budget)
    if args.figure == 1:
        writer.writerow(["n", "log10_abs_exact", "sign"])
        for n in range(1, args.nmax + 1):
            v = weighted_combination(prof.weights, prof.b, n, table)
            sign = (v > 0) - (v < 0)
            mag = _fmt(_log10_abs(v), d) if v else "-inf"
            writer.writerow([n, mag, sign])
        return
    writer.writerow(["n", "exact", "envelope", "normalized", "predicted", "residual"])
    for r in overlay(table, prof, range(1, args.nmax + 1)):
        writer.writerow([r.n] + [_fmt(x, d) for x in (r.exact, r.envelope, r.normalized, r.predicted, r.residual)])


def _log10_abs(v: Fraction) -> float:
    v = abs(v)
    return math.log10(v.numerator) - math.log10(v.denominator)


def cmd_crossings(args, out) -> None:
    cr = find_crossings()
    print(f"theta13 = {_fmt(cr.theta13, args.digits)}", file=out)
    print(f"theta23 = {_fmt(cr.theta23, args.digits)}", file=out)


COMMANDS = {
    "compute": cmd_compute,
    "constants": cmd_constants,
    "verify": cmd_verify,
    "signchanges": cmd_signchanges,
    "export-figure": cmd_export,
    "crossings": cmd_crossings,
}


def main(argv=None) -> int:
    logging.basicConfig(level=logging.WARNING, format="%(levelname)s: %(message)s")
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_USAGE
    if getattr(args, "digits", 12) < 1:
        print("error: --digits must be positive", file=sys.stderr)
        return EXIT_USAGE
    try:
        output = getattr(args, "output", None)
        with contextlib.ExitStack() as stack:
            if output:
                out = stack.enter_context(open(output, "w", encoding="utf-8", newline=""))
            else:
                out = sys.stdout
            COMMANDS[args.command](args, out)
    except (UsageError, CapacityError, KindError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (BoundaryError, SingularFactorError, BracketError, ZeroDivisionError, ArithmeticError) as exc:
        print(f"numeric error: {exc}", file=sys.stderr)
        return EXIT_NUMERIC
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
