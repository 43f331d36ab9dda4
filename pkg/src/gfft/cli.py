"""Command-line front end: plan construction, transforms on files, basis
conversion, op-count benchmarking, and the one-command worked-example check.

Exit codes: 0 success, 2 validation error, 3 numerical mismatch.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time

from . import fileio
from .afft import AddPlan, add_fft, add_ifft, add_plan, lch_to_standard, standard_to_lch
from .cfft import CyclicPlan, cyclic_plan, q1_fft, q1_ifft, std_to_tilde, tilde_to_std
from .errors import MismatchError, ValidationError
from .gf import field_make
from .mfft import MultPlan, mult_fft, mult_ifft, mult_plan
from .vectors import BASIS_CYCLIC, BASIS_LCH, BASIS_STANDARD, CoeffVec, CyclicEvalVec


def poly_str(poly) -> str:
    if poly.is_zero():
        return "0"
    parts = []
    for i in range(len(poly.coeffs) - 1, -1, -1):
        c = poly.coeffs[i]
        if not c:
            continue
        if i == 0:
            parts.append(str(c))
        else:
            xs = "x" if i == 1 else f"x^{i}"
            parts.append(xs if c == 1 else f"{c}{xs}")
    return "+".join(parts)


def _threads() -> int:
    try:
        return max(int(os.environ.get("GFFT_THREADS", "0")), 0)
    except ValueError:
        return 0


def _parse_ints(text):
    return [int(v) for v in text.split(",") if v != ""]


def _build_plan(args):
    field = field_make(args.p, args.r)
    if args.case == "mult":
        return mult_plan(field, _parse_ints(args.radices), args.beta)
    if args.case == "add":
        if args.basis:
            basis = [fileio._elem_in(field, json.loads(v) if v.startswith("[") else int(v))
                     for v in args.basis.split(",")]
        else:
            basis = None
        if basis is None:
            raise ValidationError("additive plans need --basis v1,v2,...")
        return add_plan(field, basis)
    if args.case == "cyclic":
        m_pair = tuple(_parse_ints(args.m)) if args.m else None
        fiber = None if args.fiber in (None, "", "inf") else int(args.fiber)
        return cyclic_plan(field, _parse_ints(args.radices), m_pair=m_pair, fiber_key=fiber)
    raise ValidationError(f"unknown case {args.case!r}")


def _print_plan_summary(plan, out=sys.stdout):
    if isinstance(plan, MultPlan):
        print(f"multiplicative plan: n={plan.n} radices={list(plan.radices)}", file=out)
        print(f"omega = {plan.omega}  beta = {plan.beta}", file=out)
    elif isinstance(plan, AddPlan):
        print(f"additive plan: n={plan.n} basis={list(plan.basis)}", file=out)
        print(f"betas = {list(plan.betas)}", file=out)
        for i, ell in enumerate(plan.lin_polys):
            print(f"ell_{i} = {poly_str(ell)}", file=out)
    elif isinstance(plan, CyclicPlan):
        print(f"cyclic plan: n={plan.n} radices={list(plan.radices)} "
              f"m=(a={plan.m_coeffs[0]}, b={plan.m_coeffs[1]})", file=out)
        print(f"Q = {poly_str(plan.quads[0])}", file=out)
        print(f"x_1 = ({poly_str(plan.x_funs[1].num)})/({poly_str(plan.x_funs[1].den)})", file=out)
        print(f"poles per level = {plan.pole_sequence()}", file=out)
        print(f"scale constant = {plan.scale_const}", file=out)
        consts = plan.example_constants()
        if consts is not None:
            print(f"level constants = {consts}", file=out)
        key = "inf" if plan.is_full else plan.bucket_key
        print(f"evaluation fiber = {key}", file=out)


def cmd_plan(args) -> int:
    plan = _build_plan(args)
    _print_plan_summary(plan)
    if args.out:
        with open(args.out, "w") as fh:
            json.dump(fileio.plan_to_json(plan), fh, indent=1)
        print(f"plan written to {args.out}")
    return 0


def _load_plan(path):
    with open(path) as fh:
        obj = json.load(fh)
    return fileio.plan_from_json(obj)


def _read_coeffs(field, path, fmt, basis):
    if fmt == "csv" or (fmt is None and path.endswith(".csv")):
        with open(path) as fh:
            return fileio.coeffs_from_csv(field, fh.read(), basis)
    with open(path) as fh:
        return fileio.coeffs_from_json(field, json.load(fh))


def _default_basis(plan):
    if isinstance(plan, MultPlan):
        return BASIS_STANDARD
    if isinstance(plan, AddPlan):
        return BASIS_LCH
    return BASIS_CYCLIC


def cmd_fft(args) -> int:
    plan = _load_plan(args.plan)
    field = plan.field
    coeffs = _read_coeffs(field, args.infile, args.format, _default_basis(plan))
    ctr_report = None
    with field.count_ops() as ctr:
        t0 = time.perf_counter()
        if isinstance(plan, MultPlan):
            values = mult_fft(plan, coeffs)
        elif isinstance(plan, AddPlan):
            values = add_fft(plan, coeffs)
        else:
            values = q1_fft(plan, coeffs, threads=_threads())
        elapsed = time.perf_counter() - t0
        ctr_report = ctr.snapshot()
    if args.count_ops:
        print(f"ops: adds={ctr_report.adds} muls={ctr_report.muls} "
              f"invs={ctr_report.invs} wall={elapsed:.6f}s", file=sys.stderr)
    _write_values(field, values, args.out, args.format)
    print(f"values written to {args.out}")
    return 0


def _write_values(field, values, path, fmt):
    if fmt == "csv" or (fmt is None and path.endswith(".csv")):
        with open(path, "w") as fh:
            fh.write(fileio.values_to_csv(field, values))
    else:
        with open(path, "w") as fh:
            json.dump(fileio.values_to_json(field, values), fh, indent=1)


def cmd_ifft(args) -> int:
    plan = _load_plan(args.plan)
    field = plan.field
    with open(args.infile) as fh:
        obj = json.load(fh)
    values = fileio.values_from_json(field, obj, plan)
    if isinstance(plan, MultPlan):
        coeffs = mult_ifft(plan, values)
    elif isinstance(plan, AddPlan):
        coeffs = add_ifft(plan, values)
    else:
        coeffs = q1_ifft(plan, values)
    with open(args.out, "w") as fh:
        if args.format == "csv" or (args.format is None and args.out.endswith(".csv")):
            fh.write(fileio.coeffs_to_csv(field, coeffs))
        else:
            json.dump(fileio.coeffs_to_json(field, coeffs), fh, indent=1)
    print(f"coefficients written to {args.out}")
    return 0


def cmd_convert(args) -> int:
    plan = _load_plan(args.plan)
    field = plan.field
    coeffs = _read_coeffs(field, args.infile, args.format, None)
    src = coeffs.basis
    dst = args.to
    if isinstance(plan, AddPlan):
        if (src, dst) == (BASIS_STANDARD, BASIS_LCH):
            out = standard_to_lch(plan, coeffs)
        elif (src, dst) == (BASIS_LCH, BASIS_STANDARD):
            out = lch_to_standard(plan, coeffs)
        else:
            raise ValidationError(f"cannot convert {src!r} -> {dst!r} on an additive plan")
    elif isinstance(plan, CyclicPlan):
        if (src, dst) == (BASIS_STANDARD, BASIS_CYCLIC):
            out = std_to_tilde(plan, coeffs)
        elif (src, dst) == (BASIS_CYCLIC, BASIS_STANDARD):
            out = tilde_to_std(plan, coeffs)
        else:
            raise ValidationError(f"cannot convert {src!r} -> {dst!r} on a cyclic plan")
    else:
        raise ValidationError("multiplicative plans already use the standard basis")
    with open(args.out, "w") as fh:
        json.dump(fileio.coeffs_to_json(field, out), fh, indent=1)
    print(f"converted coefficients written to {args.out}")
    return 0


def cmd_bench(args) -> int:
    import random

    rng = random.Random(args.seed)
    rows = []
    if args.case == "cyclic" and args.fields:
        for p in _parse_ints(args.fields):
            field = field_make(p)
            n = p + 1
            radices = _factor_smooth(n)
            plan = cyclic_plan(field, radices)
            rows.append(_bench_one(field, plan, rng, label=f"q={p} n={n}"))
    else:
        field = field_make(args.p, args.r)
        for n in _parse_ints(args.ladder):
            if args.case == "mult":
                plan = mult_plan(field, _factor_smooth(n))
            elif args.case == "add":
                dim, m = 0, n
                while m > 1 and m % field.p == 0:
                    m //= field.p
                    dim += 1
                if m != 1:
                    raise ValidationError(f"additive ladder sizes must be powers of {field.p}")
                basis = [field.p**i for i in range(dim)]  # unit coefficient vectors
                plan = add_plan(field, basis)
            else:
                plan = cyclic_plan(field, _factor_smooth(n))
            rows.append(_bench_one(field, plan, rng, label=f"n={plan.n}"))
    print(f"{'config':>14} {'ops':>10} {'wall_s':>9} {'ratio':>7}")
    prev = None
    for label, ops, wall in rows:
        ratio = f"{ops / prev:.2f}" if prev else "-"
        print(f"{label:>14} {ops:>10} {wall:>9.4f} {ratio:>7}")
        prev = ops
    return 0


def _factor_smooth(n):
    radices = []
    d = 2
    while n > 1:
        while n % d == 0:
            radices.append(d)
            n //= d
        d += 1
    return radices


def _bench_one(field, plan, rng, label):
    coeffs = [rng.randrange(field.q) for _ in range(plan.n)]
    with field.count_ops() as ctr:
        t0 = time.perf_counter()
        if isinstance(plan, MultPlan):
            mult_fft(plan, coeffs)
        elif isinstance(plan, AddPlan):
            add_fft(plan, coeffs)
        else:
            q1_fft(plan, coeffs)
        wall = time.perf_counter() - t0
    return label, ctr.total(), wall


def cmd_repro127(args) -> int:
    from .repro import check_reproduction

    lines = []
    ok, checks = check_reproduction(lines)
    for line in lines:
        print(line)
    if ok:
        print("worked example reproduced exactly")
        return 0
    print("worked-example reproduction found mismatches (see FAIL lines)")
    return 3


def build_parser():
    ap = argparse.ArgumentParser(prog="gfft", description=__doc__)
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("plan", help="build a transform plan and write it to JSON")
    p.add_argument("--case", required=True, choices=["mult", "add", "cyclic"])
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--r", type=int, default=1)
    p.add_argument("--radices", default="")
    p.add_argument("--beta", type=int, default=1)
    p.add_argument("--basis", default=None, help="additive subspace basis, comma separated")
    p.add_argument("--m", default=None, help="cyclic quadratic coefficients a,b")
    p.add_argument("--fiber", default=None, help="cyclic evaluation fiber value")
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_plan)

    for name, fn in (("fft", cmd_fft), ("ifft", cmd_ifft)):
        p = sub.add_parser(name, help=f"run {name} on a coefficient/value file")
        p.add_argument("--plan", required=True)
        p.add_argument("--in", dest="infile", required=True)
        p.add_argument("--out", required=True)
        p.add_argument("--format", choices=["json", "csv"], default=None)
        p.add_argument("--count-ops", action="store_true")
        p.set_defaults(func=fn)

    p = sub.add_parser("convert", help="change coefficient basis under a plan")
    p.add_argument("--plan", required=True)
    p.add_argument("--to", required=True, choices=[BASIS_STANDARD, BASIS_LCH, BASIS_CYCLIC])
    p.add_argument("--in", dest="infile", required=True)
    p.add_argument("--out", required=True)
    p.add_argument("--format", choices=["json", "csv"], default=None)
    p.set_defaults(func=cmd_convert)

    p = sub.add_parser("bench", help="measure op counts over a size ladder")
    p.add_argument("--case", required=True, choices=["mult", "add", "cyclic"])
    p.add_argument("--p", type=int, default=None)
    p.add_argument("--r", type=int, default=1)
    p.add_argument("--ladder", default="")
    p.add_argument("--fields", default=None, help="cyclic: comma list of primes, n = q+1")
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_bench)

    p = sub.add_parser("repro127", help="reproduce the published q=127 worked example")
    p.set_defaults(func=cmd_repro127)
    return ap


def main(argv=None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    try:
        return args.func(args)
    except ValidationError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 2
    except MismatchError as exc:
        print(f"mismatch: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
