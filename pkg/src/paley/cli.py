"""Command-line front end: count / verify / orbits / search / table.

JSON is the canonical output and is byte-identical across runs for
identical inputs (keys sorted, no timing inside the payload; timings go
to stderr). Exit codes: 0 success, 1 verification failure, 2 usage
error.
"""

import argparse
import json
import os
import sys
import time

from .digraph import build_G, count_transitive, multicolor_tournament, verify_prop41
from .characters import check_aggregate_identities
from .field import Field, factor_prime_power, valid_modulus
from .formulas import closed_form, k3_thm3, k4_thm1, k4_thm2
from .hyper import identity_suite
from .orbits import enumerate_orbits, orbits_csv, verify_orbit_values
from .ramsey import composite_bound, search_zero, table1


def _emit(payload, args):
    text = json.dumps(payload, sort_keys=True, separators=(",", ":")) + "\n"
    if getattr(args, "out", None):
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _field_for(q):
    pr = factor_prime_power(q)
    if pr is None:
        raise SystemExit(f"error: q = {q} is not a prime power")
    return Field(*pr)


def _field_meta(f):
    return {"p": f.p, "r": f.r, "q": f.q, "modulus": list(f.modulus), "omega": f.omega}


def _require_valid(q, k):
    if not valid_modulus(q, k):
        print(f"error: need q = k+1 (mod 2k); got (q, k) = ({q}, {k})", file=sys.stderr)
        raise SystemExit(2)


def cmd_count(args):
    _require_valid(args.q, args.k)
    f = _field_for(args.q)
    t0 = time.perf_counter()
    if args.method == "brute":
        count = count_transitive(build_G(f, args.k), args.m)
    elif args.method == "thm1":
        if args.m != 4:
            raise SystemExit("error: thm1 counts m = 4 only")
        count = k4_thm1(f, args.k)
    elif args.method == "thm2":
        if args.m != 4:
            raise SystemExit("error: thm2 counts m = 4 only")
        count = k4_thm2(f, args.k, residual_mode=args.residual)
    elif args.method == "thm3":
        if args.m != 3:
            raise SystemExit("error: thm3 counts m = 3 only")
        count = k3_thm3(f, args.k)
    else:
        count = closed_form(f, args.k, args.m)
    elapsed = time.perf_counter() - t0
    print(f"count: {elapsed:.3f}s", file=sys.stderr)
    _emit(
        {
            "command": "count",
            "k": args.k,
            "q": args.q,
            "m": args.m,
            "method": args.method,
            "count": count,
            "field": _field_meta(f),
        },
        args,
    )
    return 0


SUITES = ("aggregates", "identities", "structure", "orbits")


def cmd_verify(args):
    _require_valid(args.q, args.k)
    f = _field_for(args.q)
    wanted = SUITES if args.suites == "all" else tuple(args.suites.split(","))
    for s in wanted:
        if s not in SUITES:
            print(f"error: unknown suite {s!r} (have {', '.join(SUITES)})", file=sys.stderr)
            return 2
    reports = []
    if "aggregates" in wanted:
        reports.append(check_aggregate_identities(f, args.k))
    if "identities" in wanted:
        reports.append(identity_suite(f, args.k, trials=args.trials))
    if "structure" in wanted:
        reports.append(verify_prop41(f, args.k))
    if "orbits" in wanted:
        reports.append(verify_orbit_values(f, args.k))
    ok = all(r.passed for r in reports)
    for r in reports:
        print(r)
    _emit(
        {
            "command": "verify",
            "k": args.k,
            "q": args.q,
            "suites": list(wanted),
            "passed": ok,
            "checks": [
                {"suite": r.title, "name": c.name, "ok": c.ok}
                for r in reports
                for c in r.checks
            ],
            "field": _field_meta(f),
        },
        args,
    )
    return 0 if ok else 1


def cmd_orbits(args):
    records = enumerate_orbits(args.k)
    if args.format == "csv":
        text = orbits_csv(records) + "\n"
        if args.out:
            with open(args.out, "w") as fh:
                fh.write(text)
        else:
            sys.stdout.write(text)
        return 0
    _emit(
        {
            "command": "orbits",
            "k": args.k,
            "orbit_count": len(records),
            "orbits": [
                {
                    "representative": list(r.representative),
                    "size": r.size,
                    "net": r.net,
                    "zero_valued": r.zero_valued,
                }
                for r in records
            ],
        },
        args,
    )
    return 0


def cmd_search(args):
    t0 = time.perf_counter()
    rec = search_zero(args.k, args.m, args.qmax, threads=args.threads)
    print(f"search: {time.perf_counter() - t0:.3f}s", file=sys.stderr)
    payload = {"command": "search", **rec.to_dict()}
    if args.format == "csv":
        lines = ["k,m,t,q_max,q_star,bound,witnesses"]
        wit = " ".join(str(q) for q in rec.witnesses)
        lines.append(
            f"{rec.k},{rec.m},{rec.t},{rec.q_max},{rec.q_star},{rec.bound},{wit}"
        )
        text = "\n".join(lines) + "\n"
        if args.out:
            with open(args.out, "w") as fh:
                fh.write(text)
        else:
            sys.stdout.write(text)
        return 0
    _emit(payload, args)
    return 0


def cmd_table(args):
    t0 = time.perf_counter()
    rows = table1(args.qmax, threads=args.threads)
    print(f"table: {time.perf_counter() - t0:.3f}s", file=sys.stderr)
    if args.format == "text":
        out = ["t  R_t(3)  R_t(4)"]
        for t, r3, r4 in rows:
            out.append(f"{t}  {r3.bound}  {r4.bound}")
        text = "\n".join(out) + "\n"
        sys.stdout.write(text)
        return 0
    payload = {
        "command": "table",
        "q_max": args.qmax,
        "rows": [
            {"t": t, "r3": r3.to_dict(), "r4": r4.to_dict()} for t, r3, r4 in rows
        ],
    }
    if args.format == "csv":
        lines = ["t,bound_m3,bound_m4"]
        lines += [f"{t},{r3.bound},{r4.bound}" for t, r3, r4 in rows]
        text = "\n".join(lines) + "\n"
        if args.out:
            with open(args.out, "w") as fh:
                fh.write(text)
        else:
            sys.stdout.write(text)
        return 0
    _emit(payload, args)
    return 0


def cmd_bound(args):
    b = composite_bound(args.t, args.m, args.seed_t, args.seed_bound, args.r1)
    _emit(
        {
            "command": "bound",
            "t": args.t,
            "m": args.m,
            "seed_t": args.seed_t,
            "seed_bound": args.seed_bound,
            "bound": b,
        },
        args,
    )
    return 0


def _build_parser():
    ap = argparse.ArgumentParser(
        prog="paley",
        description="k-th power Paley digraphs: exact subtournament counts and "
        "multicolor directed Ramsey lower bounds",
    )
    default_threads = int(os.environ.get("PALEY_THREADS", "1"))
    sub = ap.add_subparsers(dest="command", required=True)

    c = sub.add_parser("count", help="count transitive subtournaments of G_k(q)")
    c.add_argument("--k", type=int, required=True)
    c.add_argument("--q", type=int, required=True)
    c.add_argument("--m", type=int, choices=(3, 4), required=True)
    c.add_argument(
        "--method",
        choices=("brute", "thm1", "thm2", "thm3", "closed"),
        default="thm2",
    )
    c.add_argument("--residual", choices=("full", "orbit", "both"), default="both")
    c.add_argument("--out")
    c.set_defaults(fn=cmd_count)

    v = sub.add_parser("verify", help="run the identity/structure suites")
    v.add_argument("--k", type=int, required=True)
    v.add_argument("--q", type=int, required=True)
    v.add_argument("--suites", default="all", help=f"all or comma list of {SUITES}")
    v.add_argument("--trials", type=int, default=50)
    v.add_argument("--out")
    v.set_defaults(fn=cmd_verify)

    o = sub.add_parser("orbits", help="orbit table of the parameter-tuple action")
    o.add_argument("--k", type=int, required=True)
    o.add_argument("--format", choices=("json", "csv"), default="json")
    o.add_argument("--out")
    o.set_defaults(fn=cmd_orbits)

    s = sub.add_parser("search", help="find q with no transitive T_m")
    s.add_argument("--k", type=int, required=True)
    s.add_argument("--m", type=int, choices=(3, 4), required=True)
    s.add_argument("--qmax", type=int, default=10000)
    s.add_argument("--threads", type=int, default=default_threads)
    s.add_argument("--format", choices=("json", "csv"), default="json")
    s.add_argument("--out")
    s.set_defaults(fn=cmd_search)

    t = sub.add_parser("table", help="lower-bound table for t = 1..5")
    t.add_argument("--qmax", type=int, default=10000)
    t.add_argument("--threads", type=int, default=default_threads)
    t.add_argument("--format", choices=("json", "csv", "text"), default="json")
    t.add_argument("--out")
    t.set_defaults(fn=cmd_table)

    b = sub.add_parser("bound", help="iterate the multiplicative bound relation")
    b.add_argument("--t", type=int, required=True)
    b.add_argument("--m", type=int, choices=(3, 4), required=True)
    b.add_argument("--seed-t", type=int, required=True, dest="seed_t")
    b.add_argument("--seed-bound", type=int, required=True, dest="seed_bound")
    b.add_argument("--r1", type=int, default=None)
    b.add_argument("--out")
    b.set_defaults(fn=cmd_bound)
    return ap


def main(argv=None):
    args = _build_parser().parse_args(argv)
    try:
        return args.fn(args)
    except SystemExit:
        raise
    except (ValueError, ArithmeticError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
