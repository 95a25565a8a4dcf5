"""Command line interface: csideals <command> [options]."""
from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ProcessPoolExecutor

from . import gompf
from .classes import (
    UndecidedError,
    is_invertible,
    kummer_invertible,
    monoid_table,
    prime_power_invertible,
    scan_classes,
)
from .known import REPRESENTATIVES, TRACE27_LABELS, TRACE27_TABLE
from .matrices import CSTriple, InvalidTripleError, star_dual, triple_to_ideal, triple_to_matrix
from .units import DEFAULT_EFFORT

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_UNDECIDED = 0, 1, 2, 3


def _progress(args):
    if args.quiet:
        return None

    def emit(msg: str) -> None:
        print(msg, file=sys.stderr, flush=True)

    return emit


def _emit(args, rows, header=None, payload=None) -> None:
    if args.format == "json":
        print(json.dumps(payload if payload is not None else rows, indent=2))
        return
    if header:
        print(f"# {header}")
    for r in rows:
        print("\t".join(str(x) for x in r))


def _trace_range(args) -> list[int]:
    if args.n is not None:
        return [args.n]
    if args.n_min is None or args.n_max is None:
        raise SystemExit("give --n or both --n-min and --n-max")
    return list(range(args.n_min, args.n_max + 1))


def _scan_one(job):
    n, d_max, effort = job
    try:
        scan = scan_classes(n, d_max, effort)
        return n, [r.as_tuple() for r in scan.reps], None
    except UndecidedError as exc:
        return n, None, str(exc)


def _map(args, fn, jobs):
    if args.jobs > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(args.jobs) as pool:
            return list(pool.map(fn, jobs))
    return [fn(j) for j in jobs]


# ---------------------------------------------------------------------------


def cmd_classes(args) -> int:
    emit = _progress(args)
    results = _map(args, _scan_one, [(n, args.d_max, args.effort) for n in _trace_range(args)])
    status = EXIT_OK
    payload = []
    for n, reps, err in results:
        if err:
            print(f"trace {n}: {err}", file=sys.stderr)
            status = EXIT_UNDECIDED
            continue
        if emit:
            emit(f"trace {n}: {len(reps)} classes")
        payload.append({"n": n, "count": len(reps), "reps": [list(r) for r in reps]})
    if args.format == "json":
        print(json.dumps(payload if len(payload) != 1 else payload[0], indent=2))
    else:
        for entry in payload:
            n, k = entry["n"], entry["count"]
            print(f"# There are {k} similarity classes of trace {n} Cappell-Shaneson matrices")
            for c, d, m in entry["reps"]:
                print(f"{c}\t{d}\t{m}")
    return status


def _config(args) -> gompf.SearchConfig:
    return gompf.SearchConfig(
        d_max=args.d_max,
        n_window=(args.window_min, args.window_max),
        max_depth=args.max_depth,
        effort=args.effort,
        max_expansions=args.max_expansions,
    )


def _chain_rows(ch: gompf.Chain):
    rows = []
    for m, t in zip(ch.moves, ch.triples()[1:]):
        if m.kind == "G":
            rows.append(("G", m.k, t.c, t.d, t.n))
        else:
            rows.append(("S", "", t.c, t.d, t.n, ",".join(map(str, m.alpha)), ",".join(map(str, m.beta))))
    return rows


def cmd_chain(args) -> int:
    t = CSTriple(args.c, args.d, args.n)
    res = gompf.find_chain(t, _config(args), progress=_progress(args))
    if isinstance(res, gompf.NotFound):
        print(f"no chain found from {t}: {res.reason} ({res.expansions} expansions)", file=sys.stderr)
        return EXIT_FAIL
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(gompf.dump_certificate(res) + "\n")
    if args.format == "json":
        print(gompf.dump_certificate(res))
    else:
        print(f"# {res.describe()}")
        for row in _chain_rows(res):
            print("\t".join(str(x) for x in row))
    return EXIT_OK


def cmd_verify_chain(args) -> int:
    with open(args.file) as fh:
        text = fh.read()
    try:
        ch, declared_end = gompf.load_certificate(text)
    except (gompf.CertificateError, json.JSONDecodeError) as exc:
        print(f"malformed certificate: {exc}", file=sys.stderr)
        return EXIT_FAIL
    check = gompf.verify_chain(ch, require_goal=not args.partial, expected_end=declared_end)
    if check:
        print(f"ok\t{len(ch.moves)} moves\t{ch.start} -> {ch.end}")
        return EXIT_OK
    print(f"failed at move {check.failed_at}: {check.reason}")
    return EXIT_FAIL


def cmd_table27(args) -> int:
    reps = [CSTriple(*TRACE27_LABELS[i], 27) for i in range(7)]
    table = monoid_table(27, reps, args.effort)
    labels = [f"I_{i}" for i in range(7)]
    rows = [[labels[i]] + [labels[k] for k in table.products[i]] for i in range(7)]
    matches = [list(r) for r in table.products] == TRACE27_TABLE
    payload = {
        "reps": {labels[i]: list(reps[i].as_tuple()) for i in range(7)},
        "table": [[labels[k] for k in r] for r in table.products],
        "matches_reference": matches,
    }
    _emit(args, [[""] + labels] + rows, None, payload)
    if not matches:
        print("computed table differs from the reference", file=sys.stderr)
    return EXIT_OK if matches else EXIT_FAIL


def cmd_symmetry(args) -> int:
    n = args.n
    try:
        here = scan_classes(n, args.d_max, args.effort)
        there = scan_classes(5 - n, args.d_max, args.effort)
    except UndecidedError as exc:
        print(str(exc), file=sys.stderr)
        return EXIT_UNDECIDED
    rows = []
    images = []
    for rep in here.reps:
        img = star_dual(rep).normalized()
        k = there.class_of(img)
        images.append(k)
        rows.append((*rep.as_tuple(), *img.as_tuple(), *there.reps[k].as_tuple()))
    ok = sorted(images) == list(range(len(there.reps)))
    payload = {
        "n": n,
        "pairs": [{"rep": list(r[:3]), "dual": list(r[3:6]), "dual_class_rep": list(r[6:])} for r in rows],
        "bijective": ok,
    }
    header = f"trace {n}: {len(here.reps)} classes, trace {5 - n}: {len(there.reps)} classes"
    _emit(args, rows, header, payload)
    return EXIT_OK if ok else EXIT_FAIL


def cmd_invertible(args) -> int:
    try:
        t = CSTriple(args.c, args.d, args.n)
    except InvalidTripleError as exc:
        print(str(exc), file=sys.stderr)
        return EXIT_USAGE
    inv = is_invertible(triple_to_ideal(t))
    from sympy import factorint
    details = []
    for p, k in sorted(factorint(abs(t.d)).items()):
        simple = kummer_invertible(t.n, t.c, p)
        pp = prime_power_invertible(t.n, t.c, p, k, args.effort)
        details.append({"p": p, "k": k, "prime_invertible": simple, "power_invertible": pp.invertible,
                        "reduction": list(pp.reduction.as_tuple()) if pp.reduction else None})
    verdict = "invertible" if inv else "non-invertible"
    if args.format == "json":
        print(json.dumps({"triple": list(t.as_tuple()), "verdict": verdict, "primes": details}, indent=2))
    else:
        print(verdict)
        for e in details:
            print(f"# p={e['p']} k={e['k']} prime ideal invertible={e['prime_invertible']} "
                  f"power invertible={e['power_invertible']}", file=sys.stderr)
    return EXIT_OK


def _tables_one(job):
    n, d_max, effort, chains = job
    try:
        scan = scan_classes(n, d_max, effort)
    except UndecidedError as exc:
        return n, None, False, str(exc), 0
    reps = [(r.c, r.d) for r in scan.reps]
    match = reps == REPRESENTATIVES.get(n)
    failures = ""
    depth = 0
    if chains:
        report = gompf.conjecture_check(n, gompf.SearchConfig(d_max=d_max, effort=effort))
        failures = "; ".join(f"{k}: {v}" for k, v in report.failures.items())
        depth = max((c.depth for c in report.chains.values()), default=0)
    return n, len(reps), match, failures, depth


def cmd_verify_tables(args) -> int:
    lo, hi = args.n_min, args.n_max
    if lo < min(REPRESENTATIVES) or hi > max(REPRESENTATIVES):
        print(f"reference tables cover traces {min(REPRESENTATIVES)}..{max(REPRESENTATIVES)}", file=sys.stderr)
        return EXIT_USAGE
    emit = _progress(args)
    jobs = [(n, args.d_max, args.effort, args.chains) for n in range(lo, hi + 1)]
    results = _map(args, _tables_one, jobs)
    status = EXIT_OK
    rows = []
    for n, count, match, failures, depth in results:
        if count is None:
            status = max(status, EXIT_UNDECIDED)
            rows.append((n, "", "undecided", failures))
            continue
        good = match and not failures
        if not good:
            status = max(status, EXIT_FAIL)
        rows.append((n, count, "ok" if good else "MISMATCH" if not match else "chain-failure",
                     failures if failures else (f"depth {depth}" if args.chains else "")))
        if emit:
            emit(f"trace {n}: {'ok' if good else 'FAILED'}")
    payload = [{"n": r[0], "count": r[1], "status": r[2], "note": r[3]} for r in rows]
    _emit(args, rows, "n\tclasses\tstatus\tnote", payload)
    return status


def cmd_earle(args) -> int:
    from .known import EARLE_A19, EARLE_A37
    cfg = gompf.SearchConfig(d_max=args.d_max, effort=args.effort)
    report = gompf.earle_check(args.c_max, args.d_limit, cfg, progress=_progress(args))
    lists_ok = True
    if args.c_max == 94:
        lists_ok = ([t.as_tuple() for t in report.a19] == EARLE_A19
                    and [t.as_tuple() for t in report.a37] == EARLE_A37)
    rows = [(*t.as_tuple(), gompf.earle_entry(t), "ok" if t in report.chains else "FAILED")
            for t in sorted(set(report.chains) | set(report.failures), key=lambda t: (t.n, t.d, t.c))]
    payload = {
        "a19": [list(t.as_tuple()) for t in report.a19],
        "a37": [list(t.as_tuple()) for t in report.a37],
        "chained": len(report.chains),
        "failures": {str(k): v for k, v in report.failures.items()},
        "reference_lists_match": lists_ok,
    }
    _emit(args, rows, f"{len(report.chains)} chained, {len(report.failures)} failed", payload)
    return EXIT_OK if report.ok and lists_ok else EXIT_FAIL


def cmd_matrix(args) -> int:
    t = CSTriple(args.c, args.d, args.n)
    m = triple_to_matrix(t)
    _emit(args, m, None, {"triple": list(t.as_tuple()), "matrix": m})
    return EXIT_OK


# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="csideals", description="Ideal classes of Z[theta_n] and Gompf chains.")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--d-max", type=int, default=400)
    common.add_argument("--effort", type=int, default=DEFAULT_EFFORT, help="enumeration node budget per search")
    common.add_argument("--format", choices=["tsv", "json"], default="tsv")
    common.add_argument("--jobs", type=int, default=1)
    common.add_argument("--quiet", action="store_true", help="no progress on stderr")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("classes", parents=[common], help="minimal class representatives for trace n")
    s.add_argument("--n", type=int)
    s.add_argument("--n-min", type=int)
    s.add_argument("--n-max", type=int)
    s.set_defaults(func=cmd_classes)

    s = sub.add_parser("chain", parents=[common], help="search a chain from (c,d,n) to (1,1,2)")
    for name in ("--c", "--d", "--n"):
        s.add_argument(name, type=int, required=True)
    s.add_argument("--max-depth", type=int, default=8)
    s.add_argument("--max-expansions", type=int, default=400)
    s.add_argument("--window-min", type=int, default=-250)
    s.add_argument("--window-max", type=int, default=250)
    s.add_argument("--out", help="also write the certificate to this file")
    s.set_defaults(func=cmd_chain)

    s = sub.add_parser("verify-chain", parents=[common], help="check a chain certificate")
    s.add_argument("file")
    s.add_argument("--partial", action="store_true", help="do not require the chain to end at (1,1,2)")
    s.set_defaults(func=cmd_verify_chain)

    s = sub.add_parser("table27", parents=[common], help="multiplication table of the trace-27 class monoid")
    s.set_defaults(func=cmd_table27)

    s = sub.add_parser("symmetry", parents=[common], help="star dual pairing between traces n and 5-n")
    s.add_argument("--n", type=int, required=True)
    s.set_defaults(func=cmd_symmetry)

    s = sub.add_parser("invertible", parents=[common], help="is <theta_n - c, d> invertible")
    for name in ("--c", "--d", "--n"):
        s.add_argument(name, type=int, required=True)
    s.set_defaults(func=cmd_invertible)

    s = sub.add_parser("verify-tables", parents=[common], help="compare computed representatives with the reference tables")
    s.add_argument("--n-min", type=int, default=3)
    s.add_argument("--n-max", type=int, default=36)
    s.add_argument("--chains", action="store_true", help="also find and verify a chain for every representative")
    s.set_defaults(func=cmd_verify_tables)

    s = sub.add_parser("earle", parents=[common], help="chain every (c, d, c+2) in range")
    s.add_argument("--c-max", type=int, default=94)
    s.add_argument("--d-limit", type=int, default=134)
    s.set_defaults(func=cmd_earle, d_max=450)

    s = sub.add_parser("matrix", parents=[common], help="the standard matrix X_{c,d,n}")
    for name in ("--c", "--d", "--n"):
        s.add_argument(name, type=int, required=True)
    s.set_defaults(func=cmd_matrix)
    return p


def _validate(args) -> str | None:
    for name in ("d_max", "effort", "jobs"):
        if getattr(args, name, 1) < 1:
            return f"--{name.replace('_', '-')} must be positive"
    if getattr(args, "d", None) == 0:
        return "--d must be nonzero"
    return None


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    err = _validate(args)
    if err:
        parser.error(err)
    try:
        return args.func(args)
    except InvalidTripleError as exc:
        print(str(exc), file=sys.stderr)
        return EXIT_USAGE
    except UndecidedError as exc:
        print(str(exc), file=sys.stderr)
        return EXIT_UNDECIDED


if __name__ == "__main__":
    sys.exit(main())
