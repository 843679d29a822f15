"""Command-line driver: measure files, generate families, verify bounds,
dump CDAWG stats, and cross-check the engine against the brute-force oracle.

Exit codes are a stable contract: 0 success, 1 bound/equivalence violation,
2 usage or input error, 3 capacity error.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from fractions import Fraction
from pathlib import Path

from . import bounds as bounds_mod
from . import cdawg as cdawg_mod
from . import families, oracle
from .errors import (
    MaxrepError,
    MissingTerminator,
    ParameterOutOfRange,
    SizeCapExceeded,
    StatsMismatch,
)
from .index import build_index, list_maximal_repeats, measures
from .text import MeasureReport, Text

EXIT_OK = 0
EXIT_VIOLATION = 1
EXIT_USAGE = 2
EXIT_CAPACITY = 3

CLI_FAMILIES = {
    "eq1": "eq1_tk",
    "thm2": "thm2",
    "unary": "unary",
    "all-distinct": "all_distinct",
    "fibonacci": "fibonacci",
    "thue-morse": "thue_morse",
    "random": "random",
}


def _dumps(obj) -> str:
    return json.dumps(obj, indent=2) + "\n"


def escape_bytes(b: bytes) -> str:
    """Printable ASCII stays as-is; everything else becomes \\xNN."""
    out = []
    for c in b:
        if 32 <= c <= 126 and c != 92:
            out.append(chr(c))
        else:
            out.append(f"\\x{c:02x}")
    return "".join(out)


def _read_input(args) -> Text:
    if getattr(args, "text", None) is not None:
        try:
            data = args.text.encode("ascii")
        except UnicodeEncodeError:
            raise SystemExit2("--text only accepts ASCII; use a file for raw bytes")
        if not data:
            raise SystemExit2("--text must be nonempty")
        return Text(data)
    path = args.path
    if path is None:
        raise SystemExit2("an input file (or --text) is required")
    try:
        data = Path(path).read_bytes()
    except OSError as exc:
        raise SystemExit2(f"cannot read {path}: {exc}")
    if not data:
        raise SystemExit2(f"empty input: {path}")
    return Text(data)


class SystemExit2(Exception):
    """Usage/input error carrying its message; mapped to exit code 2."""


def _report_lines(rep: MeasureReport, fmt: str) -> str:
    if fmt == "json":
        return _dumps(rep.to_dict())
    return (
        f"n       {rep.n}\n"
        f"sigma   {rep.sigma}\n"
        f"mr      {rep.mr}\n"
        f"er      {rep.er}\n"
        f"el      {rep.el}\n"
        f"ratio   {rep.ratio} ({float(rep.ratio):.6g})\n"
    )


def cmd_measure(args) -> int:
    t = _read_input(args)
    idx = build_index(t)
    rep = measures(t, idx)
    sys.stdout.write(_report_lines(rep, args.format))
    if args.list_repeats:
        records = list_maximal_repeats(t, idx)
        if args.format == "json":
            payload = []
            for r in records:
                occ = list(r.occurrences[:8])
                payload.append(
                    {
                        "repeat": escape_bytes(r.string(t)),
                        "length": r.length,
                        "occurrence_count": len(r.occurrences),
                        "occurrences_head": occ,
                        "left_ext": sorted(r.left_ext),
                        "right_ext": sorted(r.right_ext),
                        "is_prefix": r.is_prefix,
                        "is_suffix": r.is_suffix,
                    }
                )
            sys.stdout.write(_dumps(payload))
        else:
            for r in records:
                occ = ",".join(str(i) for i in r.occurrences[:8])
                more = "..." if len(r.occurrences) > 8 else ""
                lext = escape_bytes(bytes(sorted(r.left_ext)))
                rext = escape_bytes(bytes(sorted(r.right_ext)))
                sys.stdout.write(
                    f"repeat {escape_bytes(r.string(t))!r} occ[{len(r.occurrences)}]="
                    f"{occ}{more} left={{{lext}}} right={{{rext}}}\n"
                )
    return EXIT_OK


def cmd_gen(args) -> int:
    family = CLI_FAMILIES[args.family]
    spec = families.FamilySpec(
        family=family, k=args.k, sigma=args.sigma, n=args.n, seed=args.seed
    )
    t, pred = families.generate(spec)
    measured = pred if pred is not None else measures(t)
    out = Path(args.out)
    out.write_bytes(t.data)
    sidecar = families.sidecar(spec, t, measured)
    Path(str(out) + ".json").write_text(_dumps(sidecar))
    sys.stdout.write(f"wrote {t.n} bytes to {out} (+ sidecar)\n")
    return EXIT_OK


def cmd_verify(args) -> int:
    t = _read_input(args)
    rep = measures(t)
    if args.inject_bogus_report:
        # negative-path self-test: doctor el past its ceiling
        rep = MeasureReport(
            n=rep.n,
            sigma=rep.sigma,
            mr=rep.mr,
            er=rep.er,
            el=2 * rep.n + 1,
            ratio=Fraction(2 * rep.n + 1, rep.er),
        )
    verdict = bounds_mod.check_bounds(rep)
    for check in verdict.checks:
        state = "ok" if check.holds else "VIOLATED"
        sys.stdout.write(
            f"{check.name}: {state} (lhs={check.lhs} rhs={check.rhs})\n"
        )
    if not verdict.all_hold:
        sys.stdout.write(f"violated: {', '.join(verdict.violated())}\n")
        return EXIT_VIOLATION
    return EXIT_OK


def _auto_terminator(data: bytes) -> int:
    present = set(data)
    for b in range(256):
        if b not in present:
            return b
    raise SystemExit2("no free byte value to use as terminator")


def cmd_cdawg_stats(args) -> int:
    t = _read_input(args)
    data = t.data
    appended = None
    if data.count(data[-1:]) != 1:
        if args.terminator is not None:
            if not 0 <= args.terminator <= 255:
                raise SystemExit2("--terminator must be a byte value 0..255")
            if args.terminator in set(data):
                raise SystemExit2(
                    f"terminator byte {args.terminator} already occurs in the input"
                )
            appended = args.terminator
        else:
            appended = _auto_terminator(data)
        data = data + bytes([appended])
    t = Text(data)
    c = cdawg_mod.build_cdawg(t)
    stats = cdawg_mod.stats(c, t)
    payload = {
        "n": t.n,
        "terminator_appended": appended,
        "node_count": stats.node_count,
        "edge_count": stats.edge_count,
        "total_label_length": stats.total_label_length,
        "er": stats.er,
        "mr": stats.mr,
    }
    sys.stdout.write(_dumps(payload))
    if args.dump:
        Path(args.dump).write_text(_dumps(cdawg_mod.to_dict(c)))
    return EXIT_OK


def _int_list(raw: str) -> list[int]:
    try:
        return [int(x) for x in raw.split(",") if x]
    except ValueError:
        raise SystemExit2(f"expected a comma-separated integer list, got {raw!r}")


def _sweep_specs(args) -> list[families.FamilySpec]:
    family = CLI_FAMILIES[args.family]
    specs = []
    if family == "eq1_tk":
        if not args.k:
            raise SystemExit2("eq1 sweep needs --k")
        for k in _int_list(args.k):
            specs.append(families.FamilySpec(family=family, k=k))
    elif family == "thm2":
        if not args.sigma:
            raise SystemExit2("thm2 sweep needs --sigma")
        sigmas = _int_list(args.sigma)
        if args.k:
            ks = _int_list(args.k)
            for sigma in sigmas:
                for k in ks:
                    specs.append(families.FamilySpec(family=family, k=k, sigma=sigma))
        elif args.n:
            for sigma in sigmas:
                k = families.thm2_k_for(args.n, sigma)
                specs.append(
                    families.FamilySpec(family=family, k=k, sigma=sigma, n=args.n)
                )
        else:
            raise SystemExit2("thm2 sweep needs --k or --n")
    elif family == "random":
        if not (args.n and args.sigma):
            raise SystemExit2("random sweep needs --n and --sigma")
        seeds = range(args.seeds)
        for sigma in _int_list(args.sigma):
            for seed in seeds:
                specs.append(
                    families.FamilySpec(family=family, n=args.n, sigma=sigma, seed=seed)
                )
    else:
        if not args.n:
            raise SystemExit2(f"{args.family} sweep needs --n")
        specs.append(families.FamilySpec(family=family, n=args.n))
    return specs


def cmd_sweep(args) -> int:
    specs = _sweep_specs(args)
    rows, failures = bounds_mod.sweep(specs)
    if args.out_csv:
        bounds_mod.write_sweep_csv(rows, args.out_csv)
    if args.out_json:
        bounds_mod.write_sweep_json(rows, args.out_json)
    if not args.out_csv and not args.out_json:
        import io

        buf = io.StringIO()
        import csv as _csv

        writer = _csv.DictWriter(buf, fieldnames=bounds_mod.SWEEP_COLUMNS)
        writer.writeheader()
        for row in rows:
            d = bounds_mod._row_dict(row)
            writer.writerow({k: ("" if v is None else v) for k, v in d.items()})
        sys.stdout.write(buf.getvalue())
    sys.stdout.write(f"swept {len(rows)} rows\n")
    if failures:
        for spec, exc in failures:
            sys.stderr.write(f"row failed: {spec}: {exc}\n")
        return EXIT_USAGE
    return EXIT_OK


def _check_one_against_oracle(t: Text, cap: int) -> str | None:
    """Returns a mismatch description, or None when engine and oracle agree."""
    want = oracle.enumerate_maximal_repeats(t, cap)
    idx = build_index(t)
    got = measures(t, idx)
    if got != want.report:
        return f"report mismatch: engine={got} oracle={want.report}"
    got_rev = sorted(r.string(t) for r in list_maximal_repeats(t, idx))
    want_rev = sorted(r.string(t) for r in want.repeats)
    if got_rev != want_rev:
        return f"repeat set mismatch: engine={got_rev[:5]}... oracle={want_rev[:5]}..."
    return None


def cmd_oracle_check(args) -> int:
    import numpy as np

    texts: list[Text] = []
    if args.path is not None or args.text is not None:
        texts.append(_read_input(args))
    if args.family:
        for spec in _sweep_specs(args):
            t, _ = families.generate(spec)
            texts.append(t)
    rng = np.random.Generator(np.random.PCG64(args.seed))
    sigmas = _int_list(args.sigma) if args.sigma else [2, 3, 4]
    for _ in range(args.random):
        n = int(rng.integers(1, args.max_n + 1))
        sigma = int(rng.integers(0, len(sigmas)))
        texts.append(
            Text(rng.integers(0, sigmas[sigma], n, dtype=np.uint16).astype(np.uint8).tobytes())
        )
    checked = 0
    deadline = time.monotonic() + args.fuzz_minutes * 60 if args.fuzz_minutes else None

    def run(t: Text) -> int | None:
        nonlocal checked
        mismatch = _check_one_against_oracle(t, args.cap)
        checked += 1
        if mismatch:
            sys.stdout.write(f"FAIL after {checked} instances: {mismatch}\n")
            sys.stdout.write(f"reproducer (hex): {t.data.hex()}\n")
            return EXIT_VIOLATION
        return None

    for t in texts:
        rc = run(t)
        if rc is not None:
            return rc
    while deadline is not None and time.monotonic() < deadline:
        n = int(rng.integers(1, args.max_n + 1))
        sigma = sigmas[int(rng.integers(0, len(sigmas)))]
        t = Text(rng.integers(0, sigma, n, dtype=np.uint16).astype(np.uint8).tobytes())
        rc = run(t)
        if rc is not None:
            return rc
    if checked == 0:
        raise SystemExit2("nothing to check: give a file, --text, --family or --random")
    sys.stdout.write(f"PASS: {checked} instances, engine matches oracle\n")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="maxrep",
        description="Maximal-repeat extension measures, CDAWG sizes, and extremal families",
    )
    sub = p.add_subparsers(dest="command", required=True)

    def add_input(sp):
        sp.add_argument("path", nargs="?", help="input file (raw bytes)")
        sp.add_argument("--text", help="inline ASCII input instead of a file")

    sp = sub.add_parser("measure", help="measure a file: n, sigma, mr, er, el, ratio")
    add_input(sp)
    sp.add_argument("--format", choices=["json", "human"], default="json")
    sp.add_argument("--list-repeats", action="store_true")
    sp.set_defaults(func=cmd_measure)

    sp = sub.add_parser("gen", help="generate a family string to a file")
    sp.add_argument("family", choices=sorted(CLI_FAMILIES))
    sp.add_argument("--k", type=int)
    sp.add_argument("--sigma", type=int)
    sp.add_argument("--n", type=int)
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--out", required=True)
    sp.set_defaults(func=cmd_gen)

    sp = sub.add_parser("verify", help="check the theorem inequalities on a file")
    add_input(sp)
    sp.add_argument("--inject-bogus-report", action="store_true", help=argparse.SUPPRESS)
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("cdawg-stats", help="build the CDAWG and report exact sizes")
    add_input(sp)
    sp.add_argument("--terminator", type=int, help="byte value to append if needed")
    sp.add_argument("--dump", help="also write the full CDAWG as JSON")
    sp.set_defaults(func=cmd_cdawg_stats)

    sp = sub.add_parser("sweep", help="measure a parameter grid; emit CSV/JSON")
    sp.add_argument("--family", choices=sorted(CLI_FAMILIES), required=True)
    sp.add_argument("--k", help="comma-separated k values")
    sp.add_argument("--sigma", help="comma-separated sigma values")
    sp.add_argument("--n", type=int)
    sp.add_argument("--seeds", type=int, default=1)
    sp.add_argument("--out-csv")
    sp.add_argument("--out-json")
    sp.set_defaults(func=cmd_sweep)

    sp = sub.add_parser("oracle-check", help="engine vs brute-force oracle")
    add_input(sp)
    sp.add_argument("--family", choices=sorted(CLI_FAMILIES))
    sp.add_argument("--k", help="comma-separated k values (family grid)")
    sp.add_argument("--sigma", help="comma-separated sigma values")
    sp.add_argument("--n", type=int)
    sp.add_argument("--seeds", type=int, default=1)
    sp.add_argument("--random", type=int, default=0, help="number of random instances")
    sp.add_argument("--max-n", type=int, default=200)
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--fuzz-minutes", type=float, default=0.0)
    sp.add_argument("--cap", type=int, default=oracle.ORACLE_CAP)
    sp.set_defaults(func=cmd_oracle_check)

    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except SystemExit2 as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_USAGE
    except SizeCapExceeded as exc:
        sys.stderr.write(
            f"error: {exc}; raise --cap or use `measure` (the engine has no cap)\n"
        )
        return EXIT_CAPACITY
    except (ParameterOutOfRange, MissingTerminator) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_USAGE
    except (StatsMismatch, MaxrepError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_VIOLATION


if __name__ == "__main__":
    sys.exit(main())
