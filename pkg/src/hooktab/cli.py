"""Command-line front end: ``hooktab {sample,map,unmap,verify,count,gf,render}``.

Exit codes: 0 success or verified, 1 verification failed, 2 invalid input.
"""
from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Sequence

from . import bijection, qcount, sampler
from .filling import Filling, FillingError, norm, violations
from .shape import Partition, ShapeError, parse_partition

SEED_ENV = "HOOKTAB_SEED"


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _shape(text: str) -> Partition:
    try:
        return parse_partition(text)
    except ShapeError as exc:
        raise argparse.ArgumentTypeError(str(exc))


def _box(text: str) -> tuple[int, int, int]:
    try:
        a, b, c = (int(t) for t in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"box must be a,b,c; got {text!r}")
    if min(a, b, c) < 0:
        raise argparse.ArgumentTypeError("box dimensions must be nonnegative")
    return a, b, c


def _nonneg(text: str) -> int:
    n = int(text)
    if n < 0:
        raise argparse.ArgumentTypeError("must be nonnegative")
    return n


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="hooktab", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="verb", required=True, parser_class=_Parser)

    def fmt(sp, default):
        sp.add_argument("--format", choices=("json", "text"), default=default)

    s = sub.add_parser("sample", help="exact uniform samples")
    s_sub = s.add_subparsers(dest="what", required=True, parser_class=_Parser)
    ss = s_sub.add_parser("ssyt")
    ss.add_argument("--shape", type=_shape, required=True)
    ss.add_argument("--bound", type=int, required=True)
    sp = s_sub.add_parser("pp")
    sp.add_argument("--box", type=_box, required=True)
    for x in (ss, sp):
        x.add_argument("--count", type=_nonneg, default=1)
        x.add_argument("--seed", type=int)
        x.add_argument("--report-moves", action="store_true")
        fmt(x, "json")

    m = sub.add_parser("map", help="content tabloid -> (tableau, hook tabloid)")
    m.add_argument("--input", required=True)
    m.add_argument("--bound", type=int, required=True)
    m.add_argument("--trace")
    fmt(m, "json")

    u = sub.add_parser("unmap", help="(tableau, hook tabloid) -> content tabloid")
    u.add_argument("--tableau", required=True)
    u.add_argument("--hook", required=True)
    u.add_argument("--bound", type=int, required=True)
    u.add_argument("--trace")
    fmt(u, "json")

    v = sub.add_parser("verify", help="brute-force checks")
    v_sub = v.add_subparsers(dest="what", required=True, parser_class=_Parser)
    vi = v_sub.add_parser("identity")
    vi.add_argument("--which", choices=("1.1", "1.2", "1.3"), required=True)
    vf = v_sub.add_parser("fibers")
    vr = v_sub.add_parser("roundtrip")
    grp = vr.add_mutually_exclusive_group()
    grp.add_argument("--exhaustive", action="store_true")
    grp.add_argument("--samples", type=_nonneg)
    vr.add_argument("--seed", type=int)
    for x in (vi, vf, vr):
        x.add_argument("--shape", type=_shape, required=True)
        x.add_argument("--bound", type=int, required=True)
        fmt(x, "text")

    c = sub.add_parser("count", help="count fillings by enumeration")
    c.add_argument("--class", dest="kind", choices=("ssyt", "content", "hook", "pp"), required=True)
    c.add_argument("--shape", type=_shape)
    c.add_argument("--bound", type=int)
    c.add_argument("--box", type=_box)

    g = sub.add_parser("gf", help="print the hook-content generating function")
    g.add_argument("--shape", type=_shape, required=True)
    g.add_argument("--bound", type=int, required=True)
    fmt(g, "text")

    r = sub.add_parser("render", help="ASCII drawing of a filling")
    r.add_argument("--input", required=True)
    r.add_argument("--style", choices=("grid", "pp3d"), default="grid")
    return p


def read_filling(path: str) -> Filling:
    """Load a filling from a JSON file (``{"shape", "rows"}``) or whitespace text."""
    with open(path) as fh:
        text = fh.read()
    try:
        obj = json.loads(text)
    except json.JSONDecodeError:
        return Filling.from_text(text)
    if isinstance(obj, list):
        return Filling.from_rows(obj)
    return Filling.from_json(obj)


def _dump(obj) -> str:
    return json.dumps(obj, separators=(",", ":"))


def _resolve_seed(flag: int | None) -> int:
    if flag is not None:
        return flag
    env = os.environ.get(SEED_ENV)
    if env is not None and env.strip():
        try:
            return int(env, 0)
        except ValueError:
            raise UsageError(f"{SEED_ENV} must be an integer, got {env!r}")
    seed = int.from_bytes(os.urandom(8), "little")
    print(f"hooktab: seed {seed}", file=sys.stderr)
    return seed


def render_grid(f: Filling) -> str:
    width = max((len(str(e)) for _, e in f.items()), default=1)
    return "".join(" ".join(str(e).rjust(width) for e in row) + "\n" for row in f.rows)


def render_pp3d(f: Filling) -> str:
    """Each row of the plane partition as a bar chart of its column heights."""
    if violations(f, "pp", bound=max((e for _, e in f.items()), default=0)):
        raise FillingError("pp3d rendering needs a plane partition")
    top = max((e for _, e in f.items()), default=0)
    lw = len(str(top))
    out = []
    for i, row in enumerate(f.rows, start=1):
        out.append(f"row {i}\n")
        for level in range(top, 0, -1):
            out.append(f"{str(level).rjust(lw)} | " + " ".join("#" if e >= level else "." for e in row) + "\n")
        out.append(" " * lw + " +-" + "--" * len(row) + "\n")
    return "".join(out)


def _cmd_sample(args, out) -> int:
    seed = _resolve_seed(args.seed)
    try:
        if args.what == "ssyt":
            reports = list(sampler.sample_many("ssyt", args.count, seed, shape=args.shape, bound=args.bound))
        else:
            reports = list(sampler.sample_many("pp", args.count, seed, box=args.box))
    except (sampler.BoundTooSmall, sampler.NegativeDimension) as exc:
        raise UsageError(str(exc))
    if args.format == "json":
        items = []
        for r in reports:
            d = r.to_json()
            if not args.report_moves:
                d.pop("moves")
            items.append(d)
        out.write(_dump(items) + "\n")
    else:
        for k, r in enumerate(reports):
            if k:
                out.write("\n")
            if args.report_moves:
                out.write(f"# moves {r.moves}\n")
            out.write(r.value.filling.to_text())
    if args.report_moves and reports:
        moves = [r.moves for r in reports]
        print(f"hooktab: moves max {max(moves)} mean {sum(moves) / len(moves):.3f}", file=sys.stderr)
    return 0


def _write_trace(path: str | None, trace) -> None:
    if path:
        with open(path, "w") as fh:
            fh.write(json.dumps([ev.to_json() for ev in trace], indent=1) + "\n")


def _cmd_map(args, out) -> int:
    C = read_filling(args.input)
    try:
        res = bijection.hc_forward(C, args.bound, trace=bool(args.trace))
    except bijection.InvalidInput as exc:
        raise UsageError(str(exc))
    _write_trace(args.trace, res.trace)
    T, H = res.tableau.filling, res.hook.filling
    if args.format == "json":
        out.write(_dump({
            "bound": args.bound,
            "tableau": T.to_json(),
            "hook": H.to_json(),
            "norms": {"content": norm(C), "tableau": norm(T), "hook": norm(H)},
        }) + "\n")
    else:
        out.write(T.to_text() + "\n" + H.to_text())
    return 0


def _cmd_unmap(args, out) -> int:
    T = read_filling(args.tableau)
    H = read_filling(args.hook)
    try:
        res = bijection.hc_inverse(T, H, args.bound, trace=bool(args.trace))
    except bijection.InvalidInput as exc:
        raise UsageError(str(exc))
    _write_trace(args.trace, res.trace)
    C = res.tabloid.filling
    if args.format == "json":
        out.write(_dump({"bound": args.bound, "content": C.to_json(), "norm": norm(C)}) + "\n")
    else:
        out.write(C.to_text())
    return 0


def _roundtrip(lam: Partition, b: int, exhaustive: bool, samples: int | None, seed: int) -> tuple[int, list[str]]:
    failures = []
    if exhaustive or samples is None:
        inputs = qcount.enumerate_fillings("content", lam, b)
    else:
        inputs = (sampler.random_content_tabloid(lam, b, sampler.Rng(sampler.split_seed(seed, k))).filling
                  for k in range(samples))
    n = 0
    for C in inputs:
        n += 1
        try:
            fwd = bijection.hc_forward(C, b, trace=True, check=True)
            inv = bijection.hc_inverse(fwd.tableau, fwd.hook, trace=True, check=True)
            if inv.tabloid.filling != C:
                failures.append(f"round trip changed {C.to_lists()}")
            elif set(bijection.forward_endpoints(fwd.trace).items()) != set(bijection.inverse_choices(inv.trace).items()):
                failures.append(f"candidate choice differs from forward endpoint for {C.to_lists()}")
        except AssertionError as exc:
            failures.append(f"{C.to_lists()}: {exc}")
    return n, failures


def _cmd_verify(args, out) -> int:
    lam, b = args.shape, args.bound
    try:
        if args.what == "identity":
            res = qcount.verify_identity(args.which, lam, b)
            if args.format == "json":
                out.write(_dump(res.to_json()) + "\n")
            else:
                out.write(("PASS" if res.passed else "FAIL") + "\n")
                out.write(f"lhs: {res.lhs}\nrhs: {res.rhs}\n")
            return 0 if res.passed else 1
        if args.what == "fibers":
            res = qcount.verify_fibers(lam, b)
            if args.format == "json":
                out.write(_dump(res.to_json()) + "\n")
            else:
                sizes = sorted(set(res.histogram.values()))
                out.write(("PASS" if res.passed else "FAIL") + "\n")
                out.write(f"tableaux: {len(res.histogram)} fiber sizes: {sizes} expected: {res.expected_size}\n")
            return 0 if res.passed else 1
        seed = _resolve_seed(args.seed) if args.samples is not None else 0
        n, failures = _roundtrip(lam, b, args.exhaustive, args.samples, seed)
    except (qcount.BoundTooSmall, qcount.CapExceeded, sampler.BoundTooSmall) as exc:
        raise UsageError(str(exc))
    ok = not failures
    if args.format == "json":
        out.write(_dump({"shape": list(lam.parts), "bound": b, "checked": n,
                         "failures": failures, "passed": ok}) + "\n")
    else:
        out.write(("PASS" if ok else "FAIL") + f"\nchecked: {n}\n")
        for line in failures[:20]:
            out.write(line + "\n")
    return 0 if ok else 1


def _cmd_count(args, out) -> int:
    try:
        if args.kind == "pp":
            if args.box is None:
                raise UsageError("count --class pp needs --box a,b,c")
            it = qcount.enumerate_fillings("pp", box=args.box)
        else:
            if args.shape is None or (args.kind != "hook" and args.bound is None):
                raise UsageError(f"count --class {args.kind} needs --shape and --bound")
            it = qcount.enumerate_fillings(args.kind, args.shape, args.bound)
        n = sum(1 for _ in it)
    except (qcount.BoundTooSmall, qcount.CapExceeded) as exc:
        raise UsageError(str(exc))
    out.write(f"{n}\n")
    return 0


def _cmd_gf(args, out) -> int:
    try:
        poly = qcount.hook_content_gf(args.shape, args.bound)
    except qcount.BoundTooSmall as exc:
        raise UsageError(str(exc))
    out.write((_dump(poly.to_json()) if args.format == "json" else str(poly)) + "\n")
    return 0


def _cmd_render(args, out) -> int:
    f = read_filling(args.input)
    out.write(render_grid(f) if args.style == "grid" else render_pp3d(f))
    return 0


COMMANDS = {
    "sample": _cmd_sample,
    "map": _cmd_map,
    "unmap": _cmd_unmap,
    "verify": _cmd_verify,
    "count": _cmd_count,
    "gf": _cmd_gf,
    "render": _cmd_render,
}


def run(argv: Sequence[str] | None = None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    try:
        args = build_parser().parse_args(argv)
        return COMMANDS[args.verb](args, out)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 0
    except UsageError as exc:
        print(f"hooktab: error: {exc}", file=err)
        return 2
    except (OSError, ValueError, KeyError) as exc:
        print(f"hooktab: error: {exc}", file=err)
        return 2


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
