"""Command-line front end.

Exit codes: 0 success or connected, 1 disconnected (or a failed verification),
2 usage / parse / size-mismatch errors, 3 resource limits.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import theorems
from .certificates import find_disconnect_certificate
from .engine import EngineConfig, FsInstance, fs_components, fs_is_connected, fs_neighbors
from .errors import ParameterError, ResourceError
from .explore import sweep, write_csv
from .specs import SpecError, graph_from_spec

EXIT_OK, EXIT_DISCONNECTED, EXIT_USAGE, EXIT_RESOURCE = 0, 1, 2, 3


def parse_bytes(text: str) -> int:
    text = str(text).strip().upper().rstrip("B")
    scale = {"K": 2**10, "M": 2**20, "G": 2**30, "T": 2**40}
    if text and text[-1] in scale:
        return int(float(text[:-1]) * scale[text[-1]])
    return int(text)


def _env(name, default):
    return os.environ.get(name, default)


def _add_common(p, max_n_default):
    p.add_argument("--max-n", type=int, default=int(_env("FS_MAX_N", max_n_default)))
    p.add_argument("--memory-limit", type=parse_bytes, default=_env("FS_MEMORY_LIMIT", "2G"))
    p.add_argument("--threads", type=int, default=int(_env("FS_THREADS", 1)))
    p.add_argument("--seed", type=int, default=int(_env("FS_SEED", 0)))
    p.add_argument("--format", choices=["json", "csv", "plain"], default="json")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="fs", description="Friends-and-strangers graph connectivity tools."
    )
    sub = parser.add_subparsers(dest="command", required=True)

    for name, helptext in [
        ("components", "count the components of FS(X, Y)"),
        ("connected", "decide connectivity; exit 0 if connected, 1 if not"),
        ("cert", "search for a cut-path disconnectedness certificate"),
    ]:
        p = sub.add_parser(name, help=helptext)
        p.add_argument("x")
        p.add_argument("y")
        _add_common(p, 11)

    p = sub.add_parser("neighbors", help="list the FS neighbours of one state")
    p.add_argument("x")
    p.add_argument("y")
    p.add_argument("perm", help="one-line permutation as a JSON array, e.g. [2,1,3]")
    _add_common(p, 11)

    p = sub.add_parser("verify", help="re-check a classification statement")
    p.add_argument("theorem", help="one of: " + ", ".join(list(theorems.THEOREMS) + ["all"]))
    p.add_argument("--stretch", action="store_true", help="also run the n=10 and n=11 instances")
    p.add_argument("--no-timing", action="store_true", help="omit elapsed_ms for byte-stable output")
    _add_common(p, 9)

    p = sub.add_parser("explore", help="sweep family patterns and stream CSV")
    p.add_argument("x_pattern")
    p.add_argument("y_pattern")
    p.add_argument("--min-n", type=int, default=4)
    _add_common(p, 7)
    return parser


def _config(args, engine_cap=None) -> EngineConfig:
    cap = engine_cap if engine_cap is not None else args.max_n
    return EngineConfig(
        max_full_n=cap,
        memory_limit_bytes=args.memory_limit,
        thread_count=max(1, args.threads),
    )


def _instance(args) -> FsInstance:
    return FsInstance(graph_from_spec(args.x), graph_from_spec(args.y))


def _emit(obj, fmt, out, plain=None, csv_rows=None):
    if fmt == "plain" and plain is not None:
        out.write(plain + "\n")
    elif fmt == "csv" and csv_rows is not None:
        import csv

        writer = csv.writer(out, lineterminator="\r\n")
        writer.writerows(csv_rows)
    else:
        out.write(json.dumps(obj) + "\n")


def cmd_components(args, out) -> int:
    s = fs_components(_instance(args), _config(args))
    plain = f"{s.num_components} component(s) over {s.total} states: " + ", ".join(
        f"{c} x size {size}" for size, c in sorted(s.sizes.items())
    )
    rows = [["n", "total", "components", "size", "count"]]
    rows += [[s.n, s.total, s.num_components, size, c] for size, c in sorted(s.sizes.items())]
    _emit(s.to_dict(), args.format, out, plain, rows)
    return EXIT_OK


def cmd_connected(args, out) -> int:
    inst = _instance(args)
    ok = fs_is_connected(inst, _config(args))
    obj = {"x": args.x, "y": args.y, "n": inst.n, "connected": ok}
    rows = [["x", "y", "n", "connected"], [args.x, args.y, inst.n, str(ok).lower()]]
    _emit(obj, args.format, out, "connected" if ok else "disconnected", rows)
    return EXIT_OK if ok else EXIT_DISCONNECTED


def cmd_cert(args, out) -> int:
    cert = find_disconnect_certificate(_instance(args))
    if cert is None:
        out.write("none\n")
    else:
        _emit(cert.to_dict(), args.format, out, f"{cert.kind} path={list(cert.path)} d={cert.d}")
    return EXIT_OK


def cmd_neighbors(args, out) -> int:
    perm = json.loads(args.perm)
    nbrs = fs_neighbors(_instance(args), perm)
    _emit([list(p) for p in nbrs], args.format, out, "\n".join(" ".join(map(str, p)) for p in nbrs))
    return EXIT_OK


def cmd_verify(args, out) -> int:
    if args.theorem != "all" and args.theorem not in theorems.THEOREMS:
        print(f"unknown theorem id {args.theorem!r}", file=sys.stderr)
        return EXIT_USAGE
    # the sweep ceiling is --max-n; the engine itself may go to 11
    cfg = _config(args, engine_cap=max(args.max_n, 11))
    reports = theorems.run(args.theorem, args.max_n, args.seed, cfg)
    if args.stretch:
        reports.append(theorems.verify_stretch(cfg))
    timing = not args.no_timing
    if len(reports) == 1:
        obj = reports[0].to_dict(timing)
    else:
        obj = {"passed": all(r.passed for r in reports), "reports": [r.to_dict(timing) for r in reports]}
    plain = "\n".join(
        f"{'PASS' if r.passed else 'FAIL'} {r.theorem}: {r.checked} checked, {len(r.mismatches)} mismatches"
        for r in reports
    )
    rows = [["theorem", "checked", "mismatches", "passed"]]
    rows += [[r.theorem, r.checked, len(r.mismatches), str(r.passed).lower()] for r in reports]
    _emit(obj, args.format, out, plain, rows)
    return EXIT_OK if all(r.passed for r in reports) else EXIT_DISCONNECTED


def cmd_explore(args, out) -> int:
    def warn(xt, yt, exc):
        print(f"{xt} vs {yt}: {exc}", file=sys.stderr)

    rows = sweep(args.x_pattern, args.y_pattern, args.min_n, args.max_n, _config(args, 11), warn)
    write_csv(rows, out)
    return EXIT_OK


COMMANDS = {
    "components": cmd_components,
    "connected": cmd_connected,
    "cert": cmd_cert,
    "neighbors": cmd_neighbors,
    "verify": cmd_verify,
    "explore": cmd_explore,
}


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return COMMANDS[args.command](args, out)
    except (SpecError, ParameterError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ResourceError as exc:
        print(f"resource limit: {exc}", file=sys.stderr)
        return EXIT_RESOURCE
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
