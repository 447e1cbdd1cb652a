"""Command-line front end.

    hereditary classify [--classes a,b,...] [--certificates] [--format jsonl|tsv] [FILE|-]
    hereditary forb --class NAME --max-n K [--out FILE]
    hereditary contain --order {sub,top,minor,ind,topind} --pattern FILE --host FILE [--witness]
    hereditary gen --n K

Exit codes: 0 success (or "contained"), 1 "not contained", 2 usage, parse or
capacity error, 3 the class is not hereditary on the tested range.
Worker count comes from ``--threads``, else ``HEREDITARY_THREADS``, else the
CPU count; output is identical for every worker count.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path

from hereditary.containment import OrderKind, contains
from hereditary.forbidden import (
    DEFAULT_MAX_N,
    ClassSpec,
    HereditaryViolation,
    enumerate_graphs,
    minimal_forbidden,
)
from hereditary.graph import CapacityError, Graph
from hereditary.graph6 import Graph6Error, parse_graph6, read_graph6_lines
from hereditary.recognizers import CLASS_NAMES, PREDICATES, certificate_to_json, classify

THREADS_ENV = "HEREDITARY_THREADS"
MAX_FORB_N = 9
MAX_GEN_N = 9

# importable indirection so tests can register extra classes
ROSTER = PREDICATES


def _threads(flag: int | None) -> int:
    if flag is not None:
        return max(1, flag)
    env = os.environ.get(THREADS_ENV)
    if env:
        try:
            return max(1, int(env))
        except ValueError:
            raise SystemExit(f"error: {THREADS_ENV} must be an integer, got {env!r}")
    return os.cpu_count() or 1


def _parse_classes(text: str | None) -> list[str]:
    if not text:
        return list(CLASS_NAMES)
    names = [c.strip() for c in text.split(",") if c.strip()]
    unknown = [c for c in names if c not in CLASS_NAMES]
    if unknown:
        raise ValueError(f"unknown class name(s): {', '.join(unknown)}; known: {', '.join(CLASS_NAMES)}")
    return names


def _classify_one(job: tuple[str, tuple[str, ...], bool]) -> dict:
    text, names, with_certs = job
    g = parse_graph6(text)
    member = {}
    certs = {}
    for name in names:
        result = classify(g, name)
        member[name] = result.member
        if with_certs:
            certs[name] = certificate_to_json(result.certificate)
    record: dict = {"graph6": text, "member": member}
    if with_certs:
        record["certificates"] = certs
    return record


def _safe_classify(job):
    try:
        return _classify_one(job)
    except CapacityError as exc:
        return exc


def cmd_classify(args: argparse.Namespace) -> int:
    try:
        names = tuple(_parse_classes(args.classes))
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    stream = sys.stdin if args.file in (None, "-") else open(args.file, encoding="ascii", errors="replace")
    try:
        lines = list(stream)
    finally:
        if stream is not sys.stdin:
            stream.close()

    status = 0
    jobs = []
    for lineno, item in read_graph6_lines(lines):
        if isinstance(item, Graph6Error):
            print(f"line {lineno}: parse error: {item}", file=sys.stderr)
            status = 2
        elif isinstance(item, CapacityError):
            print(f"line {lineno}: skipped: {item}", file=sys.stderr)
        else:
            jobs.append((lineno, (item.to_graph6(), names, args.certificates)))

    workers = _threads(args.threads)
    payload = [job for _, job in jobs]
    if workers > 1 and len(payload) > 1:
        with ProcessPoolExecutor(workers) as pool:
            results = list(pool.map(_safe_classify, payload, chunksize=16))
    else:
        results = [_safe_classify(job) for job in payload]

    out = sys.stdout
    if args.format == "tsv":
        out.write("\t".join(["graph6", *names] + (["certificates"] if args.certificates else [])) + "\n")
    for (lineno, _), rec in zip(jobs, results):
        if isinstance(rec, CapacityError):
            print(f"line {lineno}: skipped: {rec}", file=sys.stderr)
            continue
        if args.format == "tsv":
            cols = [rec["graph6"]] + ["1" if rec["member"][n] else "0" for n in names]
            if args.certificates:
                cols.append(json.dumps(rec["certificates"], separators=(",", ":")))
            out.write("\t".join(cols) + "\n")
        else:
            out.write(json.dumps(rec, separators=(",", ":")) + "\n")
    return status


def cmd_forb(args: argparse.Namespace) -> int:
    if args.cls not in ROSTER:
        print(f"error: unknown class {args.cls!r}; known: {', '.join(ROSTER)}", file=sys.stderr)
        return 2
    if not 0 <= args.max_n <= MAX_FORB_N:
        print(f"error: --max-n must be between 0 and {MAX_FORB_N}", file=sys.stderr)
        return 2
    spec = ClassSpec(args.cls, ROSTER[args.cls])
    try:
        report = minimal_forbidden(spec, args.max_n, workers=_threads(args.threads))
    except HereditaryViolation as exc:
        print(f"error: {exc}", file=sys.stderr)
        g = exc.graph
        print(json.dumps({"graph6": g.to_graph6(), "vertex": exc.vertex,
                          "deleted": g.delete_vertex(exc.vertex).to_graph6()}), file=sys.stderr)
        return 3
    text = report.dumps()
    if args.out:
        Path(args.out).write_text(text, encoding="ascii")
    else:
        sys.stdout.write(text)
    return 0


def _read_one_graph(source: str) -> Graph:
    """First graph in a graph6 file, or ``source`` itself read as graph6."""
    p = Path(source)
    if source == "-":
        lines = sys.stdin.readlines()
    elif p.is_file():
        lines = p.read_text(encoding="ascii", errors="replace").splitlines()
    else:
        lines = [source]
    for lineno, item in read_graph6_lines(lines):
        if isinstance(item, Exception):
            raise ValueError(f"{source}: line {lineno}: {item}")
        return item
    raise ValueError(f"{source}: no graph found")


def cmd_contain(args: argparse.Namespace) -> int:
    try:
        pattern = _read_one_graph(args.pattern)
        host = _read_one_graph(args.host)
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    w = contains(host, pattern, OrderKind(args.order))
    if w is None:
        print("not contained")
        return 1
    print("contained")
    if args.witness:
        print(json.dumps(w.to_json(), separators=(",", ":")))
    return 0


def cmd_gen(args: argparse.Namespace) -> int:
    if not 0 <= args.n <= MAX_GEN_N:
        print(f"error: --n must be between 0 and {MAX_GEN_N}", file=sys.stderr)
        return 2
    out = sys.stdout
    for g in enumerate_graphs(args.n):
        out.write(g.to_graph6() + "\n")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="hereditary", description="Hereditary graph class toolkit.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("classify", help="classify graph6 graphs against the class roster")
    p.add_argument("file", nargs="?", default="-", help="graph6 input, one graph per line (default stdin)")
    p.add_argument("--classes", help=f"comma separated subset of: {', '.join(CLASS_NAMES)}")
    p.add_argument("--certificates", action="store_true", help="include certificates")
    p.add_argument("--format", choices=("jsonl", "tsv"), default="jsonl")
    p.add_argument("--threads", type=int)
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("forb", help="minimal forbidden induced subgraphs of a class")
    p.add_argument("--class", dest="cls", required=True)
    p.add_argument("--max-n", type=int, default=DEFAULT_MAX_N)
    p.add_argument("--out")
    p.add_argument("--threads", type=int)
    p.set_defaults(func=cmd_forb)

    p = sub.add_parser("contain", help="decide pattern <= host in a containment order")
    p.add_argument("--order", choices=[k.value for k in OrderKind], required=True)
    p.add_argument("--pattern", required=True, help="graph6 file (first graph used) or literal")
    p.add_argument("--host", required=True, help="graph6 file (first graph used) or literal")
    p.add_argument("--witness", action="store_true")
    p.set_defaults(func=cmd_contain)

    p = sub.add_parser("gen", help="all graphs on n vertices up to isomorphism")
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(func=cmd_gen)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
