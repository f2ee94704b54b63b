"""Command-line entry point: ``linktop {classify,decompose,cover,batch,twins,convert}``."""

from __future__ import annotations

import argparse
import json
import logging
import sys
from pathlib import Path

from .catalog import ParseError, convert_upstream, emit, parse_catalog, run_batch
from .classify import classify_link, find_twins
from .covers import cover_record
from .decompose import find_decompositions, preferred_decomposition, render_polynomial, type_label
from .weights import make_weight_system

EXIT_OK, EXIT_ENTRY_FAILURES, EXIT_USAGE = 0, 1, 2


def _weights(text: str) -> list[int]:
    try:
        return [int(x) for x in text.replace(" ", "").split(",") if x]
    except ValueError:
        raise argparse.ArgumentTypeError(f"weights must be comma-separated integers: {text!r}") from None


def _ws(args):
    return make_weight_system(args.weights, args.degree)


def _dump(obj):
    json.dump(obj, sys.stdout, indent=2)
    sys.stdout.write("\n")


def cmd_classify(args) -> int:
    ws = _ws(args)
    rec = classify_link(ws)
    out = rec.as_dict()
    if args.verify:
        from .verify import verify_link

        out["verified"] = verify_link(ws, rec)
    _dump(out)
    return EXIT_OK


def cmd_decompose(args) -> int:
    ws = _ws(args)
    decs = find_decompositions(ws) if args.all else [d for d in [preferred_decomposition(ws)] if d]
    _dump(
        [
            {
                "type": type_label(d),
                "polynomial": render_polynomial(d, ws),
                "blocks": [{"kind": b.kind.value, "vars": list(b.vars), "exps": list(b.exps)} for b in d.blocks],
            }
            for d in decs
        ]
    )
    return EXIT_OK


def cmd_cover(args) -> int:
    _dump(cover_record(_ws(args), args.p).as_dict())
    return EXIT_OK


def _read_catalog(args):
    data = Path(args.input).read_bytes()
    return parse_catalog(data, args.format, args.n_weights)


def cmd_batch(args) -> int:
    rows = run_batch(_read_catalog(args), filter_ke=args.filter == "ke", workers=args.workers)
    records = [r.record for r in rows if r.record is not None]
    payload = emit(records, args.emit)
    if args.out:
        Path(args.out).write_bytes(payload)
    else:
        sys.stdout.write(payload.decode())
    failures = [r for r in rows if r.error]
    for r in failures:
        print(f"line {r.entry.source_line} {r.entry.weights}: {r.error}", file=sys.stderr)
    return EXIT_ENTRY_FAILURES if failures else EXIT_OK


def cmd_twins(args) -> int:
    rows = run_batch(_read_catalog(args), workers=args.workers)
    groups = find_twins(r.record for r in rows if r.record)
    _dump(
        [
            {
                "degree": g.key[0],
                "mu": str(g.key[1]),
                "order": str(g.key[2]),
                "members": [{"weights": list(m.ws.weights), "type": m.label} for m in g.members],
            }
            for g in groups
        ]
    )
    return EXIT_ENTRY_FAILURES if any(r.error for r in rows) else EXIT_OK


def cmd_convert(args) -> int:
    entries = convert_upstream(Path(args.input).read_text(errors="replace"), args.n_weights)
    out = sys.stdout if not args.out else open(args.out, "w")
    for e in entries:
        flag = "" if e.ke_flag is None else "," + str(e.ke_flag).lower()
        out.write(",".join(map(str, e.weights)) + flag + "\n")
    if args.out:
        out.close()
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="linktop", description=__doc__)
    p.add_argument("-v", "--verbose", action="store_true")
    sub = p.add_subparsers(dest="command", required=True)

    def with_ws(sp):
        sp.add_argument("--weights", type=_weights, required=True, help="e.g. 13,143,775,620,465")
        sp.add_argument("--degree", type=int, default=None, help="defaults to sum(w) - 1")
        return sp

    def with_catalog(sp):
        sp.add_argument("--input", required=True)
        sp.add_argument("--format", choices=["csv", "jsonl"], default="csv")
        sp.add_argument("--n-weights", type=int, default=5, help="weights per headerless CSV line")
        sp.add_argument("--workers", type=int, default=1)
        return sp

    sp = with_ws(sub.add_parser("classify", help="homology and type of one link"))
    sp.add_argument("--verify", action="store_true", help=argparse.SUPPRESS)
    sp.set_defaults(func=cmd_classify)

    sp = with_ws(sub.add_parser("decompose", help="invertible-polynomial representations"))
    sp.add_argument("--all", action="store_true")
    sp.set_defaults(func=cmd_decompose)

    sp = with_ws(sub.add_parser("cover", help="branched cover z^p + f"))
    sp.add_argument("--p", type=int, required=True)
    sp.set_defaults(func=cmd_cover)

    sp = with_catalog(sub.add_parser("batch", help="classify a catalog"))
    sp.add_argument("--filter", choices=["ke"], default=None)
    sp.add_argument("--emit", choices=["csv", "jsonl", "markdown"], default="markdown")
    sp.add_argument("--out", default=None)
    sp.set_defaults(func=cmd_batch)

    sp = with_catalog(sub.add_parser("twins", help="group rational homology spheres by (d, mu, |H3|)"))
    sp.set_defaults(func=cmd_twins)

    sp = sub.add_parser("convert", help="best-effort conversion of the upstream KE text list")
    sp.add_argument("--input", required=True)
    sp.add_argument("--n-weights", type=int, default=5)
    sp.add_argument("--out", default=None)
    sp.set_defaults(func=cmd_convert)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    logging.basicConfig(level=logging.INFO if args.verbose else logging.ERROR, format="%(levelname)s %(message)s")
    try:
        return args.func(args)
    except (ParseError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
