"""Command-line surface.

Subcommands: adim, multiplicity, curvature, enumerate, verify, counts.
Exit codes partition failure classes: 1 parse error, 2 domain error
(non-hyperbolic input, bad k), 3 internal invariant breach, 4 golden
verification mismatch.

The infinite order renders as `oo` everywhere; `inf` is accepted on
input.  CSV rows use the fixed header a,b,c,adim,compact.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from typing import List, Optional

from .core import INFINITY, Triple, chi_sign, is_infinite, parse_order, Sign
from .curvature import CurvatureSign, curvature_sign, sandwich_terms
from .dimension import adim
from .enumeration import EnumerationConfig, enumerate_triples, summarize
from .errors import InvariantViolation
from .golden import load_golden
from .multiplicity import multiplicity
from .records import TripleRecord

EXIT_PARSE = 1
EXIT_DOMAIN = 2
EXIT_INVARIANT = 3
EXIT_VERIFY = 4

_CHI_NAMES = {Sign.NEGATIVE: "Negative", Sign.ZERO: "Zero", Sign.POSITIVE: "Positive"}


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        sys.exit(EXIT_PARSE)


class DomainError(Exception):
    pass


def _order_token(tok: str):
    try:
        return parse_order(tok)
    except (ValueError, TypeError) as exc:
        raise argparse.ArgumentTypeError(str(exc)) from exc


def _triple_from(ns) -> Triple:
    try:
        return Triple.of(ns.a, ns.b, ns.c)
    except ValueError:
        sign = chi_sign(ns.a, ns.b, ns.c)
        raise DomainError(
            f"({ns.a}, {ns.b}, {ns.c}) is not hyperbolic: chi sign is {_CHI_NAMES[sign]}"
        )


def _fmt_order(s) -> str:
    return "oo" if is_infinite(s) else str(s)


def _record_row(rec: TripleRecord) -> dict:
    t = rec.triple
    return {
        "a": t.a if not is_infinite(t.a) else "oo",
        "b": t.b if not is_infinite(t.b) else "oo",
        "c": t.c if not is_infinite(t.c) else "oo",
        "adim": rec.adim,
        "compact": rec.compact,
    }


def render_records(records: List[TripleRecord], fmt: str) -> str:
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["a", "b", "c", "adim", "compact"])
        for rec in records:
            row = _record_row(rec)
            writer.writerow(
                [row["a"], row["b"], row["c"], row["adim"], "true" if row["compact"] else "false"]
            )
        return buf.getvalue()
    if fmt == "json":
        return json.dumps([_record_row(rec) for rec in records], indent=0) + "\n"
    lines = []
    for rec in records:
        t = rec.triple
        kind = "compact" if rec.compact else "noncompact"
        lines.append(
            f"({_fmt_order(t.a)}, {_fmt_order(t.b)}, {_fmt_order(t.c)}) adim={rec.adim} {kind}"
        )
    return "\n".join(lines) + ("\n" if lines else "")


def parse_records_csv(text: str) -> set:
    rows = list(csv.reader(io.StringIO(text)))
    assert rows[0] == ["a", "b", "c", "adim", "compact"]
    out = set()
    for row in rows[1:]:
        a, b, c = (tok if tok == "oo" else int(tok) for tok in row[:3])
        out.add((a, b, c, int(row[3]), row[4] == "true"))
    return out


def parse_records_json(text: str) -> set:
    out = set()
    for obj in json.loads(text):
        out.add((obj["a"], obj["b"], obj["c"], obj["adim"], obj["compact"]))
    return out


def _cmd_adim(ns) -> int:
    t = _triple_from(ns)
    res = adim(t)
    print(f"triple: {t}")
    print(f"adim: {res.adim}")
    print(f"m: {res.m}")
    print(f"phi2m: {res.phi2m}")
    print(f"h: {res.h}")
    print(f"classes: {res.classes}")
    print(f"hyperbolic_ks: {res.hyperbolic_ks}")
    print(f"spherical_ks: {res.spherical_ks}")
    return 0


def _cmd_multiplicity(ns) -> int:
    t = _triple_from(ns)
    rep = multiplicity(t, mode=ns.mode)
    print(f"triple: {t}")
    print(f"h: {rep.h}")
    print(f"h1: {rep.h1}")
    print(f"h2: {rep.h2}")
    print(f"t: {rep.t}")
    print(f"u: {rep.u}")
    print(f"method: {rep.method}")
    agree = "n/a" if rep.agreement is None else str(rep.agreement).lower()
    print(f"agreement: {agree}")
    if rep.closed_h is not None:
        print(f"closed_h: {rep.closed_h}")
    return 0


def _cmd_curvature(ns) -> int:
    t = _triple_from(ns)
    try:
        sign = curvature_sign(t, ns.k)
    except ValueError as exc:
        raise DomainError(str(exc))
    print(f"triple: {t}")
    print(f"k: {ns.k}")
    print(f"sign: {sign.name.capitalize()}")
    if t.is_compact:
        lo, mid, hi = sandwich_terms(t.a, t.b, t.c, ns.k)
        print(f"sandwich: {lo} <= {mid} <= {hi} holds iff curvature >= 0")
    else:
        print("sandwich: trivial (infinite order makes every conjugate hyperbolic)")
    if sign is CurvatureSign.ZERO:
        raise DomainError("curvature is zero: input violates the preconditions")
    return 0


def _config_from(ns) -> EnumerationConfig:
    return EnumerationConfig(
        r=ns.r,
        bound_mode=ns.mode,
        max_prime_index=ns.max_prime_index,
        threads=ns.threads,
    )


def _cmd_enumerate(ns) -> int:
    records = enumerate_triples(_config_from(ns))
    text = render_records(records, ns.format)
    if ns.out:
        with open(ns.out, "w") as f:
            f.write(text)
    else:
        sys.stdout.write(text)
    compact, noncompact = summarize(records)
    print(f"r={ns.r} compact={compact} noncompact={noncompact}")
    return 0


def _cmd_verify(ns) -> int:
    golden = load_golden(ns.r, path=ns.golden)
    records = enumerate_triples(_config_from(ns))
    got = {rec.triple.entries for rec in records}
    want = set(golden.compact_triples) | set(golden.noncompact_triples)
    missing = sorted(want - got, key=lambda e: tuple((1, 0) if is_infinite(x) else (0, x) for x in e))
    extra = sorted(got - want, key=lambda e: tuple((1, 0) if is_infinite(x) else (0, x) for x in e))
    for e in missing:
        print(f"missing: ({_fmt_order(e[0])}, {_fmt_order(e[1])}, {_fmt_order(e[2])})")
    for e in extra:
        print(f"extra: ({_fmt_order(e[0])}, {_fmt_order(e[1])}, {_fmt_order(e[2])})")
    if missing or extra:
        print(f"verify r={ns.r}: MISMATCH ({len(missing)} missing, {len(extra)} extra)")
        return EXIT_VERIFY
    print(f"verify r={ns.r}: OK ({len(got)} triples)")
    return 0


def _cmd_counts(ns) -> int:
    from .golden import load_counts

    lines = ["r\tcompact\tnoncompact"]
    for r, (comp, non) in sorted(load_counts().items()):
        lines.append(f"{r}\t{comp}\t{non}")
    text = "\n".join(lines) + "\n"
    if ns.out:
        with open(ns.out, "w") as f:
            f.write(text)
    else:
        sys.stdout.write(text)
    return 0


def build_parser() -> _Parser:
    parser = _Parser(prog="triadim", description="arithmetic dimension of triangle groups")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("adim", help="arithmetic dimension of a triple")
    for name in "abc":
        p.add_argument(name, type=_order_token)
    p.set_defaults(func=_cmd_adim)

    p = sub.add_parser("multiplicity", help="stabilizer orders #H, #H1, #H2")
    for name in "abc":
        p.add_argument(name, type=_order_token)
    p.add_argument("--mode", choices=["auto", "brute", "closed"], default="auto")
    p.set_defaults(func=_cmd_multiplicity)

    p = sub.add_parser("curvature", help="exact curvature sign of one conjugate class")
    for name in "abc":
        p.add_argument(name, type=_order_token)
    p.add_argument("k", type=int)
    p.set_defaults(func=_cmd_curvature)

    def add_enum_flags(p):
        p.add_argument("r", type=int)
        p.add_argument("--mode", choices=["paper", "safe"], default="safe")
        p.add_argument("--threads", type=int, default=1)
        p.add_argument("--max-prime-index", type=int, default=None, dest="max_prime_index")

    p = sub.add_parser("enumerate", help="enumerate all r-arithmetic triples")
    add_enum_flags(p)
    p.add_argument("--format", choices=["text", "csv", "json"], default="text")
    p.add_argument("--out", default=None)
    p.set_defaults(func=_cmd_enumerate)

    p = sub.add_parser("verify", help="enumerate and compare against the golden list")
    add_enum_flags(p)
    p.add_argument("--golden", default=None, help="fixture file overriding the embedded list")
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("counts", help="known classification cardinalities (TSV)")
    p.add_argument("--out", default=None)
    p.set_defaults(func=_cmd_counts)
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    ns = parser.parse_args(argv)
    try:
        return ns.func(ns)
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    except InvariantViolation as exc:
        print(f"internal invariant breach: {exc}", file=sys.stderr)
        return EXIT_INVARIANT


if __name__ == "__main__":
    sys.exit(main())
