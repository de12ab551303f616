"""Command line front end.

Exit status: 0 on success or a positive verdict, 2 on a computed negative
verdict (failed check, no order exists, nontrivial product, disagreeing
engines), 1 when something could not be computed.
"""

from __future__ import annotations

import argparse
import json
import os
import random
import sys
from pathlib import Path

from . import corpus
from .golod import (
    CERT_HEADER,
    FOUND,
    NONE,
    GeneratorOrder,
    build_product_order,
    check_strong_gcd,
    format_certificate,
    golod_bound_series,
    parse_certificate,
    search_order,
    taylor_betti,
    verify_certificate,
)
from .ideal import (
    format_ideal,
    intersection,
    parse_ideal,
    polarize_ideal,
    power,
    probe_symbolic_factorization,
    product,
    read_ideal,
    symbolic_power,
)
from .linalg import field_from_spec
from .moment_angle import MomentAngleAlgebra, check_triviality, hochster_betti, verify_join_dual_pipeline
from .monomial import MonomialOrder, parse_monomial
from .simplicial import (
    alexander_dual,
    complex_from_squarefree_ideal,
    format_complex,
    join,
    read_complex,
    stanley_reisner_ideal,
)

FIELD_ENV = "GOLODCERT_FIELD"
EXIT_OK, EXIT_ERROR, EXIT_NEGATIVE = 0, 1, 2


class CommandError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_ERROR, f"{self.prog}: error: {message}\n")


def _positive(text: str) -> int:
    v = int(text)
    if v < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return v


def _nonneg(text: str) -> int:
    v = int(text)
    if v < 0:
        raise argparse.ArgumentTypeError(f"expected a non-negative integer, got {text}")
    return v


def _field(text: str):
    try:
        return field_from_spec(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _monomial_order(text: str) -> MonomialOrder:
    try:
        return MonomialOrder.parse(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--field", type=_field, default=None, help="'q' (default) or a prime p; env " + FIELD_ENV)
    common.add_argument("--monomial-order", type=_monomial_order, default=MonomialOrder(), metavar="ORD",
                        help="lex or grlex, optionally with precedence, e.g. 'lex(x2>x1>x3)'")
    common.add_argument("-o", "--output", default=None, help="write to this file instead of stdout")
    common.add_argument("--json", action="store_true", help="JSON output where supported")

    p = _Parser(prog="golodcert", description="Strong gcd-condition certificates and moment-angle checks.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def cmd(name, help_text):
        return sub.add_parser(name, help=help_text, parents=[common])

    c = cmd("product", "product of two ideals")
    c.add_argument("a")
    c.add_argument("b")
    c = cmd("power", "ordinary power I^k")
    c.add_argument("ideal")
    c.add_argument("-k", type=_nonneg, required=True)
    c = cmd("intersect", "intersection of two ideals")
    c.add_argument("a")
    c.add_argument("b")
    c = cmd("sympow", "symbolic power of a squarefree ideal")
    c.add_argument("ideal")
    c.add_argument("-k", type=_positive, required=True)
    c = cmd("polarize", "polarization")
    c.add_argument("ideal")
    c = cmd("check-gcd", "check or find a strong gcd order")
    c.add_argument("ideal")
    c.add_argument("--order", default="prop21",
                   help="prop21 (degree/monomial-order construction), search, greedy, or a file with an order")
    c.add_argument("--cap", type=_positive, default=8, help="generator cap for exhaustive search")
    c = cmd("verify-cert", "re-verify a certificate file")
    c.add_argument("certificate")
    c = cmd("betti", "multigraded Betti numbers")
    c.add_argument("ideal")
    c.add_argument("--engine", choices=["taylor", "hochster", "both"], default="taylor")
    c.add_argument("--cap", type=_positive, default=15, help="generator cap for the Taylor complex")
    c = cmd("series", "Golod bound series (1+t)^n / (1 - sum b_i t^(i+1))")
    c.add_argument("ideal")
    c.add_argument("-d", type=_nonneg, required=True)
    c = cmd("dual", "Alexander dual")
    c.add_argument("complex")
    c = cmd("join", "join of two complexes")
    c.add_argument("c1")
    c.add_argument("c2")
    c = cmd("sr-ideal", "Stanley-Reisner ideal of a complex")
    c.add_argument("complex")
    c = cmd("sr-complex", "complex of a squarefree ideal")
    c.add_argument("ideal")
    c = cmd("ma-trivial", "is the moment-angle cohomology product trivial?")
    c.add_argument("complex")
    c.add_argument("--max-vertices", type=_positive, default=16)
    c = cmd("join-dual-pipeline", "(C1^v * C2^v)^v: ideal identity and triviality")
    c.add_argument("c1")
    c.add_argument("c2")
    c = cmd("probe-sympow", "which I^(k) factor as I^(c) I^(k-c)")
    c.add_argument("ideal")
    c.add_argument("--kmax", type=_positive, default=6)
    c = cmd("gen-corpus", "write a random corpus")
    c.add_argument("--seed", type=int, required=True)
    c.add_argument("--count", type=_positive, default=10)
    c.add_argument("--kind", choices=["ideal", "squarefree", "complex"], default="ideal")
    c.add_argument("--max-vars", type=_positive, default=6)
    c.add_argument("--max-gens", type=_positive, default=6)
    c.add_argument("--max-deg", type=_positive, default=3)
    return p


def _read_order(path: str, ideal) -> GeneratorOrder:
    text = Path(path).read_text(encoding="utf-8")
    if text.lstrip().startswith(CERT_HEADER):
        cert = parse_certificate(text)
        if cert.ideal != ideal:
            raise CommandError("the certificate is for a different ideal")
        return GeneratorOrder(ideal, cert.sequence, f"file {path}")
    seq = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if line.startswith("order:"):
            line = line[len("order:"):]
        for tok in line.replace("≺", " ").replace("<", " ").split():
            seq.append(parse_monomial(tok, ideal.width))
    try:
        return GeneratorOrder(ideal, tuple(seq), f"file {path}")
    except ValueError as exc:
        raise CommandError(str(exc)) from None


def run(args: argparse.Namespace) -> tuple[int, str]:
    field = args.field or field_from_spec(os.environ.get(FIELD_ENV, "q"))
    mo = args.monomial_order
    name = args.command

    if name == "product":
        return EXIT_OK, format_ideal(product(read_ideal(args.a), read_ideal(args.b)), mo)
    if name == "power":
        return EXIT_OK, format_ideal(power(read_ideal(args.ideal), args.k), mo)
    if name == "intersect":
        return EXIT_OK, format_ideal(intersection(read_ideal(args.a), read_ideal(args.b)), mo)
    if name == "sympow":
        return EXIT_OK, format_ideal(symbolic_power(read_ideal(args.ideal), args.k), mo)
    if name == "polarize":
        pol = polarize_ideal(read_ideal(args.ideal))
        names = " ".join(f"x{k + 1}=x{i},{j}" for k, (i, j) in enumerate(pol.names))
        return EXIT_OK, f"# polarized variables: {names}\n" + format_ideal(pol.ideal, MonomialOrder())
    if name == "check-gcd":
        ideal = read_ideal(args.ideal)
        if args.order in ("search", "greedy"):
            res = search_order(ideal, "exhaustive" if args.order == "search" else "greedy", cap=args.cap)
            if res.status == NONE:
                return EXIT_NEGATIVE, "no order exists (exhaustive)\n"
            if res.status != FOUND:
                return EXIT_ERROR, "unknown: the greedy heuristic found no order (not a proof that none exists)\n"
            order = res.order
        elif args.order == "prop21":
            order = build_product_order(ideal, mo)
        else:
            order = _read_order(args.order, ideal)
        report = check_strong_gcd(ideal, order)
        if report.passed:
            return EXIT_OK, format_certificate(report)
        u, v = report.failing_pair
        return EXIT_NEGATIVE, f"fail: no witness for the coprime pair {u} ≺ {v}\norder: {order.format()}\n"
    if name == "verify-cert":
        check = verify_certificate(Path(args.certificate).read_text(encoding="utf-8"))
        if check.valid:
            return EXIT_OK, "certificate valid\n"
        return EXIT_NEGATIVE, "certificate invalid\n" + "".join(f"  {p}\n" for p in check.problems)
    if name == "betti":
        ideal = read_ideal(args.ideal)
        tables = {}
        if args.engine in ("taylor", "both"):
            tables["taylor"] = taylor_betti(ideal, field, cap=args.cap)
        if args.engine in ("hochster", "both"):
            tables["hochster"] = hochster_betti(ideal, field)
        if args.json:
            text = json.dumps({k: t.to_json() for k, t in tables.items()}, indent=2) + "\n"
        else:
            text = "".join(f"# engine: {k}\n{t.format()}\n" for k, t in tables.items())
        if args.engine == "both" and tables["taylor"] != tables["hochster"]:
            return EXIT_NEGATIVE, text + "engines disagree\n"
        return EXIT_OK, text
    if name == "series":
        ideal = read_ideal(args.ideal)
        series = golod_bound_series(taylor_betti(ideal, field), ideal.width, args.d)
        return EXIT_OK, series.format() + "\n"
    if name == "dual":
        return EXIT_OK, format_complex(alexander_dual(read_complex(args.complex)))
    if name == "join":
        joined, _ = join(read_complex(args.c1), read_complex(args.c2))
        return EXIT_OK, format_complex(joined)
    if name == "sr-ideal":
        return EXIT_OK, format_ideal(stanley_reisner_ideal(read_complex(args.complex)), mo)
    if name == "sr-complex":
        return EXIT_OK, format_complex(complex_from_squarefree_ideal(read_ideal(args.ideal)))
    if name == "ma-trivial":
        cx = read_complex(args.complex)
        report = check_triviality(cx, field, MomentAngleAlgebra(cx, field, args.max_vertices))
        if args.json:
            text = json.dumps(report.to_json(), indent=2) + "\n"
        else:
            text = f"{report.verdict} ({report.pairs_checked} pairs checked)\n"
            if report.witness:
                a, b = report.witness
                text += f"witness: {a.label()} * {b.label()} = nonzero class in {report.witness_product.label()}\n"
        return (EXIT_OK if report.trivial else EXIT_NEGATIVE), text
    if name == "join-dual-pipeline":
        report = verify_join_dual_pipeline(read_complex(args.c1), read_complex(args.c2), field)
        if args.json:
            text = json.dumps(report.to_json(), indent=2) + "\n"
        else:
            text = format_complex(report.gamma)
            text += f"# ideal identity: {'holds' if report.identity_holds else 'FAILS'}\n"
            text += f"# product: {report.product_ideal}\n# gamma:   {report.gamma_ideal}\n"
            text += f"# triviality: {report.triviality.verdict}\n"
        return (EXIT_OK if report.passed else EXIT_NEGATIVE), text
    if name == "probe-sympow":
        report = probe_symbolic_factorization(read_ideal(args.ideal), args.kmax)
        return EXIT_OK, report.format() + "\n"
    if name == "gen-corpus":
        return EXIT_OK, generate_corpus(args)
    raise CommandError(f"unknown command {name}")


def generate_corpus(args) -> str:
    rng = random.Random(args.seed)
    items = []
    for _ in range(args.count):
        n = rng.randint(1, args.max_vars)
        if args.kind == "ideal":
            items.append(format_ideal(corpus.random_ideal(rng, n, args.max_gens, args.max_deg)))
        elif args.kind == "squarefree":
            items.append(format_ideal(corpus.random_squarefree_ideal(rng, n, args.max_gens, args.max_deg)))
        else:
            items.append(format_complex(corpus.random_complex(rng, n, args.max_gens)))
    return "---\n".join(items)


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        status, text = run(args)
    except (OSError, ValueError, CommandError) as exc:
        print(f"golodcert {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_ERROR
    if args.output:
        Path(args.output).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)
    return status


def split_corpus(text: str) -> list[str]:
    """Inverse of the ``gen-corpus`` stdout format."""
    return [chunk for chunk in text.split("---\n") if chunk.strip()]


def parse_corpus_ideals(text: str):
    return [parse_ideal(chunk) for chunk in split_corpus(text)]


if __name__ == "__main__":
    sys.exit(main())
