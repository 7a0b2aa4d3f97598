"""Command line front end.

Subcommands wire the exact pipeline together: ``an`` prints trace counts,
``g`` and ``zeta`` the derived series, ``euler`` the Euler product with
an equality verdict against the exp pipeline, ``guess`` and ``verify``
handle annihilating polynomials, and ``selfcheck`` runs a seeded
invariant suite.  All data goes to stdout, diagnostics to stderr; exit
codes are 0 (success), 1 (parse error), 2 (validation error) and
3 (resource guard tripped).
"""

import argparse
import random
import re
import sys
from dataclasses import dataclass
from fractions import Fraction

from .algebra import AlgebraElement, format_element, parse_element
from .cyclic import alphabet_of, cycle_weight, cycle_weight_sum, euler_product
from .errors import ParseError, ResourceLimitError, ValidationError
from .families import builtin_matrix
from .guess import (evaluate_at_series, format_bivariate, guess_annihilator,
                    parse_bivariate)
from .matrix import (DEFAULT_PATH_BOUND, DEFAULT_TERM_LIMIT, AlgebraMatrix,
                     trace_count_by_paths, trace_counts)
from .series import TruncatedSeries, format_series, generating_series, zeta_series
from .words import GeneratorTable, free_reduce, concat, invert


@dataclass
class RunConfig:
    """Documented defaults for every knob the subcommands share."""

    order: int = 10
    prune: bool = True
    length: int = 6
    deg_t: int = 8
    deg_y: int = 3
    max_terms: int = DEFAULT_TERM_LIMIT
    path_bound: int = DEFAULT_PATH_BOUND

    def validate(self):
        for name in ("order", "length", "deg_t", "deg_y", "max_terms",
                     "path_bound"):
            if getattr(self, name) < 1:
                raise ValidationError(f"{name} must be positive")


_ASSIGN_RE = re.compile(r"\[\s*(\d+)\s*,\s*(\d+)\s*\]\s*=\s*(.*)$")
_DIM_RE = re.compile(r"dim\s+(\d+)\s*$")


def parse_matrix_document(text: str) -> AlgebraMatrix:
    """Parse the matrix DSL: a ``dim <d>`` header, then ``[i,j] = <poly>``.

    Unassigned entries are zero; duplicate assignments are rejected;
    generators are declared implicitly in order of first appearance.
    """
    table = GeneratorTable()
    dim = None
    entries = None
    seen = set()
    for ln, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if dim is None:
            m = _DIM_RE.match(line)
            if not m:
                raise ParseError("expected a 'dim <d>' header", line=ln)
            dim = int(m.group(1))
            if dim < 1:
                raise ParseError("dimension must be >= 1", line=ln)
            entries = [[AlgebraElement.zero() for _ in range(dim)]
                       for _ in range(dim)]
            continue
        m = _ASSIGN_RE.match(line)
        if not m:
            raise ParseError("expected '[i,j] = <polynomial>'", line=ln,
                             column=1)
        i, j = int(m.group(1)), int(m.group(2))
        if not (1 <= i <= dim and 1 <= j <= dim):
            raise ParseError(f"entry index ({i},{j}) outside dim {dim}",
                             line=ln)
        if (i, j) in seen:
            raise ParseError(f"duplicate assignment for entry ({i},{j})",
                             line=ln)
        seen.add((i, j))
        try:
            entries[i - 1][j - 1] = parse_element(m.group(3), table)
        except ParseError as exc:
            raise ParseError(str(exc), line=ln) from None
    if dim is None:
        raise ParseError("empty matrix document")
    return AlgebraMatrix(entries, table)


def format_matrix_document(m: AlgebraMatrix) -> str:
    """Canonical display; zero entries are omitted."""
    lines = [f"dim {m.dim}"]
    for i in range(m.dim):
        for j in range(m.dim):
            e = m.entries[i][j]
            if not e.is_zero():
                lines.append(f"[{i + 1},{j + 1}] = {format_element(e, m.table)}")
    return "\n".join(lines)


def _load_matrix(args) -> AlgebraMatrix:
    if args.builtin:
        return builtin_matrix(args.builtin)
    if args.matrix == "-":
        return parse_matrix_document(sys.stdin.read())
    with open(args.matrix, encoding="utf-8") as handle:
        return parse_matrix_document(handle.read())


def _emit(text: str):
    sys.stdout.write(text + "\n")


def _counts(m, config: RunConfig, order=None):
    return trace_counts(m, order if order is not None else config.order,
                        prune=config.prune, max_terms=config.max_terms)


def cmd_an(args, config: RunConfig) -> int:
    counts = _counts(_load_matrix(args), config)
    for n, c in enumerate(counts, start=1):
        _emit(f"{n}: {c}")
    return 0


def cmd_g(args, config: RunConfig) -> int:
    counts = _counts(_load_matrix(args), config)
    _emit(format_series(generating_series(counts)))
    return 0


def cmd_zeta(args, config: RunConfig) -> int:
    counts = _counts(_load_matrix(args), config)
    _emit(format_series(zeta_series(counts)))
    return 0


def cmd_euler(args, config: RunConfig) -> int:
    m = _load_matrix(args)
    product = euler_product(m, config.length)
    pipeline = zeta_series(_counts(m, config, order=config.length))
    _emit(format_series(product))
    if product == pipeline:
        _emit(f"EQUAL to order {config.length}")
    else:
        _emit(f"NOT EQUAL to order {config.length}")
    return 0


def _target_series(m, config: RunConfig, target: str):
    counts = _counts(m, config)
    if target == "g":
        return generating_series(counts)
    return zeta_series(counts)


def cmd_guess(args, config: RunConfig) -> int:
    f = _target_series(_load_matrix(args), config, args.target)
    p = guess_annihilator(f, config.deg_t, config.deg_y)
    _emit("none" if p is None else format_bivariate(p))
    return 0


def cmd_verify(args, config: RunConfig) -> int:
    if args.poly_file:
        with open(args.poly_file, encoding="utf-8") as handle:
            poly_text = handle.read()
    else:
        poly_text = args.poly
    p = parse_bivariate(poly_text)
    f = _target_series(_load_matrix(args), config, args.target)
    residue = evaluate_at_series(p, f)
    if residue.is_zero():
        _emit(f"ANNIHILATES to order {f.order}")
    else:
        k = next(i for i, c in enumerate(residue.coeffs) if c)
        _emit(f"FAILS at order {k}: residue coefficient {residue[k]}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="fgzeta",
        description="Exact zeta series of matrices over free group algebras")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_matrix_options(p):
        src = p.add_mutually_exclusive_group(required=True)
        src.add_argument("--matrix", metavar="FILE",
                         help="matrix document ('-' reads stdin)")
        src.add_argument("--builtin", metavar="NAME",
                         help="built-in matrix: kontsevich:<n>, paper2x2, "
                              "paperdxd:<d>")
        p.add_argument("--order", type=int, default=10,
                       help="truncation order N (default 10)")
        p.add_argument("--no-prune", action="store_true",
                       help="disable the length-bound pruning")
        p.add_argument("--max-terms", type=int, default=DEFAULT_TERM_LIMIT,
                       help="term-count ceiling for matrix powers")

    p_an = sub.add_parser("an", help="print the trace counts, one per line")
    add_matrix_options(p_an)

    p_g = sub.add_parser("g", help="print the generating series")
    add_matrix_options(p_g)

    p_zeta = sub.add_parser("zeta", help="print the zeta series")
    add_matrix_options(p_zeta)

    p_euler = sub.add_parser(
        "euler", help="print the Euler product and compare with zeta")
    add_matrix_options(p_euler)
    p_euler.add_argument("--length", type=int, default=6,
                         help="maximal primitive word length L (default 6)")

    p_guess = sub.add_parser(
        "guess", help="search for an annihilating polynomial")
    add_matrix_options(p_guess)
    p_guess.add_argument("--target", choices=("p", "g"), default="p",
                         help="annihilate the zeta (p) or generating (g) series")
    p_guess.add_argument("--degt", type=int, default=8,
                         help="t-degree bound (default 8)")
    p_guess.add_argument("--degy", type=int, default=3,
                         help="y-degree bound (default 3)")

    p_verify = sub.add_parser(
        "verify", help="check that a polynomial annihilates the series")
    add_matrix_options(p_verify)
    p_verify.add_argument("--target", choices=("p", "g"), default="p")
    poly_src = p_verify.add_mutually_exclusive_group(required=True)
    poly_src.add_argument("--poly", help="polynomial in 'c * t^i * y^j' terms")
    poly_src.add_argument("--poly-file", help="file containing the polynomial")

    sub.add_parser("selfcheck", help="run the built-in invariant suite")
    return parser


def _config_from(args) -> RunConfig:
    config = RunConfig()
    if hasattr(args, "order"):
        config.order = args.order
        config.prune = not args.no_prune
        config.max_terms = args.max_terms
    if getattr(args, "length", None) is not None:
        config.length = args.length
    if hasattr(args, "degt"):
        config.deg_t = args.degt
        config.deg_y = args.degy
    config.validate()
    return config


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    handlers = {
        "an": cmd_an,
        "g": cmd_g,
        "zeta": cmd_zeta,
        "euler": cmd_euler,
        "guess": cmd_guess,
        "verify": cmd_verify,
        "selfcheck": cmd_selfcheck,
    }
    try:
        config = _config_from(args)
        return handlers[args.command](args, config)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return 1
    except ValidationError as exc:
        print(f"validation error: {exc}", file=sys.stderr)
        return 2
    except ResourceLimitError as exc:
        print(f"resource limit: {exc}", file=sys.stderr)
        return 3
    except OSError as exc:
        print(f"validation error: {exc}", file=sys.stderr)
        return 2


def script_main():
    raise SystemExit(main())


# ----------------------------------------------------------------------
# selfcheck


def _random_element(rng, n_gens, max_support, max_len, coeff_range):
    terms = {}
    for _ in range(rng.randint(0, max_support)):
        length = rng.randint(0, max_len)
        raw = [rng.choice([1, -1]) * rng.randint(1, n_gens)
               for _ in range(length)]
        c = 0
        while c == 0:
            c = rng.randint(-coeff_range, coeff_range)
        w = free_reduce(raw)
        terms[w] = terms.get(w, 0) + c
    return AlgebraElement(terms)


def _random_matrix(rng, dim, n_gens=2, max_support=2, max_len=2,
                   coeff_range=3):
    table = GeneratorTable(f"g{k}" for k in range(1, n_gens + 1))
    while True:
        entries = [[_random_element(rng, n_gens, max_support, max_len,
                                    coeff_range)
                    for _ in range(dim)] for _ in range(dim)]
        if any(not e.is_zero() for row in entries for e in row):
            return AlgebraMatrix(entries, table)


def _random_word(rng, n_gens, max_len):
    raw = [rng.choice([1, -1]) * rng.randint(1, n_gens)
           for _ in range(rng.randint(0, max_len))]
    return free_reduce(raw)


def cmd_selfcheck(args, config: RunConfig) -> int:
    rng = random.Random(12345)
    failures = []

    def check(name, condition):
        if condition:
            _emit(f"ok: {name}")
        else:
            failures.append(name)
            print(f"FAIL: {name}", file=sys.stderr)

    ok = True
    for _ in range(200):
        u = _random_word(rng, 2, 6)
        v = _random_word(rng, 2, 6)
        w = _random_word(rng, 2, 6)
        ok &= concat(concat(u, v), w) == concat(u, concat(v, w))
        ok &= concat(u, invert(u)) == ()
        ok &= concat((), u) == u and concat(u, ()) == u
    check("free group laws", ok)

    ok = True
    for _ in range(40):
        a = _random_element(rng, 2, 3, 2, 5)
        b = _random_element(rng, 2, 3, 2, 5)
        c = _random_element(rng, 2, 3, 2, 5)
        ok &= (a * b) * c == a * (b * c)
        ok &= a * (b + c) == a * b + a * c
        ok &= (a * b).coeff(()) == (b * a).coeff(())
        ok &= (a * b).coeff(()) == a.trace_pairing(b)
    check("group algebra ring laws and trace symmetry", ok)

    ok = True
    for _ in range(6):
        m = _random_matrix(rng, rng.randint(1, 3))
        ok &= trace_counts(m, 5, prune=True) == trace_counts(m, 5, prune=False)
    check("pruned counts match unpruned counts", ok)

    ok = True
    for _ in range(6):
        m = _random_matrix(rng, rng.randint(1, 2))
        counts = trace_counts(m, 4)
        ok &= all(trace_count_by_paths(m, n) == counts[n - 1]
                  for n in range(1, 5))
    check("path oracle matches the power pipeline", ok)

    ok = True
    for _ in range(50):
        m = _random_matrix(rng, rng.randint(1, 3))
        alphabet = alphabet_of(m)
        if not alphabet:
            continue
        u = [rng.choice(alphabet) for _ in range(rng.randint(0, 3))]
        v = [rng.choice(alphabet) for _ in range(rng.randint(1, 3))]
        ok &= cycle_weight(m, u + v) == cycle_weight(m, v + u)
        r = rng.choice([2, 3])
        ok &= cycle_weight(m, v * r) == cycle_weight(m, v) ** r
    check("cycle weights are cyclic", ok)

    ok = True
    for _ in range(5):
        m = _random_matrix(rng, rng.randint(1, 2))
        counts = trace_counts(m, 3)
        ok &= all(cycle_weight_sum(m, n) == counts[n - 1]
                  for n in range(1, 4))
    check("weight sums match trace counts", ok)

    ok = True
    for _ in range(4):
        m = _random_matrix(rng, rng.randint(1, 2))
        ok &= euler_product(m, 4) == zeta_series(trace_counts(m, 4))
    check("euler product matches the exp pipeline", ok)

    ok = True
    for _ in range(20):
        order = rng.randint(3, 10)
        coeffs = [Fraction(rng.randint(-4, 4), rng.randint(1, 4))
                  for _ in range(order + 1)]
        coeffs[0] = Fraction(0)
        f = TruncatedSeries(coeffs, order)
        ok &= f.exp().log() == f
        g = TruncatedSeries([Fraction(1)] + list(coeffs[1:]), order)
        ok &= g.sqrt() * g.sqrt() == g
    check("series exp/log/sqrt round trips", ok)

    ok = True
    for _ in range(5):
        m = _random_matrix(rng, rng.randint(1, 3))
        ok &= zeta_series(trace_counts(m, 8)).is_integral()
    check("zeta series of integer matrices are integral", ok)

    if failures:
        print(f"selfcheck failed: {', '.join(failures)}", file=sys.stderr)
        return 2
    _emit("selfcheck passed")
    return 0


__all__ = [
    "RunConfig",
    "build_parser",
    "format_matrix_document",
    "main",
    "parse_matrix_document",
    "script_main",
]


if __name__ == "__main__":
    script_main()
