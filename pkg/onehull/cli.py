'''
onehull command line: analysis, construction, bounds, search and table emission
'''
import argparse
import logging
import os
import sys
from typing import Callable, List, Optional, Sequence

import stringcase

from onehull.bounds import LcdOracle, best_bound, griesmer_max_d
from onehull.code import (
    LinearCode,
    certify,
    dual,
    dual_distance,
    hull,
    parse_code,
    verify_record,
    weight_profile,
)
from onehull.constants import (
    BUILDUP_RANDOM,
    DEFAULT_ENCODING,
    ENV_STORE,
    EXIT_BUDGET,
    EXIT_INFEASIBLE,
    EXIT_OK,
    EXIT_PARSE,
    EXIT_USAGE,
    FORMAT_TSV,
    FORMATS,
    SHORTEN_DERIVE,
    STRATEGIES,
)
from onehull.constructions import (
    build_up, build_up_one, inverse_build_up, inverse_build_up_one,
)
from onehull.exceptions import (
    DimensionMismatchError,
    EnumerationCapExceeded,
    InfeasibleSearchError,
    OneHullException,
    ParseError,
    RankDeficientError,
)
from onehull.formats import format_matrix_text, parse_coordinates
from onehull.gf2core import BitVector
from onehull.records import RecordStore
from onehull.search import (
    SearchConfig, exhaustive_nonexistence, reproduce_table1, search, tabulate,
)
from onehull.settings import get_settings_value, set_settings_value
from onehull.transforms import pad_simplex, puncture, shorten

log = logging.getLogger(__name__)


class OneHullArgumentParser(argparse.ArgumentParser):
    '''
    argparse with usage errors exiting 1
    '''

    def error(self, message: str) -> None:  # type: ignore[override]
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


class UsageError(OneHullException):
    '''
    Raised for argument combinations argparse cannot express
    '''


def _coordinates(text: str) -> List[int]:
    try:
        return parse_coordinates(text)
    except ValueError as error:
        raise argparse.ArgumentTypeError(f"bad coordinate list {text!r}") from error


def _bits(text: str) -> BitVector:
    if not text or set(text) - {'0', '1'}:
        raise argparse.ArgumentTypeError(f"expected a 0/1 string, got {text!r}")
    return BitVector.from_string(text)


def _non_negative(text: str) -> int:
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError(f"expected a non-negative integer, got {text}")
    return value


def _positive(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return value


def _range(text: str) -> tuple:
    low, sep, high = text.partition('-')
    try:
        values = (int(low), int(high) if sep else int(low))
    except ValueError as error:
        raise argparse.ArgumentTypeError(f"bad range {text!r}") from error
    if values[0] > values[1] or values[0] < 1:
        raise argparse.ArgumentTypeError(f"bad range {text!r}")
    return values


def build_parser() -> OneHullArgumentParser:
    '''
    The full argument parser
    '''
    parser = OneHullArgumentParser(
        prog='onehull', description='Binary linear codes with one-dimensional hull')
    parser.add_argument('--store', help=f"record store directory (default ${ENV_STORE})")
    parser.add_argument('--cap', type=_positive, help='largest 2^k enumerated for distances')
    parser.add_argument('--format', choices=FORMATS, default=FORMAT_TSV, dest='output_format')
    parser.add_argument('-v', '--verbose', action='store_true', help='log at INFO')
    parser.add_argument('--debug', action='store_true', help='log at DEBUG')
    verbs = parser.add_subparsers(dest='verb', metavar='verb')
    verbs.required = True

    analyze = verbs.add_parser('analyze', help='n, k, d, hull dimension and parity class')
    analyze.add_argument('file')

    for name, text in (('dual', 'the dual code'), ('hull', 'a basis of the hull')):
        verb = verbs.add_parser(name, help=text)
        verb.add_argument('file')
        verb.add_argument('-o', '--output')

    for name in ('shorten', 'puncture'):
        verb = verbs.add_parser(name, help=f"{name} on 1-based coordinates, e.g. 1,4-6")
        verb.add_argument('file')
        verb.add_argument('coordinates', type=_coordinates)
        verb.add_argument('-o', '--output')

    for name, text in (('buildup', 'LCD [n,k] seed and odd x to an [n+2,k+1] code'),
                       ('buildup1', 'LCD [n,k] seed and odd dual x to an [n+1,k+1] code')):
        verb = verbs.add_parser(name, help=text)
        verb.add_argument('file')
        verb.add_argument('x', type=_bits)
        verb.add_argument('-o', '--output')

    invert = verbs.add_parser('invert', help='recover an LCD seed and x from a hull-1 code')
    invert.add_argument('file')
    invert.add_argument('--one-column', action='store_true',
                        help='invert the one-column building-up instead of the two-column one')
    invert.add_argument('-o', '--output')

    pad = verbs.add_parser('pad', help='prepend m copies of the simplex matrix')
    pad.add_argument('file')
    pad.add_argument('blocks', type=_non_negative)
    pad.add_argument('-o', '--output')

    bound = verbs.add_parser('bound', help='best known interval for d_one(n, k)')
    bound.add_argument('n', type=_positive)
    bound.add_argument('k', type=_positive)
    bound.add_argument('--lcd-data', help='file of "n k d" d_LCD values')

    find = verbs.add_parser('search', help='search for an [n,k,d] code with one-dimensional hull')
    find.add_argument('n', type=_positive)
    find.add_argument('k', type=_positive)
    find.add_argument('d', type=_positive)
    find.add_argument('--strategy', choices=STRATEGIES, default=BUILDUP_RANDOM)
    find.add_argument('--seed', type=_non_negative)
    find.add_argument('--budget', type=_positive)
    find.add_argument('--seed-file', action='append', default=[],
                      help='LCD seed code (repeatable)')
    find.add_argument('--workers', type=_positive)
    find.add_argument('--prove', action='store_true',
                      help='exhaustive nonexistence certificate instead of a search')

    table = verbs.add_parser('table', help='grid of d_one values with match status')
    table.add_argument('lengths', type=_range, help='n range, e.g. 14-30')
    table.add_argument('dimensions', type=_range, help='k range, e.g. 1-6')
    table.add_argument('--reproduce', action='store_true', help='search for missing witnesses')
    table.add_argument('--budget', type=_positive, default=10 ** 5)
    table.add_argument('--seed', type=_non_negative)
    table.add_argument('--derived-only', action='store_true',
                       help='close cells from above without the frozen tables')
    table.add_argument('--lcd-data')

    verbs.add_parser('certify-store', help='re-certify every stored record')
    return parser


def _read(path: str) -> str:
    with open(path, 'r', encoding=DEFAULT_ENCODING) as handle:
        return handle.read()


def _load(path: str) -> LinearCode:
    code, _ = parse_code(_read(path), path)
    return code


def _emit(text: str, output: Optional[str] = None) -> None:
    if output:
        with open(output, 'w', encoding=DEFAULT_ENCODING) as handle:
            handle.write(text)
        log.info('Wrote %s', output)
    else:
        sys.stdout.write(text)


def _emit_code(code: LinearCode, provenance: str, output: Optional[str]) -> int:
    _emit(certify(code, provenance).to_text(), output)
    return EXIT_OK


def _store(args: argparse.Namespace, required: bool = False) -> Optional[RecordStore]:
    directory = args.store or os.environ.get(ENV_STORE) or get_settings_value('store_dir')
    if directory is None:
        if required:
            raise UsageError(f"no record store: pass --store or set {ENV_STORE}")
        return None
    return RecordStore(directory)


def _oracle(path: Optional[str]) -> Optional[LcdOracle]:
    return LcdOracle.from_file(path) if path else None


def handle_analyze(args: argparse.Namespace) -> int:
    '''n, k, d, hull dimension, parity class, dual distance and Griesmer gap'''
    code = _load(args.file)
    profile = weight_profile(code)
    dimension = hull(code).dimension
    fields = [f"n={code.n}", f"k={code.k}", f"d={profile.min_distance}", f"hull={dimension}"]
    if dimension == code.k:
        fields.append('self-orthogonal')
    elif dimension == 0:
        fields.append('lcd')
    fields.append('even-like' if profile.even_like else 'odd-like')
    if code.k < code.n:
        fields.append(f"dual_d={dual_distance(code)}")
    fields.append(f"griesmer_gap={griesmer_max_d(code.n, code.k) - profile.min_distance}")
    print(' '.join(fields))
    return EXIT_OK


def handle_dual(args: argparse.Namespace) -> int:
    '''The dual code'''
    return _emit_code(dual(_load(args.file)), 'dual', args.output)


def handle_hull(args: argparse.Namespace) -> int:
    '''A basis of the hull, or only the dimension line for an LCD code'''
    info = hull(_load(args.file))
    if info.dimension == 0:
        _emit('# hull=0\n', args.output)
    else:
        _emit(format_matrix_text(info.basis, [f"hull={info.dimension}"]), args.output)
    return EXIT_OK


def handle_shorten(args: argparse.Namespace) -> int:
    '''Shorten on the given coordinates'''
    coordinates = ','.join(str(value) for value in args.coordinates)
    return _emit_code(shorten(_load(args.file), args.coordinates), f"shorten@{coordinates}",
                      args.output)


def handle_puncture(args: argparse.Namespace) -> int:
    '''Puncture on the given coordinates'''
    coordinates = ','.join(str(value) for value in args.coordinates)
    return _emit_code(puncture(_load(args.file), args.coordinates), f"puncture@{coordinates}",
                      args.output)


def handle_buildup(args: argparse.Namespace) -> int:
    '''Two-column building-up'''
    return _emit_code(build_up(_load(args.file), args.x), 'buildup', args.output)


def handle_buildup1(args: argparse.Namespace) -> int:
    '''One-column building-up'''
    return _emit_code(build_up_one(_load(args.file), args.x), 'buildup1', args.output)


def handle_invert(args: argparse.Namespace) -> int:
    '''Seed code with x as a comment line'''
    code = _load(args.file)
    if args.one_column:
        seed, x = inverse_build_up_one(code)
    else:
        seed, x = inverse_build_up(code)
    _emit(seed.to_text([f"x={x.to_string()}"]), args.output)
    return EXIT_OK


def handle_pad(args: argparse.Namespace) -> int:
    '''Simplex padding'''
    return _emit_code(pad_simplex(_load(args.file), args.blocks), f"pad_simplex@{args.blocks}",
                      args.output)


def handle_bound(args: argparse.Namespace) -> int:
    '''The interval with every source that binds it'''
    interval = best_bound(args.n, args.k, _oracle(args.lcd_data))
    status = '' if interval.exact else ' OPEN'
    print(f"[{interval.lower},{interval.upper}]{status} ({'; '.join(interval.provenance)})")
    return EXIT_OK


def _prove(args: argparse.Namespace) -> int:
    certificate = exhaustive_nonexistence(args.n, args.k, args.d, args.workers)
    store = _store(args)
    if store is not None:
        if certificate.exists:
            store.save(certificate.witness)
        else:
            store.write_certificate(args.n, args.k, args.d, certificate.to_text())
    sys.stdout.write(certificate.to_text())
    return EXIT_OK if certificate.exists else EXIT_INFEASIBLE


def handle_search(args: argparse.Namespace) -> int:
    '''Search, or with --prove an exhaustive certificate'''
    if args.prove:
        return _prove(args)
    if args.strategy == BUILDUP_RANDOM and args.seed is None:
        raise UsageError('buildup-random needs --seed')
    seeds = tuple(_load(path) for path in args.seed_file)
    cfg = SearchConfig(args.n, args.k, args.d, args.strategy, budget=args.budget, seed=args.seed,
                       seeds=seeds, workers=args.workers)
    store = _store(args)
    sources = []
    if store is not None and args.strategy == SHORTEN_DERIVE:
        sources = list(store.scan())
    outcome = search(cfg, sources)
    if outcome.record is None:
        print(f"# no [{args.n},{args.k},>={args.d}] witness after {outcome.scanned} candidates")
        return EXIT_BUDGET if outcome.exhausted else EXIT_INFEASIBLE
    if store is not None:
        store.save(outcome.record)
    sys.stdout.write(outcome.record.to_text())
    return EXIT_OK


def handle_table(args: argparse.Namespace) -> int:
    '''The value grid, from the store and bounds or with --reproduce from search'''
    store = _store(args)
    oracle = _oracle(args.lcd_data)
    if args.reproduce:
        if args.seed is None:
            raise UsageError('table --reproduce needs --seed')
        report = reproduce_table1(args.lengths, args.dimensions, args.budget, args.seed, store,
                                  not args.derived_only, oracle)
    else:
        report = tabulate(args.lengths, args.dimensions, store, not args.derived_only, oracle)
    sys.stdout.write(report.render(args.output_format))
    return EXIT_OK


def handle_certify_store(args: argparse.Namespace) -> int:
    '''Re-certify stored records, rewriting any whose fields are stale'''
    store = _store(args, required=True)
    checked = fixed = 0
    for record in store.scan():
        checked += 1
        if not verify_record(record):
            fresh = certify(LinearCode(record.generator), record.provenance)
            store.save(fresh, only_if_better=False)
            fixed += 1
    print(f"checked={checked} fixed={fixed}")
    return EXIT_OK


def _configure_logging(args: argparse.Namespace) -> None:
    level = logging.WARNING
    if args.debug:
        level = logging.DEBUG
    elif args.verbose:
        level = logging.INFO
    logging.basicConfig(level=level, format='%(levelname)s %(name)s: %(message)s')


def _exit_code(error: OneHullException) -> int:
    if isinstance(error, (ParseError, RankDeficientError, DimensionMismatchError)):
        return EXIT_PARSE
    if isinstance(error, InfeasibleSearchError):
        return EXIT_INFEASIBLE
    if isinstance(error, EnumerationCapExceeded):
        return EXIT_BUDGET
    return EXIT_USAGE


def main(argv: Optional[Sequence[str]] = None) -> int:
    '''
    Entry point; returns the exit code
    '''
    args = build_parser().parse_args(argv)
    _configure_logging(args)
    if args.cap is not None:
        set_settings_value('enumeration_cap', args.cap)
    handler: Callable[[argparse.Namespace], int] = globals()[
        f"handle_{stringcase.snakecase(args.verb)}"]
    try:
        return handler(args)
    except OneHullException as error:
        print(f"onehull: error: {error}", file=sys.stderr)
        return _exit_code(error)
    except OSError as error:
        print(f"onehull: error: {error}", file=sys.stderr)
        return EXIT_PARSE


if __name__ == '__main__':
    sys.exit(main())
