from .parsing import InputParser
from .rendering import FORMATS, render_report, render_catalog
from ..cayley import CayleySpec, SearchRangeError, classification_catalog, enumerate_circulants
from ..classify import analyze, search_circulants, search_all_digraphs, corpus_verify
from ..config import Settings, load_settings
from ..digraphs import Digraph
from ..iso import Certificate

import argparse
import logging
from pathlib import Path
import sys

from typing import Sequence


logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_INPUT = 3
EXIT_PRECONDITION = 4
EXIT_COUNTEREXAMPLE = 5


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument('--format', choices=FORMATS, default='text',
                        help="Output format (default: text).")
    common.add_argument('--workers', type=int, default=None,
                        help="Worker processes (default: WDRDIGRAPHS_WORKERS or the CPU count).")
    common.add_argument('--log-level', default=None,
                        help="Logging level for stderr (default: WDRDIGRAPHS_LOG_LEVEL or WARNING).")
    common.add_argument('--progress', action=argparse.BooleanOptionalAction, default=None,
                        help="Show progress bars on stderr.")

    parser = argparse.ArgumentParser(
        prog='wdrdigraphs',
        description="Analyze weakly distance-regular digraphs and reproduce the "
                    "diameter-two classification.",
    )
    commands = parser.add_subparsers(dest='command', required=True)

    p_analyze = commands.add_parser('analyze', parents=[common],
                                    help="Analyze one digraph.")
    p_analyze.add_argument('input', help="Edge-list file, '-' for stdin, or a cay: spec.")
    p_analyze.add_argument('--allow-undirected', action='store_true',
                           help="Accept digraphs whose arcs all come in opposite pairs.")

    commands.add_parser('catalog', parents=[common],
                        help="List the nine diameter-two catalog digraphs.")

    p_search = commands.add_parser('search', help="Exhaustive searches.")
    searches = p_search.add_subparsers(dest='search_kind', required=True)
    p_circ = searches.add_parser('circulants', parents=[common],
                                 help="Search circulants on a range of orders.")
    p_circ.add_argument('--min', dest='n_min', type=int, required=True)
    p_circ.add_argument('--max', dest='n_max', type=int, required=True)
    p_circ.add_argument('--diameter', type=int, default=None)
    p_all = searches.add_parser('all', parents=[common],
                                help="Search every digraph up to a small order.")
    p_all.add_argument('--max', dest='n_max', type=int, required=True)
    p_all.add_argument('--diameter', type=int, default=None)
    p_all.add_argument('--no-prune', dest='prune', action='store_false',
                       help="Analyze every arc set instead of degree-regular ones only.")

    p_verify = commands.add_parser('verify', help="Corpus verification.")
    verifies = p_verify.add_subparsers(dest='verify_kind', required=True)
    p_corpus = verifies.add_parser('corpus', parents=[common],
                                   help="Run every check over a corpus of digraphs.")
    p_corpus.add_argument('inputs', nargs='*',
                          help="Edge-list files or cay: specs.")
    p_corpus.add_argument('--catalog', action='store_true',
                          help="Add the nine catalog digraphs to the corpus.")
    p_corpus.add_argument('--circulants', nargs=2, type=int, metavar=('MIN', 'MAX'),
                          help="Add every circulant on MIN..MAX vertices.")
    p_corpus.add_argument('--allow-undirected', action='store_true')
    return parser


def _read_input(source: str) -> str:
    if source.startswith('cay:'):
        return source
    if source == '-':
        return sys.stdin.read()
    return Path(source).read_text()


def _configure_logging(level: str):
    logging.basicConfig(
        level=getattr(logging, level.upper()),
        stream=sys.stderr,
        format='%(levelname)s %(name)s: %(message)s',
    )


def _run(args: argparse.Namespace, settings: Settings) -> tuple[str, bool]:
    """Execute a command; returns the rendered output and whether any check failed."""
    fmt = args.format
    match args.command:
        case 'analyze':
            parser = InputParser(allow_undirected=args.allow_undirected)
            report = analyze(parser.parse(_read_input(args.input)), label=args.input
                             if args.input.startswith('cay:') else None)
            return render_report(report, fmt), bool(report.failures())
        case 'catalog':
            return render_catalog(classification_catalog(), fmt), False
        case 'search' if args.search_kind == 'circulants':
            result = search_circulants(args.n_min, args.n_max, diameter=args.diameter,
                                       workers=settings.workers, progress=settings.progress)
            return render_report(result, fmt), bool(result.failures())
        case 'search':
            result = search_all_digraphs(args.n_max, diameter=args.diameter, prune=args.prune,
                                         workers=settings.workers, progress=settings.progress)
            return render_report(result, fmt), bool(result.failures())
        case 'verify':
            parser = InputParser(allow_undirected=args.allow_undirected)
            members: list[CayleySpec | Digraph] = []
            if args.catalog:
                members += [e.spec for e in classification_catalog()]
            if args.circulants:
                members += list(enumerate_circulants(*args.circulants))
            for source in args.inputs:
                text = _read_input(source)
                d = parser.parse(text)
                # a spec member keeps its spec string as the corpus label
                members.append(CayleySpec.parse(text) if text.lstrip().startswith('cay:') else d)
            verdict = corpus_verify(members, workers=settings.workers, progress=settings.progress)
            return render_report(verdict, fmt), not verdict.passed
    raise AssertionError(f"unhandled command {args.command}")


def main(argv: Sequence[str] | None = None) -> int:
    """Entry point of the ``wdrdigraphs`` command; returns the exit code.

    Exit codes are 0 on success, 2 for usage errors, 3 for malformed or
    invalid input, 4 when a precondition fails (not strongly connected,
    order too large, invalid range) and 5 when a check found a
    counterexample.
    """
    args = build_parser().parse_args(argv)
    try:
        settings = load_settings().override(
            workers=args.workers, log_level=args.log_level, progress=args.progress,
        )
    except Settings.InvalidSettingError as e:
        print(f"wdrdigraphs: {e}", file=sys.stderr)
        return EXIT_USAGE
    _configure_logging(settings.log_level)

    try:
        output, failed = _run(args, settings)
    except (Digraph.NotStronglyConnectedError, Certificate.OrderTooLargeError,
            SearchRangeError) as e:
        print(f"wdrdigraphs: {e}", file=sys.stderr)
        return EXIT_PRECONDITION
    except (InputParser.ParsingError, ValueError, OSError) as e:
        print(f"wdrdigraphs: {e}", file=sys.stderr)
        return EXIT_INPUT

    print(output)
    if failed:
        logger.error("a check failed; see the report")
        return EXIT_COUNTEREXAMPLE
    return EXIT_OK
