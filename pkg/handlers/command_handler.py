# handlers/command_handler.py
import argparse
from fractions import Fraction
from typing import NoReturn

from config.settings import settings
from handlers.bench_handler import BenchHandler
from handlers.bound_handler import BoundHandler
from handlers.gen_handler import GenHandler
from handlers.inspect_handler import InspectHandler
from handlers.oracle_handler import OracleHandler
from handlers.transform_handler import TransformHandler
from handlers.verify_handler import VerifyHandler
from services.bench_service import MODES
from services.generator_service import FAMILIES, LIST_POLICIES
from services.list_recolor_service import STRATEGIES
from utils.errors import InputError
from utils.helpers import failure


class _Parser(argparse.ArgumentParser):
    """argparse that raises instead of exiting, so bad flags map to exit code 1."""

    def error(self, message: str) -> NoReturn:
        raise InputError(f"{self.prog}: {message}")


def _fraction(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not a fraction: {text!r}") from None


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog='recolor', description='Recolouring sequences for sparse graphs')
    parser.add_argument('--quiet', action='store_true', help='suppress status lines on stderr')
    sub = parser.add_subparsers(dest='command', required=True, parser_class=_Parser)

    p = sub.add_parser('transform', help='build a recolouring sequence alpha -> beta')
    p.add_argument('--graph', required=True)
    p.add_argument('--alpha')
    p.add_argument('--beta')
    p.add_argument('--mode', choices=('degenerate', 'planar-bipartite'), default='degenerate')
    p.add_argument('--colors', type=int)
    p.add_argument('--a', type=int)
    p.add_argument('--strategy', choices=STRATEGIES, default='forget')
    p.add_argument('--epsilon', type=_fraction)
    p.add_argument('--bound-only', action='store_true')
    p.add_argument('--out')

    p = sub.add_parser('verify', help='replay and check a sequence file')
    p.add_argument('--graph', required=True)
    p.add_argument('--start', required=True)
    p.add_argument('--sequence', required=True)
    p.add_argument('--target', required=True)
    p.add_argument('--colors', type=int)

    p = sub.add_parser('bound', help='evaluate the length guarantees')
    p.add_argument('--n', type=int, required=True)
    p.add_argument('--colors', '--k', dest='colors', type=int, required=True)
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument('--a', type=int)
    group.add_argument('--d', type=int)
    p.add_argument('--epsilon', type=_fraction)

    p = sub.add_parser('oracle', help='brute-force search on tiny instances')
    p.add_argument('query', choices=('distance', 'diameter', 'connected'))
    p.add_argument('--graph', required=True)
    p.add_argument('--colors', type=int)
    p.add_argument('--alpha')
    p.add_argument('--beta')
    p.add_argument('--cap', type=int, default=None)

    p = sub.add_parser('gen', help='generate a seeded instance')
    p.add_argument('--family', choices=FAMILIES, required=True)
    p.add_argument('--n', type=int, default=0)
    p.add_argument('--d', type=int)
    p.add_argument('--seed', type=int, default=0)
    p.add_argument('--colors', type=int)
    p.add_argument('--a', type=int)
    p.add_argument('--rows', type=int)
    p.add_argument('--cols', type=int)
    p.add_argument('--policy', choices=LIST_POLICIES, default='uniform')
    p.add_argument('--subdivisions', type=int, default=2)
    p.add_argument('--diagonals', type=int, default=1)
    p.add_argument('--out')
    p.add_argument('--colouring-out', action='append')
    p.add_argument('--colouring-seed', type=int)

    p = sub.add_parser('inspect', help='dump ordering, levels, faces and configuration')
    p.add_argument('--graph', required=True)

    p = sub.add_parser('bench', help='run a seeded bench matrix')
    p.add_argument('--families', default='')
    p.add_argument('--sizes', default='')
    p.add_argument('--seeds', default='0')
    p.add_argument('--mode', choices=MODES, default='degenerate')
    p.add_argument('--colors', type=int, default=3)
    p.add_argument('--d', type=int)
    p.add_argument('--a', type=int)
    p.add_argument('--strategy', choices=STRATEGIES, default='forget')
    p.add_argument('--jobs', type=int, default=None)
    p.add_argument('--out')
    return parser


class CommandHandler:
    def __init__(self) -> None:
        self.parser = build_parser()
        self.handlers = {
            'transform': TransformHandler(),
            'verify': VerifyHandler(),
            'bound': BoundHandler(),
            'oracle': OracleHandler(),
            'gen': GenHandler(),
            'inspect': InspectHandler(),
            'bench': BenchHandler(),
        }

    def parse_command(self, argv: list[str]) -> tuple[str, str, argparse.Namespace]:
        """Parse argv into (handler name, action, namespace)."""
        parsed = self.parser.parse_args(argv)
        if parsed.quiet:
            settings.quiet = True
        action = parsed.query if parsed.command == 'oracle' else parsed.command
        if parsed.command == 'gen' and parsed.colouring_seed is None:
            parsed.colouring_seed = parsed.seed
        return parsed.command, action, parsed

    def execute(self, argv: list[str]) -> dict:
        try:
            command, action, parsed = self.parse_command(argv)
        except InputError as e:
            return failure('parse', e)
        return self.handlers[command].handle(action, parsed)
