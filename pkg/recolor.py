# recolor.py
import sys

from handlers.command_handler import CommandHandler
from utils.helpers import dump_json, status


def main(argv: list[str] | None = None) -> int:
    """Run one subcommand; data goes to stdout, status lines to stderr."""
    handler = CommandHandler()
    result = handler.execute(sys.argv[1:] if argv is None else argv)
    if result.get('data') is not None:
        print(dump_json(result['data']))
    if result.get('action') == 'parse':
        status(f"❌ {result.get('message')}")
    return result.get('exit_code', 0 if result.get('success') else 3)


if __name__ == '__main__':
    sys.exit(main())
