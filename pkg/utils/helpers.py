# utils/helpers.py
import json
import os
import sys
from typing import Any

from config.settings import settings


def load_json_file(filepath: str, default: Any = None) -> Any:
    """Load data from a JSON file.

    Unlike a cache file, a missing or broken input is an error here, unless a
    default is given.
    """
    if not os.path.exists(filepath):
        if default is not None:
            return default
        raise FileNotFoundError(filepath)

    with open(filepath, 'r') as f:
        return json.load(f)


def save_json_file(filepath: str, data: Any) -> None:
    """Save data to a JSON file."""
    folder = os.path.dirname(filepath)
    if folder:
        os.makedirs(folder, exist_ok=True)
    with open(filepath, 'w') as f:
        json.dump(data, f, indent=2)
        f.write('\n')


def dump_json(data: Any) -> str:
    """Render data the way save_json_file writes it."""
    return json.dumps(data, indent=2)


def status(message: str) -> None:
    """Print a status line to stderr unless quiet mode is on."""
    if settings.quiet:
        return
    print(message, file=sys.stderr)


def parse_int_list(text: str | None) -> list[int]:
    """Parse '10,20,40' or '0-4,9' (inclusive ranges); empty text gives []."""
    if text is None or not str(text).strip():
        return []
    values = []
    for part in str(text).split(','):
        part = part.strip()
        if not part:
            continue
        if '-' in part:
            lo, hi = part.split('-', 1)
            values.extend(range(int(lo), int(hi) + 1))
        else:
            values.append(int(part))
    return values


def failure(action: str, error: Exception) -> dict:
    """Result dict for a handler that caught a RecolorError."""
    return {
        'success': False,
        'action': action,
        'data': None,
        'message': str(error),
        'exit_code': getattr(error, 'exit_code', 3),
    }