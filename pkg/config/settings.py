# config/settings.py
import os
from dotenv import load_dotenv

load_dotenv()


def _env_bool(name: str, default: bool) -> bool:
    raw = os.getenv(name)
    if raw is None:
        return default
    return raw.strip().lower() in ('1', 'true', 'yes', 'on')


class Settings:
    """Environment-backed configuration for the CLI and the engines"""

    def __init__(self) -> None:
        self.jobs = int(os.getenv('RECOLOR_JOBS', '1'))
        self.state_cap = int(os.getenv('RECOLOR_STATE_CAP', '10000000'))
        self.bench_oracle_cap = int(os.getenv('RECOLOR_ORACLE_CAP_BENCH', '1000000'))
        self.check_bounds = _env_bool('RECOLOR_CHECK_BOUNDS', True)
        self.quiet = _env_bool('RECOLOR_QUIET', False)

    def reload(self) -> 'Settings':
        """Re-read the environment (used by tests that patch os.environ)."""
        self.__init__()
        return self


# Create global instance
settings = Settings()
