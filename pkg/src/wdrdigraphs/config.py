from dataclasses import dataclass, replace
import logging
import os

from typing import Mapping


_TRUE = frozenset({'1', 'true', 'yes', 'on'})
_FALSE = frozenset({'0', 'false', 'no', 'off', ''})


@dataclass(frozen=True)
class Settings:
    """Runtime settings shared by the searches and the command line.

    Attributes
    ----------
    workers : int
        Worker processes for searches and corpus runs; ``1`` runs serially
        in-process.
    log_level : str
        Name of a :py:mod:`logging` level.
    progress : bool
        Show progress bars on stderr during long runs.
    """

    workers: int = 1
    log_level: str = 'WARNING'
    progress: bool = False

    class InvalidSettingError(ValueError):
        """Raised when a setting, or the environment variable it came from, is invalid."""
        pass

    def __post_init__(self):
        self._assert_workers_valid(self.workers)
        self._assert_log_level_valid(self.log_level)

    # - - Assertions - -

    @staticmethod
    def _assert_workers_valid(workers):
        if isinstance(workers, bool) or not isinstance(workers, int) or workers < 1:
            raise Settings.InvalidSettingError(f"`workers` must be a positive integer. Found {workers!r}.")

    @staticmethod
    def _assert_log_level_valid(log_level):
        if not isinstance(logging.getLevelName(str(log_level).upper()), int):
            raise Settings.InvalidSettingError(f"Unknown log level {log_level!r}.")

    def override(self, **changes) -> 'Settings':
        """A copy with every change that is not :py:obj:`None` applied."""
        return replace(self, **{k: v for k, v in changes.items() if v is not None})


def _env_int(environ: Mapping[str, str], name: str, default: int) -> int:
    raw = environ.get(name)
    if raw is None:
        return default
    try:
        return int(raw)
    except ValueError as e:
        raise Settings.InvalidSettingError(f"{name} must be an integer. Found {raw!r}.") from e


def _env_bool(environ: Mapping[str, str], name: str, default: bool) -> bool:
    raw = environ.get(name)
    if raw is None:
        return default
    value = raw.strip().lower()
    if value in _TRUE:
        return True
    if value in _FALSE:
        return False
    raise Settings.InvalidSettingError(f"{name} must be a boolean. Found {raw!r}.")


def load_settings(environ: Mapping[str, str] | None = None) -> Settings:
    """Read settings from ``WDRDIGRAPHS_WORKERS``, ``WDRDIGRAPHS_LOG_LEVEL`` and
    ``WDRDIGRAPHS_PROGRESS``.

    The worker count defaults to the number of CPUs available.

    Raises
    ------
    Settings.InvalidSettingError
        If a variable holds a value of the wrong kind.
    """
    if environ is None:
        environ = os.environ
    workers = _env_int(environ, 'WDRDIGRAPHS_WORKERS', os.process_cpu_count() or 1)
    log_level = environ.get('WDRDIGRAPHS_LOG_LEVEL', 'WARNING').upper()
    progress = _env_bool(environ, 'WDRDIGRAPHS_PROGRESS', False)
    return Settings(workers=workers, log_level=log_level, progress=progress)
