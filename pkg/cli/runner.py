"""
Run one subcommand in-process and capture its outcome.
"""
import io
import json
import logging
import time
from contextlib import redirect_stderr, redirect_stdout
from typing import Any, Dict, Optional, Sequence

from django.core.management import get_commands, load_command_class

from .base import USAGE_ERROR
from .serializers import CommandResultSerializer

logger = logging.getLogger(__name__)

APP_NAME = 'cli'


class CommandResult:
    """Result of a single CLI invocation."""

    def __init__(self, exit_code: int, payload: Any = None, timing_ms: float = 0.0, stderr: str = ''):
        self.exit_code = exit_code
        self.status = 'ok' if exit_code == 0 else 'error'
        self.payload = payload
        self.timing_ms = timing_ms
        self.stderr = stderr

    def to_dict(self) -> Dict[str, Any]:
        return dict(CommandResultSerializer(self).data)


def subcommands() -> Sequence[str]:
    return sorted(name for name, app in get_commands().items() if app == APP_NAME)


def _parse_payload(text: str) -> Optional[Any]:
    text = text.strip()
    if not text:
        return None
    try:
        return json.loads(text)
    except json.JSONDecodeError:
        # egf --format csv
        return text


def run(argv: Sequence[str]) -> CommandResult:
    """
    Execute `argv` (subcommand first) the way manage.py would.

    Returns:
        CommandResult with exit code 0, 1 (domain error) or 2 (usage error)
    """
    argv = [str(arg) for arg in argv]
    if not argv:
        return CommandResult(USAGE_ERROR, stderr='Missing subcommand')
    name, rest = argv[0], argv[1:]
    if name not in subcommands():
        return CommandResult(USAGE_ERROR, stderr=f"Unknown subcommand {name!r}, expected one of {subcommands()}")

    out, err = io.StringIO(), io.StringIO()
    started = time.perf_counter()
    with redirect_stdout(out), redirect_stderr(err):
        command = load_command_class(APP_NAME, name)
        try:
            command.run_from_argv(['manage.py', name, *rest])
            exit_code = 0
        except SystemExit as e:
            exit_code = e.code if isinstance(e.code, int) else 1
    timing_ms = (time.perf_counter() - started) * 1000
    logger.info(f"{name} exited with {exit_code} after {timing_ms:.1f} ms")
    return CommandResult(exit_code, _parse_payload(out.getvalue()), timing_ms, err.getvalue())
