"""
Shared plumbing for the permutahedra management commands.

Every subcommand computes a JSON-ready payload; the base class writes it to
stdout and maps library errors onto CommandError exit codes.
"""
import argparse
import json
import logging
import time

from django.core.management.base import BaseCommand, CommandError

from counting.polynomials import CountingError
from egf.series import SeriesError
from exactmath.numbers import ExactMathError, parse_rational_list
from faces.opp import OPPError
from minkowski.basis import MinkowskiError
from oracle.decompositions import OracleError

logger = logging.getLogger(__name__)

DOMAIN_ERRORS = (ExactMathError, OPPError, CountingError, SeriesError, MinkowskiError, OracleError)

USAGE_ERROR = 2
DOMAIN_ERROR = 1


def rational_list(text):
    """argparse type for "0,1/2,3"."""
    try:
        return parse_rational_list(text)
    except ExactMathError as e:
        raise argparse.ArgumentTypeError(str(e))


def int_list(text):
    """argparse type for a comma separated chain such as "0,1,3"."""
    items = [item.strip() for item in str(text).split(',') if item.strip()]
    if not items:
        raise argparse.ArgumentTypeError(f"Empty chain: {text!r}")
    try:
        return [int(item) for item in items]
    except ValueError:
        raise argparse.ArgumentTypeError(f"Chain entries must be integers: {text!r}")


def render(payload) -> str:
    """Deterministic compact JSON."""
    return json.dumps(payload, sort_keys=True, separators=(',', ':'))


class PermutahedraCommand(BaseCommand):
    """Base class: subclasses implement compute() and return the payload."""

    requires_system_checks = []

    def create_parser(self, prog_name, subcommand, **kwargs):
        # `-v` is a weight vector in decompose and rado; --verbosity keeps working.
        kwargs.setdefault('conflict_handler', 'resolve')
        return super().create_parser(prog_name, subcommand, **kwargs)

    def compute(self, **options):
        raise NotImplementedError('subclasses of PermutahedraCommand must provide a compute() method')

    def handle(self, *args, **options):
        started = time.perf_counter()
        try:
            payload = self.compute(**options)
        except DOMAIN_ERRORS as e:
            raise CommandError(str(e), returncode=DOMAIN_ERROR) from e
        elapsed = (time.perf_counter() - started) * 1000
        logger.info(f"{self.command_name} finished in {elapsed:.1f} ms")
        if options.get('verbosity', 1) >= 2:
            self.stderr.write(f"timing_ms={elapsed:.3f}")
        if payload is not None:
            self.emit(payload)

    @property
    def command_name(self) -> str:
        return self.__module__.rsplit('.', 1)[-1]

    def emit(self, payload) -> None:
        self.stdout.write(render(payload))

    def usage_error(self, message: str) -> CommandError:
        return CommandError(message, returncode=USAGE_ERROR)

    def check_nk(self, n: int, k: int, min_k: int = 2, max_n: int = None) -> None:
        """Reject n, k outside min_k <= k <= n (and n <= max_n when given) as a usage error."""
        if n < 1 or not min_k <= k <= n:
            raise self.usage_error(f"Expected {min_k} <= k <= n, got n={n}, k={k}")
        if max_n is not None and n > max_n:
            raise self.usage_error(f"n={n} exceeds the configured limit {max_n}")

    def check_ell(self, ell: int, limit: int) -> None:
        if not 1 <= ell <= limit:
            raise self.usage_error(f"Expected 1 <= ell <= {limit}, got {ell}")
