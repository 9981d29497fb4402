"""
Management command to decompose P(v) over the Minkowski basis of general permutahedra.
"""
from django.core.management.base import CommandError

from cli.base import DOMAIN_ERROR, PermutahedraCommand, rational_list
from cli.serializers import DecompositionSerializer
from minkowski.basis import Infeasible, decompose


class Command(PermutahedraCommand):
    help = 'Write P(v) as a nonnegative combination of the general permutahedra, or give a witness'

    def add_arguments(self, parser):
        parser.add_argument(
            '-v',
            type=rational_list,
            required=True,
            help='Weight vector sorted ascending, integers or p/q (e.g. 0,1,2,2)',
        )
        parser.add_argument(
            '--strict',
            action='store_true',
            help='Exit with status 1 when no decomposition exists',
        )

    def compute(self, **options):
        result = decompose(options['v'])
        payload = DecompositionSerializer(result).data
        if options['strict'] and isinstance(result, Infeasible):
            self.emit(payload)
            raise CommandError(
                f"Delta^{result.order}(v) is negative at index {result.index}",
                returncode=DOMAIN_ERROR,
            )
        return payload
