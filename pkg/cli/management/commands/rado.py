"""
Management command to test membership in P(v) with Rado's inequalities.
"""
from cli.base import PermutahedraCommand, rational_list
from minkowski.rado import RADO_METHODS, rado_membership


class Command(PermutahedraCommand):
    help = 'Check whether a point lies in the permutation polytope of v'

    def add_arguments(self, parser):
        parser.add_argument('--point', type=rational_list, required=True, help='Point t, integers or p/q')
        parser.add_argument('-v', type=rational_list, required=True, help='Weight vector v, integers or p/q')
        parser.add_argument(
            '--method',
            type=str,
            choices=list(RADO_METHODS),
            default='prefix',
            help='Inequalities to check (default: prefix)',
        )

    def compute(self, **options):
        if len(options['point']) != len(options['v']):
            raise self.usage_error(
                f"--point has {len(options['point'])} entries, -v has {len(options['v'])}"
            )
        return {
            'member': rado_membership(options['point'], options['v'], method=options['method']),
            'method': options['method'],
        }
