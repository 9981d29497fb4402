"""
Management command to count flags of faces with prescribed dimensions.
"""
from django.conf import settings

from cli.base import PermutahedraCommand, int_list
from faces.lattice import FLAG_METHODS, count_flags


class Command(PermutahedraCommand):
    help = 'Count chains of nested faces of Pi_{n-1}(k-1) with dimensions s1 <= s2 <= ...'

    def add_arguments(self, parser):
        parser.add_argument('-n', '--n', type=int, required=True, help='Ambient dimension n')
        parser.add_argument('-k', '--k', type=int, required=True, help='Simplex size k (2 <= k <= n)')
        parser.add_argument(
            '--chain',
            type=int_list,
            required=True,
            help='Face dimensions, comma separated (e.g. 0,1)',
        )
        parser.add_argument(
            '--method',
            type=str,
            choices=list(FLAG_METHODS),
            default='formula',
            help='Counting method (default: formula)',
        )

    def compute(self, **options):
        n, k, chain, method = options['n'], options['k'], options['chain'], options['method']
        self.check_nk(n, k)
        self.check_ell(len(chain), settings.PERMUTAHEDRA_MAX_ELL)
        return {
            'chain': chain,
            'count': count_flags(n, k, chain, method=method),
            'method': method,
        }
