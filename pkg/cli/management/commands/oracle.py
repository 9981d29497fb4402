"""
Management command to run the brute-force face oracle.
"""
from django.conf import settings

from cli.base import PermutahedraCommand, int_list
from oracle.decompositions import (
    FLAG_MAX_N, FVECTOR_MAX_N, f_vector_oracle, flag_count_oracle, permutahedron_family,
)


class Command(PermutahedraCommand):
    help = 'Compute f-vectors or flag counts from Minkowski sums of simplices by brute force'

    def add_arguments(self, parser):
        parser.add_argument('mode', type=str, choices=['fvector', 'flags'], help='What to compute')
        parser.add_argument('-n', '--n', type=int, required=True, help='Ambient dimension n')
        parser.add_argument('-k', '--k', type=int, required=True, help='Simplex size k (2 <= k <= n)')
        parser.add_argument(
            '--chain',
            type=int_list,
            help='Face dimensions for flags, comma separated',
        )

    def compute(self, **options):
        n, k, mode = options['n'], options['k'], options['mode']
        if mode == 'fvector':
            self.check_nk(n, k, max_n=min(settings.ORACLE_MAX_N, FVECTOR_MAX_N))
            return {'oracle': f_vector_oracle(permutahedron_family(n, k))}
        self.check_nk(n, k, max_n=min(settings.ORACLE_FLAG_MAX_N, FLAG_MAX_N))
        if options['chain'] is None:
            raise self.usage_error('oracle flags requires --chain')
        chain = options['chain']
        self.check_ell(len(chain), settings.PERMUTAHEDRA_MAX_ELL)
        return {'chain': chain, 'count': flag_count_oracle(permutahedron_family(n, k), chain)}
