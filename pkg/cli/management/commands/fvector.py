"""
Management command to print the f-vector, optionally checked against the oracle.
"""
from django.conf import settings

from cli.base import PermutahedraCommand
from counting.polynomials import f_polynomial
from oracle.decompositions import FVECTOR_MAX_N, f_vector_oracle, permutahedron_family


class Command(PermutahedraCommand):
    help = 'Print the f-vector of Pi_{n-1}(k-1), improper face included'

    def add_arguments(self, parser):
        parser.add_argument('-n', '--n', type=int, required=True, help='Ambient dimension n')
        parser.add_argument('-k', '--k', type=int, required=True, help='Simplex size k (2 <= k <= n)')
        parser.add_argument(
            '--oracle',
            type=str,
            choices=['compare'],
            help='Recompute the f-vector by brute force and compare',
        )

    def compute(self, **options):
        n, k = options['n'], options['k']
        self.check_nk(n, k)
        formula = f_polynomial(n, k).to_list()
        if options['oracle'] != 'compare':
            return {'formula': formula}
        limit = min(settings.ORACLE_MAX_N, FVECTOR_MAX_N)
        if n > limit:
            raise self.usage_error(f"--oracle compare is limited to n <= {limit}, got n={n}")
        oracle = f_vector_oracle(permutahedron_family(n, k))
        return {'formula': formula, 'oracle': oracle, 'match': formula == oracle}
