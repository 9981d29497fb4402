"""
Management command to print the ell-flag polynomial.
"""
from django.conf import settings

from cli.base import PermutahedraCommand
from counting.polynomials import flag_polynomial


class Command(PermutahedraCommand):
    help = 'Print the ell-flag polynomial of Pi_{n-1}(k-1) as [exponent, coefficient] rows'

    def add_arguments(self, parser):
        parser.add_argument('-n', '--n', type=int, required=True, help='Ambient dimension n')
        parser.add_argument('-k', '--k', type=int, required=True, help='Simplex size k (2 <= k <= n)')
        parser.add_argument('--ell', type=int, required=True, help='Flag length')

    def compute(self, **options):
        n, k, ell = options['n'], options['k'], options['ell']
        self.check_nk(n, k)
        self.check_ell(ell, settings.PERMUTAHEDRA_MAX_ELL)
        return {'ell': ell, 'terms': flag_polynomial(n, k, ell).to_rows()}
