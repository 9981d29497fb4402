"""
Management command to read one flag count off the generating function.
"""
from django.conf import settings

from cli.base import PermutahedraCommand, int_list
from egf.flags import extract_flag_count, xi_series


class Command(PermutahedraCommand):
    help = 'Extract the s-flag count of Pi_{n-1}(k-1) from its exponential generating function'

    def add_arguments(self, parser):
        parser.add_argument('--k', type=int, required=True, help='Simplex size k')
        parser.add_argument('--n', type=int, required=True, help='Family member n')
        parser.add_argument(
            '--chain',
            type=int_list,
            required=True,
            help='Face dimensions, comma separated (e.g. 0,1)',
        )
        parser.add_argument('--ell', type=int, help='Flag length (default: length of --chain)')
        parser.add_argument('--dx', type=int, help='Truncation degree in x (default: large enough for the chain)')
        parser.add_argument('--ds', type=int, help='Truncation degree in s (default: large enough for the chain)')
        parser.add_argument('--dy', type=int, help='Truncation degree in y (default: large enough for n)')

    def compute(self, **options):
        k, n, chain = options['k'], options['n'], options['chain']
        ell = options['ell'] if options['ell'] is not None else len(chain)
        self.check_nk(n, k, min_k=1)
        self.check_ell(ell, settings.PERMUTAHEDRA_MAX_ELL)
        dx = options['dx'] if options['dx'] is not None else max(settings.EGF_DEFAULT_DX, chain[0])
        ds = options['ds'] if options['ds'] is not None else max(settings.EGF_DEFAULT_DS, chain[-1] - chain[0])
        dy = options['dy'] if options['dy'] is not None else max(settings.EGF_DEFAULT_DY, n)
        series = xi_series(k, ell, dx, ds, dy)
        return {
            'chain': chain,
            'count': extract_flag_count(series, n, chain, ell=ell),
            'k': k,
            'n': n,
        }
