"""
Management command to export the exponential flag generating function.
"""
import csv
import io

from django.conf import settings

from cli.base import PermutahedraCommand
from cli.serializers import CoefficientSerializer
from egf.flags import coefficient_rows, xi_series

CSV_HEADER = ['k', 'ell', 'deg_x', 'deg_s', 'deg_y', 'num', 'den']


class Command(PermutahedraCommand):
    help = 'Export the truncated flag series of the family Pi_{n-1}(k-1), n >= k'

    def add_arguments(self, parser):
        parser.add_argument('--k', type=int, required=True, help='Simplex size k (k = 1: standard permutahedra)')
        parser.add_argument('--ell', type=int, required=True, help='Flag length')
        parser.add_argument(
            '--dx',
            type=int,
            default=settings.EGF_DEFAULT_DX,
            help=f'Truncation degree in x (default: {settings.EGF_DEFAULT_DX})',
        )
        parser.add_argument(
            '--ds',
            type=int,
            default=settings.EGF_DEFAULT_DS,
            help=f'Truncation degree in s (default: {settings.EGF_DEFAULT_DS})',
        )
        parser.add_argument(
            '--dy',
            type=int,
            default=settings.EGF_DEFAULT_DY,
            help=f'Truncation degree in y (default: {settings.EGF_DEFAULT_DY})',
        )
        parser.add_argument(
            '--format',
            type=str,
            choices=['csv', 'json'],
            default='csv',
            help='Output format (default: csv)',
        )

    def compute(self, **options):
        k, ell = options['k'], options['ell']
        caps = [options['dx'], options['ds'], options['dy']]
        if k < 1:
            raise self.usage_error(f"Expected k >= 1, got {k}")
        if min(caps) < 0:
            raise self.usage_error(f"Caps must be nonnegative, got {caps}")
        self.check_ell(ell, settings.PERMUTAHEDRA_MAX_ELL)
        series = xi_series(k, ell, *caps)
        if options['format'] == 'json':
            coefficients = [
                {'exponent': list(exponent), 'value': value}
                for exponent, value in series.items()
            ]
            return {
                'caps': caps,
                'coefficients': CoefficientSerializer(coefficients, many=True).data,
                'ell': ell,
                'k': k,
            }
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator='\n')
        writer.writerow(CSV_HEADER)
        writer.writerows(coefficient_rows(series, k, ell))
        self.stdout.write(buffer.getvalue(), ending='')
        return None
