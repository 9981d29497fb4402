"""
Management command to list or count faces as ordered pseudo-partitions.
"""
from cli.base import PermutahedraCommand
from cli.serializers import OPPSerializer
from faces.lattice import enumerate_faces


class Command(PermutahedraCommand):
    help = 'List the faces of Pi_{n-1}(k-1) as ordered pseudo-partitions'

    def add_arguments(self, parser):
        parser.add_argument('-n', '--n', type=int, required=True, help='Ambient dimension n')
        parser.add_argument('-k', '--k', type=int, required=True, help='Simplex size k (2 <= k <= n)')
        parser.add_argument(
            '--dim',
            type=int,
            help='Only faces of this dimension',
        )
        parser.add_argument(
            '--count',
            action='store_true',
            help='Print the number of faces instead of the list',
        )

    def compute(self, **options):
        n, k, dim = options['n'], options['k'], options['dim']
        self.check_nk(n, k)
        if dim is not None and not 0 <= dim <= n - 1:
            raise self.usage_error(f"Expected 0 <= dim <= {n - 1}, got {dim}")
        found = list(enumerate_faces(n, k, dim_filter=dim))
        if options['count']:
            return {'count': len(found)}
        return OPPSerializer(found, many=True).data
