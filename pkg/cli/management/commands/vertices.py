"""
Management command to list the vertices of a general permutahedron.
"""
from cli.base import PermutahedraCommand
from faces.opp import vertices


class Command(PermutahedraCommand):
    help = 'List the vertices of Pi_{n-1}(k-1) as integer vectors'

    def add_arguments(self, parser):
        parser.add_argument('-n', '--n', type=int, required=True, help='Ambient dimension n')
        parser.add_argument('-k', '--k', type=int, required=True, help='Simplex size k (1 <= k <= n)')

    def compute(self, **options):
        n, k = options['n'], options['k']
        self.check_nk(n, k, min_k=1)
        return [list(vertex) for vertex in sorted(vertices(n, k))]
