"""
Management command to move between y- and z-descriptions of a subset collection.
"""
import json
from pathlib import Path

from cli.base import PermutahedraCommand
from cli.serializers import SubsetCollectionSerializer
from minkowski.subsets import is_symmetric, mobius, zeta

DIRECTIONS = {
    'y2z': zeta,
    'z2y': mobius,
}


class Command(PermutahedraCommand):
    help = 'Apply the zeta (y2z) or Moebius (z2y) transform of the subset lattice'

    def add_arguments(self, parser):
        parser.add_argument(
            '--direction',
            type=str,
            choices=list(DIRECTIONS),
            required=True,
            help='y2z sums over subsets, z2y inverts that sum',
        )
        source = parser.add_mutually_exclusive_group(required=True)
        source.add_argument('--file', type=str, help='Path to a JSON subset collection')
        source.add_argument('--json', type=str, help='JSON subset collection given inline')

    def _load(self, options):
        if options['file']:
            path = Path(options['file'])
            if not path.is_file():
                raise self.usage_error(f"File not found: {path}")
            text = path.read_text()
        else:
            text = options['json']
        try:
            return json.loads(text)
        except json.JSONDecodeError as e:
            raise self.usage_error(f"Invalid JSON: {e}")

    def compute(self, **options):
        serializer = SubsetCollectionSerializer(data=self._load(options))
        if not serializer.is_valid():
            raise self.usage_error(f"Invalid subset collection: {json.dumps(serializer.errors, sort_keys=True)}")
        result = DIRECTIONS[options['direction']](serializer.validated_data['collection'])
        return {
            'collection': SubsetCollectionSerializer(result).data,
            'direction': options['direction'],
            'nonnegative': result.is_nonnegative(),
            'symmetric': is_symmetric(result),
        }
