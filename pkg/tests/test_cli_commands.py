"""
Tests for CLI management commands.
"""
import json
import os
import tempfile
from io import StringIO

from django.core.management import call_command
from django.core.management.base import CommandError
from django.test import SimpleTestCase, override_settings

from cli.runner import CommandResult, run, subcommands


def call_json(*args):
    out = StringIO()
    call_command(*args, stdout=out)
    return json.loads(out.getvalue())


class VerticesCommandTest(SimpleTestCase):
    """Tests for vertices command."""

    def test_vertex_list(self):
        """Test that vertices -n 4 -k 3 lists 12 integer vectors."""
        payload = call_json('vertices', '-n', '4', '-k', '3')
        self.assertEqual(len(payload), 12)
        self.assertEqual(payload[0], [0, 0, 1, 3])
        self.assertIn([3, 1, 0, 0], payload)

    def test_simplex_vertices(self):
        """Test the k = n case."""
        self.assertEqual(call_json('vertices', '-n', '3', '-k', '3'), [[0, 0, 1], [0, 1, 0], [1, 0, 0]])

    def test_k_above_n_is_usage_error(self):
        """Test that k > n raises a usage error."""
        with self.assertRaises(CommandError) as ctx:
            call_command('vertices', '-n', '3', '-k', '4', stdout=StringIO())
        self.assertEqual(ctx.exception.returncode, 2)


class FacesCommandTest(SimpleTestCase):
    """Tests for faces command."""

    def test_hexagon_face_count(self):
        """Test counting every face of the hexagon."""
        self.assertEqual(call_json('faces', '-n', '3', '-k', '2', '--count'), {'count': 13})

    def test_count_by_dimension(self):
        """Test --dim together with --count."""
        self.assertEqual(call_json('faces', '-n', '4', '-k', '3', '--dim', '1', '--count'), {'count': 18})

    def test_face_list(self):
        """Test the serialized pseudo-partitions."""
        payload = call_json('faces', '-n', '3', '-k', '3', '--dim', '2')
        self.assertEqual(payload, [{'Z': [], 'parts': [[1, 2, 3]], 'dim': 2, 'improper': True}])

    def test_dim_out_of_range(self):
        """Test that a dimension above n - 1 is rejected."""
        with self.assertRaises(CommandError) as ctx:
            call_command('faces', '-n', '3', '-k', '2', '--dim', '3', stdout=StringIO())
        self.assertEqual(ctx.exception.returncode, 2)


class FlagsCommandTest(SimpleTestCase):
    """Tests for flags command."""

    def test_vertex_edge_flags(self):
        """Test vertex-edge incidences of the hexagon with both methods."""
        payload = call_json('flags', '-n', '3', '-k', '2', '--chain', '0,1', '--method', 'both')
        self.assertEqual(payload, {'chain': [0, 1], 'count': 12, 'method': 'both'})

    def test_non_monotone_chain_is_domain_error(self):
        """Test that a decreasing chain exits with status 1."""
        with self.assertRaises(CommandError) as ctx:
            call_command('flags', '-n', '3', '-k', '2', '--chain', '1,0', stdout=StringIO())
        self.assertEqual(ctx.exception.returncode, 1)

    @override_settings(PERMUTAHEDRA_MAX_ELL=1)
    def test_chain_longer_than_configured_limit(self):
        """Test that PERMUTAHEDRA_MAX_ELL bounds the chain length."""
        with self.assertRaises(CommandError) as ctx:
            call_command('flags', '-n', '3', '-k', '2', '--chain', '0,1', stdout=StringIO())
        self.assertEqual(ctx.exception.returncode, 2)


class FvectorCommandTest(SimpleTestCase):
    """Tests for fvector command."""

    def test_formula_only(self):
        """Test the f-vector of Pi_3(2)."""
        self.assertEqual(call_json('fvector', '-n', '4', '-k', '3'), {'formula': [12, 18, 8, 1]})

    def test_oracle_compare(self):
        """Test --oracle compare on Pi_3(2)."""
        payload = call_json('fvector', '-n', '4', '-k', '3', '--oracle', 'compare')
        self.assertEqual(payload, {'formula': [12, 18, 8, 1], 'oracle': [12, 18, 8, 1], 'match': True})

    @override_settings(ORACLE_MAX_N=3)
    def test_oracle_size_guard(self):
        """Test that ORACLE_MAX_N limits --oracle compare."""
        with self.assertRaises(CommandError) as ctx:
            call_command('fvector', '-n', '4', '-k', '3', '--oracle', 'compare', stdout=StringIO())
        self.assertEqual(ctx.exception.returncode, 2)

    @override_settings(ORACLE_MAX_N=10)
    def test_raised_guard_keeps_library_limit(self):
        """Test that ORACLE_MAX_N above the oracle limit still gives a usage error."""
        with self.assertRaises(CommandError) as ctx:
            call_command('fvector', '-n', '8', '-k', '2', '--oracle', 'compare', stdout=StringIO())
        self.assertEqual(ctx.exception.returncode, 2)


class FlagpolyCommandTest(SimpleTestCase):
    """Tests for flagpoly command."""

    def test_single_flag_polynomial_is_f_vector(self):
        """Test that ell = 1 gives the f-vector rows."""
        payload = call_json('flagpoly', '-n', '3', '-k', '2', '--ell', '1')
        self.assertEqual(payload, {'ell': 1, 'terms': [[[0], 6], [[1], 6], [[2], 1]]})


class EgfCommandTest(SimpleTestCase):
    """Tests for egf command."""

    def test_csv_export(self):
        """Test the CSV header and rows."""
        out = StringIO()
        call_command('egf', '--k', '2', '--ell', '1', '--dx', '2', '--ds', '0', '--dy', '2', stdout=out)
        self.assertEqual(
            out.getvalue(),
            'k,ell,deg_x,deg_s,deg_y,num,den\n2,1,0,0,2,1,2\n2,1,1,0,2,1,2\n',
        )

    def test_json_export(self):
        """Test the JSON export keeps rationals as strings."""
        payload = call_json(
            'egf', '--k', '2', '--ell', '1', '--dx', '2', '--ds', '0', '--dy', '2', '--format', 'json',
        )
        self.assertEqual(payload['caps'], [2, 0, 2])
        self.assertEqual(
            payload['coefficients'],
            [{'exponent': [0, 0, 2], 'value': '1/2'}, {'exponent': [1, 0, 2], 'value': '1/2'}],
        )


class ExtractCommandTest(SimpleTestCase):
    """Tests for extract command."""

    def test_extract_matches_flags(self):
        """Test that the series gives the hexagon's vertex-edge flags."""
        payload = call_json('extract', '--k', '2', '--n', '3', '--chain', '0,1', '--dx', '3', '--ds', '2', '--dy', '4')
        self.assertEqual(payload, {'chain': [0, 1], 'count': 12, 'k': 2, 'n': 3})

    def test_small_caps_are_domain_error(self):
        """Test that a coefficient beyond the caps exits with status 1."""
        with self.assertRaises(CommandError) as ctx:
            call_command('extract', '--k', '2', '--n', '5', '--chain', '0,1', '--dy', '4', stdout=StringIO())
        self.assertEqual(ctx.exception.returncode, 1)


class DecomposeCommandTest(SimpleTestCase):
    """Tests for decompose command."""

    def test_infeasible_witness(self):
        """Test the (0,1,2,2) witness."""
        out = StringIO()
        call_command('decompose', '-v', '0,1,2,2', stdout=out)
        self.assertEqual(out.getvalue().strip(), '{"feasible":false,"witness":{"index":1,"order":2}}')

    def test_feasible(self):
        """Test a standard permutahedron weight vector."""
        self.assertEqual(call_json('decompose', '-v', '0,1,2,3'), {'feasible': True, 'y': ['0', '1', '0', '0']})

    def test_rational_input(self):
        """Test p/q entries."""
        self.assertEqual(call_json('decompose', '-v', '1/2,1'), {'feasible': True, 'y': ['1/2', '1/2']})

    def test_strict_exits_with_domain_error(self):
        """Test that --strict turns an infeasible result into status 1."""
        out = StringIO()
        with self.assertRaises(CommandError) as ctx:
            call_command('decompose', '-v', '0,1,2,2', '--strict', stdout=out)
        self.assertEqual(ctx.exception.returncode, 1)
        self.assertFalse(json.loads(out.getvalue())['feasible'])


class MobiusCommandTest(SimpleTestCase):
    """Tests for mobius command."""

    collection = {
        'n': 2,
        'entries': [{'subset': [1], 'value': '1/2'}, {'subset': [1, 2], 'value': 1}],
    }

    def test_zeta_direction(self):
        """Test y2z on an inline collection."""
        payload = call_json('mobius', '--direction', 'y2z', '--json', json.dumps(self.collection))
        self.assertEqual(
            payload['collection'],
            {'n': 2, 'entries': [{'subset': [1], 'value': '1/2'}, {'subset': [1, 2], 'value': '3/2'}]},
        )
        self.assertTrue(payload['nonnegative'])
        self.assertFalse(payload['symmetric'])

    def test_file_roundtrip(self):
        """Test z2y undoes y2z, reading from a file."""
        forward = call_json('mobius', '--direction', 'y2z', '--json', json.dumps(self.collection))
        with tempfile.NamedTemporaryFile('w', suffix='.json', delete=False) as handle:
            json.dump(forward['collection'], handle)
        try:
            back = call_json('mobius', '--direction', 'z2y', '--file', handle.name)
        finally:
            os.unlink(handle.name)
        self.assertEqual(
            back['collection'],
            {'n': 2, 'entries': [{'subset': [1], 'value': '1/2'}, {'subset': [1, 2], 'value': '1'}]},
        )

    def test_invalid_collection(self):
        """Test that an element outside [n] is a usage error."""
        bad = {'n': 2, 'entries': [{'subset': [3], 'value': 1}]}
        with self.assertRaises(CommandError) as ctx:
            call_command('mobius', '--direction', 'y2z', '--json', json.dumps(bad), stdout=StringIO())
        self.assertEqual(ctx.exception.returncode, 2)

    def test_decimal_value_rejected(self):
        """Test that decimal notation is not accepted as a rational."""
        bad = {'n': 1, 'entries': [{'subset': [1], 'value': '0.5'}]}
        with self.assertRaises(CommandError) as ctx:
            call_command('mobius', '--direction', 'y2z', '--json', json.dumps(bad), stdout=StringIO())
        self.assertEqual(ctx.exception.returncode, 2)


class RadoCommandTest(SimpleTestCase):
    """Tests for rado command."""

    def test_member(self):
        """Test the midpoint of a segment."""
        payload = call_json('rado', '--point', '1,1', '-v', '0,2', '--method', 'both')
        self.assertEqual(payload, {'member': True, 'method': 'both'})

    def test_non_member(self):
        """Test a point outside the segment."""
        self.assertFalse(call_json('rado', '--point', '3,-1', '-v', '0,2')['member'])

    def test_length_mismatch(self):
        """Test that vectors of different length are a usage error."""
        with self.assertRaises(CommandError) as ctx:
            call_command('rado', '--point', '1,1,1', '-v', '0,2', stdout=StringIO())
        self.assertEqual(ctx.exception.returncode, 2)


class OracleCommandTest(SimpleTestCase):
    """Tests for oracle command."""

    def test_fvector(self):
        """Test the oracle f-vector of a triangle."""
        self.assertEqual(call_json('oracle', 'fvector', '-n', '3', '-k', '3'), {'oracle': [3, 3, 1]})

    def test_flags(self):
        """Test the oracle flag count of the hexagon."""
        payload = call_json('oracle', 'flags', '-n', '3', '-k', '2', '--chain', '0,1')
        self.assertEqual(payload, {'chain': [0, 1], 'count': 12})

    def test_flags_requires_chain(self):
        """Test that oracle flags without --chain is a usage error."""
        with self.assertRaises(CommandError) as ctx:
            call_command('oracle', 'flags', '-n', '3', '-k', '2', stdout=StringIO())
        self.assertEqual(ctx.exception.returncode, 2)

    @override_settings(ORACLE_FLAG_MAX_N=9)
    def test_raised_flag_guard_keeps_library_limit(self):
        """Test that ORACLE_FLAG_MAX_N above the oracle limit still gives a usage error."""
        with self.assertRaises(CommandError) as ctx:
            call_command('oracle', 'flags', '-n', '7', '-k', '6', '--chain', '0', stdout=StringIO())
        self.assertEqual(ctx.exception.returncode, 2)


class RunnerTest(SimpleTestCase):
    """Tests for the in-process runner."""

    def test_subcommands(self):
        """Test that every subcommand is registered."""
        self.assertEqual(
            list(subcommands()),
            ['decompose', 'egf', 'extract', 'faces', 'flagpoly', 'flags', 'fvector', 'mobius', 'oracle',
             'rado', 'vertices'],
        )

    def test_ok_result(self):
        """Test a successful run."""
        result = run(['fvector', '-n', '4', '-k', '3'])
        self.assertIsInstance(result, CommandResult)
        self.assertEqual(result.exit_code, 0)
        self.assertEqual(result.to_dict()['status'], 'ok')
        self.assertEqual(result.payload, {'formula': [12, 18, 8, 1]})
        self.assertGreaterEqual(result.timing_ms, 0)

    def test_deterministic_payload(self):
        """Test that identical argv gives identical payloads."""
        first = run(['faces', '-n', '4', '-k', '2', '--dim', '1'])
        second = run(['faces', '-n', '4', '-k', '2', '--dim', '1'])
        self.assertEqual(first.payload, second.payload)

    def test_argparse_error_exits_with_2(self):
        """Test that a malformed integer is a usage error."""
        self.assertEqual(run(['vertices', '-n', 'four', '-k', '3']).exit_code, 2)

    def test_malformed_rational_exits_with_2(self):
        """Test that a decimal vector entry is a usage error."""
        self.assertEqual(run(['decompose', '-v', '0,0.5']).exit_code, 2)

    def test_unknown_subcommand_exits_with_2(self):
        """Test that an unknown subcommand is a usage error."""
        result = run(['polytope'])
        self.assertEqual(result.exit_code, 2)
        self.assertEqual(result.status, 'error')

    def test_strict_decompose_exits_with_1(self):
        """Test that an infeasible --strict decompose is a domain error with its payload kept."""
        result = run(['decompose', '-v', '0,1,2,2', '--strict'])
        self.assertEqual(result.exit_code, 1)
        self.assertEqual(result.payload, {'feasible': False, 'witness': {'order': 2, 'index': 1}})
        self.assertIn('CommandError', result.stderr)

    def test_csv_payload_is_text(self):
        """Test that CSV output is returned verbatim."""
        result = run(['egf', '--k', '2', '--ell', '1', '--dx', '2', '--ds', '0', '--dy', '2'])
        self.assertTrue(result.payload.startswith('k,ell,deg_x,deg_s,deg_y,num,den'))
