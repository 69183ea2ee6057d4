"""
Tests for the bounded search, the subset oracle and the ngons commands.
"""

import csv
import io
import json
import tempfile
from pathlib import Path

import pytest
from django.core.management import call_command
from django.core.management.base import CommandError
from django.test import SimpleTestCase

from core.exceptions import PreconditionError
from core.serializers import DiophantineSetSerializer, parse_json, render_json
from kernel.geometry import QuadPoint
from kernel.sets import DiophantineSet, is_certified
from ngons.search import SearchConfig, SearchMode, brute_force_oracle, reports_match, search
from ngons.serializers import SearchReportSerializer, render_report, report_summary_csv

RECTANGLE = (QuadPoint.of(0, 0), QuadPoint.of(3, 0), QuadPoint.of(0, 4), QuadPoint.of(3, 4))


def assert_witnesses_sound(case, report):
    """Certificate, baseline and difference range of every witness."""
    for dset in report.witnesses:
        case.assertTrue(is_certified(dset))
        case.assertEqual(len(dset), report.max_n_found)
        case.assertEqual(dset.distance(0, 1), report.k)
        for v in range(2, len(dset)):
            case.assertLessEqual(abs(dset.distance(v, 0) - dset.distance(v, 1)), report.k - 1)


class SearchConfigTest(SimpleTestCase):
    """Test search configuration checks."""

    def test_frame_must_cover_baseline(self):
        """Test that M < k is rejected."""
        with self.assertRaises(PreconditionError):
            SearchConfig(k=3, max_dist=2)

    def test_k_must_be_positive(self):
        """Test that k = 0 is rejected."""
        with self.assertRaises(PreconditionError):
            SearchConfig(k=0, max_dist=5)

    def test_unknown_mode(self):
        """Test that an unknown mode is rejected."""
        with self.assertRaises(PreconditionError):
            SearchConfig(k=1, max_dist=5, mode='star')

    def test_mode_is_normalized(self):
        """Test that string modes become SearchMode members."""
        self.assertEqual(SearchConfig(k=1, max_dist=5, mode='convex').mode, SearchMode.CONVEX)


class SearchTest(SimpleTestCase):
    """Test search() on small frames."""

    def test_unit_baseline_gives_triangles(self):
        """Test that k = 1 only admits isosceles triangles."""
        report = search(SearchConfig(k=1, max_dist=10))
        self.assertEqual(report.max_n_found, 3)
        self.assertEqual(report.edge_count, 0)
        self.assertEqual(len(report.witnesses), report.apex_count)
        for dset in report.witnesses:
            self.assertEqual(dset.distance(0, 2), dset.distance(1, 2))
        assert_witnesses_sound(self, report)

    def test_unit_baseline_has_no_concave_set(self):
        """Test that concave mode at k = 1 finds nothing."""
        report = search(SearchConfig(k=1, max_dist=10, mode='concave'))
        self.assertEqual(report.max_n_found, 0)
        self.assertEqual(report.witnesses, [])
        self.assertTrue(report.consistent)

    def test_rectangle_witness(self):
        """Test that the 3-4-5 rectangle is among the k = 3 witnesses."""
        report = search(SearchConfig(k=3, max_dist=5))
        self.assertGreaterEqual(report.max_n_found, 4)
        self.assertLessEqual(report.max_n_found, 12)
        self.assertIn(RECTANGLE, [dset.points for dset in report.witnesses])
        assert_witnesses_sound(self, report)

    def test_polygon_modes(self):
        """Test every mode at k = 2 stays within the bound with sound witnesses."""
        for mode in SearchMode.values:
            report = search(SearchConfig(k=2, max_dist=12, mode=mode))
            self.assertFalse(report.exceeded)
            assert_witnesses_sound(self, report)

    def test_target_n(self):
        """Test target_n reporting."""
        report = search(SearchConfig(k=3, max_dist=5, target_n=4))
        self.assertTrue(report.target_reached)
        self.assertIsNone(search(SearchConfig(k=3, max_dist=5)).target_reached)

    def test_summary_and_scope(self):
        """Test the summary line and scope statement."""
        report = search(SearchConfig(k=1, max_dist=4))
        self.assertEqual(report.summary_line(), 'k=1 M=4 max_n=3 bound=4 consistent=true')
        self.assertIn('within distance 4', report.scope)

    def test_deterministic_and_schedule_independent(self):
        """Test that reports do not depend on reruns or worker count."""
        cfg = SearchConfig(k=3, max_dist=12)
        first = render_report(search(cfg))
        self.assertEqual(first, render_report(search(cfg)))
        self.assertEqual(first, render_report(search(cfg, workers=2)))


class OracleTest(SimpleTestCase):
    """Test the brute-force oracle against search()."""

    def test_guard(self):
        """Test that frames above the oracle limit are refused."""
        with self.assertRaises(PreconditionError):
            brute_force_oracle(SearchConfig(k=1, max_dist=13))

    def test_small_frames_agree(self):
        """Test oracle and search agreement for k = 1..3 in every mode."""
        for k in (1, 2, 3):
            for mode in SearchMode.values:
                cfg = SearchConfig(k=k, max_dist=8, mode=mode)
                self.assertEqual(reports_match(search(cfg), brute_force_oracle(cfg)), {}, (k, mode))

    def test_rendered_reports_identical(self):
        """Test that oracle and search reports render identically."""
        cfg = SearchConfig(k=3, max_dist=10)
        self.assertEqual(render_report(search(cfg)), render_report(brute_force_oracle(cfg)))


@pytest.mark.slow
class AcceptanceSearchTest(SimpleTestCase):
    """Acceptance-size frames."""

    def test_unit_baseline_sixty(self):
        """Test k = 1 over a frame of 60."""
        report = search(SearchConfig(k=1, max_dist=60))
        self.assertEqual(report.max_n_found, 3)
        assert_witnesses_sound(self, report)

    def test_rectangle_within_twenty(self):
        """Test k = 3 over a frame of 20."""
        report = search(SearchConfig(k=3, max_dist=20))
        self.assertGreaterEqual(report.max_n_found, 4)
        assert_witnesses_sound(self, report)

    def test_bound_conformance(self):
        """Test that no mode exceeds 4k at M = 30."""
        for k in (1, 2, 3):
            for mode in SearchMode.values:
                report = search(SearchConfig(k=k, max_dist=30, mode=mode))
                self.assertLessEqual(report.max_n_found, 4 * k)
                assert_witnesses_sound(self, report)

    def test_oracle_equivalence_up_to_twelve(self):
        """Test oracle and search agreement up to the oracle limit."""
        for k in (1, 2, 3):
            for max_dist in range(k, 13):
                for mode in SearchMode.values:
                    cfg = SearchConfig(k=k, max_dist=max_dist, mode=mode)
                    self.assertEqual(
                        render_report(search(cfg)), render_report(brute_force_oracle(cfg)), (k, max_dist, mode)
                    )


class SearchReportSerializerTest(SimpleTestCase):
    """Test report serialization."""

    def test_load_rendered_report(self):
        """Test that a rendered report loads back."""
        report = search(SearchConfig(k=3, max_dist=6, target_n=5))
        payload = parse_json(render_report(report))
        self.assertEqual(payload['bound_4k'], 12)
        self.assertIn('scope', payload)
        serializer = SearchReportSerializer(data=payload)
        self.assertTrue(serializer.is_valid(), serializer.errors)
        loaded = serializer.save()
        self.assertEqual(reports_match(report, loaded), {})
        self.assertEqual(loaded.target_n, 5)

    def test_witness_size_must_match(self):
        """Test that witness sizes must equal max_n_found."""
        report = search(SearchConfig(k=3, max_dist=5))
        payload = parse_json(render_report(report))
        payload['max_n_found'] = report.max_n_found + 1
        serializer = SearchReportSerializer(data=payload)
        self.assertFalse(serializer.is_valid())

    def test_summary_csv(self):
        """Test the CSV summary columns."""
        report = search(SearchConfig(k=1, max_dist=4))
        rows = list(csv.reader(io.StringIO(report_summary_csv([report]))))
        self.assertEqual(rows[0][0], 'k')
        self.assertEqual(rows[1][:3], ['1', '4', 'sets'])
        self.assertEqual(rows[1][5:8], ['3', '4', 'true'])


class SearchCommandTest(SimpleTestCase):
    """Test the search and oracle management commands."""

    def test_search_writes_report(self):
        """Test that the search command writes JSON and prints the summary."""
        with tempfile.TemporaryDirectory() as tmp:
            out = io.StringIO()
            call_command(
                'search', k=3, max_dist=5,
                out=str(Path(tmp) / 'r.json'), csv=str(Path(tmp) / 'r.csv'), stdout=out,
            )
            self.assertRegex(out.getvalue(), r'k=3 M=5 max_n=\d+ bound=12 consistent=true')
            payload = json.loads((Path(tmp) / 'r.json').read_text())
            self.assertEqual(payload['k'], 3)
            self.assertTrue((Path(tmp) / 'r.csv').exists())

    def test_frame_smaller_than_k(self):
        """Test that M < k exits with status 2."""
        with self.assertRaises(CommandError) as ctx:
            call_command('search', k=5, max_dist=3, stdout=io.StringIO())
        self.assertEqual(ctx.exception.returncode, 2)

    def test_config_file(self):
        """Test options read from a config file."""
        with tempfile.TemporaryDirectory() as tmp:
            config = Path(tmp) / 'search.conf'
            config.write_text("# unit baseline\nk=1\nmax-dist=4\nmode=convex\n")
            out = io.StringIO()
            call_command('search', config=str(config), out=str(Path(tmp) / 'r.json'), stdout=out)
            self.assertIn('k=1 M=4 max_n=3', out.getvalue())
            self.assertIn('mode=convex', out.getvalue())

    def test_oracle_compare(self):
        """Test the oracle command with --compare."""
        with tempfile.TemporaryDirectory() as tmp:
            out = io.StringIO()
            call_command(
                'oracle', k=2, max_dist=6, compare=True,
                out=str(Path(tmp) / 'o.json'), stdout=out,
            )
            self.assertIn('oracle and search reports agree', out.getvalue())

    def test_oracle_guard_is_usage_error(self):
        """Test that an oversized oracle frame exits with status 2."""
        with self.assertRaises(CommandError) as ctx:
            call_command('oracle', k=1, max_dist=13, stdout=io.StringIO())
        self.assertEqual(ctx.exception.returncode, 2)


class RenderCommandTest(SimpleTestCase):
    """Test the SVG render command."""

    def write_set(self, tmp, dset):
        path = Path(tmp) / 'set.json'
        path.write_bytes(render_json(DiophantineSetSerializer(dset).data))
        return path

    def test_rectangle_labels(self):
        """Test rectangle side labels, dashed diagonals and vertices."""
        with tempfile.TemporaryDirectory() as tmp:
            source = self.write_set(tmp, DiophantineSet.from_points(RECTANGLE))
            call_command('render', str(source), stdout=io.StringIO())
            svg = source.with_suffix('.svg').read_text()
            for length in (3, 4, 5):
                self.assertEqual(svg.count(f'>{length}</text>'), 2)
            self.assertEqual(svg.count('stroke-dasharray'), 2)
            self.assertEqual(svg.count('<circle'), 4)

    def test_deterministic(self):
        """Test that rendering is deterministic."""
        with tempfile.TemporaryDirectory() as tmp:
            source = self.write_set(tmp, DiophantineSet.from_points(RECTANGLE))
            first, second = Path(tmp) / 'a.svg', Path(tmp) / 'b.svg'
            call_command('render', str(source), out=str(first), stdout=io.StringIO())
            call_command('render', str(source), out=str(second), stdout=io.StringIO())
            self.assertEqual(first.read_bytes(), second.read_bytes())

    def test_empty_set_is_usage_error(self):
        """Test that an empty set file exits with status 2."""
        with tempfile.TemporaryDirectory() as tmp:
            source = Path(tmp) / 'empty.json'
            source.write_text('{"points": [], "distance_matrix": []}')
            with self.assertRaises(CommandError) as ctx:
                call_command('render', str(source), stdout=io.StringIO())
            self.assertEqual(ctx.exception.returncode, 2)

    def test_malformed_file(self):
        """Test that a malformed set file exits with status 2."""
        with tempfile.TemporaryDirectory() as tmp:
            source = Path(tmp) / 'bad.json'
            source.write_text('{not json')
            with self.assertRaises(CommandError) as ctx:
                call_command('render', str(source), stdout=io.StringIO())
            self.assertEqual(ctx.exception.returncode, 2)
