# File: tests/integration/test_full_workflow.py
# 🧪 End-to-end Testing

import json

import pytest

pytestmark = [pytest.mark.integration, pytest.mark.slow]

MODEL_FILES = ('audio.model', 'video.model', 'fusion.model')


@pytest.fixture(scope='module')
def trained_runs(tmp_path_factory, synthetic_dataset):
    """Render, extract and train twice on the default synthetic dataset."""
    from click.testing import CliRunner

    from avfusion.cli import cli

    out = tmp_path_factory.mktemp('workflow')
    runner = CliRunner()

    def invoke(*args):
        result = runner.invoke(cli, ['--env', 'testing', '--jobs', '4', '--out', str(out),
                                     *[str(a) for a in args]])
        assert result.exit_code == 0, result.output
        return result

    invoke('repr', synthetic_dataset)
    invoke('extract', synthetic_dataset)
    invoke('train', synthetic_dataset, '--run-dir', out / 'run_a')
    invoke('train', synthetic_dataset, '--run-dir', out / 'run_b')
    return out


class TestFullWorkflow:
    """Test the complete synth -> repr -> extract -> train flow at default settings."""

    def test_dataset_split(self, trained_runs):
        """4 classes x 50 clips split 160 / 40."""
        report = json.loads((trained_runs / 'run_a' / 'report.json').read_text())

        assert report['train_clips'] == 160
        assert report['test_clips'] == 40
        assert report['classes'] == ['class_00', 'class_01', 'class_02', 'class_03']

    def test_fusion_beats_both_modalities(self, trained_runs):
        """Each modality alone is ambiguous; together they separate all classes."""
        accuracies = json.loads((trained_runs / 'run_a' / 'report.json').read_text())['accuracies']

        assert accuracies['fusion'] >= 0.95
        assert accuracies['fusion'] - max(accuracies['audio'], accuracies['video']) >= 0.05

    def test_transfer_identity_recorded(self, trained_runs):
        """The transferred fusion start reproduces the video model exactly."""
        report = json.loads((trained_runs / 'run_a' / 'report.json').read_text())

        assert report['transfer_identity'] is True
        assert report['fusion_init'] == 'transfer'

    def test_runs_are_byte_identical(self, trained_runs):
        """Same inputs and seed give the same report and model files."""
        run_a = trained_runs / 'run_a'
        run_b = trained_runs / 'run_b'

        for name in ('report.json', 'curves.csv', *MODEL_FILES):
            assert (run_a / name).read_bytes() == (run_b / name).read_bytes(), name


def test_sweep_report_names_both_winners(invoke, tmp_path, quick_run_file, synthetic_dataset):
    """A two-representation sweep writes per-kind runs and the comparison table."""
    result = invoke('--config', quick_run_file, '--jobs', 4, '--out', tmp_path,
                    'sweep', synthetic_dataset, '--kinds', 'mfcc,chromagram')

    assert result.exit_code == 0, result.output
    for kind in ('mfcc', 'chromagram'):
        assert (tmp_path / kind / 'report.json').is_file()
    markdown = (tmp_path / 'report.md').read_text()
    assert '| MFCCs |' in markdown
    assert '| Chromagram |' in markdown
    assert 'Best audio-only representation:' in markdown
    assert 'Best fusion representation:' in markdown
