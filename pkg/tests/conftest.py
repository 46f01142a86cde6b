# File: tests/conftest.py
# 🧪 Pytest Fixtures for CLI and Workflow Tests

import json

import pytest
from click.testing import CliRunner

from avfusion import create_context
from avfusion.cli import cli


@pytest.fixture
def runner():
    """Create test CLI runner."""
    return CliRunner()


@pytest.fixture
def invoke(runner):
    """Run the avfusion CLI under the testing settings profile."""
    def _invoke(*args):
        return runner.invoke(cli, ['--env', 'testing', *[str(a) for a in args]])
    return _invoke


@pytest.fixture
def context():
    """Pipeline context built from the testing profile."""
    return create_context('testing')


@pytest.fixture
def quick_run_file(tmp_path):
    """Run file with tiny networks and few epochs."""
    path = tmp_path / 'quick.json'
    path.write_text(json.dumps({
        'HIDDEN_DIMS': [8],
        'AUDIO_EPOCHS': 2,
        'VIDEO_EPOCHS': 2,
        'FUSION_EPOCHS': 2,
        'FUSION_BATCH_SIZE': 8,
    }))
    return path


@pytest.fixture(scope='session')
def synthetic_dataset(tmp_path_factory):
    """Default-size synthetic dataset (4 classes x 50 clips), built once."""
    from avfusion.datasets.synth import synthesize

    out = tmp_path_factory.mktemp('synthetic')
    return synthesize(out, classes=4, clips_per_class=50, seed=0, jobs=4)
