# File: conftest.py
# 🧪 Shared Pytest Fixtures (package tests and top-level tests)

import numpy as np
import pytest

from avfusion.audio_dsp.types import AudioClip
from avfusion.neural.model import init_model
from avfusion.neural.types import LabeledBatch
from avfusion.utils.logging_utils import configure_logging
from avfusion.utils.rng import keyed_generator


@pytest.fixture(autouse=True, scope='session')
def quiet_logging():
    """Keep structlog output down to warnings during tests."""
    configure_logging('WARNING', force=True)


@pytest.fixture
def make_tone():
    """Factory for pure sine clips."""
    def _make(freq_hz=440.0, amplitude=0.5, seconds=1.0, sample_rate_hz=22050, clip_id='tone'):
        t = np.arange(int(round(seconds * sample_rate_hz))) / sample_rate_hz
        samples = amplitude * np.sin(2.0 * np.pi * freq_hz * t)
        return AudioClip(clip_id, samples, sample_rate_hz)
    return _make


@pytest.fixture
def tone_440(make_tone):
    """One second of A4 at 22.05 kHz."""
    return make_tone(440.0)


@pytest.fixture
def silent_clip():
    """One second of digital silence."""
    return AudioClip('silence', np.zeros(22050), 22050)


@pytest.fixture
def small_model():
    """A 4-6-5-3 MLP with seeded weights."""
    return init_model((4, 6, 5, 3), seed=11)


@pytest.fixture
def small_batch():
    """Five random rows for the 4-input model."""
    rng = keyed_generator(5, 0)
    return LabeledBatch(rng.normal(size=(5, 4)), rng.integers(0, 3, size=5))


@pytest.fixture
def blobs():
    """Two linearly separable 2-D blobs, 100 points each, with a gap of 2 between them."""
    rng = keyed_generator(123, 0)
    x = rng.uniform(1.0, 5.0, size=200)
    y = rng.uniform(-2.0, 2.0, size=200)
    labels = np.repeat([0, 1], 100)
    x = np.where(labels == 0, -x, x)
    return LabeledBatch(np.stack([x, y], axis=1), labels)
