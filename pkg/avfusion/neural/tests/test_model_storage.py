# File: avfusion/neural/tests/test_model_storage.py

import struct

import numpy as np
import pytest

from avfusion.errors import MalformedModel, ShapeError
from avfusion.neural.model import init_model
from avfusion.neural.storage import load_model, save_model


@pytest.fixture
def saved_model(tmp_path):
    """A segmented model written to disk."""
    model = init_model((10, 6, 3), seed=2, input_segments=(4, 6))
    path = tmp_path / 'fusion.model'
    save_model(model, path)
    return model, path


def test_model_file_restores_parameters(saved_model):
    """Weights, biases and input segments come back bit-exact."""
    model, path = saved_model
    loaded = load_model(path)

    assert loaded.layer_dims == (10, 6, 3)
    assert loaded.input_segments == (4, 6)
    for a, b in zip(model.weights + model.biases, loaded.weights + loaded.biases):
        np.testing.assert_array_equal(a, b)


def test_save_is_byte_stable(tmp_path, saved_model):
    """Saving the same model twice writes identical bytes."""
    model, path = saved_model
    other = tmp_path / 'again.model'
    save_model(model, other)

    assert other.read_bytes() == path.read_bytes()


def test_expected_dims_mismatch(saved_model):
    """A model of another architecture is rejected."""
    _, path = saved_model
    with pytest.raises(ShapeError):
        load_model(path, expected_dims=(10, 8, 3))


def test_bad_magic(saved_model):
    """Foreign files are not models."""
    _, path = saved_model
    path.write_bytes(b'XXXX' + path.read_bytes()[4:])
    with pytest.raises(MalformedModel):
        load_model(path)


def test_unknown_version(saved_model):
    """Only version 1 is understood."""
    _, path = saved_model
    data = path.read_bytes()
    path.write_bytes(data[:4] + struct.pack('<H', 2) + data[6:])
    with pytest.raises(MalformedModel):
        load_model(path)


def test_truncated(saved_model):
    """Missing parameter bytes are detected."""
    _, path = saved_model
    path.write_bytes(path.read_bytes()[:-8])
    with pytest.raises(MalformedModel):
        load_model(path)


def test_trailing_bytes(saved_model):
    """Extra bytes after the last layer are detected."""
    _, path = saved_model
    path.write_bytes(path.read_bytes() + b'\x00' * 8)
    with pytest.raises(MalformedModel):
        load_model(path)
