# File: avfusion/audio_image/tests/test_image_io.py

import numpy as np
import pytest
from PIL import Image

from avfusion.audio_dsp.types import FeatureKind
from avfusion.audio_image.png_io import image_filename, read_png, write_png
from avfusion.audio_image.tensor import augment, denormalize, flip_decisions, normalize
from avfusion.audio_image.types import AudioImage, AugmentPolicy, NormalizedTensor
from avfusion.errors import DimensionMismatch, InvalidParameter, MalformedImage
from avfusion.utils.rng import keyed_generator


@pytest.fixture
def random_image():
    """A noisy 224x224 RGB audio-image."""
    pixels = keyed_generator(8, 0).integers(0, 256, size=(224, 224, 3)).astype(np.uint8)
    return AudioImage(pixels, FeatureKind.MFCC, 'clip_a')


class TestPng:
    """Test lossless PNG storage."""

    def test_file_name_encodes_clip_and_kind(self):
        """`<clip_id>.<kind>.png`"""
        assert image_filename('v_001', 'MFCC') == 'v_001.mfcc.png'

    def test_pixels_survive_storage(self, tmp_path, random_image):
        """PNG is lossless and the name carries kind and clip id."""
        path = tmp_path / image_filename('clip_a', FeatureKind.MFCC)
        write_png(random_image, path)
        loaded = read_png(path)

        np.testing.assert_array_equal(loaded.pixels, random_image.pixels)
        assert loaded.kind is FeatureKind.MFCC
        assert loaded.clip_id == 'clip_a'

    def test_rejects_wrong_size(self, tmp_path):
        """Only 224x224 images are accepted."""
        path = tmp_path / 'small.mfcc.png'
        Image.fromarray(np.zeros((100, 224, 3), dtype=np.uint8)).save(path)
        with pytest.raises(DimensionMismatch):
            read_png(path)

    def test_rejects_grayscale(self, tmp_path):
        """Single-channel images are not audio-images."""
        path = tmp_path / 'gray.mfcc.png'
        Image.fromarray(np.zeros((224, 224), dtype=np.uint8)).save(path)
        with pytest.raises(MalformedImage):
            read_png(path)

    def test_rejects_garbage(self, tmp_path):
        """Undecodable bytes raise MalformedImage."""
        path = tmp_path / 'junk.mfcc.png'
        path.write_bytes(b'not a png at all')
        with pytest.raises(MalformedImage):
            read_png(path)

    def test_image_shape_contract(self):
        """AudioImage enforces 224x224x3 uint8."""
        with pytest.raises(DimensionMismatch):
            AudioImage(np.zeros((224, 224, 4), dtype=np.uint8))
        with pytest.raises(InvalidParameter):
            AudioImage(np.zeros((224, 224, 3), dtype=np.float32))


class TestTensor:
    """Test normalization and flip augmentation."""

    def test_normalize_known_pixel(self):
        """A white pixel maps to (1 - mean_c) / std_c in each channel."""
        img = AudioImage(np.full((224, 224, 3), 255, dtype=np.uint8))
        t = normalize(img)

        assert t.values.shape == (3, 224, 224)
        assert t.values[0, 0, 0] == pytest.approx((1 - 0.485) / 0.229)
        assert t.values[2, 10, 10] == pytest.approx((1 - 0.406) / 0.225)

    def test_denormalize_recovers_pixels(self, random_image):
        """Quantizing the normalized tensor returns the original bytes."""
        np.testing.assert_array_equal(denormalize(normalize(random_image)).pixels,
                                      random_image.pixels)

    def test_zero_probability_never_flips(self, random_image):
        """A policy with zero probabilities is the identity."""
        t = normalize(random_image)
        out = augment(t, AugmentPolicy(0.0, 0.0, seed=1), draw_index=3)

        np.testing.assert_array_equal(out.values, t.values)

    def test_certain_flips(self, random_image):
        """Probability 1 flips time (columns) and rows."""
        t = normalize(random_image)

        hflipped = augment(t, AugmentPolicy(1.0, 0.0), draw_index=0)
        np.testing.assert_array_equal(hflipped.values, t.values[:, :, ::-1])

        vflipped = augment(t, AugmentPolicy(0.0, 1.0), draw_index=0)
        np.testing.assert_array_equal(vflipped.values, t.values[:, ::-1, :])

    def test_decisions_are_reproducible(self):
        """The same (seed, draw index) always makes the same decision."""
        policy = AugmentPolicy(0.5, 0.5, seed=17)
        first = [flip_decisions(policy, i) for i in range(50)]
        second = [flip_decisions(policy, i) for i in range(50)]

        assert first == second
        assert len(set(first)) > 1

    def test_policy_validation(self):
        """Probabilities outside [0, 1] are rejected."""
        with pytest.raises(InvalidParameter):
            AugmentPolicy(horizontal_flip_prob=1.5)

    def test_tensor_shape_contract(self):
        """Tensors are channel-first 3x224x224."""
        with pytest.raises(DimensionMismatch):
            NormalizedTensor(np.zeros((224, 224, 3)))
