# File: avfusion/audio_dsp/tests/test_features.py

import numpy as np
import pytest

from avfusion.audio_dsp.features import (
    PITCH_CLASSES, chroma_map, chromagram, spectral_centroid, spectral_rolloff, waveplot_track,
)
from avfusion.audio_dsp.representations import FeatureSettings, compute_track
from avfusion.audio_dsp.spectral import stft_power
from avfusion.audio_dsp.types import (
    AudioClip, FeatureKind, FeatureTrack, PowerSpectrogram, StftConfig,
)
from avfusion.errors import InvalidParameter
from avfusion.utils.rng import keyed_generator


@pytest.fixture
def tone_spec(tone_440):
    """Power spectrogram of the A4 tone at window 2048, hop 512."""
    return stft_power(tone_440, StftConfig())


class TestSpectralDescriptors:
    """Test centroid, rolloff and chromagram on a pure tone."""

    def test_centroid_near_tone(self, tone_spec):
        """Interior frames sit within one bin of 440 Hz."""
        centroid = spectral_centroid(tone_spec).values[4:-4, 0]

        assert np.all(np.abs(centroid - 440.0) <= tone_spec.bin_hz)

    def test_rolloff_is_tone_bin(self, tone_spec):
        """85% of the power is reached at the tone's bin (41)."""
        rolloff = spectral_rolloff(tone_spec).values[4:-4, 0]

        np.testing.assert_allclose(rolloff, 41 * tone_spec.bin_hz)

    def test_rolloff_fraction_validation(self, tone_spec):
        """The fraction must lie in (0, 1]."""
        with pytest.raises(InvalidParameter):
            spectral_rolloff(tone_spec, fraction=0.0)
        with pytest.raises(InvalidParameter):
            spectral_rolloff(tone_spec, fraction=1.5)

    def test_chromagram_peaks_at_a(self, tone_spec):
        """The strongest pitch class of A4 is A, and each frame is max-normalized."""
        chroma = chromagram(tone_spec).values

        assert chroma.shape == (tone_spec.frames, 12)
        assert PITCH_CLASSES[int(np.argmax(chroma.mean(axis=0)))] == 'A'
        np.testing.assert_allclose(chroma.max(axis=1), 1.0)
        assert chroma.min() >= 0.0

    def test_chroma_map_skips_dc(self):
        """Bin 0 maps to no pitch class; every other bin maps to exactly one."""
        mapping = chroma_map(1025, 22050 / 2048)

        assert mapping[0].sum() == 0.0
        np.testing.assert_array_equal(mapping[1:].sum(axis=1), 1.0)
        assert mapping[41, PITCH_CLASSES.index('A')] == 1.0

    def test_silence_reports_zeros(self, silent_clip):
        """Silent frames give 0 Hz centroid and rolloff and an all-zero chroma."""
        spec = stft_power(silent_clip, StftConfig())

        np.testing.assert_array_equal(spectral_centroid(spec).values, 0.0)
        np.testing.assert_array_equal(spectral_rolloff(spec).values, 0.0)
        np.testing.assert_array_equal(chromagram(spec).values, 0.0)

    def test_centroid_of_two_equal_tones(self, make_tone):
        """Two bin-centred tones of equal level put the centroid halfway between them."""
        bin_hz = 22050 / 2048
        pair = make_tone(40 * bin_hz, amplitude=0.4).samples + \
            make_tone(120 * bin_hz, amplitude=0.4).samples
        spec = stft_power(AudioClip('pair', pair, 22050), StftConfig())
        centroid = spectral_centroid(spec).values[4:-4, 0]

        np.testing.assert_allclose(centroid, 80 * bin_hz, rtol=1e-9)

    def test_centroid_within_nyquist(self):
        """Noise keeps every centroid between 0 Hz and Nyquist."""
        noise = keyed_generator(12, 0).uniform(-1, 1, size=22050)
        spec = stft_power(AudioClip('noise', noise, 22050), StftConfig())
        centroid = spectral_centroid(spec).values[:, 0]

        assert np.all(centroid >= 0.0)
        assert np.all(centroid <= spec.nyquist_hz)

    def test_rolloff_grows_with_fraction(self):
        """A larger fraction never lowers the rolloff frequency."""
        noise = keyed_generator(12, 1).uniform(-1, 1, size=22050)
        spec = stft_power(AudioClip('noise', noise, 22050), StftConfig())
        rolloffs = np.stack([spectral_rolloff(spec, fraction=f).values[:, 0]
                             for f in np.linspace(0.1, 1.0, 10)])

        assert np.all(np.diff(rolloffs, axis=0) >= 0.0)

    def test_full_rolloff_is_highest_nonzero_bin(self):
        """At fraction 1.0 the rolloff is the last bin carrying power."""
        values = np.zeros((3, 9))
        values[0, [1, 4]] = 1.0
        values[1, 2:7] = 0.5
        values[2, 8] = 2.0
        spec = PowerSpectrogram(values, bin_hz=10.0, hop_s=0.01, sample_rate_hz=160,
                                window_len=16)

        np.testing.assert_array_equal(spectral_rolloff(spec, fraction=1.0).values[:, 0],
                                      [40.0, 60.0, 80.0])

    def test_middle_c_is_pitch_class_c(self, make_tone):
        """A 261.63 Hz tone folds mostly into C."""
        spec = stft_power(make_tone(261.63), StftConfig())
        chroma = chromagram(spec).values

        assert PITCH_CLASSES[int(np.argmax(chroma.mean(axis=0)))] == 'C'


class TestWaveplot:
    """Test the per-column amplitude envelope."""

    def test_envelope_bounds(self, tone_440):
        """224 (min, max) pairs bracketing the tone amplitude."""
        track = waveplot_track(tone_440)

        assert track.values.shape == (224, 2)
        assert np.all(track.values[:, 0] <= track.values[:, 1])
        assert track.values[:, 1].max() == pytest.approx(0.5, abs=1e-3)
        assert track.values[:, 0].min() == pytest.approx(-0.5, abs=1e-3)

    def test_fewer_samples_than_columns(self):
        """Very short clips still yield one pair per column."""
        clip = AudioClip('tiny', np.linspace(-0.5, 0.5, 100), 22050)
        track = waveplot_track(clip)

        assert track.frames == 224
        assert np.all(track.values[:, 0] <= track.values[:, 1])


class TestComputeTrack:
    """Test representation dispatch."""

    @pytest.mark.parametrize('kind, dims', [
        ('waveplot', 2),
        ('spectral_centroid', 1),
        ('spectral_rolloff', 1),
        ('mfcc', 20),
        ('mfcc_scaled', 20),
        ('chromagram', 12),
    ])
    def test_dims_per_kind(self, tone_440, kind, dims):
        """Each kind produces its fixed feature width."""
        track = compute_track(tone_440, kind, FeatureSettings())

        assert track.kind is FeatureKind(kind)
        assert track.dims == dims

    def test_unknown_kind(self, tone_440):
        """Names outside the six representations are rejected."""
        with pytest.raises(InvalidParameter):
            compute_track(tone_440, 'spectrogram_3d')

    def test_kind_parsing_is_lenient(self):
        """Case and dashes do not matter."""
        assert FeatureKind.parse('Spectral-Rolloff') is FeatureKind.SPECTRAL_ROLLOFF
        assert FeatureKind.MFCC_SCALED.display_name == 'MFCCs Feature Scaling'

    def test_track_rejects_wrong_width(self):
        """Fixed-width kinds check their column count."""
        with pytest.raises(InvalidParameter):
            FeatureTrack(FeatureKind.CHROMAGRAM, np.zeros((5, 11)))
