# File: avfusion/audio_dsp/features.py
# 🎧 Per-frame Spectral Descriptors and Waveform Envelope

import numpy as np

from ..errors import InvalidParameter
from .types import AudioClip, FeatureKind, FeatureTrack, PowerSpectrogram

SILENCE_POWER = 1e-12
PITCH_CLASSES = ('C', 'C#', 'D', 'D#', 'E', 'F', 'F#', 'G', 'G#', 'A', 'A#', 'B')


def spectral_centroid(spec: PowerSpectrogram) -> FeatureTrack:
    """Power-weighted mean frequency per frame; silent frames report 0 Hz."""
    power = spec.values
    total = power.sum(axis=1)
    weighted = power @ spec.frequencies
    silent = total < SILENCE_POWER
    centroid = np.where(silent, 0.0, weighted / np.where(silent, 1.0, total))
    return FeatureTrack(FeatureKind.SPECTRAL_CENTROID, centroid[:, np.newaxis],
                        sample_rate_hz=spec.sample_rate_hz)


def spectral_rolloff(spec: PowerSpectrogram, fraction=0.85) -> FeatureTrack:
    """Lowest bin frequency whose cumulative power reaches fraction of the frame total."""
    if not 0.0 < fraction <= 1.0:
        raise InvalidParameter('rolloff fraction must be in (0, 1]', fraction=fraction)

    cumulative = np.cumsum(spec.values, axis=1)
    total = cumulative[:, -1]
    reached = cumulative >= (fraction * total)[:, np.newaxis]
    rolloff = spec.frequencies[np.argmax(reached, axis=1)]
    rolloff = np.where(total < SILENCE_POWER, 0.0, rolloff)
    return FeatureTrack(FeatureKind.SPECTRAL_ROLLOFF, rolloff[:, np.newaxis],
                        sample_rate_hz=spec.sample_rate_hz)


def chroma_map(n_bins, bin_hz, tuning_a4_hz=440.0):
    """bins x 12 one-hot matrix assigning each bin to its nearest semitone's pitch class.

    The DC bin has no pitch and maps nowhere.
    """
    freqs = np.arange(n_bins) * bin_hz
    mapping = np.zeros((n_bins, 12))
    voiced = freqs > 0.0
    midi = 69.0 + 12.0 * np.log2(freqs[voiced] / tuning_a4_hz)
    pitch_class = np.mod(np.round(midi).astype(np.int64), 12)
    mapping[np.flatnonzero(voiced), pitch_class] = 1.0
    return mapping


def chromagram(spec: PowerSpectrogram, tuning_a4_hz=440.0) -> FeatureTrack:
    """Fold bin power into 12 pitch classes (index 0 = C), max-normalized per frame."""
    if tuning_a4_hz <= 0:
        raise InvalidParameter('tuning must be positive', tuning_a4_hz=tuning_a4_hz)

    chroma = spec.values @ chroma_map(spec.bins, spec.bin_hz, tuning_a4_hz)
    peak = chroma.max(axis=1, keepdims=True)
    silent = spec.values.sum(axis=1, keepdims=True) < SILENCE_POWER
    silent |= peak <= 0.0
    chroma = np.where(silent, 0.0, chroma / np.where(silent, 1.0, peak))
    return FeatureTrack(FeatureKind.CHROMAGRAM, chroma, sample_rate_hz=spec.sample_rate_hz)


def waveplot_track(clip: AudioClip, columns=224) -> FeatureTrack:
    """Per-column (min, max) amplitude over spans partitioning the samples."""
    if columns < 1:
        raise InvalidParameter('columns must be at least 1', columns=columns)

    samples = clip.samples
    n = samples.size
    starts = (np.arange(columns) * n) // columns
    # an empty span (more columns than samples) reuses the sample at its start
    starts = np.minimum(starts, n - 1)
    lows = np.minimum.reduceat(samples, starts)
    highs = np.maximum.reduceat(samples, starts)
    return FeatureTrack(FeatureKind.WAVEPLOT, np.stack([lows, highs], axis=1),
                        sample_rate_hz=clip.sample_rate_hz)
