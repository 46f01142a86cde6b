# File: avfusion/audio_dsp/types.py
# 🎧 Audio Signal Types

import enum
from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from ..errors import InvalidParameter, MalformedAudio


class FeatureKind(str, enum.Enum):
    """The six audio-image representations."""

    WAVEPLOT = 'waveplot'
    SPECTRAL_CENTROID = 'spectral_centroid'
    SPECTRAL_ROLLOFF = 'spectral_rolloff'
    MFCC = 'mfcc'
    MFCC_SCALED = 'mfcc_scaled'
    CHROMAGRAM = 'chromagram'

    @property
    def display_name(self):
        return DISPLAY_NAMES[self]

    @classmethod
    def parse(cls, value):
        if isinstance(value, cls):
            return value
        try:
            return cls(str(value).lower().replace('-', '_'))
        except ValueError:
            raise InvalidParameter(f'unknown representation {value!r}',
                                   choices=[k.value for k in cls])


# Comparison-table order
DISPLAY_NAMES = {
    FeatureKind.WAVEPLOT: 'Waveplot',
    FeatureKind.SPECTRAL_CENTROID: 'Spectral Centroids',
    FeatureKind.SPECTRAL_ROLLOFF: 'Spectral Rolloff',
    FeatureKind.MFCC: 'MFCCs',
    FeatureKind.MFCC_SCALED: 'MFCCs Feature Scaling',
    FeatureKind.CHROMAGRAM: 'Chromagram',
}

HEATMAP_KINDS = frozenset({FeatureKind.MFCC, FeatureKind.MFCC_SCALED, FeatureKind.CHROMAGRAM})
CURVE_KINDS = frozenset({FeatureKind.SPECTRAL_CENTROID, FeatureKind.SPECTRAL_ROLLOFF})


@dataclass
class AudioClip:
    """Mono PCM samples of one action instance."""

    id: str
    samples: np.ndarray
    sample_rate_hz: int

    def __post_init__(self):
        self.samples = np.asarray(self.samples, dtype=np.float64).reshape(-1)
        if self.samples.size == 0:
            raise MalformedAudio('clip has no samples', clip_id=self.id)
        if not np.all(np.isfinite(self.samples)):
            raise MalformedAudio('clip contains non-finite samples', clip_id=self.id)
        if np.any(np.abs(self.samples) > 1.0):
            raise MalformedAudio('samples outside [-1, 1]', clip_id=self.id)
        if int(self.sample_rate_hz) <= 0:
            raise InvalidParameter('sample rate must be positive',
                                   sample_rate_hz=self.sample_rate_hz)
        self.sample_rate_hz = int(self.sample_rate_hz)

    @property
    def duration_s(self):
        return self.samples.size / self.sample_rate_hz


@dataclass(frozen=True)
class StftConfig:
    window_len: int = 2048
    hop_len: int = 512
    window: str = 'hann'

    def __post_init__(self):
        if self.window_len <= 0 or self.window_len & (self.window_len - 1):
            raise InvalidParameter('window_len must be a power of two', window_len=self.window_len)
        if not 0 < self.hop_len <= self.window_len:
            raise InvalidParameter('hop_len must satisfy 0 < hop_len <= window_len',
                                   hop_len=self.hop_len, window_len=self.window_len)

    @property
    def bins(self):
        return self.window_len // 2 + 1


@dataclass
class PowerSpectrogram:
    """Linear power per frame and frequency bin."""

    values: np.ndarray
    bin_hz: float
    hop_s: float
    sample_rate_hz: int
    window_len: int

    @property
    def frames(self):
        return self.values.shape[0]

    @property
    def bins(self):
        return self.values.shape[1]

    @property
    def frequencies(self):
        return np.arange(self.bins) * self.bin_hz

    @property
    def nyquist_hz(self):
        return self.sample_rate_hz / 2.0


@dataclass
class MelFilterbank:
    weights: np.ndarray  # bins x n_mels
    fmin_hz: float
    fmax_hz: float

    @property
    def n_mels(self):
        return self.weights.shape[1]


_FIXED_DIMS = {
    FeatureKind.WAVEPLOT: 2,
    FeatureKind.SPECTRAL_CENTROID: 1,
    FeatureKind.SPECTRAL_ROLLOFF: 1,
    FeatureKind.CHROMAGRAM: 12,
}


@dataclass
class FeatureTrack:
    """A frames x dims matrix of one representation kind."""

    kind: FeatureKind
    values: np.ndarray
    sample_rate_hz: Optional[int] = None
    meta: dict = field(default_factory=dict)

    def __post_init__(self):
        self.values = np.asarray(self.values, dtype=np.float64)
        if self.values.ndim != 2:
            raise InvalidParameter('track values must be a frames x dims matrix',
                                   shape=self.values.shape)
        expected = _FIXED_DIMS.get(self.kind)
        if expected is not None and self.values.shape[1] != expected:
            raise InvalidParameter('track dims do not match kind', kind=self.kind.value,
                                   dims=self.values.shape[1], expected=expected)
        if not np.all(np.isfinite(self.values)):
            raise InvalidParameter('track contains non-finite values', kind=self.kind.value)

    @property
    def frames(self):
        return self.values.shape[0]

    @property
    def dims(self):
        return self.values.shape[1]
