# File: avfusion/audio_dsp/__init__.py
# 🎧 Audio Signal Processing Package

from .features import chromagram, spectral_centroid, spectral_rolloff, waveplot_track
from .representations import FeatureSettings, compute_track
from .spectral import (
    dct_ii, hz_to_mel, inverse_dct_ii, mel_filterbank, mel_to_hz, mfcc, mfcc_feature_scaled,
    stft_power,
)
from .types import (
    AudioClip, FeatureKind, FeatureTrack, MelFilterbank, PowerSpectrogram, StftConfig,
)
from .wav_io import read_wav, resample_linear, write_wav

__all__ = [
    'AudioClip', 'FeatureKind', 'FeatureSettings', 'FeatureTrack', 'MelFilterbank',
    'PowerSpectrogram', 'StftConfig', 'chromagram', 'compute_track', 'dct_ii', 'hz_to_mel',
    'inverse_dct_ii', 'mel_filterbank', 'mel_to_hz', 'mfcc', 'mfcc_feature_scaled', 'read_wav',
    'resample_linear', 'spectral_centroid', 'spectral_rolloff', 'stft_power', 'waveplot_track',
    'write_wav',
]
