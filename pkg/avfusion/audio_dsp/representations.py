# File: avfusion/audio_dsp/representations.py
# 🎧 Representation Dispatch (clip -> feature track)

from dataclasses import dataclass

from .features import chromagram, spectral_centroid, spectral_rolloff, waveplot_track
from .spectral import mel_filterbank, mfcc, mfcc_feature_scaled, stft_power
from .types import AudioClip, FeatureKind, StftConfig


@dataclass(frozen=True)
class FeatureSettings:
    """Front-end parameters shared by every representation."""

    sample_rate_hz: int = 22050
    window_len: int = 2048
    hop_len: int = 512
    window: str = 'hann'
    n_mels: int = 40
    n_coeffs: int = 20
    rolloff_fraction: float = 0.85
    tuning_a4_hz: float = 440.0
    waveplot_columns: int = 224

    @classmethod
    def from_config(cls, config):
        return cls(
            sample_rate_hz=config.SAMPLE_RATE_HZ,
            window_len=config.WINDOW_LEN,
            hop_len=config.HOP_LEN,
            window=config.WINDOW,
            n_mels=config.N_MELS,
            n_coeffs=config.N_COEFFS,
            rolloff_fraction=config.ROLLOFF_FRACTION,
            tuning_a4_hz=config.TUNING_A4_HZ,
        )

    @property
    def stft(self):
        return StftConfig(window_len=self.window_len, hop_len=self.hop_len, window=self.window)


def compute_track(clip: AudioClip, kind, settings: FeatureSettings = FeatureSettings()):
    """Compute the feature track behind one audio-image representation."""
    kind = FeatureKind.parse(kind)
    if kind is FeatureKind.WAVEPLOT:
        return waveplot_track(clip, settings.waveplot_columns)

    spec = stft_power(clip, settings.stft)
    if kind is FeatureKind.SPECTRAL_CENTROID:
        return spectral_centroid(spec)
    if kind is FeatureKind.SPECTRAL_ROLLOFF:
        return spectral_rolloff(spec, settings.rolloff_fraction)
    if kind is FeatureKind.CHROMAGRAM:
        return chromagram(spec, settings.tuning_a4_hz)

    fb = mel_filterbank(clip.sample_rate_hz, settings.window_len, settings.n_mels)
    track = mfcc(spec, fb, settings.n_coeffs)
    if kind is FeatureKind.MFCC_SCALED:
        return mfcc_feature_scaled(track)
    return track
