# File: avfusion/audio_dsp/spectral.py
# 🎧 STFT, Mel Filterbank and Cepstral Features

import numpy as np
import scipy.fft
import scipy.signal

from ..errors import DegenerateFilterbank, EmptySignal, InsufficientFrames, InvalidParameter
from .types import AudioClip, FeatureKind, FeatureTrack, MelFilterbank, PowerSpectrogram, StftConfig

LOG_FLOOR = 1e-10


def stft_power(clip: AudioClip, cfg: StftConfig) -> PowerSpectrogram:
    """Power spectrogram with reflect center-padding.

    Frame t is centred on sample t * hop_len; bin k holds |DFT(window * frame_t)[k]|^2
    with the unnormalised forward DFT.
    """
    samples = clip.samples
    if samples.size < cfg.hop_len:
        raise EmptySignal('clip shorter than one hop', clip_id=clip.id,
                          samples=samples.size, hop_len=cfg.hop_len)

    pad = cfg.window_len // 2
    padded = np.pad(samples, pad, mode='reflect')
    frames = np.lib.stride_tricks.sliding_window_view(padded, cfg.window_len)[::cfg.hop_len]
    window = scipy.signal.get_window(cfg.window, cfg.window_len, fftbins=True)

    spectrum = np.fft.rfft(frames * window, axis=1)
    power = spectrum.real ** 2 + spectrum.imag ** 2

    return PowerSpectrogram(
        values=power,
        bin_hz=clip.sample_rate_hz / cfg.window_len,
        hop_s=cfg.hop_len / clip.sample_rate_hz,
        sample_rate_hz=clip.sample_rate_hz,
        window_len=cfg.window_len,
    )


def hz_to_mel(hz):
    """HTK mel scale."""
    return 2595.0 * np.log10(1.0 + np.asarray(hz, dtype=np.float64) / 700.0)


def mel_to_hz(mel):
    return 700.0 * (10.0 ** (np.asarray(mel, dtype=np.float64) / 2595.0) - 1.0)


def mel_filterbank(sample_rate_hz, window_len, n_mels, fmin_hz=0.0, fmax_hz=None) -> MelFilterbank:
    """Triangular filters with peaks equally spaced on the HTK mel scale (peak height 1)."""
    nyquist = sample_rate_hz / 2.0
    fmax_hz = nyquist if fmax_hz is None else float(fmax_hz)
    if n_mels < 1:
        raise InvalidParameter('n_mels must be positive', n_mels=n_mels)
    if not 0.0 <= fmin_hz < fmax_hz <= nyquist:
        raise InvalidParameter('require 0 <= fmin < fmax <= Nyquist',
                               fmin_hz=fmin_hz, fmax_hz=fmax_hz, nyquist_hz=nyquist)

    bin_freqs = np.arange(window_len // 2 + 1) * (sample_rate_hz / window_len)
    edges = mel_to_hz(np.linspace(hz_to_mel(fmin_hz), hz_to_mel(fmax_hz), n_mels + 2))

    lower = edges[:-2][np.newaxis, :]
    center = edges[1:-1][np.newaxis, :]
    upper = edges[2:][np.newaxis, :]
    f = bin_freqs[:, np.newaxis]

    rising = (f - lower) / (center - lower)
    falling = (upper - f) / (upper - center)
    weights = np.maximum(0.0, np.minimum(rising, falling))

    empty = np.flatnonzero(weights.max(axis=0) <= 0.0)
    if empty.size:
        raise DegenerateFilterbank('mel filters without any frequency bin',
                                   n_mels=n_mels, empty_filters=empty.tolist()[:8])
    return MelFilterbank(weights=weights, fmin_hz=float(fmin_hz), fmax_hz=fmax_hz)


def dct_ii(x, axis=-1):
    """Orthonormal DCT-II."""
    return scipy.fft.dct(np.asarray(x, dtype=np.float64), type=2, norm='ortho', axis=axis)


def inverse_dct_ii(x, axis=-1):
    return scipy.fft.idct(np.asarray(x, dtype=np.float64), type=2, norm='ortho', axis=axis)


def mfcc(spec: PowerSpectrogram, fb: MelFilterbank, n_coeffs) -> FeatureTrack:
    """DCT-II of floored natural-log mel energies, first n_coeffs kept."""
    if not 1 <= n_coeffs <= fb.n_mels:
        raise InvalidParameter('n_coeffs must be in [1, n_mels]',
                               n_coeffs=n_coeffs, n_mels=fb.n_mels)
    if fb.weights.shape[0] != spec.bins:
        raise InvalidParameter('filterbank bins do not match spectrogram',
                               filterbank_bins=fb.weights.shape[0], bins=spec.bins)

    energies = spec.values @ fb.weights
    log_energies = np.log(np.maximum(energies, LOG_FLOOR))
    coeffs = dct_ii(log_energies, axis=1)[:, :n_coeffs]
    return FeatureTrack(FeatureKind.MFCC, coeffs, sample_rate_hz=spec.sample_rate_hz)


def mfcc_feature_scaled(track: FeatureTrack) -> FeatureTrack:
    """Standardize each coefficient across frames (sample std); constant coefficients become 0."""
    if track.frames < 2:
        raise InsufficientFrames('feature scaling needs at least two frames', frames=track.frames)

    values = track.values
    mean = values.mean(axis=0)
    std = values.std(axis=0, ddof=1)
    constant = np.ptp(values, axis=0) == 0.0

    safe_std = np.where(constant, 1.0, std)
    scaled = (values - mean) / safe_std
    scaled[:, constant] = 0.0
    return FeatureTrack(FeatureKind.MFCC_SCALED, scaled, sample_rate_hz=track.sample_rate_hz)
