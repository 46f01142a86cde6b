# File: avfusion/audio_image/render.py
# 🖼️ Feature Track Rendering

import numpy as np

from ..audio_dsp.types import CURVE_KINDS, HEATMAP_KINDS, FeatureKind, FeatureTrack
from ..errors import EmptyTrack, InvalidParameter
from .colormaps import VIRIDIS
from .types import IMAGE_SIZE, AudioImage, Colormap

_LAST = IMAGE_SIZE - 1


def column_frames(frames, columns=IMAGE_SIZE):
    """Nearest-frame index shown in each image column."""
    return (np.arange(columns) * frames) // columns


def scale_min_max(values):
    """Map values to [0, 1] by their own range; a constant range maps to 0."""
    vmin = values.min()
    vmax = values.max()
    if vmax == vmin:
        return np.zeros_like(values, dtype=np.float64)
    return (values - vmin) / (vmax - vmin)


def lut_indices(scaled):
    return np.clip(np.round(scaled * 255.0), 0, 255).astype(np.int64)


def _render_heatmap(track, cmap):
    cols = column_frames(track.frames)
    # row 0 shows the highest feature index
    rows = track.dims - 1 - (np.arange(IMAGE_SIZE) * track.dims) // IMAGE_SIZE
    indices = lut_indices(scale_min_max(track.values))
    return cmap.lut[indices[cols][:, rows].T]


def _amplitude_row(amplitude):
    amplitude = np.clip(amplitude, -1.0, 1.0)
    return np.round((1.0 - amplitude) / 2.0 * _LAST).astype(np.int64)


def _render_waveplot(track, cmap):
    cols = column_frames(track.frames)
    top = _amplitude_row(track.values[cols, 1])
    bottom = _amplitude_row(track.values[cols, 0])
    rows = np.arange(IMAGE_SIZE)[:, np.newaxis]
    mask = (rows >= top[np.newaxis, :]) & (rows <= bottom[np.newaxis, :])

    pixels = np.zeros((IMAGE_SIZE, IMAGE_SIZE, 3), dtype=np.uint8)
    pixels[mask] = cmap.lut[128]
    return pixels


def _render_curve(track, cmap):
    if not track.sample_rate_hz:
        raise InvalidParameter('curve tracks need a sample rate for the Nyquist axis',
                               kind=track.kind.value)
    nyquist = track.sample_rate_hz / 2.0
    cols = column_frames(track.frames)
    hz = track.values[cols, 0]
    y = np.round((1.0 - np.clip(hz / nyquist, 0.0, 1.0)) * _LAST).astype(np.int64)

    previous = np.concatenate([y[:1], y[:-1]])
    lo = np.minimum(previous, y)
    # 2-px stroke
    hi = np.minimum(np.maximum(previous, y) + 1, _LAST)
    rows = np.arange(IMAGE_SIZE)[:, np.newaxis]
    mask = (rows >= lo[np.newaxis, :]) & (rows <= hi[np.newaxis, :])

    pixels = np.zeros((IMAGE_SIZE, IMAGE_SIZE, 3), dtype=np.uint8)
    pixels[mask] = cmap.lut[255]
    return pixels


def render(track: FeatureTrack, cmap: Colormap = VIRIDIS, clip_id='') -> AudioImage:
    """Render a feature track into a chrome-free 224x224 RGB audio-image."""
    if track.frames == 0 or track.dims == 0:
        raise EmptyTrack('cannot render an empty track', kind=track.kind.value)

    if track.kind is FeatureKind.WAVEPLOT:
        pixels = _render_waveplot(track, cmap)
    elif track.kind in HEATMAP_KINDS:
        pixels = _render_heatmap(track, cmap)
    elif track.kind in CURVE_KINDS:
        pixels = _render_curve(track, cmap)
    else:
        raise InvalidParameter('no renderer for track kind', kind=str(track.kind))

    return AudioImage(pixels=np.ascontiguousarray(pixels, dtype=np.uint8),
                      kind=track.kind, clip_id=clip_id)
