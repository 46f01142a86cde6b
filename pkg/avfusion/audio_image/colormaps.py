# File: avfusion/audio_image/colormaps.py
# 🎨 Built-in Colormap Tables

import numpy as np

from ..errors import InvalidParameter
from .types import Colormap

# Anchor colours sampled from viridis at 0, 1/8, ..., 1
_VIRIDIS_ANCHORS = np.array([
    [68, 1, 84],
    [71, 44, 122],
    [59, 82, 139],
    [44, 113, 142],
    [33, 145, 140],
    [39, 173, 129],
    [92, 200, 99],
    [170, 220, 50],
    [253, 231, 37],
], dtype=np.float64)


def luminance(rgb):
    """Rec. 601 luma of RGB values (any leading shape)."""
    rgb = np.asarray(rgb, dtype=np.float64)
    return rgb[..., 0] * 0.299 + rgb[..., 1] * 0.587 + rgb[..., 2] * 0.114


def _interpolated_lut(anchors):
    """Linear interpolation between anchors, rounded, then made non-decreasing in luma.

    Rounding three channels can dip the luma of an entry below its predecessor; such entries
    get their green channel raised until the order holds.
    """
    positions = np.linspace(0.0, 1.0, anchors.shape[0])
    samples = np.linspace(0.0, 1.0, 256)
    channels = [np.interp(samples, positions, anchors[:, c]) for c in range(3)]
    lut = np.round(np.stack(channels, axis=1)).astype(np.int64)
    for i in range(1, lut.shape[0]):
        while luminance(lut[i]) < luminance(lut[i - 1]) and lut[i, 1] < 255:
            lut[i, 1] += 1
        if luminance(lut[i]) < luminance(lut[i - 1]):
            lut[i] = lut[i - 1]
    return lut.astype(np.uint8)


VIRIDIS = Colormap('viridis', _interpolated_lut(_VIRIDIS_ANCHORS))
GRAY = Colormap('gray', np.repeat(np.arange(256, dtype=np.uint8)[:, np.newaxis], 3, axis=1))

COLORMAPS = {cmap.name: cmap for cmap in (VIRIDIS, GRAY)}


def get_colormap(name='viridis'):
    try:
        return COLORMAPS[name]
    except KeyError:
        raise InvalidParameter(f'unknown colormap {name!r}', choices=sorted(COLORMAPS))
