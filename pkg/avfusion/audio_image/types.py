# File: avfusion/audio_image/types.py
# 🖼️ Audio-image Types

from dataclasses import dataclass
from typing import Optional, Tuple

import numpy as np

from ..audio_dsp.types import FeatureKind
from ..errors import DimensionMismatch, InvalidParameter

IMAGE_SIZE = 224
CHANNELS = 3
IMAGENET_MEAN = (0.485, 0.456, 0.406)
IMAGENET_STD = (0.229, 0.224, 0.225)


@dataclass
class AudioImage:
    """A 224x224 RGB rendering (row-major, uint8)."""

    pixels: np.ndarray
    kind: Optional[FeatureKind] = None
    clip_id: str = ''

    def __post_init__(self):
        self.pixels = np.asarray(self.pixels)
        if self.pixels.shape != (IMAGE_SIZE, IMAGE_SIZE, CHANNELS):
            raise DimensionMismatch('audio images must be 224x224x3', shape=self.pixels.shape)
        if self.pixels.dtype != np.uint8:
            raise InvalidParameter('pixels must be uint8', dtype=str(self.pixels.dtype))

    @property
    def width(self):
        return IMAGE_SIZE

    @property
    def height(self):
        return IMAGE_SIZE

    @property
    def channels(self):
        return CHANNELS


@dataclass(frozen=True, eq=False)
class Colormap:
    name: str
    lut: np.ndarray  # 256 x 3 uint8

    def __post_init__(self):
        if self.lut.shape != (256, 3):
            raise InvalidParameter('colormap LUT must hold 256 RGB entries', shape=self.lut.shape)


@dataclass
class NormalizedTensor:
    """Channel-first float tensor with the normalization constants that produced it."""

    values: np.ndarray  # 3 x 224 x 224
    mean: Tuple[float, float, float] = IMAGENET_MEAN
    std: Tuple[float, float, float] = IMAGENET_STD

    def __post_init__(self):
        self.values = np.asarray(self.values, dtype=np.float64)
        if self.values.shape != (CHANNELS, IMAGE_SIZE, IMAGE_SIZE):
            raise DimensionMismatch('normalized tensors must be 3x224x224', shape=self.values.shape)


@dataclass(frozen=True)
class AugmentPolicy:
    horizontal_flip_prob: float = 0.0
    vertical_flip_prob: float = 0.0
    seed: int = 0

    def __post_init__(self):
        for name in ('horizontal_flip_prob', 'vertical_flip_prob'):
            value = getattr(self, name)
            if not 0.0 <= value <= 1.0:
                raise InvalidParameter('flip probability must be in [0, 1]', **{name: value})
