# File: avfusion/audio_image/__init__.py
# 🖼️ Audio-image Package

from .colormaps import COLORMAPS, GRAY, VIRIDIS, get_colormap, luminance
from .png_io import image_filename, read_png, write_png
from .render import render
from .tensor import augment, denormalize, flip_decisions, normalize
from .types import (
    IMAGE_SIZE, IMAGENET_MEAN, IMAGENET_STD, AudioImage, AugmentPolicy, Colormap, NormalizedTensor,
)

__all__ = [
    'AudioImage', 'AugmentPolicy', 'COLORMAPS', 'Colormap', 'GRAY', 'IMAGE_SIZE', 'IMAGENET_MEAN',
    'IMAGENET_STD', 'NormalizedTensor', 'VIRIDIS', 'augment', 'denormalize', 'flip_decisions',
    'get_colormap', 'image_filename', 'luminance', 'normalize', 'read_png', 'render', 'write_png',
]
