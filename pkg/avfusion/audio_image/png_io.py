# File: avfusion/audio_image/png_io.py
# 🖼️ Lossless PNG Storage

import re
from pathlib import Path

import numpy as np
from PIL import Image, UnidentifiedImageError

from ..audio_dsp.types import FeatureKind
from ..errors import DimensionMismatch, MalformedImage
from .types import IMAGE_SIZE, AudioImage

_NAME_PATTERN = re.compile(r'^(?P<clip_id>.+)\.(?P<kind>[a-z_]+)\.png$')


def image_filename(clip_id, kind):
    """`<clip_id>.<kind>.png`"""
    return f'{clip_id}.{FeatureKind.parse(kind).value}.png'


def write_png(img: AudioImage, path):
    """Write an 8-bit RGB PNG (no alpha)."""
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    Image.fromarray(img.pixels).save(path, format='PNG')


def read_png(path, kind=None, clip_id=None) -> AudioImage:
    """Read a 224x224 RGB PNG; kind and clip id default to those encoded in the file name."""
    path = Path(path)
    try:
        with Image.open(path) as im:
            im.load()
            mode = im.mode
            size = im.size
            pixels = np.asarray(im, dtype=np.uint8).copy() if mode == 'RGB' else None
    except FileNotFoundError:
        raise
    except (OSError, UnidentifiedImageError, SyntaxError, ValueError) as e:
        raise MalformedImage(f'cannot decode {path.name}: {e}')

    if mode != 'RGB':
        raise MalformedImage('expected an 8-bit RGB image', mode=mode, path=str(path))
    if size != (IMAGE_SIZE, IMAGE_SIZE):
        raise DimensionMismatch('expected a 224x224 image', size=size, path=str(path))

    match = _NAME_PATTERN.match(path.name)
    if kind is None and match:
        try:
            kind = FeatureKind(match.group('kind'))
        except ValueError:
            kind = None
    if clip_id is None:
        clip_id = match.group('clip_id') if match else path.stem
    return AudioImage(pixels=pixels, kind=kind, clip_id=clip_id)
