# File: avfusion/audio_image/tensor.py
# 🖼️ ImageNet Normalization and Flip Augmentation

import numpy as np

from ..utils.rng import keyed_generator
from .types import IMAGENET_MEAN, IMAGENET_STD, AudioImage, AugmentPolicy, NormalizedTensor


def normalize(img: AudioImage, mean=IMAGENET_MEAN, std=IMAGENET_STD) -> NormalizedTensor:
    """(pixel / 255 - mean_c) / std_c, channel-first."""
    chw = img.pixels.astype(np.float64).transpose(2, 0, 1) / 255.0
    m = np.asarray(mean, dtype=np.float64)[:, np.newaxis, np.newaxis]
    s = np.asarray(std, dtype=np.float64)[:, np.newaxis, np.newaxis]
    return NormalizedTensor(values=(chw - m) / s, mean=tuple(mean), std=tuple(std))


def denormalize(t: NormalizedTensor, kind=None, clip_id='') -> AudioImage:
    """Invert normalize, quantizing back to bytes."""
    m = np.asarray(t.mean, dtype=np.float64)[:, np.newaxis, np.newaxis]
    s = np.asarray(t.std, dtype=np.float64)[:, np.newaxis, np.newaxis]
    pixels = np.clip(np.round((t.values * s + m) * 255.0), 0, 255).astype(np.uint8)
    return AudioImage(pixels=np.ascontiguousarray(pixels.transpose(1, 2, 0)),
                      kind=kind, clip_id=clip_id)


def flip_decisions(policy: AugmentPolicy, draw_index):
    """(horizontal, vertical) flip decisions drawn from the stream keyed by (seed, draw_index)."""
    u = keyed_generator(policy.seed, draw_index).random(2)
    return bool(u[0] < policy.horizontal_flip_prob), bool(u[1] < policy.vertical_flip_prob)


def augment(t: NormalizedTensor, p: AugmentPolicy, draw_index) -> NormalizedTensor:
    """Random horizontal (time) and vertical flips, reproducible per (seed, draw_index)."""
    hflip, vflip = flip_decisions(p, draw_index)
    values = t.values
    if hflip:
        values = values[:, :, ::-1]
    if vflip:
        values = values[:, ::-1, :]
    return NormalizedTensor(values=np.ascontiguousarray(values), mean=t.mean, std=t.std)
