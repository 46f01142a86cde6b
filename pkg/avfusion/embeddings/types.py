# File: avfusion/embeddings/types.py
# 🧬 Embedding Types and Shape Contracts

import enum
from dataclasses import dataclass
from typing import Tuple

import numpy as np

from ..errors import InvalidParameter, ShapeMismatch

AUDIO_DIM = 1536
VIDEO_SEGMENTS = 25
VIDEO_DIM = 1024
PATCH_GRID = (8, 8)


class Modality(enum.IntEnum):
    AUDIO = 0
    VIDEO = 1

    @property
    def shape(self):
        return (1, AUDIO_DIM) if self is Modality.AUDIO else (VIDEO_SEGMENTS, VIDEO_DIM)


def _checked(values, shape, clip_id, modality):
    values = np.asarray(values, dtype=np.float64)
    if values.shape != shape:
        raise ShapeMismatch(f'{modality} embedding must have shape {shape}',
                            clip_id=clip_id, shape=values.shape)
    if not np.all(np.isfinite(values)):
        raise ShapeMismatch(f'{modality} embedding contains non-finite values', clip_id=clip_id)
    return values


@dataclass
class AudioEmbedding:
    clip_id: str
    values: np.ndarray  # (1536,)

    modality = Modality.AUDIO

    def __post_init__(self):
        self.values = _checked(self.values, (AUDIO_DIM,), self.clip_id, 'audio')

    def as_matrix(self):
        return self.values.reshape(1, AUDIO_DIM)


@dataclass
class VideoEmbedding:
    clip_id: str
    values: np.ndarray  # (25, 1024)

    modality = Modality.VIDEO

    def __post_init__(self):
        self.values = _checked(self.values, (VIDEO_SEGMENTS, VIDEO_DIM), self.clip_id, 'video')

    def as_matrix(self):
        return self.values


RECORD_TYPES = {Modality.AUDIO: AudioEmbedding, Modality.VIDEO: VideoEmbedding}


def make_record(modality, clip_id, matrix):
    """Build the typed record for a modality from a rows x cols matrix."""
    modality = Modality(modality)
    if modality is Modality.AUDIO:
        return AudioEmbedding(clip_id, np.asarray(matrix).reshape(-1))
    return VideoEmbedding(clip_id, matrix)


@dataclass(frozen=True)
class ToyExtractorSpec:
    """Seeded stand-in for the frozen backbones; projections depend only on the seed."""

    seed: int = 7
    patch_grid: Tuple[int, int] = PATCH_GRID
    audio_dim: int = AUDIO_DIM
    video_dim: int = VIDEO_DIM

    def __post_init__(self):
        if tuple(self.patch_grid) != PATCH_GRID:
            raise InvalidParameter('patch grid is fixed at 8x8', patch_grid=self.patch_grid)

    @property
    def patch_features(self):
        return 3 * self.patch_grid[0] * self.patch_grid[1]
