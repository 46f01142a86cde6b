# File: avfusion/fusion/fuse.py
# 🔗 Late Fusion by Concatenation

from dataclasses import dataclass
from typing import Optional

import numpy as np

from ..embeddings.types import AUDIO_DIM, VIDEO_DIM, VIDEO_SEGMENTS, AudioEmbedding, VideoEmbedding
from ..errors import InvalidParameter, ShapeMismatch

MEAN_SEGMENTS = 'mean_segments'
FLATTEN = 'flatten'
REDUCTIONS = (MEAN_SEGMENTS, FLATTEN)


def reduced_video_dim(mode=MEAN_SEGMENTS):
    if mode == MEAN_SEGMENTS:
        return VIDEO_DIM
    if mode == FLATTEN:
        return VIDEO_SEGMENTS * VIDEO_DIM
    raise InvalidParameter('unknown video reduction', mode=mode, choices=REDUCTIONS)


def fused_dim(mode=MEAN_SEGMENTS):
    return AUDIO_DIM + reduced_video_dim(mode)


def reduce_video(emb: VideoEmbedding, mode=MEAN_SEGMENTS):
    """Collapse the 25 x 1024 segment matrix to one vector (segment mean or row-major flatten)."""
    reduced_video_dim(mode)
    if mode == MEAN_SEGMENTS:
        return emb.values.mean(axis=0)
    return emb.values.reshape(-1).copy()


@dataclass
class FusionInput:
    """Audio slice first, video slice second."""

    clip_id: str
    vector: np.ndarray
    label: Optional[int] = None

    @property
    def audio_slice(self):
        return self.vector[:AUDIO_DIM]

    @property
    def video_slice(self):
        return self.vector[AUDIO_DIM:]


def fuse(audio: AudioEmbedding, video_reduced, label=None, mode=MEAN_SEGMENTS) -> FusionInput:
    video_reduced = np.asarray(video_reduced, dtype=np.float64).reshape(-1)
    expected = reduced_video_dim(mode)
    if video_reduced.size != expected:
        raise ShapeMismatch('reduced video vector has the wrong length',
                            clip_id=audio.clip_id, size=video_reduced.size, expected=expected,
                            reduction=mode)
    vector = np.concatenate([audio.values, video_reduced])
    return FusionInput(clip_id=audio.clip_id, vector=vector, label=label)
