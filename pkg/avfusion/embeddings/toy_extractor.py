# File: avfusion/embeddings/toy_extractor.py
# 🧬 Deterministic Toy Featurizers (audio 1536, video 25x1024)

from functools import lru_cache

import numpy as np

from ..audio_image.types import IMAGE_SIZE, NormalizedTensor
from ..errors import EmptyInput
from ..utils.rng import keyed_generator
from .types import VIDEO_SEGMENTS, AudioEmbedding, Modality, ToyExtractorSpec, VideoEmbedding


@lru_cache(maxsize=16)
def projection_matrix(seed, modality, out_dim, in_dim):
    """Fixed random projection, entries uniform in [-1/sqrt(in), 1/sqrt(in)]."""
    bound = 1.0 / np.sqrt(in_dim)
    matrix = keyed_generator(seed, int(modality)).uniform(-bound, bound, size=(out_dim, in_dim))
    matrix.setflags(write=False)
    return matrix


def patch_vector(t: NormalizedTensor, grid=(8, 8)):
    """Mean over each cell of a rows x cols grid, per channel (channel-major, 192 values)."""
    rows, cols = grid
    cell_h, cell_w = IMAGE_SIZE // rows, IMAGE_SIZE // cols
    cells = t.values.reshape(3, rows, cell_h, cols, cell_w)
    return cells.mean(axis=(2, 4)).reshape(-1)


def _project(spec, modality, out_dim, features):
    matrix = projection_matrix(spec.seed, modality, out_dim, spec.patch_features)
    return np.maximum(0.0, matrix @ features)


def toy_audio_extract(t: NormalizedTensor, spec: ToyExtractorSpec = ToyExtractorSpec(),
                      clip_id='') -> AudioEmbedding:
    """Patch means -> seeded projection to 1536 -> ReLU."""
    features = patch_vector(t, spec.patch_grid)
    return AudioEmbedding(clip_id, _project(spec, Modality.AUDIO, spec.audio_dim, features))


def segment_assignment(n_frames, segments=VIDEO_SEGMENTS):
    """Segment index of each frame for equal temporal segmentation."""
    return (np.arange(n_frames) * segments) // n_frames


def toy_video_extract(frames, spec: ToyExtractorSpec = ToyExtractorSpec(),
                      clip_id='') -> VideoEmbedding:
    """Average patch vectors per temporal segment, project to 1024, ReLU.

    Segments that receive no frame copy the nearest earlier non-empty segment.
    """
    frames = list(frames)
    if not frames:
        raise EmptyInput('video needs at least one frame', clip_id=clip_id)

    patches = np.stack([patch_vector(f, spec.patch_grid) for f in frames])
    assignment = segment_assignment(len(frames))
    rows = np.empty((VIDEO_SEGMENTS, spec.video_dim))
    for segment in range(VIDEO_SEGMENTS):
        members = np.flatnonzero(assignment == segment)
        if members.size == 0:
            # segment 0 always holds frame 0
            rows[segment] = rows[segment - 1]
            continue
        # per-feature sort makes the mean independent of frame order within the segment
        mean_patch = np.sort(patches[members], axis=0).mean(axis=0)
        rows[segment] = _project(spec, Modality.VIDEO, spec.video_dim, mean_patch)
    return VideoEmbedding(clip_id, rows)
