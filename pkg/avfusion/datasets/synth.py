# File: avfusion/datasets/synth.py
# 🗂️ Complementary Synthetic Dataset
#
# Audio tells apart the lower half of the classes and lumps the upper half together;
# video frames tell apart the upper half and lump the lower half together. Only the
# fused classifier can separate every class.

from pathlib import Path

import numpy as np
import structlog
from PIL import Image

from ..audio_dsp.wav_io import write_wav
from ..audio_image.types import IMAGE_SIZE
from ..errors import InvalidParameter
from ..utils.rng import keyed_generator
from ..utils.worker_pool import map_bounded
from .manifest import ManifestEntry, write_manifest

log = structlog.get_logger(__name__)

SAMPLE_RATE_HZ = 22050
DURATION_S = 1.0
BASE_TONE_HZ = 220.0
NOISE_STD = 0.02
FRAMES_PER_CLIP = 8
GRID = 8
CELL = IMAGE_SIZE // GRID
BACKGROUND = 64
BACKGROUND_JITTER = 20
BLOCK_LEVEL = 230
TRAIN_FRACTION = 0.8


def clip_id(label_index, i):
    return f'c{label_index:02d}_{i:04d}'


def class_label(label_index):
    return f'class_{label_index:02d}'


def tone_index(c, n_classes):
    half = n_classes // 2
    return c if c < half else half


def tone_hz(c, n_classes):
    return BASE_TONE_HZ * 2.0 ** (tone_index(c, n_classes) / 12.0)


def tone_amplitude(c, n_classes):
    half = n_classes // 2
    return 0.2 + 0.6 * tone_index(c, n_classes) / max(1, half)


def pattern_index(c, n_classes):
    """0 draws no block; the upper half of the classes get patterns 1, 2, ..."""
    half = n_classes // 2
    return 0 if c < half else c - half + 1


def pattern_cell(pattern):
    """(row, col) of the bright block on the 8x8 grid."""
    return divmod(((pattern - 1) * 9) % (GRID * GRID), GRID)


def synth_audio(c, n_classes, rng):
    n = int(round(SAMPLE_RATE_HZ * DURATION_S))
    t = np.arange(n) / SAMPLE_RATE_HZ
    tone = tone_amplitude(c, n_classes) * np.sin(2.0 * np.pi * tone_hz(c, n_classes) * t)
    return np.clip(tone + rng.normal(0.0, NOISE_STD, size=n), -1.0, 1.0)


def synth_frame(pattern, rng):
    frame = rng.integers(BACKGROUND - BACKGROUND_JITTER, BACKGROUND + BACKGROUND_JITTER + 1,
                         size=(IMAGE_SIZE, IMAGE_SIZE, 3)).astype(np.uint8)
    if pattern:
        row, col = pattern_cell(pattern)
        frame[row * CELL:(row + 1) * CELL, col * CELL:(col + 1) * CELL] = BLOCK_LEVEL
    return frame


def train_count(clips_per_class):
    """Leading clips of each class that go to the train split (at least one of each split)."""
    return min(clips_per_class - 1, max(1, int(TRAIN_FRACTION * clips_per_class)))


def _write_clip(job):
    out_dir, c, i, n_classes, clips_per_class, seed = job
    index = c * clips_per_class + i
    cid = clip_id(c, i)

    write_wav(out_dir / 'audio' / f'{cid}.wav',
              synth_audio(c, n_classes, keyed_generator(seed, 2 * index)), SAMPLE_RATE_HZ)

    frame_dir = out_dir / 'frames' / cid
    frame_dir.mkdir(parents=True, exist_ok=True)
    rng = keyed_generator(seed, 2 * index + 1)
    for k in range(FRAMES_PER_CLIP):
        frame = synth_frame(pattern_index(c, n_classes), rng)
        Image.fromarray(frame).save(frame_dir / f'frame_{k:03d}.png', format='PNG')

    split = 'train' if i < train_count(clips_per_class) else 'test'
    return ManifestEntry(cid, f'audio/{cid}.wav', f'frames/{cid}', class_label(c), split)


def synthesize(out_dir, classes=4, clips_per_class=50, seed=0, jobs=1):
    """Write WAVs, frame directories and manifest.csv; returns the manifest path."""
    if classes < 2:
        raise InvalidParameter('need at least two classes', classes=classes)
    if clips_per_class < 2:
        raise InvalidParameter('need at least two clips per class', clips_per_class=clips_per_class)

    out_dir = Path(out_dir)
    jobs_list = [(out_dir, c, i, classes, clips_per_class, seed)
                 for c in range(classes) for i in range(clips_per_class)]
    results = map_bounded(_write_clip, jobs_list, jobs)
    for result in results:
        if not result.ok:
            raise result.error

    manifest_path = out_dir / 'manifest.csv'
    write_manifest([r.value for r in results], manifest_path)
    log.info('synth_complete', out_dir=str(out_dir), classes=classes,
             clips=len(results), seed=seed)
    return manifest_path
