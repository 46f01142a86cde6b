# File: avfusion/datasets/stages.py
# 🗂️ Per-clip Dataset Stages: audio-image rendering and embedding extraction

from dataclasses import dataclass, field
from pathlib import Path
from typing import List

import structlog

from ..audio_dsp.representations import FeatureSettings, compute_track
from ..audio_dsp.types import FeatureKind
from ..audio_dsp.wav_io import read_wav
from ..audio_image.colormaps import VIRIDIS
from ..audio_image.png_io import image_filename, read_png, write_png
from ..audio_image.render import render
from ..audio_image.tensor import augment, normalize
from ..audio_image.types import AugmentPolicy
from ..embeddings.storage import import_embeddings_csv, load_embedding_index, write_embeddings
from ..embeddings.toy_extractor import toy_audio_extract, toy_video_extract
from ..embeddings.types import Modality, ToyExtractorSpec, VideoEmbedding
from ..errors import MissingInput
from ..utils.worker_pool import map_bounded

log = structlog.get_logger(__name__)

AUDIO_FILE = 'audio.emb'
VIDEO_FILE = 'video.emb'


@dataclass
class StageSummary:
    """Files written by a stage plus the clips that failed."""

    written: List[Path] = field(default_factory=list)
    failures: list = field(default_factory=list)

    @property
    def ok(self):
        return not self.failures


def _log_failures(results, stage):
    failures = []
    for result in results:
        if not result.ok:
            log.error('clip_failed', stage=stage, clip_id=result.item.clip_id,
                      error=type(result.error).__name__, detail=str(result.error))
            failures.append((result.item.clip_id, result.error))
    return failures


def render_representations(manifest, kind, out_dir, settings=FeatureSettings(), cmap=VIRIDIS,
                           jobs=1) -> StageSummary:
    """Render one `<clip_id>.<kind>.png` per manifest entry; failing clips are collected."""
    kind = FeatureKind.parse(kind)
    out_dir = Path(out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)

    def render_clip(entry):
        clip = read_wav(manifest.resolve(entry.audio_path), settings.sample_rate_hz,
                        clip_id=entry.clip_id)
        image = render(compute_track(clip, kind, settings), cmap, clip_id=entry.clip_id)
        path = out_dir / image_filename(entry.clip_id, kind)
        write_png(image, path)
        return path

    results = map_bounded(render_clip, manifest.entries, jobs)
    summary = StageSummary(written=[r.value for r in results if r.ok],
                           failures=_log_failures(results, 'repr'))
    log.info('repr_complete', kind=kind.value, written=len(summary.written),
             failed=len(summary.failures))
    return summary


def frame_paths(frames_dir):
    return sorted(Path(frames_dir).glob('*.png'))


def check_inputs(manifest, kind, image_dir):
    """Fail fast on the first clip whose audio-image or video source is missing."""
    kind = FeatureKind.parse(kind)
    for entry in manifest.entries:
        image = Path(image_dir) / image_filename(entry.clip_id, kind)
        if not image.is_file():
            raise MissingInput(entry.clip_id, image)
        reference = entry.video_reference
        if reference is not None:
            source = manifest.resolve(reference[0])
            if not source.is_file():
                raise MissingInput(entry.clip_id, source)
        elif not frame_paths(manifest.resolve(entry.video_source)):
            raise MissingInput(entry.clip_id, manifest.resolve(entry.video_source))


class _PrecomputedVideo:
    """Lazily loaded embedding files referenced by manifest video sources."""

    def __init__(self, manifest):
        self.manifest = manifest
        self.indexes = {}

    def load_all(self, entries):
        for entry in entries:
            reference = entry.video_reference
            if reference is None:
                continue
            path = self.manifest.resolve(reference[0])
            if path in self.indexes:
                continue
            if path.suffix.lower() == '.csv':
                records = import_embeddings_csv(path, Modality.VIDEO)
                self.indexes[path] = {r.clip_id: r for r in records}
            else:
                self.indexes[path] = load_embedding_index(path)

    def lookup(self, entry):
        file_name, ref = entry.video_reference
        path = self.manifest.resolve(file_name)
        record = self.indexes[path].get(ref)
        if not isinstance(record, VideoEmbedding):
            raise MissingInput(entry.clip_id, f'{path}#{ref}')
        return VideoEmbedding(entry.clip_id, record.values)


def extract_embeddings(manifest, kind, image_dir, out_dir, spec=ToyExtractorSpec(),
                       policy: AugmentPolicy = None, jobs=1) -> StageSummary:
    """Write audio.emb and video.emb for every manifest entry.

    Train-split audio tensors are flipped per `policy` (draw index = manifest position).
    Video sources that reference embedding files are copied through unchanged.
    """
    kind = FeatureKind.parse(kind)
    check_inputs(manifest, kind, image_dir)
    precomputed = _PrecomputedVideo(manifest)
    precomputed.load_all(manifest.entries)
    positions = {entry.clip_id: i for i, entry in enumerate(manifest.entries)}

    def extract_clip(entry):
        tensor = normalize(read_png(Path(image_dir) / image_filename(entry.clip_id, kind)))
        if policy is not None and entry.split == 'train':
            tensor = augment(tensor, policy, positions[entry.clip_id])
        audio = toy_audio_extract(tensor, spec, clip_id=entry.clip_id)

        if entry.video_reference is not None:
            video = precomputed.lookup(entry)
        else:
            frames = [normalize(read_png(p)) for p in
                      frame_paths(manifest.resolve(entry.video_source))]
            video = toy_video_extract(frames, spec, clip_id=entry.clip_id)
        return audio, video

    results = map_bounded(extract_clip, manifest.entries, jobs)
    summary = StageSummary(failures=_log_failures(results, 'extract'))
    if not summary.ok:
        return summary

    out_dir = Path(out_dir)
    write_embeddings([r.value[0] for r in results], out_dir / AUDIO_FILE, Modality.AUDIO)
    write_embeddings([r.value[1] for r in results], out_dir / VIDEO_FILE, Modality.VIDEO)
    summary.written = [out_dir / AUDIO_FILE, out_dir / VIDEO_FILE]
    log.info('extract_complete', kind=kind.value, clips=len(results), seed=spec.seed)
    return summary
