# File: avfusion/fusion/pipeline.py
# 🔗 Audio -> Video -> Fusion Training Pipeline

import csv
import json
from dataclasses import dataclass, field
from pathlib import Path
from typing import Dict, List, Optional

import numpy as np
import structlog

from ..datasets.stages import AUDIO_FILE, VIDEO_FILE
from ..embeddings.storage import load_embedding_index
from ..embeddings.types import AUDIO_DIM, AudioEmbedding, VideoEmbedding
from ..errors import ManifestError, MissingModality, MissingReport
from ..neural.model import MlpModel, forward, init_model
from ..neural.storage import load_model, save_model
from ..neural.training import evaluate, train
from ..neural.types import PHASES, EpochMetrics, LabeledBatch, TrainConfig
from ..serializers import RunReportSchema
from .fuse import fuse, reduce_video, reduced_video_dim
from .transfer import FRESH, TransferReport, fresh_init, transfer_init

log = structlog.get_logger(__name__)

REPORT_FILE = 'report.json'
CURVES_FILE = 'curves.csv'
MODEL_FILES = {phase: f'{phase}.model' for phase in PHASES}


@dataclass
class ClipSample:
    clip_id: str
    label: int
    split: str
    audio: AudioEmbedding
    video: VideoEmbedding


@dataclass
class PhaseReport:
    phase: str
    layer_dims: List[int]
    train: TrainConfig
    test_accuracy: float
    train_accuracy: Optional[float] = None
    final_loss: Optional[float] = None
    peak_epoch: Optional[int] = None


@dataclass
class RunReport:
    """Test accuracies of the three classifiers plus everything needed to rerun them."""

    representation: Optional[str]
    classes: List[str]
    train_clips: int
    test_clips: int
    seed: int
    extractor_seed: Optional[int]
    hidden_dims: List[int]
    reduction: str
    fusion_init: str
    accuracies: Dict[str, float]
    phases: Dict[str, PhaseReport]
    transfer: TransferReport
    transfer_identity: Optional[bool] = None


@dataclass
class RunResult:
    report: RunReport
    models: Dict[str, MlpModel]
    curves: Dict[str, List[EpochMetrics]] = field(default_factory=dict)


def peak_epoch(metrics):
    """First epoch at which train accuracy reaches its maximum."""
    if not metrics:
        return None
    best = max(m.accuracy for m in metrics)
    return next(m.epoch for m in metrics if m.accuracy == best)


def assemble_samples(manifest, audio_index, video_index) -> List[ClipSample]:
    """Pair every manifest clip with both embeddings; the first gap raises MissingModality."""
    classes = manifest.classes
    samples = []
    for entry in manifest.entries:
        audio = audio_index.get(entry.clip_id)
        if not isinstance(audio, AudioEmbedding):
            raise MissingModality(entry.clip_id, 'audio')
        video = video_index.get(entry.clip_id)
        if not isinstance(video, VideoEmbedding):
            raise MissingModality(entry.clip_id, 'video')
        samples.append(ClipSample(entry.clip_id, classes.index(entry.label), entry.split,
                                  audio, video))
    return samples


class _Matrices:
    """Per-split design matrices for the three classifiers."""

    def __init__(self, samples, reduction):
        reduced = [reduce_video(s.video, reduction) for s in samples]
        fused = [fuse(s.audio, v, s.label, reduction).vector for s, v in zip(samples, reduced)]
        labels = np.array([s.label for s in samples], dtype=np.int64)
        self.inputs = {
            'audio': np.stack([s.audio.values for s in samples]),
            'video': np.stack(reduced),
            'fusion': np.stack(fused),
        }
        self.masks = {name: np.array([s.split == name for s in samples])
                      for name in ('train', 'test')}
        self.labels = labels

    def batch(self, phase, split):
        mask = self.masks[split]
        return LabeledBatch(self.inputs[phase][mask], self.labels[mask])


def transfer_identity_holds(fusion_model, video_model, video_inputs):
    """forward_fusion(0_audio | v) bit-equals forward_video(v) for every row v."""
    video_inputs = np.ascontiguousarray(video_inputs, dtype=np.float64)
    audio_width = fusion_model.d_in - video_model.d_in
    zero_audio = np.zeros((video_inputs.shape[0], audio_width))
    fused = np.concatenate([zero_audio, video_inputs], axis=1)
    return bool(np.array_equal(forward(fusion_model, fused), forward(video_model, video_inputs)))


def run_pipeline(manifest, audio_index, video_index, run_cfg) -> RunResult:
    """Train audio and video MLPs, initialise the fusion MLP from the video one, fine-tune it.

    All inputs are resolved before the first epoch runs.
    """
    manifest.validate_for_training()
    samples = assemble_samples(manifest, audio_index, video_index)
    classes = manifest.classes
    n_classes = len(classes)
    data = _Matrices(samples, run_cfg.reduction)
    hidden = tuple(run_cfg.hidden_dims)
    video_dim = reduced_video_dim(run_cfg.reduction)
    dims = {
        'audio': (AUDIO_DIM, *hidden, n_classes),
        'video': (video_dim, *hidden, n_classes),
        'fusion': (AUDIO_DIM + video_dim, *hidden, n_classes),
    }

    models, curves, phases, accuracies = {}, {}, {}, {}

    def run_phase(phase, start):
        cfg = run_cfg.phase(phase)
        model, metrics = train(start, data.batch(phase, 'train'), cfg, phase=phase)
        accuracy = evaluate(model, data.batch(phase, 'test'))
        models[phase], curves[phase], accuracies[phase] = model, metrics, accuracy
        phases[phase] = PhaseReport(
            phase=phase,
            layer_dims=list(dims[phase]),
            train=cfg,
            test_accuracy=accuracy,
            train_accuracy=metrics[-1].accuracy if metrics else None,
            final_loss=metrics[-1].loss if metrics else None,
            peak_epoch=peak_epoch(metrics),
        )
        log.info('phase_complete', phase=phase, test_accuracy=accuracy)

    run_phase('audio', init_model(dims['audio'], run_cfg.audio.seed))
    run_phase('video', init_model(dims['video'], run_cfg.video.seed))

    segments = (AUDIO_DIM, video_dim)
    identity = None
    if run_cfg.fusion_init == FRESH:
        start, transfer = fresh_init(dims['fusion'], run_cfg.fusion.seed, segments)
    else:
        start, transfer = transfer_init(models['video'], dims['fusion'], run_cfg.fusion.seed)
        identity = transfer_identity_holds(start, models['video'], data.inputs['video'])
        if not identity:
            log.warning('transfer_identity_failed')
    run_phase('fusion', start)

    report = RunReport(
        representation=run_cfg.representation.value if run_cfg.representation else None,
        classes=classes,
        train_clips=int(data.masks['train'].sum()),
        test_clips=int(data.masks['test'].sum()),
        seed=run_cfg.seed,
        extractor_seed=run_cfg.extractor_seed,
        hidden_dims=list(hidden),
        reduction=run_cfg.reduction,
        fusion_init=run_cfg.fusion_init,
        accuracies=accuracies,
        phases=phases,
        transfer=transfer,
        transfer_identity=identity,
    )
    return RunResult(report=report, models=models, curves=curves)


def report_to_json(report: RunReport):
    return json.dumps(RunReportSchema().dump(report), indent=2, sort_keys=True) + '\n'


def write_curves(curves, path):
    with open(path, 'w', newline='', encoding='utf-8') as f:
        writer = csv.writer(f, lineterminator='\n')
        writer.writerow(['phase', 'epoch', 'loss', 'accuracy'])
        for phase in PHASES:
            for m in curves.get(phase, []):
                writer.writerow([phase, m.epoch, repr(float(m.loss)), repr(float(m.accuracy))])


def write_run(result: RunResult, run_dir):
    """Write the three model files, report.json and curves.csv."""
    run_dir = Path(run_dir)
    run_dir.mkdir(parents=True, exist_ok=True)
    for phase, model in result.models.items():
        save_model(model, run_dir / MODEL_FILES[phase])
    (run_dir / REPORT_FILE).write_text(report_to_json(result.report), encoding='utf-8')
    write_curves(result.curves, run_dir / CURVES_FILE)
    log.info('run_written', run_dir=str(run_dir), **result.report.accuracies)


def read_report(run_dir):
    """Load report.json as plain data (values exactly as written)."""
    path = Path(run_dir) / REPORT_FILE
    if not path.is_file():
        raise MissingReport(f'no {REPORT_FILE} in run directory', run_dir=str(run_dir))
    data = json.loads(path.read_text(encoding='utf-8'))
    missing = [key for key in ('accuracies', 'phases', 'reduction') if key not in data]
    if missing:
        raise MissingReport('report.json lacks required keys', run_dir=str(run_dir),
                            missing=missing)
    return data


def load_embeddings_dir(embedding_dir):
    embedding_dir = Path(embedding_dir)
    for name in (AUDIO_FILE, VIDEO_FILE):
        if not (embedding_dir / name).is_file():
            raise ManifestError('embedding file not found; run extract first',
                                path=str(embedding_dir / name))
    return (load_embedding_index(embedding_dir / AUDIO_FILE),
            load_embedding_index(embedding_dir / VIDEO_FILE))


def evaluate_run(run_dir, manifest, audio_index, video_index, reduction=None):
    """Reload a run's saved models and recompute their test accuracies."""
    report = read_report(run_dir)
    reduction = reduction or report['reduction']
    samples = assemble_samples(manifest, audio_index, video_index)
    data = _Matrices(samples, reduction)
    accuracies = {}
    for phase in PHASES:
        expected = report['phases'][phase]['layer_dims'] if phase in report['phases'] else None
        model = load_model(Path(run_dir) / MODEL_FILES[phase], expected_dims=expected)
        accuracies[phase] = evaluate(model, data.batch(phase, 'test'))
    return accuracies
