# File: avfusion/fusion/tests/test_pipeline.py

import json

import numpy as np
import pytest

from avfusion.config import get_config
from avfusion.datasets.manifest import DatasetManifest, ManifestEntry
from avfusion.embeddings.storage import write_embeddings
from avfusion.embeddings.types import AudioEmbedding, Modality, VideoEmbedding
from avfusion.errors import ManifestError, MissingModality, MissingReport
from avfusion.fusion.pipeline import (
    CURVES_FILE, MODEL_FILES, REPORT_FILE, evaluate_run, load_embeddings_dir, peak_epoch,
    read_report, report_to_json, run_pipeline, write_run,
)
from avfusion.neural.storage import load_model
from avfusion.neural.types import EpochMetrics
from avfusion.run_config import build_run_config
from avfusion.utils.rng import keyed_generator

CLASSES = 3
CLIPS_PER_CLASS = 6


@pytest.fixture
def run_cfg():
    """Tiny networks and a handful of epochs."""
    return build_run_config(get_config('testing'), HIDDEN_DIMS='16',
                            AUDIO_EPOCHS=3, VIDEO_EPOCHS=3, FUSION_EPOCHS=3,
                            AUDIO_BATCH_SIZE=4, VIDEO_BATCH_SIZE=4, FUSION_BATCH_SIZE=4,
                            SEED=5)


@pytest.fixture
def embedding_set():
    """Manifest plus class-shifted audio and video embeddings (4 train, 2 test per class)."""
    rng = keyed_generator(77, 0)
    entries, audio, video = [], {}, {}
    for c in range(CLASSES):
        for i in range(CLIPS_PER_CLASS):
            cid = f'c{c}_{i}'
            entries.append(ManifestEntry(cid, f'{cid}.wav', f'frames/{cid}', f'class_{c}',
                                         'train' if i < 4 else 'test'))
            audio[cid] = AudioEmbedding(cid, np.abs(rng.normal(c, 1.0, size=1536)))
            video[cid] = VideoEmbedding(cid, np.abs(rng.normal(c, 1.0, size=(25, 1024))))
    return DatasetManifest(entries), audio, video


class TestRunPipeline:
    """Test the audio -> video -> fusion sequence."""

    def test_report_contents(self, run_cfg, embedding_set):
        """Three accuracies, split counts and a bit-exact transfer start."""
        manifest, audio, video = embedding_set
        result = run_pipeline(manifest, audio, video, run_cfg)
        report = result.report

        assert set(report.accuracies) == {'audio', 'video', 'fusion'}
        assert all(0.0 <= acc <= 1.0 for acc in report.accuracies.values())
        assert report.train_clips == 12
        assert report.test_clips == 6
        assert report.classes == ['class_0', 'class_1', 'class_2']
        assert report.transfer_identity is True
        assert report.phases['fusion'].layer_dims == [2560, 16, 3]
        assert report.phases['video'].train.seed == 6
        assert len(result.curves['audio']) == 3

    def test_model_architectures(self, run_cfg, embedding_set):
        """Audio 1536, video 1024 and fusion 2560 inputs share the hidden stack."""
        manifest, audio, video = embedding_set
        models = run_pipeline(manifest, audio, video, run_cfg).models

        assert models['audio'].layer_dims == (1536, 16, 3)
        assert models['video'].layer_dims == (1024, 16, 3)
        assert models['fusion'].layer_dims == (2560, 16, 3)
        assert models['fusion'].input_segments == (1536, 1024)

    def test_fresh_fusion_init(self, run_cfg, embedding_set):
        """The fresh mode skips the identity check."""
        manifest, audio, video = embedding_set
        report = run_pipeline(manifest, audio, video,
                              run_cfg.replace(fusion_init='fresh')).report

        assert report.transfer.mode == 'fresh'
        assert report.transfer.copied_parameters == 0
        assert report.transfer_identity is None

    def test_missing_video_embedding(self, run_cfg, embedding_set):
        """A clip without video fails before any training."""
        manifest, audio, video = embedding_set
        del video['c1_2']

        with pytest.raises(MissingModality) as excinfo:
            run_pipeline(manifest, audio, video, run_cfg)
        assert excinfo.value.clip_id == 'c1_2'
        assert excinfo.value.modality == 'video'

    def test_needs_both_splits(self, run_cfg, embedding_set):
        """A manifest without test clips cannot be evaluated."""
        _, audio, video = embedding_set
        train_only = DatasetManifest([
            ManifestEntry(f'c{c}_{i}', 'a.wav', 'f', f'class_{c}', 'train')
            for c in range(CLASSES) for i in range(CLIPS_PER_CLASS)
        ])
        with pytest.raises(ManifestError):
            run_pipeline(train_only, audio, video, run_cfg)

    def test_runs_are_deterministic(self, run_cfg, embedding_set):
        """Same inputs and seed give byte-identical reports."""
        manifest, audio, video = embedding_set
        first = report_to_json(run_pipeline(manifest, audio, video, run_cfg).report)
        second = report_to_json(run_pipeline(manifest, audio, video, run_cfg).report)

        assert first == second


class TestRunDirectory:
    """Test run files and re-evaluation."""

    def test_write_and_evaluate(self, tmp_path, run_cfg, embedding_set):
        """Saved models reproduce the reported test accuracies."""
        manifest, audio, video = embedding_set
        result = run_pipeline(manifest, audio, video, run_cfg)
        write_run(result, tmp_path)

        for phase, name in MODEL_FILES.items():
            assert load_model(tmp_path / name).layer_dims == result.models[phase].layer_dims
        data = json.loads((tmp_path / REPORT_FILE).read_text())
        assert data['accuracies'] == result.report.accuracies
        curves = (tmp_path / CURVES_FILE).read_text().splitlines()
        assert curves[0] == 'phase,epoch,loss,accuracy'
        assert len(curves) == 1 + 3 * 3
        for line in curves[1:]:
            phase, epoch, loss_value, accuracy = line.split(',')
            assert 0.0 <= float(accuracy) <= 1.0
            assert float(loss_value) >= 0.0

        assert evaluate_run(tmp_path, manifest, audio, video) == result.report.accuracies

    def test_missing_report(self, tmp_path):
        """A directory without report.json is not a run."""
        with pytest.raises(MissingReport):
            read_report(tmp_path)

    def test_report_missing_keys(self, tmp_path):
        """A report without accuracies is rejected."""
        (tmp_path / REPORT_FILE).write_text('{"phases": {}}')
        with pytest.raises(MissingReport):
            read_report(tmp_path)

    def test_embedding_dir_files(self, tmp_path, embedding_set):
        """Both audio.emb and video.emb are required."""
        _, audio, _ = embedding_set
        write_embeddings(list(audio.values()), tmp_path / 'audio.emb', Modality.AUDIO)

        with pytest.raises(ManifestError):
            load_embeddings_dir(tmp_path)


def test_peak_epoch_is_first_maximum():
    """Ties resolve to the earliest epoch."""
    metrics = [EpochMetrics(1, 1.0, 0.5), EpochMetrics(2, 0.8, 0.9), EpochMetrics(3, 0.7, 0.9)]

    assert peak_epoch(metrics) == 2
    assert peak_epoch([]) is None
