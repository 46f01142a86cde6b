# File: tests/test_run_config.py
# 🧪 Run Configuration and Schema Testing

import json

import pytest
from marshmallow import ValidationError

from avfusion.audio_dsp.types import FeatureKind
from avfusion.config import get_config
from avfusion.errors import ConfigError
from avfusion.neural.types import TrainConfig
from avfusion.run_config import build_run_config, load_run_file
from avfusion.serializers import DimsField, ManifestEntrySchema, RunConfigSchema, TrainConfigSchema


class TestBuildRunConfig:
    """Test layering of settings, run files and overrides."""

    def test_defaults_from_settings(self):
        """Without a run file the settings profile decides."""
        cfg = build_run_config(get_config('testing'))

        assert cfg.representation is FeatureKind.CHROMAGRAM
        assert cfg.hidden_dims == (512,)
        assert cfg.fusion == TrainConfig(learning_rate=1e-4, batch_size=128, epochs=150,
                                         l1_lambda=1e-5, seed=cfg.seed + 2)
        assert cfg.features.window_len == 2048
        assert cfg.jobs == 1

    def test_env_style_run_file(self, tmp_path):
        """KEY=value lines override the profile."""
        path = tmp_path / 'run.env'
        path.write_text('HIDDEN_DIMS=64,32\nREPRESENTATION=mfcc\nvideo_epochs=5\n')
        cfg = build_run_config(get_config('testing'), str(path))

        assert cfg.hidden_dims == (64, 32)
        assert cfg.representation is FeatureKind.MFCC
        assert cfg.video.epochs == 5

    def test_overrides_win(self, tmp_path):
        """Command-line values beat the run file."""
        path = tmp_path / 'run.json'
        path.write_text(json.dumps({'SEED': 3}))
        cfg = build_run_config(get_config('testing'), str(path), SEED=9)

        assert cfg.seed == 9
        assert [cfg.audio.seed, cfg.video.seed, cfg.fusion.seed] == [9, 10, 11]

    def test_invalid_value(self, tmp_path):
        """Out-of-range values are configuration errors."""
        path = tmp_path / 'run.env'
        path.write_text('FUSION_BATCH_SIZE=0\n')
        with pytest.raises(ConfigError):
            build_run_config(get_config('testing'), str(path))

    def test_unknown_key(self, tmp_path):
        """Typos in a run file are not silently ignored."""
        path = tmp_path / 'run.json'
        path.write_text(json.dumps({'FUSION_EPOCH': 10}))
        with pytest.raises(ConfigError):
            load_run_file(path)

    def test_json_must_be_object(self, tmp_path):
        """A JSON run file holds one object."""
        path = tmp_path / 'run.json'
        path.write_text('[1, 2]')
        with pytest.raises(ConfigError):
            load_run_file(path)

    def test_missing_run_file(self, tmp_path):
        """A missing run file is reported."""
        with pytest.raises(ConfigError):
            load_run_file(tmp_path / 'absent.env')

    def test_replace(self):
        """RunConfig is immutable; replace returns a changed copy."""
        cfg = build_run_config(get_config('testing'))
        other = cfg.replace(reduction='flatten')

        assert other.reduction == 'flatten'
        assert cfg.reduction == 'mean_segments'


class TestSchemas:
    """Test marshmallow schemas."""

    def test_train_config_schema_loads_dataclass(self):
        """post_load builds a TrainConfig."""
        cfg = TrainConfigSchema().load({'learning_rate': 0.01, 'batch_size': 4, 'epochs': 2})

        assert cfg == TrainConfig(learning_rate=0.01, batch_size=4, epochs=2)

    def test_train_config_schema_rejects_zero_lr(self):
        """The learning rate must be positive."""
        with pytest.raises(ValidationError):
            TrainConfigSchema().load({'learning_rate': 0, 'batch_size': 4, 'epochs': 2})

    def test_dims_field(self):
        """Hidden widths parse from strings or lists."""
        field = DimsField()

        assert field.deserialize('512, 256') == (512, 256)
        assert field.deserialize([8]) == (8,)
        with pytest.raises(ValidationError):
            field.deserialize('0')

    def test_run_config_schema_choices(self):
        """Reduction and init mode are closed sets."""
        with pytest.raises(ValidationError):
            RunConfigSchema().load({'REDUCTION': 'max'}, partial=True)
        with pytest.raises(ValidationError):
            RunConfigSchema().load({'FUSION_INIT': 'random'}, partial=True)

    def test_manifest_entry_schema(self):
        """Splits are train or test."""
        with pytest.raises(ValidationError):
            ManifestEntrySchema().load({'clip_id': 'a', 'audio_path': 'a.wav',
                                        'video_source': 'f', 'label': 'x', 'split': 'val'})
