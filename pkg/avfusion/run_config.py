# File: avfusion/run_config.py
# ⚙️ Run Configuration (environment settings + run file + command-line flags)

import dataclasses
import json
from dataclasses import dataclass
from pathlib import Path
from typing import Optional, Tuple

from dotenv import dotenv_values
from marshmallow import ValidationError

from .audio_dsp.representations import FeatureSettings
from .audio_dsp.types import FeatureKind
from .errors import ConfigError
from .neural.types import PHASES, TrainConfig
from .serializers import RUN_KEYS, RunConfigSchema


@dataclass(frozen=True)
class RunConfig:
    """Everything one pipeline run depends on."""

    representation: FeatureKind
    seed: int
    extractor_seed: int
    audio: TrainConfig
    video: TrainConfig
    fusion: TrainConfig
    hidden_dims: Tuple[int, ...] = (512,)
    reduction: str = 'mean_segments'
    fusion_init: str = 'transfer'
    output_dir: str = 'runs'
    jobs: int = 1
    colormap: str = 'viridis'
    hflip_prob: float = 0.0
    vflip_prob: float = 0.0
    features: FeatureSettings = FeatureSettings()

    @classmethod
    def from_settings(cls, s):
        """Build from RunConfigSchema-loaded settings; phase seeds are SEED, SEED+1, SEED+2."""
        phases = {
            phase: TrainConfig(
                learning_rate=s[f'{phase}_lr'],
                batch_size=s[f'{phase}_batch_size'],
                epochs=s[f'{phase}_epochs'],
                l1_lambda=s[f'{phase}_l1_lambda'],
                seed=s['seed'] + offset,
            )
            for offset, phase in enumerate(PHASES)
        }
        features = FeatureSettings(
            sample_rate_hz=s['sample_rate_hz'],
            window_len=s['window_len'],
            hop_len=s['hop_len'],
            window=s['window'],
            n_mels=s['n_mels'],
            n_coeffs=s['n_coeffs'],
            rolloff_fraction=s['rolloff_fraction'],
            tuning_a4_hz=s['tuning_a4_hz'],
        )
        return cls(
            representation=FeatureKind.parse(s['representation']),
            seed=s['seed'],
            extractor_seed=s['extractor_seed'],
            hidden_dims=tuple(s['hidden_dims']),
            reduction=s['reduction'],
            fusion_init=s['fusion_init'],
            output_dir=s['output_dir'],
            jobs=s['jobs'],
            colormap=s['colormap'],
            hflip_prob=s['hflip_prob'],
            vflip_prob=s['vflip_prob'],
            features=features,
            **phases,
        )

    def phase(self, name):
        return getattr(self, name)

    def replace(self, **changes):
        return dataclasses.replace(self, **changes)


def _validation_error(source, error):
    messages = error.messages if isinstance(error.messages, dict) else {'_': error.messages}
    details = '; '.join(f'{key}: {value}' for key, value in sorted(messages.items()))
    return ConfigError(f'invalid run configuration in {source}: {details}')


def load_run_file(path):
    """Read a run file: `.json`, or KEY=value lines. Unknown keys are rejected."""
    path = Path(path)
    if not path.is_file():
        raise ConfigError('run file not found', path=str(path))
    if path.suffix.lower() == '.json':
        try:
            values = json.loads(path.read_text(encoding='utf-8'))
        except json.JSONDecodeError as e:
            raise ConfigError(f'run file is not valid JSON: {e}', path=str(path))
        if not isinstance(values, dict):
            raise ConfigError('JSON run file must hold an object', path=str(path))
    else:
        values = dict(dotenv_values(path))

    values = {str(k).upper(): v for k, v in values.items()}
    try:
        RunConfigSchema().load(values, partial=True)
    except ValidationError as e:
        raise _validation_error(path, e)
    return values


def build_run_config(config_cls, run_file: Optional[str] = None, **overrides) -> RunConfig:
    """Layer Config defaults, an optional run file, then explicit overrides (e.g. SEED=3)."""
    values = {key: value for key, value in config_cls.as_dict().items() if key in RUN_KEYS}
    if run_file:
        values.update(load_run_file(run_file))
    values.update({key.upper(): value for key, value in overrides.items() if value is not None})
    try:
        settings = RunConfigSchema().load(values)
    except ValidationError as e:
        raise _validation_error(run_file or 'environment', e)
    return RunConfig.from_settings(settings)
