# File: avfusion/__init__.py
# 🎬 AVFusionHub: audio-image + video late-fusion action recognition

from dataclasses import dataclass, field
from typing import Optional

from .config import get_config
from .utils.logging_utils import configure_logging

__version__ = '1.0.0'


@dataclass
class PipelineContext:
    """Settings profile plus command-line overrides shared by every command."""

    config: type
    run_file: Optional[str] = None
    overrides: dict = field(default_factory=dict)
    _run_config: object = field(default=None, repr=False)

    @property
    def run_config(self):
        if self._run_config is None:
            from .run_config import build_run_config
            self._run_config = build_run_config(self.config, self.run_file, **self.overrides)
        return self._run_config

    @property
    def jobs(self):
        return self.run_config.jobs


def create_context(config_name=None, run_file=None, **overrides):
    """Create and configure the pipeline context."""
    config_cls = get_config(config_name)
    configure_logging(config_cls.LOG_LEVEL, config_cls.LOG_FORMAT)
    return PipelineContext(
        config=config_cls,
        run_file=run_file,
        overrides={key: value for key, value in overrides.items() if value is not None},
    )
