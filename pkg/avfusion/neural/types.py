# File: avfusion/neural/types.py
# 🧠 Training Types

from dataclasses import dataclass, field
from typing import List

import numpy as np

from ..errors import InvalidParameter, ShapeError

PHASES = ('audio', 'video', 'fusion')


@dataclass
class LabeledBatch:
    """Inputs (batch x d_in) with one class index per row."""

    inputs: np.ndarray
    labels: np.ndarray

    def __post_init__(self):
        self.inputs = np.asarray(self.inputs, dtype=np.float64)
        self.labels = np.asarray(self.labels, dtype=np.int64).reshape(-1)
        if self.inputs.ndim != 2:
            raise ShapeError('inputs must be a 2-D matrix', shape=self.inputs.shape)
        if self.inputs.shape[0] != self.labels.size:
            raise ShapeError('input and label counts differ',
                             inputs=self.inputs.shape[0], labels=self.labels.size)

    def __len__(self):
        return self.labels.size

    def take(self, indices):
        return LabeledBatch(self.inputs[indices], self.labels[indices])

    def check_labels(self, n_classes):
        if self.labels.size and (self.labels.min() < 0 or self.labels.max() >= n_classes):
            raise ShapeError('label outside [0, n_classes)', n_classes=n_classes,
                             low=int(self.labels.min()), high=int(self.labels.max()))


@dataclass(frozen=True)
class TrainConfig:
    learning_rate: float = 3e-4
    batch_size: int = 16
    epochs: int = 60
    l1_lambda: float = 0.0
    adam_beta1: float = 0.9
    adam_beta2: float = 0.999
    adam_eps: float = 1e-8
    seed: int = 0
    shuffle: bool = True

    def __post_init__(self):
        if not self.learning_rate > 0:
            raise InvalidParameter('learning_rate must be positive',
                                   learning_rate=self.learning_rate)
        if self.batch_size < 1:
            raise InvalidParameter('batch_size must be at least 1', batch_size=self.batch_size)
        if self.epochs < 0:
            raise InvalidParameter('epochs must be non-negative', epochs=self.epochs)
        if self.l1_lambda < 0:
            raise InvalidParameter('l1_lambda must be non-negative', l1_lambda=self.l1_lambda)

    @classmethod
    def for_phase(cls, config, phase, seed=None):
        """Build a phase's training settings from a Config class (AUDIO_LR, VIDEO_EPOCHS, ...)."""
        if phase not in PHASES:
            raise InvalidParameter('unknown training phase', phase=phase, choices=PHASES)
        prefix = phase.upper()
        return cls(
            learning_rate=float(getattr(config, f'{prefix}_LR')),
            batch_size=int(getattr(config, f'{prefix}_BATCH_SIZE')),
            epochs=int(getattr(config, f'{prefix}_EPOCHS')),
            l1_lambda=float(getattr(config, f'{prefix}_L1_LAMBDA')),
            seed=int(config.SEED + PHASES.index(phase) if seed is None else seed),
        )


@dataclass(frozen=True)
class EpochMetrics:
    epoch: int
    loss: float
    accuracy: float


@dataclass
class Gradients:
    """Per-layer gradients mirroring an MlpModel's weights and biases."""

    weights: List[np.ndarray] = field(default_factory=list)
    biases: List[np.ndarray] = field(default_factory=list)

    def flat(self):
        return np.concatenate([p.reshape(-1) for p in self.weights + self.biases])
