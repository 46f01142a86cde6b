# File: avfusion/neural/__init__.py
# 🧠 MLP Engine Package

from .loss import log_softmax, loss, loss_with_logits, softmax
from .model import MlpModel, forward, forward_with_cache, init_model, predict
from .optim import AdamState, adam_step
from .storage import load_model, save_model
from .training import evaluate, train
from .types import EpochMetrics, Gradients, LabeledBatch, TrainConfig

__all__ = [
    'AdamState', 'EpochMetrics', 'Gradients', 'LabeledBatch', 'MlpModel', 'TrainConfig',
    'adam_step', 'evaluate', 'forward', 'forward_with_cache', 'init_model', 'load_model',
    'log_softmax', 'loss', 'loss_with_logits', 'predict', 'save_model', 'softmax', 'train',
]
