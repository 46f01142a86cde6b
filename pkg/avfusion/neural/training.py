# File: avfusion/neural/training.py
# 🧠 Minibatch Training Loop and Evaluation

from typing import List, Tuple

import numpy as np
import structlog

from ..errors import EmptyDataset
from ..utils.rng import keyed_generator
from .loss import loss_with_logits
from .model import MlpModel, predict
from .optim import AdamState, adam_step
from .types import EpochMetrics, LabeledBatch, TrainConfig

log = structlog.get_logger(__name__)


def minibatches(n, batch_size, order):
    for start in range(0, n, batch_size):
        yield order[start:start + batch_size]


def train(model: MlpModel, dataset: LabeledBatch, cfg: TrainConfig,
          phase='train') -> Tuple[MlpModel, List[EpochMetrics]]:
    """Train a copy of `model` with Adam; the input model is left untouched.

    Each epoch records the sample-weighted mean minibatch loss and the running accuracy of
    the logits seen before each update. Shuffling draws from the (seed, 1) stream, so
    identical inputs and config give bit-identical weights.
    """
    if len(dataset) == 0:
        raise EmptyDataset('training set is empty', phase=phase)
    dataset.check_labels(model.n_classes)

    model = model.copy()
    state = AdamState.zeros_like(model)
    rng = keyed_generator(cfg.seed, 1)
    n = len(dataset)
    metrics = []

    for epoch in range(1, cfg.epochs + 1):
        order = rng.permutation(n) if cfg.shuffle else np.arange(n)
        loss_sum = 0.0
        correct = 0
        for indices in minibatches(n, cfg.batch_size, order):
            batch = dataset.take(indices)
            value, grads, logits = loss_with_logits(model, batch, cfg.l1_lambda)
            loss_sum += value * len(batch)
            correct += int(np.sum(np.argmax(logits, axis=1) == batch.labels))
            model, state = adam_step(model, grads, state, cfg.learning_rate,
                                     cfg.adam_beta1, cfg.adam_beta2, cfg.adam_eps,
                                     in_place=True)

        entry = EpochMetrics(epoch=epoch, loss=float(loss_sum / n), accuracy=correct / n)
        metrics.append(entry)
        log.debug('epoch_complete', phase=phase, epoch=epoch, loss=entry.loss,
                  accuracy=entry.accuracy)

    if metrics:
        log.info('training_complete', phase=phase, epochs=cfg.epochs,
                 loss=metrics[-1].loss, accuracy=metrics[-1].accuracy)
    return model, metrics


def evaluate(model: MlpModel, dataset: LabeledBatch) -> float:
    """Fraction of rows whose argmax logit (lowest index on ties) equals the label."""
    if len(dataset) == 0:
        raise EmptyDataset('cannot evaluate on an empty dataset')
    return float(np.mean(predict(model, dataset.inputs) == dataset.labels))
