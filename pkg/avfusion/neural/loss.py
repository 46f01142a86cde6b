# File: avfusion/neural/loss.py
# 🧠 Softmax Cross-entropy with L1 Weight Penalty

import numpy as np

from ..errors import EmptyBatch
from .model import MlpModel, forward_with_cache
from .types import Gradients, LabeledBatch


def softmax(logits):
    shifted = logits - logits.max(axis=1, keepdims=True)
    exp = np.exp(shifted)
    return exp / exp.sum(axis=1, keepdims=True)


def log_softmax(logits):
    shifted = logits - logits.max(axis=1, keepdims=True)
    return shifted - np.log(np.exp(shifted).sum(axis=1, keepdims=True))


def l1_penalty(model: MlpModel, l1_lambda):
    if l1_lambda == 0:
        return 0.0
    return l1_lambda * sum(np.abs(w).sum() for w in model.weights)


def loss_with_logits(model: MlpModel, batch: LabeledBatch, l1_lambda=0.0):
    """(loss, gradients, logits) for one minibatch."""
    if len(batch) == 0:
        raise EmptyBatch('cannot compute a loss on an empty batch')
    batch.check_labels(model.n_classes)

    logits, activations, pre_activations = forward_with_cache(model, batch.inputs)
    n = len(batch)
    rows = np.arange(n)
    data_loss = -log_softmax(logits)[rows, batch.labels].mean()
    value = float(data_loss + l1_penalty(model, l1_lambda))

    delta = softmax(logits)
    delta[rows, batch.labels] -= 1.0
    delta /= n

    grad_w = [None] * model.n_layers
    grad_b = [None] * model.n_layers
    for i in reversed(range(model.n_layers)):
        grad_w[i] = delta.T @ activations[i]
        grad_b[i] = delta.sum(axis=0)
        if l1_lambda:
            # sign(0) == 0 gives the zero subgradient
            grad_w[i] = grad_w[i] + l1_lambda * np.sign(model.weights[i])
        if i > 0:
            delta = (delta @ model.weights[i]) * (pre_activations[i - 1] > 0.0)

    return value, Gradients(grad_w, grad_b), logits


def loss(model: MlpModel, batch: LabeledBatch, l1_lambda=0.0):
    """Mean cross-entropy over the batch plus l1_lambda * sum|W| (biases excluded)."""
    value, grads, _ = loss_with_logits(model, batch, l1_lambda)
    return value, grads
