# File: avfusion/neural/optim.py
# 🧠 Adam Optimizer

from dataclasses import dataclass, field
from typing import List

import numpy as np

from ..errors import ShapeError
from .model import MlpModel
from .types import Gradients


@dataclass
class AdamState:
    m_weights: List[np.ndarray] = field(default_factory=list)
    m_biases: List[np.ndarray] = field(default_factory=list)
    v_weights: List[np.ndarray] = field(default_factory=list)
    v_biases: List[np.ndarray] = field(default_factory=list)
    t: int = 0

    @classmethod
    def zeros_like(cls, model: MlpModel):
        return cls(
            m_weights=[np.zeros_like(w) for w in model.weights],
            m_biases=[np.zeros_like(b) for b in model.biases],
            v_weights=[np.zeros_like(w) for w in model.weights],
            v_biases=[np.zeros_like(b) for b in model.biases],
        )

    def copy(self):
        return AdamState([m.copy() for m in self.m_weights], [m.copy() for m in self.m_biases],
                         [v.copy() for v in self.v_weights], [v.copy() for v in self.v_biases],
                         self.t)


def _update(param, grad, m, v, lr, beta1, beta2, eps, t):
    m *= beta1
    m += (1.0 - beta1) * grad
    v *= beta2
    v += (1.0 - beta2) * grad * grad
    m_hat = m / (1.0 - beta1 ** t)
    v_hat = v / (1.0 - beta2 ** t)
    param -= lr * m_hat / (np.sqrt(v_hat) + eps)


def adam_step(model: MlpModel, grads: Gradients, state: AdamState, lr,
              beta1=0.9, beta2=0.999, eps=1e-8, in_place=False):
    """One bias-corrected Adam update; returns (model, state) with state.t advanced by one."""
    if not state.m_weights:
        state = AdamState.zeros_like(model)
    if len(grads.weights) != model.n_layers or len(state.m_weights) != model.n_layers:
        raise ShapeError('gradients or optimizer state do not mirror the model',
                         layers=model.n_layers, grads=len(grads.weights))

    if not in_place:
        model = model.copy()
        state = state.copy()
    state.t += 1

    for i in range(model.n_layers):
        if grads.weights[i].shape != model.weights[i].shape:
            raise ShapeError('gradient shape mismatch', layer=i,
                             grad=grads.weights[i].shape, weight=model.weights[i].shape)
        _update(model.weights[i], grads.weights[i], state.m_weights[i], state.v_weights[i],
                lr, beta1, beta2, eps, state.t)
        _update(model.biases[i], grads.biases[i], state.m_biases[i], state.v_biases[i],
                lr, beta1, beta2, eps, state.t)
    return model, state
