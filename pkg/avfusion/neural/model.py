# File: avfusion/neural/model.py
# 🧠 Multi-layer Perceptron (ReLU hidden layers, linear output)

from dataclasses import dataclass, field
from typing import List, Tuple

import numpy as np

from ..errors import InvalidParameter, ShapeError
from ..utils.rng import keyed_generator


@dataclass
class MlpModel:
    """Layer weights (out x in) and biases; ReLU on hidden layers, identity on the output.

    `input_segments` splits the first layer's input columns into blocks (a fusion model has
    audio | video). The first affine map is accumulated block by block on contiguous copies,
    so a block fed with zeros contributes exactly nothing.
    """

    layer_dims: Tuple[int, ...]
    weights: List[np.ndarray]
    biases: List[np.ndarray]
    input_segments: Tuple[int, ...] = field(default=())

    def __post_init__(self):
        self.layer_dims = tuple(int(d) for d in self.layer_dims)
        if len(self.layer_dims) < 2:
            raise ShapeError('an MLP needs at least input and output dims',
                             layer_dims=self.layer_dims)
        if len(self.weights) != len(self.layer_dims) - 1 or len(self.biases) != len(self.weights):
            raise ShapeError('parameter count does not match layer dims',
                             layers=len(self.weights), layer_dims=self.layer_dims)
        for i, (w, b) in enumerate(zip(self.weights, self.biases)):
            expected = (self.layer_dims[i + 1], self.layer_dims[i])
            if w.shape != expected or b.shape != (expected[0],):
                raise ShapeError('layer parameter shape mismatch', layer=i,
                                 weight=w.shape, bias=b.shape, expected=expected)
        if not self.input_segments:
            self.input_segments = (self.layer_dims[0],)
        self.input_segments = tuple(int(s) for s in self.input_segments)
        if sum(self.input_segments) != self.layer_dims[0] or min(self.input_segments) <= 0:
            raise ShapeError('input segments must partition the input dim',
                             input_segments=self.input_segments, d_in=self.layer_dims[0])

    @property
    def d_in(self):
        return self.layer_dims[0]

    @property
    def n_classes(self):
        return self.layer_dims[-1]

    @property
    def n_layers(self):
        return len(self.weights)

    def parameter_count(self):
        return sum(w.size + b.size for w, b in zip(self.weights, self.biases))

    def copy(self):
        return MlpModel(self.layer_dims, [w.copy() for w in self.weights],
                        [b.copy() for b in self.biases], self.input_segments)

    def is_finite(self):
        return all(np.all(np.isfinite(p)) for p in self.weights + self.biases)


def glorot_bound(fan_in, fan_out):
    return np.sqrt(6.0 / (fan_in + fan_out))


def init_model(layer_dims, seed, input_segments=()):
    """Uniform init in +/- sqrt(6 / (fan_in + fan_out)) per layer; zero biases."""
    layer_dims = tuple(int(d) for d in layer_dims)
    if any(d <= 0 for d in layer_dims):
        raise InvalidParameter('layer dims must be positive', layer_dims=layer_dims)
    rng = keyed_generator(seed, 0)
    weights, biases = [], []
    for fan_in, fan_out in zip(layer_dims[:-1], layer_dims[1:]):
        bound = glorot_bound(fan_in, fan_out)
        weights.append(rng.uniform(-bound, bound, size=(fan_out, fan_in)))
        biases.append(np.zeros(fan_out))
    return MlpModel(layer_dims, weights, biases, input_segments)


def _segment_bounds(segments):
    edges = np.concatenate([[0], np.cumsum(segments)])
    return list(zip(edges[:-1], edges[1:]))


def first_affine(model, inputs):
    """bias + sum of per-segment block products, accumulated in segment order."""
    w, b = model.weights[0], model.biases[0]
    out = b
    for start, stop in _segment_bounds(model.input_segments):
        block_x = np.ascontiguousarray(inputs[:, start:stop])
        block_w = np.ascontiguousarray(w[:, start:stop])
        out = out + block_x @ block_w.T
    return out


def _check_inputs(model, inputs):
    inputs = np.asarray(inputs, dtype=np.float64)
    if inputs.ndim == 1:
        inputs = inputs[np.newaxis, :]
    if inputs.ndim != 2 or inputs.shape[1] != model.d_in:
        raise ShapeError('input dim does not match model', input_shape=inputs.shape,
                         d_in=model.d_in)
    return inputs


def forward_with_cache(model: MlpModel, inputs):
    """Logits plus the per-layer inputs and pre-activations needed for backprop."""
    x = _check_inputs(model, inputs)
    activations = [x]
    pre_activations = []
    for i in range(model.n_layers):
        if i == 0:
            z = first_affine(model, x)
        else:
            z = x @ model.weights[i].T + model.biases[i]
        pre_activations.append(z)
        x = np.maximum(z, 0.0) if i < model.n_layers - 1 else z
        activations.append(x)
    return x, activations, pre_activations


def forward(model: MlpModel, inputs):
    """Logits (batch x n_classes); no softmax applied."""
    logits, _, _ = forward_with_cache(model, inputs)
    return logits


def predict(model: MlpModel, inputs):
    """Argmax class per row; ties resolve to the lowest index."""
    return np.argmax(forward(model, inputs), axis=1)
