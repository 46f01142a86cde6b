# File: avfusion/neural/gradcheck.py
# 🧠 Central Finite-difference Gradient Check

import numpy as np

from .loss import loss
from .model import forward_with_cache


def numeric_gradients(model, batch, l1_lambda=0.0, h=1e-5):
    """Central differences of the loss for every weight and bias entry."""
    perturbed = model.copy()
    grads = []
    for params in (perturbed.weights, perturbed.biases):
        layer_grads = []
        for p in params:
            g = np.zeros_like(p)
            for idx in np.ndindex(p.shape):
                saved = p[idx]
                p[idx] = saved + h
                plus, _ = loss(perturbed, batch, l1_lambda)
                p[idx] = saved - h
                minus, _ = loss(perturbed, batch, l1_lambda)
                p[idx] = saved
                g[idx] = (plus - minus) / (2.0 * h)
            layer_grads.append(g)
        grads.append(layer_grads)
    return grads[0], grads[1]


def gradient_violations(model, batch, l1_lambda=0.0, h=1e-5, abs_tol=1e-6, rel_tol=1e-4):
    """Count of entries where |analytic - numeric| > max(abs_tol, rel_tol * |numeric|)."""
    _, analytic = loss(model, batch, l1_lambda)
    numeric_w, numeric_b = numeric_gradients(model, batch, l1_lambda, h)
    violations = 0
    for a, n in zip(analytic.weights + analytic.biases, numeric_w + numeric_b):
        tolerance = np.maximum(abs_tol, rel_tol * np.abs(n))
        violations += int(np.sum(np.abs(a - n) > tolerance))
    return violations


def kink_margin(model, inputs):
    """Smallest |pre-activation| over hidden ReLU units for these inputs.

    Central differences with step h are valid only while this stays well above h.
    """
    _, _, pre_activations = forward_with_cache(model, inputs)
    hidden = pre_activations[:-1]
    if not hidden:
        return np.inf
    return float(min(np.abs(z).min() for z in hidden))
