# File: avfusion/fusion/transfer.py
# 🔗 Fusion Model Initialisation from a Trained Video Model

from dataclasses import dataclass, field
from typing import List

import numpy as np
import structlog

from ..errors import IncompatibleArchitecture
from ..neural.model import MlpModel, glorot_bound, init_model
from ..utils.rng import keyed_generator

log = structlog.get_logger(__name__)

COPIED_FULL = 'copied_full'
COPIED_SLICE = 'copied_slice'
FRESH_INIT = 'fresh_init'

TRANSFER = 'transfer'
FRESH = 'fresh'
INIT_MODES = (TRANSFER, FRESH)


@dataclass
class LayerTransfer:
    layer: int
    action: str
    copied_parameters: int
    fresh_parameters: int


@dataclass
class TransferReport:
    mode: str = TRANSFER
    layers: List[LayerTransfer] = field(default_factory=list)

    @property
    def copied_parameters(self):
        return sum(layer.copied_parameters for layer in self.layers)

    @property
    def fresh_parameters(self):
        return sum(layer.fresh_parameters for layer in self.layers)

    @property
    def total_parameters(self):
        return self.copied_parameters + self.fresh_parameters


def _check_compatible(video_model, fusion_dims):
    if len(fusion_dims) != len(video_model.layer_dims):
        raise IncompatibleArchitecture('layer counts differ',
                                       video=video_model.layer_dims, fusion=fusion_dims)
    if tuple(fusion_dims[1:]) != video_model.layer_dims[1:]:
        raise IncompatibleArchitecture('hidden widths or class counts differ',
                                       video=video_model.layer_dims, fusion=fusion_dims)
    if fusion_dims[0] < video_model.d_in:
        raise IncompatibleArchitecture('fusion input narrower than video input',
                                       video_d_in=video_model.d_in, fusion_d_in=fusion_dims[0])


def transfer_init(video_model: MlpModel, fusion_dims, seed):
    """Seed a fusion model with a trained video model's weights.

    Layers of identical shape are copied whole. The first layer takes the video model's
    columns in its trailing (video) slice and its bias; the leading (audio) columns are drawn
    fresh from the (seed, 2) stream with the fusion layer's fan bound.
    """
    fusion_dims = tuple(int(d) for d in fusion_dims)
    _check_compatible(video_model, fusion_dims)

    audio_width = fusion_dims[0] - video_model.d_in
    weights = [w.copy() for w in video_model.weights]
    biases = [b.copy() for b in video_model.biases]
    report = TransferReport(mode=TRANSFER)

    for i, (w, b) in enumerate(zip(weights, biases)):
        if i == 0 and audio_width:
            bound = glorot_bound(fusion_dims[0], fusion_dims[1])
            fresh = keyed_generator(seed, 2).uniform(-bound, bound, size=(w.shape[0], audio_width))
            weights[0] = np.concatenate([fresh, w], axis=1)
            report.layers.append(LayerTransfer(0, COPIED_SLICE, w.size + b.size, fresh.size))
        else:
            report.layers.append(LayerTransfer(i, COPIED_FULL, w.size + b.size, 0))

    segments = (audio_width, video_model.d_in) if audio_width else video_model.input_segments
    model = MlpModel(fusion_dims, weights, biases, segments)
    log.debug('transfer_init', copied=report.copied_parameters, fresh=report.fresh_parameters)
    return model, report


def fresh_init(fusion_dims, seed, input_segments=()):
    """Randomly initialised fusion model, for comparing against the transferred start."""
    model = init_model(fusion_dims, seed, input_segments)
    report = TransferReport(mode=FRESH, layers=[
        LayerTransfer(i, FRESH_INIT, 0, w.size + b.size)
        for i, (w, b) in enumerate(zip(model.weights, model.biases))
    ])
    return model, report
