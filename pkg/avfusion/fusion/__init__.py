# File: avfusion/fusion/__init__.py
# 🔗 Late Fusion Package (the training pipeline lives in avfusion.fusion.pipeline)

from .fuse import FLATTEN, MEAN_SEGMENTS, REDUCTIONS, FusionInput, fuse, fused_dim, reduce_video
from .transfer import (
    COPIED_FULL, COPIED_SLICE, FRESH_INIT, LayerTransfer, TransferReport, fresh_init, transfer_init,
)

__all__ = [
    'COPIED_FULL', 'COPIED_SLICE', 'FLATTEN', 'FRESH_INIT', 'FusionInput', 'LayerTransfer',
    'MEAN_SEGMENTS', 'REDUCTIONS', 'TransferReport', 'fresh_init', 'fuse', 'fused_dim',
    'reduce_video', 'transfer_init',
]
