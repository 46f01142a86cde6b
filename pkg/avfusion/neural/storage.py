# File: avfusion/neural/storage.py
# 🧠 Model Files (versioned, little-endian f64)

import os
import struct
from pathlib import Path

import numpy as np

from ..errors import MalformedModel, ShapeError
from .model import MlpModel

MAGIC = b'MLPM'
VERSION = 1
_PREAMBLE = struct.Struct('<4sHI')  # magic, version, layer-dim count
_U32 = struct.Struct('<I')


def _pack_u32s(values):
    return struct.pack(f'<{len(values)}I', *values)


def save_model(model: MlpModel, path):
    """Write dims, input segments, then per layer weights (row-major) and biases."""
    dims = model.layer_dims
    segments = model.input_segments
    chunks = [
        _PREAMBLE.pack(MAGIC, VERSION, len(dims)),
        _pack_u32s(dims),
        _U32.pack(len(segments)),
        _pack_u32s(segments),
    ]
    for w, b in zip(model.weights, model.biases):
        chunks.append(np.ascontiguousarray(w, dtype='<f8').tobytes())
        chunks.append(np.ascontiguousarray(b, dtype='<f8').tobytes())

    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    tmp = path.with_name(path.name + '.tmp')
    tmp.write_bytes(b''.join(chunks))
    os.replace(tmp, path)


class _Reader:
    def __init__(self, data, path):
        self.data = data
        self.path = path
        self.offset = 0

    def take(self, n):
        if self.offset + n > len(self.data):
            raise MalformedModel('truncated model file', path=str(self.path))
        chunk = self.data[self.offset:self.offset + n]
        self.offset += n
        return chunk

    def u32s(self, count):
        return struct.unpack(f'<{count}I', self.take(4 * count))

    def f64s(self, shape):
        count = int(np.prod(shape))
        return np.frombuffer(self.take(8 * count), dtype='<f8').astype(np.float64).reshape(shape)


def load_model(path, expected_dims=None) -> MlpModel:
    """Read a model file; with expected_dims, reject a model of any other architecture."""
    reader = _Reader(Path(path).read_bytes(), path)
    if len(reader.data) < _PREAMBLE.size:
        raise MalformedModel('file shorter than header', path=str(path))
    magic, version, n_dims = _PREAMBLE.unpack(reader.take(_PREAMBLE.size))
    if magic != MAGIC:
        raise MalformedModel('not a model file', path=str(path), magic=magic)
    if version != VERSION:
        raise MalformedModel('unsupported model file version', path=str(path),
                             version=version, expected=VERSION)
    if n_dims < 2:
        raise MalformedModel('model needs at least two layer dims', n_dims=n_dims)

    dims = reader.u32s(n_dims)
    n_segments, = reader.u32s(1)
    segments = reader.u32s(n_segments)

    if expected_dims is not None and tuple(expected_dims) != tuple(dims):
        raise ShapeError('model dims differ from expected architecture',
                         dims=tuple(dims), expected=tuple(expected_dims))

    weights, biases = [], []
    for fan_in, fan_out in zip(dims[:-1], dims[1:]):
        weights.append(reader.f64s((fan_out, fan_in)))
        biases.append(reader.f64s((fan_out,)))
    if reader.offset != len(reader.data):
        raise MalformedModel('trailing bytes after last layer', path=str(path))

    try:
        return MlpModel(dims, weights, biases, segments)
    except ShapeError as e:
        raise MalformedModel(f'inconsistent model file: {e}', path=str(path))
