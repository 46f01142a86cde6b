# File: avfusion/embeddings/storage.py
# 🧬 Binary and CSV Embedding Files

import csv
import os
import struct
from dataclasses import dataclass
from pathlib import Path

import numpy as np
import structlog

from ..errors import (
    BadMagic, DuplicateClipId, InvalidParameter, MalformedEmbeddingFile, ShapeMismatch,
    VersionMismatch,
)
from .types import Modality, make_record

log = structlog.get_logger(__name__)

MAGIC = b'MAIV'
VERSION = 1
_HEADER = struct.Struct('<4sHBIII')
_ID_LEN = struct.Struct('<H')
_COUNT = struct.Struct('<I')


@dataclass(frozen=True)
class EmbeddingHeader:
    version: int
    modality: Modality
    count: int
    rows: int
    cols: int

    @property
    def dims(self):
        return self.rows * self.cols


def _infer_modality(records, modality):
    if modality is not None:
        return Modality(modality)
    if not records:
        raise InvalidParameter('modality is required for an empty record list')
    return records[0].modality


def write_embeddings(records, path, modality=None):
    """Write records of one modality; values are stored as little-endian float32."""
    records = list(records)
    modality = _infer_modality(records, modality)
    rows, cols = modality.shape

    seen = set()
    chunks = [_HEADER.pack(MAGIC, VERSION, int(modality), len(records), rows, cols)]
    for record in records:
        if record.modality is not modality:
            raise ShapeMismatch('record modality differs from file modality',
                                clip_id=record.clip_id)
        if record.clip_id in seen:
            raise DuplicateClipId('duplicate clip id', clip_id=record.clip_id)
        seen.add(record.clip_id)

        encoded_id = record.clip_id.encode('utf-8')
        values = np.asarray(record.values, dtype='<f4').reshape(-1)
        chunks.append(_ID_LEN.pack(len(encoded_id)))
        chunks.append(encoded_id)
        chunks.append(_COUNT.pack(values.size))
        chunks.append(values.tobytes())

    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    tmp = path.with_name(path.name + '.tmp')
    tmp.write_bytes(b''.join(chunks))
    os.replace(tmp, path)
    log.debug('embeddings_written', path=str(path), modality=modality.name, count=len(records))


def _parse_header(data):
    if len(data) < _HEADER.size:
        raise MalformedEmbeddingFile('file shorter than header', size=len(data))
    magic, version, tag, count, rows, cols = _HEADER.unpack_from(data, 0)
    if magic != MAGIC:
        raise BadMagic('not an embedding file', magic=magic)
    if version != VERSION:
        raise VersionMismatch('unsupported embedding file version', version=version,
                              expected=VERSION)
    try:
        modality = Modality(tag)
    except ValueError:
        raise MalformedEmbeddingFile('unknown modality tag', tag=tag)
    if (rows, cols) != modality.shape:
        raise ShapeMismatch('header dims violate the modality contract',
                            modality=modality.name, rows=rows, cols=cols)
    return EmbeddingHeader(version, modality, count, rows, cols)


def read_embedding_header(path):
    with open(path, 'rb') as f:
        return _parse_header(f.read(_HEADER.size))


def read_embeddings(path):
    """Read every record of an embedding file, validating it against its header."""
    data = Path(path).read_bytes()
    header = _parse_header(data)
    offset = _HEADER.size
    records = []
    seen = set()

    def take(n):
        nonlocal offset
        if offset + n > len(data):
            raise MalformedEmbeddingFile('truncated embedding file', path=str(path))
        chunk = data[offset:offset + n]
        offset += n
        return chunk

    for _ in range(header.count):
        id_len, = _ID_LEN.unpack(take(_ID_LEN.size))
        clip_id = take(id_len).decode('utf-8')
        count, = _COUNT.unpack(take(_COUNT.size))
        if count != header.dims:
            raise ShapeMismatch('record length differs from header dims',
                                clip_id=clip_id, values=count, dims=header.dims)
        if clip_id in seen:
            raise DuplicateClipId('duplicate clip id', clip_id=clip_id)
        seen.add(clip_id)

        values = np.frombuffer(take(4 * count), dtype='<f4').astype(np.float64)
        records.append(make_record(header.modality, clip_id,
                                   values.reshape(header.rows, header.cols)))

    if offset != len(data):
        raise MalformedEmbeddingFile('trailing bytes after last record',
                                     extra=len(data) - offset)
    return records


def load_embedding_index(path):
    """clip_id -> record mapping."""
    return {record.clip_id: record for record in read_embeddings(path)}


def import_embeddings_csv(path, modality):
    """Read `clip_id, v0..vN` rows (video rows are the 25x1024 matrix in row-major order)."""
    modality = Modality(modality)
    rows, cols = modality.shape
    records = []
    seen = set()
    with open(path, newline='', encoding='utf-8') as f:
        for line_no, row in enumerate(csv.reader(f), start=1):
            if not row or (line_no == 1 and row[0].strip().lower() == 'clip_id'):
                continue
            clip_id = row[0].strip()
            try:
                values = np.array([float(v) for v in row[1:]], dtype=np.float64)
            except ValueError as e:
                raise MalformedEmbeddingFile(f'bad number on line {line_no}: {e}')
            if values.size != rows * cols:
                raise ShapeMismatch('CSV row length differs from modality dims',
                                    clip_id=clip_id, values=values.size, dims=rows * cols)
            if clip_id in seen:
                raise DuplicateClipId('duplicate clip id', clip_id=clip_id)
            seen.add(clip_id)
            records.append(make_record(modality, clip_id, values.reshape(rows, cols)))
    return records
