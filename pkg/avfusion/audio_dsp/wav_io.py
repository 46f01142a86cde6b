# File: avfusion/audio_dsp/wav_io.py
# 🎧 RIFF/WAV Ingest and Export

import struct
import wave
from pathlib import Path

import numpy as np
import structlog

from ..errors import MalformedAudio
from .types import AudioClip

log = structlog.get_logger(__name__)

WAVE_FORMAT_PCM = 0x0001
WAVE_FORMAT_IEEE_FLOAT = 0x0003
WAVE_FORMAT_EXTENSIBLE = 0xFFFE


def _iter_chunks(data):
    """Yield (chunk_id, payload) pairs following the RIFF/WAVE header."""
    offset = 12
    while offset + 8 <= len(data):
        chunk_id = data[offset:offset + 4]
        size, = struct.unpack('<I', data[offset + 4:offset + 8])
        payload = data[offset + 8:offset + 8 + size]
        yield chunk_id, payload
        # chunks are word aligned
        offset += 8 + size + (size & 1)


def _parse_fmt(payload):
    if len(payload) < 16:
        raise MalformedAudio('fmt chunk too short', size=len(payload))
    audio_format, channels, sample_rate, _byte_rate, block_align, bits = struct.unpack(
        '<HHIIHH', payload[:16]
    )
    if audio_format == WAVE_FORMAT_EXTENSIBLE:
        if len(payload) < 26:
            raise MalformedAudio('extensible fmt chunk too short', size=len(payload))
        audio_format, = struct.unpack('<H', payload[24:26])
    if block_align != channels * bits // 8:
        raise MalformedAudio('block_align does not match channels and bit depth',
                             block_align=block_align, channels=channels, bits=bits)
    return audio_format, channels, sample_rate, block_align, bits


def _decode_samples(raw, audio_format, bits):
    """Decode raw little-endian sample bytes to floats in [-1, 1]."""
    if audio_format == WAVE_FORMAT_PCM:
        if bits == 8:
            return (np.frombuffer(raw, dtype=np.uint8).astype(np.float64) - 128.0) / 128.0
        if bits == 16:
            return np.frombuffer(raw, dtype='<i2').astype(np.float64) / 32768.0
        if bits == 24:
            b = np.frombuffer(raw, dtype=np.uint8).reshape(-1, 3).astype(np.int32)
            values = b[:, 0] | (b[:, 1] << 8) | (b[:, 2] << 16)
            values = np.where(values & 0x800000, values - (1 << 24), values)
            return values.astype(np.float64) / 8388608.0
    elif audio_format == WAVE_FORMAT_IEEE_FLOAT and bits == 32:
        values = np.frombuffer(raw, dtype='<f4').astype(np.float64)
        if not np.all(np.isfinite(values)):
            raise MalformedAudio('float WAV contains non-finite samples')
        return values
    raise MalformedAudio('unsupported sample encoding', audio_format=audio_format, bits=bits)


def parse_wav_bytes(data):
    """Parse a RIFF/WAVE byte string into (samples, sample_rate_hz); stereo is averaged."""
    if len(data) < 12 or data[:4] != b'RIFF' or data[8:12] != b'WAVE':
        raise MalformedAudio('not a RIFF/WAVE file')

    fmt = None
    raw = None
    for chunk_id, payload in _iter_chunks(data):
        if chunk_id == b'fmt ':
            fmt = _parse_fmt(payload)
        elif chunk_id == b'data':
            raw = payload
            break

    if fmt is None:
        raise MalformedAudio('missing fmt chunk')
    if raw is None:
        raise MalformedAudio('missing data chunk')

    audio_format, channels, sample_rate, block_align, bits = fmt
    if channels < 1 or sample_rate <= 0 or block_align <= 0:
        raise MalformedAudio('invalid fmt chunk', channels=channels, sample_rate=sample_rate)

    usable = len(raw) - len(raw) % block_align
    if usable == 0:
        raise MalformedAudio('data chunk holds no complete frame')
    if usable != len(raw):
        log.warning('wav_truncated_frame', dropped_bytes=len(raw) - usable)

    samples = _decode_samples(raw[:usable], audio_format, bits)
    if channels > 1:
        samples = samples.reshape(-1, channels).mean(axis=1)
    return samples, sample_rate


def resample_linear(samples, source_hz, target_hz):
    """Linear-interpolation resampling (adequate for image rendering, not for listening)."""
    samples = np.asarray(samples, dtype=np.float64)
    if source_hz == target_hz:
        return samples.copy()
    new_len = max(1, int(round(samples.size * target_hz / source_hz)))
    positions = np.arange(new_len) * (source_hz / target_hz)
    return np.interp(positions, np.arange(samples.size), samples)


def read_wav(path, target_sample_rate_hz=22050, clip_id=None):
    """Read a WAV file into a normalized mono AudioClip at the target rate."""
    path = Path(path)
    try:
        data = path.read_bytes()
    except OSError as e:
        raise MalformedAudio(f'cannot read {path}: {e}')

    samples, sample_rate = parse_wav_bytes(data)
    if target_sample_rate_hz:
        samples = resample_linear(samples, sample_rate, target_sample_rate_hz)
        sample_rate = target_sample_rate_hz

    samples = np.clip(samples, -1.0, 1.0)
    return AudioClip(id=clip_id or path.stem, samples=samples, sample_rate_hz=sample_rate)


def write_wav(path, samples, sample_rate_hz):
    """Write mono samples in [-1, 1] as 16-bit PCM."""
    pcm = np.round(np.clip(np.asarray(samples, dtype=np.float64), -1.0, 1.0) * 32767.0)
    pcm = pcm.astype('<i2')
    Path(path).parent.mkdir(parents=True, exist_ok=True)
    with wave.open(str(path), 'wb') as wf:
        wf.setnchannels(1)
        wf.setsampwidth(2)
        wf.setframerate(int(sample_rate_hz))
        wf.writeframes(pcm.tobytes())
