# File: avfusion/selftest.py
# ✅ Built-in Self-test Suite

import time
from dataclasses import dataclass
from typing import Callable, Dict, List, Optional

import numpy as np
import structlog

from .audio_dsp.features import chromagram, spectral_centroid, spectral_rolloff
from .audio_dsp.spectral import stft_power
from .audio_dsp.types import AudioClip, StftConfig
from .fusion.transfer import transfer_init
from .neural.gradcheck import gradient_violations, kink_margin
from .neural.model import MlpModel, forward, init_model
from .neural.optim import AdamState, adam_step
from .neural.training import train
from .neural.types import Gradients, LabeledBatch, TrainConfig
from .utils.rng import keyed_generator

log = structlog.get_logger(__name__)

SELFTEST_SEED = 20240601


@dataclass
class CheckResult:
    name: str
    passed: bool
    detail: str
    seconds: float


def dft_power_oracle(clip, cfg):
    """Direct O(n^2) DFT of each reflect-padded, windowed frame."""
    from scipy.signal import get_window

    n = cfg.window_len
    padded = np.pad(clip.samples, n // 2, mode='reflect')
    n_frames = 1 + (padded.size - n) // cfg.hop_len
    window = get_window(cfg.window, n, fftbins=True)
    k = np.arange(n // 2 + 1)[:, np.newaxis]
    basis = np.exp(-2j * np.pi * k * np.arange(n)[np.newaxis, :] / n)
    frames = np.stack([padded[t * cfg.hop_len:t * cfg.hop_len + n] * window
                       for t in range(n_frames)])
    return np.abs(frames @ basis.T) ** 2


def check_dsp_oracle(fault=False):
    cfg = StftConfig(window_len=512, hop_len=128)
    worst = 0.0
    for i in range(20):
        rng = keyed_generator(SELFTEST_SEED, i)
        samples = rng.uniform(-1.0, 1.0, size=int(rng.integers(1024, 4097)))
        clip = AudioClip(f'oracle{i}', samples, 22050)
        fast = stft_power(clip, cfg).values
        if fault:
            fast = fast * (1.0 + 1e-6)
        slow = dft_power_oracle(clip, cfg)
        worst = max(worst, np.linalg.norm(fast - slow) / np.linalg.norm(slow))
    return worst < 1e-9, f'max relative error {worst:.3e}'


def check_representations(fault=False):
    sr = 22050
    t = np.arange(sr) / sr
    clip = AudioClip('a440', 0.5 * np.sin(2 * np.pi * 440.0 * t), sr)
    spec = stft_power(clip, StftConfig())
    chroma = chromagram(spec).values.mean(axis=0)
    centroid = np.median(spectral_centroid(spec).values)
    rolloff = np.median(spectral_rolloff(spec).values)
    if fault:
        centroid += 2 * spec.bin_hz
    ok = (int(np.argmax(chroma)) == 9
          and abs(centroid - 440.0) <= spec.bin_hz
          and abs(rolloff - 440.0) <= spec.bin_hz)
    return ok, f'chroma argmax {int(np.argmax(chroma))}, centroid {centroid:.1f} Hz, ' \
               f'rolloff {rolloff:.1f} Hz'


def check_gradients(fault=False):
    total = 0
    checked = 0
    for i in range(100):
        if checked == 10:
            break
        rng = keyed_generator(SELFTEST_SEED + 1, i)
        model = init_model((4, 6, 5, 3), seed=SELFTEST_SEED + i)
        model.biases = [rng.normal(0, 0.1, size=b.shape) for b in model.biases]
        batch = LabeledBatch(rng.normal(size=(5, 4)), rng.integers(0, 3, size=5))
        if kink_margin(model, batch.inputs) < 1e-3:
            continue
        checked += 1
        # a unit step is far too coarse for the finite-difference estimate
        total += gradient_violations(model, batch, l1_lambda=0.01, h=1.0 if fault else 1e-5)
    detail = f'{total} gradient entries outside tolerance over {checked} instances'
    return checked == 10 and total == 0, detail


def check_adam(fault=False):
    model = MlpModel((1, 1), [np.array([[1.0]])], [np.array([0.0])])
    grads = Gradients([np.array([[1.0]])], [np.array([0.0])])
    state = AdamState.zeros_like(model)
    lr = 0.1 * (1.01 if fault else 1.0)
    for _ in range(2):
        model, state = adam_step(model, grads, state, lr)
    expected = 1.0 - 2 * 0.1 / (1.0 + 1e-8)
    error = abs(model.weights[0][0, 0] - expected)
    return error < 1e-12 and state.t == 2, f'trajectory error {error:.3e}'


def check_transfer_identity(fault=False):
    video = init_model((16, 8, 4), seed=SELFTEST_SEED)
    fusion, _ = transfer_init(video, (40, 8, 4), seed=SELFTEST_SEED)
    if fault:
        fusion.weights[0][0, -1] += 1e-9
    v = keyed_generator(SELFTEST_SEED, 99).normal(size=(100, 16))
    fused = np.concatenate([np.zeros((100, 24)), v], axis=1)
    equal = bool(np.array_equal(forward(fusion, fused), forward(video, v)))
    return equal, 'bit-exact' if equal else 'fusion output differs from video output'


def check_determinism(fault=False):
    rng = keyed_generator(SELFTEST_SEED, 7)
    data = LabeledBatch(rng.normal(size=(40, 6)), rng.integers(0, 3, size=40))
    cfg = TrainConfig(learning_rate=1e-2, batch_size=8, epochs=5, seed=3)
    first, _ = train(init_model((6, 10, 3), seed=1), data, cfg)
    second, _ = train(init_model((6, 10, 3), seed=1), data,
                      TrainConfig(learning_rate=1e-2, batch_size=8, epochs=5,
                                  seed=4 if fault else 3))
    same = all(np.array_equal(a, b) for a, b in zip(first.weights + first.biases,
                                                    second.weights + second.biases))
    return same, 'identical weights' if same else 'weights differ between runs'


CHECKS: Dict[str, Callable] = {
    'dsp_oracle': check_dsp_oracle,
    'representations': check_representations,
    'gradients': check_gradients,
    'adam': check_adam,
    'transfer_identity': check_transfer_identity,
    'determinism': check_determinism,
}


def run_selftest(inject_fault: Optional[str] = None) -> List[CheckResult]:
    """Run every check; `inject_fault` names one check to corrupt on purpose."""
    results = []
    for name, check in CHECKS.items():
        started = time.perf_counter()
        try:
            passed, detail = check(fault=(name == inject_fault))
        except Exception as e:  # noqa: BLE001
            passed, detail = False, f'{type(e).__name__}: {e}'
        result = CheckResult(name, bool(passed), detail, time.perf_counter() - started)
        log.debug('selftest_check', name=name, passed=result.passed, detail=detail)
        results.append(result)
    return results
