# File: avfusion/utils/rng.py
# 🎲 Counter-based Random Streams

import numpy as np

_MASK64 = (1 << 64) - 1


def keyed_generator(seed, stream=0):
    """Return a numpy Generator fully determined by (seed, stream).

    Philox is counter-based, so each key pair addresses an independent stream
    without any shared state between callers.
    """
    key = np.array([int(seed) & _MASK64, int(stream) & _MASK64], dtype=np.uint64)
    return np.random.Generator(np.random.Philox(key=key))
