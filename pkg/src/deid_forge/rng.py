"""Deterministic, splittable random streams.

Every stochastic component draws from a Philox counter-based generator keyed
by a user seed plus an integer path, e.g. ``stream(seed, STREAM_AUGMENT,
iteration, set_index, sample_index)``. Philox streams are reproducible
across platforms and numpy versions that share the same bit-generator
implementation, and distinct paths give independent streams by construction.
"""

import numpy as np

# Stream domains. Keeping these distinct guarantees that e.g. batch sampling
# and augmentation never consume from the same stream.
STREAM_INIT = 1
STREAM_SAMPLE = 2
STREAM_AUGMENT = 3
STREAM_TOYFACE = 4
STREAM_EVAL = 5


def stream(seed, *path):
    """Return a ``numpy.random.Generator`` for ``(seed, *path)``.

    The same arguments always produce the same stream; any change to the
    path yields a statistically independent one.
    """
    ss = np.random.SeedSequence(entropy=int(seed) & 0xFFFFFFFFFFFFFFFF,
                                spawn_key=tuple(int(p) for p in path))
    return np.random.Generator(np.random.Philox(ss))
