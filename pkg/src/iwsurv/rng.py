"""Counter-based random streams for reproducible, order-independent Monte Carlo.

Every stochastic routine in the package takes a ``numpy.random.Generator``.
Monte Carlo drivers derive one independent substream per replicate from an
integer seed plus a small path of indices, by placing the path in the Philox
counter block. Streams with different paths never overlap (each would have to
draw 2**64 blocks first), so results do not depend on replicate execution
order or on the degree of parallelism.
"""

import numpy as np

# Path slots: (domain, major, minor). Domains keep unrelated drivers
# (study / bootstrap / simulators) on disjoint counter planes.
DOMAIN_STUDY = 1
DOMAIN_BOOTSTRAP = 2
DOMAIN_SIMULATE = 3

_MASK64 = (1 << 64) - 1


def substream(seed, domain, major=0, minor=0):
    """An independent ``Generator`` for the (domain, major, minor) path.

    Parameters
    ----------
    seed : int
        Nonnegative study-level seed; keys the Philox cipher.
    domain, major, minor : int
        Nonnegative path components, each < 2**64.
    """
    if seed < 0:
        raise ValueError("seed must be nonnegative")
    key = np.array([seed & _MASK64, (seed >> 64) & _MASK64], dtype=np.uint64)
    counter = np.array([0, minor & _MASK64, major & _MASK64, domain & _MASK64],
                       dtype=np.uint64)
    return np.random.Generator(np.random.Philox(key=key, counter=counter))


def default_rng(seed):
    """Plain generator for one-shot use (CLI sampling commands)."""
    return substream(seed, DOMAIN_SIMULATE)
