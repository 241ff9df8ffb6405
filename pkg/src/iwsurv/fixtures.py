"""Bundled example datasets for the CLI and the reproduction suite.

A and B are simulated Inverse Weibull samples (n = 50 each, from close to
the standard scale with shapes 1.1 and 4.1 respectively). C holds 15 times
to breakdown, in minutes, of an insulating fluid between electrodes at
constant 36 kV voltage (Nelson's classic life-test dataset).
"""

from .estimation import Sample

_A = (
    0.2776, 0.2931, 0.3384, 0.4321, 0.4739, 0.4771, 0.5331, 0.5424, 0.5482,
    0.5571, 0.6139, 0.6451, 0.6523, 0.6587, 0.7166, 0.7838, 0.8466, 0.8892,
    0.9278, 0.9651, 1.008, 1.051, 1.123, 1.203, 1.213, 1.366, 1.529, 1.795,
    1.947, 2.093, 2.143, 2.189, 2.246, 2.453, 2.526, 2.858, 2.924, 3.381,
    3.383, 3.587, 4.964, 5.101, 5.139, 6.753, 10.11, 11.37, 12.68, 16.88,
    17.25, 19.07,
)

_B = (
    0.7228, 0.7955, 0.8202, 0.8333, 0.8535, 0.8641, 0.8650, 0.9124, 0.9245,
    0.9300, 0.9598, 0.9706, 1.017, 1.017, 1.031, 1.033, 1.047, 1.052, 1.059,
    1.083, 1.102, 1.121, 1.150, 1.152, 1.156, 1.158, 1.175, 1.183, 1.187,
    1.203, 1.204, 1.211, 1.218, 1.226, 1.247, 1.270, 1.305, 1.320, 1.338,
    1.347, 1.356, 1.359, 1.365, 1.389, 1.473, 1.567, 1.637, 1.823, 1.897,
    4.637,
)

_C = (
    0.35, 0.59, 0.96, 0.99, 1.69, 1.97, 2.07, 2.58, 2.71, 2.90, 3.67, 3.99,
    5.35, 13.77, 25.50,
)

FIXTURES = {
    "A": Sample.from_values(_A, name="A"),
    "B": Sample.from_values(_B, name="B"),
    "C": Sample.from_values(_C, name="C"),
}

# generating parameters of the simulated fixtures (scale, shape)
FIXTURE_PARENTS = {
    "A": (1.0, 1.1),
    "B": (1.0, 4.1),
}


def get_fixture(fixture_id):
    try:
        return FIXTURES[fixture_id.upper()]
    except KeyError:
        raise KeyError(f"unknown fixture {fixture_id!r}; choose from A, B, C")
