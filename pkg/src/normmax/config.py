import os

DEFAULT_DIM_CAP = 8
# Brute-force d-subset enumeration is used while C(n, d) stays below this.
BRUTE_FORCE_SUBSETS = 20_000
DEFAULT_MAX_BALL_FACETS = 60_000


def dim_cap(override=None):
    """Enumeration cap on the dimension; ``NORMMAX_DIM_CAP`` wins over the default."""
    if override is not None:
        return int(override)
    env = os.environ.get("NORMMAX_DIM_CAP")
    if env:
        return int(env)
    return DEFAULT_DIM_CAP


def max_ball_facets(override=None):
    if override is not None:
        return int(override)
    env = os.environ.get("NORMMAX_MAX_BALL_FACETS")
    if env:
        return int(env)
    return DEFAULT_MAX_BALL_FACETS
