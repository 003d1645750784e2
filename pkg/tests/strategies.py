"""hypothesis strategies over seeded generators; hypothesis shrinks the seed."""
import numpy as np
from hypothesis import strategies as st

from trs_iso._utility.random_utility import random_iso, random_trs

seeds = st.integers(min_value=0, max_value=2 ** 32 - 1)

small_trss = seeds.map(lambda seed: random_trs(np.random.default_rng(seed)))


def _with_iso(seed, fresh):
    rng = np.random.default_rng(seed)
    trs = random_trs(rng)
    return trs, random_iso(rng, trs, fresh=fresh)


trss_with_iso = st.tuples(seeds, st.booleans()).map(lambda pair: _with_iso(*pair))
