"""Generators shared by the test modules."""

import random

from hypothesis import strategies as st

from kummercover import ConfigCombinatorics, catalog_lookup


def random_config(rng: random.Random, d_max: int = 5, tau_max: int = 40) -> ConfigCombinatorics:
    """Random census satisfying the pairwise identity, completed via t_2."""
    d = rng.randint(1, d_max)
    tau = rng.randint(4, tau_max)
    budget = d * d * tau * (tau - 1) // 2
    counts = {}
    for _ in range(rng.randint(0, 4)):
        r = rng.randint(3, tau - 1)
        weight = r * (r - 1) // 2
        if weight > budget:
            continue
        c = rng.randint(0, budget // weight // rng.choice((1, 2, 4, 16)))
        counts[r] = counts.get(r, 0) + c
        budget -= c * weight
    counts[2] = budget
    return ConfigCombinatorics(d, tau, counts, "random")


@st.composite
def valid_configs(draw, d_min=1, d_max=5, tau_max=40):
    d = draw(st.integers(d_min, d_max))
    tau = draw(st.integers(4, tau_max))
    budget = d * d * tau * (tau - 1) // 2
    counts = {}
    for r in draw(st.lists(st.integers(3, tau - 1), max_size=4)):
        weight = r * (r - 1) // 2
        c = draw(st.integers(0, budget // weight))
        counts[r] = counts.get(r, 0) + c
        budget -= c * weight
    counts[2] = budget
    return ConfigCombinatorics(d, tau, counts)


def catalog_sample():
    out = [catalog_lookup("hesse-conics"), catalog_lookup("dual-hesse")]
    out += [catalog_lookup("generic-conics", tau) for tau in (4, 5, 10, 37)]
    out += [catalog_lookup("L", m) for m in (3, 4, 10)]
    out += [catalog_lookup("C", 2, tau) for tau in (9, 12, 30)]
    out += [catalog_lookup("C", 1, tau) for tau in (12, 39)]
    out += [catalog_lookup("C", 3, 11)]
    return out
