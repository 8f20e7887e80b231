"""Shared helpers: seeded random instances used across test modules."""

import random
from fractions import Fraction


def random_cone_inputs(seed, count, max_dim=5, max_gens=8, bound=4):
    """Deterministic list of (ambient_dim, generator list) pairs."""
    rng = random.Random(seed)
    out = []
    for _ in range(count):
        d = rng.randint(1, max_dim)
        r = rng.randint(0, max_gens)
        gens = [tuple(rng.randint(-bound, bound) for _ in range(d)) for _ in range(r)]
        out.append((d, gens))
    return out


def random_eigen_lists(seed, count, max_len=6, bound=50):
    """Deterministic list of nonzero rational eigenvalue lists."""
    rng = random.Random(seed)
    out = []
    for _ in range(count):
        r = rng.randint(1, max_len)
        vals = []
        for _ in range(r):
            num = rng.choice([1, -1]) * rng.randint(1, bound)
            den = rng.randint(1, bound)
            vals.append(Fraction(num, den))
        out.append(vals)
    return out


def subsets(n):
    """All subsets of range(n) as sorted tuples."""
    out = []
    for mask in range(1 << n):
        out.append(tuple(i for i in range(n) if mask >> i & 1))
    return out
