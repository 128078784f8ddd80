"""Shared fixtures-in-spirit: worked-example data and random generators."""

import random

from minq import Interval
from minq.streams import IntervalStream

# Term positions of the rhyme corpus (tests/data/rhyme.txt).
PEASE = (0, 3, 6, 31, 34)
PORRIDGE = (1, 4, 7, 32, 35)
HOT_OR_COLD = (2, 5, 17, 21, 33, 36)

# AND of the three singleton sets above.
RHYME_ANTICHAIN = [
    Interval(l, r)
    for l, r in [
        (0, 2), (1, 3), (2, 4), (3, 5), (4, 6), (5, 7), (6, 17),
        (7, 31), (21, 32), (31, 33), (32, 34), (33, 35), (34, 36),
    ]
]


def singletons(positions):
    return [Interval(p, p) for p in positions]


def random_antichain(rng: random.Random, max_len=12, max_pos=63, allow_empty=True):
    """Antichain in natural order: strictly increasing lefts and rights."""
    sizes = [0, 1, 1, 2, 2, 3, 3, 4, 5, 6, 8, max_len]
    n = rng.choice(sizes if allow_empty else sizes[1:])
    out = []
    left = rng.randint(0, 5) if n else 0
    right = left - 1
    for _ in range(n):
        r = max(left, right + 1)
        if rng.random() < 0.4:
            r += rng.randint(0, 4)
        if r > max_pos:
            break
        out.append(Interval(left, r))
        right = r
        left += rng.randint(1, 4)
        if left > max_pos:
            break
    if not allow_empty and not out:
        out = [Interval(0, 0)]
    return out


def singleton_antichain(rng: random.Random, max_len=12, max_pos=63):
    n = rng.randint(0, max_len)
    return singletons(sorted(rng.sample(range(max_pos + 1), n)))


def random_inputs(rng: random.Random, max_m=5, allow_empty=True):
    m = rng.randint(1, max_m)
    gen = singleton_antichain if rng.random() < 0.3 else random_antichain
    if gen is singleton_antichain:
        inputs = [gen(rng) for _ in range(m)]
        if not allow_empty:
            inputs = [a or [Interval(0, 0)] for a in inputs]
        return inputs
    return [gen(rng, allow_empty=allow_empty) for _ in range(m)]


class CountedSingletons(IntervalStream):
    """Endless-feeling singleton source for space/laziness probes."""

    def __init__(self, start=0, step=2, limit=10**6):
        self._next = start
        self._step = step
        self._left = limit
        self.pulled = 0

    def next(self):
        self.pulled += 1
        if self._left == 0:
            return None
        self._left -= 1
        value = self._next
        self._next += self._step
        return Interval(value, value)
