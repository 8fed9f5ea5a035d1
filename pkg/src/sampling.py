"""Seeded random generators for the verify suites."""
import numpy as np

from src.congruence import QuotElem
from src.monoid import Element
from src.seqcore import NSeq, Perm, ZSeq


def make_rng(seed, stream=0):
    """Independent deterministic stream `stream` of the run seeded by `seed`."""
    return np.random.default_rng([abs(int(seed)), int(seed < 0), stream])


class ElementSampler:
    def __init__(self, rng, index_range=8, max_value=16, max_support=4, max_moved=6, max_z=8, indices=None):
        self.rng = rng
        self.indices = list(indices) if indices is not None else list(range(index_range))
        self.max_value = max_value
        self.max_support = max_support
        self.max_moved = max_moved
        self.max_z = max_z

    @classmethod
    def from_config(cls, rng, cfg, **kwargs):
        params = dict(
            index_range=cfg.get("index_range", 8),
            max_value=cfg.get("max_value", 16),
            max_support=cfg.get("max_support", 4),
            max_moved=cfg.get("max_moved", 6),
            max_z=cfg.get("max_z", 8),
        )
        params.update(kwargs)
        return cls(rng, **params)

    def integer(self, low, high):
        """Uniform integer in [low, high]."""
        return int(self.rng.integers(low, high + 1))

    def subset(self, size):
        size = min(size, len(self.indices))
        return [int(x) for x in self.rng.choice(self.indices, size=size, replace=False)]

    def nseq(self, max_value=None):
        max_value = max_value or self.max_value
        support = self.subset(self.integer(0, self.max_support))
        return NSeq({x: self.integer(1, max_value) for x in support})

    def zseq(self):
        support = self.subset(self.integer(0, self.max_support))
        return ZSeq({x: self.integer(-self.max_z, self.max_z) for x in support})

    def perm(self):
        points = self.subset(self.integer(0, self.max_moved))
        images = [int(x) for x in self.rng.permutation(points)] if points else []
        return Perm(dict(zip(points, images)))

    def element(self, max_value=None):
        return Element(self.perm(), self.nseq(max_value), self.nseq(max_value))

    def quot(self):
        return QuotElem(self.perm(), self.zseq())
