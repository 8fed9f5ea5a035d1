"""
Brute-force ground truth. Elements are realized as explicit partial maps on the finite grid
[1, B]^S over a support S of indices, and composed as plain relations.
"""
import itertools
import logging
from dataclasses import dataclass

from src.errors import ArgumentError, DomainError
from src.monoid import apply, compose
from src.seqcore import NSeq, seq_leq

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Truncation:
    support: tuple
    bound: int

    def __post_init__(self):
        support = tuple(sorted(set(self.support)))
        if not support:
            raise ArgumentError("truncation support must be non-empty")
        if self.bound < 2:
            raise ArgumentError(f"truncation bound must be at least 2, got {self.bound}")
        object.__setattr__(self, "support", support)


def _is_box(points):
    if not points:
        return True
    lows = [min(c) for c in zip(*points)]
    highs = [max(c) for c in zip(*points)]
    size = 1
    for low, high in zip(lows, highs):
        size *= high - low + 1
    return size == len(points)


def _preserves_covers(pairs):
    for a, image in pairs.items():
        for i in range(len(a)):
            b = a[:i] + (a[i] + 1,) + a[i + 1:]
            if b in pairs:
                other = pairs[b]
                if other == image or not all(x <= y for x, y in zip(image, other)):
                    return False
    return True


class GridMap:
    """
    A finite partial map between grid points, checked to be an order isomorphism between
    boxes of the grid. On a box every pair a <= b is joined by a chain of covers, so
    checking covers in both directions is enough.
    """

    __slots__ = ("_pairs",)

    def __init__(self, pairs=None):
        pairs = {tuple(a): tuple(b) for a, b in dict(pairs or {}).items()}
        if len({len(p) for p in itertools.chain(pairs, pairs.values())}) > 1:
            raise DomainError("grid map points have mixed dimensions")
        inverse = {b: a for a, b in pairs.items()}
        if len(inverse) != len(pairs):
            raise DomainError("grid map is not injective")
        if not _is_box(list(pairs)) or not _is_box(list(inverse)):
            raise DomainError("grid map domain or image is not a box of the grid")
        if not _preserves_covers(pairs) or not _preserves_covers(inverse):
            raise DomainError("grid map is not an order isomorphism")
        self._pairs = dict(sorted(pairs.items()))

    def __getitem__(self, point):
        return self._pairs[point]

    def __contains__(self, point):
        return point in self._pairs

    def __len__(self):
        return len(self._pairs)

    def get(self, point, default=None):
        return self._pairs.get(point, default)

    def items(self):
        return self._pairs.items()

    def __eq__(self, other):
        if not isinstance(other, GridMap):
            return NotImplemented
        return self._pairs == other._pairs

    def __repr__(self):
        return f"GridMap({self._pairs!r})"


def grid_points(t):
    """All points of [1, B]^S in lexicographic order."""
    return itertools.product(range(1, t.bound + 1), repeat=len(t.support))


def _check_support(t, *elements):
    covered = set(t.support)
    for alpha in elements:
        needed = alpha.g.moved | alpha.d.support | alpha.r.support
        if not needed <= covered:
            raise ArgumentError(f"truncation support {t.support} misses indices {sorted(needed - covered)}")


def truncate(alpha, t):
    _check_support(t, alpha)
    pairs = {}
    for point in grid_points(t):
        a = NSeq(zip(t.support, point))
        if not seq_leq(alpha.d, a):
            continue
        b = apply(alpha, a)
        image = tuple(b[x] for x in t.support)
        if max(image) <= t.bound:
            pairs[point] = image
    return GridMap(pairs)


def brute_compose(f, h):
    return GridMap({a: h[b] for a, b in f.items() if b in h})


def agree(alpha, beta, t):
    """Checks the algebraic product of alpha and beta against the relational one on t."""
    product = compose(alpha, beta)
    _check_support(t, alpha, beta, product)
    brute = brute_compose(truncate(alpha, t), truncate(beta, t))
    algebraic = truncate(product, t)
    for a, image in brute.items():
        if algebraic.get(a) != image:
            logger.debug(f"point {a}: brute {image}, algebraic {algebraic.get(a)}")
            return False
    for a in (a for a, _ in algebraic.items() if a not in brute):
        middle = apply(alpha, NSeq(zip(t.support, a)))
        if all(middle[x] <= t.bound for x in t.support):
            logger.debug(f"point {a} lost by the brute composite with in-box intermediate")
            return False
    return True
