"""
The inverse monoid of order isomorphisms between principal filters of sigma-N^kappa.

An element is stored as its unique triple (g, d, r): the filter ↑d is the domain, ↑r the
range, and g the permutation twisting the coordinates in between. On points it acts by
    (a)alpha = r + F_g(a - d).
"""
from dataclasses import dataclass

from src.errors import DomainError, IntegerOverflowError
from src.seqcore import (
    IDENTITY, ONE, NSeq, Perm, act_n, act_z, diff, offset_add, perm_compose, perm_inverse, pointwise,
    seq_leq, shifted_add, shifted_sub,
)


@dataclass(frozen=True)
class Element:
    g: Perm
    d: NSeq
    r: NSeq

    def __repr__(self):
        return f"Element(g={self.g!r}, d={self.d.to_dict()}, r={self.r.to_dict()})"


@dataclass(frozen=True)
class BPair:
    p: NSeq
    q: NSeq


@dataclass(frozen=True)
class SdpElem:
    g: Perm
    pair: BPair


def identity():
    return Element(IDENTITY, ONE, ONE)


def idempotent(d):
    """The identity map of the filter ↑d."""
    return Element(IDENTITY, d, d)


def from_unit(g):
    return Element(g, ONE, ONE)


def h_element(g, d):
    return Element(g, d, d)


def compose(alpha, beta):
    """alpha then beta, as partial maps."""
    m = pointwise(alpha.r, beta.d, "max")
    try:
        d = offset_add(alpha.d, act_z(perm_inverse(alpha.g), diff(m, alpha.r)))
        r = offset_add(beta.r, act_z(beta.g, diff(m, beta.d)))
    except IntegerOverflowError:
        raise
    except DomainError as e:
        raise RuntimeError(f"composition produced an invalid triple for {alpha!r} * {beta!r}") from e
    return Element(perm_compose(alpha.g, beta.g), d, r)


def inverse(alpha):
    return Element(perm_inverse(alpha.g), alpha.r, alpha.d)


def is_idempotent(alpha):
    return alpha.g.is_identity() and alpha.d == alpha.r


def power(alpha, n):
    if n < 0:
        raise ValueError(f"power exponent must be non-negative, got {n}")
    result = identity()
    for _ in range(n):
        result = compose(result, alpha)
    return result


def _check_domain(alpha, a):
    if not seq_leq(alpha.d, a):
        index = min(x for x, value in alpha.d.items() if a[x] < value)
        raise DomainError(f"point is outside the domain: index {index} has {a[index]} < {alpha.d[index]}",
                          index=index)


def apply(alpha, a):
    _check_domain(alpha, a)
    return offset_add(alpha.r, act_z(alpha.g, diff(a, alpha.d)))


def shift_down(alpha, a):
    """rho_alpha: moves ↑d onto the whole space, a -> a - d + 1."""
    _check_domain(alpha, a)
    return shifted_sub(a, alpha.d)


def shift_up(alpha, a):
    """lambda_alpha: moves the whole space onto ↑r, a -> a + r - 1."""
    return shifted_add(a, alpha.r)


def apply_chain(alpha, a):
    return shift_up(alpha, act_n(alpha.g, shift_down(alpha, a)))


def bpair_mul(u, v):
    # (a, b) * (c, d) = (a + max{b,c} - b, d + max{b,c} - c)
    m = pointwise(u.q, v.p, "max")
    return BPair(offset_add(u.p, diff(m, u.q)), offset_add(v.q, diff(m, v.p)))


def bpair_act(g, u):
    return BPair(act_n(g, u.p), act_n(g, u.q))


def sdp_mul(s, t):
    return SdpElem(perm_compose(s.g, t.g), bpair_mul(bpair_act(t.g, s.pair), t.pair))


def psi(alpha):
    return SdpElem(alpha.g, BPair(act_n(alpha.g, alpha.d), alpha.r))


def psi_inverse(s):
    return Element(s.g, act_n(perm_inverse(s.g), s.pair.p), s.pair.q)


def mul_idempotent_right(alpha, e):
    """alpha * idempotent(e), from the closed form in semidirect coordinates."""
    m = pointwise(alpha.r, e, "max")
    p = offset_add(act_n(alpha.g, alpha.d), diff(m, alpha.r))
    return psi_inverse(SdpElem(alpha.g, BPair(p, m)))


def mul_idempotent_left(e, alpha):
    """idempotent(e) * alpha, from the closed form in semidirect coordinates."""
    p = act_n(alpha.g, pointwise(e, alpha.d, "max"))
    q = offset_add(alpha.r, diff(p, act_n(alpha.g, alpha.d)))
    return psi_inverse(SdpElem(alpha.g, BPair(p, q)))


def bicyclic_mul(i, j, k, l):
    """Product of the pairs (i, j) and (k, l) in the bicyclic monoid, case by case."""
    if j > k:
        return i, j - k + l
    if j == k:
        return i, l
    return i - j + k, l
