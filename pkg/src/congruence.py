"""
The least group congruence: canonical forms in the group S_kappa ⋉ sigma-Z^kappa, lifts back
into the monoid, top elements of classes, and the constructions used to show that every
non-trivial congruence collapses all idempotents.
"""
from dataclasses import dataclass

from src.errors import ArgumentError
from src.monoid import Element, compose, from_unit, idempotent, identity, inverse, is_idempotent
from src.seqcore import (
    IDENTITY, ONE, ZERO, NSeq, Perm, ZSeq, act_n, act_z, atom, diff, offset_add, perm_compose, perm_inverse,
    pointwise, transposition, zadd, zneg,
)


@dataclass(frozen=True)
class QuotElem:
    g: Perm
    z: ZSeq


def quot_identity():
    return QuotElem(IDENTITY, ZERO)


def canonical(alpha):
    return QuotElem(alpha.g, diff(act_n(alpha.g, alpha.d), alpha.r))


def cmg_related(alpha, beta):
    return canonical(alpha) == canonical(beta)


def witness_idempotent(alpha, beta):
    """An idempotent epsilon with alpha epsilon = beta epsilon."""
    if not cmg_related(alpha, beta):
        raise ArgumentError(f"elements are not congruent: {alpha!r}, {beta!r}")
    return idempotent(pointwise(alpha.r, beta.r, "max"))


def quot_mul(s, t):
    return QuotElem(perm_compose(s.g, t.g), zadd(act_z(t.g, s.z), t.z))


def quot_inv(s):
    g_inv = perm_inverse(s.g)
    return QuotElem(g_inv, zneg(act_z(g_inv, s.z)))


def lift(q):
    """A preimage of q: split z into positive and negative parts, both shifted up by one."""
    a = NSeq({x: value + 1 for x, value in q.z.items() if value > 0})
    b = NSeq({x: 1 - value for x, value in q.z.items() if value < 0})
    return Element(q.g, act_n(perm_inverse(q.g), a), b)


def top(alpha):
    """The greatest element of the congruence class of alpha."""
    g_inv = perm_inverse(alpha.g)
    d = offset_add(ONE, diff(alpha.d, pointwise(alpha.d, act_n(g_inv, alpha.r), "min")))
    r = offset_add(ONE, diff(alpha.r, pointwise(act_n(alpha.g, alpha.d), alpha.r, "min")))
    return Element(alpha.g, d, r)


def collapse_witness(iota):
    """The map z -> z + d_iota - 1 from the whole space onto dom iota."""
    if not is_idempotent(iota):
        raise ArgumentError(f"`iota` has to be an idempotent but is {iota!r}")
    return Element(IDENTITY, ONE, iota.d)


def power_idempotent(gamma, n):
    """(gamma^-1)^n gamma^n by repeated composition."""
    if n < 0:
        raise ArgumentError(f"`n` has to be non-negative but is {n}")
    gamma_inv = inverse(gamma)
    left, right = identity(), identity()
    for _ in range(n):
        left = compose(left, gamma_inv)
        right = compose(right, gamma)
    return compose(left, right)


def conjugate_idempotent(alpha, epsilon):
    """alpha epsilon alpha^-1, an idempotent whenever epsilon is."""
    if not is_idempotent(epsilon):
        raise ArgumentError(f"`epsilon` has to be an idempotent but is {epsilon!r}")
    return compose(compose(alpha, epsilon), inverse(alpha))


def swap_idempotent(x, y):
    """Conjugates the idempotent of ↑2_x by the unit swapping x and y."""
    unit = from_unit(transposition(x, y))
    return compose(compose(unit, idempotent(atom(x, 2))), unit)


def separating_idempotent(gamma):
    """
    For a unit gamma other than the identity returns (epsilon, epsilon gamma epsilon), two
    elements that are not H-related although they are congruent whenever gamma is congruent
    to the identity.
    """
    if gamma.d != ONE or gamma.r != ONE or gamma.g.is_identity():
        raise ArgumentError(f"`gamma` has to be a non-identity unit but is {gamma!r}")
    x = min(gamma.g.moved)
    epsilon = idempotent(atom(x, 2))
    return epsilon, compose(compose(epsilon, gamma), epsilon)
