"""Natural partial order, Green's relations and bisimplicity witnesses."""
from src.errors import ArgumentError
from src.monoid import Element, compose, idempotent, is_idempotent
from src.seqcore import IDENTITY, act_n, diff, seq_leq

GREEN_RELATIONS = ("L", "R", "H", "D", "J")


def _displacement(alpha):
    return diff(act_n(alpha.g, alpha.d), alpha.r)


def nat_leq(alpha, beta):
    """alpha ≼ beta: same twist, same displacement and d_beta <= d_alpha."""
    return (alpha.g == beta.g
            and _displacement(alpha) == _displacement(beta)
            and seq_leq(beta.d, alpha.d))


def nat_leq_range(alpha, beta):
    """Equivalent form of nat_leq comparing ranges instead of domains."""
    return (alpha.g == beta.g
            and _displacement(alpha) == _displacement(beta)
            and seq_leq(beta.r, alpha.r))


def nat_leq_by_product(alpha, beta):
    return alpha == compose(beta, idempotent(alpha.d))


def green(rel, alpha, beta):
    if rel == "L":
        return alpha.d == beta.d
    elif rel == "R":
        return alpha.r == beta.r
    elif rel == "H":
        return alpha.d == beta.d and alpha.r == beta.r
    elif rel in ("D", "J"):
        # the monoid is bisimple, see d_witness
        return True
    raise ValueError(f"Unknown Green's relation: {rel}")


def d_witness(epsilon, iota):
    """An element alpha with alpha alpha^-1 = epsilon and alpha^-1 alpha = iota."""
    for name, value in (("epsilon", epsilon), ("iota", iota)):
        if not is_idempotent(value):
            raise ArgumentError(f"`{name}` has to be an idempotent but is {value!r}")
    return Element(IDENTITY, epsilon.d, iota.d)
