import pytest
from hypothesis import given

from src.errors import ArgumentError
from src.monoid import Element, compose, from_unit, h_element, idempotent, identity, inverse, is_idempotent
from src.order import GREEN_RELATIONS, d_witness, green, nat_leq, nat_leq_by_product, nat_leq_range
from src.seqcore import IDENTITY, NSeq, Perm, seq_leq
from tests.strategies import elements, nseqs, perms

SWAP = Perm({0: 1, 1: 0})


def el(g, d, r):
    return Element(g, NSeq(d), NSeq(r))


def test_nat_leq_examples():
    alpha = el(SWAP, {0: 2}, {1: 3})
    assert nat_leq(alpha, alpha)
    assert nat_leq(idempotent(NSeq({0: 2})), identity())
    assert not nat_leq(identity(), idempotent(NSeq({0: 2})))
    assert nat_leq(el(IDENTITY, {0: 3}, {0: 4}), el(IDENTITY, {0: 2}, {0: 3}))
    assert nat_leq_range(el(IDENTITY, {0: 3}, {0: 4}), el(IDENTITY, {0: 2}, {0: 3}))
    assert not nat_leq(el(IDENTITY, {0: 3}, {0: 3}), el(IDENTITY, {0: 2}, {0: 3}))
    assert not nat_leq(from_unit(SWAP), identity())


def test_green_examples():
    g, h = SWAP, Perm({1: 2, 2: 1})
    assert green("L", el(g, {0: 2}, {0: 9}), el(h, {0: 2}, {1: 3}))
    assert not green("R", el(g, {0: 2}, {0: 9}), el(h, {0: 2}, {1: 3}))
    alpha = el(g, {0: 2}, {1: 3})
    assert green("H", alpha, inverse(alpha)) == (alpha.d == alpha.r)
    assert green("H", h_element(g, NSeq({0: 2})), h_element(h, NSeq({0: 2})))
    assert green("D", identity(), alpha) and green("J", alpha, identity())
    with pytest.raises(ValueError):
        green("X", alpha, alpha)
    assert GREEN_RELATIONS == ("L", "R", "H", "D", "J")


def test_d_witness():
    assert d_witness(identity(), identity()) == identity()
    epsilon, iota = idempotent(NSeq({0: 2})), idempotent(NSeq({1: 3}))
    witness = d_witness(epsilon, iota)
    assert witness == el(IDENTITY, {0: 2}, {1: 3})
    assert compose(witness, inverse(witness)) == epsilon
    assert compose(inverse(witness), witness) == iota
    with pytest.raises(ArgumentError):
        d_witness(el(IDENTITY, {0: 2}, {0: 3}), iota)
    with pytest.raises(ArgumentError):
        d_witness(epsilon, from_unit(SWAP))


@given(elements(), elements())
def test_criteria_agree(alpha, beta):
    assert nat_leq(alpha, beta) == nat_leq_range(alpha, beta) == nat_leq_by_product(alpha, beta)


@given(elements(), nseqs(), nseqs())
def test_order_on_constructed_pairs(beta, e, f):
    below = compose(beta, idempotent(e))
    lower = compose(below, idempotent(f))
    assert nat_leq(below, beta)
    assert nat_leq(lower, below) and nat_leq(lower, beta)
    assert below == compose(beta, idempotent(below.d))
    assert below == compose(idempotent(below.d), beta)
    if nat_leq(beta, below):
        assert beta == below


@given(nseqs(), nseqs())
def test_order_on_idempotents(e, f):
    epsilon, zeta = idempotent(e), idempotent(f)
    assert nat_leq(epsilon, zeta) == seq_leq(f, e)
    assert nat_leq(epsilon, zeta) == (compose(epsilon, zeta) == epsilon)


@given(elements(), elements())
def test_green_implications(alpha, beta):
    if green("H", alpha, beta):
        assert green("L", alpha, beta) and green("R", alpha, beta)
    for rel in ("L", "R"):
        if green(rel, alpha, beta):
            assert green("D", alpha, beta)
    assert green("L", alpha, beta) == (compose(alpha, inverse(alpha)) == compose(beta, inverse(beta)))


@given(nseqs(), nseqs())
def test_bisimplicity(e, f):
    witness = d_witness(idempotent(e), idempotent(f))
    assert compose(witness, inverse(witness)) == idempotent(e)
    assert compose(inverse(witness), witness) == idempotent(f)


@given(elements(), nseqs(), perms())
def test_e_unitary(alpha, e, g):
    epsilon = idempotent(e)
    for candidate in (alpha, h_element(g, alpha.d), compose(alpha, inverse(alpha))):
        if is_idempotent(compose(candidate, epsilon)):
            assert is_idempotent(candidate)
