"""
Sparse exact arithmetic on finitely supported sequences and finitary permutations.

Indices are non-negative integers. An NSeq stores only the indices whose value differs
from 1, a ZSeq only those differing from 0, and a Perm only the indices it moves, so
structural equality is mathematical equality.
"""
from src.errors import DomainError, IntegerOverflowError

INT64_MAX = 2 ** 63 - 1


def _check_index(index):
    if isinstance(index, bool) or not isinstance(index, int):
        raise DomainError(f"index must be an int, got {type(index).__name__}")
    if index < 0:
        raise DomainError(f"index must be non-negative, got {index}", index=index)


def _check_int64(value, index=None):
    if isinstance(value, bool) or not isinstance(value, int):
        raise DomainError(f"value must be an int, got {type(value).__name__}", index=index)
    if abs(value) > INT64_MAX:
        raise IntegerOverflowError(f"value {value} at index {index} overflows int64", index=index)


class _SparseSeq:
    __slots__ = ("_entries", "_hash")
    default = None

    def __init__(self, entries=None):
        clean = {}
        for index, value in dict(entries or {}).items():
            _check_index(index)
            _check_int64(value, index)
            self._check_value(index, value)
            if value != self.default:
                clean[index] = value
        self._entries = dict(sorted(clean.items()))
        self._hash = hash((type(self).__name__, frozenset(self._entries.items())))

    @staticmethod
    def _check_value(index, value):
        pass

    def __getitem__(self, index):
        return self._entries.get(index, self.default)

    @property
    def support(self):
        return frozenset(self._entries)

    def items(self):
        return self._entries.items()

    def to_dict(self):
        return dict(self._entries)

    def __len__(self):
        return len(self._entries)

    def __eq__(self, other):
        if type(other) is not type(self):
            return NotImplemented
        return self._entries == other._entries

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return f"{type(self).__name__}({self._entries!r})"


class NSeq(_SparseSeq):
    """Finitely supported map index -> positive integer, default value 1."""

    __slots__ = ()
    default = 1

    @staticmethod
    def _check_value(index, value):
        if value <= 0:
            raise DomainError(f"NSeq values must be positive, index {index} has {value}", index=index)


class ZSeq(_SparseSeq):
    """Finitely supported map index -> integer, default value 0."""

    __slots__ = ()
    default = 0


ONE = NSeq()
ZERO = ZSeq()


class Perm:
    """Finitary bijection of the indices; only moved points are stored."""

    __slots__ = ("_moved", "_hash")

    def __init__(self, mapping=None):
        mapping = dict(mapping or {})
        for index, image in mapping.items():
            _check_index(index)
            _check_index(image)
        if len(set(mapping.values())) != len(mapping):
            raise DomainError("permutation mapping is not injective")
        if set(mapping.values()) != set(mapping):
            stray = min(set(mapping.values()) ^ set(mapping))
            raise DomainError(f"permutation is not closed on its key set, index {stray}", index=stray)
        self._moved = {x: y for x, y in sorted(mapping.items()) if x != y}
        self._hash = hash(frozenset(self._moved.items()))

    def __call__(self, index):
        return self._moved.get(index, index)

    @property
    def moved(self):
        return frozenset(self._moved)

    def items(self):
        return self._moved.items()

    def is_identity(self):
        return not self._moved

    def __eq__(self, other):
        if not isinstance(other, Perm):
            return NotImplemented
        return self._moved == other._moved

    def __hash__(self):
        return self._hash

    def __repr__(self):
        cycles = perm_cycles(self)
        if not cycles:
            return "Perm(id)"
        return "Perm(" + "".join("(" + " ".join(map(str, c)) + ")" for c in cycles) + ")"


IDENTITY = Perm()


def atom(x, k):
    """The sequence k_x: value k at x and 1 elsewhere."""
    return uniform([x], k)


def uniform(indices, k):
    """The sequence k_A: value k on every index of A and 1 elsewhere."""
    if isinstance(k, bool) or not isinstance(k, int) or k <= 0:
        raise DomainError(f"sequence value must be a positive int, got {k!r}")
    return NSeq({x: k for x in indices})


def pointwise(a, b, op):
    if op == "max":
        fn = max
    elif op == "min":
        fn = min
    else:
        raise ValueError(f"Unknown pointwise operation: {op}")
    return NSeq({x: fn(a[x], b[x]) for x in a.support | b.support})


def shifted_add(a, b):
    """a + b - 1, pointwise."""
    return NSeq({x: a[x] + b[x] - 1 for x in a.support | b.support})


def shifted_sub(a, b):
    """a - b + 1, pointwise; defined only when b <= a."""
    for x in sorted(b.support):
        if a[x] < b[x]:
            raise DomainError(f"shifted_sub undefined: index {x} has {a[x]} < {b[x]}", index=x)
    return NSeq({x: a[x] - b[x] + 1 for x in a.support | b.support})


def diff(a, b):
    return ZSeq({x: a[x] - b[x] for x in a.support | b.support})


def offset_add(a, z):
    values = {}
    for x in sorted(a.support | z.support):
        value = a[x] + z[x]
        if value <= 0:
            raise DomainError(f"offset_add out of range: index {x} would be {value}", index=x)
        values[x] = value
    return NSeq(values)


def seq_leq(a, b):
    # indices outside a's support hold 1, the bottom value
    return all(value <= b[x] for x, value in a.items())


def project(a, x):
    return NSeq({x: a[x]})


def zadd(m, n):
    return ZSeq({x: m[x] + n[x] for x in m.support | n.support})


def zneg(m):
    return ZSeq({x: -value for x, value in m.items()})


def perm_apply(g, x):
    return g(x)


def perm_compose(g, h):
    """The bijection x -> h(g(x)): g is applied first."""
    return Perm({x: h(g(x)) for x in g.moved | h.moved})


def perm_inverse(g):
    return Perm({y: x for x, y in g.items()})


def transposition(x, y):
    return Perm({x: y, y: x}) if x != y else IDENTITY


def perm_cycles(g):
    """Cycles of g, each starting from its smallest index, sorted by that index."""
    cycles = []
    unseen = set(g.moved)
    while unseen:
        first = min(unseen)
        cycle = [first]
        index = g(first)
        while index != first:
            cycle.append(index)
            index = g(index)
        unseen.difference_update(cycle)
        cycles.append(tuple(cycle))
    return tuple(cycles)


def act_n(g, a):
    """Relabel a by g: the entry stored at x moves to g(x)."""
    return NSeq({g(x): value for x, value in a.items()})


def act_z(g, z):
    return ZSeq({g(x): value for x, value in z.items()})
