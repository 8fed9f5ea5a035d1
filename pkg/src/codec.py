"""
Canonical JSON text forms.

    NSeq / ZSeq  {"0":2,"3":7}          decimal index keys, ascending
    Perm         [[0,1],[1,0]]          [from, to] pairs, ascending by from
    Element      {"g":..,"d":..,"r":..}
    BPair        [p, q]
    SdpElem      {"g":..,"pair":[p,q]}
    QuotElem     {"g":..,"z":..}

Outside strict mode, entries holding the default value (1 for NSeq, 0 for ZSeq) and
fixed points of a Perm are accepted and normalized away.
"""
import json

from src.congruence import QuotElem
from src.errors import DomainError, ParseError
from src.monoid import BPair, Element, SdpElem
from src.seqcore import NSeq, Perm, ZSeq


def _no_duplicates(pairs):
    obj = {}
    for key, value in pairs:
        if key in obj:
            raise ParseError(f"duplicate key {key!r}")
        obj[key] = value
    return obj


def _load(text):
    if not isinstance(text, str):
        return text
    try:
        return json.loads(text, object_pairs_hook=_no_duplicates)
    except json.JSONDecodeError as e:
        raise ParseError(f"malformed JSON: {e.msg}", position=f"char {e.pos}") from None


def _is_int(value):
    return isinstance(value, int) and not isinstance(value, bool)


def _decode_seq(obj, cls, strict, position):
    if not isinstance(obj, dict):
        raise ParseError(f"{cls.__name__} has to be an object but is {type(obj).__name__}", position)
    entries = {}
    for key, value in obj.items():
        where = f"{position}/{key}"
        if not (key.isascii() and key.isdigit()) or (len(key) > 1 and key[0] == "0"):
            raise ParseError(f"index key has to be a decimal integer but is {key!r}", where)
        if not _is_int(value):
            raise ParseError(f"value has to be an integer but is {value!r}", where)
        if strict and value == cls.default:
            raise ParseError(f"default value {cls.default} must not be stored", where)
        entries[int(key)] = value
    try:
        return cls(entries)
    except DomainError as e:
        index = f"{position}/{e.index}" if e.index is not None else position
        raise ParseError(str(e), index) from None


def decode_nseq(obj, strict=False, position="nseq"):
    return _decode_seq(_load(obj), NSeq, strict, position)


def decode_zseq(obj, strict=False, position="zseq"):
    return _decode_seq(_load(obj), ZSeq, strict, position)


def decode_perm(obj, strict=False, position="g"):
    obj = _load(obj)
    if not isinstance(obj, list):
        raise ParseError(f"permutation has to be an array but is {type(obj).__name__}", position)
    mapping = {}
    for i, pair in enumerate(obj):
        where = f"{position}/{i}"
        if not isinstance(pair, list) or len(pair) != 2 or not all(_is_int(v) for v in pair):
            raise ParseError(f"permutation entry has to be a [from,to] pair but is {pair!r}", where)
        source, target = pair
        if source in mapping:
            raise ParseError(f"index {source} is mapped twice", where)
        if strict and source == target:
            raise ParseError(f"fixed point {source} must not be stored", where)
        mapping[source] = target
    if set(mapping.values()) != set(mapping):
        raise ParseError(f"value set {sorted(set(mapping.values()))} differs from key set {sorted(mapping)}",
                         position)
    try:
        return Perm(mapping)
    except DomainError as e:
        raise ParseError(str(e), position) from None


def _fields(obj, keys, name):
    if not isinstance(obj, dict):
        raise ParseError(f"{name} has to be an object but is {type(obj).__name__}", name)
    if set(obj) != set(keys):
        raise ParseError(f"{name} needs exactly the keys {list(keys)}, got {sorted(obj)}", name)
    return [obj[key] for key in keys]


def parse_element(text, strict=False):
    g, d, r = _fields(_load(text), ("g", "d", "r"), "element")
    return Element(decode_perm(g, strict, "g"), decode_nseq(d, strict, "d"), decode_nseq(r, strict, "r"))


def parse_quot(text, strict=False):
    g, z = _fields(_load(text), ("g", "z"), "quotient")
    return QuotElem(decode_perm(g, strict, "g"), decode_zseq(z, strict, "z"))


def parse_point(text, strict=False):
    return decode_nseq(text, strict, "point")


def encode_seq(a):
    return {str(x): value for x, value in a.items()}


def encode_perm(g):
    return [[x, y] for x, y in g.items()]


def encode(value):
    """JSON-ready form of any library value."""
    if isinstance(value, Element):
        return {"g": encode_perm(value.g), "d": encode_seq(value.d), "r": encode_seq(value.r)}
    if isinstance(value, QuotElem):
        return {"g": encode_perm(value.g), "z": encode_seq(value.z)}
    if isinstance(value, SdpElem):
        return {"g": encode_perm(value.g), "pair": encode(value.pair)}
    if isinstance(value, BPair):
        return [encode_seq(value.p), encode_seq(value.q)]
    if isinstance(value, (NSeq, ZSeq)):
        return encode_seq(value)
    if isinstance(value, Perm):
        return encode_perm(value)
    if isinstance(value, bool):
        return value
    raise TypeError(f"Cannot encode value of type {type(value).__name__}")


def render(value):
    return json.dumps(encode(value), separators=(",", ":"))
