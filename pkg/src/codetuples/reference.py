"""Built-in reference tuples with hand-tabulated expectations.

Ten small tuples over {a, b, c, d} exercise every membership class, both
failure modes of the basic properties (one tuple has a dead table, one has
no common reachable table), and the whole rewrite chain: r3 rotates to r4,
r4 to r5, r5 is a rotation fixed point, dot sends r5 to r6, rotating that
gives r7, and ddot sends r7 to r8.  r9 and r10 are the two-table pair
separating the strictest class from the one below it.

The expectations here were worked out by hand from the definitions and are
deliberately independent of the package's own computations; the goldens
module replays them, and the tests use them as fixtures.
"""

from __future__ import annotations

from fractions import Fraction

from .bits import parse as parse_bits
from .core import SourceDist, make_tuple

SYMBOLS = ("a", "b", "c", "d")

KEYS = ("r1", "r2", "r3", "r4", "r5", "r6", "r7", "r8", "r9", "r10")

TUPLES = {
    "r1": make_tuple(SYMBOLS, [
        [("110", 0), ("-", 1), ("110", 2), ("111", 0)],
        [("010", 0), ("011", 2), ("1", 2), ("10", 1)],
        [("-", 2), ("-", 2), ("-", 2), ("-", 2)],
    ]),
    "r2": make_tuple(SYMBOLS, [
        [("11", 1), ("-", 1), ("101", 2), ("1011", 1)],
        [("0110", 1), ("0110", 1), ("01", 1), ("0111", 1)],
        [("10", 2), ("11", 2), ("1000", 2), ("1001", 2)],
    ]),
    "r3": make_tuple(SYMBOLS, [
        [("01", 0), ("10", 1), ("0100", 0), ("01", 2)],
        [("00", 1), ("-", 0), ("00111", 1), ("00111", 2)],
        [("1100", 1), ("1110", 0), ("111000", 2), ("110", 2)],
    ]),
    "r4": make_tuple(SYMBOLS, [
        [("01", 0), ("10", 1), ("0100", 0), ("011", 2)],
        [("00", 1), ("-", 0), ("00111", 1), ("001111", 2)],
        [("100", 1), ("110", 0), ("110001", 2), ("101", 2)],
    ]),
    "r5": make_tuple(SYMBOLS, [
        [("01", 0), ("10", 1), ("0100", 0), ("0111", 2)],
        [("00", 1), ("-", 0), ("00111", 1), ("0011111", 2)],
        [("00", 1), ("10", 0), ("100011", 2), ("011", 2)],
    ]),
    "r6": make_tuple(SYMBOLS, [
        [("10", 0), ("11", 1), ("1000", 0), ("1001", 2)],
        [("01", 1), ("-", 0), ("01001", 1), ("0100100", 2)],
        [("00", 1), ("10", 0), ("100011", 2), ("011", 2)],
    ]),
    "r7": make_tuple(SYMBOLS, [
        [("01", 0), ("1", 1), ("0001", 0), ("001", 2)],
        [("01", 1), ("1", 0), ("01001", 1), ("0100100", 2)],
        [("00", 1), ("101", 0), ("100011", 2), ("011", 2)],
    ]),
    "r8": make_tuple(SYMBOLS, [
        [("01", 0), ("1", 1), ("0001", 0), ("001", 2)],
        [("01", 1), ("1", 0), ("01001", 1), ("0100100", 2)],
        [("10", 1), ("011", 0), ("010011", 2), ("111", 2)],
    ]),
    "r9": make_tuple(SYMBOLS, [
        [("01", 1), ("1", 1), ("0001", 0), ("001", 1)],
        [("01", 1), ("1", 0), ("01001", 1), ("0100100", 1)],
    ]),
    "r10": make_tuple(SYMBOLS, [
        [("100", 0), ("00", 0), ("01", 0), ("1", 1)],
        [("1100", 0), ("11", 1), ("01", 0), ("10", 0)],
    ]),
}


def bitset(text):
    """A set of codewords from a space-separated string ('-' is empty)."""
    return frozenset(parse_bits(t) for t in text.split())


EXPECTED_NEXT_BITS = {
    "r1": ("0 1", "0 1", ""),
    "r2": ("0 1", "0", "1"),
    "r3": ("0 1", "0 1", "1"),
    "r4": ("0 1", "0 1", "1"),
    "r5": ("0 1", "0 1", "0 1"),
    "r6": ("1", "0 1", "0 1"),
    "r7": ("0 1", "0 1", "0 1"),
    "r8": ("0 1", "0 1", "0 1"),
    "r9": ("0 1", "0 1"),
    "r10": ("0 1", "0 1"),
}

EXPECTED_NEXT_PAIRS = {
    "r1": ("01 10 11", "01 10", ""),
    "r2": ("01 10 11", "01", "10 11"),
    "r3": ("01 10", "00 01 10", "11"),
    "r4": ("01 10", "00 01 10", "10 11"),
    "r5": ("01 10", "00 01 10", "00 01 10"),
    "r6": ("10 11", "01 10 11", "00 01 10"),
    "r7": ("00 01 10 11", "01 10 11", "00 01 10"),
    "r8": ("00 01 10 11", "01 10 11", "01 10 11"),
    "r9": ("00 01 10 11", "01 10 11"),
    "r10": ("00 01 10 11", "01 10 11"),
}

EXPECTED_CORE = {
    "r1": frozenset({2}),
    "r2": frozenset(),
    "r3": frozenset({0, 1, 2}),
    "r4": frozenset({0, 1, 2}),
    "r5": frozenset({0, 1, 2}),
    "r6": frozenset({0, 1, 2}),
    "r7": frozenset({0, 1, 2}),
    "r8": frozenset({0, 1, 2}),
    "r9": frozenset({0, 1}),
    "r10": frozenset({0, 1}),
}


def _flags(true_names):
    from .classes import CLASS_NAMES

    true_set = set(true_names.split())
    return {name: name in true_set for name in CLASS_NAMES}


EXPECTED_FLAGS = {
    "r1": _flags("regular decodable"),
    "r2": _flags("extendable"),
    "r3": _flags("extendable regular decodable f0"),
    "r4": _flags("extendable regular decodable f0"),
    "r5": _flags("extendable regular decodable f0 f1"),
    "r6": _flags("extendable regular decodable f0"),
    "r7": _flags("extendable regular decodable f0 f1 f2"),
    "r8": _flags("extendable regular decodable f0 f1 f2 f3"),
    "r9": _flags("extendable regular decodable f0 f1 f2 f3 f4"),
    "r10": _flags("extendable regular decodable f0 f1 f2 f3 f4 aifv"),
}

# Strict continuation pairs of r3 at each codeword: rows are symbols,
# columns tables.
EXPECTED_STRICT_PAIRS_R3 = {
    "a": ("00", "11", ""),
    "b": ("", "00", "00"),
    "c": ("", "", ""),
    "d": ("00", "", "00 01"),
}

# The rewrite chain; ops name transforms-module functions.
CHAIN = (
    ("r3", "rotate", "r4"),
    ("r4", "rotate", "r5"),
    ("r5", "rotate", "r5"),
    ("r5", "dot", "r6"),
    ("r6", "rotate", "r7"),
    ("r7", "ddot", "r8"),
)

EXPECTED_FORCED_BITS = {
    "r3": ("-", "-", "1"),
    "r4": ("-", "-", "1"),
}

EXPECTED_STEER_BITS = {"r5": (1, 1, 0)}

# encode(tuple, start table, symbols) and where the encoder ends up
ENCODE_GOLDEN = ("r3", 0, "badb", "1000001111110", 0)


def main_dist():
    """The worked-example distribution (0.1, 0.2, 0.3, 0.4)."""
    alphabet = TUPLES["r3"].alphabet
    return SourceDist(alphabet, (Fraction(1, 10), Fraction(2, 10),
                                 Fraction(3, 10), Fraction(4, 10)))


STATIONARY_GOLDEN = {
    "name": "r3",
    "matrix": (
        (Fraction(2, 5), Fraction(1, 5), Fraction(2, 5)),
        (Fraction(1, 5), Fraction(2, 5), Fraction(2, 5)),
        (Fraction(1, 5), Fraction(1, 10), Fraction(7, 10)),
    ),
    "pi": (Fraction(1, 4), Fraction(5, 28), Fraction(4, 7)),
    "table_lengths": (Fraction(13, 5), Fraction(37, 10), Fraction(21, 5)),
    "avg_len": Fraction(1039, 280),
    "avg_len_display": "3.7107",
}

HUFFMAN_GOLDEN = {
    "lengths": (3, 3, 2, 1),
    "avg_len": Fraction(19, 10),
}
