"""Core value types and the text file formats.

A code tuple is a finite family of code tables over one alphabet.  Table i
assigns every symbol a binary codeword (possibly empty) and a next-table
index; encoding starts in a chosen table and hops tables after every symbol.
All values here are immutable and hashable so analysis results can be memoized
per tuple.  Symbol order is the order of first appearance in the alphabet
line; every iteration in the package follows that order.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .bits import Bits, parse as parse_bits, show as show_bits
from .errors import AlphabetMismatch, FormatError

MAX_FLOAT_DENOMINATOR = 10 ** 6
FLOAT_SUM_TOLERANCE = Fraction(1, 10 ** 12)


@dataclass(frozen=True)
class Alphabet:
    """An ordered set of distinct symbol names."""

    names: tuple

    def __post_init__(self):
        if not self.names:
            raise ValueError("alphabet is empty")
        if len(set(self.names)) != len(self.names):
            raise ValueError("duplicate symbol name")
        for name in self.names:
            if not name or any(ch.isspace() for ch in name):
                raise ValueError("bad symbol name: %r" % (name,))

    def __len__(self):
        return len(self.names)

    def __iter__(self):
        return iter(range(len(self.names)))

    def index(self, name):
        try:
            return self.names.index(name)
        except ValueError:
            raise KeyError("unknown symbol: %r" % (name,)) from None

    def name(self, sym):
        return self.names[sym]

    def seq(self, text):
        """Parse a source sequence.

        Accepts an iterable of names, a whitespace-separated string of
        names, or (when every name is one character) a plain concatenation
        like "badb".
        """
        if isinstance(text, str):
            tokens = text.split()
            if len(tokens) == 1 and tokens[0] not in self.names and all(
                len(n) == 1 for n in self.names
            ):
                tokens = list(tokens[0])
        else:
            tokens = list(text)
        return tuple(self.index(t) for t in tokens)

    def render(self, seq):
        """Render a source sequence as space-separated names."""
        return " ".join(self.names[s] for s in seq)


@dataclass(frozen=True)
class Table:
    """One code table: a codeword and a next-table index per symbol."""

    codes: tuple
    targets: tuple

    def __post_init__(self):
        if len(self.codes) != len(self.targets):
            raise ValueError("codes and targets differ in length")
        for c in self.codes:
            if not isinstance(c, Bits):
                raise TypeError("codeword must be Bits, got %r" % (c,))


@dataclass(frozen=True)
class CodeTuple:
    """A family of code tables over a common alphabet."""

    alphabet: Alphabet
    tables: tuple

    def __post_init__(self):
        if not self.tables:
            raise ValueError("a code tuple needs at least one table")
        m = len(self.tables)
        for t in self.tables:
            if len(t.codes) != len(self.alphabet):
                raise ValueError("table size does not match alphabet")
            for j in t.targets:
                if not 0 <= j < m:
                    raise ValueError("next-table index %r out of range" % (j,))

    @property
    def num_tables(self):
        return len(self.tables)

    @property
    def sigma(self):
        return len(self.alphabet)

    def code(self, i, sym):
        return self.tables[i].codes[sym]

    def target(self, i, sym):
        return self.tables[i].targets[sym]

    def table_indices(self):
        return range(len(self.tables))

    def max_code_len(self):
        return max(len(c) for t in self.tables for c in t.codes)

    def with_tables(self, tables):
        return CodeTuple(self.alphabet, tuple(tables))


def make_tuple(names, rows):
    """Build a CodeTuple from symbol names and per-table (code, target) rows.

    ``rows`` is a sequence of tables; each table is a sequence of
    (codeword string, target index) pairs in symbol order.
    """
    alphabet = Alphabet(tuple(names))
    tables = []
    for table_rows in rows:
        codes = tuple(parse_bits(c) if isinstance(c, str) else Bits(c)
                      for c, _ in table_rows)
        targets = tuple(int(j) for _, j in table_rows)
        tables.append(Table(codes, targets))
    return CodeTuple(alphabet, tuple(tables))


@dataclass(frozen=True)
class SourceDist:
    """Exact symbol probabilities over an alphabet, summing to one."""

    alphabet: Alphabet
    probs: tuple

    def __post_init__(self):
        if len(self.probs) != len(self.alphabet):
            raise ValueError("distribution size does not match alphabet")
        for p in self.probs:
            if not isinstance(p, Fraction):
                raise TypeError("probability must be Fraction, got %r" % (p,))
            if p <= 0:
                raise ValueError("probabilities must be positive")
        if sum(self.probs) != 1:
            raise ValueError("probabilities sum to %s, not 1" % (sum(self.probs),))

    def __getitem__(self, sym):
        return self.probs[sym]

    @classmethod
    def uniform(cls, alphabet):
        n = len(alphabet)
        return cls(alphabet, tuple(Fraction(1, n) for _ in range(n)))

    @classmethod
    def from_values(cls, alphabet, values):
        """Build from ints, Fractions, strings, or floats.

        Floats are snapped to rationals with denominator at most 10**6; a
        leftover defect up to 10**-12 is absorbed into the largest entry so
        the stored values still sum to one exactly.
        """
        probs = []
        inexact = False
        for v in values:
            if isinstance(v, float):
                probs.append(Fraction(v).limit_denominator(MAX_FLOAT_DENOMINATOR))
                inexact = True
            else:
                probs.append(Fraction(v))
        defect = 1 - sum(probs)
        if defect != 0:
            if not inexact or abs(defect) > FLOAT_SUM_TOLERANCE:
                raise ValueError("probabilities sum to %s, not 1" % (sum(probs),))
            top = probs.index(max(probs))
            probs[top] += defect
        return cls(alphabet, tuple(probs))


def check_same_alphabet(code, dist):
    if code.alphabet != dist.alphabet:
        raise AlphabetMismatch("code tuple and distribution use different alphabets")


# --------------------------------------------------------------------------
# Text formats.
#
# Code tuple file, line oriented, '#' starts a comment:
#
#   alphabet a b c d
#   tables 3
#   table 0
#   a 01 0
#   ...
#
# Codewords use '-' for the empty string.  Distribution file: one
# "symbol probability" pair per line, probability as decimal or p/q.
# --------------------------------------------------------------------------


def _content_lines(text):
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield lineno, line


def parse_code_tuple(text):
    """Parse the code-tuple file format into a CodeTuple."""
    lines = list(_content_lines(text))
    if not lines:
        raise FormatError("empty file")
    pos = 0

    lineno, line = lines[pos]
    fields = line.split()
    if fields[0] != "alphabet":
        raise FormatError("expected 'alphabet ...'", lineno)
    if len(fields) < 2:
        raise FormatError("alphabet needs at least one symbol", lineno)
    try:
        alphabet = Alphabet(tuple(fields[1:]))
    except ValueError as exc:
        raise FormatError(str(exc), lineno) from None
    pos += 1

    if pos >= len(lines):
        raise FormatError("missing 'tables N' line")
    lineno, line = lines[pos]
    fields = line.split()
    if fields[0] != "tables" or len(fields) != 2 or not fields[1].isdigit():
        raise FormatError("expected 'tables N'", lineno)
    num_tables = int(fields[1])
    if num_tables < 1:
        raise FormatError("need at least one table", lineno)
    pos += 1

    tables = []
    for i in range(num_tables):
        if pos >= len(lines):
            raise FormatError("missing 'table %d' block" % i)
        lineno, line = lines[pos]
        if line.split() != ["table", str(i)]:
            raise FormatError("expected 'table %d'" % i, lineno)
        pos += 1
        codes = [None] * len(alphabet)
        targets = [None] * len(alphabet)
        for _ in range(len(alphabet)):
            if pos >= len(lines):
                raise FormatError("table %d is missing rows" % i)
            lineno, line = lines[pos]
            fields = line.split()
            if len(fields) != 3:
                raise FormatError("expected 'symbol codeword target'", lineno)
            name, word, target = fields
            try:
                sym = alphabet.index(name)
            except KeyError:
                raise FormatError("unknown symbol %r" % name, lineno) from None
            if codes[sym] is not None:
                raise FormatError("duplicate row for symbol %r" % name, lineno)
            try:
                codes[sym] = parse_bits(word)
            except ValueError:
                raise FormatError("bad codeword %r" % word, lineno) from None
            if not target.isdigit() or int(target) >= num_tables:
                raise FormatError(
                    "next-table index %r out of range 0..%d" % (target, num_tables - 1),
                    lineno,
                )
            targets[sym] = int(target)
            pos += 1
        tables.append(Table(tuple(codes), tuple(targets)))

    if pos != len(lines):
        lineno, line = lines[pos]
        raise FormatError("unexpected trailing content: %r" % line, lineno)
    return CodeTuple(alphabet, tuple(tables))


def serialize_code_tuple(code):
    """Render a CodeTuple in the file format (round-trips with the parser)."""
    out = ["alphabet " + " ".join(code.alphabet.names)]
    out.append("tables %d" % code.num_tables)
    for i, table in enumerate(code.tables):
        out.append("table %d" % i)
        for sym in code.alphabet:
            out.append("%s %s %d" % (
                code.alphabet.name(sym), show_bits(table.codes[sym]),
                table.targets[sym],
            ))
    return "\n".join(out) + "\n"


def _parse_probability(token, lineno):
    try:
        if "/" in token:
            return Fraction(token), False
        if "." in token or "e" in token or "E" in token:
            return Fraction(token), True
        return Fraction(int(token)), False
    except (ValueError, ZeroDivisionError):
        raise FormatError("bad probability %r" % token, lineno) from None


def parse_dist(text, alphabet=None):
    """Parse a distribution file; optionally check it against an alphabet."""
    names = []
    probs = []
    exact = True
    for lineno, line in _content_lines(text):
        fields = line.split()
        if len(fields) != 2:
            raise FormatError("expected 'symbol probability'", lineno)
        name, token = fields
        if name in names:
            raise FormatError("duplicate symbol %r" % name, lineno)
        p, from_decimal = _parse_probability(token, lineno)
        names.append(name)
        probs.append(p)
        exact = exact and not from_decimal
    if not names:
        raise FormatError("empty distribution file")
    if alphabet is None:
        alphabet = Alphabet(tuple(names))
        ordered = probs
    else:
        if set(names) != set(alphabet.names):
            raise FormatError("distribution symbols do not match the alphabet")
        by_name = dict(zip(names, probs))
        ordered = [by_name[n] for n in alphabet.names]
    defect = 1 - sum(ordered)
    if defect != 0:
        # Decimal entries are exact rationals already; only a written-out
        # rounding of a repeating expansion can miss, and then only by the
        # documented tolerance.
        if exact or abs(defect) > FLOAT_SUM_TOLERANCE:
            raise FormatError("probabilities sum to %s, not 1" % (sum(ordered),))
        top = ordered.index(max(ordered))
        ordered[top] += defect
    try:
        return SourceDist(alphabet, tuple(ordered))
    except ValueError as exc:
        raise FormatError(str(exc)) from None


def serialize_dist(dist):
    out = []
    for sym in dist.alphabet:
        out.append("%s %s" % (dist.alphabet.name(sym), dist.probs[sym]))
    return "\n".join(out) + "\n"
