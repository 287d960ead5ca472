"""Rewrites that reshape continuation sets while preserving cost.

All three rewrites keep the alphabet, the table count, the next-table maps,
and the expected codeword length; they only rewrite codeword bits.

rotate: every table whose emissions all start with the same forced bit stops
emitting it and its callers append it instead, so the forced bit migrates
one codeword boundary backwards.  Repeated on a well-behaved tuple this
makes every table able to emit both next bits.

dot: rewrites each codeword along its prefix chain so that the bits that
extend a codeword disagree, right where the decoder looks, with the steer
bit of the table the shorter codeword jumps to.  Together with one rotate
this strictly shrinks the set of tables having only two 2-bit continuations.

ddot: reserves the pair 00 for in-codeword extension everywhere, freeing
01, 10, 11 as emittable pairs of every table.

The prefix-chain split, the per-table forced bit and steer bit, multi-step
chains toward a target family, reachable-table pruning, and the one-to-two
table extension live here too.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .bits import EMPTY, ONE, ZERO, Bits, bit as bit_of
from .analysis import (
    dead_tables,
    delay_decodability,
    is_regular,
    reachable_tables,
    two_continuation_tables,
)
from .classes import BOTH_BITS, NONZERO_PAIRS, classify, show_set
from .core import CodeTuple, Table
from .errors import (
    AmbiguousChain,
    NonTerminatingRecursion,
    NotExtendable,
    NotInClass,
    NotRegular,
    StepLimitExceeded,
    WrongTableCount,
)
from .markov import average_length
from .prefix_sets import PrefixSetTable, symbols_with_codeword

ZERO_PAIR = ZERO + ZERO


def forced_bit(code, i, sets=None):
    """The single bit every emission of table i starts with, or empty.

    Undefined (NotExtendable) for a table that emits nothing.
    """
    sets = sets or PrefixSetTable(code)
    first = sets.base(i, 1)
    if not first:
        raise NotExtendable("table %d emits no bits" % i)
    if len(first) == 2:
        return EMPTY
    return next(iter(first))


def rotate(code, sets=None):
    """Move each table's forced first bit across codeword boundaries."""
    sets = sets or PrefixSetTable(code)
    dead = dead_tables(code, sets)
    if dead:
        raise NotExtendable("table %d emits no bits" % dead[0])
    forced = [forced_bit(code, i, sets) for i in code.table_indices()]
    tables = []
    for i in code.table_indices():
        keep_head = len(sets.base(i, 1)) == 2
        codes = []
        for s in code.alphabet:
            word = code.code(i, s) + forced[code.target(i, s)]
            # A forced-bit table appending an empty forced bit cannot
            # happen: an empty own codeword inherits the target's bit.
            codes.append(word if keep_head else word.drop_first())
        tables.append(Table(tuple(codes), code.tables[i].targets))
    return code.with_tables(tables)


@dataclass(frozen=True)
class ChainDecomposition:
    """A codeword split along the codewords that are its strict prefixes.

    chain lists the owning symbols shortest-prefix first, ending with the
    symbol itself; parts are the successive increments, so concatenating
    parts yields the codeword and every chain prefix is itself a codeword.
    """

    table: int
    chain: tuple
    parts: tuple

    @property
    def codeword(self):
        out = EMPTY
        for p in self.parts:
            out = out + p
        return out


def prefix_chain(code, i, s):
    """Chain-decompose the codeword of (table i, symbol s).

    Each strict-prefix codeword must belong to exactly one symbol for the
    chain to be meaningful; a shared one raises AmbiguousChain.
    """
    word = code.code(i, s)
    below = {}
    for s2 in code.alphabet:
        c = code.code(i, s2)
        if c.is_proper_prefix_of(word):
            if c in below:
                raise AmbiguousChain(
                    "table %d: codeword %r of %s is shared by %s" % (
                        i, str(c), code.alphabet.name(s2),
                        code.alphabet.name(below[c])))
            below[c] = s2
    order = sorted(below, key=len)
    chain = tuple(below[c] for c in order) + (s,)
    parts = []
    prev = EMPTY
    for c in order + [word]:
        parts.append(c.strip_prefix(prev))
        prev = c
    return ChainDecomposition(i, chain, tuple(parts))


def steer_bit(code, i, sets=None):
    """The bit dot-rewritten emissions of table i are made to start with.

    A table whose single empty codeword delegates to another table inherits
    that table's bit; otherwise the bit is 0 exactly when 00 is an
    emittable pair.  Delegation cycles are rejected.
    """
    sets = sets or PrefixSetTable(code)
    seen = []
    j = i
    while True:
        if j in seen:
            cycle = seen[seen.index(j):] + [j]
            raise NonTerminatingRecursion(
                "empty-codeword delegation cycle through tables %s"
                % "->".join(str(t) for t in cycle))
        seen.append(j)
        empties = symbols_with_codeword(code, j, EMPTY)
        if len(empties) == 1:
            j = code.target(j, empties[0])
            continue
        return 0 if ZERO_PAIR in sets.base(j, 2) else 1


def _require_class(code, sets, name, pair_floor):
    """Shared precondition for dot (f1 shapes) and ddot (f2 shapes)."""
    if not is_regular(code):
        raise NotInClass(name, "no table is reachable from every table")
    report = delay_decodability(code, 2, sets)
    if not report.ok:
        raise NotInClass(name, report.violations[0].describe(code))
    for i in code.table_indices():
        if name == "f1" and sets.base(i, 1) != BOTH_BITS:
            raise NotInClass(name, "table %d next-bit set is %s" % (
                i, show_set(sets.base(i, 1))))
        if name == "f2" and len(sets.base(i, 2)) < pair_floor:
            raise NotInClass(name, "table %d has only %d two-bit continuations"
                             % (i, len(sets.base(i, 2))))


def dot(code, sets=None):
    """Rewrite codewords along prefix chains against the steer bits."""
    sets = sets or PrefixSetTable(code)
    _require_class(code, sets, "f1", 2)
    steer = [steer_bit(code, i, sets) for i in code.table_indices()]
    tables = []
    for i in code.table_indices():
        two_pairs = len(sets.base(i, 2)) == 2
        codes = []
        for s in code.alphabet:
            codes.append(_dot_word(code, sets, steer, i, s, two_pairs))
        tables.append(Table(tuple(codes), code.tables[i].targets))
    return code.with_tables(tables)


def _dot_word(code, sets, steer, i, s, two_pairs):
    decomp = prefix_chain(code, i, s)
    out = EMPTY
    for r, part in enumerate(decomp.parts):
        if r == 0:
            if two_pairs and part:
                # A single-bit codeword in a two-pair table would force
                # both pairs to share its head, against the next-bit set
                # being {0, 1}; the precondition rules it out.
                assert len(part) >= 2, "one-bit codeword in a two-pair table"
                piece = bit_of(steer[i]) + part.head(1) + part.tail_from(2)
            else:
                piece = part
        else:
            # Chain increments have at least two bits: a one-bit increment
            # would clash with the target table emitting that same bit.
            assert len(part) >= 2, "one-bit chain increment"
            prev_word = code.code(i, decomp.chain[r - 1])
            j = code.target(i, decomp.chain[r - 1])
            opposite = bit_of(1 - steer[j])
            longer = len(sets.strict_continuations(i, prev_word, 1))
            straight = len(sets.strict_continuations(j, EMPTY, 1))
            if longer == 2:
                piece = opposite + part.head(1) + part.tail_from(2)
            elif longer == 1 and straight == 1:
                piece = opposite + ZERO + part.tail_from(2)
            elif longer == 1 and straight == 2 and len(sets.base(j, 2)) == 2:
                # The rewritten increment lands at the head of the whole
                # codeword exactly when the previous chain codeword is
                # empty; only then the filler bit is 1.
                filler = ONE if len(prev_word) == 0 else ZERO
                piece = opposite + filler + part.tail_from(2)
            elif longer == 1 and straight == 2:
                piece = part
            else:
                raise NotInClass("f1", "table %d, symbol %s: continuation "
                                 "profile out of range" % (
                                     i, code.alphabet.name(s)))
        out = out + piece
    return out


def ddot(code, sets=None):
    """Reserve the pair 00 for in-codeword extensions everywhere."""
    sets = sets or PrefixSetTable(code)
    _require_class(code, sets, "f2", 3)
    tables = []
    for i in code.table_indices():
        pairs = sets.base(i, 2)
        codes = []
        for s in code.alphabet:
            decomp = prefix_chain(code, i, s)
            out = EMPTY
            for r, part in enumerate(decomp.parts):
                if r > 0:
                    assert len(part) >= 2, "one-bit chain increment"
                    piece = ZERO_PAIR + part.tail_from(2)
                elif len(pairs) == 4 or len(part) == 0:
                    piece = part
                elif len(part) == 1:
                    piece = ONE
                else:
                    sibling = part.head(1) + bit_of(1 - part[1])
                    if sibling not in pairs:
                        piece = ZERO + ONE + part.tail_from(2)
                    else:
                        piece = ONE + part.tail_from(1)
                out = out + piece
            codes.append(out)
        tables.append(Table(tuple(codes), code.tables[i].targets))
    return code.with_tables(tables)


@dataclass(frozen=True)
class TransformStep:
    op: str
    result: CodeTuple
    table_bits: tuple
    avg_len: object


@dataclass
class TransformTrace:
    start: CodeTuple
    target: str
    steps: tuple

    @property
    def final(self):
        return self.steps[-1].result if self.steps else self.start


def _step(op, result, bits, dist):
    avg = average_length(result, dist) if dist is not None else None
    return TransformStep(op, result, bits, avg)


def chain_to_class(code, target, dist=None):
    """Apply rewrites until the tuple lands in the target family.

    f1: repeated rotate; f2: alternating dot and rotate from an f1 member;
    f3: one ddot from an f2 member.  Step limits are explicit because
    termination is only guaranteed for inputs of minimal cost.
    """
    sets = PrefixSetTable(code)
    steps = []
    if target == "f1":
        if dead_tables(code, sets):
            raise NotInClass("f0", "not extendable")
        if not is_regular(code):
            raise NotInClass("f0", "not regular")
        if not delay_decodability(code, 2, sets).ok:
            raise NotInClass("f0", "not decodable with delay 2")
        limit = 2 * code.max_code_len() + 2
        current = code
        while any(sets.base(i, 1) != BOTH_BITS for i in current.table_indices()):
            if len(steps) >= limit:
                raise StepLimitExceeded(
                    "still outside f1 after %d rotations" % limit)
            forced = tuple(forced_bit(current, i, sets)
                           for i in current.table_indices())
            current = rotate(current, sets)
            sets = PrefixSetTable(current)
            steps.append(_step("rotate", current, forced, dist))
    elif target == "f2":
        _require_class(code, sets, "f1", 2)
        limit = code.num_tables + 1
        current = code
        rounds = 0
        while two_continuation_tables(current, sets):
            if rounds >= limit:
                raise StepLimitExceeded(
                    "still outside f2 after %d dot-rotate rounds" % limit)
            steer = tuple(steer_bit(current, i, sets)
                          for i in current.table_indices())
            current = dot(current, sets)
            sets = PrefixSetTable(current)
            steps.append(_step("dot", current, steer, dist))
            forced = tuple(forced_bit(current, i, sets)
                           for i in current.table_indices())
            current = rotate(current, sets)
            sets = PrefixSetTable(current)
            steps.append(_step("rotate", current, forced, dist))
            rounds += 1
    elif target == "f3":
        _require_class(code, sets, "f2", 3)
        current = ddot(code, sets)
        steps.append(_step("ddot", current, (), dist))
        sets = PrefixSetTable(current)
        if any(not sets.base(i, 2) >= NONZERO_PAIRS
               for i in current.table_indices()):
            raise StepLimitExceeded("ddot did not reach f3")
    else:
        raise ValueError("unknown target class %r" % (target,))

    trace = TransformTrace(code, target, tuple(steps))
    report = classify(trace.final)
    if not report.flags[target]:
        raise StepLimitExceeded(
            "chain ended outside %s: %s" % (target, report.failures[target]))
    return trace


def prune_to_reachable(code):
    """Drop tables not reachable from every table, reindexing densely."""
    report = reachable_tables(code)
    if not report.core:
        raise NotRegular("no table is reachable from every table")
    kept = sorted(report.core)
    renumber = {old: new for new, old in enumerate(kept)}
    tables = []
    for old in kept:
        t = code.tables[old]
        tables.append(Table(t.codes, tuple(renumber[j] for j in t.targets)))
    return CodeTuple(code.alphabet, tuple(tables))


def extend_to_two_tables(code):
    """Pair a single-table tuple with a fresh second table that always
    hands control back, emitting 01, 10, 110, ..., 1...1 over the alphabet."""
    if code.num_tables != 1:
        raise WrongTableCount("expected a single table, got %d" % code.num_tables)
    sigma = code.sigma
    if sigma < 2:
        raise ValueError("need at least two symbols")
    codes = []
    for r in range(1, sigma + 1):
        if r == 1:
            codes.append(ZERO + ONE)
        elif r < sigma:
            codes.append(Bits("1" * (r - 1) + "0"))
        else:
            codes.append(Bits("1" * (sigma - 1)))
    second = Table(tuple(codes), tuple(0 for _ in range(sigma)))
    return CodeTuple(code.alphabet, (code.tables[0], second))
