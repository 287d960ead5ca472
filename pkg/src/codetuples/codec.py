"""Encoding, decoding with bounded lookahead, and round-trip checking.

The decoder is greedy: standing in table i with unread bits w, it emits the
symbol s whose codeword starts w and whose k-bit window right after that
codeword is an emittable k-bit block of the next table.  For a tuple that
is decodable with delay k this candidate is unique whenever the window is
fully available, so the greedy scan never misreads; it just stops early
when fewer than k bits remain past the true codeword.

Whatever the scan leaves unread is the tail.  Its information content is
reported exactly: every shortest symbol sequence whose emission equals the
tail is enumerated, and the longest common prefix of those sequences is
appended to the output since the source must have produced it.

The round-trip checker re-derives the delay independently of the decoder:
it replays the bit stream one bit at a time and records, for each symbol,
how many bits past the end of its codeword were needed before it became
the only consistent explanation.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
import random

from .bits import Bits
from .core import CodeTuple
from .errors import NoConsistentCompletion
from .prefix_sets import (
    PrefixSetTable,
    encode_from,
    is_achievable_prefix,
)

COMPLETION_CAP = 16
FAILURE_CAP = 10

encode = encode_from

_achievable = lru_cache(maxsize=1 << 16)(is_achievable_prefix)


@dataclass(frozen=True)
class DanglingInfo:
    """What the bits left unread after decoding could still mean.

    completions lists the shortest symbol sequences emitting exactly the
    tail, in length-then-lexicographic order, at most COMPLETION_CAP of
    them (capped tells whether more exist).  conflicts counts greedy steps
    with more than one admissible symbol, which a tuple decodable with the
    requested delay never produces.
    """

    tail: Bits
    completions: tuple
    capped: bool
    conflicts: int

    @property
    def resolved(self):
        return len(self.tail) == 0


@dataclass(frozen=True)
class DecodeResult:
    symbols: tuple
    start: int
    end_table: int
    info: DanglingInfo


def _exact_emitters(code, tail):
    """Per (bits consumed, table): can the rest of ``tail`` be emitted
    exactly?  Codewords that emit nothing stay at the same level, so each
    level is a least fixed point over the tables."""
    n = len(tail)
    exact = [[u == n for _ in code.table_indices()] for u in range(n + 1)]
    for u in range(n - 1, -1, -1):
        rest = tail.tail_from(u)
        changed = True
        while changed:
            changed = False
            for i in code.table_indices():
                if exact[u][i]:
                    continue
                for s in code.alphabet:
                    w = code.code(i, s)
                    if w.is_prefix_of(rest) and exact[u + len(w)][code.target(i, s)]:
                        exact[u][i] = True
                        changed = True
                        break
    return exact


def _completions(code, start, tail, cap=COMPLETION_CAP):
    """All shortest symbol sequences emitting exactly ``tail``.

    Breadth-first by sequence length with symbols expanded in order, so
    results arrive already sorted by (length, lexicographic).  A branch
    stops at its first exact match: extending one only appends symbols
    that emit nothing, which the bits cannot testify to.  Branches are
    expanded only while an exact finish is still reachable, which cuts
    emission-free cycles without losing any completion.
    """
    exact = _exact_emitters(code, tail)
    found = []
    frontier = [(start, 0, ())] if exact[0][start] else []
    while frontier and len(found) <= cap:
        nxt = []
        for table, used, acc in frontier:
            if used == len(tail):
                found.append(acc)
                if len(found) > cap:
                    break
                continue
            rest = tail.tail_from(used)
            for s in code.alphabet:
                w = code.code(table, s)
                j = code.target(table, s)
                if w.is_prefix_of(rest) and exact[used + len(w)][j]:
                    nxt.append((j, used + len(w), acc + (s,)))
        frontier = nxt
    capped = len(found) > cap
    return tuple(found[:cap]), capped


def _greedy_step(code, sets, k, table, bits, pos):
    """The admissible symbols at this position, best first."""
    rest = bits.tail_from(pos)
    out = []
    for s in code.alphabet:
        w = code.code(table, s)
        if not w.is_prefix_of(rest):
            continue
        window = rest.tail_from(len(w)).head(k)
        if len(window) < k:
            continue
        if window in sets.base(code.target(table, s), k):
            out.append(s)
    return out


def decode(code, start, bits, k=2, sets=None):
    """Decode as much of ``bits`` as the k-bit lookahead determines.

    Raises NoConsistentCompletion if the bits cannot be a prefix of any
    emission from the start table.
    """
    sets = sets or PrefixSetTable(code)
    sets._check_k(k)
    symbols = []
    table = start
    pos = 0
    conflicts = 0
    while True:
        cands = _greedy_step(code, sets, k, table, bits, pos)
        if not cands:
            break
        if len(cands) > 1:
            conflicts += 1
        s = cands[0]
        symbols.append(s)
        pos += len(code.code(table, s))
        table = code.target(table, s)

    tail = bits.tail_from(pos)
    if not _achievable(code, table, tail):
        raise NoConsistentCompletion(
            "%s is not a prefix of any emission from table %d"
            % (tail, table))
    completions, capped = _completions(code, table, tail)

    # With the list capped an unseen completion could disagree, so only an
    # uncapped consensus is safe to emit.
    settled = _common_prefix(completions) if not capped else ()
    if settled:
        for s in settled:
            symbols.append(s)
            pos += len(code.code(table, s))
            table = code.target(table, s)
        tail = bits.tail_from(pos)
        completions, capped = _completions(code, table, tail)
    if not tail:
        completions, capped = (), False

    info = DanglingInfo(tail, completions, capped, conflicts)
    return DecodeResult(tuple(symbols), start, table, info)


def _common_prefix(seqs):
    if not seqs:
        return ()
    first = min(seqs, key=len)
    out = []
    for r, s in enumerate(first):
        if all(seq[r] == s for seq in seqs):
            out.append(s)
        else:
            break
    return tuple(out)


def _consistent(code, table, s, obs):
    """Could symbol s be the next emission given the observed bits?"""
    w = code.code(table, s)
    if obs.is_prefix_of(w):
        return True
    if w.is_prefix_of(obs):
        return _achievable(code, code.target(table, s), obs.strip_prefix(w))
    return False


def identification_delays(code, start, seq, bits=None):
    """Per-symbol identification delay when reading bits one at a time.

    The delay of a symbol is how many bits past the end of its codeword
    the reader needed before that symbol became the only consistent
    explanation (0 when it already was at the boundary).  Symbols the full
    stream never pins down are not measured; they are exactly the ones the
    decoder reports as dangling.
    """
    if bits is None:
        bits, _ = encode_from(code, start, seq)
    table = start
    pos = 0
    delays = []
    for s in seq:
        boundary = pos + len(code.code(table, s))
        identified = None
        for t in range(pos, len(bits) + 1):
            obs = bits[pos:t]
            cands = [s2 for s2 in code.alphabet
                     if _consistent(code, table, s2, obs)]
            if len(cands) == 1:
                if cands[0] != s:
                    raise AssertionError(
                        "identification scan contradicts the source at "
                        "table %d, bit %d" % (table, t))
                identified = t
                break
        if identified is None:
            break
        delays.append(max(0, identified - boundary))
        pos = boundary
        table = code.target(table, s)
    return delays


@dataclass(frozen=True)
class RoundTripFailure:
    trial: int
    start: int
    seq: tuple
    reason: str


@dataclass(frozen=True)
class RoundTripReport:
    trials: int
    failures: tuple
    failure_count: int
    max_delay: int
    conflicts: int

    @property
    def ok(self):
        return self.failure_count == 0


def roundtrip_check(code, k=2, trials=1000, max_len=12, seed=None):
    """Encode random sequences, decode, and measure identification delays.

    A trial fails when the decoder output is not a prefix of the source,
    when the bits admit no completion, or when some symbol needed more
    than k bits of delay to identify.  ``seed`` is required so runs are
    reproducible.
    """
    if seed is None:
        raise ValueError("seed is required")
    rng = random.Random(seed)
    sets = PrefixSetTable(code)
    failures = []
    count = 0
    max_delay = 0
    conflicts = 0

    def fail(trial, start, seq, reason):
        nonlocal count
        count += 1
        if len(failures) < FAILURE_CAP:
            failures.append(RoundTripFailure(trial, start, tuple(seq), reason))

    for trial in range(trials):
        start = rng.randrange(code.num_tables)
        length = rng.randint(1, max_len)
        seq = tuple(rng.randrange(code.sigma) for _ in range(length))
        bits, _ = encode_from(code, start, seq)
        try:
            result = decode(code, start, bits, k, sets)
        except NoConsistentCompletion as exc:
            fail(trial, start, seq, "no completion: %s" % exc)
            continue
        got = result.symbols
        if got != seq[:len(got)]:
            fail(trial, start, seq, "decoded %r instead of a prefix" % (got,))
            continue
        conflicts += result.info.conflicts
        delays = identification_delays(code, start, seq, bits)
        if delays:
            worst = max(delays)
            max_delay = max(max_delay, worst)
            if worst > k:
                fail(trial, start, seq, "identification delay %d" % worst)
    return RoundTripReport(trials, tuple(failures), count, max_delay, conflicts)
