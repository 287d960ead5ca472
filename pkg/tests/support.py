"""Shared test helpers: a definitional continuation-set oracle and a
random tuple generator.

The oracle explores source sequences directly, memoized on (table,
emitted-prefix) states, so it never touches the library's fixed-point
computation; agreement between the two is evidence, not circularity.
"""

from codetuples import Bits, make_tuple
from codetuples.bits import EMPTY

NAME_POOL = ("a", "b", "c", "d", "e", "f", "g", "h")


def oracle_continuations(code, i, b, k, strict):
    """Length-k continuations of window b per the defining search.

    A string c qualifies when some nonempty source sequence, encoded from
    table i, emits b c ... and its first codeword extends b (strictly when
    ``strict``).
    """
    need = len(b) + k
    out = set()
    seen = set()
    stack = []
    for s in code.alphabet:
        first = code.code(i, s)
        ok = b.is_proper_prefix_of(first) if strict else b.is_prefix_of(first)
        if ok:
            stack.append((code.target(i, s), first.head(need)))
    while stack:
        j, emitted = stack.pop()
        if len(emitted) >= need:
            out.add(emitted.tail_from(len(b)))
            continue
        if (j, emitted) in seen:
            continue
        seen.add((j, emitted))
        for s in code.alphabet:
            grown = (emitted + code.code(j, s)).head(need)
            stack.append((code.target(j, s), grown))
    return frozenset(out)


def random_code_tuple(rng, max_tables=3, max_sigma=4, max_len=4):
    tables = rng.randint(1, max_tables)
    sigma = rng.randint(2, max_sigma)
    rows = []
    for _ in range(tables):
        row = []
        for _ in range(sigma):
            length = rng.randint(0, max_len)
            word = "".join(rng.choice("01") for _ in range(length))
            row.append((word or "-", rng.randrange(tables)))
        rows.append(row)
    return make_tuple(NAME_POOL[:sigma], rows)


def random_seq(rng, code, max_len):
    return tuple(rng.randrange(code.sigma)
                 for _ in range(rng.randint(0, max_len)))


def window_samples(code, rng=None):
    """Interesting windows per table: the empty window, every codeword,
    and a one-bit extension of each codeword."""
    windows = {EMPTY}
    for i in code.table_indices():
        for s in code.alphabet:
            word = code.code(i, s)
            windows.add(word)
            if rng is not None:
                windows.add(word + rng.choice("01"))
    return sorted(windows)


def all_sequences(sigma, max_len):
    seqs = [()]
    level = [()]
    for _ in range(max_len):
        level = [seq + (s,) for seq in level for s in range(sigma)]
        seqs.extend(level)
    return seqs
