"""Sets of possible next bits, the engine behind every decodability check.

For a table i and a window b, the k-bit continuation set holds every length-k
binary string c such that some source sequence, encoded from table i with its
first codeword extending b, emits b c ... .  The base sets (empty window)
satisfy mutual recursion across tables whenever a codeword is empty, so they
are computed as a least fixed point: start every table at the empty set and
grow until stable.  A table that can never emit k bits ends with an empty
set, which is the correct answer, not an error.

Sets grow like 2**k, so an instance refuses k beyond its configured bound.
"""

from __future__ import annotations

from .bits import EMPTY, Bits

DEFAULT_MAX_K = 8


class PrefixSetTable:
    """Memoized continuation sets for one code tuple."""

    def __init__(self, code, max_k=DEFAULT_MAX_K):
        self.code = code
        self.max_k = max_k
        self._bases = {0: tuple(frozenset([EMPTY]) for _ in code.tables)}

    def _check_k(self, k):
        if not 0 <= k <= self.max_k:
            raise ValueError("k=%d outside 0..%d" % (k, self.max_k))

    def _base_level(self, k):
        """Base sets of every table at level k, computing lower levels first."""
        if k not in self._bases:
            for kk in range(1, k + 1):
                if kk not in self._bases:
                    self._bases[kk] = self._fixed_point(kk)
        return self._bases[k]

    def _fixed_point(self, k):
        code = self.code
        cur = [set() for _ in code.tables]
        changed = True
        while changed:
            changed = False
            for j in code.table_indices():
                new = set()
                for s in code.alphabet:
                    c = code.code(j, s)
                    t = code.target(j, s)
                    if len(c) >= k:
                        new.add(c.head(k))
                    elif len(c) == 0:
                        new |= cur[t]
                    else:
                        for r in self._bases[k - len(c)][t]:
                            new.add(c + r)
                if new != cur[j]:
                    cur[j] = new
                    changed = True
        return tuple(frozenset(x) for x in cur)

    def base(self, i, k):
        """All k-bit strings the encoder can emit next, starting in table i."""
        self._check_k(k)
        return self._base_level(k)[i]

    def continuations(self, i, b, k):
        """k-bit continuations of window b when the first codeword of the
        encoding weakly extends b (equals it or extends it)."""
        return self._conditional(i, b, k, strict=False)

    def strict_continuations(self, i, b, k):
        """Same, but the first codeword must strictly extend b."""
        return self._conditional(i, b, k, strict=True)

    def _conditional(self, i, b, k, strict):
        self._check_k(k)
        if len(b) == 0 and not strict:
            return self._base_level(k)[i]
        code = self.code
        out = set()
        for s in code.alphabet:
            c = code.code(i, s)
            if strict:
                if not b.is_proper_prefix_of(c):
                    continue
            elif not b.is_prefix_of(c):
                continue
            u = c.strip_prefix(b)
            if len(u) >= k:
                out.add(u.head(k))
            else:
                t = code.target(i, s)
                for r in self._base_level(k - len(u))[t]:
                    out.add(u + r)
        return frozenset(out)


def encode_from(code, start, seq):
    """Concatenate the codewords of seq starting in the given table.

    Returns (bits, end_table); the empty sequence returns (empty, start).
    """
    bits = EMPTY
    j = start
    for s in seq:
        bits = bits + code.code(j, s)
        j = code.target(j, s)
    return bits, j


def symbols_with_codeword(code, i, b):
    """Symbols of table i whose codeword equals b exactly, in symbol order."""
    return tuple(s for s in code.alphabet if code.code(i, s) == b)


def is_achievable_prefix(code, start, b):
    """Whether some source sequence encoded from the given table emits a
    bit stream with b as a prefix.

    Works for windows of any length: searches states (table, matched bits)
    instead of expanding continuation sets.
    """
    if len(b) == 0:
        return True
    seen = set()
    frontier = [(start, 0)]
    while frontier:
        j, p = frontier.pop()
        if (j, p) in seen:
            continue
        seen.add((j, p))
        if p == len(b):
            return True
        rest = b.tail_from(p)
        for s in code.alphabet:
            c = code.code(j, s)
            if c.is_prefix_of(rest):
                frontier.append((code.target(j, s), p + len(c)))
            elif rest.is_proper_prefix_of(c):
                return True
    return False
