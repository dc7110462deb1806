"""Suffix-of-pattern bookkeeping used to answer junction queries.

`build_tree_p` arranges the pattern's suffixes into a tree where each
suffix hangs under the longest other suffix that is a proper prefix of it.
A suffix that occurs in the indexed text carries the suffix-array interval
of its occurrences as its decoration.

`decompose_disjoint` flattens the decorated intervals into disjoint pieces
so that the piece covering a rank names the longest pattern suffix that is
a prefix of that rank's text suffix. `build_context_groups` does the same
per context: only suffixes immediately preceded in the pattern by a given
short word take part, which is what queries about an inserted block need.
"""

from __future__ import annotations

import numpy as np

from .predecessor_sets import IntervalEntry
from .suffix_tree import MatchingStats, SuffixTree
from .text_core import EMPTY_INTERVAL, SaInterval


class SuffixPrefixTree:
    """Pattern suffixes ordered by the is-a-proper-prefix relation.

    Node i stands for pattern[i:], node m for the empty suffix and is the
    root. `par[i]` is the start of the longest other suffix that is a
    proper prefix of pattern[i:], or m when only the empty one is.
    `interval[i]` is the suffix-array interval of pattern[i:] in the
    indexed text, empty when the suffix does not occur there. The root is
    never decorated.
    """

    __slots__ = ("pattern", "m", "par", "interval")

    def __init__(self, pattern: list[int], par: list[int], interval: list[SaInterval]):
        self.pattern = pattern
        self.m = len(pattern)
        self.par = par
        self.interval = interval

    def decorated(self, i: int) -> bool:
        return not self.interval[i].is_empty


def build_tree_p(pattern, ms: MatchingStats) -> SuffixPrefixTree:
    """Arrange the pattern's suffixes by prefix containment and decorate.

    The parent of suffix i is found inside a suffix tree of the pattern
    itself (letters compacted to ranks first): it is the nearest proper
    ancestor of suffix i's node that is itself a whole suffix. Decorations
    are read straight off the matching statistics.
    """
    pat = [int(c) for c in pattern]
    m = len(pat)
    if m == 0:
        raise ValueError("pattern must be non-empty")
    if len(ms.ms_len) != m or len(ms.suf_interval) != m:
        raise ValueError("matching statistics do not match the pattern length")

    uniques, reduced = np.unique(np.asarray(pat, dtype=np.int64), return_inverse=True)
    stp = SuffixTree(reduced.tolist(), len(uniques))

    # Nearest suffix-node ancestor (or self), pushed down by depth.
    nsa = [-1] * stp.size
    sstart = stp.sstart
    par = stp.par
    for v in sorted(range(1, stp.size), key=stp.sdepth.__getitem__):
        nsa[v] = v if sstart[v] >= 0 else nsa[par[v]]

    tree_par = [-1] * (m + 1)
    nos = stp.node_of_suffix
    for i in range(m):
        u = nsa[par[nos[i]]]
        tree_par[i] = m if u < 0 else sstart[u]

    interval = [ms.suf_interval[i] for i in range(m)]
    interval.append(EMPTY_INTERVAL)
    return SuffixPrefixTree(pat, tree_par, interval)


def decompose_disjoint(tree: SuffixPrefixTree) -> list[IntervalEntry]:
    """Split decorations into disjoint rank intervals, longest suffix wins.

    Every decorated node keeps the part of its interval not claimed by a
    decorated descendant; descendants spell longer suffixes, so the piece
    covering a rank always names the longest suffix prefixing that rank's
    text suffix. Children are processed before parents (a descendant of i
    always has a smaller index), each node forwarding the intervals of its
    nearest decorated descendants upward.
    """
    m = tree.m
    par = tree.par
    interval = tree.interval
    out: list[IntervalEntry] = []
    pending: list[list[tuple[int, int]]] = [[] for _ in range(m + 1)]
    for i in range(m):
        mine = pending[i]
        if interval[i].is_empty:
            if mine:
                raise ValueError(
                    f"suffix {i} is undecorated but a longer suffix extending "
                    "it occurs in the text"
                )
            continue
        lo, hi = interval[i].lo, interval[i].hi
        mine.sort()
        cursor = lo
        for clo, chi in mine:
            if not lo <= clo <= chi <= hi:
                raise ValueError(f"decoration of suffix {i} does not nest")
            if cursor < clo:
                out.append(IntervalEntry(cursor, clo - 1, i))
            cursor = chi + 1
        if cursor <= hi:
            out.append(IntervalEntry(cursor, hi, i))
        pending[par[i]].append((lo, hi))
    out.sort(key=lambda e: e.start)
    return out


def _flatten_longest(members: list[tuple[int, int, int]]) -> list[IntervalEntry]:
    """Flatten nested (lo, hi, suffix start) triples, innermost wins.

    Members must form a laminar family, which suffix-occurrence intervals
    always do. Sorting puts outer intervals first and, among identical
    intervals, the longer suffix last so it ends up on top of the stack.
    """
    members.sort(key=lambda t: (t[0], -t[1], -t[2]))
    out: list[IntervalEntry] = []
    stack: list[tuple[int, int, int]] = []
    cursor = 0
    for lo, hi, i in members:
        while stack and stack[-1][1] < lo:
            _, shi, si = stack.pop()
            if cursor <= shi:
                out.append(IntervalEntry(cursor, shi, si))
                cursor = shi + 1
        if stack and cursor < lo:
            out.append(IntervalEntry(cursor, lo - 1, stack[-1][2]))
        cursor = lo
        stack.append((lo, hi, i))
    while stack:
        _, shi, si = stack.pop()
        if cursor <= shi:
            out.append(IntervalEntry(cursor, shi, si))
            cursor = shi + 1
    return out


def build_context_groups(
    pattern, ms: MatchingStats, max_len: int
) -> dict[tuple[int, ...], list[IntervalEntry]]:
    """Disjoint decorations per context word of length 1 to max_len.

    A suffix pattern[i:] belongs to the group of W when the letters just
    before position i spell W. Within a group the flattened pieces again
    let the covering piece name the longest member suffix that prefixes a
    rank's text suffix. Only occurring suffixes take part, and only
    nonempty ones, so groups never decorate every rank.
    """
    pat = [int(c) for c in pattern]
    m = len(pat)
    if len(ms.ms_len) != m or len(ms.suf_interval) != m:
        raise ValueError("matching statistics do not match the pattern length")
    raw: dict[tuple[int, ...], list[tuple[int, int, int]]] = {}
    for length in range(1, max_len + 1):
        for i in range(length, m):
            iv = ms.suf_interval[i]
            if iv.is_empty:
                continue
            key = tuple(pat[i - length : i])
            raw.setdefault(key, []).append((iv.lo, iv.hi, i))
    return {key: _flatten_longest(members) for key, members in raw.items()}
