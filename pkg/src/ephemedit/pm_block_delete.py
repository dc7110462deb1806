"""Occurrences of one pattern after deleting any contiguous text block.

Preprocessing indexes the text once and tabulates, for every position, the
longest pattern prefix ending there and the longest pattern suffix starting
there. A deletion [first, last] then splits the text into L and R.
Occurrences inside L or R come off the suffix array; occurrences crossing
the seam live inside the window made of the longest pattern prefix that
ends L glued to the longest pattern suffix that starts R, which is a
single prefix-suffix query.
"""

from __future__ import annotations

from .prefix_suffix import PrefSufIndex, build_prefsuf
from .suffix_tree import build_marked_gst
from .text_core import EMPTY_INTERVAL, SaInterval, Text, TextIndex


class BlockDeleteMatcher:
    """One text and one pattern, ready for arbitrary block deletions.

    `lsp[j]` is the length of the longest pattern suffix that is a prefix
    of text[j:]; `lpf[p]` the length of the longest pattern prefix that is
    a suffix of text[: p + 1]. `interval` is the pattern's own rank
    interval in the text's suffix array (empty when it does not occur).
    """

    __slots__ = ("text", "pattern", "n", "m", "idx", "lsp", "lpf", "psi", "interval")

    def __init__(self, text, pattern):
        t = text if isinstance(text, Text) else Text(text)
        pat = [int(c) for c in pattern]
        if len(t) == 0:
            raise ValueError("cannot index an empty text")
        if not pat:
            raise ValueError("pattern must be non-empty")
        n = len(t)
        m = len(pat)
        self.text = t
        self.pattern = pat
        self.n = n
        self.m = m
        self.idx = TextIndex(t)
        self.lsp = build_marked_gst(t, pat).lsp
        rev = Text(t.letters[::-1], t.sigma)
        rev_lsp = build_marked_gst(rev, pat[::-1]).lsp
        self.lpf = [rev_lsp[n - 1 - p] for p in range(n)]
        self.psi: PrefSufIndex = build_prefsuf(pat)
        isa = self.idx.isa
        ranks = [isa[j] for j in range(n) if self.lsp[j] == m]
        self.interval = (
            SaInterval(min(ranks), max(ranks)) if ranks else EMPTY_INTERVAL
        )

    def occurrences_after_delete(self, first: int, last: int) -> list[int]:
        """Sorted pattern starts in the text with [first, last] removed."""
        n, m = self.n, self.m
        if not 0 <= first <= last <= n - 1:
            raise ValueError(f"delete range [{first}, {last}] invalid for n={n}")
        if n - (last - first + 1) < m:
            return []
        out: list[int] = []
        if first >= m:
            out.extend(self.idx.report_starts(self.interval, 0, first - m))
        if last + 1 <= n - m:
            shift = first - (last + 1)
            out.extend(
                x + shift for x in self.idx.report_starts(self.interval, last + 1, n - m)
            )
        if 0 < first and last < n - 1:
            a = self.lpf[first - 1]
            b = self.lsp[last + 1]
            if a > 0 and b > 0:
                for t in self.psi.query(a, b):
                    # A seam match must start inside L and end inside R.
                    if t < a and t + m > a:
                        out.append(first - a + t)
        out.sort()
        return out


def preprocess(text, pattern) -> BlockDeleteMatcher:
    return BlockDeleteMatcher(text, pattern)


def occurrences_after_delete(matcher: BlockDeleteMatcher, first: int, last: int) -> list[int]:
    return matcher.occurrences_after_delete(first, last)
