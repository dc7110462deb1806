"""Occurrences of one pattern after a single-letter insert or substitute,
plus block deletions inherited from the block-delete matcher.

On top of the block-delete tables, the matcher keeps a sparse matching
automaton of the reversed pattern. Reading a letter c from state
lsp[start of R] yields the longest pattern suffix that is a prefix of
c followed by R, which is the right arm of the seam window. A match
after an insert or substitute must cover the changed letter, so the
window filter keeps offsets whose span includes the seam position.
"""

from __future__ import annotations

from .edits import Delete, EditOp, Insert, Substitute, validate_edit
from .pm_block_delete import BlockDeleteMatcher
from .prefix_suffix import border_array


class Sma:
    """Sparse matching automaton: state k means k letters of word matched.

    Only transitions that advance somewhere are stored; every absent
    (state, letter) pair falls back to state 0. The table holds at most
    2 * len(word) entries.
    """

    __slots__ = ("word", "m", "table")

    def __init__(self, word):
        w = [int(c) for c in word]
        m = len(w)
        if m == 0:
            raise ValueError("automaton word must be non-empty")
        f = border_array(w)
        states: list[dict[int, int]] = []
        for k in range(m + 1):
            d = dict(states[f[k]]) if k else {}
            if k < m:
                d[w[k]] = k + 1
            states.append(d)
        self.word = w
        self.m = m
        self.table = {
            (k, c): v for k, st in enumerate(states) for c, v in st.items()
        }

    def step(self, state: int, letter: int) -> int:
        return self.table.get((state, letter), 0)

    @property
    def stored(self) -> int:
        return len(self.table)


def build_sma(word) -> Sma:
    return Sma(word)


class EditMatcher(BlockDeleteMatcher):
    """Block-delete tables plus the reversed-pattern automaton."""

    __slots__ = ("sma",)

    def __init__(self, text, pattern):
        super().__init__(text, pattern)
        self.sma = Sma(self.pattern[::-1])

    def junction_arms(self, op: EditOp) -> tuple[int, int]:
        """The two window arms (a, b) a query would use for this edit.

        a is the longest pattern prefix ending where L ends; b the longest
        pattern suffix starting at the seam (including the new letter for
        inserts and substitutes).
        """
        n = self.n
        validate_edit(op, n, self.text.sigma)
        if isinstance(op, Delete):
            ell, rp = op.first, op.last + 1
            a = self.lpf[ell - 1] if ell > 0 else 0
            b = self.lsp[rp] if rp < n else 0
            return a, b
        ell, rp, c = self._single_letter(op)
        a = self.lpf[ell - 1] if ell > 0 else 0
        s0 = self.lsp[rp] if rp < n else 0
        return a, self.sma.step(s0, c)

    def _single_letter(self, op: EditOp) -> tuple[int, int, int]:
        if len(op.block) != 1:
            raise ValueError(
                "this matcher supports single-letter inserts and substitutes"
            )
        if isinstance(op, Insert):
            return op.after + 1, op.after + 1, op.block[0]
        return op.at, op.at + 1, op.block[0]

    def occurrences_after_edit(self, op: EditOp) -> list[int]:
        """Sorted pattern starts in the text after the edit."""
        n, m = self.n, self.m
        validate_edit(op, n, self.text.sigma)
        if isinstance(op, Delete):
            return self.occurrences_after_delete(op.first, op.last)
        ell, rp, c = self._single_letter(op)
        out: list[int] = []
        if ell >= m:
            out.extend(self.idx.report_starts(self.interval, 0, ell - m))
        if rp <= n - m:
            shift = ell + 1 - rp
            out.extend(
                x + shift for x in self.idx.report_starts(self.interval, rp, n - m)
            )
        a = self.lpf[ell - 1] if ell > 0 else 0
        s0 = self.lsp[rp] if rp < n else 0
        b = self.sma.step(s0, c)
        for t in self.psi.query(a, b):
            # A seam match must cover the changed letter, which sits at
            # offset a of the window.
            if t <= a and t + m > a:
                out.append(ell - a + t)
        out.sort()
        return out


def preprocess(text, pattern) -> EditMatcher:
    return EditMatcher(text, pattern)


def occurrences_after_edit(matcher: EditMatcher, op: EditOp) -> list[int]:
    return matcher.occurrences_after_edit(op)
