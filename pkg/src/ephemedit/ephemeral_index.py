"""Pattern occurrences under a single provisional edit of an indexed text.

`preprocess_text` indexes a text once, forward and reversed.
`preprocess_pattern` then prepares one pattern against that index, and
`occurrences_after` answers, for any single insert, delete, or substitute,
where the pattern would occur in the edited text. Nothing is materialized
and nothing is mutated, so edits can be queried in any order.

An edit splits the text into a left part L, a block M (empty for deletes),
and a right part R. Occurrences of the pattern in L·M·R fall into six
classes: inside L, inside R, inside M, and three classes touching a seam.
Occurrences inside L or R are reported straight off the suffix array.
Each seam class reduces to occurrences of the pattern in a window built
from one of its own prefixes glued to one of its own suffixes, answered by
`prefix_suffix` as a single progression. The prefix arm is the longest
pattern prefix ending at the seam, found by a predecessor lookup on the
reversed index; the suffix arm is found the same way forward, constrained
to pattern suffixes preceded by the block when the match must cross it.
"""

from __future__ import annotations

from .edits import Delete, EditOp, Insert, Substitute, validate_edit
from .pattern_trees import build_context_groups, build_tree_p, decompose_disjoint
from .predecessor_sets import PredSet, build_predset
from .prefix_suffix import PrefSufIndex, build_prefsuf
from .suffix_tree import SuffixTree, matching_statistics
from .text_core import AlphabetError, Text, TextIndex


class EphemeralTextIndex:
    """Forward and reversed suffix structures over one immutable text."""

    __slots__ = ("text", "fwd", "rev", "st_fwd", "st_rev")

    def __init__(self, text: Text):
        if len(text) == 0:
            raise ValueError("cannot index an empty text")
        self.text = text
        self.fwd = TextIndex(text)
        rev = Text(text.letters[::-1], text.sigma)
        self.rev = TextIndex(rev)
        self.st_fwd = SuffixTree(text, sa=self.fwd.sa, lcp=self.fwd.lcp)
        self.st_rev = SuffixTree(rev, sa=self.rev.sa, lcp=self.rev.lcp)

    @property
    def n(self) -> int:
        return len(self.text)

    @property
    def sigma(self) -> int:
        return self.text.sigma


def preprocess_text(text, sigma: int | None = None) -> EphemeralTextIndex:
    if not isinstance(text, Text):
        text = Text(text, sigma)
    return EphemeralTextIndex(text)


class PatternHandle:
    """One pattern prepared against one EphemeralTextIndex.

    Holds the pattern's junction tables: its prefix-suffix index, the
    disjoint decorated intervals of its suffixes over the forward and
    reversed text (as predecessor sets), and one predecessor set per
    context word of length up to epsilon. Stateless at query time.
    """

    __slots__ = (
        "eti",
        "pattern",
        "m",
        "epsilon",
        "psi",
        "interval",
        "main_fwd",
        "main_rev",
        "groups",
        "ms_fwd",
        "ms_rev",
        "tree_fwd",
        "tree_rev",
    )

    def __init__(self, eti: EphemeralTextIndex, pattern, epsilon: int):
        pat = [int(c) for c in pattern]
        if not pat:
            raise ValueError("pattern must be non-empty")
        if epsilon < 0:
            raise ValueError(f"epsilon must be >= 0, got {epsilon}")
        # Letters are range-checked so out-of-alphabet patterns fail loudly
        # instead of colliding in flat child tables.
        for c in pat:
            if not 0 <= c < eti.sigma:
                raise AlphabetError(
                    f"pattern letter {c} outside the text alphabet [0, {eti.sigma})"
                )
        self.eti = eti
        self.pattern = pat
        self.m = len(pat)
        self.epsilon = epsilon
        self.psi = build_prefsuf(pat)

        n = eti.n
        self.ms_fwd = matching_statistics(eti.st_fwd, pat)
        self.tree_fwd = build_tree_p(pat, self.ms_fwd)
        self.main_fwd = build_predset(decompose_disjoint(self.tree_fwd), n)
        self.groups = {
            key: build_predset(entries, n)
            for key, entries in build_context_groups(pat, self.ms_fwd, epsilon).items()
        }
        rev_pat = pat[::-1]
        self.ms_rev = matching_statistics(eti.st_rev, rev_pat)
        self.tree_rev = build_tree_p(rev_pat, self.ms_rev)
        self.main_rev = build_predset(decompose_disjoint(self.tree_rev), n)
        self.interval = self.ms_fwd.suf_interval[0]


def preprocess_pattern(eti: EphemeralTextIndex, pattern, epsilon: int) -> PatternHandle:
    return PatternHandle(eti, pattern, epsilon)


def _regions(op: EditOp, n: int) -> tuple[int, int, tuple[int, ...]]:
    """(end of L, start of R in old coordinates, block M) for an edit."""
    if isinstance(op, Insert):
        return op.after + 1, op.after + 1, op.block
    if isinstance(op, Delete):
        return op.first, op.last + 1, ()
    return op.at, op.at + len(op.block), op.block


def _left_arm(ph: PatternHandle, ell: int) -> int:
    """Longest pattern prefix that is a suffix of the text's first ell letters."""
    cov = ph.main_rev.cover(ph.eti.rev.isa[ph.eti.n - ell])
    return 0 if cov is None else ph.m - cov.suffix_start


def _longest_prefix_of(block: tuple[int, ...], pat: list[int]) -> int:
    """Longest prefix of pat that is a suffix of block, by direct comparison."""
    for length in range(min(len(block), len(pat)), 0, -1):
        if list(block[len(block) - length :]) == pat[:length]:
            return length
    return 0


def _longest_suffix_of(block: tuple[int, ...], pat: list[int]) -> int:
    """Longest suffix of pat that is a prefix of block, by direct comparison."""
    for length in range(min(len(block), len(pat)), 0, -1):
        if list(block[:length]) == pat[len(pat) - length :]:
            return length
    return 0


def _block_starts(pat: list[int], borders: list[int], block: tuple[int, ...]) -> list[int]:
    """Occurrences of pat inside block, found with the border table."""
    m = len(pat)
    out: list[int] = []
    k = 0
    for idx, c in enumerate(block):
        while k and pat[k] != c:
            k = borders[k]
        if pat[k] == c:
            k += 1
        if k == m:
            out.append(idx - m + 1)
            k = borders[k]
    return out


def occurrence_classes(ph: PatternHandle, op: EditOp) -> dict[str, list[int]]:
    """Occurrences after the edit, split by class.

    Keys: "left" and "right" for matches untouched by the edit, "block"
    for matches inside the inserted block, "left_block" for matches
    starting in L and ending in the block, "block_right" starting in the
    block and ending in R, and "cross" for matches starting in L and
    ending in R. Positions refer to the edited text. The classes are
    pairwise disjoint by construction.
    """
    eti = ph.eti
    n = eti.n
    m = ph.m
    pat = ph.pattern
    validate_edit(op, n, eti.sigma)
    if not isinstance(op, Delete) and len(op.block) > ph.epsilon:
        raise ValueError(
            f"block of length {len(op.block)} exceeds the prepared bound "
            f"{ph.epsilon}"
        )
    ell, rp, block = _regions(op, n)
    blen = len(block)
    out: dict[str, list[int]] = {
        "left": [],
        "right": [],
        "cross": [],
        "left_block": [],
        "block_right": [],
        "block": [],
    }

    if ell >= m:
        out["left"] = eti.fwd.report_starts(ph.interval, 0, ell - m)
    if rp <= n - m:
        shift = ell + blen - rp
        out["right"] = [x + shift for x in eti.fwd.report_starts(ph.interval, rp, n - m)]

    a = _left_arm(ph, ell) if ell > 0 else 0
    psi = ph.psi

    if isinstance(op, Delete):
        if a > 0 and rp < n:
            cov = ph.main_fwd.cover(eti.fwd.isa[rp])
            if cov is not None:
                b = m - cov.suffix_start
                hits = out["cross"]
                for t in psi.query(a, b):
                    if t < a and t + m - 1 >= a:
                        hits.append(ell - a + t)
        return out

    # Inserts and substitutes, where the block takes part in matches.
    if m <= blen:
        out["block"] = [ell + t for t in _block_starts(pat, psi.f, block)]
    if a > 0:
        v = _longest_suffix_of(block, pat)
        if v > 0:
            hits = out["left_block"]
            for t in psi.query(a, v):
                if t < a and t + m - 1 >= a:
                    hits.append(ell - a + t)
        if rp < n:
            grp = ph.groups.get(tuple(block))
            if grp is not None:
                cov = grp.cover(eti.fwd.isa[rp])
                if cov is not None:
                    b = blen + (m - cov.suffix_start)
                    hits = out["cross"]
                    for t in psi.query(a, b):
                        if t < a and t + m - 1 >= a + blen:
                            hits.append(ell - a + t)
    if rp < n:
        u = _longest_prefix_of(block, pat)
        if u > 0:
            cov = ph.main_fwd.cover(eti.fwd.isa[rp])
            if cov is not None:
                b = m - cov.suffix_start
                hits = out["block_right"]
                for t in psi.query(u, b):
                    if t < u and t + m - 1 >= u:
                        hits.append(ell + blen - u + t)
    return out


def occurrences_after_unsorted(ph: PatternHandle, op: EditOp) -> list[int]:
    """Start positions of the pattern in the edited text, duplicate-free
    but in no particular order."""
    classes = occurrence_classes(ph, op)
    out = classes["left"]
    for key in ("right", "cross", "left_block", "block_right", "block"):
        out.extend(classes[key])
    return out


def occurrences_after(ph: PatternHandle, op: EditOp) -> list[int]:
    """Sorted start positions of the pattern in the text after ``op``."""
    return sorted(occurrences_after_unsorted(ph, op))
