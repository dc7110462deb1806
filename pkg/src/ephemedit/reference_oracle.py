"""Slow, obviously-correct reference implementations.

These share no code with the engines and exist for differential testing:
apply the edit for real, scan for the pattern, compare. ``naive_search``
leans on ``str.find`` so that the oracle stays fast enough to drive large
randomized test batches.
"""

from __future__ import annotations

from .edits import Delete, EditOp, Insert, Substitute

_SURROGATE_FLOOR = 0xD800


def apply_edit(letters: list[int], op: EditOp) -> list[int]:
    """Materialize the edited text as a new list."""
    if isinstance(op, Insert):
        cut = op.after + 1
        return letters[:cut] + list(op.block) + letters[cut:]
    if isinstance(op, Delete):
        return letters[: op.first] + letters[op.last + 1 :]
    if isinstance(op, Substitute):
        return letters[: op.at] + list(op.block) + letters[op.at + len(op.block) :]
    raise TypeError(f"not an edit operation: {op!r}")


def naive_search(text: list[int], pattern: list[int]) -> list[int]:
    """Sorted start positions of ``pattern`` in ``text``.

    Letters below the surrogate range are matched via ``str.find``; anything
    larger falls back to slice comparison.
    """
    m = len(pattern)
    if m == 0 or m > len(text):
        return []
    big = max(max(pattern), max(text) if text else 0) >= _SURROGATE_FLOOR
    if big:
        return [
            i for i in range(len(text) - m + 1) if text[i : i + m] == pattern
        ]
    s = "".join(map(chr, text))
    p = "".join(map(chr, pattern))
    out = []
    i = s.find(p)
    while i != -1:
        out.append(i)
        i = s.find(p, i + 1)
    return out


def occurrences_after_oracle(
    text: list[int], pattern: list[int], op: EditOp
) -> list[int]:
    """Occurrences of ``pattern`` in the edited text, by actually editing."""
    return naive_search(apply_edit(text, op), pattern)


def oracle_prefsuf(pattern: list[int], a: int, b: int) -> list[int]:
    """All offsets t at which ``pattern`` occurs in the concatenation of its
    own length-``a`` prefix and length-``b`` suffix. Brute force."""
    m = len(pattern)
    w = pattern[:a] + pattern[m - b :]
    return [t for t in range(len(w) - m + 1) if w[t : t + m] == pattern]
