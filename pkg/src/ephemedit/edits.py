"""Edit operations applied ephemerally to a text.

Each operation describes a single change that is queried against but never
committed: the indexed text stays as built. Positions refer to the original
text of length ``n``.

* ``Insert(after, block)`` places ``block`` immediately after position
  ``after``; ``after == -1`` prepends.
* ``Delete(first, last)`` removes the closed range ``[first, last]``.
* ``Substitute(at, block)`` overwrites ``len(block)`` letters starting at
  ``at`` without changing the length.
"""

from __future__ import annotations

from dataclasses import dataclass, field


def _as_block(letters) -> tuple[int, ...]:
    block = tuple(letters)
    for a in block:
        if not isinstance(a, int) or isinstance(a, bool) or a < 0:
            raise ValueError(f"block letters must be non-negative ints, got {a!r}")
    return block


@dataclass(frozen=True)
class Insert:
    after: int
    block: tuple[int, ...] = field(default=())

    def __post_init__(self):
        object.__setattr__(self, "block", _as_block(self.block))


@dataclass(frozen=True)
class Delete:
    first: int
    last: int


@dataclass(frozen=True)
class Substitute:
    at: int
    block: tuple[int, ...] = field(default=())

    def __post_init__(self):
        object.__setattr__(self, "block", _as_block(self.block))


EditOp = Insert | Delete | Substitute


def validate_edit(op: EditOp, n: int, sigma: int | None = None) -> None:
    """Check that ``op`` is well formed against a text of length ``n``.

    Raises ValueError with a message naming the violated constraint. When
    ``sigma`` is given, block letters must also lie in ``[0, sigma)``.
    """
    if isinstance(op, Insert):
        if not -1 <= op.after <= n - 1:
            raise ValueError(
                f"insert position {op.after} outside [-1, {n - 1}]"
            )
        if len(op.block) == 0:
            raise ValueError("insert block must be non-empty")
        _check_block(op.block, sigma)
    elif isinstance(op, Delete):
        if not 0 <= op.first <= op.last <= n - 1:
            raise ValueError(
                f"delete range [{op.first}, {op.last}] invalid for n={n}"
            )
    elif isinstance(op, Substitute):
        if len(op.block) == 0:
            raise ValueError("substitute block must be non-empty")
        if not (0 <= op.at and op.at + len(op.block) <= n):
            raise ValueError(
                f"substitute range [{op.at}, {op.at + len(op.block) - 1}] "
                f"invalid for n={n}"
            )
        _check_block(op.block, sigma)
    else:
        raise TypeError(f"not an edit operation: {op!r}")


def _check_block(block: tuple[int, ...], sigma: int | None) -> None:
    if sigma is not None:
        for a in block:
            if not 0 <= a < sigma:
                raise ValueError(f"block letter {a} outside [0, {sigma})")


def edited_length(op: EditOp, n: int) -> int:
    """Length of the text after applying ``op``."""
    if isinstance(op, Insert):
        return n + len(op.block)
    if isinstance(op, Delete):
        return n - (op.last - op.first + 1)
    return n
