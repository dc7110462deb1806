"""Pattern matching in texts under ephemeral edits.

The index is built once over an immutable text; every query names a single
edit (insert, delete, or substitute) that is applied virtually, answered,
and forgotten.
"""

from .edits import Delete, EditOp, Insert, Substitute, edited_length, validate_edit
from .ephemeral_index import (
    EphemeralTextIndex,
    PatternHandle,
    occurrence_classes,
    occurrences_after,
    occurrences_after_unsorted,
    preprocess_pattern,
    preprocess_text,
)
from .pm_block_delete import BlockDeleteMatcher, occurrences_after_delete
from .pm_ephemeral_edits import EditMatcher, Sma, build_sma, occurrences_after_edit
from .prefix_suffix import ArithmeticProgression, PrefSufIndex, build_prefsuf, prefsuf
from .text_core import (
    AlphabetError,
    SaInterval,
    Text,
    TextIndex,
    build_text_index,
    report_starts,
)

__all__ = [
    "AlphabetError",
    "ArithmeticProgression",
    "BlockDeleteMatcher",
    "Delete",
    "EditMatcher",
    "EditOp",
    "EphemeralTextIndex",
    "Insert",
    "PatternHandle",
    "PrefSufIndex",
    "SaInterval",
    "Sma",
    "Substitute",
    "Text",
    "TextIndex",
    "build_prefsuf",
    "build_sma",
    "build_text_index",
    "edited_length",
    "occurrence_classes",
    "occurrences_after",
    "occurrences_after_delete",
    "occurrences_after_edit",
    "occurrences_after_unsorted",
    "prefsuf",
    "preprocess_pattern",
    "preprocess_text",
    "report_starts",
    "validate_edit",
]

__version__ = "0.1.0"
