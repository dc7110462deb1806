"""Suffix tree structure, suffix links, matching statistics, and the
marked generalized tree used to read off pattern-suffix prefixes."""

import random

import pytest
from hypothesis import given, settings, strategies as st

from ephemedit.suffix_tree import (
    build_marked_gst,
    build_suffix_tree,
    matching_statistics,
)
from ephemedit.text_core import AlphabetError, SaInterval, Text

EXAMPLE = list(b"ananabannabanaana")
PATTERN = list(b"banana")


def test_two_letter_text_shape():
    tree = build_suffix_tree(list(b"aa"))
    assert tree.size == 3
    assert tree.par[0] == -1 and tree.sdepth[0] == 0
    a = tree.node_of_suffix[1]
    aa = tree.node_of_suffix[0]
    assert tree.par[a] == 0 and tree.sdepth[a] == 1
    assert tree.par[aa] == a and tree.sdepth[aa] == 2
    assert tree.interval(a) == SaInterval(0, 1)


def test_example_node_ban():
    tree = build_suffix_tree(EXAMPLE)
    v = tree.child(0, ord("b"))
    assert bytes(tree.node_string(v)) == b"ban"
    assert tree.sdepth[v] == 3
    assert tree.interval(v) == SaInterval(9, 10)
    # The length-one suffix "a" sits on a branching node of its own.
    leaf_a = tree.node_of_suffix[16]
    assert tree.sdepth[leaf_a] == 1
    assert tree.interval(leaf_a) == SaInterval(0, 8)


def test_every_suffix_has_a_node():
    tree = build_suffix_tree(EXAMPLE)
    for j in range(len(EXAMPLE)):
        v = tree.node_of_suffix[j]
        assert tree.sstart[v] == j
        assert tree.sdepth[v] == len(EXAMPLE) - j
        assert tree.is_suffix_node(v)


def _check_tree_invariants(letters):
    tree = build_suffix_tree(letters)
    n = len(letters)
    sa = tree.sa
    for v in range(tree.size):
        lo, hi, d = tree.lo[v], tree.hi[v], tree.sdepth[v]
        assert lo <= hi
        prefix = letters[sa[lo] : sa[lo] + d]
        # Every rank in the interval shares the node's string, neighbours do not.
        for r in range(lo, hi + 1):
            assert letters[sa[r] : sa[r] + d] == prefix
        if lo > 0:
            assert letters[sa[lo - 1] : sa[lo - 1] + d] != prefix
        if hi < n - 1:
            assert letters[sa[hi + 1] : sa[hi + 1] + d] != prefix
        if v != 0:
            assert tree.sdepth[tree.par[v]] < d
    return tree


@settings(max_examples=120, deadline=None)
@given(st.lists(st.integers(0, 2), min_size=1, max_size=40))
def test_structure_invariants(letters):
    _check_tree_invariants(letters)


@settings(max_examples=80, deadline=None)
@given(st.lists(st.integers(0, 2), min_size=1, max_size=30))
def test_suffix_links_drop_one_letter(letters):
    tree = build_suffix_tree(letters)
    tree.ensure_suffix_links()
    for v in range(1, tree.size):
        w = tree.slink[v]
        assert w >= 0
        assert tree.sdepth[w] == tree.sdepth[v] - 1
        assert list(tree.node_string(v))[1:] == list(tree.node_string(w))


def test_matching_statistics_example():
    tree = build_suffix_tree(EXAMPLE)
    ms = matching_statistics(tree, PATTERN)
    assert ms.ms_len == [4, 5, 4, 3, 2, 1]
    got = [(iv.lo, iv.hi) for iv in ms.suf_interval]
    assert got == [(0, -1), (7, 7), (15, 15), (4, 7), (11, 15), (0, 8)]


def test_matching_statistics_foreign_letters():
    tree = build_suffix_tree(EXAMPLE)
    ms = matching_statistics(tree, list(b"anaZ"))
    assert ms.ms_len == [3, 2, 1, 0]
    # No suffix of the pattern occurs whole, so every interval is empty.
    assert all(iv.is_empty for iv in ms.suf_interval)


def brute_ms(text, pattern):
    m = len(pattern)
    out = []
    for i in range(m):
        best = 0
        for j in range(len(text)):
            k = 0
            while i + k < m and j + k < len(text) and text[j + k] == pattern[i + k]:
                k += 1
            best = max(best, k)
        out.append(best)
    return out


@settings(max_examples=120, deadline=None)
@given(
    st.lists(st.integers(0, 2), min_size=1, max_size=40),
    st.lists(st.integers(0, 2), min_size=1, max_size=12),
)
def test_matching_statistics_matches_brute(letters, pattern):
    tree = build_suffix_tree(letters, sigma=3)
    ms = matching_statistics(tree, pattern)
    assert ms.ms_len == brute_ms(letters, pattern)
    m = len(pattern)
    for i in range(m):
        if ms.ms_len[i] == m - i:
            starts = {tree.sa[r] for r in range(ms.suf_interval[i].lo, ms.suf_interval[i].hi + 1)}
            want = {j for j in range(len(letters)) if letters[j : j + m - i] == pattern[i:]}
            assert starts == want
        else:
            assert ms.suf_interval[i].is_empty


GST_TEXT = list(b"bababbbababb")
GST_PAT = list(b"ababab")


def test_marked_gst_example():
    g = build_marked_gst(Text(GST_TEXT), GST_PAT, keep_tree=True)
    assert g.lsp == [5, 4, 3, 2, 1, 1, 5, 4, 3, 2, 1, 1]
    # Node depths mirror the reported lengths.
    assert [g.tree.sdepth[v] for v in g.lsp_node] == g.lsp


def test_marked_gst_no_shared_suffix():
    g = build_marked_gst(Text(list(b"aaaa"), 256), list(b"bb"))
    assert g.lsp == [0, 0, 0, 0]


def test_marked_gst_rejects_pattern_outside_alphabet():
    with pytest.raises(AlphabetError):
        build_marked_gst(Text([0, 1, 0], 2), [3])


def brute_lsp(text, pattern):
    m = len(pattern)
    out = []
    for j in range(len(text)):
        best = 0
        for length in range(1, m + 1):
            if text[j : j + length] == pattern[m - length :]:
                best = length
        out.append(best)
    return out


def test_marked_gst_random():
    rng = random.Random(5)
    for _ in range(200):
        n = rng.randint(1, 40)
        m = rng.randint(1, 10)
        sigma = rng.choice([2, 3, 4])
        t = [rng.randrange(sigma) for _ in range(n)]
        p = [rng.randrange(sigma) for _ in range(m)]
        g = build_marked_gst(Text(t, sigma), p)
        assert g.lsp == brute_lsp(t, p), (t, p)
