# Copyright SDSLIB CONTRIBUTORS 2024

import itertools

import numpy as np
import pytest

from sdslib.compress import Content
from sdslib.enumeration import (
    bracelets,
    canonical_batches,
    charmed_bracelets,
    enumerate_classes,
    necklace_prefixes,
    necklace_words,
    necklaces,
    necklaces_from_prefix,
    word_batches,
)
from sdslib.enums import EquivMode
from sdslib.symmetry import canonical_word, count_classes

SMALL_CONTENTS = [
    Content.of(1, {-1: 3, 1: 3}),
    Content.of(1, {-1: 1, 1: 7}),
    Content.of(1, {-1: 4, 1: 4}),
    Content.of(2, {-2: 2, 0: 3, 2: 3}),
    Content.of(2, {-2: 1, 0: 1, 2: 5}),
    Content.of(3, {-3: 2, -1: 2, 1: 1, 3: 2}),
    Content.of(2, {2: 6}),
    Content.of(2, {0: 1}),
]


def _all_words(content: Content):
    pool = [x for x, c in zip(content.values, content.counts) for _ in range(c)]
    return set(itertools.permutations(pool))


def test_necklaces_small():
    """
    The four binary necklaces of length 6 with three -1 entries, least rotations in order.
    """
    result = [s.values for s in necklaces(Content.of(1, {-1: 3, 1: 3}))]
    assert result == [
        (-1, -1, -1, 1, 1, 1),
        (-1, -1, 1, -1, 1, 1),
        (-1, -1, 1, 1, -1, 1),
        (-1, 1, -1, 1, -1, 1),
    ]
    assert len(list(bracelets(Content.of(1, {-1: 3, 1: 3})))) == 3
    assert [s.values for s in necklaces(Content.of(2, {0: 1}))] == [(0,)]
    assert len(list(charmed_bracelets(Content.of(2, {2: 6})))) == 1


@pytest.mark.parametrize("mode", [EquivMode.NECKLACE, EquivMode.BRACELET, EquivMode.CHARMED])
def test_enumeration_is_exhaustive(mode):
    """
    Every class appears exactly once, as its canonical, in lexicographic order.
    """
    for content in SMALL_CONTENTS:
        stream = [s.values for s in enumerate_classes(content, mode)]
        expected = {canonical_word(w, mode) for w in _all_words(content)}
        assert len(stream) == len(set(stream))
        assert set(stream) == expected
        assert stream == sorted(stream)
        assert len(stream) == count_classes(content, mode)


def test_necklace_words_are_ranks():
    """
    The raw walk yields symbol ranks, smallest rank first.
    """
    content = Content.of(2, {-2: 2, 0: 1, 2: 1})
    words = list(necklace_words(content))
    assert words == [(0, 0, 1, 2), (0, 0, 2, 1), (0, 1, 0, 2)]
    with pytest.raises(ValueError):
        list(necklace_words(Content(m=2, entries=())))


@pytest.mark.parametrize("depth", [1, 2, 3, 4, 5, 9])
def test_prefix_partition(depth):
    """
    Walks below the prefix states concatenate to the full walk.
    """
    for content in SMALL_CONTENTS[:6]:
        states = necklace_prefixes(content, depth)
        if depth <= 1 or depth >= content.length:
            assert len(states) == 1
        else:
            assert all(len(state.prefix) == depth for state in states)
        joined = [w for state in states for w in necklaces_from_prefix(content, state)]
        assert joined == list(necklace_words(content))


def test_word_batches():
    """
    Rank words become value rows in batches of bounded size.
    """
    content = Content.of(2, {-2: 2, 0: 3, 2: 3})
    words = list(necklace_words(content))
    batches = list(word_batches(content, iter(words), batch_size=7))
    assert [len(b) for b in batches[:-1]] == [7] * (len(batches) - 1)
    assert 0 < len(batches[-1]) <= 7
    stacked = np.concatenate(batches)
    assert stacked.shape == (len(words), 8)
    assert set(np.unique(stacked).tolist()) == {-2, 0, 2}
    assert stacked[0].tolist() == [-2, -2, 0, 0, 0, 2, 2, 2]


def test_canonical_batches_below_prefix():
    """
    Canonical batches below each prefix state add up to the class count.
    """
    content = Content.of(2, {-2: 3, 0: 3, 2: 4})
    for mode in (EquivMode.BRACELET, EquivMode.CHARMED):
        total = 0
        for state in necklace_prefixes(content, 3):
            total += sum(len(b) for b in canonical_batches(content, mode, batch_size=50, state=state))
        assert total == count_classes(content, mode)


def test_bracelet_streams_of_46():
    """
    B side bracelet streams of the (46;21,6;10) content cases.
    """
    counts = [
        len(list(bracelets(Content.from_str(s))))
        for s in ["0:6,2:17", "-2:1,0:4,2:18", "-2:2,0:2,2:19", "-2:3,2:20"]
    ]
    assert counts == [2277, 3685, 1210, 44]


def test_charmed_stream_of_46():
    """
    A side charmed bracelet stream of the fourth (46;21,6;10) content case.
    """
    stream = list(charmed_bracelets(Content.from_str("-2:2,0:17,2:4")))
    assert len(stream) == 3015
    assert all(s.v == 23 and s.row_sum() == 4 for s in stream)
