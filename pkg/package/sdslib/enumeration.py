# Copyright SDSLIB CONTRIBUTORS 2024

"""
Exhaustive generation of fixed-content necklaces, bracelets and charmed bracelets.

Necklaces come from the fixed-content necklace walk: symbols are the ranks of the
distinct values of a Content, position 1 holds the smallest symbol, and a word is
emitted when the prenecklace of length d is a necklace. The walk keeps an explicit
stack so it can stop at a given depth and hand out prefix states for partitioned
generation. Bracelets and charmed bracelets are the necklaces that are also
canonical under the larger group; they are filtered in numpy batches.
"""

import logging
from typing import Iterator, List, Optional, Tuple

import numpy as np
import pydantic

from sdslib.compress import Content
from sdslib.enums import EquivMode
from sdslib.sequence import Sequence
from sdslib.symmetry import canonical_mask

logger = logging.getLogger(__name__)

DEFAULT_BATCH = 65536


class PrefixState(pydantic.BaseModel):
    """
    Partial necklace walk: the fixed prefix (as symbol ranks), the current period p
    and the remaining count of every symbol.
    """

    model_config = pydantic.ConfigDict(frozen=True)

    prefix: Tuple[int, ...]
    p: int
    remaining: Tuple[int, ...]


def _root_state(content: Content) -> PrefixState:
    counts = list(content.counts)
    counts[0] -= 1
    return PrefixState(prefix=(0,), p=1, remaining=tuple(counts))


def _walk(d: int, state: PrefixState, stop: Optional[int] = None) -> Iterator[Tuple]:
    """
    Continue the necklace walk from a prefix state.
    Yields complete words as tuples of symbol ranks, or, when stop is given,
    the PrefixState reached with stop-1 positions filled.
    """
    a = [0] * (d + 1)
    start = len(state.prefix) + 1
    a[1:start] = state.prefix
    counts = list(state.remaining)
    k = len(counts)
    # frame: [t, p, next symbol to try, symbol placed at t or -1]
    stack = [[start, state.p, a[start - state.p] if start <= d else 0, -1]]
    while stack:
        frame = stack[-1]
        t, p = frame[0], frame[1]
        if t > d:
            if d % p == 0:
                yield tuple(a[1:])
            stack.pop()
            continue
        if stop is not None and t == stop:
            yield PrefixState(prefix=tuple(a[1:t]), p=p, remaining=tuple(counts))
            stack.pop()
            continue
        if frame[3] >= 0:
            counts[frame[3]] += 1
            frame[3] = -1
        j = frame[2]
        while j < k and counts[j] == 0:
            j += 1
        if j >= k:
            stack.pop()
            continue
        a[t] = j
        counts[j] -= 1
        frame[2] = j + 1
        frame[3] = j
        child_p = p if j == a[t - p] else t
        child_t = t + 1
        stack.append([child_t, child_p, a[child_t - child_p] if child_t <= d else 0, -1])


def necklace_words(content: Content) -> Iterator[Tuple[int, ...]]:
    """
    Every necklace with the given content, as tuples of symbol ranks, in lexicographic order.
    """
    d = content.length
    if d < 1:
        raise ValueError("Necklaces need a content of positive length")
    yield from _walk(d, _root_state(content))


def necklace_prefixes(content: Content, depth: int) -> List[PrefixState]:
    """
    Partition of the necklace walk by prefixes of the given length.
    The necklaces below all returned states are exactly the necklaces of the content.
    """
    d = content.length
    root = _root_state(content)
    if depth <= 1 or depth >= d:
        return [root]
    return list(_walk(d, root, stop=depth + 1))


def necklaces_from_prefix(content: Content, state: PrefixState) -> Iterator[Tuple[int, ...]]:
    """
    Necklaces below one prefix state, as tuples of symbol ranks.
    """
    yield from _walk(content.length, state)


def word_batches(
    content: Content, words: Iterator[Tuple[int, ...]], batch_size: int = DEFAULT_BATCH
) -> Iterator[np.ndarray]:
    """
    Group rank words into 2D arrays of actual values, at most batch_size rows each.
    """
    values = np.asarray(content.values, dtype=np.int64)
    chunk: List[Tuple[int, ...]] = []
    for w in words:
        chunk.append(w)
        if len(chunk) >= batch_size:
            yield values[np.asarray(chunk, dtype=np.intp)]
            chunk = []
    if chunk:
        yield values[np.asarray(chunk, dtype=np.intp)]


def canonical_batches(
    content: Content,
    mode: EquivMode,
    batch_size: int = DEFAULT_BATCH,
    state: Optional[PrefixState] = None,
) -> Iterator[np.ndarray]:
    """
    Batches of orbit canonicals under a mode, as 2D arrays of values.
    With a prefix state, only the part of the stream below that state is produced.
    """
    words = necklace_words(content) if state is None else necklaces_from_prefix(content, state)
    for batch in word_batches(content, words, batch_size):
        if mode != EquivMode.NECKLACE:
            batch = batch[canonical_mask(batch, mode)]
        if len(batch):
            yield batch


def _stream(content: Content, mode: EquivMode) -> Iterator[Sequence]:
    d = content.length
    for batch in canonical_batches(content, mode):
        for row in batch.tolist():
            yield Sequence(v=d, values=tuple(row))


def necklaces(content: Content) -> Iterator[Sequence]:
    """
    One representative, the least rotation, per necklace class with the given content.
    """
    return _stream(content, EquivMode.NECKLACE)


def bracelets(content: Content) -> Iterator[Sequence]:
    """
    One representative per class under shifts and reversal.
    """
    return _stream(content, EquivMode.BRACELET)


def charmed_bracelets(content: Content) -> Iterator[Sequence]:
    """
    One representative per class under shifts, reversal and multiplication by units mod d.
    """
    return _stream(content, EquivMode.CHARMED)


def enumerate_classes(content: Content, mode: EquivMode) -> Iterator[Sequence]:
    """
    Stream of canonicals for a mode.
    """
    return _stream(content, mode)
