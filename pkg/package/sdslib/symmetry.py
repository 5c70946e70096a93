# Copyright SDSLIB CONTRIBUTORS 2024

"""
Equivalence groups acting on cyclic words of length d, canonical representatives,
exact class counting and the normal form used to compare SDS witnesses.

Every group element is an affine map i -> u*i + t (mod d) with u a unit;
a word w is sent to the word j -> w[u*j + t]. NECKLACE uses u = 1, BRACELET
u = +-1 and CHARMED every unit mod d. Lexicographic order is numeric ascending.
"""

from functools import lru_cache
from math import gcd
from typing import Dict, List, Sequence as SequenceType, Tuple

import numpy as np

from sdslib.compress import Content
from sdslib.enums import EquivMode
from sdslib.sequence import Sequence, Subset

Word = Tuple[int, ...]


def units(d: int) -> List[int]:
    """
    Units of Z_d in ascending order. Z_1 has the single unit 0.
    """
    return [u for u in range(d) if gcd(u, d) == 1]


def multipliers(d: int, mode: EquivMode) -> List[int]:
    """
    The multipliers u allowed by a mode.
    """
    if mode == EquivMode.NECKLACE:
        return [1 % d]
    if mode == EquivMode.BRACELET:
        return sorted({1 % d, (-1) % d})
    return units(d)


@lru_cache(maxsize=128)
def group_maps(d: int, mode: EquivMode) -> Tuple[Tuple[int, ...], ...]:
    """
    All distinct index maps of the group of a mode, each as a tuple g with g[j] = u*j + t mod d.
    The identity comes first.
    """
    maps: Dict[Tuple[int, ...], None] = {}
    for u in multipliers(d, mode):
        for t in range(d):
            maps[tuple((u * j + t) % d for j in range(d))] = None
    return tuple(maps)


@lru_cache(maxsize=128)
def _group_array(d: int, mode: EquivMode) -> np.ndarray:
    return np.asarray(group_maps(d, mode), dtype=np.intp).reshape(-1, d)


def apply_map(word: SequenceType[int], g: SequenceType[int]) -> Word:
    """
    The word j -> word[g[j]].
    """
    return tuple(word[i] for i in g)


def canonical_word(word: SequenceType[int], mode: EquivMode) -> Word:
    """
    Lexicographically least image of a word under the group of a mode.
    """
    word = tuple(word)
    best = word
    d = len(word)
    for g in group_maps(d, mode):
        # early abort on the first position where the image is larger
        for j in range(d):
            x, y = word[g[j]], best[j]
            if x != y:
                if x < y:
                    best = apply_map(word, g)
                break
    return best


def orbit_canonical(A: Sequence, mode: EquivMode) -> Sequence:
    """
    Smallest sequence in the orbit of A. Two sequences are equivalent iff their canonicals agree.
    """
    return Sequence(v=A.v, values=canonical_word(A.values, mode))


def is_canonical(A: Sequence, mode: EquivMode) -> bool:
    """
    True if A is its own orbit canonical.
    """
    return canonical_word(A.values, mode) == A.values


def orbit(A: Sequence, mode: EquivMode) -> List[Sequence]:
    """
    All distinct members of the orbit of A, sorted.
    """
    words = sorted({apply_map(A.values, g) for g in group_maps(A.v, mode)})
    return [Sequence(v=A.v, values=w) for w in words]


def canonical_mask(words: np.ndarray, mode: EquivMode) -> np.ndarray:
    """
    Boolean mask over the rows of a 2D integer array: True where the row equals its
    orbit canonical. Rows are ranked symbol by symbol and encoded as base-k integers,
    so each group element costs one gather and one matrix product.
    """
    words = np.asarray(words)
    if words.ndim != 2:
        raise ValueError(f"Expected a 2D array of words, got shape {words.shape}")
    rows, d = words.shape
    if rows == 0:
        return np.zeros(0, dtype=bool)
    symbols = np.unique(words)
    base = len(symbols)
    if base**d >= 2**63:
        as_tuples = [tuple(int(x) for x in w) for w in words]
        return np.asarray([canonical_word(w, mode) == w for w in as_tuples], dtype=bool)
    ranks = np.searchsorted(symbols, words).astype(np.int64)
    powers = np.asarray([base ** (d - 1 - j) for j in range(d)], dtype=np.int64)
    codes = ranks @ powers
    alive = np.arange(rows)
    for g in _group_array(d, mode)[1:]:
        if len(alive) == 0:
            break
        keep = (ranks[alive][:, g] @ powers) >= codes[alive]
        alive = alive[keep]
    mask = np.zeros(rows, dtype=bool)
    mask[alive] = True
    return mask


def _cycle_lengths(g: Tuple[int, ...]) -> Tuple[int, ...]:
    seen = [False] * len(g)
    lengths = []
    for start in range(len(g)):
        if seen[start]:
            continue
        length = 0
        j = start
        while not seen[j]:
            seen[j] = True
            j = g[j]
            length += 1
        lengths.append(length)
    return tuple(sorted(lengths, reverse=True))


@lru_cache(maxsize=4096)
def _fixed_words(cycle_lengths: Tuple[int, ...], counts: Tuple[int, ...]) -> int:
    """
    Number of words constant on every cycle with the given symbol counts.
    """

    @lru_cache(maxsize=None)
    def go(i: int, remaining: Tuple[int, ...]) -> int:
        if i == len(cycle_lengths):
            return 1 if not any(remaining) else 0
        length = cycle_lengths[i]
        total = 0
        for c, left in enumerate(remaining):
            if left >= length:
                total += go(i + 1, remaining[:c] + (left - length,) + remaining[c + 1 :])
        return total

    return go(0, counts)


def count_classes(content: Content, mode: EquivMode) -> int:
    """
    Exact number of classes of words with the given content, by Burnside's lemma.
    """
    d = content.length
    if d == 0:
        return 1
    maps = group_maps(d, mode)
    counts = tuple(content.counts)
    fixed = sum(_fixed_words(_cycle_lengths(g), counts) for g in maps)
    if fixed % len(maps) != 0:
        raise ArithmeticError(f"Burnside sum {fixed} not divisible by group order {len(maps)}")
    return fixed // len(maps)


def _least_translate(v: int, elements: List[int]) -> Tuple[int, ...]:
    if not elements:
        return ()
    return min(tuple(sorted((x - a) % v for x in elements)) for a in elements)


def normal_form(blocks: List[Subset]) -> Tuple[Tuple[int, ...], ...]:
    """
    Normal form of a family of base blocks: each block may be translated and reversed
    on its own, all blocks are multiplied by the same unit, and blocks of equal size
    may be swapped. Returns the lexicographically least resulting tuple of blocks.
    """
    if not blocks:
        return ()
    v = blocks[0].v
    sizes = [b.k for b in blocks]
    best = None
    for u in units(v):
        images = []
        for block in blocks:
            scaled = [(u * x) % v for x in block.elements]
            images.append(min(_least_translate(v, scaled), _least_translate(v, [(-x) % v for x in scaled])))
        for size in set(sizes):
            positions = [i for i, k in enumerate(sizes) if k == size]
            for i, img in zip(positions, sorted(images[i] for i in positions)):
                images[i] = img
        candidate = tuple(images)
        if best is None or candidate < best:
            best = candidate
    return best
