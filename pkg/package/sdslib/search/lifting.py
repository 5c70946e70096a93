# Copyright SDSLIB CONTRIBUTORS 2024

"""
Lifting compressed complementary pairs back to length v.

A compressed entry c at position j of a length-d sequence fixes the multiset of the
m entries at positions j, j+d, ..., j+(m-1)d: (m - c)/2 of them are -1. Entries
+-m are forced; the others branch over every placement of the -1 entries.
"""

import itertools
import logging
from math import comb, prod
from typing import Dict, Iterator, List, Optional, Tuple

import numpy as np

import sdslib.config as cfg
from sdslib.compress import CompressionSpec
from sdslib.exception import AlphabetMismatch, BlockSizeMismatch, Unsupported
from sdslib.params import SdsParams, sds_constants, verify_sds
from sdslib.sequence import Sequence, Subset, paf_batch

logger = logging.getLogger(__name__)


def _patterns(c: int, m: int) -> List[Tuple[int, ...]]:
    negatives = (m - c) // 2
    out = []
    for where in itertools.combinations(range(m), negatives):
        out.append(tuple(-1 if r in where else 1 for r in range(m)))
    return out


def _check_compressed(C: Sequence, spec: CompressionSpec) -> None:
    if C.v != spec.d:
        raise AlphabetMismatch(f"Compressed sequence has length {C.v}, expected {spec.d}")
    if not C.in_alphabet(spec.m):
        raise AlphabetMismatch(f"Entries of {C} are not in the alphabet of m={spec.m}")


def preimage_count(C: Sequence, spec: CompressionSpec) -> int:
    """
    Number of +-1 sequences of length v whose m-compression is C.
    """
    _check_compressed(C, spec)
    return prod(comb(spec.m, (spec.m - c) // 2) for c in C.values)


def preimage_batches(C: Sequence, spec: CompressionSpec, batch_size: Optional[int] = None) -> Iterator[np.ndarray]:
    """
    The preimages of C in chunks of at most batch_size rows, produced lazily.
    """
    _check_compressed(C, spec)
    if batch_size is None:
        batch_size = int(cfg.get("search.batch_size", 65536))
    if batch_size < 1:
        raise ValueError(f"Batch size must be positive, got {batch_size}")
    options = [_patterns(c, spec.m) for c in C.values]
    combos = itertools.product(*options)
    while True:
        chunk = list(itertools.islice(combos, batch_size))
        if not chunk:
            return
        # rows of shape (d, m) flattened r-major give index r*d + j
        yield np.asarray(chunk, dtype=np.int64).transpose(0, 2, 1).reshape(-1, spec.v)


def preimages(C: Sequence, spec: CompressionSpec) -> np.ndarray:
    """
    All +-1 sequences of length v whose m-compression is C, as rows of an array.
    """
    return np.concatenate(list(preimage_batches(C, spec)), axis=0)


def _block(row: np.ndarray, v: int) -> Subset:
    return Subset(v=v, elements=tuple(int(i) for i in np.flatnonzero(row == -1)))


def lift(
    pair: Tuple[Sequence, Sequence],
    spec: CompressionSpec,
    params: SdsParams,
    batch_size: Optional[int] = None,
) -> List[List[Subset]]:
    """
    Every pair of base blocks whose associated sequences compress to the given pair
    and which verifies as an SDS with the given parameters.

    Preimages of the side with fewer of them are indexed by PAF; the other side is
    streamed in batches and looks up the complementary PAF.
    """
    if params.t != 2:
        raise Unsupported(f"Lifting is implemented for two blocks, got t={params.t}")
    if params.v != spec.v:
        raise BlockSizeMismatch(f"Compression of length {spec.v} does not match {params.get_name()}")
    A, B = pair
    _check_compressed(A, spec)
    _check_compressed(B, spec)
    r, s = params.ks
    # row sums are preserved by compression
    if A.row_sum() != params.v - 2 * r or B.row_sum() != params.v - 2 * s:
        return []

    alpha = sds_constants(params).alpha
    indexed_is_a = preimage_count(A, spec) <= preimage_count(B, spec)
    indexed, streamed = (A, B) if indexed_is_a else (B, A)

    rows = preimages(indexed, spec)
    index: Dict[Tuple[int, ...], List[int]] = {}
    for i, paf_row in enumerate(paf_batch(rows)[:, 1:]):
        index.setdefault(tuple(int(x) for x in paf_row), []).append(i)

    witnesses = []
    streamed_total = 0
    for batch in preimage_batches(streamed, spec, batch_size):
        streamed_total += len(batch)
        wanted = alpha - paf_batch(batch)[:, 1:]
        for j, key in enumerate(wanted):
            for i in index.get(tuple(int(x) for x in key), []):
                a_row, b_row = (rows[i], batch[j]) if indexed_is_a else (batch[j], rows[i])
                blocks = [_block(a_row, params.v), _block(b_row, params.v)]
                if verify_sds(params, blocks):
                    witnesses.append(blocks)
    logger.debug(
        "Lifted %d witnesses from %d indexed x %d streamed preimages", len(witnesses), len(rows), streamed_total
    )
    return witnesses
