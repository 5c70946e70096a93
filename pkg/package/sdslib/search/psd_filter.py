# Copyright SDSLIB CONTRIBUTORS 2024

"""
PSD-test pruning: a member of a complementary family with PSD-constant beta
has PSD(s) <= beta at every nonzero frequency s.
"""

import logging
from typing import Iterable, Iterator, List, Optional

import numpy as np

import sdslib.config as cfg
from sdslib.exception import BlockSizeMismatch
from sdslib.params import SdsParams
from sdslib.sequence import Sequence, Subset, psd_batch, subset_norm

logger = logging.getLogger(__name__)


def default_tolerance() -> float:
    """
    Absolute PSD tolerance from configuration.
    """
    return float(cfg.get("search.psd_tolerance", 1e-6))


def psd_mask(words: np.ndarray, beta: float, tol: Optional[float] = None) -> np.ndarray:
    """
    Boolean mask over the rows of a 2D integer array: True where the PSD at every
    nonzero frequency is at most beta + tol.
    """
    if tol is None:
        tol = default_tolerance()
    if tol < 0:
        raise ValueError(f"PSD tolerance must be nonnegative, got {tol}")
    words = np.asarray(words)
    if words.shape[0] == 0:
        return np.zeros(0, dtype=bool)
    if words.shape[1] < 2:
        return np.ones(words.shape[0], dtype=bool)
    spectrum = psd_batch(words)
    return np.max(spectrum[:, 1:], axis=1) <= beta + tol


def psd_passes(A: Sequence, beta: float, tol: Optional[float] = None) -> bool:
    """
    PSD-test for a single sequence.
    """
    return bool(psd_mask(np.asarray([A.values]), beta, tol)[0])


def psd_filter(
    stream: Iterable[Sequence], beta: float, tol: Optional[float] = None, batch_size: int = 4096
) -> Iterator[Sequence]:
    """
    Keep the sequences of a stream that pass the PSD-test, in stream order.
    Sequences on the boundary psd = beta are kept.
    """
    chunk: List[Sequence] = []
    for A in stream:
        chunk.append(A)
        if len(chunk) >= batch_size:
            yield from _filter_chunk(chunk, beta, tol)
            chunk = []
    if chunk:
        yield from _filter_chunk(chunk, beta, tol)


def _filter_chunk(chunk: List[Sequence], beta: float, tol: Optional[float]) -> Iterator[Sequence]:
    # sequences of different lengths cannot share an array
    by_length = {}
    for i, A in enumerate(chunk):
        by_length.setdefault(A.v, []).append(i)
    keep = np.zeros(len(chunk), dtype=bool)
    for idx in by_length.values():
        keep[idx] = psd_mask(np.asarray([chunk[i].values for i in idx]), beta, tol)
    for A, ok in zip(chunk, keep):
        if ok:
            yield A


def subset_psd_test(X: Subset, params: SdsParams, block: Optional[int] = None, tol: Optional[float] = None) -> bool:
    """
    PSD-test restated on a base block through its norm: for all s != 0,
    sum_{j=1}^{v-1} N_X(j) cos(2 pi j s / v) <= n - k.

    The block index defaults to the first block whose size matches |X|. The tolerance
    is the PSD tolerance divided by 4, so the result agrees with psd_filter on the
    associated sequence.
    """
    if tol is None:
        tol = default_tolerance()
    if X.v != params.v:
        raise BlockSizeMismatch(f"Subset lives in Z_{X.v}, parameters need Z_{params.v}")
    if block is None:
        matches = [i for i, k in enumerate(params.ks) if k == X.k]
        if not matches:
            raise BlockSizeMismatch(f"No block of size {X.k} in {params.get_name()}")
        block = matches[0]
    elif not 0 <= block < params.t or params.ks[block] != X.k:
        raise BlockSizeMismatch(f"Block {block} of {params.get_name()} does not have size {X.k}")
    v = params.v
    if v < 2:
        return True
    norm = np.asarray(subset_norm(X).values[1:], dtype=np.float64)
    j = np.arange(1, v)
    s = np.arange(1, v)
    sums = np.cos(2 * np.pi * np.outer(s, j) / v) @ norm
    return bool(np.all(sums <= params.n - params.ks[block] + tol / 4))
