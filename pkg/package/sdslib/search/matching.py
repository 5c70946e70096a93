# Copyright SDSLIB CONTRIBUTORS 2024

"""
Candidate sets of filtered sequences, PAF deduplication and complementary pair matching.
"""

import logging
from typing import Dict, List, Optional, Tuple

try:
    from typing import Self
except ImportError:  # Python < 3.11
    from typing_extensions import Self

import numpy as np
import pydantic

from sdslib.compress import CompressionSpec, Content
from sdslib.enums import Side
from sdslib.params import SdsParams
from sdslib.sequence import Sequence, paf_batch

logger = logging.getLogger(__name__)

PafKey = Tuple[int, ...]


def paf_keys(sequences: List[Sequence]) -> List[PafKey]:
    """
    Full PAF vectors of a list of equal-length sequences, as tuples.
    """
    if not sequences:
        return []
    return [tuple(int(x) for x in row) for row in paf_batch(np.asarray([a.values for a in sequences]))]


class CandidateSet(pydantic.BaseModel):
    """
    Sequences of one side of one content case that passed the PSD-test,
    with their PAF vectors alongside. spec is None for uncompressed search.
    """

    model_config = pydantic.ConfigDict(frozen=True)

    params: SdsParams
    spec: Optional[CompressionSpec] = None
    content: Content
    side: Side
    sequences: Tuple[Sequence, ...]
    pafs: Tuple[PafKey, ...]

    @classmethod
    def of(
        cls,
        params: SdsParams,
        content: Content,
        side: Side,
        sequences: List[Sequence],
        spec: Optional[CompressionSpec] = None,
    ) -> Self:
        """
        Build a candidate set, computing the PAF of every sequence.
        """
        return cls(
            params=params,
            spec=spec,
            content=content,
            side=side,
            sequences=tuple(sequences),
            pafs=tuple(paf_keys(sequences)),
        )

    @property
    def d(self) -> int:
        """
        Length of the candidate sequences.
        """
        return self.content.length

    def __len__(self) -> int:
        return len(self.sequences)

    def deduped(self) -> Tuple[Self, Dict[PafKey, List[Sequence]]]:
        """
        One sequence per distinct PAF, plus the full PAF classes keyed by PAF.
        """
        classes = group_by_paf(list(self.sequences), list(self.pafs))
        reps = [members[0] for members in classes.values()]
        return CandidateSet.of(self.params, self.content, self.side, reps, self.spec), classes


def group_by_paf(sequences: List[Sequence], pafs: Optional[List[PafKey]] = None) -> Dict[PafKey, List[Sequence]]:
    """
    Sequences grouped by their PAF vector, groups and members in input order.
    """
    if pafs is None:
        pafs = paf_keys(sequences)
    classes: Dict[PafKey, List[Sequence]] = {}
    for a, key in zip(sequences, pafs):
        classes.setdefault(key, []).append(a)
    return classes


def dedupe_by_paf(sequences: List[Sequence]) -> List[Sequence]:
    """
    Keep the first sequence of every distinct PAF vector.
    """
    return [members[0] for members in group_by_paf(sequences).values()]


def match_pairs(As: CandidateSet, Bs: CandidateSet, alpha_d: int) -> List[Tuple[Sequence, Sequence]]:
    """
    All (A, B) with PAF_A(s) + PAF_B(s) = alpha_d for every nonzero shift s.
    A sides are indexed by their PAF over shifts 1..floor(d/2); each B looks up the
    complement alpha_d - PAF_B and every hit is confirmed on the full vector.
    """
    if len(As) == 0 or len(Bs) == 0:
        return []
    if As.d != Bs.d:
        raise ValueError(f"Candidate sets have lengths {As.d} and {Bs.d}")
    d = As.d
    half = d // 2 + 1
    index: Dict[PafKey, List[int]] = {}
    for i, key in enumerate(As.pafs):
        index.setdefault(key[1:half], []).append(i)

    pairs = []
    for b, b_paf in zip(Bs.sequences, Bs.pafs):
        wanted = tuple(alpha_d - x for x in b_paf[1:half])
        for i in index.get(wanted, []):
            a_paf = As.pafs[i]
            if all(a_paf[s] + b_paf[s] == alpha_d for s in range(1, d)):
                pairs.append((As.sequences[i], b))
    logger.debug("Matched %d pairs from %d x %d candidates", len(pairs), len(As), len(Bs))
    return pairs
