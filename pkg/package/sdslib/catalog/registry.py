# Copyright SDSLIB CONTRIBUTORS 2024

"""
Witness records and the registry of published SDS witnesses, verified when first loaded.
"""

import logging
from typing import List, Optional, Tuple

import pydantic

from sdslib.enums import WitnessSource
from sdslib.exception import CorruptRegistry, SdsException
from sdslib.namedobject import NamedObject
from sdslib.params import SdsParams, validate_params, verify_sds
from sdslib.sequence import Subset
from sdslib.state import StateManager, list_objects
from sdslib.symmetry import normal_form

logger = logging.getLogger(__name__)


class WitnessRecord(NamedObject, pydantic.BaseModel):
    """
    Base blocks of an SDS with the parameters they realize.
    verified is True only if verify_sds passed on these blocks.
    """

    model_config = pydantic.ConfigDict(frozen=True)

    label: str
    params: SdsParams
    blocks: Tuple[Subset, ...]
    source: WitnessSource = WitnessSource.SEARCH
    verified: bool = False

    def get_name(self) -> str:
        return self.label

    @classmethod
    def checked(cls, label: str, params: SdsParams, blocks: List[Subset], source: WitnessSource) -> "WitnessRecord":
        """
        Record with verified computed from the blocks.
        """
        return cls(label=label, params=params, blocks=tuple(blocks), source=source, verified=verify_sds(params, blocks))

    def normal_form(self) -> Tuple[Tuple[int, ...], ...]:
        """
        Normal form of the blocks under translation, reversal and multiplication.
        """
        return normal_form(list(self.blocks))


_PUBLISHED: List[Tuple[Tuple[int, Tuple[int, ...], int], Tuple[Tuple[int, ...], ...]]] = [
    (
        (50, (22, 21), 18),
        (
            (0, 1, 2, 3, 6, 7, 9, 13, 14, 16, 18, 20, 22, 23, 26, 27, 30, 35, 37, 41, 45, 46),
            (0, 1, 2, 3, 4, 5, 6, 8, 11, 12, 14, 17, 20, 22, 29, 30, 32, 37, 38, 39, 42),
        ),
    ),
    (
        (50, (22, 21), 18),
        (
            (0, 1, 2, 3, 4, 6, 7, 8, 9, 14, 16, 18, 20, 21, 25, 31, 32, 35, 36, 42, 44, 45),
            (0, 1, 2, 4, 5, 8, 9, 10, 12, 14, 18, 21, 23, 24, 27, 29, 32, 34, 35, 39, 42),
        ),
    ),
    (
        (50, (22, 21), 18),
        (
            (0, 1, 2, 3, 5, 8, 9, 11, 14, 15, 19, 21, 24, 25, 29, 30, 32, 36, 38, 39, 41, 43),
            (0, 1, 3, 5, 6, 7, 8, 9, 10, 13, 16, 18, 20, 21, 24, 25, 31, 32, 33, 37, 41),
        ),
    ),
    (
        (50, (22, 21), 18),
        (
            (0, 2, 3, 4, 6, 9, 10, 12, 13, 17, 19, 20, 24, 25, 28, 29, 30, 33, 38, 39, 41, 47),
            (0, 1, 3, 5, 6, 7, 8, 10, 12, 13, 14, 17, 20, 22, 24, 28, 32, 37, 38, 39, 40),
        ),
    ),
    (
        (58, (27, 24), 22),
        (
            (0, 1, 2, 3, 4, 7, 8, 10, 11, 12, 13, 16, 18, 20, 24, 26, 29, 31, 32, 33, 36, 38, 43, 46, 47, 50, 53),
            (0, 1, 2, 3, 7, 8, 10, 11, 12, 13, 16, 17, 21, 22, 24, 27, 30, 34, 41, 42, 43, 45, 47, 49),
        ),
    ),
    (
        (58, (27, 24), 22),
        (
            (0, 1, 2, 3, 5, 6, 7, 9, 11, 12, 14, 15, 17, 19, 23, 24, 25, 26, 29, 32, 33, 39, 40, 43, 45, 48, 52),
            (0, 1, 2, 3, 4, 5, 9, 11, 14, 15, 16, 18, 22, 26, 27, 31, 32, 34, 37, 39, 41, 42, 45, 51),
        ),
    ),
    (
        (58, (27, 24), 22),
        (
            (0, 1, 2, 3, 5, 8, 9, 11, 12, 13, 14, 18, 19, 21, 24, 25, 27, 29, 32, 34, 35, 39, 41, 43, 44, 48, 49),
            (0, 2, 3, 4, 6, 8, 10, 13, 16, 17, 19, 20, 21, 25, 28, 29, 32, 33, 34, 39, 40, 41, 43, 46),
        ),
    ),
    (
        (58, (27, 24), 22),
        (
            (0, 2, 3, 4, 6, 7, 8, 10, 11, 14, 16, 17, 18, 20, 23, 25, 26, 28, 31, 32, 36, 37, 38, 41, 42, 47, 49),
            (0, 1, 2, 3, 5, 8, 9, 10, 12, 16, 17, 18, 22, 25, 28, 30, 35, 37, 41, 44, 45, 46, 48, 49),
        ),
    ),
]


def _load() -> None:
    counters = {}
    records = []
    for (v, ks, lam), blocks in _PUBLISHED:
        params = validate_params(v, list(ks), lam)
        counters[params] = counters.get(params, 0) + 1
        label = f"{params.get_name()}#{counters[params]}"
        try:
            subsets = [Subset.of(v, b) for b in blocks]
            record = WitnessRecord.checked(label, params, subsets, WitnessSource.PUBLISHED)
        except (ValueError, ArithmeticError, SdsException) as e:
            raise CorruptRegistry(f"Witness {label} is malformed: {e}") from e
        if not record.verified:
            raise CorruptRegistry(f"Witness {label} fails SDS verification")
        records.append(record)
    # nothing is cached unless every witness verified
    for record in records:
        StateManager.store(WitnessRecord, record)
    logger.debug("Loaded %d published witnesses", len(records))


def registry(params: Optional[SdsParams] = None) -> List[WitnessRecord]:
    """
    The published witnesses, each verified at load time, optionally only those
    for one parameter set.
    """
    if not StateManager.values(WitnessRecord):
        _load()
    records = StateManager.values(WitnessRecord)
    if params is not None:
        records = [rec for rec in records if rec.params == params]
    return records


def get_witness(label: str) -> Optional[WitnessRecord]:
    """
    Look up a witness by label, e.g. "(58;27,24;22)#3". Returns None if not found.
    """
    registry()
    return StateManager.get(WitnessRecord, label)


def witness_labels(matches: Optional[str] = None) -> List[str]:
    """
    Labels of all registered witnesses, optionally those containing a substring.
    """
    registry()
    return list_objects(WitnessRecord, matches)
