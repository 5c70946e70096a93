# Copyright SDSLIB CONTRIBUTORS 2024

"""
JSON-lines witness files: one object per line,
{"v": int, "k": [int, ...], "lambda": int, "blocks": [[int, ...], ...]}.
"""

import logging
from typing import Dict, Iterable, List

import pydantic

from sdslib.catalog.registry import WitnessRecord
from sdslib.enums import WitnessSource
from sdslib.exception import InputError, SdsException
from sdslib.params import SdsParams, validate_params
from sdslib.sequence import Subset

logger = logging.getLogger(__name__)


class WitnessLine(pydantic.BaseModel):
    """
    One line of a witness file.
    """

    model_config = pydantic.ConfigDict(populate_by_name=True)

    v: int
    k: List[int]
    lam: int = pydantic.Field(alias="lambda")
    blocks: List[List[int]]

    @classmethod
    def from_record(cls, record: WitnessRecord) -> "WitnessLine":
        """
        File line for a record, blocks sorted ascending.
        """
        p = record.params
        return cls(v=p.v, k=list(p.ks), lam=p.lam, blocks=[list(b.elements) for b in record.blocks])

    def to_json(self) -> str:
        """
        Single-line JSON with the field names of the file format.
        """
        return self.model_dump_json(by_alias=True)


def write_witnesses(filename: str, records: Iterable[WitnessRecord]) -> int:
    """
    Write records to a JSON-lines file, returning the number written.
    """
    count = 0
    with open(filename, "w", encoding="utf-8") as f:
        for record in records:
            f.write(WitnessLine.from_record(record).to_json() + "\n")
            count += 1
    logger.info("Wrote %d witnesses to %s", count, filename)
    return count


def read_witnesses(filename: str, source: WitnessSource = WitnessSource.SEARCH) -> List[WitnessRecord]:
    """
    Read a JSON-lines witness file. Every record is verified again on reading;
    labels are the parameters followed by a running number per parameter set.
    Malformed lines raise InputError naming the line.
    """
    records = []
    counters: Dict[SdsParams, int] = {}
    with open(filename, "r", encoding="utf-8") as f:
        for lineno, text in enumerate(f, start=1):
            if not text.strip():
                continue
            try:
                line = WitnessLine.model_validate_json(text)
                params = validate_params(line.v, line.k, line.lam)
                blocks = [Subset.of(line.v, b) for b in line.blocks]
                counters[params] = counters.get(params, 0) + 1
                label = f"{params.get_name()}#{counters[params]}"
                records.append(WitnessRecord.checked(label, params, blocks, source))
            except (pydantic.ValidationError, SdsException) as e:
                raise InputError(f"{filename}:{lineno}: {e}") from e
    unverified = sum(1 for rec in records if not rec.verified)
    if unverified:
        logger.warning("%s: %d of %d witnesses fail verification", filename, unverified, len(records))
    return records
