# Copyright SDSLIB CONTRIBUTORS 2024

"""
The universe of feasible two-block parameter sets (v;r,s;lambda) and the known
status of the cases with v <= 50 that were undecided before the compression searches.
"""

from typing import Dict, List, Optional, Tuple

import pydantic

from sdslib.enums import ParamStatus
from sdslib.exception import OutOfRange
from sdslib.namedobject import NamedObject
from sdslib.params import SdsParams, validate_params
from sdslib.search.decide import diophantine_precheck


class ParamRecord(NamedObject, pydantic.BaseModel):
    """
    A feasible parameter set with its known status.
    normalized means v/2 >= r >= s >= 2.
    """

    model_config = pydantic.ConfigDict(frozen=True)

    params: SdsParams
    normalized: bool
    status: ParamStatus = ParamStatus.UNCATALOGUED
    provenance: str = ""

    def get_name(self) -> str:
        return self.params.get_name()


def is_normalized(params: SdsParams) -> bool:
    """
    True for two blocks with v/2 >= r >= s >= 2.
    """
    if params.t != 2:
        return False
    r, s = params.ks
    return 2 * r <= params.v and r >= s >= 2


def _psd_empty(beta: int) -> str:
    return f"no A-sequences pass the PSD-test with bound {beta}"


# status and provenance of the open cases, keyed by "v;r,s;lambda"
OPEN_CASES: Dict[str, Tuple[ParamStatus, str]] = {
    "41;15,6;6": (ParamStatus.NOT_EXISTS, "PSD-test with bound 60, no match between 1040 A and 13104 B candidates"),
    "43;9,4;2": (ParamStatus.NOT_EXISTS, _psd_empty(44)),
    "44;19,2;8": (ParamStatus.NOT_EXISTS, _psd_empty(52)),
    "45;18,2;7": (ParamStatus.NOT_EXISTS, _psd_empty(52)),
    "46;21,6;10": (ParamStatus.NOT_EXISTS, "2-compression: 73 matched pairs, none lifts"),
    "47;9,5;2": (ParamStatus.NOT_EXISTS, _psd_empty(48)),
    "47;12,3;3": (ParamStatus.NOT_EXISTS, _psd_empty(48)),
    "47;14,2;4": (ParamStatus.NOT_EXISTS, _psd_empty(48)),
    "47;15,5;5": (ParamStatus.NOT_EXISTS, _psd_empty(60)),
    "48;14,3;4": (ParamStatus.NOT_EXISTS, _psd_empty(52)),
    "49;10,3;2": (ParamStatus.NOT_EXISTS, _psd_empty(44)),
    "49;21,4;9": (ParamStatus.OPEN, "undecided"),
    "50;8,7;2": (ParamStatus.NOT_EXISTS, "PSD-test with bound 52, no match between 1130 A and 2910 B candidates"),
    "50;20,4;8": (ParamStatus.NOT_EXISTS, "2-compression"),
    "50;22,21;18": (ParamStatus.EXISTS, "four inequivalent witnesses in the registry"),
}


def record_for(params: SdsParams) -> ParamRecord:
    """
    Catalog record of a parameter set.
    """
    status, provenance = OPEN_CASES.get(str(params), (ParamStatus.UNCATALOGUED, ""))
    return ParamRecord(params=params, normalized=is_normalized(params), status=status, provenance=provenance)


def feasible_params(v_max: int, v_min: int = 4, status: Optional[ParamStatus] = None) -> List[ParamRecord]:
    """
    All (v;r,s;lambda) with v_min <= v <= v_max, v/2 >= r >= s >= 2 and
    lambda(v-1) = r(r-1) + s(s-1) for a nonnegative integer lambda, sorted by (v, r, s).
    Optionally only those with a given status.
    """
    if v_max < 4:
        raise OutOfRange(f"v_max must be at least 4, got {v_max}")
    records = []
    for v in range(max(v_min, 4), v_max + 1):
        for r in range(2, v // 2 + 1):
            for s in range(2, r + 1):
                total = r * (r - 1) + s * (s - 1)
                if total % (v - 1) != 0:
                    continue
                record = record_for(validate_params(v, [r, s], total // (v - 1)))
                if status is None or record.status == status:
                    records.append(record)
    return records


def complementary_pair_params(v: int) -> List[ParamRecord]:
    """
    Normalized feasible (v;r,s;lambda) with v = 2n, i.e. those giving binary periodic
    complementary pairs of length v. Empty when x^2 + y^2 = 2v has no solution.
    """
    if not diophantine_precheck(v):
        return []
    return [rec for rec in feasible_params(v, v_min=v) if 2 * rec.params.n == v]
