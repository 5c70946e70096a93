# Copyright SDSLIB CONTRIBUTORS 2024

"""
SDS parameter tuples (v; k_1,...,k_t; lambda), their PAF / PSD constants
and exact verification of base blocks.
"""

from typing import Any, List, Tuple

try:
    from typing import Self
except ImportError:  # Python < 3.11
    from typing_extensions import Self
from typing_extensions import Annotated

import numpy as np
import pydantic
from pydantic.functional_validators import BeforeValidator

from sdslib.exception import (
    BlockSizeMismatch,
    InfeasibleParams,
    InputError,
    InverseNotIntegral,
    OutOfRange,
)
from sdslib.sequence import Subset, subset_norm


class SdsParams(pydantic.BaseModel):
    """
    Validated parameter tuple (v; k_1,...,k_t; lambda) with derived n = sum k_i - lambda.
    Use validate_params() to construct - it enforces lambda(v-1) = sum k_i(k_i-1).
    """

    model_config = pydantic.ConfigDict(frozen=True)

    v: int
    ks: Tuple[int, ...]
    lam: int
    n: int

    @property
    def t(self) -> int:
        """
        Number of base blocks.
        """
        return len(self.ks)

    def get_name(self) -> str:
        """
        Parameters in the usual notation, e.g. (46;21,6;10)
        """
        return f"({self})"

    def __str__(self) -> str:
        return f"{self.v};{','.join(str(k) for k in self.ks)};{self.lam}"

    @classmethod
    def from_str(cls, s: str) -> Self:
        """
        Parse "v;k1,...,kt;lambda", surrounding brackets and spaces are ignored.
        """
        text = s.strip().strip("()").replace(" ", "")
        parts = text.split(";")
        if len(parts) != 3:
            raise InputError(f"Parameter string must look like 'v;r,s;lambda', got '{s}'")
        try:
            v = int(parts[0])
            ks = [int(k) for k in parts[1].split(",") if k]
            lam = int(parts[2])
        except ValueError as e:
            raise InputError(f"Parameter string has non-integer fields: '{s}'") from e
        return validate_params(v, ks, lam)


class ConstantsPair(pydantic.BaseModel):
    """
    PAF-constants (alpha0, alpha) and PSD-constants (beta0, beta) of a complementary family.
    """

    model_config = pydantic.ConfigDict(frozen=True)

    alpha0: int
    alpha: int
    beta0: int
    beta: int


def validate_params(v: int, ks: List[int], lam: int) -> SdsParams:
    """
    Check lambda(v-1) = sum k_i(k_i-1) exactly and derive n = sum k_i - lambda.
    """
    ks = tuple(int(k) for k in ks)
    if v < 2:
        raise OutOfRange(f"Modulus v must be at least 2, got {v}")
    if not ks:
        raise OutOfRange("At least one block size is required")
    for k in ks:
        if k < 1:
            raise OutOfRange(f"Block sizes must be positive, got {k}")
        if k > v:
            raise OutOfRange(f"Block size {k} exceeds v={v}")
    if lam < 0 or lam * (v - 1) != sum(k * (k - 1) for k in ks):
        raise InfeasibleParams(f"lambda*(v-1) != sum k(k-1) for ({v};{','.join(map(str, ks))};{lam})")
    n = sum(ks) - lam
    if n < 0:
        raise InfeasibleParams(f"Derived n = {n} is negative")
    return SdsParams(v=v, ks=ks, lam=lam, n=n)


def inputconverter_params(v: Any) -> SdsParams:
    """
    Input converter that lets pydantic accept a number of inputs for SdsParams
    """
    if isinstance(v, SdsParams):
        return v
    if isinstance(v, str):
        return SdsParams.from_str(v)
    if isinstance(v, (tuple, list)) and len(v) == 3:
        return validate_params(v[0], list(v[1]), v[2])
    if isinstance(v, dict):
        return validate_params(v["v"], list(v["ks"]), v["lam"])
    raise InputError(f"Could not convert input to SdsParams: {v}")


ParamsInput = Annotated[SdsParams, BeforeValidator(inputconverter_params)]


def sds_constants(params: SdsParams) -> ConstantsPair:
    """
    Constants of the associated +-1 sequences of any SDS with these parameters:
    alpha0 = tv, alpha = tv - 4n, beta = 4n and beta0 = alpha0 + (v-1) alpha,
    the sum of the squared row sums (v - 2k_i)^2. beta0 equals tv only when tv = 4n.
    """
    tv = params.t * params.v
    alpha = tv - 4 * params.n
    return ConstantsPair(alpha0=tv, alpha=alpha, beta0=tv + (params.v - 1) * alpha, beta=4 * params.n)


def paf_to_psd_constants(alpha0: int, alpha: int, v: int) -> Tuple[int, int]:
    """
    beta0 = alpha0 + (v-1) alpha, beta = alpha0 - alpha.
    """
    return alpha0 + (v - 1) * alpha, alpha0 - alpha


def psd_to_paf_constants(beta0: int, beta: int, v: int) -> Tuple[int, int]:
    """
    Inverse of paf_to_psd_constants: alpha = (beta0 - beta) / v, alpha0 = alpha + beta.
    """
    if (beta0 - beta) % v != 0:
        raise InverseNotIntegral(f"beta0 - beta = {beta0 - beta} is not divisible by v = {v}")
    alpha = (beta0 - beta) // v
    return alpha + beta, alpha


def _check_blocks(params: SdsParams, blocks: List[Subset]) -> None:
    if len(blocks) != params.t:
        raise BlockSizeMismatch(f"Expected {params.t} blocks for {params.get_name()}, got {len(blocks)}")
    for i, (block, k) in enumerate(zip(blocks, params.ks)):
        if block.v != params.v:
            raise BlockSizeMismatch(f"Block {i} lives in Z_{block.v}, parameters need Z_{params.v}")
        if block.k != k:
            raise BlockSizeMismatch(f"Block {i} has {block.k} elements, parameters need {k}")


def verify_sds(params: SdsParams, blocks: List[Subset]) -> bool:
    """
    True iff every nonzero c in Z_v is a difference a - b with a, b in the same block
    exactly lambda times, counted over all blocks.
    """
    _check_blocks(params, blocks)
    total = np.zeros(params.v, dtype=np.int64)
    for block in blocks:
        total += np.asarray(subset_norm(block).values, dtype=np.int64)
    return bool(np.all(total[1:] == params.lam))


def group_ring_identity_holds(params: SdsParams, blocks: List[Subset]) -> bool:
    """
    Check sum N(X_i) = n + lambda T coefficient by coefficient in the group ring of Z_v.
    """
    _check_blocks(params, blocks)
    lhs = [0] * params.v
    for block in blocks:
        for i, c in enumerate(subset_norm(block).values):
            lhs[i] += c
    rhs = [params.lam] * params.v
    rhs[0] += params.n
    return lhs == rhs
