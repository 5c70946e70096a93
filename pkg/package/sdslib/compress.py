# Copyright SDSLIB CONTRIBUTORS 2024

"""
m-compression of periodic sequences and the constants and counting identities that go with it.

For v = d*m the m-compression of A is the length-d sequence of sums
a_j + a_(j+d) + ... + a_(j+(m-1)d). Complementary families stay complementary
under compression, with PAF-constants alpha0 + (m-1)alpha and m*alpha, and the
same PSD-constants.
"""

import logging
from math import gcd
from typing import Dict, List, Optional, Tuple

try:
    from typing import Self
except ImportError:  # Python < 3.11
    from typing_extensions import Self

import pydantic

from sdslib.exception import InputError, NotDivisible, Unsupported, UnsupportedFactor
from sdslib.params import SdsParams, sds_constants
from sdslib.sequence import Sequence

logger = logging.getLogger(__name__)


def alphabet(m: int) -> Tuple[int, ...]:
    """
    Compressed alphabet {-m, 2-m, ..., m-2, m} in ascending order.
    For m = 1 this is the binary alphabet {-1, +1}.
    """
    return tuple(range(-m, m + 1, 2))


class CompressionSpec(pydantic.BaseModel):
    """
    Original length v, compressed length d and compression factor m with v = d*m.
    """

    model_config = pydantic.ConfigDict(frozen=True)

    v: int
    d: int
    m: int

    @pydantic.model_validator(mode="after")
    def _check(self) -> Self:
        if self.d < 1 or self.m < 2 or self.v != self.d * self.m:
            raise ValueError(f"Compression needs v = d*m with m >= 2, d >= 1; got v={self.v} d={self.d} m={self.m}")
        return self

    @classmethod
    def from_factor(cls, v: int, m: int) -> Self:
        """
        Compression of length v by factor m.
        """
        if m < 2 or v % m != 0:
            raise NotDivisible(f"Compression factor {m} does not divide {v}")
        return cls(v=v, d=v // m, m=m)


class Content(pydantic.BaseModel):
    """
    Multiset of entries of a (compressed) sequence: value -> count.
    Values must belong to the alphabet of m; length is the total count.
    """

    model_config = pydantic.ConfigDict(frozen=True)

    m: int
    entries: Tuple[Tuple[int, int], ...]

    @pydantic.model_validator(mode="after")
    def _check(self) -> Self:
        allowed = set(alphabet(self.m))
        seen = set()
        for value, count in self.entries:
            if value not in allowed:
                raise ValueError(f"Value {value} is not in the alphabet of m={self.m}")
            if count < 0:
                raise ValueError(f"Negative count for value {value}")
            if value in seen:
                raise ValueError(f"Value {value} listed twice")
            seen.add(value)
        return self

    @classmethod
    def of(cls, m: int, counts: Dict[int, int]) -> Self:
        """
        Build from a value -> count mapping; zero counts are dropped, entries sorted by value.
        """
        entries = tuple(sorted((int(val), int(c)) for val, c in counts.items() if c != 0))
        return cls(m=m, entries=entries)

    @classmethod
    def of_sequence(cls, A: Sequence, m: int) -> Self:
        """
        Content of a sequence over the alphabet of m.
        """
        counts: Dict[int, int] = {}
        for x in A.values:
            counts[x] = counts.get(x, 0) + 1
        return cls.of(m, counts)

    @classmethod
    def from_str(cls, spec: str, m: Optional[int] = None) -> Self:
        """
        Parse comma-separated value:count pairs, e.g. "-2:3,0:6,2:14".
        Without an explicit m, the largest absolute value is used (1 for a 0-free binary spec).
        """
        counts: Dict[int, int] = {}
        try:
            for item in spec.split(","):
                if not item.strip():
                    continue
                val, cnt = item.split(":")
                counts[int(val)] = counts.get(int(val), 0) + int(cnt)
        except ValueError as e:
            raise InputError(f"Content spec must be value:count pairs, got '{spec}'") from e
        if not counts:
            raise InputError("Content spec is empty")
        if m is None:
            m = max(abs(x) for x in counts) or 2
        try:
            return cls.of(m, counts)
        except pydantic.ValidationError as e:
            raise InputError(f"Invalid content '{spec}' for m={m}") from e

    @property
    def length(self) -> int:
        """
        Total count, i.e. the length d of sequences with this content.
        """
        return sum(c for _, c in self.entries)

    @property
    def values(self) -> Tuple[int, ...]:
        """
        Distinct values with nonzero count, ascending.
        """
        return tuple(val for val, c in self.entries if c > 0)

    @property
    def counts(self) -> Tuple[int, ...]:
        """
        Counts aligned with values.
        """
        return tuple(c for _, c in self.entries if c > 0)

    def count(self, value: int) -> int:
        """
        Multiplicity of a value, 0 if absent.
        """
        return dict(self.entries).get(value, 0)

    def total(self) -> int:
        """
        Row sum of every sequence with this content.
        """
        return sum(val * c for val, c in self.entries)

    def square_sum(self) -> int:
        """
        Sum of squares of entries, i.e. PAF(0) of every sequence with this content.
        """
        return sum(val * val * c for val, c in self.entries)

    def __str__(self) -> str:
        return ",".join(f"{val}:{c}" for val, c in self.entries)


def compress(A: Sequence, d: int) -> Sequence:
    """
    The m-compression of A to length d, m = v/d. d = v gives A itself.
    """
    if d < 1 or A.v % d != 0:
        raise NotDivisible(f"Compressed length {d} does not divide {A.v}")
    m = A.v // d
    return Sequence(v=d, values=tuple(sum(A.values[j + r * d] for r in range(m)) for j in range(d)))


def compress_family(sequences: List[Sequence], d: int) -> List[Sequence]:
    """
    Compress every member of a family to length d.
    """
    return [compress(a, d) for a in sequences]


def multiply(A: Sequence, s: int) -> Sequence:
    """
    Multiplication of indices by a unit s: the entry at position i moves to position s*i mod v.
    """
    if gcd(s, A.v) != 1:
        raise ValueError(f"Multiplier {s} is not a unit mod {A.v}")
    out = [0] * A.v
    for i, x in enumerate(A.values):
        out[(s * i) % A.v] = x
    return Sequence(v=A.v, values=tuple(out))


def compressed_constants(alpha0: int, alpha: int, m: int) -> Tuple[int, int]:
    """
    PAF-constants after m-compression: (alpha0 + (m-1) alpha, m alpha).
    PSD-constants do not change.
    """
    return alpha0 + (m - 1) * alpha, m * alpha


def sds_compressed_constants(params: SdsParams, m: int) -> Tuple[int, int]:
    """
    PAF-constants of the m-compressed associated sequences of an SDS:
    (m(tv - 4n) + 4n, m(tv - 4n)).
    """
    if m < 1 or params.v % m != 0:
        raise NotDivisible(f"Compression factor {m} does not divide v={params.v}")
    c = sds_constants(params)
    return compressed_constants(c.alpha0, c.alpha, m)


def compression_multiplicities(params: SdsParams, m: int, d: int) -> Dict[int, int]:
    """
    Number of entries of each absolute value over all compressed sequences of an SDS.
    m=2: {0: n, 2: td-n}; m=3: {1: n, 3: td-n}.
    """
    if m not in (2, 3):
        raise UnsupportedFactor(f"Multiplicity identities are known for m in (2, 3), got {m}")
    if params.v != d * m:
        raise NotDivisible(f"v={params.v} is not {d}*{m}")
    td = params.t * d
    small, large = (0, 2) if m == 2 else (1, 3)
    return {small: params.n, large: td - params.n}


def _side_contents(d: int, m: int, row_sum: int, small_count: int) -> List[Content]:
    """
    All contents of length d over the alphabet of m with given row sum and
    given number of entries of the smaller absolute value (0 for m=2, 1 for m=3).
    """
    result = []
    if m == 2:
        rest = d - small_count
        # p - q = row_sum/2, p + q = rest
        if rest < 0 or row_sum % 2 != 0 or (rest + row_sum // 2) % 2 != 0:
            return result
        p = (rest + row_sum // 2) // 2
        q = rest - p
        if p >= 0 and q >= 0:
            result.append(Content.of(2, {-2: q, 0: small_count, 2: p}))
        return result
    # m == 3: counts of -3, -1, +1, +3
    large_count = d - small_count
    if large_count < 0:
        return result
    for p3 in range(large_count + 1):
        q3 = large_count - p3
        for p1 in range(small_count + 1):
            q1 = small_count - p1
            if 3 * (p3 - q3) + (p1 - q1) == row_sum:
                result.append(Content.of(3, {-3: q3, -1: q1, 1: p1, 3: p3}))
    return result


def case_split(params: SdsParams, m: int = 2, d: Optional[int] = None) -> List[Tuple[Content, Content]]:
    """
    All pairs of contents (A side, B side) that compressed associated sequences of a
    two-block SDS can have. Row sums are v - 2k per side and the total number of
    entries of the smaller absolute value is n.

    Cases are ordered by the B side counts of its most negative value, then of the
    following values, so numbering is stable between runs.
    """
    if params.t != 2:
        raise Unsupported(f"Content case splitting is implemented for two blocks, got t={params.t}")
    if m not in (2, 3):
        raise UnsupportedFactor(f"Content case splitting is implemented for m in (2, 3), got {m}")
    if d is None:
        d = params.v // m
    if params.v != d * m:
        raise NotDivisible(f"v={params.v} is not {d}*{m}")

    r, s = params.ks
    cases = []
    for small_a in range(params.n + 1):
        small_b = params.n - small_a
        if small_a > d or small_b > d:
            continue
        for content_a in _side_contents(d, m, params.v - 2 * r, small_a):
            for content_b in _side_contents(d, m, params.v - 2 * s, small_b):
                cases.append((content_a, content_b))

    def order_key(case: Tuple[Content, Content]) -> Tuple[int, ...]:
        content_a, content_b = case
        return tuple(content_b.count(x) for x in alphabet(m)) + tuple(content_a.count(x) for x in alphabet(m))

    cases.sort(key=order_key)
    logger.info("%s: %d content cases for m=%d, d=%d", params.get_name(), len(cases), m, d)
    return cases
