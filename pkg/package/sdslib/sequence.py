# Copyright SDSLIB CONTRIBUTORS 2024

"""
Residue-indexed integer sequences and subsets of Z_v, together with the
periodic autocorrelation (PAF), discrete Fourier transform (DFT) and
power spectral density (PSD) transforms.

All index arithmetic is modulo v with representatives in [0, v-1].
PAF values are exact integers; DFT and PSD values are double precision.
"""

from functools import lru_cache
from math import gcd
from typing import Any, Iterable, List, Optional, Tuple

try:
    from typing import Self
except ImportError:  # Python < 3.11
    from typing_extensions import Self

import numpy as np
import pydantic

from sdslib.exception import OutOfRange


class Sequence(pydantic.BaseModel):
    """
    Integer-valued periodic sequence of length v.
    values[i] is the coefficient of x^i in the group ring of Z_v.
    """

    model_config = pydantic.ConfigDict(frozen=True)

    v: int
    values: Tuple[int, ...]

    @pydantic.model_validator(mode="after")
    def _check_length(self) -> Self:
        if self.v < 1:
            raise ValueError(f"Sequence length must be positive, got {self.v}")
        if len(self.values) != self.v:
            raise ValueError(f"Sequence of length {self.v} given {len(self.values)} values")
        return self

    @classmethod
    def of(cls, values: Iterable[int]) -> Self:
        """
        Build a sequence from any iterable of integers, taking v from its length.
        """
        vals = tuple(int(x) for x in values)
        return cls(v=len(vals), values=vals)

    def __getitem__(self, i: int) -> int:
        return self.values[i % self.v]

    def __len__(self) -> int:
        return self.v

    def __str__(self) -> str:
        return "[" + ",".join(str(x) for x in self.values) + "]"

    def row_sum(self) -> int:
        """
        Sum of all entries, i.e. A(1).
        """
        return sum(self.values)

    def is_binary(self) -> bool:
        """
        True if all entries are +1 or -1.
        """
        return all(x in (-1, 1) for x in self.values)

    def in_alphabet(self, m: int) -> bool:
        """
        True if every entry belongs to {m, m-2, ..., 2-m, -m}.
        """
        return all(abs(x) <= m and (x - m) % 2 == 0 for x in self.values)

    def to_numpy(self) -> np.ndarray:
        """
        Values as an int64 numpy array.
        """
        return np.asarray(self.values, dtype=np.int64)


class Subset(pydantic.BaseModel):
    """
    Subset of Z_v stored as a strictly increasing tuple of residues - an SDS base block.
    """

    model_config = pydantic.ConfigDict(frozen=True)

    v: int
    elements: Tuple[int, ...]

    @pydantic.model_validator(mode="after")
    def _check_elements(self) -> Self:
        if self.v < 1:
            raise ValueError(f"Modulus must be positive, got {self.v}")
        prev = -1
        for x in self.elements:
            if x <= prev or x >= self.v:
                raise ValueError(f"Subset elements must be strictly increasing residues mod {self.v}: {self.elements}")
            prev = x
        return self

    @classmethod
    def of(cls, v: int, elements: Iterable[int]) -> Self:
        """
        Build a subset from arbitrary integers, reducing mod v and sorting.
        Duplicates after reduction are an error.
        """
        given = [int(x) for x in elements]
        reduced = [x % v for x in given]
        if len(set(reduced)) != len(reduced):
            raise OutOfRange(f"Repeated residues mod {v} in {given}")
        return cls(v=v, elements=tuple(sorted(reduced)))

    @property
    def k(self) -> int:
        """
        Block size.
        """
        return len(self.elements)

    def __contains__(self, x: int) -> bool:
        return (x % self.v) in self.elements

    def __str__(self) -> str:
        return "{" + ",".join(str(x) for x in self.elements) + "}"

    def translate(self, t: int) -> Self:
        """
        The subset X + t.
        """
        return Subset.of(self.v, (x + t for x in self.elements))

    def multiply(self, s: int) -> Self:
        """
        The subset s*X for a unit s.
        """
        if gcd(s, self.v) != 1:
            raise ValueError(f"Multiplier {s} is not a unit mod {self.v}")
        return Subset.of(self.v, (x * s for x in self.elements))


class PafVector(pydantic.BaseModel):
    """
    Periodic autocorrelation (or norm N_X) values, index s is the shift.
    """

    model_config = pydantic.ConfigDict(frozen=True)

    v: int
    values: Tuple[int, ...]

    def __getitem__(self, s: int) -> int:
        return self.values[s % self.v]


class SpectrumVector(pydantic.BaseModel):
    """
    Power spectral density values, index s is the frequency.
    """

    model_config = pydantic.ConfigDict(frozen=True)

    v: int
    values: Tuple[float, ...]

    def __getitem__(self, s: int) -> float:
        return self.values[s % self.v]

    def max_nonzero(self) -> float:
        """
        Largest PSD value over the nonzero frequencies, 0 if v == 1.
        """
        return max(self.values[1:], default=0.0)


@lru_cache(maxsize=256)
def _roots_matrix(v: int) -> np.ndarray:
    """
    Matrix of omega^(j*s) with omega = exp(2 pi i / v).
    """
    js = np.outer(np.arange(v), np.arange(v)) % v
    return np.exp(2j * np.pi * js / v)


def paf_values(values: Any) -> List[int]:
    """
    Exact periodic autocorrelation of an integer vector:
    result[s] = sum_j a[(j+s) mod v] * a[j]
    """
    arr = np.asarray(values, dtype=np.int64)
    return [int(np.dot(np.roll(arr, -s), arr)) for s in range(arr.shape[0])]


def paf(A: Sequence) -> PafVector:
    """
    Periodic autocorrelation function of a sequence, computed exactly.
    """
    return PafVector(v=A.v, values=tuple(paf_values(A.values)))


def dft(values: Any) -> np.ndarray:
    """
    Discrete Fourier transform DFT(s) = sum_j a_j omega^(j*s), omega = exp(2 pi i / v),
    evaluated directly from precomputed roots of unity.
    """
    arr = np.asarray(values, dtype=np.complex128)
    return _roots_matrix(arr.shape[0]) @ arr


def dft_real(values: Any) -> np.ndarray:
    """
    Real part of the DFT - the whole DFT for a symmetric real input such as a PAF.
    """
    return dft(values).real


def psd_values(values: Any) -> np.ndarray:
    """
    Power spectral density |DFT(s)|^2 as a float array.
    """
    return np.abs(dft(values)) ** 2


def psd(A: Sequence) -> SpectrumVector:
    """
    Power spectral density of a sequence.
    """
    return SpectrumVector(v=A.v, values=tuple(float(x) for x in psd_values(A.values)))


def psd_batch(words: np.ndarray) -> np.ndarray:
    """
    PSD of every row of a 2D integer array, through the FFT.
    The sign convention of the FFT does not affect |DFT|^2.
    """
    spectrum = np.fft.fft(np.asarray(words, dtype=np.float64), axis=1)
    return spectrum.real**2 + spectrum.imag**2


def paf_batch(words: np.ndarray) -> np.ndarray:
    """
    Exact PAF of every row of a 2D integer array, shape (rows, v).
    """
    arr = np.asarray(words, dtype=np.int64)
    v = arr.shape[1]
    out = np.empty(arr.shape, dtype=np.int64)
    for s in range(v):
        out[:, s] = np.einsum("ij,ij->i", np.roll(arr, -s, axis=1), arr)
    return out


def subset_norm(X: Subset) -> PafVector:
    """
    N_X(s) = number of ordered pairs (a, b) in X x X with a - b = s mod v.
    """
    counts = [0] * X.v
    for a in X.elements:
        for b in X.elements:
            counts[(a - b) % X.v] += 1
    return PafVector(v=X.v, values=tuple(counts))


def associated_sequence(X: Subset) -> Sequence:
    """
    The +-1 sequence with -1 exactly at the elements of X, i.e. A(x) = T(x) - 2X(x).
    """
    members = set(X.elements)
    return Sequence(v=X.v, values=tuple(-1 if i in members else 1 for i in range(X.v)))


def block_of(A: Sequence) -> Subset:
    """
    Inverse of associated_sequence: the positions of -1 entries of a binary sequence.
    """
    if not A.is_binary():
        raise OutOfRange(f"Sequence is not a +-1 sequence: {A}")
    return Subset(v=A.v, elements=tuple(i for i, x in enumerate(A.values) if x == -1))


def is_complementary(sequences: List[Sequence]) -> Optional[Tuple[int, int]]:
    """
    If the PAFs of the sequences sum to a constant at all nonzero shifts,
    return the PAF-constants (alpha0, alpha), otherwise None.
    """
    if not sequences:
        return None
    v = sequences[0].v
    if any(a.v != v for a in sequences):
        raise OutOfRange("Complementary family members must share the same length")
    total = np.sum([paf_values(a.values) for a in sequences], axis=0)
    if v > 1 and np.any(total[1:] != total[1]):
        return None
    alpha = int(total[1]) if v > 1 else 0
    return int(total[0]), alpha
