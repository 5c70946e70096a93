# Copyright SDSLIB CONTRIBUTORS 2024

import numpy as np
import pytest
from pydantic import validate_call

from sdslib.catalog.registry import registry
from sdslib.exception import BlockSizeMismatch, InfeasibleParams, InputError, InverseNotIntegral, OutOfRange
from sdslib.params import (
    ParamsInput,
    SdsParams,
    group_ring_identity_holds,
    paf_to_psd_constants,
    psd_to_paf_constants,
    sds_constants,
    validate_params,
    verify_sds,
)
from sdslib.sequence import Subset, associated_sequence, paf, psd


def test_validate_params():
    """
    Feasibility and derived n.
    """
    assert validate_params(50, [22, 21], 18).n == 25
    assert validate_params(46, [21, 6], 10).n == 17
    assert validate_params(7, [3], 1).n == 2
    with pytest.raises(InfeasibleParams):
        validate_params(46, [21, 6], 11)
    with pytest.raises(OutOfRange):
        validate_params(5, [6], 7)
    with pytest.raises(OutOfRange):
        validate_params(1, [1], 0)
    with pytest.raises(OutOfRange):
        validate_params(7, [], 0)


def test_params_string_form():
    """
    Parsing and printing the (v;k1,...,kt;lambda) notation.
    """
    p = SdsParams.from_str("(46;21,6;10)")
    assert p == validate_params(46, [21, 6], 10)
    assert str(p) == "46;21,6;10"
    assert p.get_name() == "(46;21,6;10)"
    assert p.t == 2
    assert SdsParams.from_str(" 7 ; 3 ; 1 ").ks == (3,)
    with pytest.raises(InputError):
        SdsParams.from_str("46;21,6")
    with pytest.raises(InputError):
        SdsParams.from_str("46;a,6;10")
    with pytest.raises(InfeasibleParams):
        SdsParams.from_str("46;21,6;11")


@validate_call
def converter_func(x: ParamsInput) -> SdsParams:
    """
    Converter for test.
    """
    return x


def test_params_input_converter():
    """
    Strings, tuples and dicts are accepted where SdsParams is expected.
    """
    expected = validate_params(50, [22, 21], 18)
    assert converter_func("50;22,21;18") == expected
    assert converter_func((50, [22, 21], 18)) == expected
    assert converter_func({"v": 50, "ks": [22, 21], "lam": 18}) == expected
    assert converter_func(expected) == expected


def test_sds_constants():
    """
    PAF and PSD constants of the associated sequences.
    """
    c = sds_constants(validate_params(46, [21, 6], 10))
    assert (c.alpha0, c.alpha, c.beta) == (92, 24, 68)
    assert c.beta0 == 92 + 45 * 24
    assert sds_constants(validate_params(50, [22, 21], 18)).alpha == 0
    assert sds_constants(validate_params(41, [15, 6], 6)).beta == 60
    assert sds_constants(validate_params(43, [9, 4], 2)).beta == 44
    zero = sds_constants(validate_params(58, [27, 24], 22))
    assert (zero.alpha0, zero.alpha, zero.beta0, zero.beta) == (116, 0, 116, 116)


def test_constants_match_sequences():
    """
    Summed PAF and PSD of a witness equal the constants.
    """
    for record in registry():
        c = sds_constants(record.params)
        seqs = [associated_sequence(b) for b in record.blocks]
        pafs = [paf(a) for a in seqs]
        psds = [psd(a) for a in seqs]
        v = record.params.v
        assert sum(p[0] for p in pafs) == c.alpha0
        assert all(sum(p[s] for p in pafs) == c.alpha for s in range(1, v))
        assert sum(p[0] for p in psds) == pytest.approx(c.beta0, abs=1e-6)
        assert all(sum(p[s] for p in psds) == pytest.approx(c.beta, abs=1e-6) for s in range(1, v))


def test_paf_psd_constant_conversion():
    """
    Conversion between PAF and PSD constants round-trips on integers.
    """
    assert paf_to_psd_constants(92, 24, 46) == (92 + 45 * 24, 68)
    assert paf_to_psd_constants(10, 10, 7)[1] == 0
    rng = np.random.default_rng(5)
    for _ in range(200):
        v = int(rng.integers(2, 100))
        alpha0, alpha = (int(x) for x in rng.integers(-500, 500, size=2))
        beta0, beta = paf_to_psd_constants(alpha0, alpha, v)
        assert psd_to_paf_constants(beta0, beta, v) == (alpha0, alpha)
    with pytest.raises(InverseNotIntegral):
        psd_to_paf_constants(10, 3, 4)


def test_verify_sds():
    """
    Exact verification of base blocks.
    """
    assert verify_sds(validate_params(7, [3], 1), [Subset.of(7, [1, 2, 4])])
    assert not verify_sds(validate_params(7, [3], 1), [Subset.of(7, [0, 1, 2])])
    first = registry()[0]
    assert verify_sds(first.params, list(first.blocks))
    perturbed = [x if x != 46 else 44 for x in first.blocks[0].elements]
    assert not verify_sds(first.params, [Subset.of(50, perturbed), first.blocks[1]])
    with pytest.raises(BlockSizeMismatch):
        verify_sds(first.params, [first.blocks[1], first.blocks[0]])
    with pytest.raises(BlockSizeMismatch):
        verify_sds(first.params, [first.blocks[0]])


def test_verify_matches_paf_criterion():
    """
    Block families verify iff the summed PAF of the associated sequences is tv - 4n off the origin.
    """
    params = validate_params(13, [4, 4], 2)
    alpha = sds_constants(params).alpha
    rng = np.random.default_rng(3)
    for _ in range(300):
        blocks = [Subset.of(13, rng.choice(13, size=4, replace=False)) for _ in range(2)]
        pafs = [paf(associated_sequence(b)) for b in blocks]
        by_paf = all(pafs[0][s] + pafs[1][s] == alpha for s in range(1, 13))
        assert verify_sds(params, blocks) == by_paf
        assert group_ring_identity_holds(params, blocks) == by_paf
    witness = [Subset.of(13, [0, 1, 3, 9]), Subset.of(13, [0, 1, 3, 9])]
    assert verify_sds(params, witness)
    assert group_ring_identity_holds(params, witness)
