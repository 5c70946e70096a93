# Copyright SDSLIB CONTRIBUTORS 2024

import json

import pytest

import sdslib.catalog.registry as registry_module
from sdslib.catalog.feasible import OPEN_CASES, complementary_pair_params, feasible_params, is_normalized, record_for
from sdslib.catalog.registry import WitnessRecord, get_witness, registry, witness_labels
from sdslib.catalog.witness_io import WitnessLine, read_witnesses, write_witnesses
from sdslib.enums import ParamStatus, WitnessSource
from sdslib.exception import CorruptRegistry, InputError, OutOfRange
from sdslib.params import SdsParams, validate_params, verify_sds
from sdslib.state import StateManager


def test_feasible_params_count():
    """
    227 feasible parameter sets up to v = 50, sorted by (v, r, s).
    """
    records = feasible_params(50)
    assert len(records) == 227
    keys = [(rec.params.v, rec.params.ks) for rec in records]
    assert keys == sorted(keys)
    assert all(rec.normalized for rec in records)
    assert [str(rec.params) for rec in feasible_params(7)] == ["5;2,2;1", "7;3,3;2"]
    assert len(feasible_params(13)) == 12
    assert len(feasible_params(50, v_min=46)) == len([r for r in records if r.params.v >= 46])
    with pytest.raises(OutOfRange):
        feasible_params(3)


def test_open_cases():
    """
    Every open case is feasible and carries its decided status.
    """
    names = {str(rec.params) for rec in feasible_params(50)}
    assert set(OPEN_CASES) <= names
    assert len(OPEN_CASES) == 15
    assert len(feasible_params(50, status=ParamStatus.NOT_EXISTS)) == 13
    assert [str(r.params) for r in feasible_params(50, status=ParamStatus.EXISTS)] == ["50;22,21;18"]
    assert [str(r.params) for r in feasible_params(50, status=ParamStatus.OPEN)] == ["49;21,4;9"]
    rec = record_for(SdsParams.from_str("46;21,6;10"))
    assert rec.status == ParamStatus.NOT_EXISTS
    assert "2-compression" in rec.provenance
    assert rec.get_name() == "(46;21,6;10)"
    assert record_for(SdsParams.from_str("7;3,3;2")).status == ParamStatus.UNCATALOGUED


def test_is_normalized():
    """
    v/2 >= r >= s >= 2 for two blocks only.
    """
    assert is_normalized(validate_params(50, [22, 21], 18))
    assert not is_normalized(validate_params(50, [21, 22], 18))
    assert not is_normalized(validate_params(7, [3], 1))
    assert not is_normalized(validate_params(7, [4, 4], 4))


def test_complementary_pair_params():
    """
    Parameter sets with v = 2n.
    """
    assert [str(r.params) for r in complementary_pair_params(50)] == ["50;22,21;18", "50;25,20;20"]
    assert [str(r.params) for r in complementary_pair_params(10)] == ["10;4,3;2"]
    assert complementary_pair_params(12) == []
    assert complementary_pair_params(21) == []


def test_registry_contents():
    """
    Eight published witnesses, all verified at load time.
    """
    records = registry()
    assert len(records) == 8
    assert all(rec.verified and rec.source == WitnessSource.PUBLISHED for rec in records)
    assert all(verify_sds(rec.params, list(rec.blocks)) for rec in records)
    assert len(registry(SdsParams.from_str("58;27,24;22"))) == 4
    assert registry(SdsParams.from_str("46;21,6;10")) == []
    assert witness_labels()[0] == "(50;22,21;18)#1"
    assert len(witness_labels("58;")) == 4
    rec = get_witness("(58;27,24;22)#3")
    assert rec is not None
    assert rec.blocks[0].elements[:5] == (0, 1, 2, 3, 5)
    assert get_witness("(58;27,24;22)#9") is None


def test_witness_record_checked():
    """
    verified reflects the blocks, not the caller.
    """
    rec = registry()[0]
    translated = [rec.blocks[0].translate(1), rec.blocks[1]]
    checked = WitnessRecord.checked("x", rec.params, translated, WitnessSource.SEARCH)
    assert checked.verified
    multiplied = [rec.blocks[0], rec.blocks[1].multiply(3)]
    assert not WitnessRecord.checked("y", rec.params, multiplied, WitnessSource.SEARCH).verified


@pytest.mark.parametrize(
    "published",
    [
        [((7, (3,), 1), ((0, 1, 2),))],
        [((7, (3,), 1), ((1, 2, 4, 5),))],
        [((7, (3,), 1), ((1, 1, 2),))],
    ],
)
def test_corrupt_registry(monkeypatch, published):
    """
    A failing or malformed witness stops the registry from loading.
    """
    StateManager.clear(WitnessRecord)
    monkeypatch.setattr(registry_module, "_PUBLISHED", published)
    try:
        with pytest.raises(CorruptRegistry):
            registry()
    finally:
        StateManager.clear(WitnessRecord)


def test_corrupt_registry_caches_nothing(monkeypatch):
    """
    When a later witness fails, the earlier ones are not kept and every call raises.
    """
    good = ((7, (3,), 1), ((1, 2, 4),))
    bad = ((7, (3,), 1), ((0, 1, 2),))
    StateManager.clear(WitnessRecord)
    monkeypatch.setattr(registry_module, "_PUBLISHED", [good, good, bad])
    try:
        with pytest.raises(CorruptRegistry, match="#3"):
            registry()
        assert StateManager.values(WitnessRecord) == []
        with pytest.raises(CorruptRegistry):
            registry()
        with pytest.raises(CorruptRegistry):
            witness_labels()
    finally:
        StateManager.clear(WitnessRecord)


def test_witness_file_round_trip(tmp_path):
    """
    Write the registry, read it back re-verified.
    """
    filename = str(tmp_path / "witnesses.jsonl")
    assert write_witnesses(filename, registry()) == 8
    with open(filename, "r", encoding="utf-8") as f:
        first = json.loads(f.readline())
    assert first["v"] == 50
    assert first["k"] == [22, 21]
    assert first["lambda"] == 18
    assert first["blocks"][0][:4] == [0, 1, 2, 3]
    records = read_witnesses(filename)
    assert [r.label for r in records] == [r.label for r in registry()]
    assert [r.blocks for r in records] == [r.blocks for r in registry()]
    assert all(r.verified and r.source == WitnessSource.SEARCH for r in records)


def test_witness_line_aliases():
    """
    The lambda field is accepted under both names.
    """
    by_alias = WitnessLine.model_validate_json('{"v": 7, "k": [3], "lambda": 1, "blocks": [[1, 2, 4]]}')
    by_name = WitnessLine(v=7, k=[3], lam=1, blocks=[[1, 2, 4]])
    assert by_alias == by_name
    assert '"lambda":1' in by_name.to_json()


def test_read_witnesses_errors(tmp_path):
    """
    Malformed lines raise InputError naming the line; unverified blocks are flagged.
    """
    good = '{"v": 7, "k": [3], "lambda": 1, "blocks": [[1, 2, 4]]}'
    cases = [
        "not json",
        '{"v": 7, "k": [3], "lambda": 2, "blocks": [[1, 2, 4]]}',
        '{"v": 7, "k": [3], "lambda": 1, "blocks": [[1, 2]]}',
        '{"v": 7, "k": [3], "lambda": 1}',
        '{"v": 7, "k": [3], "lambda": 1, "blocks": [[1, 8, 4]]}',
    ]
    for i, bad in enumerate(cases):
        filename = tmp_path / f"bad{i}.jsonl"
        filename.write_text(good + "\n\n" + bad + "\n", encoding="utf-8")
        with pytest.raises(InputError, match=":3:"):
            read_witnesses(str(filename))

    filename = tmp_path / "unverified.jsonl"
    filename.write_text(good + "\n" + '{"v": 7, "k": [3], "lambda": 1, "blocks": [[0, 1, 2]]}\n', encoding="utf-8")
    records = read_witnesses(str(filename))
    assert [r.verified for r in records] == [True, False]
    assert [r.label for r in records] == ["(7;3;1)#1", "(7;3;1)#2"]
    with pytest.raises(FileNotFoundError):
        read_witnesses(str(tmp_path / "missing.jsonl"))
