import pytest

import spechtkit as sk


def test_partition_basics():
    assert sk.parse("3,1,1") == [3, 1, 1]
    assert sk.parse("-") == []
    assert sk.conjugate([6, 4, 1]) == [3, 2, 2, 2, 1, 1]
    assert sk.dominates([3, 1], [2, 2])
    assert sk.specht_dimension([3, 1, 1, 1, 1, 1]) == 21
    assert sk.mullineux([3], 3) == [2, 1]


def test_abacus():
    assert sk.abacus_positions([3, 1, 1], 3, 6) == [8, 5, 4, 2, 1, 0]
    assert sk.p_core([3, 1, 1, 1, 1, 1], 3) == [3, 1, 1]
    assert sk.p_weight([3, 2, 2, 2, 1, 1], 3) == 2
    assert sk.p_quotient([6, 1, 1], 3) == [[], [], [1]]
    assert sk.is_rouquier([3, 1, 1], 2, 3)
    assert not sk.is_rouquier([3, 1, 1], 3, 3)
    assert sk.block_members([3, 1, 1], 1, 3) == [[6, 1, 1], [3, 3, 2], [3, 1, 1, 1, 1, 1]]


def test_ladders_and_lr():
    assert sk.regularize([1, 1, 1, 1], 3) == [2, 2]
    assert sk.ladder_numbers([4], 3) == [1, 0, 1, 0, 1, 0, 1]
    assert sk.lr_coefficient([3, 2, 1], [2, 1], [2, 1]) == 2


def test_classification():
    assert sk.classify_rouquier_block([3, 1, 1], 1, 3) == [[6, 1, 1], [3, 1, 1, 1, 1, 1]]
    v = sk.irreducible_specht([6, 1, 1], 3)
    assert v["irreducible"] and v["method"] == "rouquier-criterion"
    assert not sk.irreducible_specht([2, 1], 3)["irreducible"]


def test_pipeline_and_verify():
    f = sk.pipeline([3, 2, 2, 2, 1, 1], 3)
    assert [e["partition"] for e in f["entries"]] == ["3,2,2,2,1,1", "3,1,1,1,1,1,1,1,1"]
    r = sk.verify([3, 1, 1, 1, 1, 1], 3)
    assert r["status"] == "verified"
    assert r["certificate"]["p_beta"] == "3"
    assert sk.verify([3, 1, 1, 1, 1, 1], 3) == r


def test_errors():
    with pytest.raises(sk.ShapeError):
        sk.conjugate([2, 3])
    with pytest.raises(sk.DomainError):
        sk.mullineux([1, 1, 1], 3)
    with pytest.raises(sk.DomainError):
        sk.verify([2, 1], 3)
    with pytest.raises(sk.ConfigError):
        sk.is_rouquier([2, 1], 1, 3)
    assert issubclass(sk.Inconclusive, sk.SpechtkitError)
