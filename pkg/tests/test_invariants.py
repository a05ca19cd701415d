from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

import oracle
from helpers import cfg, valid_configs
from qellip import (
    FiberDatum,
    FiberKind,
    InvalidConfigError,
    SurfaceConfig,
    kodaira_dim_is_one,
    kodaira_value,
    min_chi,
    validate,
)


@pytest.mark.parametrize("g, expected", [(0, 1), (1, 0), (2, 0), (4, -1)])
def test_min_chi_examples(g, expected):
    assert min_chi(g) == expected


def test_min_chi_matches_rational_oracle():
    for g in range(0, 31):
        assert min_chi(g) == oracle.min_chi(g)


def test_min_chi_rejects_negative():
    with pytest.raises(ValueError):
        min_chi(-1)


@given(st.integers(min_value=0, max_value=10_000))
def test_min_chi_period_three(g):
    assert min_chi(g + 3) == min_chi(g) - 1


def rules(config, **kw):
    return [rule for rule, _ in validate(config, **kw).violations]


def test_example_config_valid(ex31):
    report = validate(ex31)
    assert report.valid and report.violations == ()


def test_chi_below_bound_on_rational_base():
    assert rules(cfg(3, 0, 0, 0)) == ["chi-lower-bound"]


def test_tame_with_wrong_residue():
    bad = SurfaceConfig(3, 1, 0, 0, (FiberDatum(FiberKind.TAME, 1),))
    assert rules(bad) == ["tame-residue"]


def test_wild_count_exceeds_torsion():
    assert rules(cfg(2, 0, 1, 0, wild=[1])) == ["wild-count"]


def test_residue_out_of_range_and_bad_p():
    assert "residue-range" in rules(cfg(3, 1, 0, 1, wild=[3]))
    assert "characteristic" in rules(SurfaceConfig(5, 1, 0, 0))
    assert "genus-nonnegative" in rules(SurfaceConfig(3, -1, 0, 0))
    assert "torsion-nonnegative" in rules(SurfaceConfig(3, 1, 0, -1))


def test_strict_flag():
    config = cfg(3, 1, 0, 1, tame=1)
    assert validate(config).valid
    assert rules(config, strict=True) == ["strict-torsion-wild"]
    assert validate(cfg(3, 1, 0, 1, wild=[0]), strict=True).valid


def test_validate_reports_every_violation():
    bad = SurfaceConfig(3, 0, 0, 0, (FiberDatum(FiberKind.TAME, 0), FiberDatum.wild(1)))
    assert sorted(rules(bad)) == ["chi-lower-bound", "tame-residue", "wild-count"]


def test_kodaira_examples(ex31):
    assert kodaira_value(ex31) == Fraction(1, 3)
    assert kodaira_dim_is_one(ex31)
    assert not kodaira_dim_is_one(cfg(3, 1, 0, 0))
    assert kodaira_value(cfg(3, 0, 1, 0, tame=1)) == Fraction(-1, 3)
    assert not kodaira_dim_is_one(cfg(3, 0, 1, 0, tame=1))


def test_kodaira_requires_valid_config():
    with pytest.raises(InvalidConfigError) as info:
        kodaira_dim_is_one(cfg(3, 0, 0, 0))
    assert info.value.violations[0][0] == "chi-lower-bound"


@given(valid_configs())
def test_scaled_kodaira_is_integer(config):
    assert validate(config).valid
    scaled = config.p * (2 * config.g - 2 + config.chi + config.t) + sum(config.residues)
    assert scaled == kodaira_value(config) * config.p
    assert kodaira_dim_is_one(config) == (scaled >= 1)


@given(valid_configs())
def test_validate_is_pure(config):
    assert validate(config) == validate(config)


@given(valid_configs())
def test_appending_tame_keeps_validity_and_kappa(config):
    grown = config.with_fiber(FiberDatum.tame(config.p))
    assert validate(grown).valid
    if kodaira_dim_is_one(config):
        assert kodaira_dim_is_one(grown)


def test_dict_round_trip(ex31):
    assert SurfaceConfig.from_dict(ex31.to_dict()) == ex31


@pytest.mark.parametrize(
    "data, message",
    [
        ({"p": 3, "g": 0, "chi": 1, "t": 0, "fibers": [], "lambda": 2}, "unknown config field"),
        ({"p": 3, "g": 0, "chi": 1, "fibers": []}, "missing config field"),
        ({"p": 3, "g": 0, "chi": 1, "t": 0, "fibers": [{"kind": "tame", "a": 2, "m": 3}]}, "unknown field"),
        ({"p": 3, "g": 0, "chi": 1, "t": 0, "fibers": [{"kind": "weird", "a": 2}]}, "must be 'tame' or 'wild'"),
        ({"p": 3, "g": "0", "chi": 1, "t": 0, "fibers": []}, "must be an integer"),
    ],
)
def test_from_dict_rejects(data, message):
    with pytest.raises(ValueError, match=message):
        SurfaceConfig.from_dict(data)
