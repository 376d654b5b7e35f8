import json

import pytest
from hypothesis import given

from helpers import catalog_sample, valid_configs
from kummercover import (
    CatalogError,
    ConfigCombinatorics,
    InvalidConfigurationError,
    ParseError,
    catalog_lookup,
    f_vector,
    parse_config,
    serialize,
    validate,
)
from kummercover.config import pair_count


def rules(cfg):
    return {v.rule for v in validate(cfg).violations}


class TestValidate:
    def test_hesse_conics(self, hesse):
        assert validate(hesse).valid
        assert pair_count(hesse) == 12 + 28 * 9 == 264 == 4 * 66

    def test_generic_conics(self):
        assert validate(ConfigCombinatorics(2, 4, {2: 24})).valid

    def test_full_incidence_point(self):
        cfg = ConfigCombinatorics(1, 4, {4: 1, 2: 3})
        assert "no_common_point" in rules(cfg)
        assert not validate(cfg)

    def test_reports_every_violation(self):
        cfg = ConfigCombinatorics(0, 3, {1: 2, 3: -1})
        assert rules(cfg) == {
            "degree", "curve_count", "multiplicity_range", "no_common_point",
            "nonnegative_counts", "pairwise_identity",
        }

    def test_identity_mismatch_values(self):
        (v,) = validate(ConfigCombinatorics(2, 5, {2: 10})).violations
        assert v.rule == "pairwise_identity"
        assert v.values == {"lhs": 10, "rhs": 40}

    def test_zero_counts_normalized(self):
        a = ConfigCombinatorics(1, 9, {3: 12, 5: 0})
        assert a == ConfigCombinatorics(1, 9, {3: 12})
        assert a.multiplicities == (3,)
        assert hash(a) == hash(ConfigCombinatorics(1, 9, {3: 12}))


class TestFVector:
    def test_hesse(self, hesse):
        fv = f_vector(hesse)
        assert (fv.f0, fv.f1) == (21, 96)

    def test_dual_hesse(self, dual_hesse):
        fv = f_vector(dual_hesse)
        assert (fv.f0, fv.f1) == (12, 36)
        assert 3 * 12 == 36 == 9 * 8 // 2

    def test_empty_map_is_invalid(self):
        cfg = ConfigCombinatorics(1, 5, {})
        assert "pairwise_identity" in rules(cfg)
        with pytest.raises(InvalidConfigurationError):
            f_vector(cfg)

    @given(valid_configs())
    def test_f1_at_least_twice_f0(self, cfg):
        fv = f_vector(cfg)
        assert fv.f1 >= 2 * fv.f0 >= 0


class TestParse:
    def test_hesse_document(self, hesse):
        cfg = parse_config('{"degree":2,"curves":12,"points":{"2":12,"8":9}}')
        assert cfg == hesse.renamed("")

    def test_dual_hesse_document(self):
        cfg = parse_config('{"degree":1,"curves":9,"points":{"3":12}}')
        assert (cfg.degree, cfg.curve_count, dict(cfg.point_counts)) == (1, 9, {3: 12})

    def test_degree_zero_parses_but_fails_validation(self):
        cfg = parse_config('{"degree":0,"curves":4,"points":{"2":0}}')
        assert cfg.degree == 0
        assert "degree" in rules(cfg)

    @pytest.mark.parametrize(
        "doc, where",
        [
            ('{"degree":2,"curves":4,"points":{"2":24,"2":1}}', "$.points"),
            ('{"degree":2,"curves":4,"points":{"2":24,"02":1}}', "$.points['02']"),
            ('{"degree":2,"curves":4,"points":{"2":24.0}}', "$.points['2']"),
            ('{"degree":2,"curves":4,"points":{"2":true}}', "$.points['2']"),
            ('{"degree":"2","curves":4,"points":{}}', "$.degree"),
            ('{"degree":2,"curves":4,"points":{"x":1}}', "$.points['x']"),
            ('{"degree":2,"curves":4,"points":{},"extra":1}', "$.extra"),
            ('{"degree":2,"degree":3,"curves":4,"points":{}}', "$"),
            ('{"degree":2,"points":{}}', "$"),
            ('[1, 2]', "$"),
            ('{"degree":2,', "$ (line 1"),
        ],
    )
    def test_parse_errors(self, doc, where):
        with pytest.raises(ParseError) as info:
            parse_config(doc)
        assert info.value.location.startswith(where)

    def test_big_integers(self):
        tau = 10**6
        doc = json.dumps({"degree": 2, "curves": tau, "points": {"2": 2 * (tau * tau - tau)}})
        assert validate(parse_config(doc)).valid

    @given(valid_configs())
    def test_round_trip(self, cfg):
        assert parse_config(serialize(cfg)) == cfg

    @pytest.mark.parametrize("cfg", catalog_sample(), ids=lambda c: c.name)
    def test_catalog_round_trip(self, cfg):
        assert parse_config(serialize(cfg, indent=2)) == cfg


class TestCatalog:
    def test_entries(self):
        assert catalog_lookup("hesse-conics") == ConfigCombinatorics(2, 12, {2: 12, 8: 9}, "hesse-conics")
        assert catalog_lookup("dual-hesse") == ConfigCombinatorics(1, 9, {3: 12}, "dual-hesse")

    def test_L3(self):
        cfg = catalog_lookup("L(3)")
        assert (cfg.degree, cfg.curve_count, dict(cfg.point_counts)) == (1, 39, {2: 156, 6: 39})

    def test_generic_conics_4(self):
        assert dict(catalog_lookup("generic-conics", 4).point_counts) == {2: 24}

    def test_C_2_9(self):
        cfg = catalog_lookup("C(2,9)")
        assert (cfg.degree, cfg.curve_count, dict(cfg.point_counts)) == (2, 9, {2: 9, 6: 9})

    @pytest.mark.parametrize(
        "key", ["nope", "L(2)", "generic-conics(3)", "C(3,4)", "C(2,10)", "C(2,6)", "L", "L(a)", "dual-hesse(1)"]
    )
    def test_bad_keys(self, key):
        with pytest.raises(CatalogError):
            catalog_lookup(key)

    @pytest.mark.parametrize("cfg", catalog_sample(), ids=lambda c: c.name)
    def test_catalog_entries_valid(self, cfg):
        d, tau = cfg.degree, cfg.curve_count
        assert validate(cfg).valid
        assert sum(r * (r - 1) * t for r, t in cfg.point_counts.items()) == d * d * tau * (tau - 1)

    def test_L_family_valid(self):
        for m in range(3, 201):
            cfg = catalog_lookup("L", m)
            tau = 12 * m + 3
            assert cfg.t(2) + 15 * cfg.t(6) == tau * (tau - 1) // 2
            assert validate(cfg).valid
