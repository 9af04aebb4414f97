import json

import pytest

from contramean import (
    ALL_PROPERTIES,
    CampaignConfig,
    PropertyId,
    fuzz_campaign,
    render_csv,
    render_json,
    run_property_trial,
    summarize,
    write_report,
)
from contramean.campaign import CSV_COLUMNS


def small_config(**overrides):
    base = dict(dims=(1, 3), trials=4, seed=7, tol=1e-9)
    base.update(overrides)
    return CampaignConfig(**base)


class TestConfigValidation:
    def test_defaults_valid(self):
        CampaignConfig()

    @pytest.mark.parametrize(
        "kwargs",
        [
            {"dims": (0, 4)},
            {"dims": (4, 2)},
            {"dims": (1, 20)},
            {"trials": -1},
            {"tol": 0.0},
            {"nu_range": (0.0, 0.5)},
            {"nu_range": (0.4, 1.0)},
            {"cond_cap": 0.1},
            {"properties": ()},
            {"seed": -1},
        ],
    )
    def test_rejects_bad_values(self, kwargs):
        with pytest.raises(ValueError):
            small_config(**kwargs)


class TestCampaign:
    def test_empty_campaign(self):
        reports, summary = fuzz_campaign(small_config(trials=0))
        assert reports == []
        assert summary["total"] == {"trials": 0, "failures": 0}
        assert summary["passed"] is True
        for stats in summary["properties"].values():
            assert stats == {"trials": 0, "failures": 0, "min_margin": None}

    def test_small_campaign_passes(self):
        reports, summary = fuzz_campaign(small_config())
        assert summary["passed"], summary
        assert len(reports) == 3 * len(ALL_PROPERTIES) * 4
        for report in reports:
            assert report.passed == (report.margin >= -1e-9)

    def test_deterministic_replay(self):
        first = render_csv(fuzz_campaign(small_config())[0])
        second = render_csv(fuzz_campaign(small_config())[0])
        assert first == second

    def test_subset_replays_full_campaign_rows(self):
        full, _ = fuzz_campaign(small_config())
        subset, _ = fuzz_campaign(small_config(properties=(PropertyId.SYMMETRY,)))
        full_symmetry = [r for r in full if r.property is PropertyId.SYMMETRY]
        assert render_csv(subset) == render_csv(full_symmetry)

    def test_parameter_fields_recorded(self):
        config = small_config(dims=(2, 2), trials=2)
        reports, _ = fuzz_campaign(config)
        by_prop = {}
        for r in reports:
            by_prop.setdefault(r.property, []).append(r)
        for prop, rows in by_prop.items():
            for r in rows:
                assert 0.05 <= r.nu <= 0.95
                if prop in (PropertyId.CONVEXITY_MIX, PropertyId.MIXED_MEAN):
                    assert r.mu is not None
                else:
                    assert r.mu is None
                if prop is PropertyId.LAMBDA_FAMILY:
                    assert r.lam is not None and 0.0 <= r.lam <= 1.0
                else:
                    assert r.lam is None

    def test_single_trial_reproducible(self):
        config = small_config()
        a = run_property_trial(PropertyId.CONTRACTION, 3, 1, config)
        b = run_property_trial(PropertyId.CONTRACTION, 3, 1, config)
        assert a == b


class TestRendering:
    def test_csv_columns_and_shape(self):
        config = small_config(dims=(1, 1), trials=2)
        reports, _ = fuzz_campaign(config)
        text = render_csv(reports)
        lines = text.strip().split("\n")
        assert lines[0] == ",".join(CSV_COLUMNS)
        assert len(lines) == 1 + len(reports)
        first = lines[1].split(",")
        assert len(first) == len(CSV_COLUMNS)
        assert first[0] == "0" and first[1] == "1"
        assert first[-1] in ("true", "false")

    def test_csv_empty_fields_for_unused_parameters(self):
        config = small_config(dims=(1, 1), trials=1,
                              properties=(PropertyId.SYMMETRY,))
        reports, _ = fuzz_campaign(config)
        row = render_csv(reports).strip().split("\n")[1].split(",")
        mu_field = row[CSV_COLUMNS.index("mu")]
        lam_field = row[CSV_COLUMNS.index("lambda")]
        assert mu_field == "" and lam_field == ""

    def test_csv_roundtrip_margin(self):
        config = small_config(dims=(2, 2), trials=1,
                              properties=(PropertyId.BOUNDS_REMARK,))
        reports, _ = fuzz_campaign(config)
        row = render_csv(reports).strip().split("\n")[1].split(",")
        assert float(row[CSV_COLUMNS.index("margin")]) == reports[0].margin

    def test_json_mirrors_csv_records(self):
        config = small_config(dims=(1, 2), trials=2)
        reports, summary = fuzz_campaign(config)
        payload = json.loads(render_json(reports, summary))
        assert set(payload) == {"reports", "summary"}
        assert len(payload["reports"]) == len(reports)
        record = payload["reports"][0]
        assert set(record) == {"trial", "dim", "property", "nu", "mu",
                               "lambda", "margin", "pass"}
        assert payload["summary"]["total"]["trials"] == len(reports)

    def test_write_report_formats(self, tmp_path):
        reports, summary = fuzz_campaign(small_config(dims=(1, 1), trials=1))
        csv_path = write_report(reports, summary, tmp_path / "out.csv", "csv")
        json_path = write_report(reports, summary, tmp_path / "out.json", "json")
        assert csv_path.read_text().startswith(",".join(CSV_COLUMNS))
        assert json.loads(json_path.read_text())["summary"]["passed"] is True
        with pytest.raises(ValueError):
            write_report(reports, summary, tmp_path / "out.xml", "xml")

    def test_summary_counts(self):
        reports, summary = fuzz_campaign(small_config(dims=(1, 2), trials=3))
        recount = summarize(reports, small_config(dims=(1, 2), trials=3))
        assert summary == recount
        for name, stats in summary["properties"].items():
            assert stats["trials"] == 2 * 3
            assert stats["min_margin"] is not None
