from __future__ import annotations

import json

import pytest

from xcluster.dtcheck import (
    Report,
    conjecture_scan,
    displayed_fold_matrix,
    simple_generators,
    verify_dt,
    verify_fold_theorem,
    verify_weyl_scatter,
)
from xcluster.looijenga import SHIPPED_MODELS


def checks(report: Report) -> dict:
    return {c.name: c for c in report.checks}


class TestReport:
    def test_auto_compare(self):
        report = Report("demo", "D4")
        report.add("same", 1, 1)
        assert report.passed
        report.add("different", 1, 2)
        assert not report.passed
        assert [c.name for c in report.failures()] == ["different"]

    def test_notes_do_not_fail(self):
        report = Report("demo", "D4")
        report.note("info", (1, 2))
        assert report.passed

    def test_json(self):
        report = Report("demo", "D4")
        report.add("tuple", ((1, 2),), ((1, 2),))
        with report.timed("step"):
            pass
        data = json.loads(report.dumps())
        assert data["checks"][0]["computed"] == [[1, 2]]
        assert "step" in data["timings"]


class TestVerifyDT:
    @pytest.mark.parametrize("name", SHIPPED_MODELS)
    def test_shipped_models_pass(self, name):
        report = verify_dt(name)
        assert report.passed, report.to_text()

    def test_d4_block(self):
        found = checks(verify_dt("D4"))
        assert found["M_4 = -P((1 2)(3 4))"].passed
        assert found["W_n alone reaches C^-"].computed is True

    def test_d5_needs_suffix(self):
        found = checks(verify_dt("D5"))
        assert found["W_n alone reaches C^-"].computed is False

    def test_e6_variants(self):
        found = checks(verify_dt("E6"))
        assert found["word of w alone reaches C^-"].computed is False
        assert found["long word minus final [1,2] is the word of w"].passed


class TestWeylScatter:
    def test_a1(self):
        report = verify_weyl_scatter("A1", k=3, trials=10)
        assert report.passed, report.to_text()
        assert checks(report)["delta C+ is the chamber of [1,3,2,1]"].passed

    def test_generators(self):
        labels = [label for label, _ in simple_generators("D4")]
        assert labels == ["E1-E2", "E3-E4", "E5-E6", "l-E1-E3-E5"]


class TestFoldTheorem:
    def test_displayed_matrices(self):
        assert displayed_fold_matrix("D6") == ((0, -2, 2), (2, 0, -2), (-4, 4, 0))
        assert displayed_fold_matrix("E8") == ((0, -2, 2), (3, 0, -3), (-5, 5, 0))

    @pytest.mark.parametrize("name", ["D4", "E6"])
    def test_shallow(self, name):
        report = verify_fold_theorem(name, depth=4)
        assert report.passed, report.to_text()


class TestScan:
    def test_m2(self):
        report = conjecture_scan(2, 6)
        found = checks(report)
        assert all(c.passed is None for c in report.checks)
        assert found["(iii) chambers shared between subfans"].computed == 0
        assert found["(iii) folded rays shared between subfans"].computed == 0
        assert found["(i) base subfan chambers all in region"].computed is True
        assert found["(ii) C+ of s_[1] violates region"].computed is True

    def test_m_too_small(self):
        with pytest.raises(ValueError):
            conjecture_scan(1, 2)
