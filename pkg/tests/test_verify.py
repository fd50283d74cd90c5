import pytest

from lapfam import Check, VerifyReport, run_verify

EXPECTED_AT_SMALL_RANGE = [
    "order-formula",
    "distance-law",
    "diameter-radius",
    "extended-diameter",
    "star-case",
    "construction-agreement",
    "step-recursion",
    "step-needs-join",
    "eigenpairs",
    "spectrum-gap",
    "realizability-chain",
    "rayleigh-identities",
    "worked-example",
    "kernel-support",
    "outer-resolving",
    "dimension-search",
    "outer-non-monotone",
    "large-alphabet-spectra",
]


class TestRunVerify:
    def test_small_range_passes(self):
        report = run_verify(cmax=2, dmax=2)
        assert report.ok
        assert [c.name for c in report.checks] == EXPECTED_AT_SMALL_RANGE
        assert all(c.status in ("pass", "info") for c in report.checks)
        assert all(c.elapsed >= 0 for c in report.checks)
        assert all(c.details for c in report.checks)

    def test_wide_alphabet_adds_shortcut_probe(self):
        report = run_verify(cmax=2, dmax=4)
        assert report.ok
        names = [c.name for c in report.checks]
        assert "resolver-shortcut" in names
        shortcut = next(c for c in report.checks if c.name == "resolver-shortcut")
        assert shortcut.status == "info"

    def test_rejects_empty_ranges(self):
        with pytest.raises(ValueError):
            run_verify(cmax=0)
        with pytest.raises(ValueError):
            run_verify(dmax=0)


class TestVerifyReport:
    def test_failure_flips_ok(self):
        report = VerifyReport(
            (
                Check("good", "pass", "fine", 0.0),
                Check("bad", "fail", "broken", 0.0),
            )
        )
        assert not report.ok
        assert "FAILURES PRESENT" in report.render()
        assert "FAIL" in report.render()

    def test_info_does_not_flip_ok(self):
        report = VerifyReport((Check("note", "info", "observed", 0.0),))
        assert report.ok
        assert "all checks passed" in report.render()

    def test_render_lists_every_check(self):
        report = run_verify(cmax=1, dmax=1)
        text = report.render()
        for check in report.checks:
            assert check.name in text
        assert "PASS" in text
