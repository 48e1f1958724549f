"""Tests for the verification suite and its corpora."""

import pytest

from wozencraft_codes.core.analysis.models import CheckResult, SuiteReport
from wozencraft_codes.core.analysis.suite import VerificationSuite, weight_relation_corpus

EXPECTED_CHECKS = [
    "params",
    "sidon.construction",
    "sidon.size",
    "sidon.modular",
    "sidon.integer",
    "irreducible",
    "weight_relation",
    "claims.rate_half",
    "claims.punctured",
    "window_lemma",
    "lindstrom",
    "codec.linearity",
    "codec.generator_matrix",
    "codec.systematic",
    "codec.alpha_one",
    "codec.rank",
    "distance.certificate",
    "distance.exact",
    "distance.consistency",
    "puncturing.monotone",
]


class TestWeightRelationCorpus:
    @pytest.mark.parametrize("q,kprime", [(2, 3), (2, 5), (2, 11), (2, 13), (3, 5), (3, 7)])
    def test_exhaustive(self, q, kprime):
        examined, violations = weight_relation_corpus(q, kprime, samples=0, seed=0)
        assert examined == q**kprime
        assert violations == []

    def test_sampled(self):
        examined, violations = weight_relation_corpus(2, 29, samples=2000, seed=5, truncations=[1, 14, 28])
        assert examined == 2000
        assert violations == []


class TestVerificationSuite:
    def test_rate_half_code_passes(self, code_k10):
        report = VerificationSuite(code_k10, trials=200, seed=1, lemma_samples=500).run()
        assert [c.name for c in report.checks] == EXPECTED_CHECKS
        assert report.passed, report.failures
        assert not any(c.flagged for c in report.checks)

    def test_punctured_code_passes(self, punctured_k10):
        report = VerificationSuite(punctured_k10, trials=100, seed=2, lemma_samples=500).run()
        assert report.passed, report.failures
        certificate = next(c for c in report.checks if c.name == "distance.certificate")
        assert "vacuous" in certificate.detail

    def test_ternary_code_passes(self, ternary_code):
        report = VerificationSuite(ternary_code, trials=100, seed=3, ensemble_check=True).run()
        assert report.passed, report.failures
        assert report.checks[-1].name == "ensemble.uniformity"

    def test_exact_search_skipped_above_limit(self, code_k10):
        report = VerificationSuite(code_k10, trials=20, exact_limit=100).run()
        exact = next(c for c in report.checks if c.name == "distance.exact")
        assert exact.passed
        assert exact.detail.startswith("skipped")
        assert "distance.consistency" not in [c.name for c in report.checks]

    def test_on_check_callback(self, code_k10):
        seen = []
        VerificationSuite(code_k10, trials=10, exact_limit=100).run(on_check=seen.append)
        assert seen and all(isinstance(c, CheckResult) for c in seen)

    def test_failures_are_reported(self, code_k10):
        broken = code_k10.with_alpha((1,) + (0,) * 9)
        report = VerificationSuite(broken, trials=20).run()
        assert not report.passed
        names = {c.name for c in report.failures}
        assert "distance.certificate" in names
        assert "distance.exact" in names


class TestSuiteReport:
    def test_flagged_results_do_not_fail(self):
        report = SuiteReport()
        report.add(CheckResult("a", True))
        report.add(CheckResult("b", False, "recorded", flagged=True))
        assert report.passed
        assert report.failures == []
        report.add(CheckResult("c", False))
        assert not report.passed
        assert [c.name for c in report.failures] == ["c"]
