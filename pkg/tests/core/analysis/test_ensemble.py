"""Tests for ensemble sampling and the uniformity check."""

import pytest

from wozencraft_codes.core.analysis.ensemble import ensemble_uniformity, run_ensemble
from wozencraft_codes.core.analysis.search import exact_min_distance
from wozencraft_codes.core.codec import sample_random_alphas
from wozencraft_codes.core.errors import BudgetExceededError
from wozencraft_codes.core.params import CodeParams
from wozencraft_codes.core.sidon import SidonSet


class TestRunEnsemble:
    """Seeded sampling of random members."""

    def test_reproducible(self, code_k10):
        first = run_ensemble(code_k10, 8, seed=1)
        second = run_ensemble(code_k10, 8, seed=1)
        assert first == second
        assert len(first.samples) == 8

    def test_samples_follow_the_alpha_stream(self, code_k10):
        result = run_ensemble(code_k10, 5, seed=42)
        assert [s.alpha for s in result.samples] == sample_random_alphas(code_k10, 5, 42)
        for sample in result.samples:
            assert sample.distance == exact_min_distance(code_k10, sample.alpha).exact_distance

    def test_summary(self, code_k10):
        result = run_ensemble(code_k10, 10, seed=3)
        assert result.alpha_star_distance == exact_min_distance(code_k10).exact_distance
        assert result.gv.relative_distance == pytest.approx(0.1100, abs=1e-4)
        assert 1 <= result.alpha_star_rank <= 11
        assert 0 <= result.meeting_gv <= 10

    def test_progress_callback(self, code_k10):
        seen = []
        run_ensemble(code_k10, 3, seed=0, progress=seen.append)
        assert seen == [1, 2, 3]

    def test_rejects_negative_samples(self, code_k10):
        with pytest.raises(ValueError):
            run_ensemble(code_k10, -1, seed=0)


class TestUniformity:
    """Every nonzero pair lies in exactly one rate-1/2 member."""

    def test_binary(self, code_k10):
        report = ensemble_uniformity(code_k10)
        assert report.ok
        assert report.alphas_checked == 1023

    def test_ternary(self, ternary_code):
        assert ensemble_uniformity(ternary_code).ok

    def test_punctured_file_checks_full_members(self, punctured_k10):
        assert ensemble_uniformity(punctured_k10).ok

    def test_tiny_field(self, tiny_code):
        assert ensemble_uniformity(tiny_code).ok

    def test_zero_divisors_detected(self):
        # 1 + x + ... + x^6 = (1 + x + x^3)(1 + x^2 + x^3) over F_2
        reducible = CodeParams(
            q=2, kprime=7, d=2, sidon=SidonSet(p=2, elements=(1, 2)), alpha_coeffs=(0, 1, 1, 0, 0, 0), kept=6
        )
        report = ensemble_uniformity(reducible)
        assert not report.ok
        assert report.witness is not None
        assert report.alphas_checked <= 11

    def test_limit(self, code_k10):
        with pytest.raises(BudgetExceededError):
            ensemble_uniformity(code_k10, limit=512)
