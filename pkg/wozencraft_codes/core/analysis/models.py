"""Data models for the verification engine."""
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional, Tuple


@dataclass(frozen=True)
class JProfile:
    """How many window positions j see exactly m support points in (j - A) mod k'."""
    w: int
    counts: Dict[int, int]
    window: int
    support: Tuple[int, ...] = ()

    def size(self, m: int) -> int:
        return self.counts.get(m, 0)

    @property
    def pair_sum(self) -> int:
        """Sum over m >= 2 of C(m, 2) * |J_m|."""
        return sum(m * (m - 1) // 2 * c for m, c in self.counts.items() if m >= 2)


@dataclass(frozen=True)
class ClaimCheck:
    name: str
    observed: float
    bound: float
    holds: bool
    # "lower" means observed >= bound is required, "upper" means observed <= bound
    direction: str = "lower"

    @property
    def slack(self) -> float:
        return self.observed - self.bound if self.direction == "lower" else self.bound - self.observed


@dataclass(frozen=True)
class ClaimReport:
    mode: str
    support: Tuple[int, ...]
    checks: Tuple[ClaimCheck, ...]

    @property
    def passed(self) -> bool:
        return all(c.holds for c in self.checks)

    @property
    def violations(self) -> List[ClaimCheck]:
        return [c for c in self.checks if not c.holds]


@dataclass(frozen=True)
class Certificate:
    """Outcome of enumerating every ring element of weight 1..c-1."""
    c: int
    mode: str
    window: int
    passed: bool
    examined: int
    witness: Optional[Tuple[int, ...]] = None
    witness_product_weight: Optional[int] = None


@dataclass(frozen=True)
class DistanceReport:
    q: int
    k: int
    n: int
    search_space: int
    exact_distance: Optional[int] = None
    witness: Optional[Tuple[int, ...]] = None
    witness_code: Optional[int] = None
    certified_lower_bound: Optional[int] = None
    certified_method: Optional[str] = None
    disproved_threshold: Optional[int] = None
    histogram: Optional[Dict[int, int]] = None
    elapsed: float = field(default=0.0, compare=False)

    @property
    def consistent(self) -> bool:
        if self.certified_lower_bound is None or self.exact_distance is None:
            return True
        return self.certified_lower_bound <= self.exact_distance

    @property
    def disproved(self) -> bool:
        return self.disproved_threshold is not None


@dataclass(frozen=True)
class TheoreticalBounds:
    k: int
    d: int
    kept: int
    rate: Fraction
    restriction_sidon: float
    restriction_window: float
    guarantee: int
    asymptotic_factor: float
    bertrand_holds: bool

    @property
    def vacuous(self) -> bool:
        return self.guarantee <= 0


@dataclass(frozen=True)
class GVReport:
    q: int
    n: int
    rate: float
    target_entropy: float
    relative_distance: float

    @property
    def absolute_distance(self) -> float:
        return self.relative_distance * self.n


@dataclass(frozen=True)
class EnsembleSample:
    index: int
    alpha: Tuple[int, ...]
    distance: int


@dataclass(frozen=True)
class EnsembleResult:
    seed: int
    alpha_star_distance: int
    samples: Tuple[EnsembleSample, ...]
    gv: GVReport

    @property
    def distances(self) -> List[int]:
        return [s.distance for s in self.samples]

    @property
    def meeting_gv(self) -> int:
        return sum(1 for d in self.distances if d >= self.gv.absolute_distance)

    @property
    def alpha_star_rank(self) -> int:
        """Number of samples strictly better than alpha*, plus one."""
        return 1 + sum(1 for d in self.distances if d > self.alpha_star_distance)


@dataclass(frozen=True)
class UniformityReport:
    q: int
    kprime: int
    alphas_checked: int
    ok: bool
    witness: Optional[Tuple[int, ...]] = None


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str = ""
    # set when a failure is recorded for analysis rather than treated as fatal
    flagged: bool = False


@dataclass
class SuiteReport:
    checks: List[CheckResult] = field(default_factory=list)

    def add(self, result: CheckResult) -> None:
        self.checks.append(result)

    @property
    def passed(self) -> bool:
        return all(c.passed or c.flagged for c in self.checks)

    @property
    def failures(self) -> List[CheckResult]:
        return [c for c in self.checks if not c.passed and not c.flagged]
