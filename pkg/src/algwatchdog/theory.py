"""Closed-form predictors for the watchdog's two error probabilities.

All formulas are evaluated in exact rational arithmetic (integer binomial
sums over powers of two) and returned as Fractions; callers convert to
float at the edge.  The misdetection product is an expected passing-count
estimate clamped to 1, so treat it as an upper estimate rather than an
exact probability.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction


@dataclass(frozen=True)
class TheoryParams:
    n: int
    h: int
    r12: int
    r21: int
    r31: int
    r32: int

    def __post_init__(self):
        # h = 0 (no hash at all) is allowed here: the predictors stay
        # well-defined and the degenerate case exercises the min clamp
        if not (0 <= self.h <= self.n):
            raise ValueError(f"hash width {self.h} outside [0, {self.n}]")
        for name in ("r12", "r21", "r31", "r32"):
            r = getattr(self, name)
            if not (0 <= r <= self.n):
                raise ValueError(f"{name}={r} outside [0, {self.n}]")


@dataclass(frozen=True)
class Prediction:
    gamma_bound: Fraction
    beta: Fraction
    beta_v1: Fraction
    beta_v2: Fraction


def ball_sum(n: int, r: int) -> int:
    return sum(math.comb(n, k) for k in range(r + 1))


def gamma_bound(eps: float) -> Fraction:
    """Per-coverage-event false-detection budget: gamma <= eps."""
    if not (0 <= eps < 1):
        raise ValueError(f"epsilon {eps} outside [0, 1)")
    return Fraction(eps)


def conservative_gamma_bound(eps: float) -> Fraction:
    """Union bound over the two coverage events each watcher relies on (2*eps).

    Each watcher needs both its candidate sets to cover the true words; the
    single-eps statement leans on both events jointly, so we also report the
    explicit two-event union figure.
    """
    return min(Fraction(1), 2 * gamma_bound(eps))


def _pass_factor(n: int, h: int, r: int) -> Fraction:
    # probability a uniformly random word lands in a candidate set of radius r
    return Fraction(ball_sum(n, r), 1 << (h + n))


def misdetection_v1(tp: TheoryParams) -> Fraction:
    """Chance the first watcher lets a corrupted relay output through."""
    expected = (
        _pass_factor(tp.n, tp.h, tp.r12)
        * _pass_factor(tp.n, tp.h, tp.r21)
        * Fraction(ball_sum(tp.n, tp.r31), 1 << tp.h)
    )
    return min(Fraction(1), expected)


def misdetection_v2(tp: TheoryParams) -> Fraction:
    """Second watcher's figure: same product with the other relay-edge radius."""
    expected = (
        _pass_factor(tp.n, tp.h, tp.r12)
        * _pass_factor(tp.n, tp.h, tp.r21)
        * Fraction(ball_sum(tp.n, tp.r32), 1 << tp.h)
    )
    return min(Fraction(1), expected)


def predicted_beta(tp: TheoryParams) -> Fraction:
    """Overall misdetection estimate: the better-placed watcher decides."""
    r = min(tp.r31, tp.r32)
    expected = (
        _pass_factor(tp.n, tp.h, tp.r12)
        * _pass_factor(tp.n, tp.h, tp.r21)
        * Fraction(ball_sum(tp.n, r), 1 << tp.h)
    )
    return min(Fraction(1), expected)


def predicted_beta_no_overhear(n: int, h: int, r31: int, r32: int) -> Fraction:
    """Misdetection when the two sources cannot overhear each other.

    With both source-to-source radii maxed to n the product collapses to
    ball_sum(n, r) / 8^h for r = min of the relay-edge radii.
    """
    tp = TheoryParams(n=n, h=h, r12=n, r21=n, r31=r31, r32=r32)
    r = min(r31, r32)
    return min(Fraction(1), Fraction(ball_sum(tp.n, r), 8**h))


def predict(tp: TheoryParams, eps: float) -> Prediction:
    return Prediction(
        gamma_bound=conservative_gamma_bound(eps),
        beta=predicted_beta(tp),
        beta_v1=misdetection_v1(tp),
        beta_v2=misdetection_v2(tp),
    )
