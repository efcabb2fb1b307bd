"""Quick built-in sanity suites backing the CLI selftest.

These re-derive a few core results through independent code paths: a
shift-XOR-reduce multiplier against the table-based one, field axioms on
random triples, and a Pascal-recurrence binomial CDF against the radius
computation.
"""

from __future__ import annotations

from fractions import Fraction

from .channel import radius_for_epsilon
from .gf2n import FieldElement, canonical_spec, clmul, poly_mod


def slow_mul(a: int, b: int, poly: int) -> int:
    """Reference field multiply: carry-less product, then long-division reduction."""
    return poly_mod(clmul(a, b), poly)


def field_axiom_suite(rng, triples: int = 300) -> None:
    for n in (4, 8):
        spec = canonical_spec(n)
        for _ in range(triples):
            a, b, c = (FieldElement(rng.randrange(spec.order), spec) for _ in range(3))
            assert (a + a).value == 0, "a + a != 0"
            assert (a + b).value == (b + a).value, "addition not commutative"
            assert ((a + b) + c).value == (a + (b + c)).value, "addition not associative"
            assert (a * b).value == (b * a).value, "multiplication not commutative"
            assert ((a * b) * c).value == (a * (b * c)).value, "multiplication not associative"
            assert (a * (b + c)).value == ((a * b) + (a * c)).value, "distributivity fails"


def mul_oracle_suite(rng, pairs: int = 2000) -> None:
    for n in (4, 8, 12):
        spec = canonical_spec(n)
        for _ in range(pairs):
            a, b = rng.randrange(spec.order), rng.randrange(spec.order)
            got = (FieldElement(a, spec) * FieldElement(b, spec)).value
            want = slow_mul(a, b, spec.reduction_poly)
            assert got == want, f"mul mismatch at n={n}: {a}*{b} -> {got} != {want}"


def binomial_cdf_pascal(n: int, r: int, p: float) -> Fraction:
    """Exact binomial CDF via iterative distribution convolution (no math.comb)."""
    pf = Fraction(p)
    dist = [Fraction(1)]
    for _ in range(n):
        nxt = [Fraction(0)] * (len(dist) + 1)
        for k, mass in enumerate(dist):
            nxt[k] += mass * (1 - pf)
            nxt[k + 1] += mass * pf
        dist = nxt
    return sum(dist[: r + 1], start=Fraction(0))


def radius_oracle_suite() -> None:
    for n in (4, 8, 12, 16):
        for p in (0.01, 0.05, 0.1, 0.2):
            for eps in (0.001, 0.01, 0.05):
                got = radius_for_epsilon(n, p, eps).r
                target = 1 - Fraction(eps)
                want = next(r for r in range(n + 1) if binomial_cdf_pascal(n, r, p) >= target)
                assert got == want, f"radius mismatch n={n} p={p} eps={eps}: {got} != {want}"
