"""Closed-form misdetection predictions across hash width and radii.

All predictor functions return exact rationals; floats appear only when
printing.  Two things to take away: widening the hash improves policing
exponentially, and removing overhearing entirely still leaves a useful
(if weaker) check driven by the relay links alone.
"""

from algwatchdog import (
    TheoryParams,
    conservative_gamma_bound,
    gamma_bound,
    predicted_beta,
    predicted_beta_no_overhear,
)

print("False-detection side (honest relay): per-watcher bound eps,")
print("two-watcher union bound min(1, 2*eps):")
for eps in (0.05, 0.01, 0.001):
    print(f"  eps={eps}: gamma <= {float(gamma_bound(eps))}, "
          f"conservative {float(conservative_gamma_bound(eps))}")

print("\nPredicted misdetection vs hash width (n=12, all radii 3):")
for h in range(1, 9):
    beta = predicted_beta(TheoryParams(n=12, h=h, r12=3, r21=3, r31=3, r32=3))
    print(f"  h={h}: beta = {float(beta):.3e}")

print("\nPredicted misdetection vs relay-link radius (n=12, h=4, source radii 3):")
for r in range(0, 13, 2):
    beta = predicted_beta(TheoryParams(n=12, h=4, r12=3, r21=3, r31=r, r32=r))
    print(f"  r3x={r:>2}: beta = {float(beta):.3e}")

print("\nNo-overhearing corollary (source links useless, radii maxed):")
for h in (2, 4, 6, 8):
    beta = predicted_beta_no_overhear(12, h, 3, 3)
    general = predicted_beta(TheoryParams(n=12, h=h, r12=12, r21=12, r31=3, r32=3))
    assert beta == general
    print(f"  h={h}: beta = {float(beta):.3e}  (matches the general formula exactly)")
