"""Two-hop algebraic watchdog for wireless network coding.

Source nodes overhear their peer and the downstream relay over noisy
channels and decide, from hash side-information and Hamming-ball candidate
sets, whether the relay corrupted the coded payload.  The package bundles
the field/hash/channel primitives, both detection engines, closed-form
error-probability predictors, and a reproducible Monte Carlo harness.
"""

from .channel import (
    BinarySymmetricChannel,
    Radius,
    ball_enumerate,
    ball_volume,
    binomial_cdf_exact,
    log_likelihood,
    radius_for_epsilon,
    transmit,
)
from .gf2n import FieldElement, FieldSpec, SpecMismatchError, UnsupportedWidthError, canonical_spec
from .harness import (
    ConfigError,
    SimConfig,
    SimReport,
    report_json,
    run_trials,
    sweep,
    wilson_interval,
    write_report,
)
from .hashing import HashFunction, HashValue, evaluate, preimage_set, sample
from .protocol import (
    AdversaryStrategy,
    Packet,
    PacketDecodeError,
    Scenario,
    decode_packet,
    encode_packet,
    observe,
    relay_output,
)
from .theory import (
    Prediction,
    TheoryParams,
    conservative_gamma_bound,
    gamma_bound,
    misdetection_v1,
    misdetection_v2,
    predicted_beta,
    predicted_beta_no_overhear,
)
from .watchdog import (
    CandidateSet,
    Hypothesis,
    Observation,
    Trellis,
    Verdict,
    algebraic_check,
    build_trellis,
    candidate_set,
    consistency_probability,
    decide,
)

__version__ = "0.1.0"
