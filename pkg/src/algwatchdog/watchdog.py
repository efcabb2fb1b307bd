"""The two detection engines a watcher runs against its downstream relay.

The algebraic engine builds candidate sets (hash-consistent words inside a
Hamming ball around each overheard payload), pushes the peer candidates
through the known coding map, and flags the relay when the intersection with
the relay candidates is empty.

The trellis engine scores the same observation as a four-layer path-sum:
overheard-peer vertex -> peer candidates -> coded images -> overheard-relay
vertex, with channel-likelihood edge weights.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .channel import BinarySymmetricChannel, Radius, ball_offsets, radius_for_epsilon
from .gf2n import FieldElement
from .hashing import HashFunction, HashValue

TRELLIS_MAX_WIDTH = 12


class Hypothesis(enum.Enum):
    H0 = "well-behaving"
    H1 = "malicious"


@dataclass(frozen=True)
class Observation:
    """Everything one watcher gathers in a single round.

    Headers (coefficients and hashes) arrive intact; the two overheard
    payloads went through the corresponding interference channels.
    """

    own_value: FieldElement
    own_coeff: FieldElement
    peer_coeff: FieldElement
    peer_hash: HashValue
    relay_hash: HashValue
    noisy_peer: int
    noisy_relay: int
    peer_channel: BinarySymmetricChannel
    relay_channel: BinarySymmetricChannel
    epsilon: float
    hf: HashFunction

    @property
    def n(self) -> int:
        return self.own_value.spec.n


@dataclass(frozen=True)
class CandidateSet:
    members: frozenset[int]
    radius: Radius
    target: HashValue


@dataclass(frozen=True)
class Verdict:
    decision: Hypothesis
    consistency_score: float
    diagnostics: dict


@dataclass(frozen=True)
class Trellis:
    """Materialized slice of the four-layer model between the two observed vertices.

    Only the peer candidates (layer 2) and their coded images (layer 3) are
    stored; layers 1 and 4 collapse to the single observed start/destination
    vertex.  weights_in are the normalized start->candidate weights;
    likelihood_out are the raw image->destination channel likelihoods, and
    edge_out marks which images are hash-consistent with the destination.
    """

    start: tuple[int, int]
    destination: tuple[int, int]
    candidates: np.ndarray
    images: np.ndarray
    weights_in: np.ndarray
    likelihood_out: np.ndarray
    edge_out: np.ndarray


@lru_cache(maxsize=None)
def _popcount(n: int) -> np.ndarray:
    v = np.arange(1 << n, dtype=np.int64)
    out = np.zeros(1 << n, dtype=np.int64)
    while v.any():
        out += v & 1
        v >>= 1
    return out


def _likelihoods(chan: BinarySymmetricChannel, words: np.ndarray, received: int, n: int) -> np.ndarray:
    """P(received | word) for each word, as plain probabilities."""
    k = _popcount(n)[words ^ received]
    if chan.p == 0.0:
        return np.where(k == 0, 1.0, 0.0)
    return np.exp(k * math.log(chan.p) + (n - k) * math.log(1.0 - chan.p))


def _candidate_words(obs: Observation, which: str, radius_override: int | None = None) -> tuple[np.ndarray, Radius, HashValue]:
    if which == "peer":
        noisy, chan, target = obs.noisy_peer, obs.peer_channel, obs.peer_hash
    elif which == "relay":
        noisy, chan, target = obs.noisy_relay, obs.relay_channel, obs.relay_hash
    else:
        raise ValueError(f"unknown candidate role {which!r}")
    n = obs.n
    if radius_override is None:
        radius = radius_for_epsilon(n, chan.p, obs.epsilon)
    else:
        radius = Radius(radius_override, obs.epsilon)
    ball = noisy ^ ball_offsets(n, radius.r)
    members = ball[obs.hf.values_on(ball) == target.value]
    return members, radius, target


def candidate_set(obs: Observation, which: str, radius_override: int | None = None) -> CandidateSet:
    """Hash-consistent words within the coverage radius of an overheard payload."""
    members, radius, target = _candidate_words(obs, which, radius_override)
    return CandidateSet(frozenset(int(w) for w in members), radius, target)


def algebraic_check(obs: Observation, radius_override: int | None = None) -> Verdict:
    """Empty-intersection misbehavior check.

    Maps every peer candidate x through own_coeff*own_value + peer_coeff*x
    and intersects the images with the relay candidate set; an empty
    intersection flags the relay.
    """
    peer_words, r_peer, _ = _candidate_words(obs, "peer", radius_override)
    relay_words, r_relay, _ = _candidate_words(obs, "relay", radius_override)
    spec = obs.own_value.spec
    const = int(spec.mul_words(obs.own_coeff.value, obs.own_value.value))
    images = const ^ spec.mul_words(obs.peer_coeff.value, peer_words)
    relay_set = frozenset(int(w) for w in relay_words)
    surviving = frozenset(int(w) for w in images) & relay_set
    score = len(surviving) / len(relay_set) if relay_set else 0.0
    decision = Hypothesis.H1 if not surviving else Hypothesis.H0
    return Verdict(
        decision,
        score,
        {
            "peer_candidates": len(peer_words),
            "relay_candidates": len(relay_set),
            "surviving": len(surviving),
            "peer_radius": r_peer.r,
            "relay_radius": r_relay.r,
        },
    )


def build_trellis(obs: Observation) -> Trellis:
    """Materialize the reachable part of the four-layer model for one observation."""
    n = obs.n
    if n > TRELLIS_MAX_WIDTH:
        raise ValueError(f"trellis engine supports n <= {TRELLIS_MAX_WIDTH}, got {n}")
    spec = obs.own_value.spec
    domain = np.arange(spec.order, dtype=np.int64)
    candidates = domain[obs.hf.values_on(domain) == obs.peer_hash.value]
    raw_in = _likelihoods(obs.peer_channel, candidates, obs.noisy_peer, n)
    total = raw_in.sum()
    weights_in = raw_in / total if total > 0 else np.zeros_like(raw_in)
    const = int(spec.mul_words(obs.own_coeff.value, obs.own_value.value))
    images = const ^ spec.mul_words(obs.peer_coeff.value, candidates)
    edge_out = obs.hf.values_on(images) == obs.relay_hash.value
    likelihood_out = _likelihoods(obs.relay_channel, images, obs.noisy_relay, n)
    return Trellis(
        start=(obs.noisy_peer, obs.peer_hash.value),
        destination=(obs.noisy_relay, obs.relay_hash.value),
        candidates=candidates,
        images=images,
        weights_in=weights_in,
        likelihood_out=likelihood_out,
        edge_out=edge_out,
    )


def consistency_probability(tr: Trellis) -> float:
    """Sum over start->destination paths of the product of edge weights."""
    return float(np.sum(tr.weights_in * np.where(tr.edge_out, tr.likelihood_out, 0.0)))


def decide(score: float, threshold: float) -> Verdict:
    """Threshold rule on a consistency score: accept the relay iff score >= t."""
    decision = Hypothesis.H0 if score >= threshold else Hypothesis.H1
    return Verdict(decision, score, {"threshold": threshold})
