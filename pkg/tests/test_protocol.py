"""Relay behavior, overhearing, and wire format tests."""

import random

import pytest

from algwatchdog.channel import BinarySymmetricChannel
from algwatchdog.gf2n import FieldElement, canonical_spec
from algwatchdog.hashing import HashValue, evaluate, sample
from algwatchdog.protocol import (
    AdversaryStrategy,
    Packet,
    PacketDecodeError,
    Scenario,
    decode_packet,
    encode_packet,
    observe,
    relay_output,
)

GF16 = canonical_spec(4)
GF256 = canonical_spec(8)


def make_scenario(spec=GF16, x1=0b0101, x2=0b0111, a1=1, a2=1, p=0.0, h=2, seed=0, epsilon=0.01):
    rng = random.Random(seed)
    hf = sample(rng, 3, spec, h)
    chan = BinarySymmetricChannel(p)
    return Scenario(
        spec=spec, hf=hf,
        x1=FieldElement(x1, spec), x2=FieldElement(x2, spec),
        a1=FieldElement(a1, spec), a2=FieldElement(a2, spec),
        chan_12=chan, chan_21=chan, chan_31=chan, chan_32=chan,
        epsilon=epsilon,
    )


class TestRelayOutput:
    def test_honest_xor_of_sources(self):
        scn = make_scenario()
        pkt = relay_output(scn, AdversaryStrategy.honest(), random.Random(1))
        assert pkt.payload == 0b0010
        assert pkt.own_hash == evaluate(scn.hf, FieldElement(pkt.payload, scn.spec))

    def test_honest_packet_valid_under_random_coefficients(self):
        rng = random.Random(11)
        for _ in range(50):
            scn = make_scenario(
                x1=rng.randrange(16), x2=rng.randrange(16),
                a1=rng.randrange(1, 16), a2=rng.randrange(1, 16), seed=rng.random(),
            )
            pkt = relay_output(scn, AdversaryStrategy.honest(), rng)
            assert pkt.payload == scn.honest_relay_value().value
            assert pkt.own_hash == evaluate(scn.hf, FieldElement(pkt.payload, scn.spec))

    def test_fixed_error_offsets_payload(self):
        scn = make_scenario()
        pkt = relay_output(scn, AdversaryStrategy.fixed_error(0b1001), random.Random(1))
        assert pkt.payload == 0b0010 ^ 0b1001
        assert pkt.own_hash == evaluate(scn.hf, FieldElement(pkt.payload, scn.spec))

    def test_fixed_zero_error_rejected(self):
        with pytest.raises(ValueError):
            AdversaryStrategy.fixed_error(0)

    def test_random_nonzero_error_statistics(self):
        scn = make_scenario(spec=GF256, h=3)
        rng = random.Random(2)
        honest = scn.honest_relay_value().value
        errors = {relay_output(scn, AdversaryStrategy.random_nonzero_error(), rng).payload ^ honest for _ in range(10_000)}
        assert 0 not in errors
        assert len(errors) > 200

    def test_weight_bounded_error(self):
        scn = make_scenario(spec=GF256, h=3)
        rng = random.Random(3)
        honest = scn.honest_relay_value().value
        for _ in range(200):
            pkt = relay_output(scn, AdversaryStrategy.weight_bounded_error(2), rng)
            e = pkt.payload ^ honest
            assert 1 <= e.bit_count() <= 2

    def test_exhaustive_best_returns_nonzero_error(self):
        scn = make_scenario(p=0.1)
        pkt = relay_output(scn, AdversaryStrategy.exhaustive_best(), random.Random(4))
        assert pkt.payload != scn.honest_relay_value().value

    def test_exhaustive_best_cost_error_at_large_n(self):
        spec = canonical_spec(14)
        scn = make_scenario(spec=spec, x1=5, x2=9, h=4, p=0.05)
        with pytest.raises(ValueError, match="exhaustive"):
            relay_output(scn, AdversaryStrategy.exhaustive_best(), random.Random(5))

    def test_unknown_strategy_rejected(self):
        with pytest.raises(ValueError):
            AdversaryStrategy("omniscient")


class TestObserve:
    def test_noiseless_overhearing_is_exact(self):
        scn = make_scenario(p=0.0)
        sources = (scn.source_packet(1), scn.source_packet(2))
        relay = relay_output(scn, AdversaryStrategy.honest(), random.Random(1))
        obs = observe(1, scn, sources, relay, random.Random(2))
        assert obs.noisy_peer == scn.x2.value
        assert obs.noisy_relay == relay.payload

    def test_headers_never_corrupted(self):
        scn = make_scenario(p=0.5)
        sources = (scn.source_packet(1), scn.source_packet(2))
        relay = relay_output(scn, AdversaryStrategy.honest(), random.Random(1))
        rng = random.Random(3)
        for watcher in (1, 2):
            for _ in range(20):
                obs = observe(watcher, scn, sources, relay, rng)
                peer = scn.x2 if watcher == 1 else scn.x1
                assert obs.peer_hash == evaluate(scn.hf, peer)
                assert obs.relay_hash == relay.own_hash
                assert (obs.own_coeff, obs.peer_coeff) == ((scn.a1, scn.a2) if watcher == 1 else (scn.a2, scn.a1))

    def test_mean_overheard_distance(self):
        scn = make_scenario(spec=GF256, x1=0x31, x2=0x7C, h=3, p=0.1)
        sources = (scn.source_packet(1), scn.source_packet(2))
        relay = relay_output(scn, AdversaryStrategy.honest(), random.Random(1))
        rng = random.Random(4)
        total = sum(
            (observe(1, scn, sources, relay, rng).noisy_relay ^ relay.payload).bit_count()
            for _ in range(10_000)
        )
        sigma = (8 * 0.1 * 0.9) ** 0.5
        assert abs(total / 10_000 - 0.8) <= 3 * sigma / 100

    def test_bad_watcher_id(self):
        scn = make_scenario()
        with pytest.raises(ValueError):
            observe(3, scn, (scn.source_packet(1), scn.source_packet(2)), relay_output(scn, AdversaryStrategy.honest(), random.Random(1)), random.Random(1))


class TestWireFormat:
    def _random_packet(self, rng, spec, h):
        k = rng.randrange(1, 4)
        return Packet(
            coeffs=tuple(FieldElement(rng.randrange(spec.order), spec) for _ in range(k)),
            neighbor_hashes=tuple(HashValue(rng.randrange(1 << h), h) for _ in range(k)),
            own_hash=HashValue(rng.randrange(1 << h), h),
            payload=rng.randrange(spec.order),
        )

    def test_round_trip(self):
        rng = random.Random(9)
        for n, h in [(4, 2), (8, 3), (12, 8), (16, 9)]:
            spec = canonical_spec(n)
            for _ in range(25):
                pkt = self._random_packet(rng, spec, h)
                assert decode_packet(encode_packet(pkt, n, h)) == pkt

    def test_truncated_frame(self):
        scn = make_scenario()
        frame = encode_packet(relay_output(scn, AdversaryStrategy.honest(), random.Random(1)), 4, 2)
        with pytest.raises(PacketDecodeError):
            decode_packet(frame[:-1])
        with pytest.raises(PacketDecodeError):
            decode_packet(frame[:2])

    def test_bad_version(self):
        scn = make_scenario()
        frame = bytearray(encode_packet(relay_output(scn, AdversaryStrategy.honest(), random.Random(1)), 4, 2))
        frame[0] = 7
        with pytest.raises(PacketDecodeError, match="version"):
            decode_packet(bytes(frame))

    def test_error_carries_offset(self):
        try:
            decode_packet(b"\x01")
        except PacketDecodeError as exc:
            assert isinstance(exc.offset, int)
        else:
            pytest.fail("no decode error raised")


def test_zero_coefficients_need_override():
    spec = GF16
    rng = random.Random(0)
    hf = sample(rng, 3, spec, 2)
    chan = BinarySymmetricChannel(0.0)
    with pytest.raises(ValueError):
        Scenario(
            spec=spec, hf=hf,
            x1=FieldElement(1, spec), x2=FieldElement(2, spec),
            a1=FieldElement(0, spec), a2=FieldElement(1, spec),
            chan_12=chan, chan_21=chan, chan_31=chan, chan_32=chan,
            epsilon=0.01,
        )
