"""Hard-decision bit-flipping decoders over a Tanner graph.

Both decoders operate on error patterns rather than received words: the flip
rule reads only check parities, and the parity of a check under a received
word ``codeword + e`` equals its parity under ``e`` alone, so trajectories
depend only on the error. A variable flips when strictly more of its checks
are unsatisfied than satisfied; exact ties do not flip, which matters for
even degrees.

The parallel decoder flips all qualifying variables at once per round. The
serial decoder scans variables in a fixed order (ascending by default) and
updates the syndrome immediately after each flip, so one round is one full
scan.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from itertools import combinations
from typing import Iterable, Sequence, Union

from .graphs import TannerGraph


class DecodeStatus(Enum):
    CORRECTED = "corrected"
    FIXED_POINT = "fixed_point"
    OSCILLATION = "oscillation"
    MAX_ITERS = "max_iters"


@dataclass(frozen=True)
class ErrorPattern:
    """A set of flipped variable positions in a length-``length`` word."""

    length: int
    support: tuple[int, ...]

    def __post_init__(self):
        if self.length < 0:
            raise ValueError(f"length must be nonnegative, got {self.length}")
        sup = tuple(sorted(set(self.support)))
        object.__setattr__(self, "support", sup)
        if sup and (sup[0] < 0 or sup[-1] >= self.length):
            bad = sup[0] if sup[0] < 0 else sup[-1]
            raise ValueError(f"position {bad} out of range for length {self.length}")

    @classmethod
    def from_bits(cls, bits: Sequence[int]) -> "ErrorPattern":
        return cls(len(bits), tuple(i for i, b in enumerate(bits) if b))

    @property
    def weight(self) -> int:
        return len(self.support)

    def bits(self) -> tuple[int, ...]:
        out = [0] * self.length
        for i in self.support:
            out[i] = 1
        return tuple(out)

    def flip(self, positions: Iterable[int]) -> "ErrorPattern":
        """XOR the given positions into the pattern."""
        current = set(self.support)
        return ErrorPattern(self.length, tuple(current ^ set(positions)))


@dataclass(frozen=True)
class DecodeResult:
    status: DecodeStatus
    final: ErrorPattern
    rounds: int
    flips_per_round: tuple[tuple[int, ...], ...]


def _check_pattern(t: TannerGraph, e: ErrorPattern) -> None:
    if e.length != t.n:
        raise ValueError(f"pattern length {e.length} does not match code length {t.n}")


def unsatisfied_checks(t: TannerGraph, e: ErrorPattern) -> frozenset[int]:
    """Checks whose neighbourhood holds an odd number of errors."""
    _check_pattern(t, e)
    parity = [0] * t.m
    for v in e.support:
        for c in t.var_adj[v]:
            parity[c] ^= 1
    return frozenset(c for c in range(t.m) if parity[c])


def _flip_candidates(t: TannerGraph, unsat: frozenset[int]) -> tuple[int, ...]:
    count = [0] * t.n
    for c in unsat:
        for v in t.check_adj[c]:
            count[v] += 1
    return tuple(v for v in range(t.n) if 2 * count[v] > t.var_degree(v))


def parallel_round(t: TannerGraph, e: ErrorPattern) -> tuple[ErrorPattern, tuple[int, ...]]:
    """One parallel flip round: returns the new pattern and the flipped positions."""
    flipped = _flip_candidates(t, unsatisfied_checks(t, e))
    return e.flip(flipped), flipped


def is_fixed_point(t: TannerGraph, e: ErrorPattern) -> bool:
    """True when no variable sees a strict majority of unsatisfied checks.

    The zero pattern is trivially a fixed point. Both decoders stall exactly
    on the fixed points, parallel in one round and serial in one scan.
    """
    return not _flip_candidates(t, unsatisfied_checks(t, e))


def decode_parallel(
    t: TannerGraph, e: ErrorPattern, max_iters: Union[int, None] = None
) -> DecodeResult:
    """Run parallel bit flipping until corrected, stuck, cycling, or out of rounds.

    OSCILLATION is detected by revisiting any earlier pattern; since the
    update is deterministic, a revisit proves a loop. ``max_iters`` defaults
    to the code length.
    """
    _check_pattern(t, e)
    if max_iters is None:
        max_iters = max(t.n, 1)
    if max_iters < 1:
        raise ValueError(f"max_iters must be positive, got {max_iters}")
    if e.weight == 0:
        return DecodeResult(DecodeStatus.CORRECTED, e, 0, ())
    seen = {e.support}
    flips: list[tuple[int, ...]] = []
    current = e
    rounds = 0
    while True:
        nxt, flipped = parallel_round(t, current)
        rounds += 1
        flips.append(flipped)
        if not flipped:
            # the no-flip round still ran: a fixed point costs exactly one round
            return DecodeResult(DecodeStatus.FIXED_POINT, current, rounds, tuple(flips))
        current = nxt
        if current.weight == 0:
            return DecodeResult(DecodeStatus.CORRECTED, current, rounds, tuple(flips))
        if current.support in seen:
            return DecodeResult(DecodeStatus.OSCILLATION, current, rounds, tuple(flips))
        seen.add(current.support)
        if rounds >= max_iters:
            return DecodeResult(DecodeStatus.MAX_ITERS, current, rounds, tuple(flips))


def decode_serial(
    t: TannerGraph,
    e: ErrorPattern,
    max_iters: Union[int, None] = None,
    order: Union[Sequence[int], None] = None,
) -> DecodeResult:
    """Run serial bit flipping: scan variables in ``order``, updating the syndrome per flip.

    ``order`` defaults to ascending variable index and must be a permutation
    of all variables. Status semantics match :func:`decode_parallel`, with a
    round meaning one full scan.
    """
    _check_pattern(t, e)
    if max_iters is None:
        max_iters = max(t.n, 1)
    if max_iters < 1:
        raise ValueError(f"max_iters must be positive, got {max_iters}")
    if order is None:
        order = range(t.n)
    else:
        if sorted(order) != list(range(t.n)):
            raise ValueError("scan order must be a permutation of all variable indices")
    if e.weight == 0:
        return DecodeResult(DecodeStatus.CORRECTED, e, 0, ())
    bits = bytearray(t.n)
    for v in e.support:
        bits[v] = 1
    syndrome = bytearray(t.m)
    for c in unsatisfied_checks(t, e):
        syndrome[c] = 1
    seen = {e.support}
    flips: list[tuple[int, ...]] = []
    rounds = 0
    while True:
        flipped = []
        for v in order:
            unsat = sum(syndrome[c] for c in t.var_adj[v])
            if 2 * unsat > t.var_degree(v):
                bits[v] ^= 1
                for c in t.var_adj[v]:
                    syndrome[c] ^= 1
                flipped.append(v)
        current = ErrorPattern.from_bits(bits)
        rounds += 1
        flips.append(tuple(flipped))
        if not flipped:
            return DecodeResult(DecodeStatus.FIXED_POINT, current, rounds, tuple(flips))
        if current.weight == 0:
            return DecodeResult(DecodeStatus.CORRECTED, current, rounds, tuple(flips))
        if current.support in seen:
            return DecodeResult(DecodeStatus.OSCILLATION, current, rounds, tuple(flips))
        seen.add(current.support)
        if rounds >= max_iters:
            return DecodeResult(DecodeStatus.MAX_ITERS, current, rounds, tuple(flips))


ALGORITHMS = {"parallel": decode_parallel, "serial": decode_serial}


@dataclass(frozen=True)
class SweepResult:
    """Outcome of decoding every error pattern of one weight."""

    weight: int
    algorithm: str
    patterns_checked: int
    failures: tuple[tuple[int, ...], ...]

    @property
    def all_corrected(self) -> bool:
        return not self.failures


def sweep_error_patterns(
    t: TannerGraph,
    weight: int,
    algorithm: str = "parallel",
    max_iters: Union[int, None] = None,
) -> SweepResult:
    """Decode every weight-``weight`` pattern; failures are the uncorrected supports."""
    if algorithm not in ALGORITHMS:
        raise ValueError(f"unknown algorithm {algorithm!r}, expected one of {sorted(ALGORITHMS)}")
    if not 0 <= weight <= t.n:
        raise ValueError(f"weight must be between 0 and {t.n}, got {weight}")
    decode = ALGORITHMS[algorithm]
    failures = []
    checked = 0
    for support in combinations(range(t.n), weight):
        checked += 1
        result = decode(t, ErrorPattern(t.n, support), max_iters)
        if result.status is not DecodeStatus.CORRECTED:
            failures.append(support)
    return SweepResult(weight, algorithm, checked, tuple(failures))
