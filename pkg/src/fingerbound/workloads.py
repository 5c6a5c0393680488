"""Seeded workload generators and trace file ingestion.

All randomness flows through a self-contained splitmix-style 64-bit mixer so
that traces are bit-reproducible across platforms and implementations. The
generator state advances by the odd constant 0x9E3779B97F4A7C15 and each
output is finalized with

    z ^= z >> 30;  z *= 0xBF58476D1CE4E5B9
    z ^= z >> 27;  z *= 0x94D049BB133111EB
    z ^= z >> 31

with all arithmetic modulo 2^64. Bounded draws use plain modulo reduction and
unit-interval draws use the top 53 bits scaled by 2^-53; both are part of the
reproducibility contract.

Trace file format: line 1 is "n m", then m lines with one key each.
Weights file format: n lines, one strictly positive decimal per line.
"""

from __future__ import annotations

import math
from bisect import bisect_left
from dataclasses import dataclass
from pathlib import Path

from .core import AccessSequence, Key, WeightAssignment
from .errors import BadSpecError, TraceParseError

_MASK = (1 << 64) - 1
_GAMMA = 0x9E3779B97F4A7C15
_MIX1 = 0xBF58476D1CE4E5B9
_MIX2 = 0x94D049BB133111EB

WORKLOAD_KINDS = ("sequential", "uniform", "walk", "zipf_finger", "bit_reversal", "trace")


class Splitmix64:
    """The package's only pseudo-random generator; see the module docstring."""

    __slots__ = ("state",)

    def __init__(self, seed: int):
        self.state = seed & _MASK

    def next_u64(self) -> int:
        self.state = (self.state + _GAMMA) & _MASK
        z = self.state
        z = ((z ^ (z >> 30)) * _MIX1) & _MASK
        z = ((z ^ (z >> 27)) * _MIX2) & _MASK
        return z ^ (z >> 31)

    def below(self, bound: int) -> int:
        """Uniform-ish integer in [0, bound) via modulo reduction."""
        if bound < 1:
            raise ValueError(f"bound must be positive, got {bound}")
        return self.next_u64() % bound

    def unit(self) -> float:
        """Float in [0, 1) from the top 53 bits."""
        return (self.next_u64() >> 11) * 2.0 ** -53


@dataclass(frozen=True)
class WorkloadSpec:
    """Parameters of one deterministic workload."""

    kind: str
    n: int
    m: int
    seed: int = 0
    d: int | None = None          # walk: maximum step size
    theta: float | None = None    # zipf_finger: step-length exponent
    path: str | None = None       # trace: file to ingest

    def __post_init__(self):
        if self.kind not in WORKLOAD_KINDS:
            raise BadSpecError(f"unknown workload kind {self.kind!r}")
        if self.kind != "trace":
            if self.n < 1 or self.m < 1:
                raise BadSpecError(f"n and m must be positive, got n={self.n}, m={self.m}")
        if self.kind == "walk":
            if self.d is None or self.d < 1:
                raise BadSpecError("walk workloads need a step bound d >= 1")
        if self.kind == "zipf_finger":
            if self.theta is None or not self.theta > 0:
                raise BadSpecError("zipf_finger workloads need an exponent theta > 0")
        if self.kind == "bit_reversal":
            if self.n & (self.n - 1):
                raise BadSpecError(f"bit_reversal needs n to be a power of two, got {self.n}")
            if self.m != self.n:
                raise BadSpecError(f"bit_reversal needs m = n, got m={self.m}, n={self.n}")
        if self.kind == "trace" and not self.path:
            raise BadSpecError("trace workloads need a file path")


def generate(spec: WorkloadSpec) -> AccessSequence:
    """Materialize the access sequence for a spec; pure given the spec."""
    if spec.kind == "trace":
        return read_trace(spec.path)
    n, m = spec.n, spec.m
    if spec.kind == "sequential":
        return AccessSequence(n, tuple((i % n) + 1 for i in range(m)))
    if spec.kind == "bit_reversal":
        width = n.bit_length() - 1
        return AccessSequence(n, tuple(_reverse_bits(i, width) + 1 for i in range(n)))
    rng = Splitmix64(spec.seed)
    if spec.kind == "uniform":
        return AccessSequence(n, tuple(rng.below(n) + 1 for _ in range(m)))
    if spec.kind == "walk":
        d = spec.d
        out = [(n + 1) // 2]
        for _ in range(m - 1):
            u = rng.below(2 * d)
            step = u - d if u < d else u - d + 1
            out.append(min(n, max(1, out[-1] + step)))
        return AccessSequence(n, tuple(out))
    # zipf_finger: step length k drawn with P(k) proportional to k^-theta
    # over 1..n-1, direction uniform, clamped at the boundary.
    out = [(n + 1) // 2]
    if n == 1:
        return AccessSequence(1, tuple([1] * m))
    cum: list[float] = []
    acc = 0.0
    for k in range(1, n):
        acc += float(k) ** -spec.theta
        cum.append(acc)
    total = cum[-1]
    for _ in range(m - 1):
        step = bisect_left(cum, rng.unit() * total) + 1
        if rng.next_u64() & 1:
            step = -step
        out.append(min(n, max(1, out[-1] + step)))
    return AccessSequence(n, tuple(out))


def _reverse_bits(v: int, width: int) -> int:
    r = 0
    for _ in range(width):
        r = (r << 1) | (v & 1)
        v >>= 1
    return r


def read_trace(path: str | Path) -> AccessSequence:
    """Parse a trace file, reporting the offending line on any defect."""
    with open(path, "r", encoding="ascii") as fh:
        lines = fh.read().splitlines()
    if not lines:
        raise TraceParseError(1, "empty trace file; expected 'n m' header")
    head = lines[0].split()
    if len(head) != 2:
        raise TraceParseError(1, f"expected 'n m' header, got {lines[0]!r}")
    try:
        n, m = int(head[0]), int(head[1])
    except ValueError:
        raise TraceParseError(1, f"expected integer header fields, got {lines[0]!r}") from None
    if n < 1 or m < 1:
        raise TraceParseError(1, f"n and m must be positive, got n={n}, m={m}")
    if len(lines) != m + 1:
        raise TraceParseError(len(lines) + 1 if len(lines) < m + 1 else m + 2,
                              f"expected {m} access lines after the header, found {len(lines) - 1}")
    keys: list[int] = []
    for lineno, raw in enumerate(lines[1:], start=2):
        try:
            k = int(raw)
        except ValueError:
            raise TraceParseError(lineno, f"expected one integer key, got {raw!r}") from None
        if not 1 <= k <= n:
            raise TraceParseError(lineno, f"key {k} out of range [1, {n}]")
        keys.append(k)
    return AccessSequence(n, tuple(keys))


def write_trace(seq: AccessSequence, path: str | Path) -> None:
    with open(path, "w", encoding="ascii", newline="\n") as fh:
        fh.write(f"{seq.n} {seq.m}\n")
        for k in seq:
            fh.write(f"{k}\n")


def read_weights(path: str | Path) -> WeightAssignment:
    """Parse a weights file: one strictly positive decimal per line."""
    with open(path, "r", encoding="ascii") as fh:
        lines = fh.read().splitlines()
    if not lines:
        raise TraceParseError(1, "empty weights file")
    values: list[float] = []
    for lineno, raw in enumerate(lines, start=1):
        try:
            w = float(raw)
        except ValueError:
            raise TraceParseError(lineno, f"expected one decimal weight, got {raw!r}") from None
        if not math.isfinite(w) or w <= 0.0:
            raise TraceParseError(lineno, f"weight must be finite and positive, got {raw!r}")
        values.append(w)
    return WeightAssignment(tuple(values))


def write_weights(w: WeightAssignment, path: str | Path) -> None:
    with open(path, "w", encoding="ascii", newline="\n") as fh:
        for value in w.weights:
            fh.write(f"{value!r}\n")
