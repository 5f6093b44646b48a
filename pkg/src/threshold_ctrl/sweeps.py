"""Exhaustive property sweeps over small threshold graphs.

Each suite returns a :class:`SweepResult`; failures are collected as short
strings rather than raised so a sweep can report everything it found.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass, field
from typing import Callable, Iterable

from .antiregular import (
    _ceil_half,
    block_eigenvectors_persist,
    certify_distinct_spectrum,
    combine,
    corollary2_check,
    graph_stats,
    interlacing_check,
    theorem6_check,
)
from .control import (
    ControlMatrix,
    design_binary_B,
    design_terminal_B,
    kalman_rank,
    min_controllers,
    pbh_check,
    pbh_witness_ok,
    search_binary_controller,
    theorem4_check,
)
from .spectra import eigvecs_algorithm1, verify_eigenbasis
from .threshold import all_strings, format_string, graph_from_string, string_from_degrees


@dataclass
class SweepResult:
    name: str
    cases: int = 0
    failures: list[str] = field(default_factory=list)
    seconds: float = 0.0
    extra: dict = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return not self.failures

    def to_json(self) -> dict:
        return {
            "suite": self.name,
            "cases": self.cases,
            "ok": self.ok,
            "failures": self.failures[:20],
            "seconds": float(f"{self.seconds:.12g}"),
            **self.extra,
        }


def strings_up_to(max_k: int) -> Iterable[tuple[int, ...]]:
    for k in range(2, max_k + 1):
        yield from all_strings(k)


def _timed(name: str, body: Callable[[SweepResult], None]) -> SweepResult:
    res = SweepResult(name)
    t0 = time.perf_counter()
    body(res)
    res.seconds = time.perf_counter() - t0
    return res


def roundtrip_sweep(max_k: int) -> SweepResult:
    def body(res):
        for s in strings_up_to(max_k):
            res.cases += 1
            g = graph_from_string(s)
            if string_from_degrees(g.degrees) != s:
                res.failures.append(format_string(s))
    return _timed("roundtrip", body)


def eigenbasis_sweep(max_k: int) -> SweepResult:
    def body(res):
        for s in strings_up_to(max_k):
            res.cases += 1
            g = graph_from_string(s)
            check = verify_eigenbasis(g.laplacian, eigvecs_algorithm1(g.laplacian))
            if not check:
                res.failures.append(f"{format_string(s)}: {check.reason}")
    return _timed("eigenbasis", body)


def random_binary(k: int, p: int, rng: random.Random, density: float | None = None) -> ControlMatrix:
    while True:
        q = rng.random() if density is None else density
        B = tuple(tuple(int(rng.random() < q) for _ in range(p)) for _ in range(k))
        if any(any(r) for r in B):
            return ControlMatrix(B, "binary")


def _near_design(design: ControlMatrix, rng: random.Random) -> ControlMatrix:
    """A controllable-leaning sample: the designed matrix padded to a random
    width of at most 3, with one bit flipped half of the time."""
    k = design.k
    p = rng.randint(design.p, 3)
    rows = [list(r) + [int(rng.random() < 0.3) for _ in range(p - design.p)] for r in design.B]
    if rng.random() < 0.5:
        i, j = rng.randrange(k), rng.randrange(p)
        rows[i][j] ^= 1
    if not any(any(r) for r in rows):
        rows[0][0] = 1
    return ControlMatrix(tuple(map(tuple, rows)), "binary")


def agreement_sweep(max_k: int, samples: int = 200, seed: int = 0) -> SweepResult:
    """The essential-substring test, PBH and Kalman must decide every sample identically."""
    rng = random.Random(seed)

    def body(res):
        positives = 0
        for s in strings_up_to(max_k):
            g = graph_from_string(s)
            L = g.laplacian
            basis = eigvecs_algorithm1(L)
            design = design_binary_B(g.degrees)
            for n in range(samples):
                if design.p <= 3 and n % 2:
                    B = _near_design(design, rng)
                else:
                    B = random_binary(g.k, rng.randint(1, 3), rng)
                res.cases += 1
                t4 = theorem4_check(s, B).controllable
                pbh = pbh_check(L, basis, B, verify=False)
                kal = kalman_rank(L, B) == g.k
                positives += kal
                if not t4 == pbh.controllable == kal:
                    res.failures.append(f"{format_string(s)} B={B.support()}: theorem4={t4} pbh={pbh.controllable} kalman={kal}")
                elif not kal and not pbh_witness_ok(L, B, pbh):
                    res.failures.append(f"{format_string(s)} B={B.support()}: bad PBH witness")
        res.extra["controllable_samples"] = positives
    return _timed("agreement", body)


def minimality_sweep(max_k: int) -> SweepResult:
    """No binary matrix with one controller fewer than the minimum works,
    and both designs are controllable."""
    def body(res):
        for s in strings_up_to(max_k):
            res.cases += 1
            g = graph_from_string(s)
            L = g.laplacian
            tag = format_string(s)
            p = min_controllers(g.degrees, "binary")
            if p > 1:
                found = search_binary_controller(L, eigvecs_algorithm1(L), p - 1)
                if found is not None:
                    res.failures.append(f"{tag}: controllable with {p - 1} columns {found.support()}")
            if kalman_rank(L, design_binary_B(g.degrees)) != g.k:
                res.failures.append(f"{tag}: binary design uncontrollable")
            T = design_terminal_B(g.degrees)
            if T.p != min_controllers(g.degrees, "terminal") or kalman_rank(L, T) != g.k:
                res.failures.append(f"{tag}: terminal design wrong")
    return _timed("minimality", body)


def combined_sweep(k_lo: int = 4, k_hi: int = 40, entries_max: int = 40) -> SweepResult:
    def body(res):
        for k in range(k_lo, k_hi + 1):
            res.cases += 1
            g = combine(k)
            if not certify_distinct_spectrum(g):
                res.failures.append(f"k={k}: repeated eigenvalue")
            if not interlacing_check(g, 1e-9):
                res.failures.append(f"k={k}: interlacing")
            if k <= entries_max and not theorem6_check(g):
                res.failures.append(f"k={k}: zero eigenvector entry")
            if not block_eigenvectors_persist(g):
                res.failures.append(f"k={k}: block eigenvectors lost")
            if k >= 6:
                stats = graph_stats(g.L)
                if stats != (4, _ceil_half(k)) or sum(stats) != _ceil_half(k) + 4:
                    res.failures.append(f"k={k}: stats {stats}")
    return _timed("combined", body)


def single_input_sweep(k_lo: int = 4, k_hi: int = 16) -> SweepResult:
    def body(res):
        for k in range(k_lo, k_hi + 1):
            hi = _ceil_half(k)
            for n in range(2 ** hi):
                res.cases += 1
                b = [(n >> i) & 1 for i in range(hi)]
                try:
                    corollary2_check(k, b)
                except AssertionError as exc:
                    res.failures.append(str(exc))
    return _timed("single_input", body)


def run_all(max_k: int, samples: int = 200, seed: int = 0) -> list[SweepResult]:
    """Every suite on graphs with at most ``max_k`` vertices.  The agreement
    and minimality suites are capped at 9 and 8 vertices."""
    return [
        roundtrip_sweep(max_k),
        eigenbasis_sweep(max_k),
        agreement_sweep(min(max_k, 9), samples, seed),
        minimality_sweep(min(max_k, 8)),
        combined_sweep(4, max(4, max_k)),
        single_input_sweep(4, max(4, min(max_k, 16))),
    ]
