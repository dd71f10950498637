"""Seeded Monte Carlo sampling of random chains with fixed content.

Sampling is chain-uniform: each of the C(N, n_at) arrangements of the
fixed bead multiset is equally likely, drawn by an independent
Fisher-Yates shuffle per chain.  Randomness comes from numpy's PCG64.

Reproducibility contract: every consumer stream is derived from the master
seed by a counter-based spawn-key split,

    derive_subseed(seed, *path) =
        SeedSequence(entropy=seed, spawn_key=path).generate_state(2)
        read little-endian as one 128-bit integer,

and the generator for a stream is ``numpy.random.default_rng(subseed)``.
Paths in use: `empirical_pdf` for set i uses (i,); `convergence_study`
uses (j, i) for run-count index j and set index i.  Any reported row is
re-derivable from its emitted subseed alone.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .counting import NecklaceSpec
from .stats import DiscretePdf, theoretical_pdf

PRNG_NAME = "PCG64"


@dataclass(frozen=True)
class MCConfig:
    """One simulation request: spec, run count, master seed, set count."""

    spec: NecklaceSpec
    runs: int
    seed: int
    sets: int = 5

    def __post_init__(self) -> None:
        if self.runs < 1:
            raise ValueError(f"runs must be >= 1, got {self.runs}")
        if self.sets < 1:
            raise ValueError(f"sets must be >= 1, got {self.sets}")
        if not 0 <= self.seed < 2**64:
            raise ValueError(f"seed must be a 64-bit unsigned value, got {self.seed}")


def derive_subseed(seed: int, *path: int) -> int:
    """Deterministic 128-bit subseed for the stream at `path` under `seed`."""
    ss = np.random.SeedSequence(entropy=seed, spawn_key=tuple(path))
    low, high = (int(w) for w in ss.generate_state(2, np.uint64))
    return low | (high << 64)


def _rng(subseed: int) -> np.random.Generator:
    return np.random.default_rng(subseed)


def sample_chains(
    spec: NecklaceSpec, runs: int, rng: np.random.Generator
) -> np.ndarray:
    """(runs, N) uint8 matrix of chains, one uniform arrangement per row."""
    base = np.concatenate(
        [np.ones(spec.n_at, np.uint8), np.zeros(spec.n_gc, np.uint8)]
    )
    chains = np.tile(base, (runs, 1))
    rng.permuted(chains, axis=1, out=chains)
    return chains


def sample_chain(spec: NecklaceSpec, rng: np.random.Generator) -> str:
    """One uniformly random chain as a '0'/'1' bead string."""
    return "".join("1" if b else "0" for b in sample_chains(spec, 1, rng)[0])


def count_alternations_rows(chains: np.ndarray) -> np.ndarray:
    """Circular alternation count of every row of a chain matrix."""
    return (chains != np.roll(chains, -1, axis=1)).sum(axis=1)


def alternation_histogram(
    spec: NecklaceSpec, runs: int, rng: np.random.Generator
) -> dict[int, int]:
    """Raw observation counts of alternation values over `runs` chains."""
    alternations = count_alternations_rows(sample_chains(spec, runs, rng))
    values, counts = np.unique(alternations, return_counts=True)
    return {int(v): int(c) for v, c in zip(values, counts)}


def empirical_pdf(config: MCConfig, set_index: int = 0) -> DiscretePdf:
    """Normalized alternation frequencies from one simulation set.

    Deterministic in (config, set_index): the stream is
    derive_subseed(config.seed, set_index).
    """
    histogram = alternation_histogram(
        config.spec, config.runs, _rng(derive_subseed(config.seed, set_index))
    )
    return DiscretePdf(
        {alpha: count / config.runs for alpha, count in histogram.items()},
        "empirical",
    )


def total_abs_diff(p: DiscretePdf, q: DiscretePdf) -> float:
    """L1 distance over the union support; lands in [0, 2]."""
    keys = set(p.entries) | set(q.entries)
    return sum(abs(p.prob(alpha) - q.prob(alpha)) for alpha in keys)


@dataclass(frozen=True)
class ConvergenceRow:
    runs: int
    mean_d: float
    std_d: float
    d_values: tuple[float, ...] = field(default=())


def convergence_study(
    spec: NecklaceSpec,
    run_counts: list[int],
    sets: int,
    seed: int,
) -> list[ConvergenceRow]:
    """Distance to the theoretical pdf versus the number of runs.

    For each run count, `sets` independent simulations (stream (j, i) for
    run-count index j, set i) are compared against the theoretical pdf;
    the row carries the mean and population standard deviation of the
    per-set distances (a single set reports a standard deviation of 0).
    """
    if not run_counts:
        raise ValueError("run_counts must be non-empty")
    if sets < 1:
        raise ValueError(f"sets must be >= 1, got {sets}")
    reference = theoretical_pdf(spec)
    rows = []
    for j, runs in enumerate(run_counts):
        if runs < 1:
            raise ValueError(f"runs must be >= 1, got {runs}")
        distances = []
        for i in range(sets):
            histogram = alternation_histogram(
                spec, runs, _rng(derive_subseed(seed, j, i))
            )
            empirical = DiscretePdf(
                {alpha: count / runs for alpha, count in histogram.items()},
                "empirical",
            )
            distances.append(total_abs_diff(empirical, reference))
        rows.append(
            ConvergenceRow(
                runs=runs,
                mean_d=float(np.mean(distances)),
                std_d=float(np.std(distances)),
                d_values=tuple(distances),
            )
        )
    return rows
