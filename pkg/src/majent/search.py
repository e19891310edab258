"""Randomized counterexample search and region sweeps.

Sampling is flat on the simplex (unit exponentials, normalized, sorted) and
driven by a counter-based generator so that every trial is reproducible in
isolation: the stream for a trial is keyed by (seed, cell index, trial
index) and nothing else.  Reports are therefore byte-identical across runs
and platforms that agree on the generator, whose identifier is stamped into
every report header.

Two fixed reference pairs at (alpha, beta) = (2, 3) are built in.  The
first breaks supermodularity, the second breaks submodularity, and both are
injected as the leading trials of every cell whose order parameter admits
them (one pair carries a zero weight, so negative orders skip the
injection).  Known violations are therefore found regardless of seed.
"""
from __future__ import annotations

import io
import json
import math
from dataclasses import dataclass
from enum import Enum
from typing import Sequence

import numpy as np

from .entropy import EntropyParams, sharma_mittal
from .properties import (
    CHECK_TOL,
    PropertyCheckRecord,
    PropertyKind,
    run_check,
)
from .simplex import ProbabilityDistribution, make_distribution

#: Identifier of the random stream, for cross-language reproduction.
STREAM_ALGORITHM = "philox4x64 (numpy.random.Philox, keyed counter-based)"

#: Seed used when neither the caller nor the environment supplies one.
DEFAULT_SEED = 2718281828

_MASK32 = 0xFFFFFFFF
_MASK64 = 0xFFFFFFFFFFFFFFFF


class SweepConfigError(ValueError):
    """A sweep configuration is malformed."""


class GuaranteeViolationError(RuntimeError):
    """A violation turned up inside a region the guarantee table marks proven.

    Either the implementation or the guarantee table is wrong, and a report
    that contradicts its own labels would be worse than no report, so the
    sweep aborts loudly with the offending cell and trial.
    """


class ReproductionError(RuntimeError):
    """The built-in reference counterexamples failed to reproduce."""


class Verdict(Enum):
    NO_VIOLATION_FOUND = "no-violation-found"
    VIOLATION_FOUND = "violation-found"
    THEOREM_GUARANTEED = "theorem-guaranteed"


@dataclass(frozen=True)
class ReferencePair:
    """A hard-coded pair with known check values at (2, 3)."""

    name: str
    p: ProbabilityDistribution
    q: ProbabilityDistribution
    violates: PropertyKind
    expected_meet: tuple[float, ...]
    expected_join: tuple[float, ...]
    # S values at (alpha, beta) = (2, 3), order: p, q, meet, join
    expected_values: tuple[float, float, float, float]
    expected_margin: float


def _ref(name, p, q, violates, meet_w, join_w, values, margin):
    return ReferencePair(
        name,
        make_distribution(p),
        make_distribution(q),
        violates,
        meet_w,
        join_w,
        values,
        margin,
    )


#: Breaks supermodularity at (2, 3): the pair's entropies sum to 0.8704 but
#: the meet and join entropies only to 0.8700.
KNOWN_SUPERMODULARITY_VIOLATION = _ref(
    "reference-pair-1",
    (0.5, 0.3, 0.1, 0.1),
    (0.4, 0.4, 0.2, 0.0),
    PropertyKind.SUPERMODULAR,
    (0.4, 0.4, 0.1, 0.1),
    (0.5, 0.3, 0.2, 0.0),
    (0.4352, 0.4352, 0.4422, 0.4278),
    -0.0004,
)

#: Breaks submodularity at (2, 3): 0.8826875 on the pair side against
#: 0.8883875 on the lattice side.
KNOWN_SUBMODULARITY_VIOLATION = _ref(
    "reference-pair-2",
    (0.5, 0.2, 0.2, 0.1),
    (0.4, 0.4, 0.15, 0.05),
    PropertyKind.SUBMODULAR,
    (0.4, 0.3, 0.2, 0.1),
    (0.5, 0.3, 0.15, 0.05),
    (0.4422, 0.4404875, 0.455, 0.4333875),
    -0.0057,
)

REFERENCE_PAIRS = (KNOWN_SUPERMODULARITY_VIOLATION, KNOWN_SUBMODULARITY_VIOLATION)


def trial_stream(seed: int, cell_index: int, trial_index: int) -> np.random.Generator:
    """The counter-based stream for one trial, independent of all others."""
    key = np.array(
        [
            seed & _MASK64,
            ((cell_index & _MASK32) << 32) | (trial_index & _MASK32),
        ],
        dtype=np.uint64,
    )
    return np.random.Generator(np.random.Philox(key=key))


def sample_simplex(n: int, stream: np.random.Generator) -> ProbabilityDistribution:
    """One draw from the flat (uniform) distribution on the n-simplex.

    Normalized unit exponentials, sorted non-increasingly.
    """
    if n < 1:
        raise ValueError("need n >= 1")
    draws = stream.standard_exponential(n)
    weights = sorted((draws / draws.sum()).tolist(), reverse=True)
    return make_distribution(weights)


@dataclass(frozen=True)
class CounterexampleRecord:
    """A violating pair with enough provenance to replay it exactly.

    ``source`` is ``"random"`` for sampled pairs (then seed, cell and trial
    identify the stream) or the name of a built-in reference pair.
    Re-running the check on the stored vectors reproduces lhs, rhs and
    margin bit for bit.
    """

    kind: PropertyKind
    params: EntropyParams
    p: ProbabilityDistribution
    q: ProbabilityDistribution
    meet: ProbabilityDistribution
    join: ProbabilityDistribution | None
    lhs: float
    rhs: float
    margin: float
    seed: int | None
    cell_index: int | None
    trial_index: int | None
    source: str

    @classmethod
    def from_check(
        cls,
        check: PropertyCheckRecord,
        *,
        seed: int | None,
        cell_index: int | None,
        trial_index: int | None,
        source: str,
    ) -> "CounterexampleRecord":
        return cls(
            kind=check.kind,
            params=check.params,
            p=check.p,
            q=check.q,
            meet=check.meet,
            join=check.join,
            lhs=check.lhs,
            rhs=check.rhs,
            margin=check.margin,
            seed=seed,
            cell_index=cell_index,
            trial_index=trial_index,
            source=source,
        )

    def to_json_dict(self) -> dict:
        return {
            "kind": self.kind.value,
            "params": self.params.to_json_dict(),
            "p": self.p.weights_json(),
            "q": self.q.weights_json(),
            "meet": self.meet.weights_json(),
            "join": self.join.weights_json() if self.join is not None else None,
            "lhs": self.lhs,
            "rhs": self.rhs,
            "margin": self.margin,
            "seed": self.seed,
            "cell_index": self.cell_index,
            "trial_index": self.trial_index,
            "source": self.source,
        }


def theorem_guaranteed(kind: PropertyKind, alpha: float, beta: float) -> bool:
    """Whether (alpha, beta) lies in a region where ``kind`` is proven.

    Subadditivity holds for alpha >= 0, beta >= 1; superadditivity for
    alpha < 0, beta <= 1; supermodularity for alpha > 0, beta <= alpha.
    Boundaries are inclusive.  Everything else is treated as open territory
    and only ever reported empirically.
    """
    if kind is PropertyKind.SUBADDITIVE:
        return alpha >= 0.0 and beta >= 1.0
    if kind is PropertyKind.SUPERADDITIVE:
        return alpha < 0.0 and beta <= 1.0
    if kind is PropertyKind.SUPERMODULAR:
        return alpha > 0.0 and beta <= alpha
    return False


@dataclass(frozen=True)
class CellResult:
    worst_margin: float
    counterexample: CounterexampleRecord | None
    trials: int


def _run_cell(
    kind: PropertyKind,
    params: EntropyParams,
    dims: Sequence[int],
    trials: int,
    seed: int,
    cell_index: int,
    tolerance: float,
) -> CellResult:
    """Run one (params, property) cell.

    Trials 0 and 1 are the reference pairs whenever the order is
    non-negative (they contain a zero weight, so negative orders skip the
    injection); the rest are fresh samples with the dimension cycling
    through ``dims``.
    """
    inject = params.alpha >= 0.0 and not math.isinf(params.alpha)
    worst = math.inf
    found: CounterexampleRecord | None = None
    for t in range(trials):
        if inject and t < len(REFERENCE_PAIRS):
            ref = REFERENCE_PAIRS[t]
            p, q, source = ref.p, ref.q, ref.name
        else:
            n = dims[t % len(dims)]
            stream = trial_stream(seed, cell_index, t)
            p = sample_simplex(n, stream)
            q = sample_simplex(n, stream)
            source = "random"
        check = run_check(kind, p, q, params, tolerance=tolerance)
        if check.margin < worst:
            worst = check.margin
        if found is None and check.margin < -tolerance:
            found = CounterexampleRecord.from_check(
                check, seed=seed, cell_index=cell_index, trial_index=t, source=source
            )
    return CellResult(worst, found, trials)


def find_counterexample(
    kind: PropertyKind,
    params: EntropyParams,
    n: int,
    trials: int,
    seed: int = DEFAULT_SEED,
    *,
    tolerance: float = CHECK_TOL,
) -> CounterexampleRecord | None:
    """Search ``trials`` random n-dimensional pairs for a violation.

    Returns the first violating pair found, or None.  The reference pairs
    lead the trial order, so the known breakdowns at (2, 3) are found
    independent of seed.
    """
    if trials < 1:
        raise ValueError("need trials >= 1")
    result = _run_cell(kind, params, (n,), trials, seed, 0, tolerance)
    return result.counterexample


def verify_paper_counterexamples(
    tolerance: float = 1e-12,
) -> tuple[CounterexampleRecord, CounterexampleRecord]:
    """Re-derive the two reference pairs and check every stored number.

    For each pair the lattice vectors must match entrywise and the four
    entropy values, both sums and the margin must match to ``tolerance``.
    Raises :class:`ReproductionError` on any mismatch; returns the two
    replayed records otherwise.
    """
    params = EntropyParams.make(2.0, 3.0)
    records = []
    for ref in REFERENCE_PAIRS:
        check = run_check(ref.violates, ref.p, ref.q, params)
        problems: list[str] = []

        def vec_close(got: ProbabilityDistribution, want: tuple[float, ...]) -> bool:
            return got.dim == len(want) and all(
                abs(g - w) <= tolerance for g, w in zip(got.weights, want)
            )

        if not vec_close(check.meet, ref.expected_meet):
            problems.append(f"meet {check.meet.weights} != {ref.expected_meet}")
        if check.join is None or not vec_close(check.join, ref.expected_join):
            got = None if check.join is None else check.join.weights
            problems.append(f"join {got} != {ref.expected_join}")
        s_p, s_q, s_meet, s_join = ref.expected_values
        pairs = [
            ("S(p)", sharma_mittal(ref.p, params), s_p),
            ("S(q)", sharma_mittal(ref.q, params), s_q),
            ("S(meet)", sharma_mittal(check.meet, params), s_meet),
            ("S(join)", sharma_mittal(check.join, params) if check.join else math.nan, s_join),
            ("margin", check.margin, ref.expected_margin),
        ]
        for label, got_v, want_v in pairs:
            if not abs(got_v - want_v) <= tolerance:
                problems.append(f"{label} = {got_v!r}, expected {want_v!r}")
        if check.holds:
            problems.append(f"expected a violation of {ref.violates.value}, margin {check.margin!r}")
        if problems:
            raise ReproductionError(f"{ref.name}: " + "; ".join(problems))
        records.append(
            CounterexampleRecord.from_check(
                check, seed=None, cell_index=None, trial_index=None, source=ref.name
            )
        )
    return records[0], records[1]


@dataclass(frozen=True)
class SweepConfig:
    """Grid description for :func:`sweep`.

    Grids are finite ascending sequences; dims are the pair dimensions the
    trials cycle through.  Properties are stored in a canonical order so
    that equal configs always produce identical reports.
    """

    alpha_grid: tuple[float, ...]
    beta_grid: tuple[float, ...]
    dims: tuple[int, ...] = (2, 3, 4, 6, 8)
    trials_per_cell: int = 10_000
    seed: int = DEFAULT_SEED
    properties: tuple[PropertyKind, ...] = (
        PropertyKind.SUBADDITIVE,
        PropertyKind.SUPERADDITIVE,
        PropertyKind.GENERALIZED_SUB_SUPER,
        PropertyKind.SUPERMODULAR,
        PropertyKind.SUBMODULAR,
    )

    def __post_init__(self) -> None:
        for name, grid in (("alpha_grid", self.alpha_grid), ("beta_grid", self.beta_grid)):
            if not grid:
                raise SweepConfigError(f"{name} must not be empty")
            if any(b <= a for a, b in zip(grid, grid[1:])):
                raise SweepConfigError(f"{name} must be strictly ascending: {grid}")
            if any(not math.isfinite(v) for v in grid):
                raise SweepConfigError(f"{name} must be finite: {grid}")
        if not self.dims:
            raise SweepConfigError("dims must not be empty")
        if any(int(d) != d or d < 2 for d in self.dims):
            raise SweepConfigError(f"dims must be integers >= 2: {self.dims}")
        if len(set(self.dims)) != len(self.dims) or tuple(sorted(self.dims)) != tuple(self.dims):
            raise SweepConfigError(f"dims must be strictly ascending: {self.dims}")
        if self.trials_per_cell < 1:
            raise SweepConfigError("trials_per_cell must be >= 1")
        if not self.properties:
            raise SweepConfigError("properties must not be empty")
        canonical = tuple(k for k in PropertyKind if k in set(self.properties))
        if canonical != self.properties:
            object.__setattr__(self, "properties", canonical)

    def to_json_dict(self) -> dict:
        return {
            "alpha_grid": list(self.alpha_grid),
            "beta_grid": list(self.beta_grid),
            "dims": list(self.dims),
            "trials_per_cell": self.trials_per_cell,
            "seed": self.seed,
            "properties": [k.value for k in self.properties],
        }


@dataclass(frozen=True)
class CellReport:
    alpha: float
    beta: float
    kind: PropertyKind
    verdict: Verdict
    guaranteed: bool
    worst_margin: float
    trials: int
    seed: int
    counterexample: CounterexampleRecord | None

    def to_json_dict(self) -> dict:
        return {
            "alpha": self.alpha,
            "beta": self.beta,
            "property": self.kind.value,
            "verdict": self.verdict.value,
            "guaranteed": self.guaranteed,
            "worst_margin": self.worst_margin,
            "trials": self.trials,
            "seed": self.seed,
            "counterexample": (
                self.counterexample.to_json_dict() if self.counterexample else None
            ),
        }


@dataclass(frozen=True)
class RegionSweepReport:
    """All cell outcomes of one sweep, plus the reproduction header."""

    algorithm: str
    seed: int
    config: SweepConfig
    cells: tuple[CellReport, ...]

    def to_json_dict(self) -> dict:
        return {
            "algorithm": self.algorithm,
            "seed": self.seed,
            "config": self.config.to_json_dict(),
            "cells": [c.to_json_dict() for c in self.cells],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict(), indent=2, sort_keys=False) + "\n"

    def to_csv(self) -> str:
        out = io.StringIO()
        out.write(f"# generator: {self.algorithm}; seed: {self.seed}\n")
        out.write("alpha,beta,property,verdict,worst_margin,trials,seed\n")
        for c in self.cells:
            out.write(
                f"{c.alpha!r},{c.beta!r},{c.kind.value},{c.verdict.value},"
                f"{c.worst_margin!r},{c.trials},{c.seed}\n"
            )
        return out.getvalue()


def sweep(config: SweepConfig, *, tolerance: float = CHECK_TOL) -> RegionSweepReport:
    """Run every (alpha, beta, property) cell of the grid.

    Cells are enumerated in grid order with a stable cell index, and each
    trial's randomness is keyed by (seed, cell, trial), so the report is
    deterministic no matter how the work would be scheduled.  A violation
    inside a guaranteed region aborts with :class:`GuaranteeViolationError`.
    """
    cells: list[CellReport] = []
    cell_index = 0
    for alpha in config.alpha_grid:
        for beta in config.beta_grid:
            params = EntropyParams.make(alpha, beta)
            for kind in config.properties:
                result = _run_cell(
                    kind,
                    params,
                    config.dims,
                    config.trials_per_cell,
                    config.seed,
                    cell_index,
                    tolerance,
                )
                guaranteed = theorem_guaranteed(kind, alpha, beta)
                if result.counterexample is not None:
                    if guaranteed:
                        raise GuaranteeViolationError(
                            f"violation in guaranteed region: {kind.value} at "
                            f"alpha={alpha}, beta={beta}, trial "
                            f"{result.counterexample.trial_index}, margin "
                            f"{result.counterexample.margin!r}; this is a bug"
                        )
                    verdict = Verdict.VIOLATION_FOUND
                elif guaranteed:
                    verdict = Verdict.THEOREM_GUARANTEED
                else:
                    verdict = Verdict.NO_VIOLATION_FOUND
                cells.append(
                    CellReport(
                        alpha=float(alpha),
                        beta=float(beta),
                        kind=kind,
                        verdict=verdict,
                        guaranteed=guaranteed,
                        worst_margin=result.worst_margin,
                        trials=result.trials,
                        seed=config.seed,
                        counterexample=result.counterexample,
                    )
                )
                cell_index += 1
    return RegionSweepReport(STREAM_ALGORITHM, config.seed, config, tuple(cells))


def _parse_grid(text: str, *, as_int: bool = False) -> tuple:
    """A grid literal: ``start:step:end`` (end inclusive) or a comma list."""
    text = text.strip()
    if ":" in text:
        parts = text.split(":")
        if len(parts) != 3:
            raise SweepConfigError(f"grid ranges need start:step:end, got {text!r}")
        try:
            start, step, end = (float(x) for x in parts)
        except ValueError as err:
            raise SweepConfigError(f"bad grid range {text!r}") from err
        if step <= 0:
            raise SweepConfigError(f"grid step must be positive in {text!r}")
        if end < start - 1e-9:
            raise SweepConfigError(f"grid end before start in {text!r}")
        count = int(round((end - start) / step)) + 1
        values = [start + i * step for i in range(count)]
        values = [v for v in values if v <= end + 1e-9]
    else:
        try:
            values = [float(x) for x in text.split(",") if x.strip()]
        except ValueError as err:
            raise SweepConfigError(f"bad grid list {text!r}") from err
        if not values:
            raise SweepConfigError(f"empty grid {text!r}")
    if as_int:
        ints = []
        for v in values:
            if int(v) != v:
                raise SweepConfigError(f"expected integers, got {v!r}")
            ints.append(int(v))
        return tuple(ints)
    return tuple(values)


def parse_sweep_config(text: str, *, default_seed: int | None = None) -> SweepConfig:
    """Parse the flat key-value sweep format.

    One ``key = value`` pair per line, ``#`` comments allowed.  Keys mirror
    the SweepConfig fields; grids accept ``start:step:end`` or comma lists,
    properties are a comma list of kind names.  A seed in the file wins over
    ``default_seed``, which wins over the built-in default.
    """
    data: dict[str, str] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise SweepConfigError(f"line {lineno}: expected key = value, got {raw!r}")
        key, _, value = line.partition("=")
        key = key.strip()
        value = value.strip()
        if key in data:
            raise SweepConfigError(f"line {lineno}: duplicate key {key!r}")
        data[key] = value

    known = {"alpha_grid", "beta_grid", "dims", "trials_per_cell", "seed", "properties"}
    unknown = set(data) - known
    if unknown:
        raise SweepConfigError(f"unknown keys: {sorted(unknown)}")
    for required in ("alpha_grid", "beta_grid"):
        if required not in data:
            raise SweepConfigError(f"missing required key {required!r}")

    kwargs: dict = {
        "alpha_grid": _parse_grid(data["alpha_grid"]),
        "beta_grid": _parse_grid(data["beta_grid"]),
    }
    if "dims" in data:
        kwargs["dims"] = _parse_grid(data["dims"], as_int=True)
    if "trials_per_cell" in data:
        try:
            kwargs["trials_per_cell"] = int(data["trials_per_cell"])
        except ValueError as err:
            raise SweepConfigError("trials_per_cell must be an integer") from err
    if "seed" in data:
        try:
            kwargs["seed"] = int(data["seed"])
        except ValueError as err:
            raise SweepConfigError("seed must be an integer") from err
    elif default_seed is not None:
        kwargs["seed"] = int(default_seed)
    if "properties" in data:
        names = [x.strip() for x in data["properties"].split(",") if x.strip()]
        by_value = {k.value: k for k in PropertyKind}
        try:
            kwargs["properties"] = tuple(by_value[n] for n in names)
        except KeyError as err:
            raise SweepConfigError(
                f"unknown property {err.args[0]!r}; choose from {sorted(by_value)}"
            ) from err
    return SweepConfig(**kwargs)
