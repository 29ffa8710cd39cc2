"""Simulation pipeline: encode with a generator matrix, corrupt, list decode, recover.

Every trial draws from its own SplitMix64 stream seeded by the master
generator, so any failing trial can be replayed from its seed alone.
"""

from __future__ import annotations

import json
import logging
from dataclasses import dataclass, field as dc_field
from fractions import Fraction
from pathlib import Path

import numpy as np

from . import fileio
from .code import (
    RsCodeSpec,
    build_code,
    build_generator_matrix,
    build_grs_generator,
    encode_generator,
    grs_multipliers,
    narrow_sense_transform,
)
from .decoding import DecoderConfig, list_decode
from .errors import FormatError, InstanceTooLarge, ParameterTooSmall, RecoveryMismatch
from .field import Field, count_multiplications
from .gfft import GfftPlan
from .linalg import mat_mul, rank
from .recovery import RecoveryTransform, precompute, recover_by_scaling, recover_message
from .rng import SplitMix64

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class ErrorModel:
    """Either an exact error weight or an independent per-symbol error probability."""

    weight: int | None = None
    probability: float | None = None

    @classmethod
    def parse(cls, text: str) -> ErrorModel:
        text = str(text).strip()
        if text.startswith("p="):
            p = float(text[2:])
            if not 0.0 <= p <= 1.0:
                raise ValueError(f"error probability {p} outside [0, 1]")
            return cls(probability=p)
        t = int(text)
        if t < 0:
            raise ValueError("error weight must be nonnegative")
        return cls(weight=t)

    def __str__(self) -> str:
        return f"p={self.probability}" if self.probability is not None else str(self.weight)


def corrupt(field: Field, word, model: ErrorModel, rng: SplitMix64) -> np.ndarray:
    """Replace chosen positions by uniformly random *different* symbols."""
    out = np.array(word, dtype=np.int64)
    n = out.size
    if model.probability is not None:
        positions = [i for i in range(n) if rng.random() < model.probability]
    else:
        if model.weight > n:
            raise ValueError(f"error weight {model.weight} exceeds length {n}")
        positions = rng.sample(n, model.weight)
    for i in positions:
        out[i] ^= 1 + rng.randbelow(field.q - 1)
    return out


def random_message(field: Field, k: int, rng: SplitMix64) -> np.ndarray:
    return np.array([rng.randbelow(field.q) for _ in range(k)], dtype=np.int64)


def random_invertible(field: Field, k: int, rng: SplitMix64) -> np.ndarray:
    while True:
        a = np.array([[rng.randbelow(field.q) for _ in range(k)] for _ in range(k)],
                     dtype=np.int64)
        if rank(field, a) == k:
            return a


@dataclass(frozen=True)
class ExperimentConfig:
    field: Field
    n: int
    k: int
    b: int = 1
    gen: str = "banded"
    decoder: DecoderConfig = DecoderConfig()
    errors: ErrorModel = ErrorModel(weight=0)
    trials: int = 100
    seed: int = 0

    def code(self) -> RsCodeSpec:
        return build_code(self.field, self.n, self.k, self.b)


@dataclass(frozen=True)
class GeneratorChoice:
    matrix: np.ndarray
    grs_multipliers: np.ndarray | None = None


def resolve_generator(cfg: ExperimentConfig, spec: RsCodeSpec) -> GeneratorChoice:
    """Build the generator matrix named by ``cfg.gen``.

    ``banded``, ``random:<seed>`` (random invertible A times banded G),
    ``grs:random:<seed>`` (GRS form with a random scale), ``grs:<vfile>``,
    or a path to a matrix file.
    """
    src = cfg.gen
    fld = spec.field
    if src == "banded":
        return GeneratorChoice(build_generator_matrix(spec))
    if src.startswith("random:"):
        rng = SplitMix64(int(src.split(":", 1)[1], 0))
        a = random_invertible(fld, spec.k, rng)
        return GeneratorChoice(mat_mul(fld, a, build_generator_matrix(spec)))
    if src.startswith("grs:"):
        rest = src[4:]
        if rest.startswith("random"):
            seed = int(rest.split(":", 1)[1], 0) if ":" in rest else cfg.seed
            scale = 1 + SplitMix64(seed).randbelow(fld.q - 1)
            v = grs_multipliers(spec, scale)
        elif rest == "ones":
            v = np.ones(spec.n, dtype=np.int64)
        else:
            lines = [ln for ln in Path(rest).read_text().splitlines()
                     if ln.strip() and not ln.startswith("#")]
            if len(lines) != 1:
                raise FormatError("GRS multiplier file must hold exactly one vector")
            v = fileio.parse_vector(fld, lines[0])
        return GeneratorChoice(build_grs_generator(fld, spec.n, spec.k, v), v)
    return GeneratorChoice(fileio.parse_matrix(fld, Path(src).read_text()))


@dataclass(frozen=True)
class TrialResult:
    seed: int
    success: bool
    list_size: int
    aborted: bool
    counts: dict[str, int]


@dataclass
class TrialReport:
    trials: int = 0
    recovery_successes: int = 0
    list_elements: int = 0
    aborted: int = 0
    mult_counts: dict[str, int] = dc_field(default_factory=dict)
    failures: list[int] = dc_field(default_factory=list)

    @property
    def average_list_size(self) -> Fraction:
        return Fraction(self.list_elements, self.trials) if self.trials else Fraction(0)

    def add(self, r: TrialResult) -> None:
        self.trials += 1
        self.recovery_successes += r.success
        self.list_elements += r.list_size
        self.aborted += r.aborted
        for key, val in r.counts.items():
            self.mult_counts[key] = self.mult_counts.get(key, 0) + val
        if not r.success:
            self.failures.append(r.seed)

    def merge(self, other: TrialReport) -> TrialReport:
        out = TrialReport(
            self.trials + other.trials,
            self.recovery_successes + other.recovery_successes,
            self.list_elements + other.list_elements,
            self.aborted + other.aborted,
            dict(self.mult_counts),
            sorted(self.failures + other.failures),
        )
        for key, val in other.mult_counts.items():
            out.mult_counts[key] = out.mult_counts.get(key, 0) + val
        return out

    def as_dict(self) -> dict:
        avg = self.average_list_size
        return {
            "trials": self.trials,
            "recovery_successes": self.recovery_successes,
            "list_elements": self.list_elements,
            "average_list_size": f"{avg.numerator}/{avg.denominator}",
            "aborted": self.aborted,
            "mult_counts": dict(sorted(self.mult_counts.items())),
            "failures": sorted(self.failures),
        }

    def to_text(self) -> str:
        d = self.as_dict()
        lines = [
            f"trials={d['trials']}",
            f"recovery_successes={d['recovery_successes']}",
            f"list_elements={d['list_elements']}",
            f"average_list_size={d['average_list_size']}",
            f"average_list_size_float={float(self.average_list_size):.6f}",
            f"aborted={d['aborted']}",
        ]
        lines += [f"mult_counts.{k}={v}" for k, v in d["mult_counts"].items()]
        lines.append("failures=" + ",".join(str(s) for s in d["failures"]))
        return "\n".join(lines) + "\n"

    def to_json(self) -> str:
        return json.dumps(self.as_dict(), indent=2, sort_keys=True) + "\n"


def trial_seeds(seed: int, trials: int) -> list[int]:
    master = SplitMix64(seed)
    return [master.next_u64() for _ in range(trials)]


class Pipeline:
    """Precomputed state shared by all trials of one experiment."""

    def __init__(self, cfg: ExperimentConfig, transform: RecoveryTransform | None = None):
        self.cfg = cfg
        self.spec = cfg.code()
        self.plan = GfftPlan.build(self.spec.field)
        self.generator = resolve_generator(cfg, self.spec)
        self.transform = transform or precompute(self.spec, self.generator.matrix, self.plan)

    def decode_and_recover(self, received, counts: dict[str, int]) -> list[tuple[int, ...]]:
        """Algorithm steps 1-3 for one received word."""
        with count_multiplications() as c:
            rbar = narrow_sense_transform(self.spec, received)
        counts["w_transform"] = counts.get("w_transform", 0) + c.total
        with count_multiplications() as c:
            out = list_decode(self.spec, rbar, self.cfg.decoder)
        counts["decode"] = counts.get("decode", 0) + c.total
        recovered = []
        with count_multiplications() as c:
            for f in out.candidates:
                recovered.append(tuple(recover_message(self.transform, f).tolist()))
        counts["recovery"] = counts.get("recovery", 0) + c.total
        return recovered

    def run_trial(self, seed: int) -> TrialResult:
        rng = SplitMix64(seed)
        fld = self.spec.field
        msg = random_message(fld, self.spec.k, rng)
        received = corrupt(fld, encode_generator(self.spec, self.generator.matrix, msg),
                           self.cfg.errors, rng)
        counts: dict[str, int] = {}
        try:
            recovered = self.decode_and_recover(received, counts)
        except (InstanceTooLarge, ParameterTooSmall) as exc:
            log.warning("trial seed=%d aborted: %s", seed, exc)
            return TrialResult(seed, False, 0, True, counts)
        return TrialResult(seed, tuple(msg.tolist()) in recovered, len(recovered), False, counts)


def run_roundtrip(cfg: ExperimentConfig, transform: RecoveryTransform | None = None) -> TrialReport:
    pipe = Pipeline(cfg, transform)
    report = TrialReport()
    for seed in trial_seeds(cfg.seed, cfg.trials):
        report.add(pipe.run_trial(seed))
    report.failures.sort()
    return report


@dataclass
class CompareReport:
    scaling: TrialReport
    transform: TrialReport
    agreements: int = 0

    def to_text(self) -> str:
        lines = [f"agreements={self.agreements}"]
        for name, rep in (("scaling", self.scaling), ("transform", self.transform)):
            lines += [f"{name}.{ln}" for ln in rep.to_text().splitlines()]
        return "\n".join(lines) + "\n"

    def to_json(self) -> str:
        return json.dumps({"agreements": self.agreements,
                           "scaling": self.scaling.as_dict(),
                           "transform": self.transform.as_dict()},
                          indent=2, sort_keys=True) + "\n"


def run_compare_scaling(cfg: ExperimentConfig) -> CompareReport:
    """Run the column-scaling method and the B-matrix method on the same trials.

    Raises RecoveryMismatch if the two recovered message sets ever differ.
    """
    pipe = Pipeline(cfg)
    v = pipe.generator.grs_multipliers
    if v is None:
        raise ValueError("compare-scaling needs a GRS generator (--gen grs:...)")
    fld = pipe.spec.field
    scaling, transform = TrialReport(), TrialReport()
    agreements = 0
    for seed in trial_seeds(cfg.seed, cfg.trials):
        rng = SplitMix64(seed)
        msg = random_message(fld, pipe.spec.k, rng)
        received = corrupt(fld, encode_generator(pipe.spec, pipe.generator.matrix, msg),
                           cfg.errors, rng)
        target = tuple(msg.tolist())

        s_counts: dict[str, int] = {}
        with count_multiplications() as c:
            scaled = recover_by_scaling(fld, v, received)
        s_counts["scaling"] = c.total
        with count_multiplications() as c:
            out = list_decode(pipe.spec, scaled, cfg.decoder)
        s_counts["decode"] = c.total
        s_msgs = sorted(out.candidates)

        t_counts: dict[str, int] = {}
        t_msgs = sorted(pipe.decode_and_recover(received, t_counts))

        if s_msgs != t_msgs:
            raise RecoveryMismatch(f"trial seed={seed}: scaling {s_msgs} vs transform {t_msgs}")
        agreements += 1
        scaling.add(TrialResult(seed, target in s_msgs, len(s_msgs), False, s_counts))
        transform.add(TrialResult(seed, target in t_msgs, len(t_msgs), False, t_counts))
    return CompareReport(scaling, transform, agreements)
