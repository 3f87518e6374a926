"""Randomized constancy sweeps at fixed pole orders.

A sweep draws curves with prescribed pole orders -- distinct uniformly
random finite pole locations, uniformly random coefficients with nonzero
leading terms and no constant term at finite poles -- and computes the
a-number and p-rank of each.  When p = 1 mod L the a-number must come out
the same every time, equal to the closed-form value; the sweep makes that
an executable check.  Outside that regime the sweep reports the observed
distribution without a pass/fail verdict.

Sampling is splittable and reproducible: sample i uses its own
random.Random seeded with the first 8 bytes of sha256("<seed>:<i>"), so
reports are byte-identical for equal (config, seed) and samples could be
drawn in any order or in parallel without changing the output.
"""

from __future__ import annotations

import hashlib
import json
import random
from dataclasses import dataclass

from .cartier import cartier_matrix
from .curve import CurveSpec, PoleDatum, validate
from .errors import ConditionNotSatisfied, FieldTooSmall
from .finite_field import GF, Field
from .invariants import p_rank_stable, rank, theorem_a_value

GENERATOR_NAME = "sha256-split/mt19937"


def child_seed(seed: int, index: int) -> int:
    digest = hashlib.sha256(f"{seed}:{index}".encode()).digest()
    return int.from_bytes(digest[:8], "big")


def random_curve(field: Field, orders, rng: random.Random) -> CurveSpec:
    """One curve with the given pole orders, drawn uniformly."""
    orders = list(orders)
    m = len(orders) - 1
    if field.order < m:
        raise FieldTooSmall(
            f"{field} has {field.order} elements, fewer than {m} finite poles"
        )
    inf_coeffs = [field.random_element(rng) for _ in range(orders[0])]
    inf_coeffs.append(field.random_element(rng, nonzero=True))
    poles = [PoleDatum.at_infinity(field, inf_coeffs)]
    locations = [field.from_counter(n) for n in rng.sample(range(field.order), m)]
    for d, loc in zip(orders[1:], locations):
        coeffs = [field.random_element(rng) for _ in range(d - 1)]
        coeffs.append(field.random_element(rng, nonzero=True))
        poles.append(PoleDatum.finite(field, loc, coeffs))
    return CurveSpec(field, tuple(poles))


@dataclass(frozen=True)
class SweepConfig:
    p: int
    field_degree: int
    orders: tuple[int, ...]
    samples: int
    seed: int


@dataclass(frozen=True)
class SampleResult:
    index: int
    seed: int
    a: int
    s: int
    g: int
    rank: int


@dataclass(frozen=True)
class SweepReport:
    config: SweepConfig
    generator: str
    theorem_value: int | None
    samples: tuple[SampleResult, ...]
    distinct_a: tuple[int, ...]
    passed: bool | None

    def csv_lines(self) -> list[str]:
        lines = ["sample,seed,a,s,g,rank"]
        lines.extend(
            f"{r.index},{r.seed},{r.a},{r.s},{r.g},{r.rank}" for r in self.samples
        )
        return lines

    def render(self) -> str:
        cfg = self.config
        orders = ",".join(str(d) for d in cfg.orders)
        head = [
            f"sweep p={cfg.p} field=GF({cfg.p}^{cfg.field_degree}) "
            f"orders={orders} samples={cfg.samples} seed={cfg.seed}",
            f"generator: {self.generator}",
            f"distinct a values: {sorted(self.distinct_a)}",
            f"theorem a: {self.theorem_value}",
            f"pass: {self.passed}",
        ]
        return "\n".join(head + self.csv_lines()) + "\n"

    def to_json(self) -> dict:
        return {
            "p": self.config.p,
            "field_degree": self.config.field_degree,
            "orders": list(self.config.orders),
            "samples": self.config.samples,
            "seed": self.config.seed,
            "generator": self.generator,
            "theorem_a": self.theorem_value,
            "distinct_a": sorted(self.distinct_a),
            "pass": self.passed,
            "results": [
                {
                    "sample": r.index,
                    "seed": r.seed,
                    "a": r.a,
                    "s": r.s,
                    "g": r.g,
                    "rank": r.rank,
                }
                for r in self.samples
            ],
        }

    def render_json(self) -> str:
        return json.dumps(self.to_json(), indent=2) + "\n"


def run_sweep(config: SweepConfig) -> SweepReport:
    """Draw the configured samples and check a-number constancy."""
    if config.samples < 1:
        raise ValueError("sample count must be >= 1")
    field = GF(config.p, config.field_degree)
    try:
        theorem = theorem_a_value(config.p, config.orders)
    except ConditionNotSatisfied:
        theorem = None
    results = []
    for i in range(config.samples):
        seed_i = child_seed(config.seed, i)
        spec = random_curve(field, config.orders, random.Random(seed_i))
        inv = validate(spec)
        M = cartier_matrix(spec, "local")
        r = rank(M)
        results.append(
            SampleResult(
                index=i,
                seed=seed_i,
                a=inv.g - r,
                s=p_rank_stable(M),
                g=inv.g,
                rank=r,
            )
        )
    distinct = tuple(sorted({r.a for r in results}))
    passed = None
    if theorem is not None:
        passed = len(distinct) == 1 and distinct[0] == theorem
    return SweepReport(
        config=config,
        generator=GENERATOR_NAME,
        theorem_value=theorem,
        samples=tuple(results),
        distinct_a=distinct,
        passed=passed,
    )
