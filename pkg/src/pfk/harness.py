"""Verification campaigns for the edge-connectivity factor theorems.

Each instance gets a :class:`TheoremReport`. A report whose hypotheses all hold
but whose factor search fails is a defect; campaigns count defects and keep a
repro bundle for the smallest failing instance id.
"""

from __future__ import annotations

import json
import logging
import random
import time
from collections.abc import Iterable, Iterator
from dataclasses import asdict, dataclass, field
from pathlib import Path

from .connectivity import edge_connectivity
from .criteria import (
    BitGraph,
    _bits,
    delta_cap,
    min_parity_exists,
    search_delta_certificate,
    set_of,
    theorem4_delta,
)
from .factor import cap_f, find_min_parity_factor, verify_factor
from .generators import random_k_edge_connected, tight_family
from .graph import Graph

log = logging.getLogger(__name__)

EXHAUSTIVE_T_MAX_N = 14
SAMPLED_T = 1000


class ConfigError(ValueError):
    pass


@dataclass
class TheoremReport:
    instance: str
    mode: str
    m: int
    hypotheses: dict[str, bool]
    conclusion: bool | None  # None when the hypotheses fail and nothing is asserted
    factor: list[list[int]] | None = None
    violations: list[str] = field(default_factory=list)
    proof_step_violations: list[str] = field(default_factory=list)
    seconds: float = 0.0

    @property
    def hypotheses_hold(self) -> bool:
        return all(self.hypotheses.values())

    @property
    def defect(self) -> bool:
        if self.proof_step_violations:
            return True
        return self.hypotheses_hold and (not self.conclusion or bool(self.violations))


def _check_factor(g: Graph, m: int, mode: str, report: TheoremReport) -> None:
    factor = find_min_parity_factor(g, (m,) * g.n)
    report.conclusion = factor is not None
    if factor is None:
        return
    report.factor = [list(e) for e in factor.edges]
    spec = cap_f(g, (m,) * g.n)
    report.violations = verify_factor(g, factor.edges, spec)
    want = 0 if mode == "even" else 1
    for v, d in enumerate(factor.degrees):
        if d % 2 != want or d < m:
            report.violations.append(f"vertex {v}: factor degree {d} is not {mode} and >= {m}")


def check_theorem_even(g: Graph, m: int, instance: str = "", probe: bool = False) -> TheoremReport:
    """lambda >= m and delta >= m+1 should force an even factor with degrees >= m."""
    if m <= 0 or m % 2:
        raise ValueError(f"even theorem needs an even positive m, got {m}")
    start = time.perf_counter()
    lam = edge_connectivity(g)[0] if g.n >= 2 else 0
    report = TheoremReport(
        instance, "even", m,
        {"m_even": True, "edge_connectivity>=m": lam >= m, "min_degree>=m+1": g.min_degree >= m + 1},
        None,
    )
    if report.hypotheses_hold or probe:
        _check_factor(g, m, "even", report)
    report.seconds = time.perf_counter() - start
    return report


def check_theorem_odd(g: Graph, m: int, instance: str = "", probe: bool = False) -> TheoremReport:
    """lambda >= m+1 should force an odd factor with degrees >= m.

    Every component needs even order for an all-odd factor to exist, which the
    theorem leaves implicit; it is recorded as its own hypothesis.
    """
    if m <= 0 or m % 2 == 0:
        raise ValueError(f"odd theorem needs an odd positive m, got {m}")
    start = time.perf_counter()
    lam = edge_connectivity(g)[0] if g.n >= 2 else 0
    report = TheoremReport(
        instance, "odd", m,
        {"m_odd": True, "edge_connectivity>=m+1": lam >= m + 1, "even_order": g.n % 2 == 0},
        None,
    )
    if report.hypotheses_hold or probe:
        _check_factor(g, m, "odd", report)
    report.seconds = time.perf_counter() - start
    return report


# -- proof-step inequalities -------------------------------------------------


def sample_subsets(n: int, rng: random.Random, samples: int = SAMPLED_T) -> Iterator[int]:
    """Every subset mask when n <= 14, otherwise ``samples`` uniform random masks."""
    if n <= EXHAUSTIVE_T_MAX_N:
        yield from range(1 << n)
    else:
        for _ in range(samples):
            yield rng.getrandbits(n)


def _odd_components_masks(bg: BitGraph, T: int, weight_odd: int) -> list[int]:
    parity = bg.parity_to(T) ^ weight_odd
    return [c for c in bg.components(bg.full & ~T) if (c & parity).bit_count() & 1]


def proof_step_violations(g: Graph, m: int, mode: str, subsets: Iterable[int]) -> list[str]:
    """Check the counting steps of the even/odd theorem proofs on each T.

    even: sum_T d >= (m+1)|T| (Case 1) and e(C, T) >= m+1 for every m-odd
    component C (Case 2). odd: sum_T d >= max((m+1)|T|, (m+1) tau(T)).
    The caller is responsible for the theorem's hypotheses holding on ``g``.
    """
    bg = BitGraph(g)
    out = []
    for T in subsets:
        size = T.bit_count()
        dsum = sum(bg.deg[x] for x in _bits(T))
        if mode == "even":
            if dsum < (m + 1) * size:
                out.append(f"T={sorted(set_of(T))}: degree sum {dsum} < (m+1)|T|")
            for c in _odd_components_masks(bg, T, 0):
                cut = bg.edges_into(c, T)
                if cut < m + 1:
                    out.append(f"T={sorted(set_of(T))}: m-odd component {sorted(set_of(c))} has e(C,T)={cut} < m+1")
        else:
            tau = len(_odd_components_masks(bg, T, bg.full))
            if dsum < max((m + 1) * size, (m + 1) * tau):
                out.append(f"T={sorted(set_of(T))}: degree sum {dsum} < max((m+1)|T|, (m+1)tau) with tau={tau}")
    return out


# -- campaigns ---------------------------------------------------------------


@dataclass
class CampaignConfig:
    mode: str = "even"  # even | odd | tightness
    m_values: tuple[int, ...] = (2,)
    count: int = 200
    n_min: int = 6
    n_max: int = 12
    seed: int = 0
    extra: float = 0.15
    t_samples: int = SAMPLED_T
    proof_steps: bool = True
    repro_dir: str | None = None
    counts: tuple[int, ...] | None = None  # per-m override of ``count``

    def validate(self) -> None:
        if self.mode not in ("even", "odd", "tightness"):
            raise ConfigError(f"mode must be even, odd or tightness, got {self.mode!r}")
        if not self.m_values or any(m <= 0 for m in self.m_values):
            raise ConfigError(f"m values must be positive, got {self.m_values}")
        if self.mode in ("even", "tightness") and any(m % 2 for m in self.m_values):
            raise ConfigError(f"{self.mode} mode needs even m, got {self.m_values}")
        if self.mode == "odd" and any(m % 2 == 0 for m in self.m_values):
            raise ConfigError(f"odd mode needs odd m, got {self.m_values}")
        if self.counts is not None and len(self.counts) != len(self.m_values):
            raise ConfigError("counts must list one instance count per m value")
        if self.count < 0 or self.n_min < 2 or self.n_max < self.n_min:
            raise ConfigError(f"bad instance count or n range: {self.count}, {self.n_min}..{self.n_max}")

    @classmethod
    def from_mapping(cls, values: dict[str, str]) -> CampaignConfig:
        known = {f for f in cls.__dataclass_fields__}
        kwargs: dict = {}
        for key, raw in values.items():
            key = key.strip().replace("-", "_")
            if key == "m":
                key = "m_values"
            if key not in known:
                raise ConfigError(f"unknown config key {key!r}")
            raw = raw.strip()
            try:
                if key in ("m_values", "counts"):
                    kwargs[key] = tuple(int(x) for x in raw.replace(",", " ").split())
                elif key in ("count", "n_min", "n_max", "seed", "t_samples"):
                    kwargs[key] = int(raw)
                elif key == "extra":
                    kwargs[key] = float(raw)
                elif key == "proof_steps":
                    kwargs[key] = raw.lower() in ("1", "true", "yes", "on")
                else:
                    kwargs[key] = raw
            except ValueError:
                raise ConfigError(f"bad value for {key}: {raw!r}") from None
        cfg = cls(**kwargs)
        cfg.validate()
        return cfg


def parse_config(text: str) -> CampaignConfig:
    values = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ConfigError(f"line {lineno}: expected key=value, got {raw.strip()!r}")
        key, value = line.split("=", 1)
        values[key.strip()] = value
    return CampaignConfig.from_mapping(values)


@dataclass
class CampaignSummary:
    config: CampaignConfig
    reports: list[TheoremReport] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)
    repro: dict | None = None

    @property
    def passed(self) -> int:
        return sum(1 for r in self.reports if r.hypotheses_hold and not r.defect)

    @property
    def hypothesis_misses(self) -> int:
        return sum(1 for r in self.reports if not r.hypotheses_hold and not r.defect)

    @property
    def defects(self) -> int:
        return sum(1 for r in self.reports if r.defect)

    def table(self) -> str:
        rows = [f"{'instance':<28} {'hyp':>4} {'factor':>6} {'defect':>6} {'sec':>7}"]
        for r in self.reports:
            concl = "-" if r.conclusion is None else ("yes" if r.conclusion else "no")
            rows.append(
                f"{r.instance:<28} {'ok' if r.hypotheses_hold else 'miss':>4} {concl:>6} "
                f"{'YES' if r.defect else 'no':>6} {r.seconds:7.3f}"
            )
        rows.append(
            f"mode={self.config.mode} m={list(self.config.m_values)} instances={len(self.reports)} "
            f"passed={self.passed} hypothesis_misses={self.hypothesis_misses} defects={self.defects}"
        )
        rows.extend(f"note: {n}" for n in self.notes)
        return "\n".join(rows)

    def as_dict(self) -> dict:
        return {
            "config": asdict(self.config),
            "passed": self.passed,
            "hypothesis_misses": self.hypothesis_misses,
            "defects": self.defects,
            "notes": self.notes,
            "repro": self.repro,
            "instances": [asdict(r) | {"defect": r.defect} for r in self.reports],
        }


def campaign_instances(cfg: CampaignConfig) -> Iterator[tuple[str, int, Graph]]:
    """Seeded random instances satisfying each mode's hypotheses by construction."""
    rng = random.Random(cfg.seed)
    counts = cfg.counts or (cfg.count,) * len(cfg.m_values)
    for m, count in zip(cfg.m_values, counts):
        k, min_deg = (m, m + 1) if cfg.mode == "even" else (m + 1, None)
        lo = max(cfg.n_min, k + 1, (min_deg or 0) + 1)
        if lo > cfg.n_max:
            raise ConfigError(f"n range {cfg.n_min}..{cfg.n_max} too small for m={m}")
        for i in range(count):
            n = rng.randint(lo, cfg.n_max)
            if cfg.mode == "odd" and n % 2:
                n = n + 1 if n < cfg.n_max else n - 1
                if n < lo:
                    raise ConfigError(f"no even order available in {lo}..{cfg.n_max}")
            seed = rng.getrandbits(32)
            g = random_k_edge_connected(n, k, seed, extra=cfg.extra, min_degree=min_deg)
            yield f"{cfg.mode}-m{m}-{i:04d}-n{n}-s{seed}", m, g


def _tightness_reports(cfg: CampaignConfig, summary: CampaignSummary) -> None:
    for m in cfg.m_values:
        fam = tight_family(m)
        g = fam.graph
        start = time.perf_counter()
        lam = edge_connectivity(g)[0]
        over = (m + 2,) * g.n
        hub_delta = theorem4_delta(g, fam.hubs, over)
        if g.n <= delta_cap():
            verdict = min_parity_exists(g, over)
            refuted = not verdict.exists
        else:
            refuted = find_min_parity_factor(g, over) is None
            cert = search_delta_certificate(g, over)
            if cert is not None:
                summary.notes.append(f"m={m}: restricted search certificate T={sorted(cert.T)} delta={cert.value}")
        report = TheoremReport(
            f"tight-m{m}-n{g.n}", "tightness", m,
            {
                "edge_connectivity==m+1": lam == m + 1,
                "min_degree==m+1": g.min_degree == m + 1,
                "hub_delta==2(m+1)": hub_delta == 2 * (m + 1),
                "no_factor_at_m+2": refuted,
            },
            None,
        )
        _check_factor(g, m, "even", report)
        report.seconds = time.perf_counter() - start
        # here every hypothesis is itself a claim under test
        if not report.hypotheses_hold:
            report.violations.append(f"tightness claims failed: {report.hypotheses}")
        summary.reports.append(report)


def run_campaign(cfg: CampaignConfig) -> CampaignSummary:
    cfg.validate()
    summary = CampaignSummary(cfg)
    if cfg.mode == "tightness":
        _tightness_reports(cfg, summary)
    else:
        rng = random.Random(cfg.seed ^ 0x5EED)
        check = check_theorem_even if cfg.mode == "even" else check_theorem_odd
        for name, m, g in campaign_instances(cfg):
            report = check(g, m, name)
            if cfg.proof_steps and report.hypotheses_hold:
                report.proof_step_violations = proof_step_violations(
                    g, m, cfg.mode, sample_subsets(g.n, rng, cfg.t_samples)
                )
            summary.reports.append(report)
            if report.defect and summary.repro is None:
                summary.repro = {
                    "instance": name,
                    "graph": g.to_text(),
                    "g": [m] * g.n,
                    "mode": cfg.mode,
                    "seed": cfg.seed,
                }
                log.error("defect on %s; aborting campaign", name)
                break
    if summary.repro and cfg.repro_dir:
        out = Path(cfg.repro_dir)
        out.mkdir(parents=True, exist_ok=True)
        (out / f"{summary.repro['instance']}.json").write_text(json.dumps(summary.repro, indent=2))
    return summary
