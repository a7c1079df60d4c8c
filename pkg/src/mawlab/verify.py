"""Exhaustive, randomized, and family-driven verification campaigns.

A campaign walks a space of (window, appended-symbol) steps, evaluates every
applicable bound verdict, asserts the structural step invariants, optionally
cross-checks the two enumeration engines and the delete-direction reduction,
and aggregates everything into a reproducible report.  Any violation becomes a
falsification record carrying a witness string; campaigns themselves never
raise on a falsification.

Reports are deterministic for a fixed config (the wall clock is kept out of
the default payload).  Instances are independent, so the runner can fan out
over processes; results are merged in task order, which keeps the report
schedule-independent.
"""

from __future__ import annotations

import os
import random
import time
from dataclasses import dataclass, field
from itertools import product
from typing import Iterable, Iterator

from .core import Alphabet, ConsistencyError, InputError, TheoremViolationError
from .bounds import BoundVerdict, check_step
from .families import FamilyInstance, gen_binary_extremal, gen_unary_v, gen_Z
from .slide import DeltaReport, MawEngine, MawType, append_delta, delete_delta

_ENGINES = ("oracle", "automaton", "both")
_CHECKS = ("full", "enum-only")


def _default_symbols(sigma: int) -> str:
    if sigma == 2:
        return "01"
    from .families import default_symbols

    return "".join(default_symbols(sigma))


@dataclass(frozen=True)
class CampaignConfig:
    mode: str = "exhaustive"
    sigmas: tuple[int, ...] = (2,)
    min_len: int = 1
    max_len: int = 8
    samples: int = 1000
    seed: int = 0
    engine: str = "both"
    deletes: bool = True
    checks: str = "full"
    budget: int = 10_000_000
    workers: int = 0
    symbols: str | None = None
    weaken: str | None = None

    def __post_init__(self) -> None:
        if self.mode not in ("exhaustive", "random"):
            raise InputError(f"mode must be 'exhaustive' or 'random', got {self.mode!r}")
        if not self.sigmas or any(s < 1 for s in self.sigmas):
            raise InputError("sigmas must be a non-empty list of positive sizes")
        if not 0 <= self.min_len <= self.max_len:
            raise InputError("need 0 <= min_len <= max_len")
        if self.engine not in _ENGINES:
            raise InputError(f"engine must be one of {_ENGINES}")
        if self.checks not in _CHECKS:
            raise InputError(f"checks must be one of {_CHECKS}")
        if self.samples < 0 or self.budget < 1 or self.workers < 0:
            raise InputError("samples/budget/workers out of range")
        if self.symbols is not None:
            if len(self.sigmas) != 1:
                raise InputError("explicit symbols require a single sigma")
            if len(self.symbols) != self.sigmas[0]:
                raise InputError("symbols must provide exactly sigma characters")

    @classmethod
    def from_mapping(cls, data: dict) -> "CampaignConfig":
        if not isinstance(data, dict):
            raise InputError("config must be a JSON object")
        known = {
            "mode", "sigmas", "min_len", "max_len", "samples", "seed",
            "engine", "deletes", "checks", "budget", "workers", "symbols", "weaken",
        }
        unknown = set(data) - known
        if unknown:
            raise InputError(f"unknown config keys: {sorted(unknown)}")
        kwargs = dict(data)
        if "sigmas" in kwargs:
            sig = kwargs["sigmas"]
            if not isinstance(sig, (list, tuple)):
                raise InputError("sigmas must be a list")
            kwargs["sigmas"] = tuple(int(s) for s in sig)
        try:
            return cls(**kwargs)
        except TypeError as exc:
            raise InputError(f"bad config: {exc}") from None

    def to_payload(self) -> dict:
        return {
            "mode": self.mode,
            "sigmas": list(self.sigmas),
            "min_len": self.min_len,
            "max_len": self.max_len,
            "samples": self.samples,
            "seed": self.seed,
            "engine": self.engine,
            "deletes": self.deletes,
            "checks": self.checks,
            "budget": self.budget,
            "symbols": self.symbols,
            "weaken": self.weaken,
        }


@dataclass
class _TaskResult:
    subjects: int = 0
    steps: int = 0
    bounds: dict = field(default_factory=dict)
    tightness: dict = field(default_factory=dict)
    falsifications: list = field(default_factory=list)
    mismatches: list = field(default_factory=list)

    def merge(self, other: "_TaskResult") -> None:
        self.subjects += other.subjects
        self.steps += other.steps
        for bid, (count, slack, witness) in other.bounds.items():
            mine = self.bounds.get(bid)
            if mine is None:
                self.bounds[bid] = [count, slack, witness]
            else:
                mine[0] += count
                if slack < mine[1]:
                    mine[1], mine[2] = slack, witness
        for key, (delta, witness) in other.tightness.items():
            mine = self.tightness.get(key)
            if mine is None or delta > mine[0]:
                self.tightness[key] = [delta, witness]
        self.falsifications.extend(other.falsifications)
        self.mismatches.extend(other.mismatches)


@dataclass(frozen=True)
class CampaignReport:
    config: CampaignConfig
    instances: int
    steps: int
    bounds: dict
    tightness: tuple
    falsifications: tuple
    engine_mismatches: tuple
    wall_clock: float

    @property
    def ok(self) -> bool:
        return not self.falsifications and not self.engine_mismatches

    def max_delta(self, d: int) -> int:
        """Maximum observed step size over every tightness row with window length d."""
        values = [row["max_delta"] for row in self.tightness if row["d"] == d]
        if not values:
            raise InputError(f"no tightness data for d={d}")
        return max(values)

    def to_payload(self, include_timing: bool = False) -> dict:
        payload = {
            "config": self.config.to_payload(),
            "instances": self.instances,
            "steps": self.steps,
            "bounds": self.bounds,
            "tightness": list(self.tightness),
            "falsifications": list(self.falsifications),
            "engine_mismatches": list(self.engine_mismatches),
            "ok": self.ok,
        }
        if include_timing:
            payload["wall_clock_seconds"] = self.wall_clock
        return payload


# Worker-side state: engines are cached per (symbols, backend) so exhaustive
# sweeps enumerate every distinct string once per backend.
_WORKER: dict = {}


def _init_worker(ctx: dict) -> None:
    _WORKER["ctx"] = ctx
    _WORKER["engines"] = {}


def _engine_for(symbols: str, backend: str) -> MawEngine:
    engines = _WORKER["engines"]
    key = (symbols, backend)
    eng = engines.get(key)
    if eng is None:
        eng = engines[key] = MawEngine(Alphabet.of(symbols), backend)
    return eng


def _weakened(verdicts: Iterable[BoundVerdict], weaken: str | None) -> list[BoundVerdict]:
    if weaken is None:
        return list(verdicts)
    out = []
    for v in verdicts:
        if v.bound_id.value == weaken:
            v = BoundVerdict.make(v.bound_id, v.bound_value - 1, v.observed)
        out.append(v)
    return out


def _structure_violations(report: DeltaReport) -> list[str]:
    """Step facts not already covered by a count verdict."""
    problems: list[str] = []
    if report.direction != "append":
        return problems
    window = report.before
    alpha = report.after[-1]
    m1 = report.added_by_type[MawType.TYPE1]
    m2 = report.added_by_type[MawType.TYPE2]
    m3 = report.added_by_type[MawType.TYPE3]

    for w in m1:
        if set(w) != {alpha}:
            problems.append(f"Type-1 word {w!r} is not a run of {alpha!r}")
    last_chars = [w[-1] for w in m2]
    if len(set(last_chars)) != len(last_chars):
        problems.append(f"Type-2 words share a last character: {m2}")
    for ch in last_chars:
        if ch not in window:
            problems.append(f"Type-2 last character {ch!r} does not occur in the window")

    if report.sigma_ext == 2 and report.d >= 3 and alpha in window:
        cap2 = window[: report.d - 1].count(alpha)
        if len(m2) > cap2:
            problems.append(f"|M2|={len(m2)} exceeds the {alpha!r}-count {cap2} in the window head")
        other = next(iter(set(window) - {alpha}), None)
        if other is not None:
            cap3 = window[2:].count(other)
            if len(m3) > cap3:
                problems.append(f"|M3|={len(m3)} exceeds the {other!r}-count {cap3} in the window tail")
    return problems


def _compare_engines(subject: str, symbols: str, result: _TaskResult) -> None:
    fast = _engine_for(symbols, "automaton").words(subject)
    slow = _engine_for(symbols, "oracle").words(subject)
    if fast != slow:
        result.mismatches.append(
            {"subject": subject, "automaton": list(fast), "oracle": list(slow)}
        )


def _record_verdicts(
    verdicts: Iterable[BoundVerdict], witness: str, result: _TaskResult
) -> None:
    for v in verdicts:
        row = result.bounds.get(v.bound_id.value)
        if row is None:
            result.bounds[v.bound_id.value] = [1, v.slack, witness]
        else:
            row[0] += 1
            if v.slack < row[1]:
                row[1], row[2] = v.slack, witness
        if not v.satisfied:
            result.falsifications.append(
                {
                    "kind": "bound",
                    "bound_id": v.bound_id.value,
                    "witness": witness,
                    "bound": v.bound_value,
                    "observed": v.observed,
                }
            )


def _run_append_step(
    window: str, alpha: str, symbols: str, ctx: dict, result: _TaskResult
) -> None:
    witness = f"{window}+{alpha}"
    sigma_global = len(symbols)
    eng = _engine_for(symbols, ctx["backend"])
    try:
        report = append_delta(window, alpha, eng.alphabet, eng)
    except TheoremViolationError as exc:
        result.falsifications.append({"kind": "theorem", "witness": witness, "detail": str(exc)})
        return
    except ConsistencyError as exc:
        result.falsifications.append({"kind": "consistency", "witness": witness, "detail": str(exc)})
        return
    result.steps += 1
    _record_verdicts(_weakened(check_step(report, sigma_global), ctx["weaken"]), witness, result)
    for problem in _structure_violations(report):
        result.falsifications.append({"kind": "structure", "witness": witness, "detail": problem})

    key = (report.d, report.sigma_ext)
    delta = report.delta_size
    mine = result.tightness.get(key)
    if mine is None or delta > mine[0]:
        result.tightness[key] = [delta, witness]

    if ctx["engine"] == "both":
        _compare_engines(report.after, symbols, result)


def _run_delete_step(subject: str, symbols: str, ctx: dict, result: _TaskResult) -> None:
    witness = f"-{subject}"
    sigma_global = len(symbols)
    eng = _engine_for(symbols, ctx["backend"])
    try:
        report = delete_delta(subject, eng.alphabet, eng)
    except TheoremViolationError as exc:
        result.falsifications.append({"kind": "theorem", "witness": witness, "detail": str(exc)})
        return
    except ConsistencyError as exc:
        result.falsifications.append({"kind": "consistency", "witness": witness, "detail": str(exc)})
        return
    result.steps += 1
    _record_verdicts(_weakened(check_step(report, sigma_global), ctx["weaken"]), witness, result)

    # Cross-check the reversal reduction against a direct set difference.
    before = set(eng.words(subject))
    after = set(eng.words(subject[1:]))
    if set(report.deleted) != before - after or set(report.added) != after - before:
        result.falsifications.append(
            {
                "kind": "delete-reduction",
                "witness": witness,
                "detail": "reversal reduction disagrees with the direct set difference",
            }
        )


def _process_task(task: tuple[str, str, bool]) -> _TaskResult:
    symbols, subject, all_alphas = task
    ctx = _WORKER["ctx"]
    result = _TaskResult(subjects=1)

    if ctx["engine"] == "both":
        _compare_engines(subject, symbols, result)
    if ctx["checks"] == "enum-only":
        return result

    if all_alphas:
        if subject:
            for alpha in symbols:
                _run_append_step(subject, alpha, symbols, ctx, result)
    elif len(subject) >= 2:
        _run_append_step(subject[:-1], subject[-1], symbols, ctx, result)

    if ctx["deletes"] and len(subject) >= 2:
        _run_delete_step(subject, symbols, ctx, result)
    return result


def _effective_workers(config: CampaignConfig) -> int:
    env = os.environ.get("MAWLAB_THREADS")
    cap = int(env) if env else None
    workers = config.workers
    if workers == 0:
        workers = cap if cap is not None else 1
    if cap is not None:
        workers = min(workers, cap)
    return max(1, workers)


def _execute(tasks: list[tuple[str, str, bool]], config: CampaignConfig) -> CampaignReport:
    ctx = {
        "engine": config.engine,
        "backend": "oracle" if config.engine == "oracle" else "automaton",
        "deletes": config.deletes,
        "checks": config.checks,
        "weaken": config.weaken,
    }
    started = time.perf_counter()
    merged = _TaskResult()
    workers = _effective_workers(config)
    pooled = False
    if workers > 1 and len(tasks) > 64:
        import multiprocessing as mp

        try:
            with mp.get_context("fork").Pool(
                workers, initializer=_init_worker, initargs=(ctx,)
            ) as pool:
                chunk = max(16, len(tasks) // (workers * 8))
                for part in pool.imap(_process_task, tasks, chunksize=chunk):
                    merged.merge(part)
            pooled = True
        except (OSError, ValueError):
            merged = _TaskResult()
    if not pooled:
        _init_worker(ctx)
        try:
            for task in tasks:
                merged.merge(_process_task(task))
        finally:
            _WORKER.clear()

    tightness_rows = tuple(
        {"d": d, "sigma_ext": se, "max_delta": val[0], "witness": val[1]}
        for (d, se), val in sorted(merged.tightness.items())
    )
    bounds = {
        bid: {"count": row[0], "min_slack": row[1], "witness": row[2]}
        for bid, row in sorted(merged.bounds.items())
    }
    return CampaignReport(
        config=config,
        instances=merged.subjects,
        steps=merged.steps,
        bounds=bounds,
        tightness=tightness_rows,
        falsifications=tuple(merged.falsifications),
        engine_mismatches=tuple(merged.mismatches),
        wall_clock=time.perf_counter() - started,
    )


def _exhaustive_tasks(config: CampaignConfig) -> Iterator[tuple[str, str, bool]]:
    for sigma in config.sigmas:
        symbols = config.symbols or _default_symbols(sigma)
        for n in range(config.min_len, config.max_len + 1):
            for tup in product(symbols, repeat=n):
                yield ("".join(symbols), "".join(tup), True)


def estimate_steps(config: CampaignConfig) -> int:
    """Planned number of slide-step evaluations (budget accounting)."""
    if config.mode == "random":
        return config.samples * (2 if config.deletes else 1)
    total = 0
    for sigma in config.sigmas:
        for n in range(config.min_len, config.max_len + 1):
            strings = sigma**n
            total += strings * sigma
            if config.deletes and n >= 2:
                total += strings
    return total


def run_exhaustive(config: CampaignConfig) -> CampaignReport:
    """Evaluate every string in range with every appended symbol."""
    if config.mode != "exhaustive":
        raise InputError("run_exhaustive needs an exhaustive-mode config")
    estimate = estimate_steps(config)
    if estimate > config.budget:
        raise InputError(
            f"campaign would evaluate about {estimate} steps, over the budget of {config.budget}; "
            "narrow the ranges or raise the budget"
        )
    return _execute(list(_exhaustive_tasks(config)), config)


def run_random(config: CampaignConfig) -> CampaignReport:
    """Evaluate seeded uniform random strings; identical config implies identical report."""
    if config.mode != "random":
        raise InputError("run_random needs a random-mode config")
    rng = random.Random(config.seed)
    tasks: list[tuple[str, str, bool]] = []
    for i in range(config.samples):
        sigma = config.sigmas[i % len(config.sigmas)]
        symbols = config.symbols or _default_symbols(sigma)
        n = rng.randint(max(1, config.min_len), config.max_len)
        subject = "".join(rng.choices(symbols, k=n))
        tasks.append(("".join(symbols), subject, False))
    return _execute(tasks, config)


def tightness_scan(
    d_range: Iterable[int],
    sigma_range: Iterable[int],
    engine: str = "automaton",
) -> CampaignReport:
    """Measure the published extremal family at each (d, extended-window sigma).

    For two-symbol rows the binary family must land exactly on max(3, d); for
    sigma' >= 3 the fresh-symbol window family must land exactly on
    (sigma' - 1) + d + 1.  Any slack is recorded as a falsification.
    """
    started = time.perf_counter()
    rows: list[dict] = []
    falsifications: list[dict] = []
    instances = 0
    for d in sorted(set(d_range)):
        for sigma_ext in sorted(set(sigma_range)):
            if sigma_ext < 2:
                continue
            if sigma_ext == 2:
                inst: FamilyInstance = gen_unary_v(d) if d <= 2 else gen_binary_extremal(d)
                bound = max(3, d)
            else:
                sigma_w = sigma_ext - 1
                if sigma_w > d:
                    continue
                if sigma_w < 2 and d > 1:
                    continue
                inst = gen_Z(d, sigma_w, max(3, sigma_w + 1))
                bound = sigma_w + d + 1
            report = append_delta(inst.window, inst.append_symbol, inst.alphabet, engine)
            instances += 1
            slack = bound - report.delta_size
            witness = f"{inst.window}+{inst.append_symbol}"
            rows.append(
                {
                    "d": d,
                    "sigma_ext": sigma_ext,
                    "family_id": inst.family_id,
                    "max_delta": report.delta_size,
                    "bound": bound,
                    "slack": slack,
                    "witness": witness,
                }
            )
            if slack != 0:
                falsifications.append(
                    {
                        "kind": "tightness",
                        "witness": witness,
                        "detail": f"family {inst.family_id} missed the bound by {slack}",
                    }
                )
    config = CampaignConfig(mode="exhaustive", sigmas=(2,), min_len=0, max_len=0)
    return CampaignReport(
        config=config,
        instances=instances,
        steps=instances,
        bounds={},
        tightness=tuple(rows),
        falsifications=tuple(falsifications),
        engine_mismatches=(),
        wall_clock=time.perf_counter() - started,
    )


PRESETS: dict[str, CampaignConfig] = {
    "exhaustive-binary": CampaignConfig(
        mode="exhaustive", sigmas=(2,), min_len=1, max_len=14, engine="both"
    ),
    "exhaustive-ternary": CampaignConfig(
        mode="exhaustive", sigmas=(3,), min_len=1, max_len=9, engine="both"
    ),
    "random": CampaignConfig(
        mode="random",
        sigmas=(2, 4, 26),
        min_len=1,
        max_len=100,
        samples=1000,
        seed=42,
        engine="both",
    ),
}
