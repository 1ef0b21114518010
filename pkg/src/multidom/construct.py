"""Randomized constructions of dominating functions and sets.

These execute the probabilistic arguments behind the closed-form bounds:
draw a random labeling/set with the bound's selection probability, classify
the deficient vertices through the restricted neighborhoods N', repair
deterministically, and verify the witness against the full neighborhoods.
Every trial yields a valid witness; trials stop early once one meets the
ceiling of the applicable bound, otherwise the best valid witness is
returned with met_target=False (the bound only holds in expectation).

Trials are independent given per-trial seeds derived from (seed, index),
so they may run concurrently; the winner is always the lowest trial index
meeting the target, regardless of worker count.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Sequence

import numpy as np

from .bounds import (
    RSParams,
    TotalRSParams,
    ParametricParams,
    bound_parametric,
    bound_parametric_alt,
    bound_rs,
    bound_total_rs,
)
from .errors import InfeasibleSpecError
from .graph import Graph
from .verify import DominationSpec, VertexFunction, verify_function, verify_set


@dataclass(frozen=True)
class ConstructionResult:
    witness: VertexFunction | tuple[int, ...]
    weight: int
    trials: int
    trial_index: int
    seed: int
    target: float
    met_target: bool
    params: dict
    notes: tuple[str, ...]
    weight_trace: tuple[int, ...] | None = None

    def to_dict(self) -> dict:
        w = (
            {"set": list(self.witness)}
            if isinstance(self.witness, tuple)
            else {"values": list(self.witness.values)}
        )
        out = {
            "witness": w,
            "weight": self.weight,
            "trials": self.trials,
            "trial_index": self.trial_index,
            "seed": self.seed,
            "target": self.target,
            "met_target": self.met_target,
            "params": self.params,
            "notes": list(self.notes),
        }
        if self.weight_trace is not None:
            out["weight_trace"] = list(self.weight_trace)
        return out


def _trial_rng(seed: int, index: int) -> np.random.Generator:
    return np.random.default_rng(np.random.SeedSequence((seed, index)))


def _check_seed(seed: int, max_trials: int) -> None:
    if seed < 0:
        raise ValueError("seed must be a nonnegative integer")
    if max_trials < 1:
        raise ValueError("max_trials must be >= 1")


def _run_trials(
    trial_fn: Callable[[int, np.random.Generator], tuple[object, int, tuple[str, ...]]],
    seed: int,
    max_trials: int,
    threshold: int,
    workers: int,
):
    """Evaluate trials in index order; stop at the first one meeting threshold."""
    trace: list[int] = []
    best = None  # (weight, index, witness, notes)
    met_index = None
    if workers <= 1:
        for i in range(max_trials):
            witness, wt, notes = trial_fn(i, _trial_rng(seed, i))
            trace.append(wt)
            if best is None or wt < best[0]:
                best = (wt, i, witness, notes)
            if wt <= threshold:
                met_index = i
                break
    else:
        from concurrent.futures import ThreadPoolExecutor

        with ThreadPoolExecutor(max_workers=workers) as pool:
            wave = workers * 2
            i = 0
            while i < max_trials and met_index is None:
                hi = min(max_trials, i + wave)
                futures = [
                    pool.submit(trial_fn, j, _trial_rng(seed, j)) for j in range(i, hi)
                ]
                for j, fut in zip(range(i, hi), futures):
                    witness, wt, notes = fut.result()
                    if met_index is not None:
                        continue  # past the winner; discard for determinism
                    trace.append(wt)
                    if best is None or wt < best[0]:
                        best = (wt, j, witness, notes)
                    if wt <= threshold:
                        met_index = j
                i = hi
    return best, met_index, trace


# -- capped-function construction (closed and open variants) --------------------


def _clamped_p(log_inner: float, theta: int) -> tuple[float, bool]:
    """p = 1 - (r/((1+theta) B_{s-1}))^(1/theta), clamped into [0, 1].

    p <= 0 happens on tiny graphs; the trial then degenerates to a = 0 and
    the repair step does all the work, which is still valid.
    """
    p = 1.0 - math.exp(log_inner / theta)
    clamped = p <= 0.0
    return (0.0 if clamped else min(p, 1.0)), clamped


def _capped_trial(
    restricted: list[tuple[int, ...]],
    n: int,
    cap: int,
    s: int,
    theta: int,
    p: float,
    rng: np.random.Generator,
    debug: dict | None = None,
) -> np.ndarray:
    """One randomized trial: cap indicator draws, deficiency classes, repair.

    Returns labels f(v) = a(v) + max_m c_m(v) <= cap with every restricted
    neighborhood summing to at least s, hence valid for the full sums too.
    """
    a = (rng.random((cap, n)) < p).sum(axis=0).astype(np.int64)
    msum = np.array([int(a[list(nb)].sum()) for nb in restricted], dtype=np.int64)
    repairs = np.zeros((s, n), dtype=np.int64)
    for m in range(s):
        cm = repairs[m]
        members = 0
        for v in range(n):  # ascending order keeps trials reproducible
            if msum[v] != m:
                continue
            members += 1
            nb = restricted[v]
            cur = int(cm[list(nb)].sum())
            if cur >= s - m:
                continue  # enough repair mass already placed here
            need = s - m - cur
            # spare capacity in N'(v) is (slots*cap - m) - cur = need + theta > 0
            spare = sum(cap - int(a[u]) - int(cm[u]) for u in nb)
            assert spare >= need, "spare-capacity argument violated"
            for u in nb:
                room = cap - int(a[u]) - int(cm[u])
                if room <= 0:
                    continue
                take = room if room < need else need
                cm[u] += take
                need -= take
                if need == 0:
                    break
            assert need == 0
        if debug is not None:
            debug.setdefault("class_sizes", {})[m] = members
            debug.setdefault("repair_weights", {})[m] = int(cm.sum())
    return a + (repairs.max(axis=0) if s > 0 else 0)


def _construct_capped(
    g: Graph,
    r_vec: Sequence[int],
    s_vec: Sequence[int],
    seed: int,
    max_trials: int,
    workers: int,
    collect_trace: bool,
    total: bool,
) -> ConstructionResult:
    r_vec = tuple(int(x) for x in r_vec)
    s_vec = tuple(int(x) for x in s_vec)
    _check_seed(seed, max_trials)
    spec = DominationSpec.total_rs(r_vec, s_vec) if total else DominationSpec.rs(r_vec, s_vec)
    spec.check_feasible(g)
    delta = g.min_degree
    notes: list[str] = []
    if total:
        if delta < 1:
            raise InfeasibleSpecError("total construction needs delta >= 1")
        params = TotalRSParams.derive(r_vec, s_vec, delta)
        target_report = bound_total_rs(r_vec, s_vec, delta, g.n)
    else:
        params = RSParams.derive(r_vec, s_vec, delta)
        target_report = bound_rs(r_vec, s_vec, delta, g.n)
    if params.r > params.tau:
        raise InfeasibleSpecError(
            f"derived uniform cap r={params.r} exceeds min cap tau={params.tau}"
        )
    if params.s < 1:
        zero = VertexFunction((0,) * g.n, r_vec)
        return ConstructionResult(
            zero, 0, 1, 0, seed, 0.0, True,
            {"p": 0.0, "delta": delta}, ("all demands are zero",),
            (0,) if collect_trace else None,
        )
    log_inner = math.log(params.r) - math.log1p(params.theta) - params.log_b
    p, clamped = _clamped_p(log_inner, params.theta)
    if clamped:
        notes.append("selection probability clamped to 0; the repair step does all the work")
    target = target_report.absolute
    threshold = math.ceil(target)
    restricted = [g.restricted_neighborhood(v, closed=not total) for v in range(g.n)]

    def trial(i: int, rng: np.random.Generator):
        vals = _capped_trial(restricted, g.n, params.r, params.s, params.theta, p, rng)
        f = VertexFunction(tuple(int(x) for x in vals), r_vec)
        report = verify_function(g, spec, f)
        assert report.valid, "internal: repaired trial failed verification"
        return f, report.weight, ()

    best, met_index, trace = _run_trials(trial, seed, max_trials, threshold, workers)
    weight, index, witness, trial_notes = best
    return ConstructionResult(
        witness=witness,
        weight=weight,
        trials=len(trace),
        trial_index=index,
        seed=seed,
        target=target,
        met_target=met_index is not None,
        params={
            "delta": delta, "r": params.r, "s": params.s, "theta": params.theta,
            "p": p, "p_clamped": clamped,
        },
        notes=tuple(notes) + tuple(trial_notes),
        weight_trace=tuple(trace) if collect_trace else None,
    )


def construct_rs(
    g: Graph,
    r_vec: Sequence[int],
    s_vec: Sequence[int],
    seed: int,
    max_trials: int = 100,
    *,
    workers: int = 1,
    collect_trace: bool = False,
) -> ConstructionResult:
    """Randomized construction of a demand-dominating capped function."""
    return _construct_capped(g, r_vec, s_vec, seed, max_trials, workers, collect_trace, False)


def construct_total_rs(
    g: Graph,
    r_vec: Sequence[int],
    s_vec: Sequence[int],
    seed: int,
    max_trials: int = 100,
    *,
    workers: int = 1,
    collect_trace: bool = False,
) -> ConstructionResult:
    """Open-neighborhood (total) variant of construct_rs."""
    return _construct_capped(g, r_vec, s_vec, seed, max_trials, workers, collect_trace, True)


# -- (k,l) set construction ------------------------------------------------------


def _parametric_trial(
    g: Graph,
    restricted: list[tuple[int, ...]],
    k: int,
    l: int,
    p: float,
    rng: np.random.Generator,
    debug: dict | None = None,
) -> tuple[set[int], tuple[str, ...]]:
    n = g.n
    in_a = rng.random(n) < p
    msum = [sum(1 for u in restricted[v] if in_a[u]) for v in range(n)]
    d = {int(v) for v in np.flatnonzero(in_a)}
    a_patches: dict[int, set[int]] = {}
    b_patches: dict[int, set[int]] = {}
    a_sizes: dict[int, int] = {}
    b_sizes: dict[int, int] = {}
    for v in range(n):
        m = msum[v]
        if in_a[v]:
            if m > l - 2:
                continue
            take = l - m - 1
            bucket, sizes = a_patches, a_sizes
        else:
            if m > k - 1:
                continue
            take = k - m
            bucket, sizes = b_patches, b_sizes
        sizes[m] = sizes.get(m, 0) + 1
        picked = [u for u in restricted[v] if not in_a[u]][:take]
        # delta >= max(k, l-1) guarantees enough candidates outside A
        assert len(picked) == take, "not enough patch candidates in N'(v) - A"
        bucket.setdefault(m, set()).update(picked)
        d.update(picked)
    notes: tuple[str, ...] = ()
    if l >= k + 2:
        # Vertices pulled into D by a patch only carry the non-member
        # guarantee of k; top up their coverage to the member demand l.
        rounds = 0
        while True:
            deficient = []
            for v in sorted(d):
                achieved = sum(1 for u in g.closed_neighborhood(v) if u in d)
                if achieved < l:
                    deficient.append((v, l - achieved))
            if not deficient:
                break
            rounds += 1
            for v, need in deficient:
                for u in restricted[v]:
                    if need == 0:
                        break
                    if u not in d:
                        d.add(u)
                        need -= 1
        if rounds:
            notes = (f"member coverage completion ran {rounds} round(s)",)
    if debug is not None:
        debug["a_class_sizes"] = a_sizes
        debug["b_class_sizes"] = b_sizes
        debug["a_patch_sizes"] = {m: len(s) for m, s in a_patches.items()}
        debug["b_patch_sizes"] = {m: len(s) for m, s in b_patches.items()}
    return d, notes


def construct_parametric(
    g: Graph,
    k: int,
    l: int,
    seed: int,
    max_trials: int = 100,
    *,
    workers: int = 1,
    collect_trace: bool = False,
) -> ConstructionResult:
    """Randomized construction of a (k,l)-dominating set."""
    _check_seed(seed, max_trials)
    spec = DominationSpec.parametric(k, l)
    delta = g.min_degree
    phi = max(k, l - 1)
    if delta < phi:
        raise InfeasibleSpecError(
            f"construction needs min degree >= max(k, l-1) = {phi}, got {delta}"
        )
    params = ParametricParams.derive(k, l, delta)
    notes: list[str] = []
    if params.delta_bar >= 1:
        p = 1.0 - math.exp(
            -(math.log1p(params.delta_bar) + params.log_b_phi) / params.delta_bar
        )
    else:
        # delta == max(k, l-1): take the formula's limit as the margin
        # shrinks to zero, which is 1 - 1/e for b_{phi-1} = 1 and 1 otherwise
        p = 1.0 - math.exp(-1.0) if params.log_b_phi == 0.0 else 1.0
        notes.append(
            "selection probability taken as the zero-margin limit of the formula"
        )
    candidates = [
        r.absolute
        for r in (
            bound_parametric(k, l, delta, g.n),
            bound_parametric_alt(k, l, delta, g.n),
        )
        if r.applicable
    ]
    if candidates:
        target = min(candidates)
    else:
        target = float(g.n)
        notes.append("no strong bound applicable; target set to the trivial bound n")
    threshold = math.ceil(target)
    restricted = [g.restricted_neighborhood(v, closed=False) for v in range(g.n)]

    def trial(i: int, rng: np.random.Generator):
        d, trial_notes = _parametric_trial(g, restricted, k, l, p, rng)
        members = tuple(sorted(d))
        report = verify_set(g, spec, members)
        assert report.valid, "internal: patched trial failed verification"
        return members, report.weight, trial_notes

    best, met_index, trace = _run_trials(trial, seed, max_trials, threshold, workers)
    weight, index, witness, trial_notes = best
    return ConstructionResult(
        witness=witness,
        weight=weight,
        trials=len(trace),
        trial_index=index,
        seed=seed,
        target=target,
        met_target=met_index is not None,
        params={"delta": delta, "k": k, "l": l, "phi": phi, "p": p},
        notes=tuple(notes) + tuple(trial_notes),
        weight_trace=tuple(trace) if collect_trace else None,
    )
