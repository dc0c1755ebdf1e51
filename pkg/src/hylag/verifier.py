"""Exhaustive desk-scale verification that colex segments maximize the
Lagrangian among m-edge r-graphs.

The conjecture under test: lambda(H^{m,r}) = max{lambda(H) : e(H) = m}.
Compression arguments reduce the search to left-compressed candidates
(downsets in the domination order) with bounded support, which this module
enumerates exactly once each.  Every candidate gets a multistart solve; any
value within near_tie_tol of the colex baseline (or above it) is re-checked
against an exact grid oracle, and the counterexample flag is decided by exact
rational comparison whenever both sides carry rational certificates.

The support cap Tmax is a heuristic (minimal clique order plus a slack); a
report whose best witness uses all Tmax vertices is marked saturated as a
signal to re-run with a larger cap, since boundedness of maximizer supports
is only known conditionally.

For any candidate that does beat the baseline, counterexample_monitor
computes the structural statistics (support size T, delta = T - t, extreme
weights, the cut index q and the tail weight beyond it) that any genuine
counterexample is known to obey, and flags each bound pass/fail.
"""

from __future__ import annotations

import itertools
import json
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterator, Sequence

from .hypergraph import Hypergraph, _lower_covers, binom, colex_key, colex_segment, covers_pairs
from .lagrangian import (
    LagrangianResult,
    SizeError,
    SolverConfig,
    Weighting,
    clique_lagrangian,
    grid_oracle,
    maximize,
)

__all__ = [
    "VerifyConfig",
    "MonitorDiagnostics",
    "VerificationReport",
    "classify_regime",
    "minimal_clique_order",
    "enumerate_left_compressed",
    "verify_conjecture",
    "verify_range",
    "restricted_support_verify",
    "counterexample_monitor",
    "reports_json_text",
    "reports_csv_text",
    "float12",
]

CSV_HEADER = "m,t,regime,colex_value,best_value,gap,candidates,counterexample"


def float12(x) -> float:
    """Round to 12 significant digits (the stable float rendering used in
    reports, so that serialized output is diffable)."""
    return float(f"{float(x):.12g}")


@dataclass(frozen=True)
class VerifyConfig:
    """Knobs for the verification pipeline.  Defaults match the reported
    desk-scale runs; seed and jobs never change the output, only the cost."""

    starts: int = 50
    seed: int = 0
    support_slack: int = 2
    oracle_denominator: int = 18
    near_tie_tol: float = 1e-3
    float_tol: float = 1e-9
    require_pair_covering: bool = False
    max_candidates: int = 200_000
    max_iters: int = 5000
    jobs: int = 1

    def __post_init__(self):
        if self.seed < 0:
            raise ValueError("seed must be nonnegative")
        if self.support_slack < 0:
            raise ValueError("support_slack must be nonnegative")
        if not 1 <= self.max_candidates < (1 << 20):
            raise ValueError("max_candidates must be in [1, 2^20)")
        if self.jobs < 1:
            raise ValueError("jobs must be >= 1")


@dataclass(frozen=True)
class MonitorDiagnostics:
    """Structural statistics of a candidate maximizer measured against the
    bounds any counterexample with parameter t must satisfy.

    Weights are sorted descending; T is the support size, delta = T - t.
    q is the cut index with C(q-1,r-1) <= (t/(T-1)) C(t-1,r-1) < C(q,r-1)
    and tail_sum = sum of weights past position q.  bound_flags maps each
    named bound to "pass" / "fail" / "n/a" (conditional bounds are n/a when
    their hypothesis -- a premise or a delta threshold -- does not hold).
    """

    premise_holds: bool
    support_size: int
    delta: int
    x1: float
    xT: float
    q: int | None
    tail_sum: float
    bound_flags: dict[str, str] = field(default_factory=dict)

    def to_json_dict(self) -> dict:
        return {
            "premise_holds": self.premise_holds,
            "support_size": self.support_size,
            "delta": self.delta,
            "x1": float12(self.x1),
            "xT": float12(self.xT),
            "q": self.q,
            "tail_sum": float12(self.tail_sum),
            "bound_flags": dict(sorted(self.bound_flags.items())),
        }


@dataclass(frozen=True)
class VerificationReport:
    """Outcome of checking one (m, r) instance against its colex baseline."""

    m: int
    r: int
    t: int
    regime: str  # "R1" | "R2"
    colex_value: Fraction | None
    colex_value_float: float
    best_candidate_value: Fraction | None
    best_candidate_float: float
    witness: Hypergraph
    witness_weighting: Weighting
    counterexample: bool
    comparison: str  # "exact" | "float"
    candidates_examined: int
    support_cap: int
    saturated: bool
    seed: int
    diagnostics: MonitorDiagnostics | None = None

    @property
    def gap(self) -> float:
        return self.colex_value_float - self.best_candidate_float

    def to_json_dict(self) -> dict:
        gap_exact = None
        if self.colex_value is not None and self.best_candidate_value is not None:
            gap_exact = self.colex_value - self.best_candidate_value
        return {
            "m": self.m,
            "r": self.r,
            "t": self.t,
            "regime": self.regime,
            "colex_value": _num(self.colex_value, self.colex_value_float),
            "best_candidate_value": _num(self.best_candidate_value, self.best_candidate_float),
            "gap": _num(gap_exact, self.gap),
            "witness": {
                "hypergraph": self.witness.to_json_dict(),
                "weighting": self.witness_weighting.to_json_dict(),
            },
            "counterexample": self.counterexample,
            "comparison": self.comparison,
            "candidates_examined": self.candidates_examined,
            "support_cap": self.support_cap,
            "saturated": self.saturated,
            "seed": self.seed,
            "diagnostics": None if self.diagnostics is None else self.diagnostics.to_json_dict(),
        }


def _num(exact: Fraction | None, flt: float) -> dict:
    return {"exact": None if exact is None else str(exact), "float": float12(flt)}


# -- regimes and baselines ---------------------------------------------------


def minimal_clique_order(m: int, r: int) -> int:
    """Smallest t with m <= C(t, r)."""
    if m < 1 or r < 1:
        raise ValueError("need m >= 1 and r >= 1")
    t = r
    while binom(t, r) < m:
        t += 1
    return t


def classify_regime(m: int, r: int) -> tuple[int, str]:
    """(t, regime) with t minimal such that m <= C(t,r).

    R1 is the window C(t-1,r) < m <= C(t,r) - C(t-2,r-2) where the colex
    value plateaus at lambda([t-1]^{(r)}); the rest -- including the principal
    boundary m = C(t,r) -- is tagged R2 and gets its baseline from a direct
    solve of H^{m,r}.
    """
    t = minimal_clique_order(m, r)
    if m <= binom(t, r) - binom(t - 2, r - 2):
        return t, "R1"
    return t, "R2"


# -- candidate enumeration ---------------------------------------------------


def _colex_elements(r: int, Tmax: int):
    elems = sorted(itertools.combinations(range(1, Tmax + 1), r), key=colex_key)
    index = {e: i for i, e in enumerate(elems)}
    covers = [tuple(index[b] for _, b in _lower_covers(e)) for e in elems]
    return elems, covers


def enumerate_left_compressed(
    m: int, r: int, Tmax: int, require_pair_covering: bool = False
) -> Iterator[Hypergraph]:
    """All m-edge downsets of the domination order on [Tmax]^{(r)}, i.e. all
    fully left-compressed m-edge r-graphs with support in [Tmax].

    Edges are considered in colex order (a linear extension of domination),
    and an edge may join only once all its lower covers are in; each downset
    is therefore produced exactly once, as an increasing index sequence, in
    lexicographic order of those sequences.  Empty stream when m > C(Tmax,r).
    """
    if m < 1:
        raise ValueError("edge count m must be >= 1")
    if r < 1 or Tmax < r:
        raise ValueError(f"need Tmax >= r >= 1, got r={r}, Tmax={Tmax}")
    elems, covers = _colex_elements(r, Tmax)
    total = len(elems)
    if m > total:
        return
    chosen: list[int] = []
    in_set = bytearray(total)

    def rec(start: int, need: int) -> Iterator[Hypergraph]:
        if need == 0:
            H = Hypergraph(r, (elems[i] for i in chosen))
            if not require_pair_covering or covers_pairs(H)[0]:
                yield H
            return
        for nxt in range(start, total - need + 1):
            if all(in_set[c] for c in covers[nxt]):
                chosen.append(nxt)
                in_set[nxt] = 1
                yield from rec(nxt + 1, need - 1)
                chosen.pop()
                in_set[nxt] = 0

    yield from rec(0, m)


# -- candidate solving -------------------------------------------------------


def _solve_args(args) -> LagrangianResult:
    H, starts, seed, max_iters = args
    return maximize(H, SolverConfig(starts=starts, seed=seed, max_iters=max_iters))


def _solve_all(candidates: Sequence[Hypergraph], cfg: VerifyConfig) -> list[LagrangianResult]:
    argses = [
        (H, cfg.starts, (cfg.seed << 20) + i, cfg.max_iters)
        for i, H in enumerate(candidates)
    ]
    if cfg.jobs > 1 and len(argses) > 1:
        chunk = max(1, len(argses) // (cfg.jobs * 4))
        with ProcessPoolExecutor(max_workers=cfg.jobs) as ex:
            return list(ex.map(_solve_args, argses, chunksize=chunk))
    return [_solve_args(a) for a in argses]


def _exact_of(res: LagrangianResult) -> Fraction:
    return res.value_exact if res.value_exact is not None else Fraction(res.value)


# -- verification core -------------------------------------------------------


def _verify_with_cap(m: int, r: int, Tmax: int, cfg: VerifyConfig) -> VerificationReport:
    if r < 2:
        raise ValueError("verification needs uniformity r >= 2 (r = 1 is degenerate)")
    candidates: list[Hypergraph] = []
    for H in enumerate_left_compressed(m, r, Tmax, cfg.require_pair_covering):
        candidates.append(H)
        if len(candidates) > cfg.max_candidates:
            raise SizeError(
                f"enumeration for (m={m}, r={r}, Tmax={Tmax}) exceeds "
                f"{cfg.max_candidates} candidates; raise max_candidates or lower the slack"
            )
    if not candidates:
        why = "the pair-covering filter removed all" if binom(Tmax, r) >= m else f"C({Tmax},{r}) < {m}"
        raise SizeError(f"no candidates for (m={m}, r={r}, Tmax={Tmax}): {why}")
    results = _solve_all(candidates, cfg)

    t, regime = classify_regime(m, r)
    if regime == "R1":
        colex_exact: Fraction | None = clique_lagrangian(t - 1, r)
    else:
        seg = colex_segment(m, r)
        try:
            colex_exact = _exact_of(results[candidates.index(seg)])
        except ValueError:  # filtered out by the pair-covering option
            colex_exact = _exact_of(
                _solve_args((seg, cfg.starts, (cfg.seed << 20) + (1 << 20) - 1, cfg.max_iters))
            )
    colex_float = float(colex_exact)

    # near-tie (and above-baseline) candidates get an exact grid cross-check;
    # the oracle value is a certified lower bound, so keep whichever is larger
    for i, res in enumerate(results):
        if res.value >= colex_float - cfg.near_tie_tol:
            try:
                orc = grid_oracle(candidates[i], cfg.oracle_denominator)
            except SizeError:
                continue
            if _exact_of(orc) > _exact_of(res):
                results[i] = orc

    order = sorted(
        range(len(candidates)),
        key=lambda i: (-_exact_of(results[i]), candidates[i].edges),
    )
    best_i = order[0]
    best_res = results[best_i]
    best_exact = _exact_of(best_res)

    if best_res.value_exact is not None and colex_exact is not None:
        counterexample = best_exact > colex_exact
        comparison = "exact"
    else:
        counterexample = best_res.value > colex_float + cfg.float_tol
        comparison = "float"

    diagnostics = None
    if counterexample and r >= 2 and t >= 2:
        diagnostics = counterexample_monitor(candidates[best_i], best_res, t)

    return VerificationReport(
        m=m,
        r=r,
        t=t,
        regime=regime,
        colex_value=colex_exact,
        colex_value_float=colex_float,
        best_candidate_value=best_res.value_exact,
        best_candidate_float=best_res.value,
        witness=candidates[best_i],
        witness_weighting=best_res.weighting,
        counterexample=counterexample,
        comparison=comparison,
        candidates_examined=len(candidates),
        support_cap=Tmax,
        saturated=best_res.support_size >= Tmax,
        seed=cfg.seed,
        diagnostics=diagnostics,
    )


def verify_conjecture(m: int, r: int, cfg: VerifyConfig | None = None) -> VerificationReport:
    """Check whether any left-compressed m-edge r-graph beats H^{m,r}.

    The support cap is the minimal clique order covering m edges plus
    cfg.support_slack.  Deterministic given cfg.seed (also across jobs).
    """
    cfg = cfg or VerifyConfig()
    t0 = minimal_clique_order(m, r)
    return _verify_with_cap(m, r, t0 + cfg.support_slack, cfg)


def verify_range(r: int, t: int, cfg: VerifyConfig | None = None) -> list[VerificationReport]:
    """One report per m across the full plateau window
    [C(t-1,r), C(t,r) - C(t-2,r-2)] of the clique [t-1]^{(r)}."""
    if t < r + 1:
        raise ValueError(f"need t >= r + 1 for a nonempty window, got r={r}, t={t}")
    lo = binom(t - 1, r)
    hi = binom(t, r) - binom(t - 2, r - 2)
    return [verify_conjecture(m, r, cfg) for m in range(lo, hi + 1)]


def restricted_support_verify(
    m: int, r: int, t: int, cfg: VerifyConfig | None = None
) -> VerificationReport:
    """verify_conjecture with candidates restricted to support in [t] (no
    slack).  m must lie in the plateau window of [t-1]^{(r)}."""
    cfg = cfg or VerifyConfig()
    if t < r + 1:
        raise ValueError(f"need t >= r + 1, got r={r}, t={t}")
    lo = binom(t - 1, r)
    hi = binom(t, r) - binom(t - 2, r - 2)
    if not lo <= m <= hi:
        raise ValueError(
            f"m={m} outside the restricted-support window [{lo}, {hi}] for (r={r}, t={t})"
        )
    return _verify_with_cap(m, r, t, cfg)


# -- counterexample instrumentation ------------------------------------------


def _flag(ok: bool) -> str:
    return "pass" if ok else "fail"


def counterexample_monitor(G: Hypergraph, result: LagrangianResult, t: int) -> MonitorDiagnostics:
    """Measure a candidate maximizer of G against the structural bounds that
    any graph with lambda(G) > lambda([t-1]^{(r)}) is known to satisfy.

    Bounds checked (eps = 1e-12 float slack; "n/a" when the premise fails or
    the bound's delta-threshold is not met):

      T_bound:    T < 10 t
      x1_bound:   x1 <= r / t
      xT_bound:   xT <= 10 / (delta^{1/(r-1)} t)          [delta >= 1]
      xq_bound:   x_q <= 10 r delta^{-1/(r-1)^2} / t      [delta >= 1]
      tail_bound: tail_sum <= 20 r delta^{1-1/(r-1)^2}/t  [delta > 4r]
    """
    r = G.r
    if r < 2:
        raise ValueError("monitor needs uniformity >= 2")
    if t < 2:
        raise ValueError("monitor needs t >= 2")
    weights = sorted((float(v) for v in result.weighting.values if v > 0), reverse=True)
    T = len(weights)
    delta = T - t

    threshold = Fraction(binom(t - 1, r), (t - 1) ** r)
    if result.value_exact is not None:
        premise = result.value_exact > threshold
    else:
        premise = result.value > float(threshold)

    x1 = weights[0] if T else 0.0
    xT = weights[-1] if T else 0.0
    q = None
    tail = 0.0
    if T >= 2:
        rhs = Fraction(t, T - 1) * binom(t - 1, r - 1)
        q = r - 1
        while binom(q, r - 1) <= rhs:
            q += 1
        tail = sum(weights[q:]) if q < T else 0.0

    flags = {k: "n/a" for k in ("T_bound", "x1_bound", "xT_bound", "xq_bound", "tail_bound")}
    if premise:
        eps = 1e-12
        flags["T_bound"] = _flag(T < 10 * t)
        flags["x1_bound"] = _flag(x1 <= r / t + eps)
        if delta >= 1:
            flags["xT_bound"] = _flag(xT <= 10.0 / (delta ** (1.0 / (r - 1)) * t) + eps)
            xq = weights[q - 1] if q is not None and q <= T else 0.0
            flags["xq_bound"] = _flag(xq <= 10.0 * r * delta ** (-1.0 / (r - 1) ** 2) / t + eps)
        if delta > 4 * r:
            bound = 20.0 * r * delta ** (1.0 - 1.0 / (r - 1) ** 2) / t
            flags["tail_bound"] = _flag(tail <= bound + eps)

    return MonitorDiagnostics(
        premise_holds=premise,
        support_size=T,
        delta=delta,
        x1=x1,
        xT=xT,
        q=q,
        tail_sum=tail,
        bound_flags=flags,
    )


# -- report serialization ----------------------------------------------------


def reports_json_text(reports: Sequence[VerificationReport]) -> str:
    """Canonical JSON for a list of reports: sorted keys, 12-significant-digit
    floats, no timestamps -- byte-identical across runs with equal seeds."""
    payload = {"reports": [rep.to_json_dict() for rep in reports]}
    return json.dumps(payload, indent=2, sort_keys=True) + "\n"


def reports_csv_text(reports: Sequence[VerificationReport]) -> str:
    """One summary row per report (floats only; see CSV_HEADER)."""
    lines = [CSV_HEADER]
    for rep in reports:
        lines.append(
            f"{rep.m},{rep.t},{rep.regime},{rep.colex_value_float:.12g},"
            f"{rep.best_candidate_float:.12g},{rep.gap:.12g},"
            f"{rep.candidates_examined},{str(rep.counterexample).lower()}"
        )
    return "\n".join(lines) + "\n"
