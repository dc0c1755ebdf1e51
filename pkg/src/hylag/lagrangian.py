"""The Lagrangian of a uniform hypergraph.

For an r-graph H and a weight vector y, L(H, y) = sum over edges A of
prod_{i in A} y_i.  The Lagrangian lambda(H) is the maximum of L over the
standard simplex (y >= 0, sum y = 1).  This module evaluates L exactly or in
floats, maximizes it by multistart replicator ascent with a projected-gradient
fallback, and certifies candidate maximizers three independent ways:

* first-order (KKT) residuals -- at a maximizer with support S, every
  L(H_i, y) for i in S equals r * L(H, y), and off-support links cannot beat it;
* exact closed forms (cliques, Motzkin-Straus for r=2);
* an exact-rational grid oracle over weightings with entries k/N.

Reported maximizer weightings are rationalized (continued fractions,
bounded denominator) and the reported value is the exact evaluation at that
rational point, so every result is a certified lower bound on lambda(H).
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

import numpy as np

from .hypergraph import Hypergraph, binom, link, link_diff

__all__ = [
    "SizeError",
    "Weighting",
    "KKTResidual",
    "LagrangianResult",
    "SolverConfig",
    "evaluate",
    "partials",
    "maximize",
    "clique_lagrangian",
    "max_clique_number",
    "motzkin_straus_value",
    "grid_oracle",
    "symmetrize",
    "kkt_residual",
    "check_pair_identity",
    "check_scaling_bound",
]


class SizeError(ValueError):
    """A requested computation exceeds the configured enumeration guards."""


def _is_exact(vals: Sequence) -> bool:
    return all(isinstance(v, (int, Fraction)) and not isinstance(v, bool) for v in vals)


class Weighting:
    """A weight vector on vertices 1..n; values[i-1] is the weight of vertex i.

    Entries are either all exact rationals (Fraction/int; must sum to exactly
    1) or floats (must sum to 1 within 1e-12).  All entries are nonnegative.
    The empty weighting is legal as the degenerate weighting of an edgeless
    hypergraph.
    """

    __slots__ = ("values",)

    def __init__(self, values: Iterable):
        vals = tuple(values)
        if _is_exact(vals):
            vals = tuple(Fraction(v) for v in vals)
            if vals and sum(vals) != 1:
                raise ValueError(f"exact weighting sums to {sum(vals)}, not 1")
        else:
            vals = tuple(float(v) for v in vals)
            if vals and abs(math.fsum(vals) - 1.0) > 1e-12:
                raise ValueError(f"weighting sums to {math.fsum(vals)!r}, not 1")
        if any(v < 0 for v in vals):
            raise ValueError("weighting entries must be nonnegative")
        self.values = vals

    @classmethod
    def uniform(cls, n: int) -> "Weighting":
        if n < 1:
            raise ValueError("uniform weighting needs n >= 1")
        return cls([Fraction(1, n)] * n)

    @property
    def is_exact(self) -> bool:
        return _is_exact(self.values)

    @property
    def support(self) -> tuple[int, ...]:
        """1-based vertices with strictly positive weight."""
        return tuple(i + 1 for i, v in enumerate(self.values) if v > 0)

    def __len__(self) -> int:
        return len(self.values)

    def __getitem__(self, idx: int):
        return self.values[idx]

    def __iter__(self):
        return iter(self.values)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Weighting):
            return NotImplemented
        return self.values == other.values

    def __hash__(self) -> int:
        return hash(self.values)

    def __repr__(self) -> str:
        return f"Weighting({list(self.values)})"

    def as_floats(self) -> np.ndarray:
        return np.array([float(v) for v in self.values], dtype=float)

    def sorted_descending(self) -> "Weighting":
        return Weighting(sorted(self.values, reverse=True))

    def rationalized(self, max_denominator: int = 10**6) -> "Weighting":
        """Exact twin: continued-fraction each entry, renormalize to sum 1."""
        if self.is_exact:
            return self
        fr = [Fraction(v).limit_denominator(max_denominator) for v in self.values]
        total = sum(fr)
        if total == 0:
            raise ValueError("cannot rationalize the zero vector")
        if total != 1:
            fr = [f / total for f in fr]
        return Weighting(fr)

    def to_json_dict(self) -> dict:
        if self.is_exact:
            return {"values": [str(v) for v in self.values]}
        return {"values": list(self.values)}

    @classmethod
    def from_json_dict(cls, obj: dict) -> "Weighting":
        vals = []
        for v in obj["values"]:
            vals.append(Fraction(v) if isinstance(v, str) else v)
        return cls(vals)


def _coerce(H: Hypergraph, y) -> tuple:
    vals = y.values if isinstance(y, Weighting) else tuple(y)
    if H.max_vertex() > len(vals):
        raise ValueError(
            f"weighting of length {len(vals)} cannot cover support up to {H.max_vertex()}"
        )
    return vals


def evaluate(H: Hypergraph, y):
    """L(H, y) = sum over edges of the product of entry weights.

    Exact when every entry of y is a Fraction/int, float otherwise.  y may be
    any vector covering the support of H; it need not lie on the simplex
    (useful for finite-difference checks).
    """
    vals = _coerce(H, y)
    if _is_exact(vals):
        total = Fraction(0)
        for e in H.edges:
            p = Fraction(1)
            for v in e:
                p *= vals[v - 1]
            total += p
        return total
    total = 0.0
    for e in H.edges:
        p = 1.0
        for v in e:
            p *= vals[v - 1]
        total += p
    return total


def partials(H: Hypergraph, y) -> list:
    """Vector of link values: entry i (0-based i-1) is L(H_i, y) = dL/dy_i."""
    vals = _coerce(H, y)
    exact = _is_exact(vals)
    zero = Fraction(0) if exact else 0.0
    out = [zero] * len(vals)
    for e in H.edges:
        for v in e:
            p = Fraction(1) if exact else 1.0
            for u in e:
                if u != v:
                    p *= vals[u - 1]
            out[v - 1] += p
    return out


# -- numeric kernel --------------------------------------------------------


def _compile_edges(H: Hypergraph) -> tuple[np.ndarray, tuple[int, ...]]:
    supp = H.support
    pos = {v: i for i, v in enumerate(supp)}
    E = np.array([[pos[v] for v in e] for e in H.edges], dtype=np.int64)
    return E, supp


def _batch_value_partials(E: np.ndarray, IDX: np.ndarray, n: int, Y: np.ndarray):
    # Y: (s, n) -> L: (s,), G: (s, n) with G[t, i] = L(H_i, Y[t])
    P = Y[:, E]  # (s, m, r)
    s, m, r = P.shape
    if r == 1:
        L = P[:, :, 0].sum(axis=1)
        excl = np.ones_like(P)
    else:
        pref = np.cumprod(P, axis=2)
        suff = np.cumprod(P[:, :, ::-1], axis=2)[:, :, ::-1]
        excl = np.empty_like(P)
        excl[:, :, 0] = suff[:, :, 1]
        excl[:, :, -1] = pref[:, :, -2]
        for j in range(1, r - 1):
            excl[:, :, j] = pref[:, :, j - 1] * suff[:, :, j + 1]
        L = pref[:, :, -1].sum(axis=1)
    G = np.bincount(IDX.ravel(), weights=excl.ravel(), minlength=s * n).reshape(s, n)
    return L, G


def _replicator_batch(E, n, Y, r, max_iters, value_tol, step_tol,
                      stall_limit=40, prune_tol=0.0, drop_tol=1e-10):
    """Multiplicative ascent y_i <- y_i L(H_i,y) / (r L(H,y)), batched by row.

    The objective is a polynomial with nonnegative coefficients, so each step
    cannot decrease L (Baum-Eagon); fixpoints are exactly the points where
    all on-support links are equalized to r L.

    A coordinate that is exactly tied at the limit decays like 1/iteration,
    so a row carrying one improves by O(1/k^2) forever -- too fast to look
    stagnant, too slow to finish.  With prune_tol > 0 the loop periodically
    tries zeroing each row's smallest positive coordinate, keeping the cut
    only when the value survives within drop_tol; rows whose value has
    stagnated for stall_limit steps while still moving are finished as-is
    (plateau drift at constant L).
    """
    s = Y.shape[0]
    rowsel = np.arange(s)
    IDX = (rowsel * n)[:, None, None] + E[None, :, :]
    L, G = _batch_value_partials(E, IDX, n, Y)
    stall = np.zeros(s, dtype=np.int64)
    done = np.zeros(s, dtype=bool)
    for it in range(max_iters):
        denom = r * L
        safe = denom > 0
        scale = np.where(safe, denom, 1.0)
        Ynew = np.where(safe[:, None], Y * G / scale[:, None], Y)
        tot = Ynew.sum(axis=1, keepdims=True)
        np.divide(Ynew, tot, out=Ynew, where=tot > 0)
        Lnew, Gnew = _batch_value_partials(E, IDX, n, Ynew)
        worse = Lnew < L
        if worse.any():
            Ynew[worse] = Y[worse]
            Lnew[worse] = L[worse]
            Gnew[worse] = G[worse]
        step = np.abs(Ynew - Y).max(axis=1)
        impr = Lnew - L
        Y, L, G = Ynew, Lnew, Gnew
        flat = impr < value_tol
        stall = np.where(flat, stall + 1, 0)
        done |= flat & ((step < step_tol) | (stall >= stall_limit))
        if prune_tol > 0 and (it & 63) == 63 and not bool(done.all()):
            masked = np.where(Y > 0, Y, np.inf)
            jmin = masked.argmin(axis=1)
            ymin = Y[rowsel, jmin]
            Y2 = Y.copy()
            Y2[rowsel, jmin] = 0.0
            tot2 = Y2.sum(axis=1, keepdims=True)
            ok = ~done & (ymin > 0) & (ymin < 0.1) & (tot2[:, 0] > 0)
            Y2 = np.where(ok[:, None], Y2 / np.where(tot2 > 0, tot2, 1.0), Y)
            L2, G2 = _batch_value_partials(E, IDX, n, Y2)
            accept = ok & (L2 >= L - drop_tol)
            Y = np.where(accept[:, None], Y2, Y)
            L = np.where(accept, L2, L)
            G = np.where(accept[:, None], G2, G)
            stall = np.where(accept, 0, stall)
        if bool(done.all()):
            break
    return Y, L, G


def _project_simplex(v: np.ndarray) -> np.ndarray:
    u = np.sort(v)[::-1]
    css = np.cumsum(u) - 1.0
    idx = np.arange(1, len(u) + 1)
    rho = np.nonzero(u - css / idx > 0)[0][-1]
    w = np.maximum(v - css[rho] / (rho + 1.0), 0.0)
    return w / w.sum()


def _rescue_row(E, n, y, r, cfg) -> np.ndarray:
    # replicator cannot re-enter a zeroed coordinate; a projected-gradient
    # step can, after which replicator resumes the ascent.  Budgets are tight:
    # a rescued row only has to beat its own pre-rescue value to be kept, and
    # the growth phase after re-entry is geometric -- the long tail is the
    # same tied-coordinate crawl that is not worth waiting out here.
    iters = min(cfg.max_iters, 300)
    for _ in range(4):
        Y = y[None, :]
        IDX = np.zeros((1, 1, 1), dtype=np.int64) + E[None, :, :]
        L, G = _batch_value_partials(E, IDX, n, Y)
        L, g = float(L[0]), G[0]
        if (g - r * L).max() <= 1e-9:
            break
        alpha, moved = 0.25, False
        while alpha > 1e-13:
            y_try = _project_simplex(y + alpha * g)
            L_try = float(_batch_value_partials(E, IDX, n, y_try[None, :])[0][0])
            if L_try > L + 1e-15:
                y, moved = y_try, True
                break
            alpha *= 0.5
        if not moved:
            break
        Yc, _, _ = _replicator_batch(E, n, y[None, :], r, iters,
                                     cfg.value_tol, cfg.step_tol)
        y = Yc[0]
    return y


def _support_min_batch(E, n, Y, L, r, cfg):
    # try zeroing weights below prune_tol, renormalize, reconverge; keep per
    # row only if the value survives (drop <= drop_tol).  The threshold is
    # deliberately coarse: exactly-tied coordinates decay like 1/iteration
    # under the replicator, so waiting for them to underflow is hopeless, but
    # cutting them is value-guarded and the face restart reconverges fast.
    # The reconverge is capped: rows arrive nearly converged, so a row that
    # has not settled within the cap is in a crawl and keeps its guard anyway.
    iters = min(cfg.max_iters, 600)
    for _ in range(n):
        small = (Y > 0) & (Y < cfg.prune_tol)
        if not small.any():
            break
        Y2 = np.where(Y < cfg.prune_tol, 0.0, Y)
        tot = Y2.sum(axis=1, keepdims=True)
        ok = tot[:, 0] > 0
        Y2 = np.where(ok[:, None], Y2 / np.where(tot > 0, tot, 1.0), Y)
        Y2, L2, _ = _replicator_batch(E, n, Y2, r, iters, cfg.value_tol,
                                      cfg.step_tol)
        accept = small.any(axis=1) & ok & (L2 >= L - cfg.drop_tol)
        if not accept.any():
            break
        Y = np.where(accept[:, None], Y2, Y)
        L = np.where(accept, L2, L)
    return Y, L


def _greedy_clique(H: Hypergraph) -> list[int]:
    order = sorted(H.support, key=lambda v: (-H.degree(v), v))
    S: list[int] = []
    for v in order:
        if len(S) >= H.r - 1:
            if not all(c + (v,) in H for c in itertools.combinations(S, H.r - 1)):
                continue
        S.append(v)
    if len(S) < H.r:
        S = list(H.edges[0])
    return S


@dataclass(frozen=True)
class KKTResidual:
    """First-order certificate: on_support = max |L(H_i,y) - r L(H,y)| over
    the support of y; off_support = max of L(H_i,y) - r L(H,y) over
    zero-weight vertices (0 when there are none).  A maximizer needs
    on_support ~ 0 and off_support <= 0."""

    on_support: float
    off_support: float


@dataclass(frozen=True)
class LagrangianResult:
    value: float
    value_exact: Fraction | None
    weighting: Weighting
    support_size: int
    kkt_residual: KKTResidual
    method: str  # closed-form | multistart | oracle | degenerate
    starts_used: int
    seed: int | None = None

    def to_json_dict(self) -> dict:
        return {
            "value": None if self.value_exact is None else str(self.value_exact),
            "value_float": self.value,
            "weighting": self.weighting.to_json_dict(),
            "support_size": self.support_size,
            "kkt_on_support": self.kkt_residual.on_support,
            "kkt_off_support": self.kkt_residual.off_support,
            "method": self.method,
            "starts_used": self.starts_used,
            "seed": self.seed,
        }


@dataclass(frozen=True)
class SolverConfig:
    starts: int = 50
    max_iters: int = 5000
    value_tol: float = 1e-13
    step_tol: float = 1e-10
    seed: int = 0
    support_minimization: bool = True
    zero_tol: float = 1e-9
    prune_tol: float = 1e-4
    drop_tol: float = 1e-10
    max_denominator: int = 10**6

    def __post_init__(self):
        if self.starts < 1:
            raise ValueError("starts must be >= 1")
        if self.max_iters < 1:
            raise ValueError("max_iters must be >= 1")
        if min(self.value_tol, self.step_tol, self.zero_tol, self.prune_tol,
               self.drop_tol) <= 0:
            raise ValueError("tolerances must be positive")


def _degenerate_result(seed) -> LagrangianResult:
    return LagrangianResult(
        value=0.0,
        value_exact=Fraction(0),
        weighting=Weighting(()),
        support_size=0,
        kkt_residual=KKTResidual(0.0, 0.0),
        method="degenerate",
        starts_used=0,
        seed=seed,
    )


def _expand_to_full(fr: Sequence[Fraction], supp: tuple[int, ...], n: int) -> Weighting:
    full = [Fraction(0)] * n
    for idx, v in enumerate(supp):
        full[v - 1] = fr[idx]
    return Weighting(full)


def _rationalize_compact(y: np.ndarray, max_den: int) -> tuple[Fraction, ...]:
    fr = [Fraction(float(v)).limit_denominator(max_den) for v in y]
    total = sum(fr)
    if total == 0:
        raise ValueError("degenerate weighting")
    if total != 1:
        fr = [f / total for f in fr]
    return tuple(fr)


def _exact_value_compact(H: Hypergraph, supp, fr: Sequence[Fraction]) -> Fraction:
    pos = {v: i for i, v in enumerate(supp)}
    total = Fraction(0)
    for e in H.edges:
        p = Fraction(1)
        for v in e:
            p *= fr[pos[v]]
        total += p
    return total


def maximize(H: Hypergraph, cfg: SolverConfig | None = None) -> LagrangianResult:
    """Best local maximum of L(H, .) over the simplex across cfg.starts runs.

    Starts: uniform on support, uniform on a greedy clique, then seeded
    Dirichlet(1) samples.  Each run ascends by the replicator update with a
    projected-gradient rescue for off-support violations, then minimizes its
    support.  Among runs within 1e-10 of the best value the one with minimal
    support wins, then the lexicographically largest descending weighting.
    The winner is rationalized and re-evaluated exactly; `value` is the float
    of that exact certificate.  Deterministic given cfg.seed.
    """
    cfg = cfg or SolverConfig()
    if len(H) == 0:
        return _degenerate_result(cfg.seed)
    E, supp = _compile_edges(H)
    k = len(supp)
    r = H.r

    Y0 = np.empty((cfg.starts, k))
    Y0[0] = 1.0 / k
    if cfg.starts > 1:
        pos = {v: i for i, v in enumerate(supp)}
        S = _greedy_clique(H)
        row = np.zeros(k)
        row[[pos[v] for v in S]] = 1.0 / len(S)
        Y0[1] = row
    for s_i in range(2, cfg.starts):
        rng = np.random.default_rng((cfg.seed, s_i))
        g = rng.exponential(1.0, k)
        Y0[s_i] = g / g.sum()

    prune = cfg.prune_tol if cfg.support_minimization else 0.0
    Y, L, G = _replicator_batch(E, k, Y0, r, cfg.max_iters, cfg.value_tol,
                                cfg.step_tol, prune_tol=prune, drop_tol=cfg.drop_tol)
    if cfg.support_minimization:
        Y, L = _support_min_batch(E, k, Y, L, r, cfg)
        IDX = (np.arange(cfg.starts) * k)[:, None, None] + E[None, :, :]
        L, G = _batch_value_partials(E, IDX, k, Y)

    # off-support first-order violations: those rows can still improve (only
    # near-best rows are worth the projected-gradient rescue; a dominated row
    # would have to climb past the whole gap to change the winner)
    viol = (G - r * L[:, None]).max(axis=1)
    for row_i in np.nonzero((viol > 1e-8) & (L >= L.max() - 1e-3))[0]:
        y_fix = _rescue_row(E, k, Y[row_i], r, cfg)
        if cfg.support_minimization:
            Yf, Lf = _support_min_batch(
                E, k, y_fix[None, :],
                _batch_value_partials(E, np.zeros((1, 1, 1), dtype=np.int64) + E[None], k, y_fix[None, :])[0],
                r, cfg)
            y_fix, L_fix = Yf[0], float(Lf[0])
        else:
            IDX1 = np.zeros((1, 1, 1), dtype=np.int64) + E[None, :, :]
            L_fix = float(_batch_value_partials(E, IDX1, k, y_fix[None, :])[0][0])
        if L_fix >= L[row_i]:
            Y[row_i], L[row_i] = y_fix, L_fix

    best = float(L.max())
    tie_rows = np.nonzero(L >= best - 1e-10)[0]
    supp_counts = (Y[tie_rows] > cfg.zero_tol).sum(axis=1)
    min_supp = supp_counts.min()
    finalists = [int(t) for t, c in zip(tie_rows, supp_counts) if c == min_supp]
    winner = max(finalists, key=lambda t: (tuple(sorted(Y[t], reverse=True)), -t))
    y_win = Y[winner]

    # canonical form: adopt the descending rearrangement when it does not
    # lose value (always the case for left-compressed H); decided exactly
    candidates = [np.sort(y_win)[::-1], y_win]
    y_polish, _, _ = _replicator_batch(E, k, candidates[0][None, :], r,
                                       cfg.max_iters, cfg.value_tol, cfg.step_tol,
                                       prune_tol=prune, drop_tol=cfg.drop_tol)
    candidates.insert(1, np.sort(y_polish[0])[::-1])
    scored = []
    for idx, vec in enumerate(candidates):
        fr = _rationalize_compact(vec, cfg.max_denominator)
        scored.append((_exact_value_compact(H, supp, fr), -idx, fr))
    val_exact, _, fr = max(scored)

    n = H.max_vertex()
    w = _expand_to_full(fr, supp, n)
    res = kkt_residual(H, w)
    return LagrangianResult(
        value=float(val_exact),
        value_exact=val_exact,
        weighting=w,
        support_size=sum(1 for v in fr if v > 0),
        kkt_residual=KKTResidual(float(res.on_support), float(res.off_support)),
        method="multistart",
        starts_used=cfg.starts,
        seed=cfg.seed,
    )


# -- closed forms and oracles ----------------------------------------------


def clique_lagrangian(t: int, r: int) -> Fraction:
    """lambda([t]^{(r)}) = C(t,r) / t^r, exactly (uniform weights on [t])."""
    if r < 1 or t < r:
        raise ValueError(f"clique_lagrangian needs t >= r >= 1, got t={t}, r={r}")
    return Fraction(binom(t, r), t**r)


def max_clique_number(H: Hypergraph) -> int:
    """Clique number of a 2-uniform H by branch and bound (support <= 12)."""
    if H.r != 2:
        raise ValueError("clique search is for 2-uniform hypergraphs")
    supp = H.support
    if len(supp) > 12:
        raise SizeError(f"clique search capped at 12 vertices, support has {len(supp)}")
    adj = {v: set() for v in supp}
    for a, b in H.edges:
        adj[a].add(b)
        adj[b].add(a)
    order = sorted(supp, key=lambda v: (-len(adj[v]), v))
    best = 1 if supp else 0

    def expand(cand: list[int], size: int):
        nonlocal best
        if size > best:
            best = size
        for i, v in enumerate(cand):
            if size + len(cand) - i <= best:
                return
            expand([u for u in cand[i + 1 :] if u in adj[v]], size + 1)

    expand(order, 0)
    return best


def motzkin_straus_value(H: Hypergraph) -> Fraction:
    """lambda of a graph: (w-1)/(2w) with w the clique number, exactly."""
    if H.r != 2:
        raise ValueError("motzkin_straus_value needs a 2-uniform hypergraph")
    if len(H) == 0:
        return Fraction(0)
    w = max_clique_number(H)
    return Fraction(w - 1, 2 * w)


def _compositions(N: int, k: int, chunk: int = 1 << 16):
    it = itertools.combinations(range(N + k - 1), k - 1)
    left = np.full((1, 1), -1, dtype=np.int64)
    right = np.full((1, 1), N + k - 1, dtype=np.int64)
    while True:
        block = list(itertools.islice(it, chunk))
        if not block:
            return
        B = np.array(block, dtype=np.int64).reshape(len(block), k - 1)
        aug = np.concatenate(
            [np.broadcast_to(left, (len(block), 1)), B,
             np.broadcast_to(right, (len(block), 1))], axis=1)
        yield np.diff(aug, axis=1) - 1


def grid_oracle(H: Hypergraph, N: int) -> LagrangianResult:
    """Exact maximum of L over weightings whose entries are multiples of 1/N.

    Exhaustive over all C(N+k-1, k-1) compositions on the support (guarded at
    1e8 points); integer arithmetic throughout, so the value is exact and is
    a certified lower bound on lambda(H).  Monotone under grid refinement
    N | N'.
    """
    if N < 1:
        raise ValueError("grid denominator N must be >= 1")
    if len(H) == 0:
        return _degenerate_result(None)
    supp = H.support
    k = len(supp)
    points = binom(N + k - 1, k - 1)
    if points > 10**8:
        raise SizeError(f"grid has {points} points, over the 1e8 guard")
    if len(H) * N**H.r > 2**62:
        raise SizeError("grid products exceed exact int64 range")
    E, _ = _compile_edges(H)
    best_num = -1
    best_comp = None
    for comp in _compositions(N, k):
        vals = np.prod(comp[:, E], axis=2, dtype=np.int64).sum(axis=1)
        i = int(np.argmax(vals))
        if int(vals[i]) > best_num:
            best_num = int(vals[i])
            best_comp = comp[i].copy()
    fr = tuple(Fraction(int(c), N) for c in best_comp)
    # canonical: sort descending when that is exactly value-preserving
    fr_sorted = tuple(sorted(fr, reverse=True))
    if _exact_value_compact(H, supp, fr_sorted) >= Fraction(best_num, N**H.r):
        fr = fr_sorted
    val = _exact_value_compact(H, supp, fr)
    w = _expand_to_full(fr, supp, H.max_vertex())
    res = kkt_residual(H, w)
    return LagrangianResult(
        value=float(val),
        value_exact=val,
        weighting=w,
        support_size=sum(1 for v in fr if v > 0),
        kkt_residual=KKTResidual(float(res.on_support), float(res.off_support)),
        method="oracle",
        starts_used=0,
        seed=None,
    )


# -- certificates and identities -------------------------------------------


def symmetrize(H: Hypergraph, y, i: int, j: int) -> Weighting:
    """Average the weights of two exchangeable vertices: z_i = z_j = (y_i+y_j)/2.

    Requires i <-> j to be an automorphism direction, i.e. link_diff empty
    both ways; then L(H, z) >= L(H, y).
    """
    if len(link_diff(H, i, j)) or len(link_diff(H, j, i)):
        raise ValueError(f"vertices {i} and {j} are not exchangeable in H")
    vals = list(y.values if isinstance(y, Weighting) else y)
    if max(i, j) > len(vals):
        raise ValueError("weighting does not cover the requested vertices")
    if _is_exact(vals):
        avg = (Fraction(vals[i - 1]) + Fraction(vals[j - 1])) / 2
    else:
        avg = (vals[i - 1] + vals[j - 1]) / 2.0
    vals[i - 1] = avg
    vals[j - 1] = avg
    return Weighting(vals)


def kkt_residual(H: Hypergraph, y) -> KKTResidual:
    """First-order residuals of y as a candidate maximizer (see KKTResidual)."""
    vals = _coerce(H, y)
    L = evaluate(H, vals)
    g = partials(H, vals)
    target = H.r * L
    on = [abs(g[i] - target) for i, v in enumerate(vals) if v > 0]
    off = [g[i] - target for i, v in enumerate(vals) if v == 0]
    zero = 0
    return KKTResidual(
        on_support=float(max(on, default=zero)),
        off_support=float(max(off, default=zero)),
    )


def check_pair_identity(H: Hypergraph, y, i: int, j: int):
    """Residual |(y_i - y_j) L(H_{ij}, y) - L(H_{i\\j}, y)|.

    At a true maximizer of a left-compressed H with descending weights this
    vanishes for every support pair i < j.  For r = 2 the pair link L(H_{ij})
    degenerates to the 0/1 indicator of the edge {i,j}.
    """
    if not i < j:
        raise ValueError(f"need i < j, got ({i}, {j})")
    vals = _coerce(H, y)
    if H.r < 2:
        raise ValueError("pair identity needs uniformity >= 2")
    if H.r == 2:
        pair_val = 1 if (i, j) in H else 0
    else:
        pair_val = evaluate(link(H, (i, j)), vals)
    diff_val = evaluate(link_diff(H, i, j), vals)
    return abs((vals[i - 1] - vals[j - 1]) * pair_val - diff_val)


def check_scaling_bound(H: Hypergraph, y, i: int, tol: float = 1e-7,
                        cfg: SolverConfig | None = None) -> bool:
    """Does L(H_i, y) <= (1 - y_i)^(r-1) lambda(H_i) + tol hold?

    The link carries total weight at most 1 - y_i, and L is homogeneous of
    degree r-1 on it.  lambda(H_i) is computed by maximize on the link.
    """
    if H.r < 2:
        raise ValueError("scaling bound needs uniformity >= 2")
    vals = _coerce(H, y)
    Hi = link(H, (i,))
    if len(Hi) == 0:
        return True
    lam = maximize(Hi, cfg or SolverConfig(starts=12)).value
    lhs = float(evaluate(Hi, [float(v) for v in vals]))
    return lhs <= (1.0 - float(vals[i - 1])) ** (H.r - 1) * lam + tol
