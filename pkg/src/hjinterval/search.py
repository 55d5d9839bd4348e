"""Searching small cubes for colourings with no monochromatic interval line.

Two engines.  The exhaustive one walks all two-colourings of the n-cube
in lexicographic order of their rank-indexed bitstrings, pruning both on
completed monochromatic lines and (optionally) on prefixes that can
never be the least member of their symmetry orbit; the first surviving
leaf is therefore the lexicographically least avoider overall.  The
local one is plain steepest descent on the violation count with sideways
moves and seeded restarts.  Either way, an avoider is re-checked by a
direct scan before it is reported.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field

import numpy as np

from .cube import (
    Coloring,
    all_symmetries,
    interval_line_members,
    rank_permutation,
)

#: Exhaustive search refuses to run above this dimension unless told otherwise.
EXHAUSTIVE_CAP = 3

OUTCOME_FOUND = "avoider-found"
OUTCOME_REFUTED = "refuted"
OUTCOME_INCONCLUSIVE = "inconclusive"


def violation_count(coloring: Coloring) -> int:
    """How many interval lines are monochromatic under the colouring."""
    members = interval_line_members(coloring.n)
    cols = coloring.bits[members]
    mono = (cols[:, 0] == cols[:, 1]) & (cols[:, 1] == cols[:, 2])
    return int(mono.sum())


@dataclass
class SearchReport:
    """Outcome of one search run, renderable as stable key=value text."""

    mode: str
    n: int
    outcome: str
    coloring: Coloring | None = None
    violations: int | None = None
    seed: int | None = None
    budget: int | None = None
    stats: dict[str, int | float] = field(default_factory=dict)

    def semantic_fields(self) -> tuple:
        """Everything except timing, for determinism comparisons."""
        stats = {k: v for k, v in self.stats.items() if k != "wall_time_s"}
        bits = self.coloring.bitstring if self.coloring is not None else None
        return (self.mode, self.n, self.outcome, bits, self.violations, self.seed, self.budget, stats)


def render_search_report(report: SearchReport) -> str:
    """Serialize a report as one key=value pair per line, stable order."""
    rows = [
        f"mode={report.mode}",
        f"n={report.n}",
        f"outcome={report.outcome}",
        f"violations={'-' if report.violations is None else report.violations}",
        f"coloring={report.coloring.bitstring if report.coloring is not None else '-'}",
        f"seed={'-' if report.seed is None else report.seed}",
        f"budget={'-' if report.budget is None else report.budget}",
    ]
    for key in sorted(report.stats):
        val = report.stats[key]
        rows.append(f"{key}={val:.3f}" if isinstance(val, float) else f"{key}={val}")
    return "\n".join(rows) + "\n"


def _symmetry_tables(n: int) -> list[tuple[list[int], int]]:
    """Rank permutation and colour flip for every non-identity group element."""
    tables = []
    for g in all_symmetries():
        flip = 1 if g.swap_colors else 0
        perm = rank_permutation(g, n)
        if flip == 0 and np.array_equal(perm, np.arange(3**n)):
            continue
        tables.append((perm.tolist(), flip))
    return tables


def exhaustive_search(n: int, use_symmetry: bool = True, cap: int = EXHAUSTIVE_CAP) -> SearchReport:
    """Decide whether the n-cube admits an avoider, by complete enumeration.

    Returns the lexicographically least avoider when one exists (its
    bitstring read in rank order), else a refutation.  The symmetry
    toggle only trims the walk; the outcome is the same either way.
    Dimensions above the cap are refused because the space grows as
    2**(3**n).
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    if n > cap:
        raise ValueError(
            f"n={n} exceeds the exhaustive cap {cap}; pass a bigger cap only if you mean it"
        )
    t0 = time.perf_counter()
    size = 3**n
    members = interval_line_members(n).tolist()
    closing: list[list[tuple[int, int]]] = [[] for _ in range(size)]
    for p, q, r in members:
        closing[r].append((p, q))
    sym = _symmetry_tables(n) if use_symmetry else []
    bits = bytearray(size)
    stats = {"nodes": 0, "violation_prunes": 0, "symmetry_prunes": 0, "leaves": 0}

    def prefix_has_smaller_image(k: int) -> bool:
        # A prefix dies when some group image of every completion is
        # lexicographically smaller, which is decided as soon as the
        # first differing position is assigned on both sides.
        for perm, flip in sym:
            for j in range(size):
                pj = perm[j]
                if j > k or pj > k:
                    break
                own = bits[j]
                img = bits[pj] ^ flip
                if img < own:
                    return True
                if img > own:
                    break
        return False

    def walk(k: int) -> bytes | None:
        if k == size:
            stats["leaves"] += 1
            return bytes(bits)
        for b in (0, 1):
            stats["nodes"] += 1
            bits[k] = b
            violated = False
            for p, q in closing[k]:
                if bits[p] == b and bits[q] == b:
                    violated = True
                    break
            if violated:
                stats["violation_prunes"] += 1
                continue
            if sym and prefix_has_smaller_image(k):
                stats["symmetry_prunes"] += 1
                continue
            hit = walk(k + 1)
            if hit is not None:
                return hit
        return None

    found = walk(0)
    stats["wall_time_s"] = time.perf_counter() - t0
    if found is None:
        return SearchReport("exhaustive", n, OUTCOME_REFUTED, stats=stats)
    coloring = Coloring(n, np.frombuffer(found, dtype=np.uint8))
    violations = violation_count(coloring)
    if violations != 0:
        raise RuntimeError("internal error: exhaustive search reported a non-avoider")
    return SearchReport(
        "exhaustive", n, OUTCOME_FOUND, coloring=coloring, violations=0, stats=stats
    )


# --- local search ------------------------------------------------------------


def _restart_seed(seed: int, index: int) -> int:
    # Mix so that nearby (seed, index) pairs do not share low bits.
    return (seed * 0x9E3779B97F4A7C15 + index * 0xBF58476D1CE4E5B9 + 1) % (1 << 63)


def _one_restart(n: int, restart_seed: int, max_flips: int) -> tuple[int, np.ndarray, int]:
    """Steepest descent from one random colouring.

    Returns (best violation count, best bits, flips used).  Sideways
    moves are taken when no flip improves; a long sideways drift or a
    strict local minimum ends the restart early.
    """
    rng = np.random.default_rng(restart_seed)
    size = 3**n
    members = interval_line_members(n)
    bits = rng.integers(0, 2, size=size, dtype=np.uint8)
    ones = bits[members].sum(axis=1).astype(np.int32)
    sideways_cap = 2 * size
    best_bits = bits.copy()
    flips = 0
    sideways = 0

    def mono_total() -> int:
        return int(((ones == 0) | (ones == 3)).sum())

    violations = mono_total()
    best = violations
    while flips < max_flips and violations > 0:
        mono_now = (ones == 0) | (ones == 3)
        delta = np.zeros(size, dtype=np.int32)
        for col in range(3):
            cells = members[:, col]
            b = bits[cells]
            mono_after = np.where(b == 0, ones == 2, ones == 1)
            np.add.at(delta, cells, mono_after.astype(np.int32) - mono_now.astype(np.int32))
        lowest = int(delta.min())
        if lowest > 0:
            break
        candidates = np.flatnonzero(delta == lowest)
        if lowest == 0:
            sideways += 1
            if sideways > sideways_cap:
                break
            cell = int(candidates[rng.integers(0, candidates.size)])
        else:
            sideways = 0
            cell = int(candidates[0])
        old = int(bits[cell])
        bits[cell] ^= 1
        ones[np.flatnonzero((members == cell).any(axis=1))] += 1 - 2 * old
        violations += lowest
        flips += 1
        if violations < best:
            best = violations
            best_bits = bits.copy()
    if violations < best:
        best = violations
        best_bits = bits.copy()
    return best, best_bits, flips


def local_search(n: int, seed: int, budget: int, jobs: int = 1) -> SearchReport:
    """Minimize monochromatic interval lines by single-cell flips.

    The budget is a total flip allowance, split into independently
    seeded restarts; results are identical for a given (n, seed, budget)
    no matter how many workers execute the restarts.  Finding a
    violation-free colouring ends the run; otherwise the best colouring
    seen is reported as inconclusive.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    if budget < 1:
        raise ValueError("budget must be >= 1")
    if jobs < 1:
        raise ValueError("jobs must be >= 1")
    t0 = time.perf_counter()
    size = 3**n
    per_restart = min(budget, max(30 * size, 300))
    restarts = max(1, -(-budget // per_restart))
    args = [(n, _restart_seed(seed, k), per_restart) for k in range(restarts)]
    if jobs > 1 and restarts > 1:
        import concurrent.futures

        with concurrent.futures.ProcessPoolExecutor(max_workers=min(jobs, restarts)) as pool:
            results = list(pool.map(_restart_task, args))
    else:
        results = []
        for a in args:
            results.append(_restart_task(a))
            if results[-1][0] == 0:
                break
    # Restarts are independent, so truncating at the first success gives
    # the same report whether or not later restarts were actually run.
    first_success = next((k for k, r in enumerate(results) if r[0] == 0), None)
    used = results if first_success is None else results[: first_success + 1]
    best_idx = min(range(len(used)), key=lambda k: (used[k][0], k))
    best, best_bits, _ = used[best_idx]
    stats = {
        "restarts": len(used),
        "flips": sum(r[2] for r in used),
        "wall_time_s": time.perf_counter() - t0,
    }
    coloring = Coloring(n, best_bits)
    if best == 0:
        if violation_count(coloring) != 0:
            raise RuntimeError("internal error: local search reported a non-avoider")
        return SearchReport(
            "local", n, OUTCOME_FOUND, coloring=coloring, violations=0,
            seed=seed, budget=budget, stats=stats,
        )
    return SearchReport(
        "local", n, OUTCOME_INCONCLUSIVE, coloring=coloring, violations=best,
        seed=seed, budget=budget, stats=stats,
    )


def _restart_task(args: tuple[int, int, int]) -> tuple[int, np.ndarray, int]:
    return _one_restart(*args)
