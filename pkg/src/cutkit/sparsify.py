"""Cut-preserving sparsification of unweighted multigraphs.

The pipeline splits off a forest core kept at weight one, then repeatedly
half-samples the remaining edges, each round settling a small set whose
survival probabilities are now fixed and certifying the rest as heavy
(high endpoint connectivity) so they can tolerate another halving. A
final importance-weighted binomial draw turns every settled edge into
either nothing or an unbiased weighted copy.

Everything is driven by a single seeded generator per run, so equal
inputs and seeds reproduce the output bit for bit. The stream is
consumed in a fixed order: one half-sampling draw per level, in level
order, then one binomial draw per settled edge, levels ascending and
edge ids ascending within a level.
"""

from __future__ import annotations

import math
import time
from dataclasses import dataclass

import numpy as np

from .errors import InvariantViolation, IterationCapExceeded, LevelOutOfRange, TooFewVertices
from .forests import decompose, prefix_edges
from .graph import Multigraph, WeightedGraph, connected_components, contract, _frozen
from .io import as_unit_weighted

DEFAULT_RHO_CONSTANT = 1014.0 / 0.38
DEFAULT_SAMPLING_CONSTANT = 9216.0 / 0.38
RNG_FAMILY = "numpy-pcg64"


@dataclass(frozen=True)
class SparsifyConfig:
    """Tunable constants for one sparsification run.

    epsilon: target relative cut error, in (0, 1].
    rho_constant: scales the density threshold rho = rho_constant * ln(n) / epsilon^2.
    sampling_constant: scales the final per-edge keep probabilities.
    seed: 64-bit seed for the run's generator.
    max_iterations: cap on sampling levels; None means 2*ceil(log2(m+2)) + 64.
    """

    epsilon: float
    rho_constant: float = DEFAULT_RHO_CONSTANT
    sampling_constant: float = DEFAULT_SAMPLING_CONSTANT
    seed: int = 0
    max_iterations: int | None = None

    def __post_init__(self):
        if not 0.0 < self.epsilon <= 1.0:
            raise ValueError("epsilon must lie in (0, 1]")
        if self.rho_constant <= 0 or self.sampling_constant <= 0:
            raise ValueError("constants must be positive")
        if self.max_iterations is not None and self.max_iterations < 1:
            raise ValueError("max_iterations must be positive")


@dataclass(frozen=True, eq=False)
class LevelRecord:
    """What one sampling level did.

    active_edges: edges alive entering the level (sorted original ids).
    settled_edges: edges whose keep probability was fixed at this level.
    heavy_edges: the certified-heavy remainder handed to the next level.
    heaviness: connectivity certified for every heavy edge, rho * 2^(level+1).
    strength: sampling-strength estimate for the settled edges, rho * 4^level.
    keep_probability: final per-edge keep probability for the settled edges.
    phase_edge_counts: |E_c| entering each contraction phase, in order.
    """

    level: int
    active_edges: np.ndarray
    settled_edges: np.ndarray
    heavy_edges: np.ndarray
    heaviness: float
    strength: float
    keep_probability: float
    contraction_phases: int
    supervertex_count: int
    phase_edge_counts: tuple[int, ...]


@dataclass(frozen=True, eq=False)
class SparsifyTrace:
    """Full record of one run, sufficient to audit or replay it."""

    rho: float
    early_exit: bool
    levels: tuple[LevelRecord, ...]
    terminal_level: int
    terminal_edges: np.ndarray
    terminal_weight: float
    seed: int
    epsilon: float
    rho_constant: float
    sampling_constant: float
    generator: str
    graph: Multigraph
    timings: dict[str, float]

    def to_dict(self) -> dict:
        return {
            "schema_version": 1,
            "rho": self.rho,
            "early_exit": self.early_exit,
            "seed": self.seed,
            "constants": {
                "epsilon": self.epsilon,
                "rho_constant": self.rho_constant,
                "sampling_constant": self.sampling_constant,
            },
            "generator": self.generator,
            "levels": [
                {
                    "level": rec.level,
                    "active_edges": rec.active_edges.tolist(),
                    "settled_edges": rec.settled_edges.tolist(),
                    "heavy_edges": rec.heavy_edges.tolist(),
                    "heaviness": rec.heaviness,
                    "strength": rec.strength,
                    "keep_probability": rec.keep_probability,
                    "contraction_phases": rec.contraction_phases,
                    "supervertex_count": rec.supervertex_count,
                    "phase_edge_counts": list(rec.phase_edge_counts),
                }
                for rec in self.levels
            ],
            "terminal_level": self.terminal_level,
            "terminal_edges": self.terminal_edges.tolist(),
            "terminal_weight": self.terminal_weight,
            "timings": dict(self.timings),
        }


@dataclass(frozen=True, eq=False)
class HeavyReduction:
    """Result of reduce_to_heavy, in the input graph's local edge ids."""

    settled: np.ndarray
    heavy: np.ndarray
    phase_count: int
    supervertex_count: int
    phase_edge_counts: tuple[int, ...]


def compute_rho(vertex_count: int, config: SparsifyConfig) -> float:
    """Density threshold rho = rho_constant * ln(n) / epsilon^2."""
    if vertex_count < 2:
        raise TooFewVertices("rho needs at least two vertices")
    return config.rho_constant * math.log(vertex_count) / (config.epsilon**2)


def _keep_probability(strength: float, vertex_count: int, config: SparsifyConfig) -> float:
    p = config.sampling_constant * math.log(vertex_count) / (strength * config.epsilon**2)
    return min(p, 1.0)


def initial_split(graph: Multigraph, rho: float) -> tuple[np.ndarray, np.ndarray]:
    """Split edges into a ceil(2*rho)-forest core and the heavy remainder.

    Every remainder edge sits in a forest beyond the first ceil(2*rho),
    which certifies endpoint connectivity above 2*rho.
    """
    labeling = decompose(graph)
    base = prefix_edges(labeling, math.ceil(2.0 * rho))
    rest = np.setdiff1d(np.arange(graph.edge_count, dtype=np.int64), base, assume_unique=True)
    return base, rest


def half_sample(edge_ids: np.ndarray, rng: np.random.Generator) -> np.ndarray:
    """Keep each edge independently with probability one half.

    Draws one uniform variate per edge in ascending id order, so the
    result is a deterministic function of the generator state.
    """
    if len(edge_ids) == 0:
        return edge_ids
    return edge_ids[rng.random(len(edge_ids)) < 0.5]


def reduce_to_heavy(graph: Multigraph, k: float) -> HeavyReduction:
    """Shrink the edge set until it is small, certifying the rest as k-heavy.

    While |E_c| exceeds 2*k*|V_c| (real-valued comparison), decompose the
    current graph into forests and contract the connected components of
    forest floor(k)+1, dropping the edges that become self-loops. Every
    dropped edge had, or was connected through edges that had, forest
    index at least floor(k)+1 > k, so its endpoints keep max-flow above k
    in the input graph. Survivors all lie in the first floor(k) forests,
    at most floor(k)*(|V_c|-1) < k*|V_c| < |E_c|/2 of them, which forces
    the edge count to better than halve every phase and bounds the final
    settled set by 2*k*supervertices.
    """
    if k <= 0:
        raise ValueError("heaviness threshold must be positive")
    current = graph
    survivors = np.arange(graph.edge_count, dtype=np.int64)
    entry_counts: list[int] = []
    target_forest = math.floor(k) + 1
    while current.edge_count > 2.0 * k * current.vertex_count:
        entry_counts.append(current.edge_count)
        labeling = decompose(current)
        merge_edges = current.edges[labeling.forest_index == target_forest]
        partition = connected_components(Multigraph(current.vertex_count, merge_edges))
        current, edge_map = contract(current, partition)
        survivors = survivors[edge_map >= 0]
    heavy = np.setdiff1d(np.arange(graph.edge_count, dtype=np.int64), survivors, assume_unique=True)
    return HeavyReduction(
        settled=survivors,
        heavy=heavy,
        phase_count=len(entry_counts),
        supervertex_count=current.vertex_count,
        phase_edge_counts=tuple(entry_counts),
    )


def final_sample(
    levels,
    vertex_count: int,
    config: SparsifyConfig,
    rng: np.random.Generator,
) -> list[tuple[int, float]]:
    """Binomially sample settled edges into weighted skeleton entries.

    ``levels`` is an iterable of (level, edge_ids, strength) with level >= 1.
    Each edge draws r ~ Binomial(2^level, p) with p derived from its
    strength; it is emitted with weight r / p when r > 0 and dropped
    otherwise, which keeps the expected emitted weight at exactly 2^level.
    """
    out: list[tuple[int, float]] = []
    for level, edge_ids, strength in levels:
        p = _keep_probability(strength, vertex_count, config)
        if len(edge_ids) == 0:
            continue
        draws = rng.binomial(2**level, p, size=len(edge_ids))
        positive = draws > 0
        for eid, r in zip(edge_ids[positive].tolist(), draws[positive].tolist()):
            out.append((eid, r / p))
    return out


def _empty_ids() -> np.ndarray:
    return np.empty(0, dtype=np.int64)


def sparsify(graph: Multigraph, config: SparsifyConfig) -> tuple[WeightedGraph, SparsifyTrace]:
    """Produce a weighted skeleton approximating every cut of the input.

    A graph with at most 2*rho*n edges is returned verbatim at unit
    weights (early exit). Otherwise the first ceil(2*rho) forests are
    kept at weight one, the remainder is repeatedly half-sampled and
    reduced, and once the remainder is small it joins the skeleton whole
    at weight 2^K for terminal level K; settled edges from levels >= 1
    are binomially re-weighted. Structural invariants of the finished
    trace are checked before returning; a failure raises
    InvariantViolation and means a logic fault, not bad input.

    Works component-wise by construction, so disconnected inputs are fine.
    """
    n = graph.vertex_count
    if n < 2:
        raise TooFewVertices("sparsify needs at least two vertices")
    m = graph.edge_count
    rho = compute_rho(n, config)
    rng = np.random.default_rng(config.seed)
    all_ids = np.arange(m, dtype=np.int64)
    started = time.perf_counter()

    if m <= 2.0 * rho * n:
        level0 = LevelRecord(
            level=0,
            active_edges=all_ids,
            settled_edges=all_ids,
            heavy_edges=_empty_ids(),
            heaviness=rho * 2.0,
            strength=rho,
            keep_probability=1.0,
            contraction_phases=0,
            supervertex_count=n,
            phase_edge_counts=(),
        )
        elapsed = time.perf_counter() - started
        trace = SparsifyTrace(
            rho=rho,
            early_exit=True,
            levels=(level0,),
            terminal_level=0,
            terminal_edges=_empty_ids(),
            terminal_weight=1.0,
            seed=config.seed,
            epsilon=config.epsilon,
            rho_constant=config.rho_constant,
            sampling_constant=config.sampling_constant,
            generator=RNG_FAMILY,
            graph=graph,
            timings={"split": elapsed, "iterate": 0.0, "finalize": 0.0, "total": elapsed},
        )
        verify_trace_invariants(trace)
        return as_unit_weighted(graph), trace

    cap = config.max_iterations
    if cap is None:
        cap = 2 * math.ceil(math.log2(m + 2)) + 64

    base, remainder = initial_split(graph, rho)
    split_done = time.perf_counter()
    levels = [
        LevelRecord(
            level=0,
            active_edges=all_ids,
            settled_edges=base,
            heavy_edges=remainder,
            heaviness=rho * 2.0,
            strength=rho,
            keep_probability=1.0,
            contraction_phases=0,
            supervertex_count=n,
            phase_edge_counts=(),
        )
    ]
    heavy = remainder
    level = 0
    while len(heavy) > 2.0 * rho * n:
        if level >= cap:
            raise IterationCapExceeded(f"needed more than {cap} sampling levels")
        active = half_sample(heavy, rng)
        level += 1
        heaviness = rho * 2.0 ** (level + 1)
        strength = rho * 4.0**level
        reduction = reduce_to_heavy(Multigraph(n, graph.edges[active]), heaviness)
        settled = active[reduction.settled]
        heavy = active[reduction.heavy]
        levels.append(
            LevelRecord(
                level=level,
                active_edges=active,
                settled_edges=settled,
                heavy_edges=heavy,
                heaviness=heaviness,
                strength=strength,
                keep_probability=_keep_probability(strength, n, config),
                contraction_phases=reduction.phase_count,
                supervertex_count=reduction.supervertex_count,
                phase_edge_counts=reduction.phase_edge_counts,
            )
        )
    iterate_done = time.perf_counter()

    sampled = final_sample(
        [(rec.level, rec.settled_edges, rec.strength) for rec in levels[1:]],
        n,
        config,
        rng,
    )
    terminal_weight = 2.0**level

    id_chunks = [levels[0].settled_edges]
    weight_chunks = [np.ones(len(levels[0].settled_edges), dtype=np.float64)]
    if sampled:
        sampled_ids = np.fromiter((eid for eid, _ in sampled), dtype=np.int64, count=len(sampled))
        sampled_w = np.fromiter((w for _, w in sampled), dtype=np.float64, count=len(sampled))
        id_chunks.append(sampled_ids)
        weight_chunks.append(sampled_w)
    id_chunks.append(heavy)
    weight_chunks.append(np.full(len(heavy), terminal_weight, dtype=np.float64))
    skeleton_ids = np.concatenate(id_chunks)
    skeleton = WeightedGraph(
        n,
        _frozen(graph.edges[skeleton_ids]),
        _frozen(np.concatenate(weight_chunks)),
    )
    finalize_done = time.perf_counter()

    trace = SparsifyTrace(
        rho=rho,
        early_exit=False,
        levels=tuple(levels),
        terminal_level=level,
        terminal_edges=heavy,
        terminal_weight=terminal_weight,
        seed=config.seed,
        epsilon=config.epsilon,
        rho_constant=config.rho_constant,
        sampling_constant=config.sampling_constant,
        generator=RNG_FAMILY,
        graph=graph,
        timings={
            "split": split_done - started,
            "iterate": iterate_done - split_done,
            "finalize": finalize_done - iterate_done,
            "total": finalize_done - started,
        },
    )
    verify_trace_invariants(trace)
    return skeleton, trace


def reconstruct_intermediate(trace: SparsifyTrace, level: int) -> WeightedGraph:
    """Rebuild the weighted graph the run was implicitly approximating at a level.

    The result holds every settled set from the requested level up at
    weight 2^(i - level) plus the terminal edges at 2^(K - level);
    at level K everything has weight one.
    """
    if not 0 <= level <= trace.terminal_level:
        raise LevelOutOfRange(f"level {level} outside 0..{trace.terminal_level}")
    id_chunks = []
    weight_chunks = []
    for rec in trace.levels[level:]:
        ids = rec.settled_edges
        id_chunks.append(ids)
        weight_chunks.append(np.full(len(ids), 2.0 ** (rec.level - level), dtype=np.float64))
    id_chunks.append(trace.terminal_edges)
    weight_chunks.append(
        np.full(len(trace.terminal_edges), 2.0 ** (trace.terminal_level - level), dtype=np.float64)
    )
    ids = np.concatenate(id_chunks)
    return WeightedGraph(
        trace.graph.vertex_count,
        _frozen(trace.graph.edges[ids]),
        _frozen(np.concatenate(weight_chunks)),
    )


def _require(condition: bool, message: str) -> None:
    if not condition:
        raise InvariantViolation(message)


def verify_trace_invariants(trace: SparsifyTrace) -> None:
    """Structural self-checks on a finished run; raises InvariantViolation.

    Checks, per level: settled/heavy partition the active set, the
    heaviness and strength follow their closed forms, the settled count
    respects the 2*k*supervertices bound, and contraction-phase edge
    counts better than halve. Across levels: each active set nests inside
    the previous heavy set, the per-level pieces plus half-sampling
    discards tile the full edge set exactly, and the sampled-weight
    ledger sum(|settled_i| * 2^i / strength_i) stays within 8n.
    """
    graph = trace.graph
    m = graph.edge_count
    n = graph.vertex_count
    levels = trace.levels
    _require(len(levels) >= 1, "trace has no levels")
    all_ids = np.arange(m, dtype=np.int64)
    _require(np.array_equal(levels[0].active_edges, all_ids), "level 0 must start from every edge")
    ledger = 0.0
    pieces = []
    for i, rec in enumerate(levels):
        _require(rec.level == i, "levels must be contiguous from zero")
        merged = np.union1d(rec.settled_edges, rec.heavy_edges)
        _require(
            len(rec.settled_edges) + len(rec.heavy_edges) == len(rec.active_edges)
            and np.array_equal(merged, rec.active_edges),
            f"level {i}: settled and heavy must partition active",
        )
        _require(rec.heaviness == trace.rho * 2.0 ** (i + 1), f"level {i}: heaviness formula")
        _require(rec.strength == trace.rho * 4.0**i, f"level {i}: strength formula")
        if i >= 1:
            _require(
                len(rec.settled_edges) <= 2.0 * rec.heaviness * rec.supervertex_count,
                f"level {i}: settled set exceeds 2*k*supervertices",
            )
            ledger += len(rec.settled_edges) * 2.0**i / rec.strength
            _require(
                rec.contraction_phases == len(rec.phase_edge_counts),
                f"level {i}: phase count mismatch",
            )
            counts = rec.phase_edge_counts
            for a, b in zip(counts, counts[1:]):
                _require(2 * b < a, f"level {i}: contraction failed to halve ({a} -> {b})")
            _require(
                np.isin(rec.active_edges, levels[i - 1].heavy_edges, assume_unique=True).all(),
                f"level {i}: active edges must come from the previous heavy set",
            )
            pieces.append(np.setdiff1d(levels[i - 1].heavy_edges, rec.active_edges, assume_unique=True))
        pieces.append(rec.settled_edges)
    _require(trace.terminal_level == levels[-1].level, "terminal level mismatch")
    _require(
        np.array_equal(trace.terminal_edges, levels[-1].heavy_edges),
        "terminal edges must be the last heavy set",
    )
    _require(trace.terminal_weight == 2.0**trace.terminal_level, "terminal weight formula")
    pieces.append(trace.terminal_edges)
    covered = np.sort(np.concatenate(pieces)) if pieces else _empty_ids()
    _require(
        len(covered) == m and np.array_equal(covered, all_ids),
        "settled sets, discards, and terminal edges must tile the edge set",
    )
    _require(ledger <= 8.0 * n, f"sampled-weight ledger {ledger:.3f} exceeds 8n = {8 * n}")
    if not trace.early_exit:
        _require(
            len(levels[-1].heavy_edges) <= 2.0 * trace.rho * n,
            "run terminated with an oversized heavy set",
        )
