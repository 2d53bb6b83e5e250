"""Seeded graph families for tests and benchmarks.

Specs are compact strings like ``gnp:n=40,p=0.3`` or ``cycle:n=12``;
``parse`` turns one into a GeneratorSpec and ``generate`` builds the
graph. All randomness comes from a generator seeded per call, so a
(spec, seed) pair always yields the same edge list in the same order.
Every family emits a simple graph: no self-loops, no parallel edges.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from types import MappingProxyType

import numpy as np

from .errors import InvalidSpec
from .graph import Multigraph, build_multigraph


@dataclass(frozen=True)
class GeneratorSpec:
    family: str
    params: dict = field(default_factory=dict)

    @classmethod
    def parse(cls, text: str) -> "GeneratorSpec":
        """Parse ``family`` or ``family:key=value,key=value``.

        Values that look like integers become ints, everything else must
        parse as a float.
        """
        text = text.strip()
        family, _, tail = text.partition(":")
        family = family.strip()
        if not family:
            raise InvalidSpec("empty generator family")
        params: dict = {}
        if tail.strip():
            for item in tail.split(","):
                key, sep, value = item.partition("=")
                key = key.strip()
                value = value.strip()
                if not sep or not key or not value:
                    raise InvalidSpec(f"malformed parameter {item!r} in spec {text!r}")
                try:
                    params[key] = int(value)
                except ValueError:
                    try:
                        params[key] = float(value)
                    except ValueError:
                        raise InvalidSpec(f"parameter {key}={value!r} is not a number") from None
        return cls(family=family, params=params)


def _take_int(params: dict, key: str, default=None, minimum: int | None = None) -> int:
    if key not in params:
        if default is None:
            raise InvalidSpec(f"missing required parameter {key!r}")
        return default
    value = params.pop(key)
    if not isinstance(value, int):
        raise InvalidSpec(f"parameter {key!r} must be an integer, got {value!r}")
    if minimum is not None and value < minimum:
        raise InvalidSpec(f"parameter {key!r} must be at least {minimum}, got {value}")
    return value


def _take_float(params: dict, key: str, lo: float, hi: float) -> float:
    if key not in params:
        raise InvalidSpec(f"missing required parameter {key!r}")
    value = float(params.pop(key))
    if not lo <= value <= hi:
        raise InvalidSpec(f"parameter {key!r} must lie in [{lo}, {hi}], got {value}")
    return value


def _complete_edges(n: int) -> np.ndarray:
    iu, iv = np.triu_indices(n, k=1)
    return np.column_stack([iu, iv]).astype(np.int64)


def _gnp(params: dict, rng: np.random.Generator):
    n = _take_int(params, "n", minimum=2)
    prob = _take_float(params, "p", 0.0, 1.0)
    pairs = _complete_edges(n)
    keep = rng.random(len(pairs)) < prob
    return n, pairs[keep]


def _gnm(params: dict, rng: np.random.Generator):
    """m distinct edges sampled uniformly without replacement."""
    n = _take_int(params, "n", minimum=2)
    m = _take_int(params, "m", minimum=0)
    limit = n * (n - 1) // 2
    if m > limit:
        raise InvalidSpec(f"gnm wants {m} distinct edges but {n} vertices allow only {limit}")
    if 2 * m >= limit:
        # dense regime: rejection stalls, so shuffle the full pair list instead
        pairs = _complete_edges(n)
        return n, pairs[rng.permutation(limit)[:m]]
    seen: set[tuple[int, int]] = set()
    rows: list[tuple[int, int]] = []
    while len(rows) < m:
        want = m - len(rows)
        candidates = rng.integers(0, n, size=(want + want // 4 + 16, 2))
        for u, v in candidates.tolist():
            if u == v or (u, v) in seen or (v, u) in seen:
                continue
            seen.add((u, v))
            rows.append((u, v))
            if len(rows) == m:
                break
    return n, np.array(rows, dtype=np.int64).reshape(m, 2)


def _cycle(params: dict, rng: np.random.Generator):
    n = _take_int(params, "n", minimum=3)
    vertices = np.arange(n, dtype=np.int64)
    return n, np.column_stack([vertices, (vertices + 1) % n])


def _path(params: dict, rng: np.random.Generator):
    n = _take_int(params, "n", minimum=2)
    vertices = np.arange(n - 1, dtype=np.int64)
    return n, np.column_stack([vertices, vertices + 1])


def _complete(params: dict, rng: np.random.Generator):
    n = _take_int(params, "n", minimum=2)
    return n, _complete_edges(n)


def _barbell(params: dict, rng: np.random.Generator):
    """Two cliques of size ``clique`` joined by a path with ``path`` interior vertices."""
    clique = _take_int(params, "clique", minimum=2)
    interior = _take_int(params, "path", default=0, minimum=0)
    n = 2 * clique + interior
    left = _complete_edges(clique)
    right = _complete_edges(clique) + (clique + interior)
    # chain from the last left-clique vertex through the interior to the first right-clique vertex
    stops = np.concatenate([[clique - 1], np.arange(clique, clique + interior), [clique + interior]])
    bridge = np.column_stack([stops[:-1], stops[1:]])
    return n, np.concatenate([left, bridge, right])


def _two_cliques_bridge(params: dict, rng: np.random.Generator):
    clique = _take_int(params, "clique", minimum=2)
    return _barbell({"clique": clique, "path": 0}, rng)


def _pairing_repair(n: int, degree: int, rng: np.random.Generator) -> np.ndarray | None:
    """One simple ``degree``-regular edge list, or None if repair stalls.

    A raw pairing is simple only with probability roughly exp(-d^2/4),
    hopeless beyond small degrees, so instead of resampling wholesale we
    swap an endpoint of every self-loop or duplicate edge with a
    randomly chosen edge. Swaps preserve each vertex's degree.
    """
    m = n * degree // 2
    for _ in range(100):
        points = rng.permutation(n * degree)
        u = (points[0::2] // degree).astype(np.int64)
        v = (points[1::2] // degree).astype(np.int64)
        for _ in range(200):
            key = np.minimum(u, v) * n + np.maximum(u, v)
            order = np.argsort(key, kind="stable")
            sorted_key = key[order]
            duplicate = np.zeros(m, dtype=bool)
            duplicate[order[1:]] = sorted_key[1:] == sorted_key[:-1]
            bad = np.flatnonzero((u == v) | duplicate)
            if len(bad) == 0:
                return np.column_stack([u, v])
            partners = rng.integers(0, m, size=len(bad))
            for b, r in zip(bad.tolist(), partners.tolist()):
                v[b], v[r] = v[r], v[b]
    return None


def _complement_edges(n: int, edges: np.ndarray) -> np.ndarray:
    pairs = _complete_edges(n)
    key = pairs[:, 0] * n + pairs[:, 1]
    used = np.minimum(edges[:, 0], edges[:, 1]) * n + np.maximum(edges[:, 0], edges[:, 1])
    return pairs[~np.isin(key, used)]


def _random_regular(params: dict, rng: np.random.Generator):
    """Pairing model with collision repair; dense degrees go via the complement."""
    n = _take_int(params, "n", minimum=2)
    degree = _take_int(params, "d", minimum=1)
    if n * degree % 2 != 0:
        raise InvalidSpec("random-regular needs n*d even")
    if degree >= n:
        raise InvalidSpec("random-regular needs d < n")
    if degree > (n - 1) // 2:
        # repair converges fast only when collisions are rare; above half
        # density build the (n-1-d)-regular complement instead
        inner = _pairing_repair(n, n - 1 - degree, rng)
        if inner is not None:
            return n, _complement_edges(n, inner)
    else:
        edges = _pairing_repair(n, degree, rng)
        if edges is not None:
            return n, edges
    raise InvalidSpec(f"could not realize a simple {degree}-regular graph on {n} vertices")


_FAMILIES = MappingProxyType(
    {
        "gnp": _gnp,
        "gnm": _gnm,
        "cycle": _cycle,
        "path": _path,
        "complete": _complete,
        "barbell": _barbell,
        "two-cliques-bridge": _two_cliques_bridge,
        "random-regular": _random_regular,
    }
)


def families() -> tuple[str, ...]:
    return tuple(_FAMILIES)


def generate(spec: GeneratorSpec | str, seed: int = 0) -> Multigraph:
    """Build the multigraph a spec describes, deterministically in (spec, seed)."""
    if isinstance(spec, str):
        spec = GeneratorSpec.parse(spec)
    builder = _FAMILIES.get(spec.family)
    if builder is None:
        known = ", ".join(families())
        raise InvalidSpec(f"unknown generator family {spec.family!r} (known: {known})")
    params = dict(spec.params)
    rng = np.random.default_rng(seed)
    n, edges = builder(params, rng)
    if params:
        extras = ", ".join(sorted(params))
        raise InvalidSpec(f"unknown parameter(s) for {spec.family!r}: {extras}")
    return build_multigraph(n, edges)
