"""The edge elimination polynomial, by recurrence and by subset expansion.

Two independent definitions are implemented:

* ``xi`` / ``xi_lab``: the confluent three-way recurrence (delete,
  contract, extract) with the product rule on disjoint components,
  memoized across isomorphism via canonical forms;
* ``xi_expansion`` / ``xi_lab_expansion``: direct enumeration over pairs
  of vertex-disjoint edge subsets.

``xi_general_eval`` evaluates the raw pre-confluence recurrence, which
carries an extra deletion coefficient and is order dependent in general;
it exists so the verification harness can demonstrate both confluence and
its failure.
"""

from __future__ import annotations

import hashlib
import random
from collections import OrderedDict
from dataclasses import dataclass
from fractions import Fraction

from .multigraph import Multigraph
from .polyring import MPoly

_X = MPoly.variable("x")
_Y = MPoly.variable("y")
_Z = MPoly.variable("z")


class UnlabeledEdgeError(ValueError):
    """A labeled operation met an edge without a label."""


class EdgeLabeling:
    """Total assignment of label symbols to edge identifiers."""

    __slots__ = ("alphabet", "_map")

    def __init__(self, assignment, alphabet=None):
        self._map = dict(assignment)
        self.alphabet = tuple(sorted(set(alphabet or ()) | set(self._map.values())))

    def label(self, eid):
        try:
            return self._map[eid]
        except KeyError:
            raise UnlabeledEdgeError("edge %r has no label" % (eid,)) from None

    def restricted_map(self, graph):
        """Label map for exactly the edges of ``graph``."""
        return {eid: self.label(eid) for eid in graph.edge_ids()}

    def items(self):
        return sorted(self._map.items())

    def __repr__(self):
        return "EdgeLabeling(%r)" % (dict(sorted(self._map.items())),)


@dataclass(frozen=True)
class GeneralParams:
    """Coefficients (w, x, y, z) of the pre-confluence recurrence."""

    w: Fraction
    x: Fraction
    y: Fraction
    z: Fraction

    @classmethod
    def of(cls, w, x, y, z):
        return cls(Fraction(w), Fraction(x), Fraction(y), Fraction(z))


# ----- elimination policies -------------------------------------------------


class EliminationPolicy:
    """Deterministic rule choosing the next edge to eliminate.

    Policies are pure functions of the graph representation, so a policy
    makes the same choice whenever it sees the same graph again.
    """

    def choose_edge(self, graph):
        raise NotImplementedError

    def order_components(self, parts):
        return list(parts)


class MaxDegreePolicy(EliminationPolicy):
    """Prefers the edge with the largest endpoint degree sum (shrinks fast)."""

    def choose_edge(self, graph):
        deg = [0] * graph.num_vertices
        for _, u, v in graph.edges:
            deg[u] += 1
            deg[v] += 1
        eid, _, _ = max(graph.edges, key=lambda rec: (deg[rec[1]] + deg[rec[2]], -rec[0]))
        return eid


class SeededPolicy(EliminationPolicy):
    """Pseudo-random policy: same seed + same graph -> same choice."""

    def __init__(self, seed):
        self.seed = int(seed)

    def _draw(self, payload):
        digest = hashlib.blake2b(
            repr((self.seed, payload)).encode(), digest_size=8
        ).digest()
        return int.from_bytes(digest, "big")

    def choose_edge(self, graph):
        eids = graph.edge_ids()
        return eids[self._draw(graph.raw_key()) % len(eids)]

    def order_components(self, parts):
        keys = tuple(p.raw_key() for p in parts)
        rng = random.Random(self._draw(keys))
        order = list(range(len(parts)))
        rng.shuffle(order)
        return [parts[i] for i in order]


class FixedPriorityPolicy(EliminationPolicy):
    """Eliminates edges by an explicit id priority list (scripted orders)."""

    def __init__(self, priority):
        self.rank = {eid: i for i, eid in enumerate(priority)}

    def choose_edge(self, graph):
        eids = graph.edge_ids()
        fallback = len(self.rank)
        return min(eids, key=lambda e: (self.rank.get(e, fallback), e))


# ----- memo tables ------------------------------------------------------------


class BoundedCache:
    """Mapping with optional least-recently-used eviction."""

    def __init__(self, bound=None):
        self.bound = bound
        self.data = OrderedDict()

    def get(self, key):
        try:
            self.data.move_to_end(key)
        except KeyError:
            return None
        return self.data[key]

    def __setitem__(self, key, value):
        self.data[key] = value
        self.data.move_to_end(key)
        if self.bound is not None:
            while len(self.data) > self.bound:
                self.data.popitem(last=False)

    def clear(self):
        self.data.clear()

    def __len__(self):
        return len(self.data)


_XI_CACHE = BoundedCache()
_XI_LAB_CACHE = BoundedCache()


def set_cache_bound(bound):
    """Cap both global memo tables; ``None`` means unbounded."""
    for cache in (_XI_CACHE, _XI_LAB_CACHE):
        cache.bound = bound
        if bound is not None:
            while len(cache.data) > bound:
                cache.data.popitem(last=False)


def clear_caches():
    _XI_CACHE.clear()
    _XI_LAB_CACHE.clear()


# ----- the confluent recurrence ------------------------------------------------


class _Recurrence:
    """Shared machinery of the unlabeled and labeled recurrences.

    memo="canonical" keys the cache on canonical forms (cross-isomorphism
    sharing); memo="raw" keys on the exact representation, which only
    deduplicates literally identical sub-evaluations and therefore cannot
    mask order dependence; memo="off" caches nothing.
    """

    def __init__(self, labeling, policy, memo, cache):
        self.labeling = labeling
        self.policy = policy or MaxDegreePolicy()
        self.memo = memo
        self.cache = cache

    def key(self, graph):
        if self.labeling is None:
            if self.memo == "canonical":
                return graph.canonical_key()
            return graph.raw_key()
        labels = self.labeling.restricted_map(graph)
        if self.memo == "canonical":
            return graph.canonical_key(labels)
        return (graph.raw_key(), tuple(sorted(labels.items())))

    def coefficients(self, eid):
        if self.labeling is None:
            return _Y, _Z
        t = MPoly.variable("t_%s" % (self.labeling.label(eid),))
        return _Y * t, _Z * t

    def run(self, graph):
        if graph.num_edges == 0:
            return _X ** graph.num_vertices
        parts = graph.components()
        if len(parts) == 1:
            return self._connected(parts[0])
        result = MPoly.const(1)
        for part in self.policy.order_components(parts):
            result = result * self.run(part)
        return result

    def _connected(self, graph):
        if graph.num_edges == 0:
            return _X ** graph.num_vertices
        key = None
        if self.cache is not None:
            key = self.key(graph)
            hit = self.cache.get(key)
            if hit is not None:
                return hit
        eid = self.policy.choose_edge(graph)
        ycoef, zcoef = self.coefficients(eid)
        value = (
            self.run(graph.delete_edge(eid))
            + ycoef * self.run(graph.contract_edge(eid))
            + zcoef * self.run(graph.extract_edge(eid))
        )
        if self.cache is not None:
            self.cache[key] = value
        return value


def _pick_cache(memo, policy, global_cache):
    if memo not in ("canonical", "raw", "off"):
        raise ValueError("memo must be 'canonical', 'raw' or 'off'")
    if memo == "off":
        return None
    if memo == "canonical" and policy is None:
        return global_cache
    return {}


def xi(graph, *, policy=None, memo="canonical"):
    """Edge elimination polynomial of ``graph`` over (x, y, z).

    The result is independent of the elimination policy; passing an
    explicit policy disables the shared cache so order-invariance can be
    observed rather than assumed.
    """
    cache = _pick_cache(memo, policy, _XI_CACHE)
    return _Recurrence(None, policy, memo, cache).run(graph)


def xi_lab(graph, labeling, *, policy=None, memo="canonical"):
    """Labeled edge elimination polynomial over (x, y, z) and t_label."""
    labeling.restricted_map(graph)  # raises UnlabeledEdgeError early
    cache = _pick_cache(memo, policy, _XI_LAB_CACHE)
    return _Recurrence(labeling, policy, memo, cache).run(graph)


# ----- the subset expansion -----------------------------------------------------


def _disjoint_pairs(graph):
    """Yield (A, B) pairs of edge-id tuples with disjoint vertex supports.

    B is enumerated over edges not incident to the support of A, pruning
    the naive 4**m pair space.
    """
    eids = graph.edge_ids()
    ends = {eid: graph.endpoints(eid) for eid in eids}
    m = len(eids)
    for abits in range(1 << m):
        A = [eids[i] for i in range(m) if abits >> i & 1]
        support = set()
        for eid in A:
            support.update(ends[eid])
        candidates = [eid for eid in eids
                      if ends[eid][0] not in support and ends[eid][1] not in support]
        for bbits in range(1 << len(candidates)):
            B = [candidates[i] for i in range(len(candidates)) if bbits >> i & 1]
            yield A, B


def xi_expansion(graph):
    """ξ by direct enumeration over vertex-disjoint subset pairs (A, B)."""
    acc = {}
    for A, B in _disjoint_pairs(graph):
        k_all = graph.count_components(A + B)
        k_cov = graph.covered_components(B)
        xk = k_all - k_cov
        yk = len(A) + len(B) - k_cov
        assert xk >= 0 and yk >= 0
        key = (xk, yk, k_cov)
        acc[key] = acc.get(key, 0) + 1
    return MPoly(("x", "y", "z"), acc)


def xi_lab_expansion(graph, labeling):
    """Labeled expansion; each chosen edge contributes its t_label factor.

    Uses the denominator-free exponent form x^(k-kcov) y^(|A|+|B|-kcov)
    z^kcov, which is an exact regrouping of the quotient formulation.
    """
    labels = labeling.restricted_map(graph)
    alphabet = tuple(sorted(set(labels.values())))
    index = {lab: i for i, lab in enumerate(alphabet)}
    vars = ("x", "y", "z") + tuple("t_%s" % lab for lab in alphabet)
    acc = {}
    for A, B in _disjoint_pairs(graph):
        k_all = graph.count_components(A + B)
        k_cov = graph.covered_components(B)
        counts = [0] * len(alphabet)
        for eid in A + B:
            counts[index[labels[eid]]] += 1
        key = (k_all - k_cov, len(A) + len(B) - k_cov, k_cov, *counts)
        acc[key] = acc.get(key, 0) + 1
    return MPoly(vars, acc)


# ----- the pre-confluence recurrence ---------------------------------------------


def xi_general_eval(graph, params, policy):
    """Value of w*f(G-e) + y*f(G/e) + z*f(G†e) along the policy's order.

    No sharing across isomorphism: the cache key is the exact graph
    representation, so two hits denote literally the same sub-evaluation
    under the same policy.  Results may differ between policies; that is
    the point.
    """
    if not isinstance(params, GeneralParams):
        params = GeneralParams.of(*params)
    cache = {}

    def run(graph):
        if graph.num_edges == 0:
            return params.x ** graph.num_vertices
        parts = graph.components()
        if len(parts) > 1:
            value = Fraction(1)
            for part in policy.order_components(parts):
                value *= run(part)
            return value
        key = graph.raw_key()
        if key in cache:
            return cache[key]
        eid = policy.choose_edge(graph)
        value = (
            params.w * run(graph.delete_edge(eid))
            + params.y * run(graph.contract_edge(eid))
            + params.z * run(graph.extract_edge(eid))
        )
        cache[key] = value
        return value

    return run(graph)


def xi_lab_general_eval(graph, labeling, coeffs, x_value, policy):
    """Labeled pre-confluence recurrence with per-label (w, y, z) coefficients."""
    table = {
        lab: tuple(Fraction(c) for c in wyz) for lab, wyz in coeffs.items()
    }
    x_value = Fraction(x_value)
    cache = {}

    def run(graph):
        if graph.num_edges == 0:
            return x_value ** graph.num_vertices
        parts = graph.components()
        if len(parts) > 1:
            value = Fraction(1)
            for part in policy.order_components(parts):
                value *= run(part)
            return value
        key = graph.raw_key()
        if key in cache:
            return cache[key]
        eid = policy.choose_edge(graph)
        label = labeling.label(eid)
        try:
            w, y, z = table[label]
        except KeyError:
            raise ValueError("no coefficients for label %r" % (label,)) from None
        value = (
            w * run(graph.delete_edge(eid))
            + y * run(graph.contract_edge(eid))
            + z * run(graph.extract_edge(eid))
        )
        cache[key] = value
        return value

    return run(graph)
