"""Small-graph families and distinguishing-power experiments.

The searches group family members by canonically serialized polynomials:
``find_xi_collisions`` looks for non-isomorphic graphs sharing one ξ and
asks whether the size-indexed weighted polynomial separates them, while
``search_oq2`` groups by the (Tutte, bivariate-chromatic) pair and flags
any group whose members disagree on ξ, which would answer the open
distinguishing-power question.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import partial
from itertools import combinations
from multiprocessing import get_context

import networkx as nx

from .multigraph import Multigraph
from .specializations import dpt, noble_welsh_u, tutte
from .xi_core import xi


class IdentityDefect(ArithmeticError):
    """Substitution instances disagreed inside a ξ-collision group."""


# ----- enumeration ----------------------------------------------------------


def _from_networkx(graph):
    nodes = sorted(graph.nodes())
    index = {v: i for i, v in enumerate(nodes)}
    pairs = sorted((min(index[u], index[v]), max(index[u], index[v]))
                   for u, v in graph.edges())
    return Multigraph.from_edge_list(len(nodes), pairs)


def _to_networkx(graph):
    g = nx.Graph()
    g.add_nodes_from(range(graph.num_vertices))
    for _, u, v in graph.edges:
        if u == v or g.has_edge(u, v):
            raise ValueError("graph6 encodes simple graphs only")
        g.add_edge(u, v)
    return g


def graph_to_graph6(graph):
    """graph6 string of a simple graph."""
    data = nx.to_graph6_bytes(_to_networkx(graph), header=False)
    return data.decode("ascii").strip()


def graph_from_graph6(text):
    """Simple graph from one graph6 line."""
    return _from_networkx(nx.from_graph6_bytes(text.strip().encode("ascii")))


def enumerate_trees(n):
    """One representative per isomorphism class of free trees on n vertices."""
    if not 1 <= n <= 16:
        raise ValueError("tree order must be between 1 and 16")
    if n == 1:
        yield Multigraph.from_edge_list(1, [])
        return
    if n == 2:
        yield Multigraph.from_edge_list(2, [(0, 1)])
        return
    for tree in nx.nonisomorphic_trees(n):
        yield _from_networkx(tree)


def enumerate_graphs(n, m_max=None):
    """One representative per isomorphism class of simple graphs on n
    vertices with at most m_max edges, by edge augmentation with canonical
    deduplication."""
    if not 0 <= n <= 8:
        raise ValueError("graph order must be between 0 and 8")
    cap = n * (n - 1) // 2
    if m_max is not None:
        cap = min(cap, m_max)
    level = {(): Multigraph.from_edge_list(n, [])}
    yield level[()]
    pairs = list(combinations(range(n), 2))
    edge_sets = {(): frozenset()}
    for _ in range(cap):
        nxt = {}
        nxt_edges = {}
        for key, g in level.items():
            present = edge_sets[key]
            for uv in pairs:
                if uv in present:
                    continue
                h = Multigraph.from_edge_list(n, sorted(present | {uv}))
                hkey = h.canonical_key()
                if hkey not in nxt:
                    nxt[hkey] = h
                    nxt_edges[hkey] = present | {uv}
        level = {k: nxt[k] for k in sorted(nxt)}
        edge_sets = {k: nxt_edges[k] for k in level}
        for k in level:
            yield level[k]


# ----- collision reports -------------------------------------------------------


@dataclass
class CollisionGroup:
    key: str
    members: tuple
    verdicts: dict = field(default_factory=dict)


@dataclass
class CollisionReport:
    family: str
    scanned: int
    groups: list
    frontier: str = ""

    def to_record(self):
        return {
            "family": self.family,
            "scanned": self.scanned,
            "frontier": self.frontier,
            "groups": [
                {"key": g.key, "members": list(g.members), "verdicts": g.verdicts}
                for g in self.groups
            ],
        }

    def summary_lines(self):
        lines = ["family %s: %d graphs scanned, %d collision groups"
                 % (self.family, self.scanned, len(self.groups))]
        if self.frontier:
            lines.append(self.frontier)
        for g in self.groups:
            lines.append("group %s" % " ".join(g.members))
            for k in sorted(g.verdicts):
                lines.append("  %s: %s" % (k, g.verdicts[k]))
        return lines


def _pmap(fn, items, jobs):
    if jobs <= 1:
        return [fn(item) for item in items]
    ctx = get_context("fork")
    with ctx.Pool(jobs) as pool:
        return pool.map(fn, items)


def _xi_text(graph):
    return str(xi(graph))


def _tp_texts(graph):
    return (str(tutte(graph)), str(dpt(graph)))


def find_xi_collisions(family, family_name="family", jobs=1):
    """Group the family by serialized ξ and analyse every group of size >= 2.

    Within each group the Tutte and bivariate chromatic polynomials must
    agree (they are substitution instances; disagreement raises), and the
    size-indexed weighted polynomial is compared pairwise.
    """
    members = list(family)
    texts = _pmap(_xi_text, members, jobs)
    buckets = {}
    for i, text in enumerate(texts):
        buckets.setdefault(text, []).append(i)
    groups = []
    for text, idxs in buckets.items():
        if len(idxs) < 2:
            continue
        graphs = [members[i] for i in idxs]
        keys = [g.canonical_key() for g in graphs]
        if len(set(keys)) != len(keys):
            raise IdentityDefect("family contains isomorphic duplicates")
        t_texts = [str(tutte(g)) for g in graphs]
        p_texts = [str(dpt(g)) for g in graphs]
        if len(set(t_texts)) != 1 or len(set(p_texts)) != 1:
            raise IdentityDefect(
                "substitution instances disagree inside a xi-collision group"
            )
        u_texts = [str(noble_welsh_u(g)) for g in graphs]
        distinct = len(set(u_texts)) == len(u_texts)
        groups.append(CollisionGroup(
            key=text,
            members=tuple(graph_to_graph6(g) for g in graphs),
            verdicts={
                "tutte-agrees": True,
                "dpt-agrees": True,
                "noble-welsh-u-distinguishes-all-pairs": distinct,
            },
        ))
    frontier = ("no xi collisions in %s (exhaustive)" % family_name
                if not groups else "")
    return CollisionReport(family_name, len(members), groups, frontier)


def search_oq2(family, family_name="family", jobs=1):
    """Group the family by the (Tutte, dpt) pair and inspect ξ within groups.

    A group whose members share both classical polynomials but split on ξ
    would witness strictly greater distinguishing power; such groups get
    ``candidate: True`` in their verdicts.
    """
    members = list(family)
    tp = _pmap(_tp_texts, members, jobs)
    buckets = {}
    for i, key in enumerate(tp):
        buckets.setdefault(key, []).append(i)
    groups = []
    for key, idxs in buckets.items():
        if len(idxs) < 2:
            continue
        graphs = [members[i] for i in idxs]
        xi_texts = [str(xi(g)) for g in graphs]
        agrees = len(set(xi_texts)) == 1
        groups.append(CollisionGroup(
            key="tutte=%s dpt=%s" % key,
            members=tuple(graph_to_graph6(g) for g in graphs),
            verdicts={
                "xi-agrees": agrees,
                "candidate": not agrees,
                "distinct-xi-count": len(set(xi_texts)),
            },
        ))
    frontier = ("no (tutte, dpt) collisions in %s" % family_name
                if not groups else "")
    return CollisionReport(family_name, len(members), groups, frontier)
