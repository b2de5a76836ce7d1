"""Finite multigraphs with stable edge identities.

Vertices are dense integers ``0..n-1`` and are renumbered by every
operation that removes vertices.  Edges carry explicit ids that survive
deletion, contraction and extraction, so parallel edges are individually
addressable and labellings keyed by edge id remain valid on the
sub-multigraphs an elimination produces.  Loops and parallel edges are
first-class; the empty graph is a valid value.

All values are immutable after construction and every operation returns
a fresh graph.
"""

from __future__ import annotations


class Multigraph:
    __slots__ = ("num_vertices", "edges", "_emap", "_ckey")

    def __init__(self, num_vertices, edges=()):
        num_vertices = int(num_vertices)
        if num_vertices < 0:
            raise ValueError("negative vertex count")
        records = []
        seen = set()
        for eid, u, v in edges:
            if not (0 <= u < num_vertices and 0 <= v < num_vertices):
                raise ValueError("edge %r has endpoint outside 0..%d" % (eid, num_vertices - 1))
            if eid in seen:
                raise ValueError("duplicate edge id %r" % (eid,))
            seen.add(eid)
            records.append((eid, u, v) if u <= v else (eid, v, u))
        records.sort()
        self.num_vertices = num_vertices
        self.edges = tuple(records)
        self._emap = {eid: (u, v) for eid, u, v in records}
        self._ckey = None

    @classmethod
    def from_edge_list(cls, vertex_count, pairs):
        """Graph on ``vertex_count`` vertices with edge ids in sequence order."""
        edges = [(i, u, v) for i, (u, v) in enumerate(pairs)]
        return cls(vertex_count, edges)

    # ----- basic access ---------------------------------------------------

    @property
    def num_edges(self):
        return len(self.edges)

    def edge_ids(self):
        return tuple(eid for eid, _, _ in self.edges)

    def endpoints(self, eid):
        try:
            return self._emap[eid]
        except KeyError:
            raise ValueError("unknown edge id %r" % (eid,)) from None

    def is_loop(self, eid):
        u, v = self.endpoints(eid)
        return u == v

    def degree(self, v):
        """Incidence count at v; a loop contributes 2."""
        total = 0
        for _, a, b in self.edges:
            total += (a == v) + (b == v)
        return total

    def loop_count(self):
        return sum(1 for _, u, v in self.edges if u == v)

    def raw_key(self):
        return (self.num_vertices, self.edges)

    def __eq__(self, other):
        if not isinstance(other, Multigraph):
            return NotImplemented
        return self.raw_key() == other.raw_key()

    def __hash__(self):
        return hash(self.raw_key())

    def __repr__(self):
        pairs = ", ".join("%d-%d" % (u, v) for _, u, v in self.edges)
        return "Multigraph(n=%d, [%s])" % (self.num_vertices, pairs)

    # ----- elimination operations ------------------------------------------

    def delete_edge(self, eid):
        """Remove the single edge record; vertices unchanged."""
        self.endpoints(eid)
        return Multigraph(self.num_vertices,
                          [rec for rec in self.edges if rec[0] != eid])

    def contract_edge(self, eid):
        """Unify the endpoints of the edge and drop it.

        Parallel copies of the contracted edge become loops.  Contracting a
        loop is defined as deleting it, which keeps the recurrence consistent
        with the subset expansion on loops.
        """
        u, v = self.endpoints(eid)
        if u == v:
            return self.delete_edge(eid)

        def shift(w):
            if w == v:
                w = u
            return w - 1 if w > v else w

        edges = [(i, shift(a), shift(b)) for i, a, b in self.edges if i != eid]
        return Multigraph(self.num_vertices - 1, edges)

    def extract_edge(self, eid):
        """Induced subgraph on the complement of the edge's endpoints."""
        u, v = self.endpoints(eid)
        keep = [w for w in range(self.num_vertices) if w != u and w != v]
        return self.induced_subgraph(keep)

    def induced_subgraph(self, vertices):
        """Subgraph on the given vertices, renumbered dense; edge ids kept."""
        kept = sorted(set(vertices))
        remap = {w: i for i, w in enumerate(kept)}
        edges = [(i, remap[a], remap[b]) for i, a, b in self.edges
                 if a in remap and b in remap]
        return Multigraph(len(kept), edges)

    def disjoint_union(self, other):
        """Vertex and edge sets relabeled apart and unioned."""
        offset = self.num_vertices
        edges = [(k, u, v) for k, (_, u, v) in enumerate(self.edges)]
        base = len(edges)
        edges += [(base + k, u + offset, v + offset)
                  for k, (_, u, v) in enumerate(other.edges)]
        return Multigraph(offset + other.num_vertices, edges)

    def relabel(self, perm):
        """Apply the vertex permutation perm[old] == new (testing aid)."""
        if sorted(perm) != list(range(self.num_vertices)):
            raise ValueError("not a permutation of the vertices")
        edges = [(i, perm[a], perm[b]) for i, a, b in self.edges]
        return Multigraph(self.num_vertices, edges)

    # ----- component counting ----------------------------------------------

    def _check_subset(self, edge_ids):
        ids = tuple(edge_ids)
        for eid in ids:
            if eid not in self._emap:
                raise ValueError("foreign edge id %r" % (eid,))
        return ids

    def _roots(self, edge_ids):
        parent = list(range(self.num_vertices))

        def find(a):
            while parent[a] != a:
                parent[a] = parent[parent[a]]
                a = parent[a]
            return a

        for eid in edge_ids:
            u, v = self._emap[eid]
            ru, rv = find(u), find(v)
            if ru != rv:
                parent[rv] = ru
        return find

    def count_components(self, edge_ids=None):
        """Components of the spanning subgraph (V, S), isolated vertices included."""
        if edge_ids is None:
            edge_ids = self.edge_ids()
        else:
            edge_ids = self._check_subset(edge_ids)
        find = self._roots(edge_ids)
        return len({find(v) for v in range(self.num_vertices)})

    def covered_components(self, edge_ids):
        """Components of the subgraph induced on the vertices touched by S."""
        edge_ids = self._check_subset(edge_ids)
        find = self._roots(edge_ids)
        covered = set()
        for eid in edge_ids:
            u, v = self._emap[eid]
            covered.add(u)
            covered.add(v)
        return len({find(v) for v in covered})

    def vertex_support(self, edge_ids):
        """All endpoints of the given edges."""
        edge_ids = self._check_subset(edge_ids)
        support = set()
        for eid in edge_ids:
            u, v = self._emap[eid]
            support.add(u)
            support.add(v)
        return frozenset(support)

    def component_sizes(self, edge_ids=None):
        """Sorted vertex counts of the spanning components of (V, S)."""
        if edge_ids is None:
            edge_ids = self.edge_ids()
        else:
            edge_ids = self._check_subset(edge_ids)
        find = self._roots(edge_ids)
        sizes = {}
        for v in range(self.num_vertices):
            r = find(v)
            sizes[r] = sizes.get(r, 0) + 1
        return tuple(sorted(sizes.values()))

    def components(self):
        """Connected components as induced subgraphs, ordered by least vertex."""
        find = self._roots(self.edge_ids())
        buckets = {}
        for v in range(self.num_vertices):
            buckets.setdefault(find(v), []).append(v)
        groups = sorted(buckets.values(), key=lambda g: g[0])
        return [self.induced_subgraph(g) for g in groups]

    def is_connected(self):
        return self.count_components() <= 1

    # ----- canonical form ---------------------------------------------------

    def canonical_key(self, edge_labels=None):
        """Canonical form of the (optionally edge-labeled) multigraph.

        Two graphs receive equal keys iff they are isomorphic respecting
        multiplicities, loops, and literal edge labels.  The key is the full
        relabeled edge multiset rather than a hash, so key equality implies
        isomorphism by construction.
        """
        if edge_labels is None:
            cache_slot = None
            labels = {eid: 0 for eid, _, _ in self.edges}
            alphabet = ()
        else:
            try:
                restricted = {eid: edge_labels[eid] for eid, _, _ in self.edges}
            except KeyError as exc:
                raise ValueError("edge %r has no label" % (exc.args[0],)) from None
            cache_slot = tuple(sorted(restricted.items()))
            alphabet = tuple(sorted(set(restricted.values())))
            codes = {lab: i for i, lab in enumerate(alphabet)}
            labels = {eid: codes[lab] for eid, lab in restricted.items()}
        if self._ckey is None:
            self._ckey = {}
        if cache_slot in self._ckey:
            return self._ckey[cache_slot]
        pair_sigs = {}
        loop_sigs = {}
        for eid, u, v in self.edges:
            if u == v:
                loop_sigs.setdefault(u, []).append(labels[eid])
            else:
                pair_sigs.setdefault((u, v), []).append(labels[eid])
        pair_sigs = {k: tuple(sorted(v)) for k, v in pair_sigs.items()}
        loop_sigs = {k: tuple(sorted(v)) for k, v in loop_sigs.items()}
        form = ("mg", self.num_vertices, alphabet,
                _canonical_entries(self.num_vertices, pair_sigs, loop_sigs))
        self._ckey[cache_slot] = form
        return form


def _canonical_entries(n, pair_sigs, loop_sigs):
    """Minimal edge-multiset encoding over refinement-guided relabelings."""
    if n == 0:
        return ()
    nbrs = [[] for _ in range(n)]
    for (u, v), sig in pair_sigs.items():
        nbrs[u].append((v, sig))
        nbrs[v].append((u, sig))
    lsig = [loop_sigs.get(v, ()) for v in range(n)]

    def refine(colors):
        classes = len(set(colors))
        while True:
            inv = [
                (colors[v], lsig[v],
                 tuple(sorted((colors[u], sig) for u, sig in nbrs[v])))
                for v in range(n)
            ]
            rank = {key: i for i, key in enumerate(sorted(set(inv)))}
            colors = [rank[key] for key in inv]
            if len(rank) == classes:
                return colors
            classes = len(rank)

    def is_twin(a, b):
        # True when swapping a and b alone is an automorphism.
        if lsig[a] != lsig[b]:
            return False
        view_a = {u: sig for u, sig in nbrs[a] if u != b}
        view_b = {u: sig for u, sig in nbrs[b] if u != a}
        return view_a == view_b

    def encode(colors):
        order = sorted(range(n), key=lambda v: colors[v])
        pos = {v: i for i, v in enumerate(order)}
        entries = []
        for (u, v), sig in pair_sigs.items():
            a, b = sorted((pos[u], pos[v]))
            entries.append((a, b, sig))
        for v, sig in loop_sigs.items():
            entries.append((pos[v], pos[v], sig))
        return tuple(sorted(entries))

    best = None

    def search(colors):
        nonlocal best
        colors = refine(colors)
        cells = {}
        for v, c in enumerate(colors):
            cells.setdefault(c, []).append(v)
        target = None
        for c in sorted(cells):
            if len(cells[c]) > 1 and (target is None or len(cells[c]) < len(cells[target])):
                target = c
        if target is None:
            candidate = encode(colors)
            if best is None or candidate < best:
                best = candidate
            return
        tried = []
        for v in cells[target]:
            if any(is_twin(v, u) for u in tried):
                continue
            tried.append(v)
            child = list(colors)
            child[v] = n  # fresh color, larger than any refined color
            search(child)

    search([0] * n)
    return best
