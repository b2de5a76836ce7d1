"""Classical graph polynomials as substitution instances of ξ and ξ_lab.

Each function returns an exact polynomial.  Instances whose standard
definition divides by powers of (x-1), (y-1) or (1-ω) are realized by
exact division with a mandatory zero remainder; a remainder means a
violated identity and raises, it is never a recoverable state.  The two
rational-substitution instances (Zaslavsky, chain) are computed from
their definitional subset sums and then cross-checked against the ξ_lab
route with denominators cleared, so no rational function arithmetic is
ever needed.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .polyring import MPoly
from .xi_core import xi, xi_lab

_X = MPoly.variable("x")
_Y = MPoly.variable("y")
_Q = MPoly.variable("q")
_V = MPoly.variable("v")
_TAU = MPoly.variable("tau")
_LAMBDA = MPoly.variable("lambda")
_OMEGA = MPoly.variable("omega")


class IdentityDefect(ArithmeticError):
    """Two routes that must agree exactly disagreed (implementation defect)."""


@dataclass(frozen=True)
class LabelWeights:
    """Per-label values (ints, exact rationals, or polynomials)."""

    values: tuple

    @classmethod
    def of(cls, mapping):
        return cls(tuple(sorted(mapping.items())))

    def mapping(self):
        return dict(self.values)

    def bindings(self, family):
        return {"%s_%s" % (family, lab): val for lab, val in self.values}


# ----- instances of the unlabeled polynomial ---------------------------------


def sokal(graph):
    """Partition-function form of the Tutte polynomial, Z(G, q, v)."""
    return xi(graph).substitute({"x": _Q, "y": _V, "z": 0})


def tutte(graph):
    """Classical two-variable Tutte polynomial T(G, x, y)."""
    p = xi(graph).substitute({"x": (_X - 1) * (_Y - 1), "y": _Y - 1, "z": 0})
    prefactor = (_X - 1) ** graph.count_components() * (_Y - 1) ** graph.num_vertices
    return p.exact_div(prefactor)


def chromatic(graph):
    """Proper-coloring counting polynomial in lambda."""
    return xi(graph).substitute({"x": _LAMBDA, "y": -1, "z": 0})


def matching(graph):
    """Bivariate matching polynomial M(G, x, y) = sum a_i x^(n-2i) y^i."""
    return xi(graph).substitute({"y": 0, "z": _Y})


def matching_generating(graph):
    """g(G, x) = sum a_i x^i."""
    return xi(graph).substitute({"x": 1, "y": 0, "z": _X})


def matching_defect(graph):
    """mu(G, x) = sum (-1)^i a_i x^(n-2i)."""
    return xi(graph).substitute({"y": 0, "z": -1})


def dpt(graph):
    """Bivariate chromatic polynomial P(G, x, y): x colors, y of them proper."""
    return xi(graph).substitute({"y": -1, "z": _X - _Y})


def vertex_cover(graph):
    """Sum over vertex covers C of tau^|C|.

    Not a substitution stated anywhere authoritative: derived as
    xi(G, tau+1, -1, tau) and validated against brute-force enumeration.
    A loop forces its vertex into every cover.
    """
    return xi(graph).substitute({"x": _TAU + 1, "y": -1, "z": _TAU})


def independence(graph):
    """Independent-set polynomial, the coefficient reversal of vertex_cover."""
    cover = vertex_cover(graph)
    n = graph.num_vertices
    terms = {}
    for exps, coeff in cover.terms.items():
        k = exps[0] if cover.vars else 0
        terms[(n - k,)] = terms.get((n - k,), 0) + coeff
    return MPoly(("u",), terms)


# ----- instances of the labeled polynomial -------------------------------------


def sokal_labeled(graph, labeling):
    """Labeled Sokal polynomial Z_lab(G, q, v_label)."""
    bindings = {"x": _Q, "y": 1, "z": 0}
    for lab in labeling.alphabet:
        bindings["t_%s" % lab] = MPoly.variable("v_%s" % lab)
    return xi_lab(graph, labeling).substitute(bindings)


def heilmann_lieb(graph, labeling, weights=None):
    """Multivariate matching polynomial: sum over matchings of prod t_label.

    With ``weights`` given, each t_label is bound to its weight; integer or
    polynomial weights give a polynomial, rational weights give an exact
    rational value.
    """
    p = xi_lab(graph, labeling).substitute({"x": 1, "y": 0, "z": 1})
    if weights is None:
        return p
    mapping = weights.mapping() if isinstance(weights, LabelWeights) else dict(weights)
    if any(isinstance(v, Fraction) and v.denominator != 1 for v in mapping.values()):
        return p.evaluate({"t_%s" % lab: v for lab, v in mapping.items()})
    return p.substitute({"t_%s" % lab: v for lab, v in mapping.items()})


def _rank(graph, edge_ids):
    return graph.num_vertices - graph.count_components(edge_ids)


def _subsets(ids):
    m = len(ids)
    for bits in range(1 << m):
        yield [ids[i] for i in range(m) if bits >> i & 1]


def zaslavsky(graph, labeling):
    """Normal function of the edge-colored graph, over x, y, x_label, y_label.

    Computed as the definitional subset sum and cross-checked against the
    ξ_lab substitution route with the x/y label ratios cleared.
    """
    direct = _zaslavsky_subset_sum(graph, labeling)
    via = _zaslavsky_via_xi(graph, labeling)
    if direct != via:
        raise IdentityDefect("zaslavsky routes disagree on %r" % (graph,))
    return direct


def _zaslavsky_subset_sum(graph, labeling):
    labels = labeling.restricted_map(graph)
    eids = graph.edge_ids()
    r_all = _rank(graph, eids)
    total = MPoly.zero()
    for S in _subsets(list(eids)):
        chosen = set(S)
        r_s = _rank(graph, S)
        mono = {}
        for eid in eids:
            name = ("x_%s" if eid in chosen else "y_%s") % labels[eid]
            mono[name] = mono.get(name, 0) + 1
        total = total + (
            MPoly.monomial(1, mono)
            * (_X - 1) ** (r_all - r_s)
            * (_Y - 1) ** (len(S) - r_s)
        )
    return total


def _zaslavsky_via_xi(graph, labeling):
    labels = labeling.restricted_map(graph)
    counts = {}
    for lab in labels.values():
        counts[lab] = counts.get(lab, 0) + 1
    p = xi_lab(graph, labeling).substitute(
        {"x": (_X - 1) * (_Y - 1), "y": _Y - 1, "z": 0}
    )
    # clear t_lab -> x_lab / y_lab by multiplying every edge's y_lab through:
    # t_lab^k becomes x_lab^k * y_lab^(count - k), always a polynomial.
    cleared = MPoly.zero()
    for exps, coeff in p.terms.items():
        mono = {}
        used = dict(counts)
        for name, e in zip(p.vars, exps):
            if name.startswith("t_"):
                lab = name[2:]
                mono["x_%s" % lab] = e
                used[lab] -= e
            elif e:
                mono[name] = e
        for lab, rest in used.items():
            if rest:
                mono["y_%s" % lab] = mono.get("y_%s" % lab, 0) + rest
        cleared = cleared + MPoly.monomial(coeff, mono)
    prefactor = (_X - 1) ** graph.count_components() * (_Y - 1) ** graph.num_vertices
    return cleared.exact_div(prefactor)


def chain(graph, labeling):
    """Chain polynomial over omega and u_label.

    Computed as the Traldi subset sum and cross-checked against the ξ_lab
    route with the (1-omega)/u_label substitutions cleared.
    """
    direct = _chain_subset_sum(graph, labeling)
    via = _chain_via_xi(graph, labeling)
    if direct != via:
        raise IdentityDefect("chain routes disagree on %r" % (graph,))
    return direct


def _chain_subset_sum(graph, labeling):
    labels = labeling.restricted_map(graph)
    eids = list(graph.edge_ids())
    total = MPoly.zero()
    for S in _subsets(eids):
        chosen = set(S)
        nullity = len(S) - _rank(graph, S)
        mono = {}
        for eid in eids:
            if eid not in chosen:
                name = "u_%s" % labels[eid]
                mono[name] = mono.get(name, 0) + 1
        total = total + MPoly.monomial(1, mono) * (1 - _OMEGA) ** nullity
    return total


def _chain_via_xi(graph, labeling):
    labels = labeling.restricted_map(graph)
    counts = {}
    for lab in labels.values():
        counts[lab] = counts.get(lab, 0) + 1
    p = xi_lab(graph, labeling).substitute({"y": 1, "z": 0})
    one_minus = 1 - _OMEGA
    total = MPoly.zero()
    for exps, coeff in p.terms.items():
        mono = {}
        used = dict(counts)
        x_exp = 0
        t_total = 0
        for name, e in zip(p.vars, exps):
            if name == "x":
                x_exp = e
            elif name.startswith("t_"):
                lab = name[2:]
                used[lab] -= e
                t_total += e
        for lab, rest in used.items():
            if rest:
                mono["u_%s" % lab] = rest
        total = total + MPoly.monomial(coeff, mono) * one_minus ** (x_exp + t_total)
    return total.exact_div(one_minus ** graph.num_vertices)


# ----- the size-indexed weighted polynomial --------------------------------------


def noble_welsh_u(graph):
    """Weighted polynomial over x_1..x_n and y, by direct subset enumeration."""
    n = graph.num_vertices
    total = MPoly.zero()
    for A in _subsets(list(graph.edge_ids())):
        sizes = graph.component_sizes(A)
        mono = {}
        for s in sizes:
            name = "x_%d" % s
            mono[name] = mono.get(name, 0) + 1
        nullity = len(A) - (n - len(sizes))
        if nullity:
            mono["y"] = nullity
        total = total + MPoly.monomial(1, mono)
    return total


# CLI name -> (callable, needs labeling)
SPECIALIZATIONS = {
    "sokal": (sokal, False),
    "tutte": (tutte, False),
    "chromatic": (chromatic, False),
    "matching": (matching, False),
    "matching-gen": (matching_generating, False),
    "matching-defect": (matching_defect, False),
    "dpt": (dpt, False),
    "vertex-cover": (vertex_cover, False),
    "independence": (independence, False),
    "heilmann-lieb": (heilmann_lieb, True),
    "zaslavsky": (zaslavsky, True),
    "chain": (chain, True),
    "noble-welsh-u": (noble_welsh_u, False),
}
