"""Labeled simple graphs, the three group graphs, and a small graph algebra.

The algebra (complete graphs, k-fold copies, disjoint union, label-merging
union, join) is enough to write down the structural decompositions of the
power / enhanced power / commuting graphs of the dicyclic and dihedral
families as data and evaluate them to concrete labeled graphs.
"""

from __future__ import annotations

import enum
import itertools
import re
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence, Union

from .groups import FiniteGroup, GroupElement, cyclic, dicyclic, dihedral


class StructureError(ValueError):
    """Malformed graph operation (overlapping join, loop, unknown vertex...)."""


class LabeledGraph:
    """Simple undirected graph over string labels.

    Vertex order is kept as given; it only matters for display.  Equality is
    on the vertex set and the edge set.
    """

    def __init__(self, vertices: Iterable[str], edges: Iterable[tuple[str, str]] = ()):
        verts = tuple(vertices)
        adj: dict[str, set[str]] = {v: set() for v in verts}
        if len(adj) != len(verts):
            dup = next(v for v, c in _count(verts).items() if c > 1)
            raise StructureError(f"duplicate vertex label {dup!r}")
        for u, v in edges:
            if u == v:
                raise StructureError(f"loop at {u!r}")
            if u not in adj or v not in adj:
                missing = u if u not in adj else v
                raise StructureError(f"edge endpoint {missing!r} is not a vertex")
            adj[u].add(v)
            adj[v].add(u)
        self._vertices = verts
        self._adj = {v: frozenset(n) for v, n in adj.items()}

    @classmethod
    def _from_adjacency(cls, vertices: Sequence[str], adj: dict[str, set[str]]) -> "LabeledGraph":
        # trusted fast path for builders: adj already symmetric and loop-free
        g = cls.__new__(cls)
        g._vertices = tuple(vertices)
        g._adj = {v: frozenset(adj[v]) for v in g._vertices}
        return g

    @property
    def vertices(self) -> tuple[str, ...]:
        return self._vertices

    def neighbors(self, v: str) -> frozenset[str]:
        return self._adj[v]

    def degree(self, v: str) -> int:
        return len(self._adj[v])

    def has_edge(self, u: str, v: str) -> bool:
        return v in self._adj.get(u, ())

    def __len__(self):
        return len(self._vertices)

    def __contains__(self, v):
        return v in self._adj

    @cached_property
    def edge_count(self) -> int:
        return sum(len(n) for n in self._adj.values()) // 2

    def edges(self) -> list[tuple[str, str]]:
        """Edges as (u, v) with u < v, sorted lexicographically."""
        return sorted((u, v) for u, nb in self._adj.items() for v in nb if u < v)

    @cached_property
    def edge_set(self) -> frozenset[frozenset[str]]:
        return frozenset(frozenset((u, v)) for u, nb in self._adj.items() for v in nb if u < v)

    def degree_sequence(self) -> list[int]:
        return sorted((len(n) for n in self._adj.values()), reverse=True)

    def relabel(self, mapping) -> "LabeledGraph":
        """Rename vertices via a dict or callable; the result must stay injective."""
        f = mapping.__getitem__ if isinstance(mapping, dict) else mapping
        verts = [f(v) for v in self._vertices]
        return LabeledGraph(verts, ((f(u), f(v)) for u, v in self.edges()))

    def induced(self, keep: Iterable[str]) -> "LabeledGraph":
        keep = set(keep)
        verts = [v for v in self._vertices if v in keep]
        adj = {v: self._adj[v] & keep for v in verts}
        return LabeledGraph._from_adjacency(verts, adj)

    def __eq__(self, other):
        if not isinstance(other, LabeledGraph):
            return NotImplemented
        return self._adj == other._adj

    def __hash__(self):
        return hash((frozenset(self._vertices), self.edge_set))

    def __repr__(self):
        return f"<LabeledGraph |V|={len(self)} |E|={self.edge_count}>"


def _count(items):
    out: dict = {}
    for x in items:
        out[x] = out.get(x, 0) + 1
    return out


def complete_graph(labels: Iterable[str]) -> LabeledGraph:
    labels = list(labels)
    return LabeledGraph(labels, itertools.combinations(labels, 2))


def edge_count(graph: LabeledGraph) -> int:
    return graph.edge_count


def degree_sequence(graph: LabeledGraph) -> list[int]:
    return graph.degree_sequence()


def are_edge_identical(g1: LabeledGraph, g2: LabeledGraph) -> bool:
    if set(g1.vertices) != set(g2.vertices):
        raise StructureError("edge comparison needs identical vertex label sets")
    return g1.edge_set == g2.edge_set


def is_edge_subset(g1: LabeledGraph, g2: LabeledGraph) -> bool:
    if set(g1.vertices) != set(g2.vertices):
        raise StructureError("edge comparison needs identical vertex label sets")
    return g1.edge_set <= g2.edge_set


# -- group graphs ------------------------------------------------------------


def _graph_from_cliques(group: FiniteGroup, cliques: Iterable[Iterable[GroupElement]]) -> LabeledGraph:
    names = {s: group.label(s) for s in group.element_list}
    adj: dict[str, set[str]] = {names[s]: set() for s in group.element_list}
    for clique in cliques:
        labels = [names[s] for s in clique]
        for u in labels:
            adj[u].update(labels)
    for v, nb in adj.items():
        nb.discard(v)
    return LabeledGraph._from_adjacency([names[s] for s in group.element_list], adj)


def power_graph(group: FiniteGroup) -> LabeledGraph:
    """s ~ t iff one is a power of the other."""
    names = {s: group.label(s) for s in group.element_list}
    adj: dict[str, set[str]] = {names[s]: set() for s in group.element_list}
    for s in group.element_list:
        u = names[s]
        for t in group.cyclic_subgroup(s):
            if t != s:
                adj[u].add(names[t])
                adj[names[t]].add(u)
    return LabeledGraph._from_adjacency([names[s] for s in group.element_list], adj)


def _maximal_cyclic_subgroups(group: FiniteGroup) -> list[frozenset[GroupElement]]:
    subs = {group.cyclic_subgroup(s) for s in group.element_list}
    ordered = sorted(subs, key=len, reverse=True)
    maximal: list[frozenset[GroupElement]] = []
    for sub in ordered:
        if not any(sub <= big for big in maximal):
            maximal.append(sub)
    return maximal


def enhanced_power_graph(group: FiniteGroup) -> LabeledGraph:
    """s ~ t iff <s, t> is cyclic.

    Two elements generate a cyclic group iff both lie in a common cyclic
    subgroup, so the graph is the union of cliques on maximal cyclic subgroups.
    """
    return _graph_from_cliques(group, _maximal_cyclic_subgroups(group))


def commuting_graph(group: FiniteGroup) -> LabeledGraph:
    names = {s: group.label(s) for s in group.element_list}
    elems = group.element_list
    adj: dict[str, set[str]] = {names[s]: set() for s in elems}
    for a, s in enumerate(elems):
        for t in elems[a + 1:]:
            if group.commutes(s, t):
                adj[names[s]].add(names[t])
                adj[names[t]].add(names[s])
    return LabeledGraph._from_adjacency([names[s] for s in elems], adj)


class GraphKind(enum.Enum):
    POW = "pow"
    EPOW = "epow"
    COM = "com"


_BUILDERS = {
    GraphKind.POW: power_graph,
    GraphKind.EPOW: enhanced_power_graph,
    GraphKind.COM: commuting_graph,
}


def build_graph(group: FiniteGroup, kind: GraphKind | str) -> LabeledGraph:
    return _BUILDERS[GraphKind(kind)](group)


# -- graph expressions -------------------------------------------------------


@dataclass(frozen=True)
class CompleteOn:
    labels: tuple[str, ...]

    def __init__(self, labels: Iterable[str]):
        object.__setattr__(self, "labels", tuple(labels))


@dataclass(frozen=True)
class Copies:
    count: int
    expr: "GraphExpr"


@dataclass(frozen=True)
class DisjointUnion:
    parts: tuple["GraphExpr", ...]

    def __init__(self, parts: Iterable["GraphExpr"]):
        object.__setattr__(self, "parts", tuple(parts))


@dataclass(frozen=True)
class MergingUnion:
    parts: tuple["GraphExpr", ...]

    def __init__(self, parts: Iterable["GraphExpr"]):
        object.__setattr__(self, "parts", tuple(parts))


@dataclass(frozen=True)
class Join:
    left: "GraphExpr"
    right: "GraphExpr"


@dataclass(frozen=True)
class Literal:
    graph: LabeledGraph
    name: str = ""


GraphExpr = Union[CompleteOn, Copies, DisjointUnion, MergingUnion, Join, Literal]


def _suffixed(graph: LabeledGraph, suffix: str) -> LabeledGraph:
    return graph.relabel(lambda v: f"{v}#{suffix}")


def _disjoint_union(graphs: Sequence[LabeledGraph]) -> LabeledGraph:
    seen: set[str] = set()
    clash = False
    for g in graphs:
        if seen.intersection(g.vertices):
            clash = True
            break
        seen.update(g.vertices)
    if clash:
        graphs = [_suffixed(g, str(k)) for k, g in enumerate(graphs)]
    verts = [v for g in graphs for v in g.vertices]
    return LabeledGraph(verts, (e for g in graphs for e in g.edges()))


def evaluate(expr: GraphExpr) -> LabeledGraph:
    """Evaluate a graph expression to a concrete labeled graph.

    DisjointUnion keeps labels when the parts are already label-disjoint and
    otherwise suffixes every label with ``#<part index>``; Copies always
    suffixes.  MergingUnion identifies equal labels.  Join requires disjoint
    operands.
    """
    if isinstance(expr, CompleteOn):
        return complete_graph(expr.labels)
    if isinstance(expr, Literal):
        return expr.graph
    if isinstance(expr, Copies):
        if expr.count < 0:
            raise StructureError("copy count must be non-negative")
        inner = evaluate(expr.expr)
        return _disjoint_union([_suffixed(inner, str(k)) for k in range(expr.count)])
    if isinstance(expr, DisjointUnion):
        return _disjoint_union([evaluate(p) for p in expr.parts])
    if isinstance(expr, MergingUnion):
        graphs = [evaluate(p) for p in expr.parts]
        verts = list(dict.fromkeys(v for g in graphs for v in g.vertices))
        return LabeledGraph(verts, {e for g in graphs for e in g.edges()})
    if isinstance(expr, Join):
        left, right = evaluate(expr.left), evaluate(expr.right)
        common = set(left.vertices) & set(right.vertices)
        if common:
            raise StructureError(f"join operands share label {min(common)!r}")
        edges = left.edges() + right.edges()
        edges += [(u, v) for u in left.vertices for v in right.vertices]
        return LabeledGraph(left.vertices + right.vertices, edges)
    raise TypeError(f"not a graph expression: {expr!r}")


def render_expr(expr: GraphExpr) -> str:
    """Compact text form, e.g. ``(K_14 ∪ 8K_2) ∇ K_2``."""
    if isinstance(expr, CompleteOn):
        return f"K_{len(expr.labels)}"
    if isinstance(expr, Literal):
        return expr.name or f"G[{len(expr.graph)}]"
    if isinstance(expr, Copies):
        return f"{expr.count}{_wrap(expr.expr)}"
    if isinstance(expr, (DisjointUnion, MergingUnion)):
        parts = [_wrap(p) for p in expr.parts]
        sep = " ∪ " if isinstance(expr, DisjointUnion) else " ⊔ "
        # collapse runs of identical pieces into kG
        out, k = [], 0
        while k < len(parts):
            j = k
            while j < len(parts) and parts[j] == parts[k]:
                j += 1
            out.append(parts[k] if j - k == 1 else f"{j - k}{parts[k]}")
            k = j
        return sep.join(out)
    if isinstance(expr, Join):
        return f"{_wrap(expr.left)} ∇ {_wrap(expr.right)}"
    raise TypeError(f"not a graph expression: {expr!r}")


def _wrap(expr: GraphExpr) -> str:
    text = render_expr(expr)
    compound = isinstance(expr, Join) or (
        isinstance(expr, (DisjointUnion, MergingUnion)) and len(expr.parts) > 1
    )
    return f"({text})" if compound else text


_TOKEN_RE = re.compile(r"\s*(?:(\d+)\s*K_?\{?(\d+)\}?|K_?\{?(\d+)\}?|(\()|(\))|(∪|\+|\|)|(∇|\*))")


def parse_expr(text: str) -> GraphExpr:
    """Parse an anonymous structure formula such as ``(K_14 ∪ 8K_2) ∇ K_2``.

    Every K_n leaf gets fresh labels, so the result is a shape only; join
    binds looser than union.  ASCII ``+`` / ``|`` for union and ``*`` for
    join are accepted.
    """
    tokens = []
    pos = 0
    text = text.strip()
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if not m or m.end() == pos:
            raise ValueError(f"cannot parse structure formula at {text[pos:]!r}")
        pos = m.end()
        if m.group(1):
            tokens.append(("copies", int(m.group(1)), int(m.group(2))))
        elif m.group(3):
            tokens.append(("K", int(m.group(3))))
        elif m.group(4):
            tokens.append(("(",))
        elif m.group(5):
            tokens.append((")",))
        elif m.group(6):
            tokens.append(("union",))
        else:
            tokens.append(("join",))
        while pos < len(text) and text[pos].isspace():
            pos += 1

    counter = itertools.count()

    def fresh(n):
        leaf = next(counter)
        return CompleteOn(f"k{leaf}.{i}" for i in range(n))

    def parse_join(k):
        left, k = parse_union(k)
        while k < len(tokens) and tokens[k][0] == "join":
            right, k = parse_union(k + 1)
            left = Join(left, right)
        return left, k

    def parse_union(k):
        parts = []
        atom, k = parse_atom(k)
        parts.append(atom)
        while k < len(tokens) and tokens[k][0] == "union":
            atom, k = parse_atom(k + 1)
            parts.append(atom)
        return (parts[0] if len(parts) == 1 else DisjointUnion(parts)), k

    def parse_atom(k):
        if k >= len(tokens):
            raise ValueError("unexpected end of structure formula")
        tok = tokens[k]
        if tok[0] == "K":
            return fresh(tok[1]), k + 1
        if tok[0] == "copies":
            return Copies(tok[1], fresh(tok[2])), k + 1
        if tok[0] == "(":
            inner, k = parse_join(k + 1)
            if k >= len(tokens) or tokens[k][0] != ")":
                raise ValueError("unbalanced parentheses in structure formula")
            return inner, k + 1
        raise ValueError(f"unexpected token {tok[0]!r} in structure formula")

    expr, k = parse_join(0)
    if k != len(tokens):
        raise ValueError("trailing tokens in structure formula")
    return expr


# -- structural decompositions ----------------------------------------------


class Structure(enum.Enum):
    POW_GEN_QUATERNION = "pow_gen_quaternion"  # parameter n, group Q_{2^{n+1}}
    COM_DIHEDRAL = "com_dihedral"  # parameter m, group D_{2.2m}
    EPOW_DICYCLIC = "epow_dicyclic"  # parameter m, group Q_{4m}
    POW_DICYCLIC = "pow_dicyclic"  # parameter m, group Q_{4m}


def structure_group(which: Structure, parameter: int) -> FiniteGroup:
    if which is Structure.POW_GEN_QUATERNION:
        if parameter < 1:
            raise ValueError("n must be >= 1")
        return dicyclic(2 ** (parameter - 1))
    if which is Structure.COM_DIHEDRAL:
        return dihedral(parameter)
    return dicyclic(parameter)


def _center_split(group: FiniteGroup):
    """(K on <rot> minus center, list of flip-pair K_2's, K_2 on the center)."""
    m = group.parameter
    lab = group.label
    rotations = [lab(GroupElement(i, 0)) for i in range(2 * m) if i % m]
    pairs = [CompleteOn([lab(GroupElement(i, 1)), lab(GroupElement(i + m, 1))]) for i in range(m)]
    center = CompleteOn([lab(GroupElement(0, 0)), lab(GroupElement(m, 0))])
    return CompleteOn(rotations), pairs, center


def structure_expr_for(which: Structure | str, parameter: int) -> GraphExpr:
    """Canonically labeled decomposition whose evaluation equals the builder output.

    The first three are ``(K_{2m-2} ∪ mK_2) ∇ K_2`` with m = 2^{n-1} for the
    generalized quaternion case; the dicyclic power graph is
    ``Pow(<h>) ⊔ (mK_2 ∇ Pow(Z))``.
    """
    which = Structure(which)
    group = structure_group(which, parameter)
    rot_part, pairs, center = _center_split(group)
    if which is Structure.POW_DICYCLIC:
        sub = power_graph(cyclic(group.rotation_order))
        rot_graph = sub.relabel(lambda v: group.label(GroupElement(int(v[2:]), 0)))
        return MergingUnion([Literal(rot_graph, "Pow(<h>)"), Join(DisjointUnion(pairs), center)])
    return Join(DisjointUnion([rot_part, *pairs]), center)


def join_edge_count(e1: int, e2: int, v1: int, v2: int) -> int:
    return e1 + e2 + v1 * v2


def complete_edge_count(n: int) -> int:
    return n * (n - 1) // 2


def dihedral_commuting_edge_count(m: int) -> int:
    """Edge count of Com(D_{2.2m}): m(2m-1) + 5m."""
    return m * (2 * m - 1) + 5 * m
