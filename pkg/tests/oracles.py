"""Independent reference implementations used only by the tests.

Nothing here calls the closed-form multiplication or the clique shortcuts
of the library; everything is done from raw definitions.
"""

import itertools
import random

from groupgraphs.groups import Family, GroupElement


# -- word reduction ------------------------------------------------------------
#
# Words are strings over h, H (= h^-1), x, X (= x^-1).  For dihedral groups the
# letters stand for a, b; for cyclic groups only h/H occur.


def element_word(group, s):
    i, j = s
    return "h" * i + "x" * j


def reduce_word(group, word):
    """Rewrite ``word`` to normal form h^i x^j using only the defining relations."""
    r = group.rotation_order
    m = group.parameter
    dicyclic = group.family is Family.DICYCLIC
    rules = [
        ("H", "h" * (r - 1)),                      # h^{2m} = e
        ("X", "xxx" if dicyclic else "x"),         # x^4 = e (from x^2 = h^m) / b^2 = e
        ("xh", "h" * (r - 1) + "x"),               # x h = h^{-1} x
        ("xx", "h" * m if dicyclic else ""),       # x^2 = h^m / b^2 = e
    ]
    while True:
        before = word
        for lhs, rhs in rules:
            if lhs in word:
                word = word.replace(lhs, rhs, 1)
                break
        word = word.replace("h" * r, "") if r else word
        if word == before:
            break
    i = len(word) - len(word.lstrip("h"))
    rest = word[i:]
    assert set(rest) <= {"x"} and len(rest) <= 1, word
    return GroupElement(i % r, len(rest))


def word_multiply(group, s, t):
    return reduce_word(group, element_word(group, s) + element_word(group, t))


# -- raw group queries ---------------------------------------------------------


def brute_closure(group, gens):
    seen = {group.identity}
    changed = True
    while changed:
        changed = False
        for u in list(seen):
            for g in gens:
                w = word_multiply(group, u, g)
                if w not in seen:
                    seen.add(w)
                    changed = True
    return seen


def naive_powers(group, s):
    """All s^k for 0 <= k < |G| by repeated multiplication."""
    out, p = set(), group.identity
    for _ in range(group.order):
        out.add(p)
        p = group.multiply(p, s)
    return out


def naive_power_graph_edges(group):
    elems = list(group.elements())
    powers = {s: naive_powers(group, s) for s in elems}
    return {
        frozenset((group.label(s), group.label(t)))
        for s, t in itertools.combinations(elems, 2)
        if t in powers[s] or s in powers[t]
    }


def naive_enhanced_edges(group):
    elems = list(group.elements())
    return {
        frozenset((group.label(s), group.label(t)))
        for s, t in itertools.combinations(elems, 2)
        if group.generates_cyclic(s, t)
    }


def naive_commuting_edges(group):
    elems = list(group.elements())
    return {
        frozenset((group.label(s), group.label(t)))
        for s, t in itertools.combinations(elems, 2)
        if group.multiply(s, t) == group.multiply(t, s)
    }


def naive_edge_count(group, adjacent):
    elems = list(group.elements())
    count = 0
    for a in range(len(elems)):
        for b in range(len(elems)):
            if a < b and adjacent(elems[a], elems[b]):
                count += 1
    return count


# -- graphs --------------------------------------------------------------------


def brute_force_isomorphic(g1, g2):
    """Permutation search over all bijections, pruned only by partial adjacency."""
    v1, v2 = list(g1.vertices), list(g2.vertices)
    if len(v1) != len(v2) or g1.edge_count != g2.edge_count:
        return False
    n = len(v1)
    image = [None] * n
    used = set()

    def extend(k):
        if k == n:
            return True
        for cand in v2:
            if cand in used:
                continue
            if all(g1.has_edge(v1[k], v1[a]) == g2.has_edge(cand, image[a]) for a in range(k)):
                image[k] = cand
                used.add(cand)
                if extend(k + 1):
                    return True
                used.discard(cand)
        return False

    return extend(0)


def random_graph(rng, n, p, prefix="v"):
    from groupgraphs.graphs import LabeledGraph

    labels = [f"{prefix}{k}" for k in range(n)]
    edges = [(labels[a], labels[b]) for a, b in itertools.combinations(range(n), 2) if rng.random() < p]
    return LabeledGraph(labels, edges)


def shuffled_copy(rng, graph, prefix="w"):
    labels = list(graph.vertices)
    targets = [f"{prefix}{k}" for k in range(len(labels))]
    rng.shuffle(targets)
    mapping = dict(zip(labels, targets))
    g = graph.relabel(mapping)
    # also scramble the stored vertex order
    from groupgraphs.graphs import LabeledGraph

    order = list(g.vertices)
    rng.shuffle(order)
    return LabeledGraph(order, g.edges()), mapping


def seeded(seed):
    return random.Random(seed)
