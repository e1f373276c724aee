"""Time the isomorphism search on the theorem graph pairs and on random relabelings."""

import argparse
import random
import statistics
import time

from groupgraphs.graphs import LabeledGraph, commuting_graph, enhanced_power_graph, power_graph
from groupgraphs.groups import dicyclic, dihedral, generalized_quaternion
from groupgraphs.iso import find_isomorphism


def timed(g1, g2):
    start = time.perf_counter()
    outcome = find_isomorphism(g1, g2)
    return time.perf_counter() - start, outcome


def random_pair(rng, n, p):
    labels = [f"v{k}" for k in range(n)]
    edges = [(labels[a], labels[b]) for a in range(n) for b in range(a + 1, n) if rng.random() < p]
    g = LabeledGraph(labels, edges)
    targets = labels[:]
    rng.shuffle(targets)
    return g, g.relabel(dict(zip(labels, targets)))


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--n-max", type=int, default=9)
    parser.add_argument("--random", type=int, default=200)
    parser.add_argument("--seed", type=int, default=0)
    args = parser.parse_args()

    print("theorem 1 pairs")
    for n in range(1, args.n_max + 1):
        q = generalized_quaternion(n)
        secs, outcome = timed(power_graph(q), commuting_graph(dihedral(q.parameter)))
        print(f"  n={n:<2} order={q.order:<5} {secs:8.3f} s  nodes={outcome.nodes}")

    print("theorem 2 pairs (EPow vs Com)")
    for m in (3, 15, 45, 105):
        secs, outcome = timed(enhanced_power_graph(dicyclic(m)), commuting_graph(dihedral(m)))
        print(f"  m={m:<3} order={4 * m:<5} {secs:8.3f} s  nodes={outcome.nodes}")

    rng = random.Random(args.seed)
    times = []
    for _ in range(args.random):
        g, h = random_pair(rng, rng.randint(1, 200), rng.uniform(0.02, 0.5))
        secs, outcome = timed(g, h)
        assert outcome.is_isomorphic
        times.append(secs)
    print(f"random relabelings: {len(times)} pairs, median {statistics.median(times) * 1e3:.1f} ms, "
          f"max {max(times) * 1e3:.1f} ms")


if __name__ == "__main__":
    main()
