"""Seeded random graph models for the experiment harness."""

from __future__ import annotations

import random

from .graphs import Graph


def gnp_graph(n: int, prob: float, seed: int) -> Graph:
    rng = random.Random(seed)
    edges = [
        (u, v)
        for u in range(n)
        for v in range(u + 1, n)
        if rng.random() < prob
    ]
    return Graph.from_edges(n, edges)


def random_regular_graph(n: int, degree: int, seed: int) -> Graph:
    """Pairing-model k-regular graph, rejecting draws with loops or
    multi-edges.  Slightly biased relative to uniform; fine for sanity
    experiments."""
    if n * degree % 2 != 0:
        raise ValueError("n * degree must be even")
    if not 0 <= degree < n:
        raise ValueError("need 0 <= degree < n")
    rng = random.Random(seed)
    while True:
        stubs = [v for v in range(n) for _ in range(degree)]
        rng.shuffle(stubs)
        edges = set()
        ok = True
        for i in range(0, len(stubs), 2):
            u, v = stubs[i], stubs[i + 1]
            if u == v or (min(u, v), max(u, v)) in edges:
                ok = False
                break
            edges.add((min(u, v), max(u, v)))
        if ok:
            return Graph.from_edges(n, edges)
