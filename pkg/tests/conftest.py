"""Shared fixtures and independent oracles for the test suite.

The oracles deliberately use different algorithms than the library
(Heron's formula for circumradius, Bellman-Ford for shortest paths)
so agreement is evidence, not tautology.
"""

import math

import numpy as np
import pytest
from hypothesis import settings

settings.register_profile("geoknot", deadline=None, max_examples=60)
settings.load_profile("geoknot")


def heron_circumradius(x, y, z) -> float:
    """Circumradius from the three side lengths alone."""
    x, y, z = (np.asarray(p, dtype=np.float64) for p in (x, y, z))
    a = float(np.linalg.norm(y - z))
    b = float(np.linalg.norm(x - z))
    c = float(np.linalg.norm(x - y))
    s = 0.5 * (a + b + c)
    area_sq = s * (s - a) * (s - b) * (s - c)
    if area_sq <= 0.0:
        return math.inf  # collinear
    return a * b * c / (4.0 * math.sqrt(area_sq))


def bellman_ford(n, edges, source):
    """Textbook relaxation; edges as (i, j, w) undirected."""
    dist = [math.inf] * n
    dist[source] = 0.0
    for _ in range(n - 1):
        changed = False
        for i, j, w in edges:
            if dist[i] + w < dist[j]:
                dist[j] = dist[i] + w
                changed = True
            if dist[j] + w < dist[i]:
                dist[i] = dist[j] + w
                changed = True
        if not changed:
            break
    return dist


def graph_edge_set(g):
    """Undirected edge set {(i, j): w} with i < j, from the CSR layout."""
    out = {}
    for i in range(g.n):
        nbrs, wts = g.neighbors(i)
        for j, w in zip(nbrs.tolist(), wts.tolist()):
            if i < j:
                out[(i, j)] = w
    return out


@pytest.fixture
def rng():
    return np.random.default_rng(20240817)
