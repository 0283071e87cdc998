#!/usr/bin/env python3
"""How well does a neighborhood graph approximate surface geodesics?

Samples the unit sphere at a few densities, builds the ball graph at
the smallest certified radius (four times the measured covering
radius), and compares graph shortest-path lengths against the analytic
great-circle distance.  Ratios tighten toward 1 as the sample
densifies while staying far below the 1 + 4*eps/r = 2 upper
certificate; ratios slightly under 1 are real, not a bug: graph edges
are straight chords that cut the corner of the curved surface, which
is exactly the slack the (1 + (pi^2/50)*(kappa_S*r)^2) lower
certificate budgets for.
"""

import numpy as np

from geoknot import (
    build_graph,
    covering_radius,
    geodesic_oracle,
    sample_surface,
    shortest_distances,
    sphere,
)


def worst_ratio(spec, n, pairs=120, seed=0):
    sample = sample_surface(spec, "grid", n)
    cov = covering_radius(sample, 10 * sample.n)
    r = 4.0 * cov.padded
    g = build_graph(sample, kind="ball", r=r)
    rng = np.random.default_rng(seed)
    ratios = []
    while len(ratios) < pairs:
        i, j = rng.integers(0, sample.n, size=2)
        if i == j:
            continue
        oracle = geodesic_oracle(spec, sample.points[i], sample.points[j])
        if oracle < 3.0 * r:
            continue  # single-hop pairs are trivially tight
        graph = float(shortest_distances(g, [int(i)])[0, int(j)])
        ratios.append(graph / oracle)
    return sample.n, r, cov.padded, max(ratios), np.mean(ratios)


def main():
    spec = sphere(1.0)
    print("unit sphere, ball graph at r = 4 * covering radius")
    print(f"{'N':>6} {'r':>8} {'eps':>8} {'worst':>8} {'mean':>8}")
    for n in (250, 1000, 4000):
        n_actual, r, eps, worst, mean = worst_ratio(spec, n)
        print(f"{n_actual:>6} {r:>8.4f} {eps:>8.4f} {worst:>8.5f} {mean:>8.5f}")
    print()
    print("certificate: graph/geodesic <= 1 + 4*eps/r = 2 for every pair;")
    print("the measured worst case sits far inside it and tightens with N.")
    print("ratios just under 1 are chords cutting the curved surface, the")
    print("slack the lower certificate's (pi^2/50)*(kappa_S*r)^2 term covers.")


if __name__ == "__main__":
    main()
