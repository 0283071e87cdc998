"""Neighborhood graphs over point samples.

Two kinds: the r-ball graph joins points within Euclidean distance r,
the (r, alpha)-annulus graph additionally drops edges shorter than
alpha*r.  Both use non-strict inequalities, so distances landing exactly
on a boundary are kept.  Edge weights are the Euclidean distances,
stored as computed in double precision.

Construction goes through a uniform spatial hash with cell size r; a
brute-force all-pairs builder is retained for small inputs as the
testing oracle.
"""

import math
from collections import defaultdict, deque
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np
from scipy.sparse import csr_matrix

from .surfaces import SampleSet

BRUTE_FORCE_LIMIT = 2000


@dataclass(frozen=True)
class NeighborhoodGraph:
    """Undirected weighted graph in compressed sparse row layout.

    ``indices[indptr[i]:indptr[i+1]]`` are the neighbors of node i in
    increasing order, ``weights`` the matching edge lengths.  ``points``
    carries the sample coordinates so curvature-aware searches can look
    at triples of nodes.
    """

    n: int
    kind: str  # "ball" | "annulus"
    r: float
    alpha: float | None
    indptr: np.ndarray
    indices: np.ndarray
    weights: np.ndarray
    points: np.ndarray | None = None

    def neighbors(self, i: int):
        lo, hi = self.indptr[i], self.indptr[i + 1]
        return self.indices[lo:hi], self.weights[lo:hi]

    def degrees(self) -> np.ndarray:
        return np.diff(self.indptr)

    @property
    def edge_count(self) -> int:
        return int(len(self.indices)) // 2

    def to_csr(self) -> csr_matrix:
        return csr_matrix(
            (self.weights, self.indices, self.indptr), shape=(self.n, self.n)
        )


@dataclass
class SpatialIndex:
    """Uniform hash grid: integer cell -> indices of the points inside."""

    cell: float
    cells: dict
    points: np.ndarray


def _points_of(sample) -> np.ndarray:
    if isinstance(sample, SampleSet):
        return sample.points
    pts = np.asarray(sample, dtype=np.float64)
    if pts.ndim != 2:
        raise ValueError("points must be an (n, D) array")
    return pts


def build_index(sample, cell: float) -> SpatialIndex:
    """Assign each point to cell floor(coords / cell), componentwise."""
    if not (cell > 0.0 and math.isfinite(cell)):
        raise ValueError("cell size must be positive and finite")
    pts = _points_of(sample)
    keys = np.floor(pts / cell).astype(np.int64)
    buckets = defaultdict(list)
    for i, key in enumerate(map(tuple, keys.tolist())):
        buckets[key].append(i)
    cells = {k: np.asarray(v, dtype=np.int64) for k, v in buckets.items()}
    return SpatialIndex(cell=cell, cells=cells, points=pts)


def radius_query(index: SpatialIndex, center, r: float) -> np.ndarray:
    """All point indices within distance r of center (inclusive), sorted.

    Scans the cells overlapping the query ball, then filters exactly.
    """
    center = np.asarray(center, dtype=np.float64)
    lo = np.floor((center - r) / index.cell).astype(np.int64)
    hi = np.floor((center + r) / index.cell).astype(np.int64)
    found = []
    for key in _cell_range(lo, hi):
        bucket = index.cells.get(key)
        if bucket is not None:
            found.append(bucket)
    if not found:
        return np.empty(0, dtype=np.int64)
    cand = np.concatenate(found)
    diff = index.points[cand] - center
    dist = np.sqrt(np.einsum("ij,ij->i", diff, diff))
    return np.sort(cand[dist <= r])


def _cell_range(lo, hi):
    if len(lo) == 2:
        for a in range(lo[0], hi[0] + 1):
            for b in range(lo[1], hi[1] + 1):
                yield (a, b)
        return
    if len(lo) == 3:
        for a in range(lo[0], hi[0] + 1):
            for b in range(lo[1], hi[1] + 1):
                for c in range(lo[2], hi[2] + 1):
                    yield (a, b, c)
        return
    # Generic fallback for other dimensions.
    def rec(prefix, d):
        if d == len(lo):
            yield tuple(prefix)
            return
        for v in range(lo[d], hi[d] + 1):
            yield from rec(prefix + [v], d + 1)
    yield from rec([], 0)


def _pair_distance_matrix(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    diff = a[:, None, :] - b[None, :, :]
    return np.sqrt(np.einsum("ijk,ijk->ij", diff, diff))


def _edge_mask(d: np.ndarray, r: float, alpha: float | None) -> np.ndarray:
    mask = (d <= r) & (d > 0.0)
    if alpha is not None:
        mask &= d >= alpha * r
    return mask


def _cell_batch_edges(pts, cells, keys, r, alpha, offsets):
    """Edges whose lower-indexed cell is in ``keys``; returns (i, j, w)."""
    out_i, out_j, out_w = [], [], []
    for key in keys:
        a_idx = cells[key]
        a_pts = pts[a_idx]
        d = _pair_distance_matrix(a_pts, a_pts)
        mask = np.triu(_edge_mask(d, r, alpha), k=1)
        ii, jj = np.nonzero(mask)
        if len(ii):
            out_i.append(a_idx[ii])
            out_j.append(a_idx[jj])
            out_w.append(d[ii, jj])
        for off in offsets:
            nkey = tuple(k + o for k, o in zip(key, off))
            b_idx = cells.get(nkey)
            if b_idx is None:
                continue
            d = _pair_distance_matrix(a_pts, pts[b_idx])
            mask = _edge_mask(d, r, alpha)
            ii, jj = np.nonzero(mask)
            if len(ii):
                gi = a_idx[ii]
                gj = b_idx[jj]
                out_i.append(np.minimum(gi, gj))
                out_j.append(np.maximum(gi, gj))
                out_w.append(d[ii, jj])
    return out_i, out_j, out_w


def _half_offsets(dim: int):
    """Half of the 3^D - 1 neighbor offsets, so each cell pair is seen once."""
    offsets = []
    def rec(prefix):
        if len(prefix) == dim:
            full = tuple(prefix)
            if full > (0,) * dim:  # lexicographically positive half
                offsets.append(full)
            return
        for v in (-1, 0, 1):
            rec(prefix + [v])
    rec([])
    return offsets


def _index_edges(pts, r, alpha, threads):
    index = build_index(pts, r)
    keys = sorted(index.cells.keys())
    offsets = _half_offsets(pts.shape[1])
    if threads <= 1 or len(keys) < 4:
        parts = [_cell_batch_edges(pts, index.cells, keys, r, alpha, offsets)]
    else:
        chunks = [keys[k::threads] for k in range(threads)]
        with ThreadPoolExecutor(max_workers=threads) as pool:
            parts = list(
                pool.map(
                    lambda ks: _cell_batch_edges(pts, index.cells, ks, r, alpha, offsets),
                    chunks,
                )
            )
    ii = [a for p in parts for a in p[0]]
    jj = [a for p in parts for a in p[1]]
    ww = [a for p in parts for a in p[2]]
    if not ii:
        empty = np.empty(0, dtype=np.int64)
        return empty, empty, np.empty(0, dtype=np.float64)
    return np.concatenate(ii), np.concatenate(jj), np.concatenate(ww)


def _brute_edges(pts, r, alpha):
    d = _pair_distance_matrix(pts, pts)
    mask = np.triu(_edge_mask(d, r, alpha), k=1)
    ii, jj = np.nonzero(mask)
    return ii.astype(np.int64), jj.astype(np.int64), d[ii, jj]


def build_graph(
    sample,
    kind: str = "ball",
    r: float = 1.0,
    alpha: float | None = None,
    method: str = "index",
    threads: int = 1,
) -> NeighborhoodGraph:
    """Build the r-ball or (r, alpha)-annulus graph over a sample.

    ``method="brute"`` compares every pair directly and is limited to
    small inputs; it exists as the oracle the index is tested against.
    The output is deterministic and independent of the thread count:
    edge batches are merged and sorted globally before the adjacency is
    laid out.
    """
    pts = _points_of(sample)
    n = len(pts)
    if n < 2:
        raise ValueError("need at least 2 points to build a graph")
    if not (r > 0.0 and math.isfinite(r)):
        raise ValueError("r must be positive and finite")
    if kind == "ball":
        if alpha is not None:
            raise ValueError("ball graphs take no alpha")
    elif kind == "annulus":
        if alpha is None or not (0.0 <= alpha < 1.0):
            raise ValueError("annulus graphs need 0 <= alpha < 1")
    else:
        raise ValueError(f"unknown graph kind {kind!r}")

    if method == "brute":
        if n > BRUTE_FORCE_LIMIT:
            raise ValueError(f"brute-force construction is limited to n <= {BRUTE_FORCE_LIMIT}")
        ii, jj, ww = _brute_edges(pts, r, alpha)
    elif method == "index":
        ii, jj, ww = _index_edges(pts, r, alpha, max(1, threads))
    else:
        raise ValueError(f"unknown construction method {method!r}")

    src = np.concatenate([ii, jj])
    dst = np.concatenate([jj, ii])
    wgt = np.concatenate([ww, ww])
    order = np.lexsort((dst, src))
    src, dst, wgt = src[order], dst[order], wgt[order]
    indptr = np.zeros(n + 1, dtype=np.int64)
    np.cumsum(np.bincount(src, minlength=n), out=indptr[1:])
    return NeighborhoodGraph(
        n=n,
        kind=kind,
        r=float(r),
        alpha=None if alpha is None else float(alpha),
        indptr=indptr,
        indices=dst,
        weights=wgt,
        points=pts,
    )


@dataclass(frozen=True)
class GraphStats:
    n: int
    edge_count: int
    min_degree: int
    max_degree: int
    mean_degree: float
    components: int


def connected_components(g: NeighborhoodGraph) -> np.ndarray:
    """Component label per node, assigned by BFS in index order."""
    labels = np.full(g.n, -1, dtype=np.int64)
    current = 0
    for start in range(g.n):
        if labels[start] >= 0:
            continue
        labels[start] = current
        queue = deque([start])
        while queue:
            u = queue.popleft()
            for v in g.indices[g.indptr[u]:g.indptr[u + 1]]:
                if labels[v] < 0:
                    labels[v] = current
                    queue.append(int(v))
        current += 1
    return labels


def graph_stats(g: NeighborhoodGraph) -> GraphStats:
    deg = g.degrees()
    return GraphStats(
        n=g.n,
        edge_count=g.edge_count,
        min_degree=int(deg.min()) if g.n else 0,
        max_degree=int(deg.max()) if g.n else 0,
        mean_degree=float(deg.mean()) if g.n else 0.0,
        components=int(connected_components(g).max()) + 1 if g.n else 0,
    )


# ---------------------------------------------------------------------------
# Graph file format: `# kind=ball r=<r>` or `# kind=annulus r=<r> alpha=<a>`
# comment, then one `i,j,weight` row per undirected edge with i < j.

def _fmt(x: float) -> str:
    return format(x, ".17g")


def write_graph_csv(path: str, g: NeighborhoodGraph):
    with open(path, "w", encoding="utf-8") as fh:
        if g.kind == "ball":
            fh.write(f"# kind=ball r={_fmt(g.r)}\n")
        else:
            fh.write(f"# kind=annulus r={_fmt(g.r)} alpha={_fmt(g.alpha)}\n")
        for i in range(g.n):
            nbrs, wts = g.neighbors(i)
            keep = nbrs > i
            for j, w in zip(nbrs[keep], wts[keep]):
                fh.write(f"{i},{j},{_fmt(w)}\n")


def read_graph_csv(path: str, points: np.ndarray | None = None, n: int | None = None) -> NeighborhoodGraph:
    """Read an edge list back; node count comes from ``points``, ``n``,
    or the largest index seen, in that order of preference."""
    kind = None
    r = None
    alpha = None
    ii, jj, ww = [], [], []
    with open(path, "r", encoding="utf-8") as fh:
        for line in fh:
            line = line.strip()
            if not line:
                continue
            if line.startswith("#"):
                fields = dict(
                    part.split("=", 1) for part in line[1:].split() if "=" in part
                )
                kind = fields.get("kind", kind)
                if "r" in fields:
                    r = float(fields["r"])
                if "alpha" in fields:
                    alpha = float(fields["alpha"])
                continue
            a, b, w = line.split(",")
            ii.append(int(a))
            jj.append(int(b))
            ww.append(float(w))
    if kind is None or r is None:
        raise ValueError(f"{path} is missing the kind/r header comment")
    if kind == "annulus" and alpha is None:
        raise ValueError("annulus graph file is missing alpha")
    if points is not None:
        n = len(points)
    elif n is None:
        n = max(max(ii, default=-1), max(jj, default=-1)) + 1
    if n < 2:
        raise ValueError("graph needs at least 2 nodes")
    ii = np.asarray(ii, dtype=np.int64)
    jj = np.asarray(jj, dtype=np.int64)
    ww = np.asarray(ww, dtype=np.float64)
    src = np.concatenate([ii, jj])
    dst = np.concatenate([jj, ii])
    wgt = np.concatenate([ww, ww])
    order = np.lexsort((dst, src))
    src, dst, wgt = src[order], dst[order], wgt[order]
    indptr = np.zeros(n + 1, dtype=np.int64)
    np.cumsum(np.bincount(src, minlength=n), out=indptr[1:])
    return NeighborhoodGraph(
        n=int(n), kind=kind, r=r, alpha=alpha,
        indptr=indptr, indices=dst, weights=wgt, points=points,
    )
