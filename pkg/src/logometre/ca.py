"""Correspondence analysis of a symmetric cooccurrence contingency matrix.

With P the matrix of relative counts, r and c its margins, the standardized
residuals S_ij = (P_ij - r_i c_j) / sqrt(r_i c_j) are decomposed by SVD,
S = U diag(sigma) V^T. Principal coordinates are F = D_r^{-1/2} U Sigma for
rows and G = D_c^{-1/2} V Sigma for columns; sigma_k^2 are the per-axis
inertias and their sum equals chi^2 / n. For the symmetric zero-diagonal
matrices this pipeline produces, r = c and F = G up to per-axis sign.

The SVD itself is LAPACK's deterministic dense routine (no randomized
initialization); axis signs are fixed afterwards by making the largest
absolute row coordinate positive on every axis, since CA signs are
otherwise arbitrary.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from .cooccurrence import CooccurrenceMatrix
from .errors import AxisOutOfRange, TooFewPoints, ZeroMatrix

# Singular values below RELATIVE_RANK_CUTOFF * sigma_1 are treated as zero.
# A leading singular value below ABSOLUTE_FLOOR means the matrix carries no
# association structure at all (pure independence up to float noise) and the
# solution keeps zero axes.
RELATIVE_RANK_CUTOFF = 1e-12
ABSOLUTE_FLOOR = 1e-13


@dataclass(frozen=True)
class CaSolution:
    labels: tuple
    dropped_labels: tuple
    singular_values: np.ndarray      # (K,), descending
    row_coords: np.ndarray           # (N, K) principal coordinates
    col_coords: np.ndarray           # (N, K)
    row_masses: np.ndarray           # (N,)
    col_masses: np.ndarray           # (N,)
    inertia_pct: np.ndarray          # (K,), sums to 100
    contributions: np.ndarray        # (N, K), columns sum to 1
    squared_cosines: np.ndarray      # (N, K)
    total_inertia: float

    @property
    def k_max(self) -> int:
        return int(self.singular_values.shape[0])

    def to_dict(self):
        return {
            "labels": list(self.labels),
            "dropped_labels": list(self.dropped_labels),
            "singular_values": [float(s) for s in self.singular_values],
            "inertia_pct": [float(p) for p in self.inertia_pct],
            "total_inertia": float(self.total_inertia),
            "row_masses": [float(m) for m in self.row_masses],
            "row_coords": [[float(v) for v in row] for row in self.row_coords],
            "contributions": [[float(v) for v in row] for row in self.contributions],
            "cos2": [[float(v) for v in row] for row in self.squared_cosines],
        }

    @staticmethod
    def from_dict(d) -> "CaSolution":
        coords = np.array(d["row_coords"], dtype=float)
        if coords.size == 0:
            coords = coords.reshape(len(d["labels"]), 0)
        ctr = np.array(d["contributions"], dtype=float).reshape(coords.shape)
        cos2 = np.array(d["cos2"], dtype=float).reshape(coords.shape)
        masses = np.array(d["row_masses"], dtype=float)
        return CaSolution(
            labels=tuple(d["labels"]),
            dropped_labels=tuple(d["dropped_labels"]),
            singular_values=np.array(d["singular_values"], dtype=float),
            row_coords=coords,
            col_coords=coords.copy(),
            row_masses=masses,
            col_masses=masses.copy(),
            inertia_pct=np.array(d["inertia_pct"], dtype=float),
            contributions=ctr,
            squared_cosines=cos2,
            total_inertia=float(d["total_inertia"]),
        )


def correspondence_analysis(matrix, labels=None) -> CaSolution:
    """Decompose a cooccurrence matrix into principal axes.

    Accepts a CooccurrenceMatrix or a plain square symmetric non-negative
    array plus labels. Lemmas whose row and column are entirely zero are
    dropped (recorded in ``dropped_labels``), not an error: absent lemmas
    are routine when the matrix labels come from a larger corpus.
    """
    if isinstance(matrix, CooccurrenceMatrix):
        counts = np.asarray(matrix.counts, dtype=float)
        labels = list(matrix.labels)
    else:
        counts = np.asarray(matrix, dtype=float)
        if labels is None:
            labels = [f"p{i + 1}" for i in range(counts.shape[0])]
        labels = list(labels)

    if counts.ndim != 2 or counts.shape[0] != counts.shape[1]:
        raise ValueError("contingency matrix must be square")
    if counts.shape[0] != len(labels):
        raise ValueError("labels do not match matrix size")
    if (counts < 0).any():
        raise ValueError("contingency matrix must be non-negative")
    if not np.array_equal(counts, counts.T):
        raise ValueError("contingency matrix must be symmetric")

    n = counts.sum()
    if n == 0:
        raise ZeroMatrix()

    margins = counts.sum(axis=1)
    keep = margins > 0
    dropped = tuple(l for l, k in zip(labels, keep) if not k)
    kept_labels = tuple(l for l, k in zip(labels, keep) if k)
    counts = counts[np.ix_(keep, keep)]

    p = counts / n
    r = p.sum(axis=1)
    c = p.sum(axis=0)
    expected = np.outer(r, c)
    s = (p - expected) / np.sqrt(expected)
    total_inertia = float((s * s).sum())

    u, sigma, vt = np.linalg.svd(s)
    if sigma.size == 0 or sigma[0] <= ABSOLUTE_FLOOR:
        k_retained = 0
    else:
        k_retained = int((sigma >= RELATIVE_RANK_CUTOFF * sigma[0]).sum())
    sigma = sigma[:k_retained]
    u = u[:, :k_retained]
    v = vt[:k_retained].T

    f = (u * sigma) / np.sqrt(r)[:, None]
    g = (v * sigma) / np.sqrt(c)[:, None]

    # orient every axis so its largest-|coordinate| row point is positive
    for k in range(k_retained):
        i_star = int(np.argmax(np.abs(f[:, k])))
        if f[i_star, k] < 0:
            f[:, k] = -f[:, k]
            g[:, k] = -g[:, k]

    with np.errstate(divide="ignore", invalid="ignore"):
        ctr = np.where(sigma > 0, r[:, None] * f * f / (sigma * sigma), 0.0)
        row_norms = (f * f).sum(axis=1, keepdims=True)
        cos2 = np.where(row_norms > 0, f * f / np.where(row_norms > 0, row_norms, 1.0), 0.0)

    inertia = sigma * sigma
    inertia_pct = 100.0 * inertia / inertia.sum() if k_retained else np.zeros(0)

    for arr in (sigma, f, g, ctr, cos2, inertia_pct):
        arr.flags.writeable = False

    return CaSolution(
        labels=kept_labels,
        dropped_labels=dropped,
        singular_values=sigma,
        row_coords=f,
        col_coords=g,
        row_masses=r,
        col_masses=c,
        inertia_pct=inertia_pct,
        contributions=ctr,
        squared_cosines=cos2,
        total_inertia=total_inertia,
    )


class ProjectedPoint(NamedTuple):
    lemma: str
    x: float
    y: float
    ctr_x: float
    ctr_y: float
    cos2_sum: float


def project(solution: CaSolution, axes):
    """Row points on a pair of 1-based axes, in label order."""
    ax_x, ax_y = axes
    for ax in (ax_x, ax_y):
        if not (1 <= ax <= solution.k_max):
            raise AxisOutOfRange(ax, solution.k_max)
    ix, iy = ax_x - 1, ax_y - 1
    points = []
    for i, lemma in enumerate(solution.labels):
        points.append(ProjectedPoint(
            lemma=lemma,
            x=float(solution.row_coords[i, ix]),
            y=float(solution.row_coords[i, iy]),
            ctr_x=float(solution.contributions[i, ix]),
            ctr_y=float(solution.contributions[i, iy]),
            cos2_sum=float(solution.squared_cosines[i, ix] + solution.squared_cosines[i, iy]),
        ))
    return points


@dataclass(frozen=True)
class IsotopyClustering:
    axes_used: tuple
    k: int
    assignment: dict       # lemma -> cluster id, ids numbered by first appearance
    seed: int

    def to_dict(self):
        return {
            "axes_used": list(self.axes_used),
            "k": self.k,
            "seed": self.seed,
            "assignment": dict(self.assignment),
        }


def _kmeans_once(x, weights, k, rng):
    n = x.shape[0]
    # k-means++ seeding, weighted
    centers = np.empty((k, x.shape[1]))
    first = int(rng.choice(n, p=weights / weights.sum()))
    centers[0] = x[first]
    d2 = ((x - centers[0]) ** 2).sum(axis=1)
    for j in range(1, k):
        mass = weights * d2
        total = mass.sum()
        if total <= 0:
            # all remaining points coincide with chosen centers
            chosen = {tuple(c) for c in centers[:j]}
            idx = next((i for i in range(n) if tuple(x[i]) not in chosen), j % n)
        else:
            idx = int(rng.choice(n, p=mass / total))
        centers[j] = x[idx]
        d2 = np.minimum(d2, ((x - centers[j]) ** 2).sum(axis=1))

    assign = np.zeros(n, dtype=int)
    for _ in range(200):
        dist = ((x[:, None, :] - centers[None, :, :]) ** 2).sum(axis=2)
        new_assign = dist.argmin(axis=1)
        for j in range(k):
            members = new_assign == j
            if members.any():
                w = weights[members]
                centers[j] = (x[members] * w[:, None]).sum(axis=0) / w.sum()
            else:
                # documented rule: re-seed an empty cluster from the point
                # farthest from its currently assigned center
                per_point = dist[np.arange(n), new_assign]
                far = int(per_point.argmax())
                centers[j] = x[far]
                new_assign[far] = j
        if (new_assign == assign).all():
            assign = new_assign
            break
        assign = new_assign
    dist = ((x[:, None, :] - centers[None, :, :]) ** 2).sum(axis=2)
    inertia = float((weights * dist[np.arange(n), assign]).sum())
    return assign, inertia


def cluster_isotopies(solution: CaSolution, k: int, axes=(1, 2), seed: int = 42,
                      restarts: int = 8) -> IsotopyClustering:
    """Weighted k-means over selected principal coordinates.

    An interpretation aid for reading thematic groupings off the factor
    plane; deterministic for a fixed seed (seeded k-means++ restarts, best
    weighted inertia wins).
    """
    n = len(solution.labels)
    if k < 2:
        raise ValueError("k must be >= 2")
    if n < k:
        raise TooFewPoints(n, k)
    axes = tuple(int(a) for a in axes)
    for ax in axes:
        if not (1 <= ax <= solution.k_max):
            raise AxisOutOfRange(ax, solution.k_max)

    x = solution.row_coords[:, [a - 1 for a in axes]]
    weights = np.asarray(solution.row_masses, dtype=float)

    rng = np.random.default_rng(seed)
    best = None
    for _ in range(restarts):
        assign, inertia = _kmeans_once(x, weights, k, rng)
        if best is None or inertia < best[1] - 1e-15:
            best = (assign, inertia)
    assign = best[0]

    # renumber clusters by first appearance so output is label-order canonical
    remap = {}
    assignment = {}
    for lemma, cluster in zip(solution.labels, assign):
        cluster = int(cluster)
        if cluster not in remap:
            remap[cluster] = len(remap)
        assignment[lemma] = remap[cluster]
    return IsotopyClustering(axes_used=axes, k=k, assignment=assignment, seed=seed)
