"""Divisive overlapping community detection driven by sample-node centrality.

Communities are split at the two most central interpolation nodes while the
split keeps raising global modularity, small cores are merged into the most
Jaccard-similar big one, and each core grows an overlap ring sized by the
fraction of its vertices' neighbors that stay inside the core.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

import numpy as np

from .graph import Graph, as_vertex_set
from .metrics import (
    KatzParams,
    default_alpha,
    jaccard_communities,
    katz_centrality,
    modularity,
)

FORMAT_VERSION = 1


@dataclass
class Community:
    """One subdomain: a disjoint core plus the overlap ring added later."""

    core: np.ndarray
    overlap: np.ndarray
    interpolation_nodes: np.ndarray

    @property
    def subdomain(self) -> np.ndarray:
        return np.union1d(self.core, self.overlap)


@dataclass
class Cover:
    communities: list[Community]
    provenance: list[dict] = field(default_factory=list)

    def membership(self, n: int) -> np.ndarray:
        """Core assignment per vertex; cores must partition 0..n-1."""
        member = -np.ones(n, dtype=np.int64)
        for cid, c in enumerate(self.communities):
            member[c.core] = cid
        if (member < 0).any():
            raise ValueError("cores do not cover every vertex")
        return member

    def to_json_dict(self) -> dict:
        return {
            "format_version": FORMAT_VERSION,
            "communities": [
                {
                    "id": cid,
                    "core": c.core.tolist(),
                    "overlap": c.overlap.tolist(),
                }
                for cid, c in enumerate(self.communities)
            ],
            "provenance": self.provenance,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict(), sort_keys=True, indent=2)

    @classmethod
    def from_json_dict(cls, doc: dict, n: int, W: np.ndarray) -> "Cover":
        comms = []
        for entry in sorted(doc["communities"], key=lambda e: e["id"]):
            core = as_vertex_set(entry["core"], n)
            overlap = as_vertex_set(entry["overlap"], n)
            sub = np.union1d(core, overlap)
            comms.append(
                Community(
                    core=core,
                    overlap=overlap,
                    interpolation_nodes=np.intersect1d(sub, W),
                )
            )
        return cls(communities=comms, provenance=list(doc.get("provenance", [])))


@dataclass(frozen=True)
class DetectionParams:
    small_fraction: float = 0.02
    katz: KatzParams | None = None  # None -> closed form with default alpha
    t_low: float = 0.4
    t_high: float = 0.8

    def __post_init__(self):
        if not 0 < self.small_fraction < 1:
            raise ValueError("small_fraction must lie in (0, 1)")
        if not 0 < self.t_low < self.t_high <= 1:
            raise ValueError("need 0 < t_low < t_high <= 1")


def split_community(
    g: Graph, core: np.ndarray, W: np.ndarray, katz: np.ndarray
) -> tuple[np.ndarray, np.ndarray] | None:
    """Bipartition a connected core at its two most central sample nodes.

    Seeds are the top two Katz-ranked members of W inside the core; every
    core vertex joins the seed it reaches in fewer hops within the induced
    core subgraph. Ties go to the seed with higher Katz centrality, then to
    the seed with the lower vertex id. Returns None when the core holds
    fewer than two sample nodes.
    """
    w_in = np.intersect1d(core, W)
    if len(w_in) < 2:
        return None
    ranked = sorted(w_in.tolist(), key=lambda v: (-katz[v], v))
    s1, s2 = ranked[0], ranked[1]
    # tie-break winner between the two seeds
    if katz[s1] > katz[s2] or (katz[s1] == katz[s2] and s1 < s2):
        winner = s1
    else:
        winner = s2

    in_core = set(core.tolist())
    d1 = _bfs_distances(g, s1, in_core)
    d2 = _bfs_distances(g, s2, in_core)
    side1, side2 = [], []
    for v in core.tolist():
        a, b = d1.get(v), d2.get(v)
        if b is None or (a is not None and a < b):
            side1.append(v)
        elif a is None or b < a:
            side2.append(v)
        else:
            (side1 if winner == s1 else side2).append(v)
    return np.array(sorted(side1), dtype=np.int64), np.array(sorted(side2), dtype=np.int64)


def _bfs_distances(g: Graph, src: int, allowed: set[int]) -> dict[int, int]:
    dist = {src: 0}
    frontier = [src]
    d = 0
    while frontier:
        d += 1
        nxt = []
        for u in frontier:
            for w in g.neighbors(u):
                w = int(w)
                if w in allowed and w not in dist:
                    dist[w] = d
                    nxt.append(w)
        frontier = nxt
    return dist


def _membership(n: int, cores: list[np.ndarray]) -> np.ndarray:
    member = -np.ones(n, dtype=np.int64)
    for cid, core in enumerate(cores):
        member[core] = cid
    return member


def _split_phase(
    g: Graph, W: np.ndarray, katz: np.ndarray, provenance: list[dict]
) -> list[np.ndarray]:
    """Greedy divisive loop: accept each split that raises global modularity."""
    cores: list[np.ndarray] = [np.arange(g.n, dtype=np.int64)]
    q_run = modularity(g, _membership(g.n, cores))
    q_prev, q_curr = -1.0, -0.5
    while len(cores) <= len(W) and q_curr > q_prev:
        q_pass_start = q_run
        for cid in range(len(cores)):
            if len(cores) + 1 > len(W):
                break
            parts = split_community(g, cores[cid], W, katz)
            if parts is None:
                continue
            side1, side2 = parts
            candidate = cores[:cid] + [side1] + cores[cid + 1 :] + [side2]
            q_cand = modularity(g, _membership(g.n, candidate))
            if q_cand > q_run:
                cores = candidate
                provenance.append(
                    {"action": "split", "q_before": q_run, "q_after": q_cand}
                )
                q_run = q_cand
            else:
                provenance.append(
                    {"action": "split_rejected", "q_before": q_run, "q_after": q_cand}
                )
        q_prev, q_curr = q_pass_start, q_run
    return cores


def merge_small(
    g: Graph,
    cores: list[np.ndarray],
    p: DetectionParams,
    provenance: list[dict],
) -> list[np.ndarray]:
    """Fold cores smaller than ceil(small_fraction*n) into the most similar big one.

    Without any big community, small cores merge among themselves largest-first
    until every survivor is big or one core remains. Ties on Jaccard similarity
    go to the lowest community id. Merged cores may be disconnected; that is
    logged, not rejected.
    """
    threshold = int(np.ceil(p.small_fraction * g.n))
    cores = [c.copy() for c in cores]

    def is_small(c):
        return len(c) < threshold

    if any(not is_small(c) for c in cores):
        merged: list[np.ndarray] = []
        small_ids = [i for i, c in enumerate(cores) if is_small(c)]
        big_ids = [i for i, c in enumerate(cores) if not is_small(c)]
        bigs = {i: cores[i] for i in big_ids}
        for sid in small_ids:
            best, best_j = None, -1.0
            for bid in big_ids:
                jv = jaccard_communities(g, cores[sid], bigs[bid])
                if jv > best_j:
                    best, best_j = bid, jv
            bigs[best] = np.union1d(bigs[best], cores[sid])
            _log_merge(g, provenance, cores[sid], bigs[best])
        merged = [bigs[i] for i in big_ids]
        return merged

    # no big community exists: merge smalls pairwise, largest first
    while len(cores) > 1 and any(is_small(c) for c in cores):
        sizes = [(-len(c), i) for i, c in enumerate(cores)]
        sizes.sort()
        src = sizes[0][1]
        best, best_j = None, -1.0
        for j, c in enumerate(cores):
            if j == src:
                continue
            jv = jaccard_communities(g, cores[src], c)
            if jv > best_j:
                best, best_j = j, jv
        lo, hi = min(src, best), max(src, best)
        union = np.union1d(cores[lo], cores[hi])
        _log_merge(g, provenance, cores[hi], union)
        cores = [c for i, c in enumerate(cores) if i not in (lo, hi)]
        cores.insert(lo, union)
    return cores


def _log_merge(g: Graph, provenance: list[dict], absorbed, result) -> None:
    entry = {"action": "merge", "q_before": None, "q_after": None}
    sub, _ = g.induced_subgraph(result)
    if not sub.is_connected():
        entry["action"] = "merge_disconnected"
    provenance.append(entry)


def expand_overlap(
    g: Graph, cores: list[np.ndarray], p: DetectionParams
) -> list[np.ndarray]:
    """Overlap ring per core from the internal-neighbor ratio r(v).

    r(v) <= t_low pulls in v's 2-hop neighborhood, t_low < r(v) <= t_high the
    1-hop one; boundary-free vertices add nothing. Cores are untouched, so a
    second application is a no-op.
    """
    overlaps = []
    for core in cores:
        core_set = set(core.tolist())
        extra: set[int] = set()
        for v in core.tolist():
            nb = g.neighbors(v)
            if len(nb) == 0:
                continue
            inside = sum(1 for w in nb if int(w) in core_set)
            r = inside / len(nb)
            if r <= p.t_low:
                extra.update(int(w) for w in g.neighborhood(v, radius=2))
            elif r <= p.t_high:
                extra.update(int(w) for w in nb)
        extra -= core_set
        overlaps.append(np.array(sorted(extra), dtype=np.int64))
    return overlaps


def detect_communities(g: Graph, W: np.ndarray, p: DetectionParams) -> Cover:
    """Full detection pipeline: split while modularity rises, merge, expand."""
    W = as_vertex_set(W, g.n)
    if len(W) == 0:
        raise ValueError("need at least one interpolation node")
    katz_params = p.katz or KatzParams(alpha=default_alpha(g))
    katz = katz_centrality(g, katz_params)

    provenance: list[dict] = [
        {
            "action": "katz",
            "q_before": None,
            "q_after": None,
            "alpha": katz_params.alpha,
            "mode": katz_params.mode,
        }
    ]
    cores = _split_phase(g, W, katz, provenance)
    cores = merge_small(g, cores, p, provenance)
    q_final = modularity(g, _membership(g.n, cores))
    overlaps = expand_overlap(g, cores, p)
    provenance.append({"action": "expand", "q_before": q_final, "q_after": q_final})

    communities = []
    for core, overlap in zip(cores, overlaps):
        sub = np.union1d(core, overlap)
        communities.append(
            Community(
                core=core,
                overlap=overlap,
                interpolation_nodes=np.intersect1d(sub, W),
            )
        )
    return Cover(communities=communities, provenance=provenance)
