"""Mutable directed graph with per-edge weights, built for streaming updates."""

from __future__ import annotations

import math

import numpy as np

from .errors import DuplicateEdge, MissingEdge, OutOfRange, ParseError


class DynamicGraph:
    """Directed simple graph over a fixed vertex set [0, n).

    Both out- and in-adjacency are maintained: forward (push) propagation
    walks out-edges while full re-aggregation (pull) walks in-edges.
    Adjacency is stored as per-vertex parallel lists (targets, weights) so
    topology mutations stay O(degree) and conversion to numpy index arrays
    is cheap. Deletion swaps the victim entry with the last one before
    truncating, so neighbor iteration order is unspecified after deletes
    and no algorithm may rely on it.

    Self-loops are permitted; duplicate (u, v) pairs are rejected.
    """

    def __init__(self, n: int):
        if n <= 0:
            raise ValueError("vertex count must be positive")
        self.n = n
        self._out_tgt = [[] for _ in range(n)]
        self._out_w = [[] for _ in range(n)]
        self._in_src = [[] for _ in range(n)]
        self._in_w = [[] for _ in range(n)]
        self._edges = set()

    @property
    def m(self) -> int:
        return len(self._edges)

    def _check_vertex(self, v):
        if not 0 <= v < self.n:
            raise OutOfRange(f"vertex {v} outside [0, {self.n})")

    def has_edge(self, u, v) -> bool:
        return (u, v) in self._edges

    def add_edge(self, u, v, w: float = 1.0):
        self._check_vertex(u)
        self._check_vertex(v)
        if not math.isfinite(w):
            raise ValueError(f"edge weight must be finite, got {w!r}")
        if (u, v) in self._edges:
            raise DuplicateEdge(f"edge ({u}, {v}) already present")
        self._edges.add((u, v))
        self._out_tgt[u].append(v)
        self._out_w[u].append(w)
        self._in_src[v].append(u)
        self._in_w[v].append(w)

    def delete_edge(self, u, v) -> float:
        """Remove (u, v) and return its weight."""
        self._check_vertex(u)
        self._check_vertex(v)
        if (u, v) not in self._edges:
            raise MissingEdge(f"edge ({u}, {v}) not present")
        self._edges.remove((u, v))
        w = self._swap_remove(self._out_tgt[u], self._out_w[u], v)
        self._swap_remove(self._in_src[v], self._in_w[v], u)
        return w

    @staticmethod
    def _swap_remove(ids, ws, victim):
        i = ids.index(victim)
        w = ws[i]
        last = len(ids) - 1
        if i != last:
            ids[i] = ids[last]
            ws[i] = ws[last]
        ids.pop()
        ws.pop()
        return w

    def out_neighbors(self, u):
        """Yield (target, weight) pairs for current out-edges of u."""
        self._check_vertex(u)
        return zip(self._out_tgt[u], self._out_w[u])

    def in_neighbors(self, v):
        """Yield (source, weight) pairs for current in-edges of v."""
        self._check_vertex(v)
        return zip(self._in_src[v], self._in_w[v])

    def out_degree(self, u) -> int:
        return len(self._out_tgt[u])

    def in_degree(self, v) -> int:
        return len(self._in_src[v])

    def in_degrees(self, ids) -> np.ndarray:
        src = self._in_src
        return np.array([len(src[v]) for v in ids], dtype=np.int64)

    def out_arrays(self, u):
        """Out-adjacency of u as (targets int64 array, weights f64 array)."""
        return (np.array(self._out_tgt[u], dtype=np.int64),
                np.array(self._out_w[u], dtype=np.float64))

    def in_arrays(self, v):
        return (np.array(self._in_src[v], dtype=np.int64),
                np.array(self._in_w[v], dtype=np.float64))

    def edges(self):
        """Yield (u, v, w) over all edges, grouped by source vertex."""
        for u in range(self.n):
            for v, w in zip(self._out_tgt[u], self._out_w[u]):
                yield u, v, w

    def in_edge_arrays(self):
        """All edges as (src, dst, w) arrays, grouped by destination.

        Rebuilt on demand from the live adjacency; used by full
        re-aggregation, which touches every edge anyway.
        """
        srcs, dsts, ws = [], [], []
        for v in range(self.n):
            s = self._in_src[v]
            srcs.extend(s)
            dsts.extend([v] * len(s))
            ws.extend(self._in_w[v])
        return (np.array(srcs, dtype=np.int64),
                np.array(dsts, dtype=np.int64),
                np.array(ws, dtype=np.float64))

    def copy(self) -> "DynamicGraph":
        g = DynamicGraph(self.n)
        g._out_tgt = [list(x) for x in self._out_tgt]
        g._out_w = [list(x) for x in self._out_w]
        g._in_src = [list(x) for x in self._in_src]
        g._in_w = [list(x) for x in self._in_w]
        g._edges = set(self._edges)
        return g

    def validate(self):
        """Full-scan consistency check; raises AssertionError on breakage."""
        seen = set()
        for u in range(self.n):
            assert len(self._out_tgt[u]) == len(self._out_w[u])
            for v, w in zip(self._out_tgt[u], self._out_w[u]):
                assert (u, v) in self._edges, f"stray out-edge ({u},{v})"
                assert (u, v) not in seen, f"duplicate out-edge ({u},{v})"
                seen.add((u, v))
                # mirrored in-entry with equal weight
                found = [iw for s, iw in zip(self._in_src[v], self._in_w[v]) if s == u]
                assert len(found) == 1 and found[0] == w, f"mirror broken ({u},{v})"
        assert seen == self._edges
        total_in = sum(len(s) for s in self._in_src)
        assert total_in == len(self._edges)


def load_edge_list(path, n=None, default_weight: float = 1.0) -> DynamicGraph:
    """Build a graph from a text edge list.

    One edge per line as ``src,dst`` or ``src,dst,weight``; ``#`` starts a
    comment. The vertex count comes from the ``n`` argument or a header
    line of the form ``# n=<count>``.
    """
    g = None
    pending = []
    with open(path, "r", encoding="utf-8") as f:
        for lineno, raw in enumerate(f, start=1):
            line = raw.strip()
            if not line:
                continue
            if line.startswith("#"):
                body = line[1:].strip()
                if body.startswith("n=") and n is None:
                    try:
                        n = int(body[2:])
                    except ValueError:
                        raise ParseError(f"line {lineno}: bad vertex count header {body!r}")
                continue
            parts = line.split(",")
            if len(parts) not in (2, 3):
                raise ParseError(f"line {lineno}: expected 'src,dst[,weight]', got {line!r}")
            try:
                u = int(parts[0])
                v = int(parts[1])
                w = float(parts[2]) if len(parts) == 3 else default_weight
            except ValueError as exc:
                raise ParseError(f"line {lineno}: {exc}")
            pending.append((lineno, u, v, w))
    if n is None:
        raise ParseError("vertex count not given and no '# n=<count>' header found")
    g = DynamicGraph(n)
    for lineno, u, v, w in pending:
        try:
            g.add_edge(u, v, w)
        except DuplicateEdge:
            raise DuplicateEdge(f"line {lineno}: edge ({u}, {v}) appears twice")
        except OutOfRange as exc:
            raise ParseError(f"line {lineno}: {exc}")
    return g


def write_edge_list(g: DynamicGraph, path):
    """Write a graph as an edge list with an ``# n=`` header, weights included."""
    with open(path, "w", encoding="utf-8") as f:
        f.write(f"# n={g.n}\n")
        for u, v, w in g.edges():
            f.write(f"{u},{v},{w!r}\n")
