"""Directed graphs and r-SIMPLE k-PATH instances, with the text file format.

File format (UTF-8, lines starting with '#' ignored)::

    n m r k
    u v        # m lines, directed edge u -> v, 0-based

Paths are measured in vertices: a k-path is v_1, ..., v_k with k - 1 edges.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass, field

import numpy as np


class InstanceFormatError(ValueError):
    def __init__(self, msg: str, line: int | None = None, col: int | None = None):
        self.line, self.col = line, col
        loc = "" if line is None else f"line {line}" + ("" if col is None else f", column {col}") + ": "
        super().__init__(loc + msg)


@dataclass(frozen=True)
class Digraph:
    n: int
    edges: frozenset[tuple[int, int]] = field(default_factory=frozenset)

    def __post_init__(self):
        if self.n < 0:
            raise ValueError("vertex count must be non-negative")
        edges = frozenset((int(u), int(v)) for u, v in self.edges)
        for u, v in edges:
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={self.n}")
        object.__setattr__(self, "edges", edges)
        succ: list[list[int]] = [[] for _ in range(self.n)]
        for u, v in sorted(edges):
            succ[u].append(v)
        object.__setattr__(self, "_succ", tuple(tuple(s) for s in succ))

    @property
    def m(self) -> int:
        return len(self.edges)

    def has_edge(self, u: int, v: int) -> bool:
        return (u, v) in self.edges

    def successors(self, u: int) -> tuple[int, ...]:
        return self._succ[u]

    def sorted_edges(self) -> list[tuple[int, int]]:
        return sorted(self.edges)

    def adjacency(self) -> np.ndarray:
        a = np.zeros((self.n, self.n), dtype=np.int64)
        for u, v in self.edges:
            a[u, v] = 1
        return a

    def is_path(self, walk) -> bool:
        return all(0 <= v < self.n for v in walk) and all(
            self.has_edge(u, v) for u, v in zip(walk, walk[1:])
        )


@dataclass(frozen=True)
class Instance:
    graph: Digraph
    r: int
    k: int

    def __post_init__(self):
        if self.k < 1:
            raise ValueError("k must be >= 1")
        if self.r < 1:
            raise ValueError("r must be >= 1")
        if self.r > self.k:
            warnings.warn(f"r={self.r} exceeds k={self.k}; using r=k", stacklevel=3)
            object.__setattr__(self, "r", self.k)

    @property
    def n(self) -> int:
        return self.graph.n


def _int_token(tok: str, line: int, col: int) -> int:
    try:
        return int(tok)
    except ValueError:
        raise InstanceFormatError(f"expected an integer, got {tok!r}", line, col) from None


def _tokens(raw: str):
    col = 0
    for tok in raw.split():
        col = raw.index(tok, col) + 1
        yield tok, col
        col += len(tok) - 1


def parse_instance(text: str | bytes) -> Instance:
    if isinstance(text, bytes):
        text = text.decode("utf-8")
    lines = [
        (i, ln) for i, ln in enumerate(text.splitlines(), 1) if ln.strip() and not ln.lstrip().startswith("#")
    ]
    if not lines:
        raise InstanceFormatError("missing header 'n m r k'")
    lineno, header = lines[0]
    toks = list(_tokens(header))
    if len(toks) != 4:
        raise InstanceFormatError(f"header needs 4 integers 'n m r k', got {len(toks)}", lineno)
    n, m, r, k = (_int_token(t, lineno, c) for t, c in toks)
    if n < 0 or m < 0:
        raise InstanceFormatError("n and m must be non-negative", lineno)
    if r < 1 or k < 1:
        raise InstanceFormatError("r and k must be >= 1", lineno)
    body = lines[1:]
    if len(body) != m:
        raise InstanceFormatError(f"header declares {m} edges, found {len(body)}", lineno)
    edges = []
    for lineno, raw in body:
        toks = list(_tokens(raw))
        if len(toks) != 2:
            raise InstanceFormatError("edge line needs exactly 2 integers 'u v'", lineno)
        uv = []
        for tok, col in toks:
            x = _int_token(tok, lineno, col)
            if not 0 <= x < n:
                raise InstanceFormatError(f"vertex {x} out of range [0, {n})", lineno, col)
            uv.append(x)
        edges.append(tuple(uv))
    return Instance(Digraph(n, frozenset(edges)), r, k)


def emit_instance(inst: Instance) -> bytes:
    g = inst.graph
    out = [f"{g.n} {g.m} {inst.r} {inst.k}"]
    out += [f"{u} {v}" for u, v in g.sorted_edges()]
    return ("\n".join(out) + "\n").encode("utf-8")


def read_instance(path) -> Instance:
    with open(path, "rb") as fh:
        return parse_instance(fh.read())


def write_instance(inst: Instance, path) -> None:
    with open(path, "wb") as fh:
        fh.write(emit_instance(inst))
