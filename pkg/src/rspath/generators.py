"""Instance families: the Hamiltonian-path gadget, the blow-up G (.) I_s,
the gap trees, and random digraphs."""

from __future__ import annotations

import numpy as np

from .graph import Digraph, Instance


def ham_gadget(g: Digraph, r: int) -> Instance:
    """Attach a twin v' = n + v to every vertex with arcs v <-> v'.

    G has a Hamiltonian path iff the result has an r-simple path on
    2rn - n + 2 vertices (for n >= 2, r >= 2).
    """
    if r < 1:
        raise ValueError("r must be >= 1")
    n = g.n
    edges = set(g.edges)
    for v in range(n):
        edges.add((n + v, v))
        edges.add((v, n + v))
    return Instance(Digraph(2 * n, frozenset(edges)), r, 2 * r * n - n + 2)


def ham_gadget_path(ham_path, n: int, r: int) -> list[int]:
    """The r-simple path v'_1 rho_1 ... rho_n v'_n built from a Hamiltonian path,
    where rho_j goes back and forth between v_j and its twin, 2r - 1 vertices."""
    out = [n + ham_path[0]]
    for v in ham_path:
        out += [v, n + v] * (r - 1) + [v]
    out.append(n + ham_path[-1])
    return out


def blow_up(inst: Instance, s: int) -> Instance:
    """Replace each vertex by s copies (copy j of v is j*n + v) joined along edges.

    The input's visit bound is r*s; the output asks the r-simple question with
    the same k.
    """
    if s < 1:
        raise ValueError("s must be >= 1")
    if inst.r % s:
        raise ValueError(f"visit bound {inst.r} is not divisible by s={s}")
    n = inst.n
    edges = frozenset(
        (i * n + u, j * n + v) for u, v in inst.graph.edges for i in range(s) for j in range(s)
    )
    return Instance(Digraph(s * n, edges), inst.r // s, inst.k)


def _tree_edges(n: int, arity: int):
    """Parent/child pairs of the first n vertices of a full arity-ary tree in BFS order.

    Taking a BFS prefix is the same as deleting rightmost leaves from the
    deepest level.
    """
    return [((c - 1) // arity, c) for c in range(1, n)]


def gap_tree(r: int, n: int) -> Digraph:
    """Graph with long r-simple paths but only short simple ones.

    r >= 3: full (r-1)-ary tree trimmed to n vertices. r == 2: full binary tree
    plus an edge between the two children of each vertex. All edges go both
    ways.
    """
    if r < 2:
        raise ValueError("r must be >= 2")
    if n < 1:
        raise ValueError("n must be >= 1")
    arity = 2 if r == 2 else r - 1
    edges = set()
    for u, v in _tree_edges(n, arity):
        edges |= {(u, v), (v, u)}
    if r == 2:
        for u in range(n):
            a, b = 2 * u + 1, 2 * u + 2
            if b < n:
                edges |= {(a, b), (b, a)}
    return Digraph(n, frozenset(edges))


def log_depth(r: int, n: int) -> int:
    """ceil(log n / log(r-1)) computed exactly: smallest D with (r-1)^D >= n."""
    base = 2 if r == 2 else r - 1
    d = 0
    while base**d < n:
        d += 1
    return d


def tree_levels(r: int, n: int) -> int:
    """Number of levels of the trimmed tree in gap_tree(r, n)."""
    arity = 2 if r == 2 else r - 1
    levels, full = 0, 0
    while full < n:
        full += arity**levels
        levels += 1
    return levels


def binary_tour(n: int, root: int = 0) -> list[int]:
    """2-simple tour of gap_tree(2, n): v, tour(left), tour(right), v.

    Leaves appear once, internal vertices twice; the jump from the left
    subtree to the right one uses the sibling edge.
    """
    left, right = 2 * root + 1, 2 * root + 2
    if left >= n:
        return [root]
    if right >= n:
        return [root] + binary_tour(n, left) + [root]
    return [root] + binary_tour(n, left) + binary_tour(n, right) + [root]


def simple_path_bound(r: int, n: int) -> int:
    """Vertex count of the longest simple path in gap_tree(r, n), r >= 3:
    leaf to root to leaf, 2 * levels - 1."""
    return 2 * tree_levels(r, n) - 1


def random_digraph(n: int, density: float, seed: int, loops: bool = False) -> Digraph:
    if not 0.0 <= density <= 1.0:
        raise ValueError("density must lie in [0, 1]")
    rng = np.random.default_rng(seed)
    mask = rng.random((n, n)) < density
    if not loops:
        np.fill_diagonal(mask, False)
    return Digraph(n, frozenset((int(u), int(v)) for u, v in zip(*np.nonzero(mask))))


def random_instance(n: int, density: float, r: int, k: int, seed: int, loops: bool = False) -> Instance:
    """Each ordered pair u != v is an edge independently with probability ``density``."""
    return Instance(random_digraph(n, density, seed, loops), r, k)


def gap_lower_bound(r: int, k: int) -> int:
    """ceil(log k / log r), exactly: smallest L with r^L >= k."""
    if r < 2:
        raise ValueError("r must be >= 2")
    L = 0
    while r**L < k:
        L += 1
    return L
