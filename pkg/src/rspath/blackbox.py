"""Polynomial-time evaluation of the path polynomial and the tester's black box.

P_G(x, y) = 1 . B^(k) ... B^(2) (x . y_1) sums, over every directed k-path
v_1 -> ... -> v_k, the monomial prod x_{v_s} * prod y_{s, v_s}. Aggregating
over predecessors, (B^(m) v)_i = x_i y_{m,i} sum_{j -> i} v_j, keeps position
1 on the first vertex of each path.

With y fixed to b in F_{p^t}, multiplication by b_{m,i} is an F_p-linear map
of the coefficient vector, so the whole chain runs as integer array algebra
mod p over a batch of points at once.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .field import ExtField
from .graph import Instance
from .params import SolverParams


def random_b(ext: ExtField, k: int, n: int, rng: np.random.Generator) -> np.ndarray:
    """Uniform b in F_{p^t}^{k x n}, as coefficient vectors of shape (k, n, t)."""
    return rng.integers(0, ext.p, size=(k, n, ext.t), dtype=np.int64)


@dataclass(frozen=True)
class EvalContext:
    instance: Instance
    field: ExtField
    b: np.ndarray  # (k, n, t) coefficient vectors, b[m-1, i] stands for y_{m,i}
    l: int = 1
    pad: int = 0
    _pred: np.ndarray = field(init=False, repr=False, compare=False)
    _bmat: np.ndarray = field(init=False, repr=False, compare=False)
    _bmatf: np.ndarray = field(init=False, repr=False, compare=False)
    _bf: np.ndarray = field(init=False, repr=False, compare=False)
    _predf: np.ndarray = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        inst, ext = self.instance, self.field
        b = np.asarray(self.b, dtype=np.int64) % ext.p
        if b.shape != (inst.k, inst.n, ext.t):
            raise ValueError(f"b has shape {b.shape}, expected {(inst.k, inst.n, ext.t)}")
        if not 0 <= self.pad < max(ext.p - 1, 1):
            raise ValueError("padding exponent must lie in [0, p-1)")
        if 2 * ext.t * inst.n * ext.p**3 >= 2**53:
            raise ValueError("p too large for exact float64 evaluation")
        b.setflags(write=False)
        object.__setattr__(self, "b", b)
        # pred[i, j] = 1 iff j -> i
        object.__setattr__(self, "_pred", inst.graph.adjacency().T.copy())
        mats = np.zeros((inst.k, inst.n, ext.t, ext.t), dtype=np.int64)
        for m in range(inst.k):
            for i in range(inst.n):
                mats[m, i] = ext.mul_matrix(tuple(int(c) for c in b[m, i]))
        object.__setattr__(self, "_bmat", mats)
        object.__setattr__(self, "_bmatf", mats.astype(np.float64))
        object.__setattr__(self, "_bf", b.astype(np.float64))
        object.__setattr__(self, "_predf", self._pred.astype(np.float64))

    @classmethod
    def from_params(cls, inst: Instance, params: SolverParams, b, ext: ExtField | None = None):
        ext = ext or ExtField(params.p, params.t)
        return cls(inst, ext, b, params.l, params.pad)

    @property
    def n(self) -> int:
        return self.instance.n

    def b_elements(self) -> list[list[tuple[int, ...]]]:
        """b as nested lists of field tuples, b[m-1][i]."""
        return [[tuple(int(c) for c in self.b[m, i]) for i in range(self.n)] for m in range(self.instance.k)]

    def eval_PG_batch(self, x: np.ndarray) -> np.ndarray:
        """P_G(x, b) for base-field points x of shape (M, n); returns (M, t).

        Runs in float64 with layout (n, t, M) so both matrix steps hit BLAS.
        Intermediate reductions are lazy (w - floor(w/p)*p may land anywhere
        in (-p, 2p) due to rounding); entries then stay below 2*t*n*p^3 in
        magnitude, exact in float64, and one exact reduction finishes.
        """
        p = self.field.p
        x = np.asarray(x, dtype=np.int64) % p
        if x.ndim != 2 or x.shape[1] != self.n:
            raise ValueError(f"points must have shape (M, {self.n})")
        n, t, M = self.n, self.field.t, x.shape[0]
        xf = x.T.astype(np.float64)[:, None, :]  # (n, 1, M)
        v = _lazy_mod(self._bf[0][:, :, None] * xf, p)  # (n, t, M)
        for m in range(1, self.instance.k):
            w = (self._predf @ v.reshape(n, t * M)).reshape(n, t, M)
            w = self._bmatf[m] @ w
            w *= xf
            v = _lazy_mod(w, p)
        return np.remainder(v.sum(axis=0), p).T.astype(np.int64)

    def eval_PG(self, x) -> tuple[int, ...]:
        """P_G at one point whose coordinates are F_{p^t} elements (tuples) or ints."""
        ext = self.field
        if len(x) != self.n:
            raise ValueError(f"expected {self.n} coordinates, got {len(x)}")
        xs = [ext(c) if isinstance(c, (int, np.integer)) else tuple(c) for c in x]
        bs = self.b_elements()
        g = self.instance.graph
        v = [ext.mul(xs[i], bs[0][i]) for i in range(self.n)]
        for m in range(1, self.instance.k):
            agg = [ext.zero] * self.n
            for u, w in g.edges:
                agg[w] = ext.add(agg[w], v[u])
            v = [ext.mul(xs[i], ext.mul(bs[m][i], agg[i])) for i in range(self.n)]
        acc = ext.zero
        for c in v:
            acc = ext.add(acc, c)
        return acc

    def eval_box(self, points: np.ndarray) -> np.ndarray:
        """a_0^pad * P_G(a_1^l, ..., a_n^l, b) over (M, n+1) base-field points; (M, t).

        Coordinate i-1 of each row is the value of h^i at that point.
        """
        p = self.field.p
        points = np.asarray(points, dtype=np.int64) % p
        a0, a = points[:, 0], points[:, 1:]
        xl = _powmod(a, self.l, p)
        vals = self.eval_PG_batch(xl)
        return vals * _powmod(a0, self.pad, p)[:, None] % p

    def eval_h(self, i: int, point) -> int:
        """h^i at a single point (a_0, a_1, ..., a_n) of F_p^{n+1}."""
        if not 1 <= i <= self.field.t:
            raise IndexError(f"projection index {i} outside [1, {self.field.t}]")
        pts = np.asarray(point, dtype=np.int64).reshape(1, -1)
        if pts.shape[1] != self.n + 1:
            raise ValueError(f"expected {self.n + 1} coordinates")
        return int(self.eval_box(pts)[0, i - 1])

    def h_box(self, i: int):
        """Batched scalar black box for the single projection h^i."""
        return lambda pts: self.eval_box(pts)[:, i - 1]


def _lazy_mod(w: np.ndarray, p: int) -> np.ndarray:
    q = np.floor(w * (1.0 / p))
    q *= p
    w -= q
    return w


def _powmod(a: np.ndarray, e: int, p: int) -> np.ndarray:
    out = np.ones_like(a)
    base = a % p
    while e:
        if e & 1:
            out = out * base % p
        base = base * base % p
        e >>= 1
    return out
