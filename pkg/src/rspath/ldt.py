"""One-sided low-degree tester over F_p.

For f: F_p^N -> F_p with deg_p(f) <= d = t'(p-1), the tester restricts f to
random t'-dimensional affine subspaces and sums it over each one. The sum
over F_p^{t'} equals (-1)^{t'} times the coefficient of prod u_j^{p-1}, so a
nonzero sum certifies deg_p(f) = d. Restriction never raises deg_p, hence
below-degree inputs are never certified.

Black boxes are batched: they take an int array of points with shape (M, N)
and return values of shape (M,), or (M, t) for F_{p^t}-valued boxes read in
the polynomial basis. For the latter a nonzero sum in any coordinate
certifies the box's projection onto that coordinate.
"""

from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

import numpy as np

CHUNK = 1 << 15


def rank_mod_p(mat: np.ndarray, p: int) -> int:
    a = np.array(mat, dtype=np.int64) % p
    rows, cols = a.shape
    rank = 0
    for c in range(cols):
        piv = next((i for i in range(rank, rows) if a[i, c]), None)
        if piv is None:
            continue
        a[[rank, piv]] = a[[piv, rank]]
        a[rank] = a[rank] * pow(int(a[rank, c]), p - 2, p) % p
        for i in range(rows):
            if i != rank and a[i, c]:
                a[i] = (a[i] - a[i, c] * a[rank]) % p
        rank += 1
        if rank == rows:
            break
    return rank


def grid(p: int, dim: int, start: int, stop: int) -> np.ndarray:
    """Rows start..stop-1 of F_p^dim in base-p order, first coordinate most significant."""
    idx = np.arange(start, stop, dtype=np.int64)
    out = np.empty((stop - start, dim), dtype=np.int64)
    for j in range(dim - 1, -1, -1):
        idx, out[:, j] = np.divmod(idx, p)
    return out


@dataclass(frozen=True, eq=False)
class AffineSubspace:
    p: int
    base: np.ndarray  # shape (N,)
    basis: np.ndarray  # shape (t', N)
    draws: int = field(default=1, compare=False)

    def __post_init__(self):
        base = np.asarray(self.base, dtype=np.int64) % self.p
        basis = np.asarray(self.basis, dtype=np.int64).reshape(-1, base.shape[0]) % self.p
        if rank_mod_p(basis, self.p) != basis.shape[0]:
            raise ValueError("basis vectors are linearly dependent")
        object.__setattr__(self, "base", base)
        object.__setattr__(self, "basis", basis)

    @property
    def ambient(self) -> int:
        return self.base.shape[0]

    @property
    def dim(self) -> int:
        return self.basis.shape[0]

    @property
    def size(self) -> int:
        return self.p**self.dim

    def point(self, u) -> np.ndarray:
        return (self.base + np.asarray(u, dtype=np.int64) @ self.basis) % self.p

    def chunks(self, chunk: int = CHUNK):
        """Yield every point, in blocks of at most ``chunk`` rows."""
        for start in range(0, self.size, chunk):
            u = grid(self.p, self.dim, start, min(start + chunk, self.size))
            yield (self.base + u @ self.basis) % self.p

    def points(self) -> np.ndarray:
        return np.concatenate(list(self.chunks()), axis=0)

    def to_dict(self) -> dict:
        return {"base": self.base.tolist(), "basis": self.basis.tolist()}

    @classmethod
    def from_dict(cls, p: int, d: dict) -> AffineSubspace:
        return cls(p, np.array(d["base"]), np.array(d["basis"]))


def sample_subspace(N: int, t_sub: int, p: int, rng: np.random.Generator) -> AffineSubspace:
    """Uniform base point and a uniform ordered independent basis (batch rejection)."""
    if t_sub > N:
        raise ValueError(f"subspace dimension {t_sub} exceeds ambient dimension {N}")
    base = rng.integers(0, p, size=N)
    draws = 0
    while True:
        draws += 1
        basis = rng.integers(0, p, size=(t_sub, N))
        if rank_mod_p(basis, p) == t_sub:
            return AffineSubspace(p, base, basis, draws)


def expected_draws(N: int, t_sub: int, p: int) -> float:
    """1 / P(t' uniform vectors in F_p^N are independent)."""
    return 1 / math.prod(1 - p ** (j - N) for j in range(t_sub))


def box_sum(f, points_iter, p: int):
    """Sum of f over the given point blocks, reduced mod p."""
    total = None
    count = 0
    for pts in points_iter:
        vals = np.asarray(f(pts), dtype=np.int64) % p
        s = vals.sum(axis=0) % p
        total = s if total is None else (total + s) % p
        count += pts.shape[0]
    return total, count


@dataclass(frozen=True)
class ZeroSum:
    certified: bool
    total: object  # int, or list of ints for vector-valued boxes
    evaluations: int


def _as_json(total):
    return total.tolist() if isinstance(total, np.ndarray) else int(total)


def zero_sum_test(f, p: int, t_sub: int, chunk: int = CHUNK) -> ZeroSum:
    """Sum f over all of F_p^{t'}; nonzero certifies deg_p(f) = t'(p-1)."""
    size = p**t_sub
    blocks = (grid(p, t_sub, s, min(s + chunk, size)) for s in range(0, size, chunk))
    total, count = box_sum(f, blocks, p)
    return ZeroSum(bool(np.any(total)), _as_json(total), count)


def restricted_sum(f, V: AffineSubspace, chunk: int = CHUNK) -> ZeroSum:
    """zero_sum_test applied to f o V."""
    total, count = box_sum(f, V.chunks(chunk), V.p)
    return ZeroSum(bool(np.any(total)), _as_json(total), count)


@dataclass(frozen=True)
class LdtConfig:
    p: int
    d: int
    R: int
    seed: int | tuple[int, ...] = 0
    workers: int = 1

    def __post_init__(self):
        if self.R < 1:
            raise ValueError("R must be >= 1")
        if self.d % (self.p - 1):
            raise ValueError(f"target degree {self.d} is not a multiple of p-1={self.p - 1}; pad first")

    @property
    def t_sub(self) -> int:
        return self.d // (self.p - 1)

    def rng(self, rep: int) -> np.random.Generator:
        seed = self.seed if isinstance(self.seed, tuple) else (self.seed,)
        return np.random.default_rng([*seed, rep])


@dataclass(frozen=True)
class LdtResult:
    full_degree: bool
    repetition: int | None  # index of the certifying repetition
    subspace: AffineSubspace | None
    total: object
    evaluations: int


def ldt(f, N: int, cfg: LdtConfig) -> LdtResult:
    """Certify deg_p(f) = cfg.d for f on F_p^N with deg_p(f) <= cfg.d.

    Repetition j draws its subspace from a generator seeded by (seed, j), so
    the result and the evaluation count do not depend on ``workers``: the
    lowest certifying repetition wins and the count stops there.
    """
    p, t_sub = cfg.p, cfg.t_sub
    if t_sub > N:
        # deg_p(f) <= N(p-1) < d
        return LdtResult(False, None, None, None, 0)

    def one(rep: int):
        V = sample_subspace(N, t_sub, p, cfg.rng(rep))
        return V, restricted_sum(f, V)

    step = max(1, cfg.workers)
    pool = ThreadPoolExecutor(step) if step > 1 else None
    try:
        evaluations = 0
        for start in range(0, cfg.R, step):
            reps = range(start, min(start + step, cfg.R))
            results = list(pool.map(one, reps)) if pool else [one(j) for j in reps]
            for j, (V, zs) in zip(reps, results):
                evaluations += zs.evaluations
                if zs.certified:
                    return LdtResult(True, j, V, zs.total, evaluations)
        return LdtResult(False, None, None, None, evaluations)
    finally:
        if pool:
            pool.shutdown()
