"""Choice of the field F_p and the substitution exponent l for a visit bound r.

Substituting x -> x^l turns "every individual degree <= r" into "every
individual degree <= p - 1" exactly when r*l <= p - 1 < (r + 1)*l. Among all
primes with such an l we pick the one minimising the per-unit-k cost
exponent l*ln(p)/(p - 1); the tester's work is about p^(k*l/(p-1)).
"""

from __future__ import annotations

import math
from dataclasses import asdict, dataclass

from .field import is_prime

# lower bound on prod_{j>=1} (1 - p^-j) over all primes p
PRODUCT_FLOOR = 0.28
# probability that a random b kills every r-monomial coefficient
B_MISS = 0.1
DEFAULT_LDT_EPS = 1 / 20


def smallest_l(r: int, p: int) -> int | None:
    """Smallest l with r*l <= p-1 < (r+1)*l, or None."""
    l = (p - 1) // (r + 1) + 1
    return l if r * l <= p - 1 else None


def in_window(r: int, p: int, l: int) -> bool:
    return l >= 1 and r * l <= p - 1 < (r + 1) * l


def cost_exponent(p: int, l: int) -> float:
    return l * math.log(p) / (p - 1)


def cost_base(p: int, l: int) -> float:
    """p^(l/(p-1)): the tester costs about cost_base^k."""
    return p ** (l / (p - 1))


def select_field(r: int) -> tuple[int, int]:
    """(p, l) minimising l*ln p/(p-1) over primes p <= 2r^2 + 2r with a window l.

    Ties go to smaller p, then smaller l. Candidates are scanned in increasing
    p; since every candidate costs more than ln(p)/(r+1), the scan stops once
    that floor exceeds the best cost seen.
    """
    if r < 1:
        raise ValueError("r must be >= 1")
    limit = 2 * r * r + 2 * r
    best: tuple[float, int, int] | None = None
    l = 1
    while True:
        lo, hi = r * l + 1, min((r + 1) * l, limit)
        if lo > limit:
            break
        if best is not None and math.log(lo) / (r + 1) > best[0] + 1e-12:
            break
        for p in range(lo, hi + 1):
            if is_prime(p) and smallest_l(r, p) == l:
                c = cost_exponent(p, l)
                if best is None or c < best[0] - 1e-12 or (abs(c - best[0]) <= 1e-12 and p < best[1]):
                    best = (c, p, l)
        l += 1
    assert best is not None, "a prime in (r^2+r+1, 2r^2+2r) always qualifies"
    return best[1], best[2]


def extension_degree(p: int, k: int) -> int:
    """t = ceil(log_p(10k)): smallest t with p^t >= 10k."""
    t = 1
    while p**t < 10 * k:
        t += 1
    return t


def ldt_repetitions(p: int, eps: float) -> int:
    return math.ceil(math.log(1 / eps) * (p + 1) / PRODUCT_FLOOR)


def outer_repetitions(delta: float, ldt_eps: float = DEFAULT_LDT_EPS) -> int:
    miss = B_MISS + ldt_eps
    return max(1, math.ceil(math.log(1 / delta) / math.log(1 / miss)))


@dataclass(frozen=True)
class SolverParams:
    r: int
    k: int
    p: int
    l: int
    t: int  # extension degree of F_{p^t}
    t_sub: int  # subspace dimension t' = ceil(k*l/(p-1))
    pad: int  # exponent of the padding variable x_0
    R: int  # tester repetitions
    S: int  # outer repetitions (fresh b each)
    seed: int

    @property
    def degree(self) -> int:
        """Target degree t'(p-1) of the padded black box."""
        return self.t_sub * (self.p - 1)

    def check(self) -> None:
        if not is_prime(self.p):
            raise ValueError(f"p={self.p} is not prime")
        if not in_window(self.r, self.p, self.l):
            raise ValueError(f"(p={self.p}, l={self.l}) violates r*l <= p-1 < (r+1)*l for r={self.r}")
        if self.t != extension_degree(self.p, self.k):
            raise ValueError("t != ceil(log_p 10k)")
        if self.t_sub != -(-self.k * self.l // (self.p - 1)):
            raise ValueError("t' != ceil(k*l/(p-1))")
        if self.pad != self.degree - self.k * self.l or not 0 <= self.pad < self.p - 1:
            raise ValueError("bad padding exponent")
        if self.R < 1 or self.S < 1:
            raise ValueError("repetition counts must be >= 1")

    def to_dict(self) -> dict:
        return asdict(self)


def make_params(
    r: int,
    k: int,
    delta: float = 0.01,
    seed: int = 0,
    *,
    ldt_eps: float = DEFAULT_LDT_EPS,
    force_p: int | None = None,
    force_l: int | None = None,
    force_S: int | None = None,
) -> SolverParams:
    if r < 1 or k < 1:
        raise ValueError("r and k must be >= 1")
    if r > k:
        raise ValueError(f"r={r} exceeds k={k}")
    if not 0 < delta < 1:
        raise ValueError("delta must lie in (0, 1)")
    if not 0 < ldt_eps < 1:
        raise ValueError("ldt_eps must lie in (0, 1)")
    if force_p is None and force_l is None:
        p, l = select_field(r)
    else:
        if force_p is None:
            raise ValueError("--force-l requires --force-p")
        p = force_p
        l = force_l if force_l is not None else smallest_l(r, p)
        if not is_prime(p) or l is None or not in_window(r, p, l):
            raise ValueError(f"forced (p={p}, l={l}) is not a valid window for r={r}")
    t_sub = -(-k * l // (p - 1))
    params = SolverParams(
        r=r,
        k=k,
        p=p,
        l=l,
        t=extension_degree(p, k),
        t_sub=t_sub,
        pad=t_sub * (p - 1) - k * l,
        R=ldt_repetitions(p, ldt_eps),
        S=force_S if force_S is not None else outer_repetitions(delta, ldt_eps),
        seed=seed,
    )
    params.check()
    return params
