"""Exact ground truth for small instances.

Bounded-visit DFS for r-simple k-paths, a longest-simple-path search, and a
sparse polynomial engine that expands the path polynomial symbolically and
computes deg_p exactly. Everything here is exponential and budgeted; it
exists to check the randomized solver, not to compete with it.
"""

from __future__ import annotations

from collections import Counter, deque
from dataclasses import dataclass
from math import comb

from .field import ExtField, PrimeField
from .graph import Digraph, Instance

DEFAULT_STATE_BUDGET = 10**8
DEFAULT_MONOMIAL_BUDGET = 10**6


class BudgetExceeded(RuntimeError):
    """The search hit its budget; the answer is unknown."""


@dataclass(frozen=True)
class OracleResult:
    answer: str  # "yes" | "no" | "unknown"
    witness: tuple[int, ...] | None = None
    expanded: int = 0

    @property
    def yes(self) -> bool:
        return self.answer == "yes"


def is_r_simple_path(g: Digraph, walk, r: int, k: int) -> bool:
    """Check a witness: k vertices, consecutive pairs are edges, every count <= r."""
    return len(walk) == k and g.is_path(walk) and max(Counter(walk).values(), default=0) <= r


def _capacity_reachable(g: Digraph, start: int, cap: list[int]) -> int:
    """Total remaining visit capacity over vertices reachable in >= 1 step from
    start, moving only through vertices that still have capacity."""
    seen: set[int] = set()
    dq = deque([start])
    total = 0
    while dq:
        u = dq.popleft()
        for w in g.successors(u):
            if w not in seen and cap[w] > 0:
                seen.add(w)
                total += cap[w]
                dq.append(w)
    return total


def exists_r_simple_path(inst: Instance, budget: int = DEFAULT_STATE_BUDGET) -> OracleResult:
    g, r, k = inst.graph, inst.r, inst.k
    n = g.n
    if n == 0 or k > r * n:
        return OracleResult("no")
    cap = [r] * n
    walk: list[int] = []
    dead: set[tuple[int, bytes]] = set()
    expanded = 0

    def dfs(v: int) -> bool:
        # v has just been appended to walk; cap already decremented
        nonlocal expanded
        remaining = k - len(walk)
        if remaining == 0:
            return True
        key = (v, bytes(cap))
        if key in dead:
            return False
        expanded += 1
        if expanded > budget:
            raise BudgetExceeded
        if _capacity_reachable(g, v, cap) < remaining:
            dead.add(key)
            return False
        for w in sorted(g.successors(v), key=lambda w: (r - cap[w], w)):
            if cap[w] == 0:
                continue
            cap[w] -= 1
            walk.append(w)
            if dfs(w):
                return True
            walk.pop()
            cap[w] += 1
        dead.add(key)
        return False

    try:
        for s in range(n):
            cap[s] -= 1
            walk.append(s)
            if dfs(s):
                return OracleResult("yes", tuple(walk), expanded)
            walk.pop()
            cap[s] += 1
    except BudgetExceeded:
        return OracleResult("unknown", None, expanded)
    return OracleResult("no", None, expanded)


def longest_simple_path(g: Digraph, budget: int = DEFAULT_STATE_BUDGET) -> int:
    """Maximum number of vertices on a simple directed path (0 for the empty graph)."""
    n = g.n
    if n == 0:
        return 0
    best = 1
    expanded = 0
    on_path = [False] * n

    def reach_bound(v: int) -> int:
        seen = {v}
        dq = deque([v])
        while dq:
            u = dq.popleft()
            for w in g.successors(u):
                if w not in seen and not on_path[w]:
                    seen.add(w)
                    dq.append(w)
        return len(seen) - 1

    def dfs(v: int, length: int) -> None:
        nonlocal best, expanded
        expanded += 1
        if expanded > budget:
            raise BudgetExceeded("longest_simple_path budget exceeded")
        best = max(best, length)
        if best == n or length + reach_bound(v) <= best:
            return
        for w in g.successors(v):
            if not on_path[w]:
                on_path[w] = True
                dfs(w, length + 1)
                on_path[w] = False

    for s in range(n):
        on_path[s] = True
        dfs(s, 1)
        on_path[s] = False
        if best == n:
            break
    return best


def iter_walks(g: Digraph, k: int):
    """Every directed k-path (vertex sequence, repeats allowed) in g."""
    if k < 1:
        return
    stack = [(v,) for v in range(g.n - 1, -1, -1)]
    while stack:
        w = stack.pop()
        if len(w) == k:
            yield w
            continue
        for x in reversed(g.successors(w[-1])):
            stack.append(w + (x,))


# --- sparse polynomials modulo x_i^p - x_i ---


def reduce_exponent(e: int, p: int) -> int:
    return e if e < p else (e - 1) % (p - 1) + 1


class SparsePoly:
    """Polynomial as {exponent tuple: nonzero coefficient}, exponents kept < p.

    ``field`` supplies coefficient arithmetic (PrimeField or ExtField); its
    characteristic p drives the reduction x^p = x, so every stored monomial is
    already in the reduced form used by deg_p.
    """

    __slots__ = ("field", "nvars", "terms")

    def __init__(self, field, nvars: int, terms=None):
        self.field = field
        self.nvars = nvars
        self.terms: dict[tuple[int, ...], object] = {}
        for e, c in (terms or {}).items():
            self._accumulate(self._reduce(e), c)

    @property
    def p(self) -> int:
        return self.field.p

    def _reduce(self, e) -> tuple[int, ...]:
        if len(e) != self.nvars:
            raise ValueError("exponent vector length mismatch")
        return tuple(reduce_exponent(x, self.p) for x in e)

    def _accumulate(self, e, c) -> None:
        F = self.field
        s = F.add(self.terms[e], c) if e in self.terms else c
        if F.is_zero(s):
            self.terms.pop(e, None)
        else:
            self.terms[e] = s

    @classmethod
    def monomial(cls, field, exps, coeff=None) -> SparsePoly:
        return cls(field, len(exps), {tuple(exps): field.one if coeff is None else coeff})

    def is_zero(self) -> bool:
        return not self.terms

    def __len__(self) -> int:
        return len(self.terms)

    def __add__(self, other: SparsePoly) -> SparsePoly:
        out = SparsePoly(self.field, self.nvars, self.terms)
        for e, c in other.terms.items():
            out._accumulate(e, c)
        return out

    def __mul__(self, other: SparsePoly) -> SparsePoly:
        F = self.field
        out = SparsePoly(F, self.nvars)
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = self._reduce(tuple(a + b for a, b in zip(e1, e2)))
                out._accumulate(e, F.mul(c1, c2))
        return out

    def map_coeffs(self, fn, field) -> SparsePoly:
        """Apply fn to every coefficient, landing in ``field`` (e.g. a projection T_i)."""
        out = SparsePoly(field, self.nvars)
        for e, c in self.terms.items():
            out._accumulate(e, fn(c))
        return out

    def substitute_power(self, l: int) -> SparsePoly:
        """g(x_1^l, ..., x_n^l). Reduction commutes with this since both act on functions."""
        out = SparsePoly(self.field, self.nvars)
        for e, c in self.terms.items():
            out._accumulate(self._reduce(tuple(x * l for x in e)), c)
        return out

    def prepend_var(self, exponent: int) -> SparsePoly:
        """Multiply by a fresh variable x_0^exponent placed first."""
        out = SparsePoly(self.field, self.nvars + 1)
        for e, c in self.terms.items():
            out._accumulate(out._reduce((exponent,) + e), c)
        return out

    def evaluate(self, point):
        F = self.field
        acc = F.zero
        for e, c in self.terms.items():
            term = c
            for x, d in zip(point, e):
                if d:
                    term = F.mul(term, F.pow(x, d))
            acc = F.add(acc, term)
        return acc

    def degree(self) -> int | None:
        return max((sum(e) for e in self.terms), default=None)


def deg_p_of(poly: SparsePoly) -> int | None:
    """deg_p of a reduced polynomial; None stands for the zero polynomial (-inf)."""
    return poly.degree()


def poly_from_function(values, p: int, nvars: int) -> SparsePoly:
    """Unique reduced polynomial for a function F_p^nvars -> F_p.

    ``values`` is indexed by the point's base-p integer (first coordinate most
    significant). Interpolates with the indicator polynomials
    prod_i (1 - (x_i - a_i)^{p-1}).
    """
    F = PrimeField(p)
    out = SparsePoly(F, nvars)
    # 1 - (x - a)^{p-1} as a univariate coefficient list, per a
    indicators = []
    for a in range(p):
        coeffs = [0] * p
        for j in range(p):
            coeffs[j] = -comb(p - 1, j) * pow(-a, p - 1 - j, p) % p
        coeffs[0] = (coeffs[0] + 1) % p
        indicators.append(coeffs)
    for idx, val in enumerate(values):
        if val % p == 0:
            continue
        digits = []
        x = idx
        for _ in range(nvars):
            x, d = divmod(x, p)
            digits.append(d)
        digits.reverse()
        term = SparsePoly.monomial(F, (0,) * nvars, val % p)
        for i, a in enumerate(digits):
            uni = SparsePoly(
                F, nvars, {tuple(j if v == i else 0 for v in range(nvars)): c for j, c in enumerate(indicators[a]) if c}
            )
            term = term * uni
        out = out + term
    return out


# --- symbolic expansion of the path polynomial ---


def _check_walk_budget(g: Digraph, k: int, budget: int) -> None:
    # number of k-walks = 1^T A^{k-1} 1, cheap to count exactly
    counts = [1] * g.n
    for _ in range(k - 1):
        counts = [sum(counts[w] for w in g.successors(v)) for v in range(g.n)]
    if sum(counts) > budget:
        raise BudgetExceeded(f"{sum(counts)} monomials exceeds budget {budget}")


def y_index(n: int, m: int, i: int) -> int:
    """Variable slot of y_{m,i} (m 1-based position, i 0-based vertex) after the n x-variables."""
    return n + (m - 1) * n + i


def symbolic_PG(inst: Instance, field, b=None, budget: int = DEFAULT_MONOMIAL_BUDGET) -> SparsePoly:
    """Expand sum over k-paths v_1..v_k of prod x_{v_s} * prod y_{s, v_s}.

    Without ``b`` the y's are kept as variables (n + k*n variables, coefficient
    1 per path). With ``b`` (indexable as b[m-1][i]) they are substituted and
    the result is a polynomial in x alone over ``field``.
    """
    g, k, n = inst.graph, inst.k, inst.n
    _check_walk_budget(g, k, budget)
    if b is None:
        out = SparsePoly(field, n + k * n)
        for w in iter_walks(g, k):
            e = [0] * (n + k * n)
            for s, v in enumerate(w, 1):
                e[v] += 1
                e[y_index(n, s, v)] = 1
            out._accumulate(out._reduce(tuple(e)), field.one)
        return out
    out = SparsePoly(field, n)
    for w in iter_walks(g, k):
        e = [0] * n
        c = field.one
        for s, v in enumerate(w):
            e[v] += 1
            c = field.mul(c, b[s][v])
        out._accumulate(out._reduce(tuple(e)), c)
    return out


def symbolic_h(inst: Instance, ext: ExtField, b, i: int, l: int, pad: int) -> SparsePoly:
    """x_0^pad * T_i(P_G(x^l, b)) as a reduced polynomial over F_p in n+1 variables."""
    f = symbolic_PG(inst, ext, b)
    base = PrimeField(ext.p)
    return f.map_coeffs(lambda c: ext.project(c, i), base).substitute_power(l).prepend_var(pad)


def rmonomial_coefficients(inst: Instance, field, b) -> dict[tuple[int, ...], object]:
    """c_M(b) for every r-monomial M of P_G, from unreduced visit counts.

    A zero value for all of them means b fell in the Schwartz-Zippel bad set.
    """
    g, k, r, n = inst.graph, inst.k, inst.r, inst.n
    out: dict[tuple[int, ...], object] = {}
    for w in iter_walks(g, k):
        cnt = [0] * n
        for v in w:
            cnt[v] += 1
        if max(cnt) > r:
            continue
        c = field.one
        for s, v in enumerate(w):
            c = field.mul(c, b[s][v])
        key = tuple(cnt)
        out[key] = field.add(out[key], c) if key in out else c
    return out
