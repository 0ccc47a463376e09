"""The randomized decision procedure for r-SIMPLE k-PATH.

Per outer iteration: draw b in F_{p^t}^{k x n}, form the padded black box
a_0^pad * P_G(a^l, b) on F_p^{n+1}, and run the low-degree tester with target
degree t'(p-1). Every projection h^i shares the same evaluations: the tester
sums the F_{p^t}-valued box and any nonzero coordinate i certifies h^i.

YES answers carry a certificate that can be replayed exactly; they are never
wrong. NO answers are wrong with probability at most delta.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field

import numpy as np

from .blackbox import EvalContext, random_b
from .field import ExtField
from .graph import Instance
from .ldt import AffineSubspace, LdtConfig, ldt, restricted_sum
from .params import DEFAULT_LDT_EPS, SolverParams, make_params

DEFAULT_EVAL_BUDGET = 1 << 30
SCHEMA = "rspath/1"


class EvalBudgetExceeded(RuntimeError):
    pass


class MalformedCertificate(ValueError):
    pass


def eval_budget_from_env() -> int:
    raw = os.environ.get("RSPATH_EVAL_BUDGET")
    return int(raw) if raw else DEFAULT_EVAL_BUDGET


@dataclass
class Verdict:
    answer: str  # "yes" | "no"
    params: SolverParams
    iterations: int
    evaluations: int
    certificate: dict | None = None
    note: str | None = None
    extra: dict = field(default_factory=dict)

    @property
    def yes(self) -> bool:
        return self.answer == "yes"

    def to_dict(self) -> dict:
        out = {
            "schema": SCHEMA,
            "answer": self.answer,
            "params": self.params.to_dict(),
            "iterations": self.iterations,
            "evaluations": self.evaluations,
            "certificate": self.certificate,
        }
        if self.note:
            out["note"] = self.note
        out.update(self.extra)
        return out


def solve(
    inst: Instance,
    delta: float = 0.01,
    seed: int = 0,
    *,
    ldt_eps: float = DEFAULT_LDT_EPS,
    force_p: int | None = None,
    force_l: int | None = None,
    force_S: int | None = None,
    workers: int = 1,
    eval_budget: int | None = None,
) -> Verdict:
    params = make_params(
        inst.r, inst.k, delta, seed, ldt_eps=ldt_eps, force_p=force_p, force_l=force_l, force_S=force_S
    )
    N = inst.n + 1
    if params.t_sub > N:
        # deg_p of the box is at most N(p-1) < t'(p-1); equivalently k > r*n
        return Verdict("no", params, 0, 0, note="target degree exceeds the number of variables")
    budget = eval_budget_from_env() if eval_budget is None else eval_budget
    if params.p**params.t_sub > budget:
        raise EvalBudgetExceeded(
            f"one subspace sum needs p^t' = {params.p}^{params.t_sub} evaluations, budget is {budget}"
        )
    ext = ExtField(params.p, params.t)
    evaluations = 0
    for s in range(params.S):
        b = random_b(ext, inst.k, inst.n, np.random.default_rng([seed, 0, s]))
        ctx = EvalContext(inst, ext, b, params.l, params.pad)
        cfg = LdtConfig(params.p, params.degree, params.R, seed=(seed, 1, s), workers=workers)
        res = ldt(ctx.eval_box, N, cfg)
        evaluations += res.evaluations
        if res.full_degree:
            i = next(j for j, c in enumerate(res.total) if c) + 1
            cert = {
                "r": inst.r,
                "k": inst.k,
                "p": params.p,
                "l": params.l,
                "t": params.t,
                "t_sub": params.t_sub,
                "pad": params.pad,
                "modulus": list(ext.modulus),
                "b": b.tolist(),
                "projection": i,
                "subspace": res.subspace.to_dict(),
                "sum": res.total[i - 1],
                "iteration": s,
                "repetition": res.repetition,
            }
            return Verdict("yes", params, s + 1, evaluations, cert)
    return Verdict("no", params, params.S, evaluations)


_CERT_KEYS = ("r", "k", "p", "l", "t", "t_sub", "pad", "modulus", "b", "projection", "subspace", "sum")


def verify_certificate(inst: Instance, cert: dict) -> bool:
    """Replay a YES certificate using only its recorded values.

    Raises MalformedCertificate when fields are missing or mis-shaped;
    returns False when the values are well-formed but do not certify.
    """
    if not isinstance(cert, dict) or any(key not in cert for key in _CERT_KEYS):
        raise MalformedCertificate("certificate is missing required fields")
    try:
        r, k, p, l, t, t_sub, pad, i = (int(cert[key]) for key in ("r", "k", "p", "l", "t", "t_sub", "pad", "projection"))
        b = np.asarray(cert["b"], dtype=np.int64)
        base = np.asarray(cert["subspace"]["base"], dtype=np.int64)
        basis = np.asarray(cert["subspace"]["basis"], dtype=np.int64)
        recorded = int(cert["sum"])
    except (TypeError, ValueError, KeyError) as exc:
        raise MalformedCertificate(str(exc)) from exc
    if (r, k) != (inst.r, inst.k):
        return False
    if b.shape != (inst.k, inst.n, t) or base.shape != (inst.n + 1,) or basis.ndim != 2 or basis.shape[1:] != (inst.n + 1,):
        raise MalformedCertificate("certificate arrays have the wrong shape")
    try:
        SolverParams(r, k, p, l, t, t_sub, pad, 1, 1, 0).check()
        ext = ExtField(p, t, tuple(int(c) for c in cert["modulus"]))
        V = AffineSubspace(p, base, basis)
    except ValueError:
        return False
    if V.dim != t_sub or not 1 <= i <= t:
        return False
    ctx = EvalContext(inst, ext, b, l, pad)
    zs = restricted_sum(ctx.h_box(i), V)
    return zs.certified and zs.total == recorded % p
