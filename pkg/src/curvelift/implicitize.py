"""The elimination driver: lift defining equations level by level.

Level i starts from g = f_{i-1}**k_i, whose pullback along the level-i
truncation has finite order n. Every surviving order is a value-semigroup
member, so the slice enumeration returns basis tuples
(alpha, beta_0, ..., beta_{i-1}) whose products

    P = x**alpha * y**beta_0 * f_1**beta_1 * ... * f_{i-1}**beta_{i-1}

hit order n exactly; adding a * P with the unique coefficient a that kills
the t**n term strictly raises the order. The loop ends when the pullback
vanishes identically, which the support bound forces after finitely many
steps. The result, normalized monic in y, is the level-i equation f_i; it
is unique up to a scalar, so the choice of slice element (lexicographically
smallest by default) cannot change it.

On the first iteration the tuple (0, ..., 0, k_i) is excluded: it is g
itself. The correction delta_i = f_i - f_{i-1}**k_i never touches the apex
(0, e_i) - any other slice tuple has order above e_i - so f_i stays monic
throughout.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field

from .algebra import INFINITY, BiPoly, Coeff, PowerChain, UniPoly, coeff_div
from .chardata import Branch
from .errors import EmptySliceError, IterationBudgetError, OracleBoundError
from .parametrize import ValuationTable, truncation, valuation_table
from .polygon import SliceQuery, lattice_slice, polygon_contains, polygon_desc
from .semigroup import generators, semigroup_member
from .weierstrass import is_weierstrass

DEFAULT_ORACLE_BOUND = 12


@dataclass(frozen=True)
class IterationRecord:
    """One elimination step: the order killed, the chosen basis tuple and
    the solved coefficient."""

    n: int
    pivot: tuple[int, ...]
    coeff: Coeff


@dataclass(frozen=True)
class LevelCertificate:
    """Per-level checks behind the chain's correctness claims."""

    level: int
    pullback_zero: bool            # the truncation annihilates f_i
    support_in_polygon: bool       # Supp(f_i) inside N_i
    apex_absent_in_delta: bool     # (0, e_i) not in Supp(delta_i)
    compact_face_present: bool     # (0, e_i) and (e_i*lam_1, 0) in Supp(f_i)
    monic_weierstrass: bool        # f_i is Weierstrass of degree e_i
    n_log_increasing: bool         # logged orders strictly increase
    n_log_in_semigroup: bool       # every logged order is a semigroup member
    valuation_rows_ok: bool        # the level-i rows of the valuation table
    oracle: str                    # "match" | "mismatch" | "skipped"

    @property
    def ok(self) -> bool:
        return (self.pullback_zero and self.support_in_polygon
                and self.apex_absent_in_delta and self.compact_face_present
                and self.monic_weierstrass and self.n_log_increasing
                and self.n_log_in_semigroup and self.valuation_rows_ok
                and self.oracle in ("match", "skipped"))


@dataclass(frozen=True)
class LiftChain:
    """The chain f_1, ..., f_s with per-level corrections and evidence."""

    branch: Branch
    fs: tuple[BiPoly, ...]
    deltas: tuple[BiPoly, ...]
    logs: tuple[tuple[IterationRecord, ...], ...]
    certificates: tuple[LevelCertificate, ...] = ()
    table: ValuationTable | None = None

    @property
    def cd(self):
        return self.branch.cd

    @property
    def ok(self) -> bool:
        return bool(self.certificates) and all(c.ok for c in self.certificates) \
            and self.table is not None and self.table.ok


def lift(branch: Branch, fs: tuple[BiPoly, ...], i: int, pivot_rule: str = "min"
         ) -> tuple[BiPoly, BiPoly, tuple[IterationRecord, ...]]:
    """Compute (f_i, delta_i, log) from the already-lifted f_1 .. f_{i-1}.

    ``pivot_rule`` picks the slice element to solve for: "min" the
    lexicographically smallest (default), "max" the largest. The final
    monic f_i does not depend on the rule.
    """
    cd = branch.cd
    if not 1 <= i <= cd.s:
        raise IndexError(f"level {i} out of range 1..{cd.s}")
    if len(fs) < i - 1:
        raise ValueError(f"lift to level {i} needs f_1..f_{i - 1}")
    if pivot_rule not in ("min", "max"):
        raise ValueError(f"unknown pivot rule {pivot_rule!r}")
    k_i = cd.ks[i - 1]
    e_i = cd.es[i]
    p = truncation(branch, i)

    # basis data: f_0 = y, then the previous chain polynomials
    basis: list[BiPoly] = [BiPoly.y()] + [fs[l] for l in range(i - 1)]
    pullbacks = [p.pullback(f) for f in basis]
    bi_pows = [PowerChain(f, BiPoly.one()) for f in basis]
    uni_pows = [PowerChain(u, UniPoly.one()) for u in pullbacks]

    # slice data: sg = pullback orders, ls = pullback degrees of
    # x, f_0, ..., f_{i-1}; the bound encodes the support polygon
    sd = generators(cd, i)
    sg = (sd.free,) + tuple(gam[0] for gam in sd.gamma)
    ls = (p.e,) + tuple(u.degree() for u in pullbacks)
    bound = p.e * pullbacks[0].degree()

    g = bi_pows[-1].get(k_i)
    u = uni_pows[-1].get(k_i)

    budget = bound - p.e * int(p.e * cd.lambdas[0]) + 1
    log: list[IterationRecord] = []
    first = True
    while True:
        n = u.order()
        if n is INFINITY:
            break
        if len(log) >= budget:
            raise IterationBudgetError(
                f"level {i}: more than {budget} iterations; internal error")
        query = SliceQuery(n=n, sg=sg, ls=ls, bound=bound)
        exclude = ((0,) * i + (k_i,)) if first else None
        slab = lattice_slice(query, exclude=exclude)
        if not slab:
            raise EmptySliceError(
                f"level {i}: no basis tuple of order {n}; corrupt input or bug")
        pivot = slab[0] if pivot_rule == "min" else slab[-1]

        alpha, betas = pivot[0], pivot[1:]
        u_p = UniPoly.t(p.e * alpha)
        g_p = BiPoly.x(alpha) if alpha else BiPoly.one()
        for l, b in enumerate(betas):
            if b:
                u_p = u_p * uni_pows[l].get(b)
                g_p = g_p * bi_pows[l].get(b)
        p_n = u_p.coeff(n)
        assert p_n, "basis product must hit order n exactly"
        a = coeff_div(-u.coeff(n), p_n)
        g = g + g_p * a
        u = u + u_p * a
        log.append(IterationRecord(n=n, pivot=pivot, coeff=a))
        first = False

    lead = g.coeff((0, e_i))
    assert lead, "apex coefficient vanished; internal error"
    if lead != 1:
        g = g * coeff_div(1, lead)
    delta = g - bi_pows[-1].get(k_i)
    return g, delta, tuple(log)


def base_equation(branch: Branch) -> BiPoly:
    """The level-1 equation; for a tail-free first level this is exactly
    y**k_1 - c_1**k_1 * x**(k_1*lambda_1)."""
    f1, _, _ = lift(branch, (), 1)
    return f1


def implicitize_all(branch: Branch, verify: bool = True,
                    oracle_bound: int = DEFAULT_ORACLE_BOUND,
                    pivot_rule: str = "min") -> LiftChain:
    """Run the full chain f_1, ..., f_s; f_s is the reported approximation
    of the branch equation, with the same multiplicity and characteristic
    exponents. With ``verify`` the certificates are evaluated eagerly."""
    fs: list[BiPoly] = []
    deltas: list[BiPoly] = []
    logs: list[tuple[IterationRecord, ...]] = []
    for i in range(1, branch.cd.s + 1):
        f_i, delta_i, log = lift(branch, tuple(fs), i, pivot_rule=pivot_rule)
        fs.append(f_i)
        deltas.append(delta_i)
        logs.append(log)
    chain = LiftChain(branch=branch, fs=tuple(fs), deltas=tuple(deltas),
                      logs=tuple(logs))
    if verify:
        chain = certify(chain, oracle_bound=oracle_bound)
    return chain


def certify(chain: LiftChain, oracle_bound: int = DEFAULT_ORACLE_BOUND) -> LiftChain:
    """Evaluate all per-level certificates plus the full valuation table.

    Recomputable from (branch, fs) alone except for the iteration-log
    checks, which are skipped when a level's log is empty.
    """
    from .oracle import resultant_implicitize  # local import: oracle uses parametrize

    branch = chain.branch
    cd = branch.cd
    table = valuation_table(chain, branch)
    certs = []
    for i in range(1, cd.s + 1):
        f_i = chain.fs[i - 1]
        delta_i = chain.deltas[i - 1]
        e_i = cd.es[i]
        p = truncation(branch, i)
        pd = polygon_desc(branch, i)

        ok_w, deg = is_weierstrass(f_i)
        monic = ok_w and deg == e_i
        support_ok = all(polygon_contains(key, pd) for key in f_i.support())
        apex_ok = (0, e_i) not in delta_i.support()
        face_ok = {(0, e_i), (int(e_i * cd.lambdas[0]), 0)} <= f_i.support()
        pull_zero = p.pullback(f_i).is_zero

        log = chain.logs[i - 1] if i - 1 < len(chain.logs) else ()
        ns = [rec.n for rec in log]
        increasing = all(a < b for a, b in zip(ns, ns[1:]))
        sd = generators(cd, i)
        in_semigroup = all(semigroup_member(n, sd) for n in ns)

        rows_ok = all(r.ok for r in table.rows if r.i == i)

        if e_i <= oracle_bound:
            try:
                res = resultant_implicitize(p, bound=oracle_bound)
                oracle = "match" if res.monic == f_i else "mismatch"
            except OracleBoundError:
                oracle = "skipped"
        else:
            oracle = "skipped"

        certs.append(LevelCertificate(
            level=i, pullback_zero=pull_zero, support_in_polygon=support_ok,
            apex_absent_in_delta=apex_ok, compact_face_present=face_ok,
            monic_weierstrass=monic, n_log_increasing=increasing,
            n_log_in_semigroup=in_semigroup, valuation_rows_ok=rows_ok,
            oracle=oracle))
    return LiftChain(branch=branch, fs=chain.fs, deltas=chain.deltas,
                     logs=chain.logs, certificates=tuple(certs), table=table)


def chain_from_polynomials(branch: Branch, fs) -> LiftChain:
    """Rebuild a chain object from externally supplied level polynomials
    (corrections recomputed, no iteration logs); certify() then re-derives
    every log-independent certificate."""
    cd = branch.cd
    fs = tuple(fs)
    if len(fs) != cd.s:
        raise ValueError(f"expected {cd.s} polynomials, got {len(fs)}")
    deltas = []
    prev = BiPoly.y()
    for i, f in enumerate(fs, start=1):
        deltas.append(f - prev ** cd.ks[i - 1])
        prev = f
    return LiftChain(branch=branch, fs=fs, deltas=tuple(deltas), logs=())


@dataclass
class BenchRecord:
    """Wall time and iteration counts of one full chain run."""

    name: str
    k: int
    levels: list[dict] = field(default_factory=list)
    total_seconds: float = 0.0


def bench_chain(branch: Branch, name: str = "") -> tuple[LiftChain, BenchRecord]:
    """Timed, certificate-free chain run for the benchmark command."""
    rec = BenchRecord(name=name, k=branch.k)
    fs: list[BiPoly] = []
    deltas = []
    logs = []
    t_total = time.perf_counter()
    for i in range(1, branch.cd.s + 1):
        t0 = time.perf_counter()
        f_i, delta_i, log = lift(branch, tuple(fs), i)
        dt = time.perf_counter() - t0
        fs.append(f_i)
        deltas.append(delta_i)
        logs.append(log)
        rec.levels.append({
            "level": i,
            "e": branch.cd.es[i],
            "iterations": len(log),
            "terms": len(f_i),
            "seconds": dt,
        })
    rec.total_seconds = time.perf_counter() - t_total
    chain = LiftChain(branch=branch, fs=tuple(fs), deltas=tuple(deltas),
                      logs=tuple(logs))
    return chain, rec
