"""Truncated parametrizations and the valuations they induce.

The level-i truncation of a branch x = t**k, y = zeta(t) keeps the first i
characteristic levels and rescales t so the parametrization stays
primitive:

    x = t**e_i,   y = (level <= i part of zeta)(t**(e_i/k)).

Pulling a series f(x, y) back along the truncation and taking the t-order
defines the valuation; it is additive on products, superadditive on sums,
and its finite values fill the level-i value semigroup.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import TYPE_CHECKING

from .algebra import BiPoly, PowerChain, UniPoly
from .chardata import Branch
from .semigroup import generators

if TYPE_CHECKING:  # pragma: no cover
    from .implicitize import LiftChain


class Parametrization:
    """One truncation level: xt = t**e, yt the truncated branch.

    Immutable after construction; powers of yt are cached across pullbacks.
    """

    def __init__(self, level: int, xt: UniPoly, yt: UniPoly):
        self.level = level
        self.xt = xt
        self.yt = yt
        (e, c), = xt.terms()
        assert c == 1, "xt must be a monic monomial t**e"
        self.e = e
        self._ypows = PowerChain(yt, UniPoly.one())

    def y_power(self, b: int) -> UniPoly:
        return self._ypows.get(b)

    def pullback(self, f: BiPoly) -> UniPoly:
        """The substitution f(t**e, yt(t)), expanded exactly."""
        by_beta: dict[int, list] = {}
        for (a, b), v in f.terms():
            by_beta.setdefault(b, []).append((a * self.e, v))
        total = UniPoly.zero()
        for b, shifts in sorted(by_beta.items()):
            total = total + UniPoly(shifts) * self._ypows.get(b)
        return total

    def valuation(self, f: BiPoly):
        """Order of the pullback; INFINITY iff the pullback vanishes."""
        return self.pullback(f).order()

    def __repr__(self):
        return f"Parametrization(level={self.level}, x=t^{self.e}, y={self.yt!r})"


def truncation(branch: Branch, i: int) -> Parametrization:
    """Build the level-i truncation of a validated branch."""
    cd = branch.cd
    if not 1 <= i <= cd.s:
        raise IndexError(f"truncation level {i} out of range 1..{cd.s}")
    k, e_i = cd.k, cd.es[i]
    if i < cd.s:
        cutoff = cd.lambdas[i] * k  # keep exponents strictly below k*lambda_{i+1}
        kept = [(m, c) for m, c in branch.terms if m < cutoff]
    else:
        kept = list(branch.terms)
    yt = {}
    for m, c in kept:
        q, r = divmod(m * e_i, k)
        if r:
            raise ArithmeticError(
                f"non-integral exponent {m}*{e_i}/{k} in truncation (corrupt branch)")
        yt[q] = c
    g = e_i
    for q in yt:
        g = gcd(g, q)
    assert g == 1, "truncation lost primitivity (corrupt branch)"
    assert min(yt) == int(cd.lambdas[0] * e_i), "truncation order drifted"
    return Parametrization(level=i, xt=UniPoly.t(e_i), yt=UniPoly(yt))


def valuation(f: BiPoly, p: Parametrization, fast: bool = False):
    """ord of the pullback of f along p; INFINITY iff the pullback is 0.

    The default computes the full pullback: low-order cancellations are the
    whole point of the elimination loop, so correctness beats micro-
    optimization. ``fast`` enables an early-exit scheme that evaluates only
    the minimal candidate coefficient and falls back to the full pullback
    when that coefficient cancels.
    """
    if fast and not f.is_zero:
        y_ord = p.yt.order()
        cand = min(a * p.e + b * y_ord for a, b in f.support())
        coeff = 0
        for (a, b), v in f.terms():
            shift = cand - a * p.e
            if shift >= 0:
                coeff += v * p.y_power(b).coeff(shift)
        if coeff:
            return cand
    return p.valuation(f)


@dataclass(frozen=True)
class TableRow:
    """One certified cell of the valuation table."""

    i: int
    j: int
    value: object            # valuation of f_{i-1} under level j
    expected: int            # gamma_i at level j
    dvalue: object           # valuation of d/dy f_{i-1} under level j
    dexpected: int           # gamma_i at level j minus e_j * lambda_i

    @property
    def ok(self) -> bool:
        return self.value == self.expected and self.dvalue == self.dexpected


@dataclass(frozen=True)
class ValuationTable:
    rows: tuple[TableRow, ...]

    @property
    def ok(self) -> bool:
        return all(r.ok for r in self.rows)

    def row(self, i: int, j: int) -> TableRow:
        for r in self.rows:
            if r.i == i and r.j == j:
                return r
        raise KeyError((i, j))


def valuation_table(chain: "LiftChain", branch: Branch) -> ValuationTable:
    """Check every prediction  val_j(f_{i-1}) = gamma_i^{(j)}  and
    val_j(d/dy f_{i-1}) = gamma_i^{(j)} - e_j*lambda_i  for 1 <= i <= j <= s.

    Cells are independent; they are evaluated in a fixed order so the
    result is deterministic.
    """
    cd = branch.cd
    s = cd.s
    rows = []
    for j in range(1, s + 1):
        p = truncation(branch, j)
        sd = generators(cd, j)
        e_j = cd.es[j]
        for i in range(1, j + 1):
            f_prev = BiPoly.y() if i == 1 else chain.fs[i - 2]
            gamma_ij = sd.gamma[i - 1][0]
            e_lam = Fraction(e_j) * cd.lambdas[i - 1]
            assert e_lam.denominator == 1
            rows.append(TableRow(
                i=i, j=j,
                value=p.valuation(f_prev),
                expected=gamma_ij,
                dvalue=p.valuation(f_prev.partial_y()),
                dexpected=gamma_ij - int(e_lam),
            ))
    return ValuationTable(rows=tuple(rows))
