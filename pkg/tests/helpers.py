"""Shared test helpers: random instance generators and naive oracles.

The oracles here are deliberately dumb (exhaustive loops, cofactor
determinants, DP sieves) and independent of the package's algorithms; the
property suites compare the two.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import product
from math import gcd, prod

from curvelift import BiPoly, BranchInput, UniPoly, validate_branch
from curvelift.polygon import SliceQuery
from curvelift.semigroup import SemigroupDesc


def rand_coeff(rng, small=False):
    num = rng.choice([-3, -2, -1, 1, 2, 3])
    den = 1 if small else rng.choice([1, 1, 2, 3])
    f = Fraction(num, den)
    return f.numerator if f.denominator == 1 else f


def rand_branch(rng, max_levels=3, factors=(2, 3), max_k=12,
                tail_prob=0.5, int_coeffs=False):
    """A random valid branch, built from a random factor chain and random
    exponent/tail choices; always round-trips through validate_branch."""
    while True:
        s = rng.randint(1, max_levels)
        ks = [rng.choice(factors) for _ in range(s)]
        if 2 <= prod(ks) <= max_k:
            break
    k = prod(ks)
    # characteristic exponents: m_i = g_i * t with gcd(t, k_i) = 1
    g = k
    char_exps = []
    m_prev = 0
    for ki in ks:
        g_new = g // ki
        t = m_prev // g_new + 1
        while gcd(t, ki) != 1 or g_new * t <= m_prev:
            t += 1
        t += rng.choice([0, ki, 2 * ki])  # keep coprimality, vary the size
        char_exps.append(g_new * t)
        m_prev = g_new * t
        g = g_new
    terms = {m: rand_coeff(rng, small=int_coeffs) for m in char_exps}
    # tails: multiples of the level lattice stride inside each window
    es = [1]
    for ki in ks:
        es.append(es[-1] * ki)
    for i in range(s):
        stride = k // es[i + 1]
        lo = char_exps[i]
        hi = char_exps[i + 1] if i + 1 < s else char_exps[i] + 3 * stride + k
        cands = [m for m in range(lo + stride, hi, stride)
                 if m % k and m not in terms]
        for m in cands:
            if rng.random() < tail_prob / max(1, len(cands)) * 2:
                terms[m] = rand_coeff(rng, small=int_coeffs)
    return validate_branch(BranchInput.from_terms(k, terms))


def rand_bipoly(rng, max_exp=6, max_terms=5, small=False):
    n = rng.randint(1, max_terms)
    terms = {}
    for _ in range(n):
        key = (rng.randint(0, max_exp), rng.randint(0, max_exp))
        terms[key] = rand_coeff(rng, small=small)
    return BiPoly(terms)


def rand_unipoly(rng, max_exp=8, max_terms=4):
    n = rng.randint(0, max_terms)
    return UniPoly({rng.randint(0, max_exp): rand_coeff(rng) for _ in range(n)})


# ---------------------------------------------------------------------------
# naive oracles
# ---------------------------------------------------------------------------

def naive_det(m: list[list[BiPoly]]) -> BiPoly:
    """Cofactor expansion along the first row; fine up to ~7x7."""
    n = len(m)
    if n == 1:
        return m[0][0]
    total = BiPoly.zero()
    for j in range(n):
        if m[0][j].is_zero:
            continue
        minor = [row[:j] + row[j + 1:] for row in m[1:]]
        term = m[0][j] * naive_det(minor)
        total = total + term if j % 2 == 0 else total - term
    return total


def naive_slice(q: SliceQuery) -> list[tuple[int, ...]]:
    """Nested-loop enumeration bounded coordinatewise by n // weight."""
    ranges = [range(q.n // w + 1) for w in q.sg]
    out = []
    for ve in product(*ranges):
        if sum(c * w for c, w in zip(ve, q.sg)) == q.n and \
                sum(c * l for c, l in zip(ve, q.ls)) <= q.bound:
            out.append(ve)
    return sorted(out)


def brute_semigroup_1d(gens: list[int], limit: int) -> list[bool]:
    """reach[v] == True iff v is a non-negative combination of gens."""
    reach = [False] * (limit + 1)
    reach[0] = True
    for v in range(1, limit + 1):
        for g in gens:
            if g <= v and reach[v - g]:
                reach[v] = True
                break
    return reach


def brute_semigroup_nd(gens: list[tuple[int, ...]], box: tuple[int, ...]) -> set:
    """All non-negative combinations of generator vectors inside the box."""
    reach = {tuple(0 for _ in box)}
    frontier = list(reach)
    while frontier:
        v = frontier.pop()
        for g in gens:
            w = tuple(a + b for a, b in zip(v, g))
            if all(a <= m for a, m in zip(w, box)) and w not in reach:
                reach.add(w)
                frontier.append(w)
    return reach


def brute_capped_forms(a, sd: SemigroupDesc, upto: int | None = None):
    """All (alpha, betas) with capped betas representing a; the normal form
    is unique, so this should have length one for group members."""
    upto = sd.level if upto is None else upto
    vec = a if isinstance(a, tuple) else (a,)
    sols = []
    for betas in product(*[range(kj) for kj in sd.ks[:upto]]):
        r = list(vec)
        for b, gam in zip(betas, sd.gamma):
            r = [x - b * g for x, g in zip(r, gam)]
        if all(x % sd.free == 0 for x in r):
            sols.append((tuple(x // sd.free for x in r), betas))
    return sols
