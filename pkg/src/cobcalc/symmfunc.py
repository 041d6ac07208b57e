"""Symmetric-function engine: monomial symmetric polynomials in the
elementary basis, multiplication structure constants, the coefficients
expressing classes of a negated bundle, and the characteristic-class
assembly (plain and deformed) used by every pushforward computation.

Partitions index everything; a symmetric polynomial in N variables is a
sparse dict mapping exponent tuples (length N) to integers."""

from __future__ import annotations

from functools import lru_cache
from itertools import permutations
from math import comb

from .core_algebra import ZZ, TRING, TEPS, BDomain, TruncatedSeries, b_ring, is_partition
from .fgl import chx_b_image, cha_b_image
from .chow_models import (
    VirtualSplitBundle,
    cm_add,
    cm_convert,
    cm_graded,
    cm_scale,
    chern_total,
)

__all__ = [
    "q_alpha",
    "lambda_coeffs",
    "total_P",
    "total_P_deformed",
    "cf_class",
    "b_image_for",
    "pi_series",
    "VirtualSplitBundle",
]


# ---------------------------------------------------------------------------
# symmetric polynomials in N variables

def msym(alpha, n):
    """Monomial symmetric polynomial m_alpha in n variables (zero if alpha
    has more parts than variables)."""
    alpha = tuple(alpha)
    if len(alpha) > n:
        return {}
    padded = alpha + (0,) * (n - len(alpha))
    return {e: 1 for e in set(permutations(padded))}


def _poly_mul(u, v):
    out = {}
    for e1, c1 in u.items():
        for e2, c2 in v.items():
            e = tuple(a + b for a, b in zip(e1, e2))
            s = out.get(e, 0) + c1 * c2
            if s:
                out[e] = s
            else:
                out.pop(e, None)
    return out


def _conjugate(alpha):
    if not alpha:
        return ()
    return tuple(sum(1 for a in alpha if a >= j) for j in range(1, alpha[0] + 1))


def _to_elementary(poly, n):
    """Symmetric polynomial (exponent dict over n variables) rewritten as a
    dict {partition mu: int} standing for prod_i e_{mu_i}, by leading-term
    elimination."""
    e_single = [None] * (n + 1)
    for k in range(n + 1):
        e_single[k] = msym((1,) * k, n)
    out = {}
    work = dict(poly)
    while work:
        lead = max(work)
        c = work[lead]
        if any(lead[i] < lead[i + 1] for i in range(len(lead) - 1)):
            raise ValueError("polynomial is not symmetric")
        lam = tuple(a for a in lead if a)
        mu = _conjugate(lam)
        if any(k > n for k in mu):
            raise ValueError("leading term needs e_k beyond the variable count")
        prod = {(0,) * n: 1}
        for k in mu:
            prod = _poly_mul(prod, e_single[k])
        for e, v in prod.items():
            s = work.get(e, 0) - c * v
            if s:
                work[e] = s
            else:
                work.pop(e, None)
        out[mu] = out.get(mu, 0) + c
    return {k: v for k, v in out.items() if v}


@lru_cache(maxsize=None)
def q_alpha(alpha, n_vars=None):
    """m_alpha written in elementary symmetric polynomials, as a dict
    {partition mu: int} meaning sum of coeff * prod e_{mu_i}.  Computed at
    two variable counts and compared, so an unstable answer cannot escape."""
    alpha = tuple(alpha)
    if not is_partition(alpha):
        raise ValueError("alpha must be a partition")
    if not alpha:
        return {(): 1}
    n = max(n_vars or 0, sum(alpha))
    a = _to_elementary(msym(alpha, n), n)
    b = _to_elementary(msym(alpha, n + 1), n + 1)
    if a != b:
        raise AssertionError("elementary expansion is not stable in the variable count")
    return a


def _sub_multisets(alpha):
    """Distinct sub-multisets of a partition, each as a sorted tuple."""
    from collections import Counter

    items = sorted(Counter(alpha).items(), reverse=True)
    subs = [()]
    for part, mult in items:
        subs = [s + (part,) * k for s in subs for k in range(mult + 1)]
    return [tuple(sorted(s, reverse=True)) for s in subs]


def _multiset_minus(alpha, gamma):
    rem = list(alpha)
    for g in gamma:
        rem.remove(g)
    return tuple(rem)


@lru_cache(maxsize=None)
def m_product(gamma, beta):
    """Structure constants of m_gamma * m_beta in the monomial basis."""
    if not gamma:
        return {beta: 1}
    if not beta:
        return {gamma: 1}
    n = len(gamma) + len(beta)
    prod = _poly_mul(msym(gamma, n), msym(beta, n))
    out = {}
    for e, c in prod.items():
        mu = tuple(sorted((a for a in e if a), reverse=True))
        rep = mu + (0,) * (n - len(mu))
        if e == rep:
            out[mu] = c
    return out


@lru_cache(maxsize=None)
def lambda_coeffs(alpha):
    """Integers n_beta with  c_alpha(-E) = sum_beta n_beta c_beta(E), from
    the recursion forced by P(E) P(-E) = 1, with products of classes pushed
    back into the class basis through m_product."""
    alpha = tuple(alpha)
    if not is_partition(alpha):
        raise ValueError("alpha must be a partition")
    if not alpha:
        return {(): 1}
    acc = {}
    for gamma in _sub_multisets(alpha):
        if not gamma:
            continue
        delta = _multiset_minus(alpha, gamma)
        for beta, nb in lambda_coeffs(delta).items():
            for mu, g in m_product(gamma, beta).items():
                s = acc.get(mu, 0) - nb * g
                if s:
                    acc[mu] = s
                else:
                    acc.pop(mu, None)
    return acc


# ---------------------------------------------------------------------------
# the multiplicative class P and its deformation

def b_image_for(dom):
    """How the universal coefficients b_i land in a target domain."""
    if isinstance(dom, BDomain):
        return dom.gen
    if dom is TRING:
        return chx_b_image
    if dom is TEPS:
        return cha_b_image
    raise ValueError("no b-coefficient image for domain %s" % dom.name)


def pi_series(dom, order):
    """1 + b_1 y + b_2 y^2 + ... transported into dom, as a univariate
    truncated series in y."""
    img = b_image_for(dom)
    coeffs = {(0,): dom.one()}
    for i in range(1, order):
        coeffs[(i,)] = img(i)
    return TruncatedSeries(dom, ("y",), order, coeffs)


def _pi_of_element(model, dom, img, u):
    """pi evaluated on a nilpotent codim-1 element: 1 + b_1 u + b_2 u^2 + ..."""
    out = model.one(dom)
    p = model.one(ZZ)
    for i in range(1, model.dim + 1):
        p = model.mul(ZZ, p, u)
        if not p:
            break
        bi = img(i)
        out = cm_add(dom, out, cm_scale(dom, cm_convert(dom, p), bi))
    return out


def total_P(E, dom):
    """Product of pi(c_1) over the lines of E, with inverted factors for the
    negative part; trivial summands contribute pi(0) = 1."""
    model = E.model
    img = b_image_for(dom)
    out = model.one(dom)
    for line in E.plus_lines:
        out = model.mul(dom, out, _pi_of_element(model, dom, img, line))
    for line in E.minus_lines:
        f = _pi_of_element(model, dom, img, line)
        out = model.mul(dom, out, model.inverse_unit(dom, f))
    return out


def _ypoly_mul(model, dom, A, B, y_max):
    out = {}
    for ka, ea in A.items():
        for kb, eb in B.items():
            k = ka + kb
            if k > y_max:
                continue
            term = model.mul(dom, ea, eb)
            if not term:
                continue
            out[k] = cm_add(dom, out.get(k, {}), term)
    return {k: v for k, v in out.items() if v}


def _ypoly_inverse(model, dom, A, y_max):
    one = {0: model.one(dom)}
    zero_exp = (0,) * len(model.gens)
    c00 = A.get(0, {}).get(zero_exp, dom.zero())
    if not dom.eq(c00, dom.one()):
        raise ValueError("y-polynomial inverse needs constant term 1")
    M = {k: dict(v) for k, v in A.items()}
    M[0] = dict(M.get(0, {}))
    M[0].pop(zero_exp, None)
    if not M[0]:
        M.pop(0, None)
    acc = one
    term = one
    for _ in range(model.dim + y_max + 1):
        term = _ypoly_mul(model, dom, term, M, y_max)
        term = {k: cm_scale(dom, v, dom.from_int(-1)) for k, v in term.items()}
        if not term:
            break
        for k, v in term.items():
            acc[k] = cm_add(dom, acc.get(k, {}), v)
        acc = {k: v for k, v in acc.items() if v}
    return acc


def _pi_shifted(model, dom, img, u, y_max):
    """pi(u + y) as a y-polynomial: dict {y power: element}."""
    n = model.dim
    powers = [model.one(ZZ)]
    for _ in range(n):
        nxt = model.mul(ZZ, powers[-1], u)
        if not nxt:
            break
        powers.append(nxt)
    out = {}
    for k in range(0, y_max + 1):
        elt = {}
        for d, updeg in enumerate(powers):
            i = k + d
            if i == 0:
                elt = cm_add(dom, elt, model.one(dom))
                continue
            c = comb(i, k)
            bi = img(i)
            elt = cm_add(dom, elt, cm_scale(dom, cm_convert(dom, updeg), dom.int_scale(bi, c)))
        if elt:
            out[k] = elt
    return out


def total_P_deformed(E, dom, y_max):
    """total_P of E with every line root u shifted to u + y (and trivial
    roots to y), as a y-polynomial truncated at y^y_max."""
    model = E.model
    img = b_image_for(dom)
    zero = {}
    out = {0: model.one(dom)}
    for line in E.plus_lines:
        out = _ypoly_mul(model, dom, out, _pi_shifted(model, dom, img, line, y_max), y_max)
    for _ in range(E.plus_trivial):
        out = _ypoly_mul(model, dom, out, _pi_shifted(model, dom, img, zero, y_max), y_max)
    for line in E.minus_lines:
        f = _pi_shifted(model, dom, img, line, y_max)
        out = _ypoly_mul(model, dom, out, _ypoly_inverse(model, dom, f, y_max), y_max)
    for _ in range(E.minus_trivial):
        f = _pi_shifted(model, dom, img, zero, y_max)
        out = _ypoly_mul(model, dom, out, _ypoly_inverse(model, dom, f, y_max), y_max)
    return out


# ---------------------------------------------------------------------------
# the alpha-indexed classes

def cf_class(E, alpha):
    """The alpha class of a virtual split bundle, computed two independent
    ways (coefficient extraction from total_P, and the elementary-basis
    expansion evaluated on Chern classes) and cross-checked."""
    alpha = tuple(alpha)
    if not is_partition(alpha):
        raise ValueError("alpha must be a partition")
    model = E.model
    B = b_ring(ZZ)
    P = total_P(E, B)
    route_a = {}
    for e, coeff in P.items():
        v = coeff.get(alpha)
        if v:
            route_a[e] = v
    ctot = chern_total(model, ZZ, E)
    route_b = {}
    for mu, c in q_alpha(alpha).items():
        term = model.one(ZZ)
        for k in mu:
            term = model.mul(ZZ, term, cm_graded(ctot, k))
            if not term:
                break
        if term:
            route_b = cm_add(ZZ, route_b, cm_scale(ZZ, term, c))
    if route_a != route_b:
        raise AssertionError("class routes disagree for alpha=%r" % (alpha,))
    return route_a
