"""Formal group laws over graded coefficient domains.

A law is a bivariate truncated series F(x, y) with F(x, 0) = x, F(0, y) = y,
symmetric in x and y, associative up to the checked order, and graded: the
coefficient of x^i y^j is homogeneous of degree 1 - i - j.  Construction
verifies all of this, so a FormalGroupLaw instance is trusted downstream.
"""

from __future__ import annotations

from functools import lru_cache

from .core_algebra import ZZ, TRING, TEPS, b_ring, int_mod, TruncatedSeries

# associativity is a trivariate identity; comparing it in full at high order
# is the dominant cost, so it is checked at min(order, this cap)
ASSOC_CHECK_CAP = 9


class FormalGroupLaw:
    __slots__ = ("dom", "order", "series", "_mult_cache", "_inverse")

    def __init__(self, series, check=True):
        if series.vars != ("x", "y"):
            raise ValueError("law series must have variables (x, y)")
        self.dom = series.dom
        self.order = series.order
        self.series = series
        self._mult_cache = {}
        self._inverse = None
        if check:
            self._check_axioms()

    def coefficient(self, i, j):
        return self.series.coefficient((i, j))

    def _check_axioms(self):
        dom = self.dom
        if self.order > 1 and not dom.eq(self.coefficient(1, 0), dom.one()):
            raise ValueError("law fails F(x,0) = x at the linear term")
        for (i, j), c in self.series.coeffs.items():
            if j == 0 and i != 1:
                raise ValueError("law fails F(x,0) = x at x^%d" % i)
            if i == 0 and j != 1:
                raise ValueError("law fails F(0,y) = y at y^%d" % j)
            if not dom.eq(c, self.coefficient(j, i)):
                raise ValueError("law is not commutative at x^%d y^%d" % (i, j))
            if not dom.is_homogeneous(c, 1 - i - j):
                raise ValueError(
                    "coefficient of x^%d y^%d is not homogeneous of degree %d"
                    % (i, j, 1 - i - j)
                )
        A = min(self.order, ASSOC_CHECK_CAP)
        if A >= 3 and not self._assoc_ok(A):
            raise ValueError("law is not associative to order %d" % A)

    def _assoc_ok(self, A):
        dom = self.dom
        vars3 = ("x", "y", "z")
        X = TruncatedSeries.variable(dom, vars3, A, "x")
        Y = TruncatedSeries.variable(dom, vars3, A, "y")
        Z = TruncatedSeries.variable(dom, vars3, A, "z")
        f = self.series.truncate(A) if self.order > A else self.series
        Fxy = f.compose({"x": X, "y": Y})
        Fyz = f.compose({"x": Y, "y": Z})
        lhs = f.compose({"x": Fxy, "y": Z})
        rhs = f.compose({"x": X, "y": Fyz})
        return lhs == rhs

    def add_series(self, u, v):
        """F(u, v) for univariate series u, v with zero constant term."""
        return self.series.compose({"x": u, "y": v})

    def formal_inverse(self):
        """The series m(x) with F(x, m(x)) = 0."""
        if self._inverse is None:
            dom = self.dom
            x = TruncatedSeries.variable(dom, ("x",), self.order, "x")
            mixed = TruncatedSeries(
                dom,
                ("x", "y"),
                self.order,
                {e: c for e, c in self.series.coeffs.items() if e[0] >= 1 and e[1] >= 1},
                _trusted=True,
            )
            m = x.neg()
            for _ in range(self.order - 1):
                nxt = x.add(mixed.compose({"x": x, "y": m})).neg()
                if nxt == m:
                    break
                m = nxt
            if not self.series.compose({"x": x, "y": m}).is_zero():
                raise AssertionError("formal inverse fixed point failed to close")
            self._inverse = m
        return self._inverse

    def formal_mult(self, a):
        """The a-fold formal sum [a](x); [0] = 0, [a] = F([a-1](x), x),
        [-a] = inverse([a])."""
        if a in self._mult_cache:
            return self._mult_cache[a]
        dom = self.dom
        x = TruncatedSeries.variable(dom, ("x",), self.order, "x")
        if a == 0:
            r = TruncatedSeries.zero(dom, ("x",), self.order)
        elif a > 0:
            r = self.series.compose({"x": self.formal_mult(a - 1), "y": x})
        else:
            r = self.formal_inverse().compose({"x": self.formal_mult(-a)})
        self._mult_cache[a] = r
        return r


def formal_inverse(law):
    return law.formal_inverse()


def formal_mult(law, a):
    return law.formal_mult(a)


# ---------------------------------------------------------------------------
# the universal law and its standard specializations

@lru_cache(maxsize=None)
def universal_fgl(order):
    """Universal formal group law over ZZ[b1, b2, ...], built from the
    universal exponential x + b1 x^2 + b2 x^3 + ... and its reversion."""
    B = b_ring(ZZ)
    exp = TruncatedSeries(
        B, ("x",), order, {(i + 1,): B.gen(i) for i in range(order - 1)}
    )
    log = exp.reversion()
    X = TruncatedSeries.variable(B, ("x", "y"), order, "x")
    Y = TruncatedSeries.variable(B, ("x", "y"), order, "y")
    lx = log.compose({"x": X})
    ly = log.compose({"x": Y})
    return FormalGroupLaw(exp.compose({"x": lx.add(ly)}))


def specialize(law, new_dom, coeff_fn):
    """Apply coeff_fn to every coefficient of the law; the result is
    re-validated (including the grading), so an image that breaks the
    degree convention is rejected."""
    return FormalGroupLaw(law.series.map_coefficients(new_dom, coeff_fn))


def additive_fgl(order, dom=ZZ):
    x = TruncatedSeries.variable(dom, ("x", "y"), order, "x")
    y = TruncatedSeries.variable(dom, ("x", "y"), order, "y")
    return FormalGroupLaw(x.add(y))


@lru_cache(maxsize=None)
def chx_fgl(order):
    """Closed-form law (x + y - 2txy) / (1 - t^2 xy) over ZZ[t]."""
    dom = TRING
    X = TruncatedSeries.variable(dom, ("x", "y"), order, "x")
    Y = TruncatedSeries.variable(dom, ("x", "y"), order, "y")
    XY = X.mul(Y)
    num = X.add(Y).add(XY.scale(dom.monomial(1, -2)))
    den = TruncatedSeries.constant(dom, ("x", "y"), order, dom.one()).sub(
        XY.scale(dom.monomial(2, 1))
    )
    return FormalGroupLaw(num.mul(den.inverse()))


@lru_cache(maxsize=None)
def cha_fgl(order):
    """Closed-form law x + y + eps * sum_i t^i ((x+y)^{i+1} - x^{i+1} - y^{i+1})
    over ZZ[t, eps]/eps^2."""
    dom = TEPS
    X = TruncatedSeries.variable(dom, ("x", "y"), order, "x")
    Y = TruncatedSeries.variable(dom, ("x", "y"), order, "y")
    S = X.add(Y)
    F = S
    Sp, Xp, Yp = S.mul(S), X.mul(X), Y.mul(Y)
    for i in range(1, order - 1):
        F = F.add(Sp.sub(Xp).sub(Yp).scale(dom.monomial(i, 1, 1)))
        Sp, Xp, Yp = Sp.mul(S), Xp.mul(X), Yp.mul(Y)
    return FormalGroupLaw(F)


@lru_cache(maxsize=None)
def universal_fgl_mod_p(order, p):
    Bp = b_ring(int_mod(p))

    def conv(c):
        out = {}
        for parts, v in c.items():
            r = v % p
            if r:
                out[parts] = r
        return out

    return specialize(universal_fgl(order), Bp, conv)


# ---------------------------------------------------------------------------
# transport of ZZ[b] elements along b_i |-> (image in another domain)

def b_transport(elt, new_dom, gen_image, base_map=None):
    """Push a BDomain element through b_i |-> gen_image(i).  base_map converts
    the base coefficients (default: new_dom.from_int)."""
    if base_map is None:
        base_map = new_dom.from_int
    out = new_dom.zero()
    for parts, c in elt.items():
        term = base_map(c)
        for i in parts:
            term = new_dom.mul(term, gen_image(i))
        out = new_dom.add(out, term)
    return out


def chx_b_image(i):
    """b_i |-> (-t)^i, the substitution carrying the universal law to chx_fgl."""
    return TRING.monomial(i, (-1) ** i)


def cha_b_image(i):
    """b_i |-> eps * t^i, carrying the universal law to cha_fgl."""
    return TEPS.monomial(i, 1, 1)
