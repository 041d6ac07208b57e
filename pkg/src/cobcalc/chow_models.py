"""Chow rings of products of projective spaces and iterated projective
bundles, with exact intersection products, degrees, bundle pushforwards, and
virtual split vector bundles.

Every generator has codimension 1: hyperplane classes h_i with h_i^{n_i+1}=0
and relative classes xi_k subject to xi^r = -(e_1(x) xi^{r-1} + ... + e_r(x))
for the line roots x_1..x_r of the bundle layer.  Ring elements are sparse
dicts mapping exponent tuples to coefficients in a chosen Domain; reduction
to normal form happens inside multiplication.
"""

from __future__ import annotations

import json

from .core_algebra import ZZ, TruncatedSeries, LaurentSeries, b_ring


# ---------------------------------------------------------------------------
# variety specifications

class VarietySpec:
    """Shape of a variety: multiproj / projbundle / product / disjoint."""

    __slots__ = ("kind", "dims", "base", "lines", "factors", "components")

    def __init__(self, kind, dims=None, base=None, lines=None, factors=None, components=None):
        self.kind = kind
        self.dims = dims
        self.base = base
        self.lines = lines
        self.factors = factors
        self.components = components

    @classmethod
    def multiproj(cls, dims):
        dims = tuple(dims)
        if not all(isinstance(d, int) and d >= 0 for d in dims):
            raise ValueError("multiproj dims must be non-negative integers")
        return cls("multiproj", dims=dims)

    @classmethod
    def point(cls):
        return cls.multiproj(())

    @classmethod
    def projbundle(cls, base, lines):
        lines = tuple(tuple(v) for v in lines)
        if not lines:
            raise ValueError("projbundle needs at least one line")
        for v in lines:
            if not all(isinstance(a, int) for a in v):
                raise ValueError("line vectors must be integer")
        if base.kind == "disjoint":
            raise ValueError("projbundle base must be connected")
        return cls("projbundle", base=base, lines=lines)

    @classmethod
    def product(cls, factors):
        factors = tuple(factors)
        if not factors:
            raise ValueError("product needs at least one factor")
        if any(f.kind == "disjoint" for f in factors):
            raise ValueError("product factors must be connected")
        return cls("product", factors=factors)

    @classmethod
    def disjoint(cls, components):
        components = tuple(components)
        if not components:
            raise ValueError("disjoint union needs at least one component")
        if any(c.kind == "disjoint" for c in components):
            raise ValueError("nested disjoint unions: flatten first")
        d = components[0].dim()
        if any(c.dim() != d for c in components):
            raise ValueError("disjoint components must have equal dimension")
        return cls("disjoint", components=components)

    @classmethod
    def from_json(cls, obj):
        if not isinstance(obj, dict) or "type" not in obj:
            raise ValueError("variety spec must be an object with a 'type' field")
        t = obj["type"]
        if t == "multiproj":
            return cls.multiproj(obj["dims"])
        if t == "projbundle":
            return cls.projbundle(cls.from_json(obj["base"]), obj["lines"])
        if t == "product":
            return cls.product([cls.from_json(f) for f in obj["factors"]])
        if t == "disjoint":
            return cls.disjoint([cls.from_json(c) for c in obj["components"]])
        raise ValueError("unknown variety type %r" % t)

    def to_json(self):
        if self.kind == "multiproj":
            return {"type": "multiproj", "dims": list(self.dims)}
        if self.kind == "projbundle":
            return {"type": "projbundle", "base": self.base.to_json(), "lines": [list(v) for v in self.lines]}
        if self.kind == "product":
            return {"type": "product", "factors": [f.to_json() for f in self.factors]}
        return {"type": "disjoint", "components": [c.to_json() for c in self.components]}

    def dim(self):
        if self.kind == "multiproj":
            return sum(self.dims)
        if self.kind == "projbundle":
            return self.base.dim() + len(self.lines) - 1
        if self.kind == "product":
            return sum(f.dim() for f in self.factors)
        return self.components[0].dim()

    def canonical(self):
        """Flatten products and merge products of projective spaces."""
        if self.kind == "multiproj":
            return self
        if self.kind == "projbundle":
            return VarietySpec.projbundle(self.base.canonical(), self.lines)
        if self.kind == "disjoint":
            return VarietySpec.disjoint([c.canonical() for c in self.components])
        flat = []
        for f in self.factors:
            f = f.canonical()
            if f.kind == "product":
                flat.extend(f.factors)
            else:
                flat.append(f)
        if all(f.kind == "multiproj" for f in flat):
            dims = []
            for f in flat:
                dims.extend(f.dims)
            return VarietySpec.multiproj(dims)
        if len(flat) == 1:
            return flat[0]
        return VarietySpec.product(flat)

    def key(self):
        return json.dumps(self.to_json(), sort_keys=True)

    def __repr__(self):
        return "<spec %s>" % self.key()

    def __eq__(self, other):
        return isinstance(other, VarietySpec) and self.key() == other.key()


# ---------------------------------------------------------------------------
# element helpers (sparse dicts: exponent tuple -> domain element)

def cm_add(dom, u, v):
    out = dict(u)
    for e, c in v.items():
        s = dom.add(out.get(e, dom.zero()), c)
        if dom.is_zero(s):
            out.pop(e, None)
        else:
            out[e] = s
    return out


def cm_scale(dom, u, c):
    if dom.is_zero(c):
        return {}
    out = {}
    for e, v in u.items():
        p = dom.mul(v, c)
        if not dom.is_zero(p):
            out[e] = p
    return out


def cm_convert(dom, u):
    """Int-coefficient element -> dom-coefficient element."""
    out = {}
    for e, c in u.items():
        v = dom.from_int(c)
        if not dom.is_zero(v):
            out[e] = v
    return out


def cm_graded(u, k):
    return {e: c for e, c in u.items() if sum(e) == k}


def _raw_mul_int(u, v):
    """Unreduced product of int-coefficient elements."""
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


def _pad(elt, off, width):
    out = {}
    for e, c in elt.items():
        out[(0,) * off + tuple(e) + (0,) * (width - off - len(e))] = c
    return out


# ---------------------------------------------------------------------------
# virtual split bundles

class VirtualSplitBundle:
    """Formal difference of sums of line bundles (given by their first Chern
    classes, int-coefficient codim-1 elements) and trivial summands.  Equal
    plus/minus trivial ranks cancel on construction."""

    __slots__ = ("model", "plus_lines", "minus_lines", "plus_trivial", "minus_trivial")

    def __init__(self, model, plus_lines=(), minus_lines=(), plus_trivial=0, minus_trivial=0):
        if plus_trivial < 0 or minus_trivial < 0:
            raise ValueError("trivial ranks must be >= 0")
        for line in tuple(plus_lines) + tuple(minus_lines):
            for e, c in line.items():
                if c and sum(e) != 1:
                    raise ValueError("line class must be homogeneous of codimension 1")
        t = min(plus_trivial, minus_trivial)
        self.model = model
        self.plus_lines = tuple(dict(l) for l in plus_lines)
        self.minus_lines = tuple(dict(l) for l in minus_lines)
        self.plus_trivial = plus_trivial - t
        self.minus_trivial = minus_trivial - t

    @property
    def rank(self):
        return (
            len(self.plus_lines)
            + self.plus_trivial
            - len(self.minus_lines)
            - self.minus_trivial
        )

    def is_honest(self):
        return not self.minus_lines and self.minus_trivial == 0

    def neg(self):
        return VirtualSplitBundle(
            self.model, self.minus_lines, self.plus_lines, self.minus_trivial, self.plus_trivial
        )

    def add(self, other):
        if other.model is not self.model:
            raise ValueError("bundle sum needs a common model")
        return VirtualSplitBundle(
            self.model,
            self.plus_lines + other.plus_lines,
            self.minus_lines + other.minus_lines,
            self.plus_trivial + other.plus_trivial,
            self.minus_trivial + other.minus_trivial,
        )

    def add_trivial(self, k=1):
        return VirtualSplitBundle(
            self.model, self.plus_lines, self.minus_lines, self.plus_trivial + k, self.minus_trivial
        )

    def __repr__(self):
        return "<bundle rank %d: +%d lines +%d triv -%d lines -%d triv>" % (
            self.rank,
            len(self.plus_lines),
            self.plus_trivial,
            len(self.minus_lines),
            self.minus_trivial,
        )


# ---------------------------------------------------------------------------
# the models

_model_cache = {}


def build_model(spec):
    """Chow model of a canonicalized spec (cached; disjoint specs get a thin
    wrapper holding one model per component)."""
    spec = spec.canonical()
    key = spec.key()
    if key not in _model_cache:
        if spec.kind == "disjoint":
            _model_cache[key] = DisjointModel(spec)
        else:
            _model_cache[key] = ChowModel(spec)
    return _model_cache[key]


class DisjointModel:
    __slots__ = ("spec", "components", "dim")

    def __init__(self, spec):
        self.spec = spec
        self.components = tuple(build_model(c) for c in spec.components)
        self.dim = spec.dim()


class ChowModel:
    __slots__ = (
        "spec",
        "gens",
        "caps",
        "xi",
        "dim",
        "base_model",
        "bundle_lines",
        "_bounds",
        "_reduce_cache",
        "_basis_cache",
        "_tangent",
        "_top_checked",
    )

    def __init__(self, spec):
        if spec.kind == "disjoint":
            raise ValueError("disjoint spec has per-component models")
        self.spec = spec
        self.base_model = None
        self.bundle_lines = None
        if spec.kind == "multiproj":
            self.gens = tuple("h%d" % i for i in range(len(spec.dims)))
            self.caps = {i: spec.dims[i] for i in range(len(spec.dims))}
            self.xi = {}
            self.dim = sum(spec.dims)
        elif spec.kind == "product":
            parts = [build_model(f) for f in spec.factors]
            gens = []
            caps = {}
            xi = {}
            off = 0
            for k, pm in enumerate(parts):
                gens.extend("f%d_%s" % (k, g) for g in pm.gens)
                for i, cap in pm.caps.items():
                    caps[off + i] = cap
                off += len(pm.gens)
            width = off
            off = 0
            for pm in parts:
                for i, (r, rule) in pm.xi.items():
                    xi[off + i] = (r, _pad(rule, off, width))
                off += len(pm.gens)
            self.gens = tuple(gens)
            self.caps = caps
            self.xi = xi
            self.dim = sum(pm.dim for pm in parts)
        elif spec.kind == "projbundle":
            base = build_model(spec.base)
            r = len(spec.lines)
            if any(len(v) != len(base.gens) for v in spec.lines):
                raise ValueError(
                    "line vectors must have one entry per base generator (%d)" % len(base.gens)
                )
            self.base_model = base
            nb = len(base.gens)
            self.gens = base.gens + ("xi%d" % len(base.xi),)
            self.caps = dict(base.caps)
            width = nb + 1
            # roots as base elements, then the defining relation for xi^r
            lines = []
            for v in spec.lines:
                elt = {}
                for i, a in enumerate(v):
                    if a:
                        e = [0] * nb
                        e[i] = 1
                        elt[tuple(e)] = a
                lines.append(elt)
            self.bundle_lines = tuple(lines)
            # e_i of the roots via prod (1 + x_j z), unreduced
            e_polys = [{(0,) * nb: 1}]
            for x in lines:
                nxt = [dict(e_polys[0])]
                for i in range(1, len(e_polys) + 1):
                    prev = e_polys[i] if i < len(e_polys) else {}
                    term = _raw_mul_int(e_polys[i - 1], x)
                    acc = dict(prev)
                    for e, c in term.items():
                        s = acc.get(e, 0) + c
                        if s:
                            acc[e] = s
                        else:
                            acc.pop(e, None)
                    nxt.append(acc)
                e_polys = nxt
            rule = {}
            for i in range(1, r + 1):
                for e, c in e_polys[i].items():
                    ee = tuple(e) + (r - i,)
                    s = rule.get(ee, 0) - c
                    if s:
                        rule[ee] = s
                    else:
                        rule.pop(ee, None)
            self.xi = {off: (rr, _pad(rl, 0, width)) for off, (rr, rl) in base.xi.items()}
            self.xi[nb] = (r, rule)
            self.dim = base.dim + r - 1
        else:
            raise ValueError("unknown spec kind %r" % spec.kind)
        bounds = []
        for i in range(len(self.gens)):
            if i in self.caps:
                bounds.append(self.caps[i])
            else:
                bounds.append(self.xi[i][0] - 1)
        self._bounds = tuple(bounds)
        self._reduce_cache = {}
        self._basis_cache = {}
        self._tangent = None
        self._top_checked = False
        assert sum(self._bounds) == self.dim

    # -- ring structure ----------------------------------------------------
    def zero(self):
        return {}

    def one(self, dom=ZZ):
        return {(0,) * len(self.gens): dom.one()}

    def gen_element(self, i, dom=ZZ):
        e = [0] * len(self.gens)
        e[i] = 1
        return {tuple(e): dom.one()}

    def reduce(self, exp):
        """Normal form of a monomial as a dict {normal exponent: int}."""
        hit = self._reduce_cache.get(exp)
        if hit is not None:
            return hit
        for i, cap in self.caps.items():
            if exp[i] > cap:
                self._reduce_cache[exp] = {}
                return {}
        for idx in sorted(self.xi, reverse=True):
            r, rule = self.xi[idx]
            if exp[idx] >= r:
                rest = list(exp)
                rest[idx] -= r
                rest = tuple(rest)
                out = {}
                for me, mc in rule.items():
                    sub = self.reduce(tuple(a + b for a, b in zip(rest, me)))
                    for e2, k2 in sub.items():
                        s = out.get(e2, 0) + mc * k2
                        if s:
                            out[e2] = s
                        else:
                            out.pop(e2, None)
                self._reduce_cache[exp] = out
                return out
        self._reduce_cache[exp] = {exp: 1}
        return {exp: 1}

    def normalize(self, dom, u):
        out = {}
        for e, c in u.items():
            if dom.is_zero(c):
                continue
            for e2, k in self.reduce(tuple(e)).items():
                s = dom.add(out.get(e2, dom.zero()), dom.int_scale(c, k))
                if dom.is_zero(s):
                    out.pop(e2, None)
                else:
                    out[e2] = s
        return out

    def mul(self, dom, u, v):
        out = {}
        for e1, c1 in u.items():
            for e2, c2 in v.items():
                p = dom.mul(c1, c2)
                if dom.is_zero(p):
                    continue
                for e, k in self.reduce(tuple(a + b for a, b in zip(e1, e2))).items():
                    s = dom.add(out.get(e, dom.zero()), dom.int_scale(p, k))
                    if dom.is_zero(s):
                        out.pop(e, None)
                    else:
                        out[e] = s
        return out

    def inverse_unit(self, dom, u):
        """Inverse of 1 + (positive-codimension part) by geometric series."""
        one = self.one(dom)
        zero_exp = (0,) * len(self.gens)
        c0 = u.get(zero_exp, dom.zero())
        if not dom.eq(c0, dom.one()):
            raise ValueError("inverse_unit needs constant term 1")
        nu = dict(u)
        nu.pop(zero_exp, None)
        acc = one
        term = one
        for _ in range(self.dim + 1):
            term = cm_scale(dom, self.mul(dom, term, nu), dom.from_int(-1))
            if not term:
                break
            acc = cm_add(dom, acc, term)
        return acc

    def basis(self, codim):
        """Normal-form monomials of the given codimension, with a generating
        function cross-check on the count."""
        if codim in self._basis_cache:
            return self._basis_cache[codim]
        bounds = self._bounds
        out = []

        def rec(i, left, acc):
            if i == len(bounds):
                if left == 0:
                    out.append(tuple(acc))
                return
            lo = max(0, left - sum(bounds[i + 1:]))
            for e in range(min(bounds[i], left), lo - 1, -1):
                acc.append(e)
                rec(i + 1, left - e, acc)
                acc.pop()

        rec(0, codim, [])
        gf = [1]
        for b in bounds:
            nxt = [0] * (len(gf) + b)
            for i, c in enumerate(gf):
                for j in range(b + 1):
                    nxt[i + j] += c
            gf = nxt
        want = gf[codim] if 0 <= codim < len(gf) else 0
        if len(out) != want:
            raise AssertionError("basis enumeration disagrees with rank count")
        out.sort()
        self._basis_cache[codim] = out
        return out

    def degree(self, dom, u):
        """Coefficient of the point class: the unique top-codimension normal
        monomial."""
        top = self._bounds
        if not self._top_checked:
            if self.basis(self.dim) != [top]:
                raise AssertionError("top graded piece is not one-dimensional")
            self._top_checked = True
        u = self.normalize(dom, u)
        return u.get(top, dom.zero())

    def lift_from_base(self, elt):
        """Embed a base-model element into this projbundle model."""
        if self.base_model is None:
            raise ValueError("not a projbundle model")
        return _pad(elt, 0, len(self.gens))

    # -- tangent bundles ----------------------------------------------------
    def tangent(self):
        if self._tangent is not None:
            return self._tangent
        spec = self.spec
        if spec.kind == "multiproj":
            plus = []
            for i, n in enumerate(spec.dims):
                plus.extend([self.gen_element(i)] * (n + 1))
            E = VirtualSplitBundle(self, plus, (), 0, len(spec.dims))
        elif spec.kind == "product":
            plus, minus = [], []
            pt, mt = 0, 0
            off = 0
            width = len(self.gens)
            for f in spec.factors:
                fm = build_model(f)
                ft = fm.tangent()
                plus.extend(_pad(l, off, width) for l in ft.plus_lines)
                minus.extend(_pad(l, off, width) for l in ft.minus_lines)
                pt += ft.plus_trivial
                mt += ft.minus_trivial
                off += len(fm.gens)
            E = VirtualSplitBundle(self, plus, minus, pt, mt)
        else:  # projbundle
            base = self.base_model
            bt = base.tangent()
            width = len(self.gens)
            xi = self.gen_element(len(self.gens) - 1)
            plus = [_pad(l, 0, width) for l in bt.plus_lines]
            minus = [_pad(l, 0, width) for l in bt.minus_lines]
            for x in self.bundle_lines:
                plus.append(cm_add(ZZ, _pad(x, 0, width), xi))
            E = VirtualSplitBundle(self, plus, minus, bt.plus_trivial, bt.minus_trivial + 1)
        self._tangent = E
        return E


def tangent_bundle(spec):
    model = build_model(spec)
    if isinstance(model, DisjointModel):
        raise ValueError("tangent bundle of a disjoint union: take components")
    return model.tangent()


# ---------------------------------------------------------------------------
# characteristic classes and pushforwards

def chern_total(model, dom, E):
    """Total Chern class of a virtual split bundle."""
    if E.model is not model:
        raise ValueError("bundle lives on a different model")
    out = model.one(dom)
    for line in E.plus_lines:
        out = model.mul(dom, out, cm_add(dom, model.one(dom), cm_convert(dom, line)))
    for line in E.minus_lines:
        f = cm_add(dom, model.one(dom), cm_convert(dom, line))
        out = model.mul(dom, out, model.inverse_unit(dom, f))
    return out


def chern_class(model, dom, E, k):
    return cm_graded(chern_total(model, dom, E), k)


def degree(model, u, dom=ZZ):
    return model.degree(dom, u)


def pushforward_projbundle(model, u, dom=ZZ):
    """Pushforward along p: P(V) -> S on raw elements: xi^j beta |->
    c_{j+1-r}(-V) beta, zero for j < r-1.  Returns (base_model, element)."""
    if model.base_model is None:
        raise ValueError("pushforward needs a projbundle model")
    base = model.base_model
    r = model.xi[len(base.gens)][0]
    minus_v = VirtualSplitBundle(base, (), model.bundle_lines, 0, 0)
    cneg = chern_total(base, dom, minus_v)
    out = {}
    for e, c in u.items():
        j = e[-1]
        if j < r - 1:
            continue
        k = j + 1 - r
        ck = cm_graded(cneg, k)
        if not ck:
            continue
        out = cm_add(dom, out, base.mul(dom, {tuple(e[:-1]): c}, ck))
    return base, out


def quillen_pushforward(S, V, m, dom):
    """Degree of the m-th power of the relative hyperplane class of
    P(V + nothing) over S, pushed all the way to the point: computed on S by
    a residue formula, so P(V) itself is never built.

    S may be a spec or a model; V must be an honest bundle on it."""
    from . import symmfunc as sf

    model = build_model(S) if isinstance(S, VarietySpec) else S
    if isinstance(model, DisjointModel):
        raise ValueError("push each component of a disjoint union separately")
    if V.model is not model:
        raise ValueError("bundle lives on a different model")
    if not V.is_honest():
        raise ValueError("quillen_pushforward needs an honest bundle")
    if m < 0:
        raise ValueError("m must be >= 0")
    r = V.rank
    if r < 1:
        raise ValueError("bundle rank must be >= 1")
    ns = model.dim
    order = r + ns
    pi = sf.pi_series(dom, order)
    y = TruncatedSeries.variable(dom, ("y",), order, "y")
    pi_m = TruncatedSeries.constant(dom, ("y",), order, dom.one())
    for _ in range(m):
        pi_m = pi_m.mul(pi)
    p_tan = sf.total_P(model.tangent().neg(), dom)
    p_vy = sf.total_P_deformed(V.neg(), dom, order - 1)
    prod_y = {k: model.mul(dom, elt, p_tan) for k, elt in p_vy.items()}
    cneg = chern_total(model, dom, V.neg())
    total = dom.zero()
    for i in range(ns + 1):
        ci = cm_graded(cneg, i)
        if not ci:
            continue
        d_coeffs = {}
        for k, elt in prod_y.items():
            v = model.degree(dom, model.mul(dom, ci, elt))
            if not dom.is_zero(v):
                d_coeffs[(k,)] = v
        di = TruncatedSeries(dom, ("y",), order, d_coeffs)
        lau = LaurentSeries(m - r - i, pi_m.mul(di))
        total = dom.add(total, lau.residue())
    expected = m - (ns + r - 1)
    if not dom.is_homogeneous(total, expected):
        raise AssertionError("pushforward value is not homogeneous of degree %d" % expected)
    return total


# ---------------------------------------------------------------------------
# numerical invariants and fundamental classes

def euler_number(spec):
    """Degree of the top Chern class of the tangent bundle."""
    spec = spec.canonical()
    if spec.kind == "disjoint":
        return sum(euler_number(c) for c in spec.components)
    model = build_model(spec)
    return model.degree(ZZ, chern_class(model, ZZ, model.tangent(), model.dim))


def chern_number(spec, alpha):
    """The alpha-indexed Chern number: the degree of the alpha class of the
    negated tangent bundle (zero unless the weight of alpha equals dim)."""
    from . import symmfunc as sf

    spec = spec.canonical()
    alpha = tuple(alpha)
    if spec.kind == "disjoint":
        return sum(chern_number(c, alpha) for c in spec.components)
    model = build_model(spec)
    cls = sf.cf_class(model.tangent().neg(), alpha)
    return model.degree(ZZ, cls)


def additive_chern_number(spec):
    """Chern number of the single-row partition (dim,); Euler number in
    dimension zero."""
    n = spec.dim()
    if n == 0:
        return euler_number(spec)
    return chern_number(spec, (n,))


def fundamental_class(spec, theory="L", p=None):
    """Class of the variety in the chosen theory:
      L    -- sum of all weight-n Chern numbers times their b-monomials,
      L_p  -- the same reduced mod p,
      CHX  -- euler number times t^n,
      CHA  -- additive Chern number times eps t^n (euler number for n = 0).
    """
    from . import symmfunc as sf
    from .core_algebra import TRING, TEPS, int_mod

    spec = spec.canonical()
    n = spec.dim()
    if theory == "L":
        B = b_ring(ZZ)
        if spec.kind == "disjoint":
            out = B.zero()
            for c in spec.components:
                out = B.add(out, fundamental_class(c, "L"))
            return out
        model = build_model(spec)
        return model.degree(B, sf.total_P(model.tangent().neg(), B))
    if theory == "L_p":
        if p is None or p < 2:
            raise ValueError("theory L_p needs a prime p")
        Bp = b_ring(int_mod(p))
        cls = fundamental_class(spec, "L")
        out = {}
        for parts, v in cls.items():
            r = v % p
            if r:
                out[parts] = r
        return out
    if theory == "CHX":
        return TRING.monomial(n, euler_number(spec))
    if theory == "CHA":
        if n == 0:
            return TEPS.from_int(euler_number(spec))
        return TEPS.monomial(n, 1, additive_chern_number(spec))
    raise ValueError("unknown theory %r" % theory)
