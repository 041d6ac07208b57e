"""Exact arithmetic kernel: graded coefficient domains, truncated multivariate
power series, Laurent series in one distinguished variable, and integer-lattice
linear algebra (row Hermite normal form).

Elements of a domain are plain Python values (ints, pairs, dicts); the domain
object supplies the ring operations.  Everything is immutable by convention and
exact (arbitrary-precision integers throughout; the only denominators allowed
anywhere are powers of two, in ZHALF).
"""

from __future__ import annotations

from functools import lru_cache


# ---------------------------------------------------------------------------
# partitions

@lru_cache(maxsize=None)
def partitions(n):
    """All partitions of n as weakly decreasing tuples of positive ints."""
    if n < 0:
        return ()
    if n == 0:
        return ((),)
    out = []

    def rec(rem, cap, acc):
        if rem == 0:
            out.append(tuple(acc))
            return
        for k in range(min(rem, cap), 0, -1):
            acc.append(k)
            rec(rem - k, k, acc)
            acc.pop()

    rec(n, n, [])
    return tuple(out)


def is_partition(t):
    return all(isinstance(a, int) and a > 0 for a in t) and all(
        t[i] >= t[i + 1] for i in range(len(t) - 1)
    )


@lru_cache(maxsize=None)
def merge_partitions(p, q):
    return tuple(sorted(p + q, reverse=True))


# ---------------------------------------------------------------------------
# coefficient domains

class Domain:
    """Base of all coefficient domains.  Subclasses define zero/one/from_int,
    add/neg/mul, is_zero, is_unit/inv, degrees and the monomial serialization
    used by the CLI."""

    name = "?"

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def int_scale(self, a, k):
        return self.mul(a, self.from_int(k))

    def eq(self, a, b):
        return self.is_zero(self.sub(a, b))

    def sum(self, items):
        acc = self.zero()
        for a in items:
            acc = self.add(acc, a)
        return acc

    def prod(self, items):
        acc = self.one()
        for a in items:
            acc = self.mul(acc, a)
        return acc

    def degrees(self, a):
        """Set of graded degrees of the monomials present in a."""
        raise NotImplementedError

    def graded_part(self, a, d):
        raise NotImplementedError

    def is_homogeneous(self, a, d):
        degs = self.degrees(a)
        return degs <= {d}

    def monomials(self, a):
        """Serialize to a sorted list of {"b","t","eps","coeff"} dicts."""
        raise NotImplementedError

    def from_monomials(self, items):
        raise NotImplementedError

    def fmt(self, a):
        """Human-readable rendering, deterministic."""
        items = self.monomials(a)
        if not items:
            return "0"
        chunks = []
        for it in items:
            factors = []
            seen = {}
            for part in it["b"]:
                seen[part] = seen.get(part, 0) + 1
            for part in sorted(seen, reverse=True):
                e = seen[part]
                factors.append("b%d" % part + ("^%d" % e if e > 1 else ""))
            if it["t"]:
                factors.append("t" + ("^%d" % it["t"] if it["t"] > 1 else ""))
            if it["eps"]:
                factors.append("eps")
            c = it["coeff"]
            neg = c.startswith("-")
            mag = c[1:] if neg else c
            if factors and mag == "1":
                body = "*".join(factors)
            else:
                body = "*".join([mag] + factors) if factors else mag
            chunks.append(("- " if neg else "+ ") + body)
        s = " ".join(chunks)
        return s[2:] if s.startswith("+ ") else "-" + s[2:]


def _mono_key(it):
    return (sum(it["b"]) + it["t"], it["t"], it["eps"], it["b"])


class IntDomain(Domain):
    name = "ZZ"

    def zero(self):
        return 0

    def one(self):
        return 1

    def from_int(self, n):
        return n

    def add(self, a, b):
        return a + b

    def neg(self, a):
        return -a

    def mul(self, a, b):
        return a * b

    def is_zero(self, a):
        return a == 0

    def is_unit(self, a):
        return a in (1, -1)

    def inv(self, a):
        if a in (1, -1):
            return a
        raise ValueError("not a unit in ZZ: %r" % (a,))

    def degrees(self, a):
        return frozenset() if a == 0 else frozenset({0})

    def graded_part(self, a, d):
        return a if d == 0 else 0

    def coeff_str(self, a):
        return str(a)

    def coeff_parse(self, s):
        return int(s)

    def monomials(self, a):
        if a == 0:
            return []
        return [{"b": [], "t": 0, "eps": 0, "coeff": str(a)}]

    def from_monomials(self, items):
        acc = 0
        for it in items:
            if it["b"] or it["t"] or it["eps"]:
                raise ValueError("non-scalar monomial for ZZ")
            acc += int(it["coeff"])
        return acc


class IntModDomain(Domain):
    def __init__(self, m):
        if m < 2:
            raise ValueError("modulus must be >= 2")
        self.m = m
        self.name = "ZZ/%d" % m

    def zero(self):
        return 0

    def one(self):
        return 1 % self.m

    def from_int(self, n):
        return n % self.m

    def add(self, a, b):
        return (a + b) % self.m

    def neg(self, a):
        return (-a) % self.m

    def mul(self, a, b):
        return (a * b) % self.m

    def is_zero(self, a):
        return a % self.m == 0

    def is_unit(self, a):
        from math import gcd
        return gcd(a, self.m) == 1

    def inv(self, a):
        if not self.is_unit(a):
            raise ValueError("not a unit mod %d: %r" % (self.m, a))
        return pow(a, -1, self.m)

    def degrees(self, a):
        return frozenset() if self.is_zero(a) else frozenset({0})

    def graded_part(self, a, d):
        return a if d == 0 else 0

    def coeff_str(self, a):
        return str(a % self.m)

    def coeff_parse(self, s):
        return int(s) % self.m

    def monomials(self, a):
        if self.is_zero(a):
            return []
        return [{"b": [], "t": 0, "eps": 0, "coeff": str(a % self.m)}]

    def from_monomials(self, items):
        acc = 0
        for it in items:
            if it["b"] or it["t"] or it["eps"]:
                raise ValueError("non-scalar monomial for %s" % self.name)
            acc = (acc + int(it["coeff"])) % self.m
        return acc


def _half_norm(n, e):
    if n == 0:
        return (0, 0)
    while e > 0 and n % 2 == 0:
        n //= 2
        e -= 1
    return (n, e)


class HalfDomain(Domain):
    """The ring of integers with powers of two inverted; elements are pairs
    (num, e) meaning num / 2**e, normalized so e == 0 or num is odd."""

    name = "ZHALF"

    def zero(self):
        return (0, 0)

    def one(self):
        return (1, 0)

    def from_int(self, n):
        return (n, 0)

    def add(self, a, b):
        (n1, e1), (n2, e2) = a, b
        e = max(e1, e2)
        return _half_norm(n1 * (1 << (e - e1)) + n2 * (1 << (e - e2)), e)

    def neg(self, a):
        return (-a[0], a[1])

    def mul(self, a, b):
        return _half_norm(a[0] * b[0], a[1] + b[1])

    def is_zero(self, a):
        return a[0] == 0

    def is_unit(self, a):
        n = abs(a[0])
        return n != 0 and (n & (n - 1)) == 0

    def inv(self, a):
        if not self.is_unit(a):
            raise ValueError("not a unit in ZHALF: %r" % (a,))
        n, e = a
        sign = 1 if n > 0 else -1
        j = abs(n).bit_length() - 1
        return _half_norm(sign * (1 << e), j)

    def is_integral(self, a):
        return a[1] == 0

    def degrees(self, a):
        return frozenset() if a[0] == 0 else frozenset({0})

    def graded_part(self, a, d):
        return a if d == 0 else (0, 0)

    def coeff_str(self, a):
        n, e = a
        return str(n) if e == 0 else "%d/2^%d" % (n, e)

    def coeff_parse(self, s):
        if "/2^" in s:
            n, e = s.split("/2^")
            return _half_norm(int(n), int(e))
        return (int(s), 0)

    def monomials(self, a):
        if a[0] == 0:
            return []
        return [{"b": [], "t": 0, "eps": 0, "coeff": self.coeff_str(a)}]

    def from_monomials(self, items):
        acc = self.zero()
        for it in items:
            if it["b"] or it["t"] or it["eps"]:
                raise ValueError("non-scalar monomial for ZHALF")
            acc = self.add(acc, self.coeff_parse(it["coeff"]))
        return acc


class BDomain(Domain):
    """Polynomial ring over `base` in countably many generators b_1, b_2, ...
    with b_i of graded degree -i.  Elements are dicts {partition: base elt};
    the monomial for partition (3,1,1) is b3*b1^2."""

    def __init__(self, base):
        self.base = base
        self.name = "B(%s)" % base.name

    def zero(self):
        return {}

    def one(self):
        return {(): self.base.one()}

    def from_int(self, n):
        c = self.base.from_int(n)
        return {} if self.base.is_zero(c) else {(): c}

    def gen(self, i):
        if i == 0:
            return self.one()
        return {(i,): self.base.one()}

    def monomial(self, parts, coeff):
        return {} if self.base.is_zero(coeff) else {tuple(parts): coeff}

    def add(self, a, b):
        out = dict(a)
        for k, v in b.items():
            s = self.base.add(out.get(k, self.base.zero()), v)
            if self.base.is_zero(s):
                out.pop(k, None)
            else:
                out[k] = s
        return out

    def neg(self, a):
        return {k: self.base.neg(v) for k, v in a.items()}

    def mul(self, a, b):
        if len(a) > len(b):
            a, b = b, a
        out = {}
        bz = self.base
        for k1, v1 in a.items():
            for k2, v2 in b.items():
                k = merge_partitions(k1, k2)
                p = bz.mul(v1, v2)
                s = bz.add(out.get(k, bz.zero()), p)
                if bz.is_zero(s):
                    out.pop(k, None)
                else:
                    out[k] = s
        return out

    def is_zero(self, a):
        return not a

    def is_unit(self, a):
        return set(a) == {()} and self.base.is_unit(a[()])

    def inv(self, a):
        if not self.is_unit(a):
            raise ValueError("not a unit in %s: %r" % (self.name, a))
        return {(): self.base.inv(a[()])}

    def degrees(self, a):
        return frozenset(-sum(k) for k in a)

    def graded_part(self, a, d):
        return {k: v for k, v in a.items() if -sum(k) == d}

    def coefficient(self, a, parts):
        return a.get(tuple(parts), self.base.zero())

    def monomials(self, a):
        items = [
            {"b": list(k), "t": 0, "eps": 0, "coeff": self.base.coeff_str(v)}
            for k, v in a.items()
        ]
        items.sort(key=_mono_key)
        return items

    def from_monomials(self, items):
        acc = self.zero()
        for it in items:
            if it["t"] or it["eps"]:
                raise ValueError("t/eps monomial for %s" % self.name)
            acc = self.add(
                acc, self.monomial(tuple(it["b"]), self.base.coeff_parse(it["coeff"]))
            )
        return acc


class TDomain(Domain):
    """ZZ[t] with t of graded degree -1; elements {exponent: int}."""

    name = "T"

    def zero(self):
        return {}

    def one(self):
        return {0: 1}

    def from_int(self, n):
        return {} if n == 0 else {0: n}

    def monomial(self, k, c):
        return {} if c == 0 else {k: c}

    def add(self, a, b):
        out = dict(a)
        for k, v in b.items():
            s = out.get(k, 0) + v
            if s:
                out[k] = s
            else:
                out.pop(k, None)
        return out

    def neg(self, a):
        return {k: -v for k, v in a.items()}

    def mul(self, a, b):
        out = {}
        for k1, v1 in a.items():
            for k2, v2 in b.items():
                k = k1 + k2
                s = out.get(k, 0) + v1 * v2
                if s:
                    out[k] = s
                else:
                    out.pop(k, None)
        return out

    def is_zero(self, a):
        return not a

    def is_unit(self, a):
        return set(a) == {0} and a[0] in (1, -1)

    def inv(self, a):
        if not self.is_unit(a):
            raise ValueError("not a unit in ZZ[t]: %r" % (a,))
        return dict(a)

    def degrees(self, a):
        return frozenset(-k for k in a)

    def graded_part(self, a, d):
        return {k: v for k, v in a.items() if -k == d}

    def monomials(self, a):
        items = [
            {"b": [], "t": k, "eps": 0, "coeff": str(v)} for k, v in a.items()
        ]
        items.sort(key=_mono_key)
        return items

    def from_monomials(self, items):
        acc = self.zero()
        for it in items:
            if it["b"] or it["eps"]:
                raise ValueError("b/eps monomial for ZZ[t]")
            acc = self.add(acc, self.monomial(it["t"], int(it["coeff"])))
        return acc


class TEpsDomain(Domain):
    """ZZ[t,eps]/eps^2 with t of degree -1 and eps of degree 0; elements are
    dicts {(t_exp, eps_exp): int} with eps_exp in {0, 1}."""

    name = "TEPS"

    def zero(self):
        return {}

    def one(self):
        return {(0, 0): 1}

    def from_int(self, n):
        return {} if n == 0 else {(0, 0): n}

    def monomial(self, k, eps, c):
        return {} if c == 0 else {(k, eps): c}

    def add(self, a, b):
        out = dict(a)
        for k, v in b.items():
            s = out.get(k, 0) + v
            if s:
                out[k] = s
            else:
                out.pop(k, None)
        return out

    def neg(self, a):
        return {k: -v for k, v in a.items()}

    def mul(self, a, b):
        out = {}
        for (k1, e1), v1 in a.items():
            for (k2, e2), v2 in b.items():
                e = e1 + e2
                if e > 1:
                    continue
                k = (k1 + k2, e)
                s = out.get(k, 0) + v1 * v2
                if s:
                    out[k] = s
                else:
                    out.pop(k, None)
        return out

    def is_zero(self, a):
        return not a

    def is_unit(self, a):
        body = {k: v for (k, e), v in a.items() if e == 0}
        return set(body) <= {0} and body.get(0, 0) in (1, -1)

    def inv(self, a):
        if not self.is_unit(a):
            raise ValueError("not a unit in TEPS: %r" % (a,))
        s = a[(0, 0)]
        out = {(0, 0): s}
        for (k, e), v in a.items():
            if e == 1:
                out[(k, 1)] = -v
        return out

    def degrees(self, a):
        return frozenset(-k for (k, _e) in a)

    def graded_part(self, a, d):
        return {k: v for k, v in a.items() if -k[0] == d}

    def monomials(self, a):
        items = [
            {"b": [], "t": k, "eps": e, "coeff": str(v)} for (k, e), v in a.items()
        ]
        items.sort(key=_mono_key)
        return items

    def from_monomials(self, items):
        acc = self.zero()
        for it in items:
            if it["b"]:
                raise ValueError("b monomial for TEPS")
            acc = self.add(acc, self.monomial(it["t"], it["eps"], int(it["coeff"])))
        return acc


ZZ = IntDomain()
ZHALF = HalfDomain()
TRING = TDomain()
TEPS = TEpsDomain()

_int_mod_cache = {}
_b_ring_cache = {}


def int_mod(m):
    if m not in _int_mod_cache:
        _int_mod_cache[m] = IntModDomain(m)
    return _int_mod_cache[m]


def b_ring(base):
    key = base.name
    if key not in _b_ring_cache:
        _b_ring_cache[key] = BDomain(base)
    return _b_ring_cache[key]


# ---------------------------------------------------------------------------
# truncated power series

class TruncatedSeries:
    """Multivariate power series truncated at total degree < order, with
    coefficients in a Domain.  coeffs maps exponent tuples to elements; zero
    coefficients are never stored."""

    __slots__ = ("dom", "vars", "order", "coeffs")

    def __init__(self, dom, variables, order, coeffs=None, _trusted=False):
        if order < 1:
            raise ValueError("order must be >= 1")
        self.dom = dom
        self.vars = tuple(variables)
        self.order = order
        if coeffs is None:
            self.coeffs = {}
        elif _trusted:
            self.coeffs = coeffs
        else:
            clean = {}
            for e, c in coeffs.items():
                e = tuple(e)
                if len(e) != len(self.vars):
                    raise ValueError("exponent arity mismatch")
                if sum(e) >= order or dom.is_zero(c):
                    continue
                clean[e] = c
            self.coeffs = clean

    # -- constructors
    @classmethod
    def zero(cls, dom, variables, order):
        return cls(dom, variables, order, {}, _trusted=True)

    @classmethod
    def constant(cls, dom, variables, order, c):
        t = cls.zero(dom, variables, order)
        if not dom.is_zero(c):
            t.coeffs[(0,) * len(t.vars)] = c
        return t

    @classmethod
    def variable(cls, dom, variables, order, name):
        t = cls.zero(dom, variables, order)
        i = t.vars.index(name)
        if order > 1:
            e = [0] * len(t.vars)
            e[i] = 1
            t.coeffs[tuple(e)] = dom.one()
        return t

    # -- basics
    def _like(self, coeffs):
        return TruncatedSeries(self.dom, self.vars, self.order, coeffs, _trusted=True)

    def _check(self, other):
        if self.dom is not other.dom or self.vars != other.vars or self.order != other.order:
            raise ValueError(
                "series mismatch: (%s,%s,%d) vs (%s,%s,%d)"
                % (self.dom.name, self.vars, self.order, other.dom.name, other.vars, other.order)
            )

    def is_zero(self):
        return not self.coeffs

    def coefficient(self, exp):
        return self.coeffs.get(tuple(exp), self.dom.zero())

    def __eq__(self, other):
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return (
            self.dom is other.dom
            and self.vars == other.vars
            and self.order == other.order
            and self.coeffs == other.coeffs
        )

    def __hash__(self):
        raise TypeError("unhashable")

    def __repr__(self):
        terms = []
        for e in sorted(self.coeffs, key=lambda e: (sum(e), e)):
            mono = "*".join(
                "%s^%d" % (v, k) if k > 1 else v
                for v, k in zip(self.vars, e)
                if k
            )
            c = self.dom.fmt(self.coeffs[e])
            terms.append("(%s)%s" % (c, "*" + mono if mono else ""))
        body = " + ".join(terms) if terms else "0"
        return "<series[%s; <%d] %s>" % (",".join(self.vars), self.order, body)

    def add(self, other):
        self._check(other)
        dom = self.dom
        out = dict(self.coeffs)
        for e, c in other.coeffs.items():
            s = dom.add(out.get(e, dom.zero()), c)
            if dom.is_zero(s):
                out.pop(e, None)
            else:
                out[e] = s
        return self._like(out)

    def neg(self):
        return self._like({e: self.dom.neg(c) for e, c in self.coeffs.items()})

    def sub(self, other):
        return self.add(other.neg())

    def scale(self, c):
        dom = self.dom
        if dom.is_zero(c):
            return self._like({})
        out = {}
        for e, v in self.coeffs.items():
            p = dom.mul(v, c)
            if not dom.is_zero(p):
                out[e] = p
        return self._like(out)

    def int_scale(self, k):
        return self.scale(self.dom.from_int(k))

    def mul(self, other):
        self._check(other)
        dom = self.dom
        order = self.order
        items2 = sorted(((sum(e), e, c) for e, c in other.coeffs.items()))
        out = {}
        for e1, c1 in self.coeffs.items():
            d1 = sum(e1)
            for d2, e2, c2 in items2:
                if d1 + d2 >= order:
                    break
                e = tuple(a + b for a, b in zip(e1, e2))
                p = dom.mul(c1, c2)
                s = dom.add(out.get(e, dom.zero()), p)
                if dom.is_zero(s):
                    out.pop(e, None)
                else:
                    out[e] = s
        return self._like(out)

    def pow(self, k):
        acc = TruncatedSeries.constant(self.dom, self.vars, self.order, self.dom.one())
        for _ in range(k):
            acc = acc.mul(self)
        return acc

    def truncate(self, new_order):
        if new_order > self.order:
            raise ValueError("cannot raise precision")
        return TruncatedSeries(
            self.dom,
            self.vars,
            new_order,
            {e: c for e, c in self.coeffs.items() if sum(e) < new_order},
            _trusted=True,
        )

    def map_coefficients(self, new_dom, fn):
        out = {}
        for e, c in self.coeffs.items():
            v = fn(c)
            if not new_dom.is_zero(v):
                out[e] = v
        return TruncatedSeries(new_dom, self.vars, self.order, out, _trusted=True)

    # -- composition and friends
    def compose(self, subs):
        """Substitute subs[name] for each variable; every substituted series
        must share (dom, vars, order) and have zero constant term."""
        targets = list(subs.values())
        if not targets:
            raise ValueError("empty substitution")
        t0 = targets[0]
        for t in targets[1:]:
            t0._check(t)
        if t0.dom is not self.dom:
            raise ValueError("domain mismatch in compose")
        for name in self.vars:
            if name not in subs:
                raise ValueError("missing substitution for %r" % name)
        zero_exp = (0,) * len(t0.vars)
        for t in targets:
            if zero_exp in t.coeffs:
                raise ValueError("substituted series has nonzero constant term")
        pows = {name: [TruncatedSeries.constant(t0.dom, t0.vars, t0.order, t0.dom.one())] for name in subs}

        def power(name, k):
            lst = pows[name]
            while len(lst) <= k:
                lst.append(lst[-1].mul(subs[name]))
            return lst[k]

        acc = TruncatedSeries.zero(t0.dom, t0.vars, t0.order)
        for e, c in self.coeffs.items():
            term = None
            for name, k in zip(self.vars, e):
                if k == 0:
                    continue
                p = power(name, k)
                term = p if term is None else term.mul(p)
            if term is None:
                term = TruncatedSeries.constant(t0.dom, t0.vars, t0.order, t0.dom.one())
            acc = acc.add(term.scale(c))
        return acc

    def reversion(self):
        """Compositional inverse of a univariate series with f(0)=0 and unit
        linear coefficient, via fixed-point iteration (works verbatim over
        domains with nilpotents)."""
        if len(self.vars) != 1:
            raise ValueError("reversion needs a univariate series")
        dom = self.dom
        if (0,) in self.coeffs:
            raise ValueError("reversion needs zero constant term")
        u = self.coefficient((1,))
        u_inv = dom.inv(u)  # raises if not a unit
        x = TruncatedSeries.variable(dom, self.vars, self.order, self.vars[0])
        h = self.sub(x.scale(u))  # degree >= 2 tail
        g = x.scale(u_inv)
        for _ in range(self.order - 1):
            nxt = x.sub(h.compose({self.vars[0]: g})).scale(u_inv)
            if nxt == g:
                break
            g = nxt
        return g

    def inverse(self):
        """Multiplicative inverse; requires unit constant term."""
        dom = self.dom
        c = self.coefficient((0,) * len(self.vars))
        c_inv = dom.inv(c)
        one = TruncatedSeries.constant(dom, self.vars, self.order, dom.one())
        r = one.sub(self.scale(c_inv))
        acc = one
        term = one
        for _ in range(self.order - 1):
            term = term.mul(r)
            if term.is_zero():
                break
            acc = acc.add(term)
        return acc.scale(c_inv)

    def _shift_down(self, emin, new_order):
        out = {}
        for e, c in self.coeffs.items():
            e2 = tuple(a - b for a, b in zip(e, emin))
            if sum(e2) < new_order:
                out[e2] = c
        return TruncatedSeries(self.dom, self.vars, new_order, out, _trusted=True)

    def divide(self, g):
        """Exact division f/g.  The common monomial of g is factored out, so
        the quotient's order drops by its total degree."""
        self._check(g)
        if g.is_zero():
            raise ZeroDivisionError("division by zero series")
        keys = list(g.coeffs)
        emin = tuple(min(k[i] for k in keys) for i in range(len(self.vars)))
        shift = sum(emin)
        new_order = self.order - shift
        if new_order < 1:
            raise ValueError("inexact division: divisor valuation exceeds order")
        for e in self.coeffs:
            if any(a < b for a, b in zip(e, emin)):
                raise ValueError("inexact division: %r not divisible by divisor monomial" % (e,))
        g0 = g._shift_down(emin, new_order)
        c0 = g0.coefficient((0,) * len(self.vars))
        if not self.dom.is_unit(c0):
            raise ValueError("inexact division: divisor lowest coefficient is not a unit")
        f0 = self._shift_down(emin, new_order)
        return f0.mul(g0.inverse())


# ---------------------------------------------------------------------------
# Laurent series in one distinguished variable

class LaurentSeries:
    """y^shift * series, with `series` a univariate TruncatedSeries in y.
    The principal part (negative exponents) is finite by construction."""

    __slots__ = ("shift", "series")

    def __init__(self, shift, series):
        if len(series.vars) != 1:
            raise ValueError("LaurentSeries needs a univariate series")
        self.shift = shift
        self.series = series

    @classmethod
    def from_series(cls, series, shift=0):
        return cls(shift, series)

    def _normalized_pair(self, other):
        s = min(self.shift, other.shift)
        return self._lower_to(s), other._lower_to(s)

    def _lower_to(self, s):
        if s == self.shift:
            return self
        d = self.shift - s  # > 0
        sr = self.series
        out = {}
        for (e,), c in sr.coeffs.items():
            if e + d < sr.order:
                out[(e + d,)] = c
        return LaurentSeries(s, TruncatedSeries(sr.dom, sr.vars, sr.order, out, _trusted=True))

    def add(self, other):
        a, b = self._normalized_pair(other)
        return LaurentSeries(a.shift, a.series.add(b.series))

    def mul(self, other):
        return LaurentSeries(self.shift + other.shift, self.series.mul(other.series))

    def scale(self, c):
        return LaurentSeries(self.shift, self.series.scale(c))

    def coefficient(self, n):
        """Coefficient of y^n."""
        e = n - self.shift
        if e < 0:
            return self.series.dom.zero()
        if e >= self.series.order:
            raise ValueError("coefficient y^%d beyond truncation order" % n)
        return self.series.coefficient((e,))

    def residue(self):
        return self.coefficient(-1)

    def principal_items(self):
        out = {}
        for (e,), c in self.series.coeffs.items():
            if e + self.shift < 0:
                out[e + self.shift] = c
        return out

    def regular_part(self):
        sr = self.series
        out = {}
        for (e,), c in sr.coeffs.items():
            n = e + self.shift
            if n >= 0 and n < sr.order:
                out[(n,)] = c
        return TruncatedSeries(sr.dom, sr.vars, sr.order, out, _trusted=True)


def residue(f):
    """The y^{-1} coefficient of a LaurentSeries."""
    return f.residue()


# ---------------------------------------------------------------------------
# integer lattices via row Hermite normal form

def hnf_rows(rows):
    """Row HNF of an integer matrix given as an iterable of equal-length rows.
    Returns (pivot_rows, pivot_cols): pivots positive, entries above each
    pivot reduced into [0, pivot)."""
    rows = [list(r) for r in rows if any(r)]
    if not rows:
        return [], []
    ncols = len(rows[0])
    for r in rows:
        if len(r) != ncols:
            raise ValueError("ragged matrix")
    res = []
    pivcols = []
    col = 0
    while rows and col < ncols:
        have = [r for r in rows if r[col] != 0]
        rest = [r for r in rows if r[col] == 0]
        if not have:
            rows = rest
            col += 1
            continue
        while len(have) > 1:
            have.sort(key=lambda r: abs(r[col]))
            r0 = have[0]
            nxt = [r0]
            for r in have[1:]:
                q = r[col] // r0[col]
                rr = [a - q * b for a, b in zip(r, r0)]
                if rr[col] != 0:
                    nxt.append(rr)
                elif any(rr):
                    rest.append(rr)
            have = nxt
        piv = have[0]
        if piv[col] < 0:
            piv = [-a for a in piv]
        res.append(piv)
        pivcols.append(col)
        rows = rest
        col += 1
    for i in range(len(res)):
        for j in range(i + 1, len(res)):
            c = pivcols[j]
            q = res[i][c] // res[j][c]
            if q:
                res[i] = [a - q * b for a, b in zip(res[i], res[j])]
    return res, pivcols


class IntegerLattice:
    """Z-span of integer vectors with exact membership tests."""

    __slots__ = ("ncols", "generators", "hnf", "pivcols", "_mod_cache")

    def __init__(self, generators, ncols):
        self.ncols = ncols
        self.generators = [tuple(g) for g in generators]
        for g in self.generators:
            if len(g) != ncols:
                raise ValueError("generator length != ncols")
        self.hnf, self.pivcols = hnf_rows(self.generators)
        self._mod_cache = {}
        for g in self.generators:  # spans-the-same-module sanity check
            if not self.member(g):
                raise AssertionError("HNF lost a generator")

    @property
    def rank(self):
        return len(self.hnf)

    def member(self, v):
        v = list(v)
        if len(v) != self.ncols:
            raise ValueError("vector length mismatch")
        for row, c in zip(self.hnf, self.pivcols):
            if v[c]:
                if v[c] % row[c]:
                    return False
                q = v[c] // row[c]
                v = [a - q * b for a, b in zip(v, row)]
        return not any(v)

    def member_mod(self, v, m):
        """Membership in span + m*Z^n (plain membership when m == 0)."""
        if m < 0:
            raise ValueError("modulus must be >= 0")
        if m == 0:
            return self.member(v)
        if m not in self._mod_cache:
            extra = []
            for i in range(self.ncols):
                e = [0] * self.ncols
                e[i] = m
                extra.append(e)
            self._mod_cache[m] = IntegerLattice(list(self.generators) + extra, self.ncols)
        return self._mod_cache[m].member(v)

    def scaled(self, m):
        """The lattice m*L."""
        if m < 1:
            raise ValueError("scale must be >= 1")
        return IntegerLattice([[m * a for a in row] for row in self.hnf], self.ncols)
