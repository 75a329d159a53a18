"""Exact scalar arithmetic for braid invariants.

Three coefficient domains appear in the computations:

* ``LaurentPoly`` -- sparse Laurent polynomials in a single variable with
  integer coefficients (the invariant variable ``x`` or the bracket
  variable ``a``).
* ``BiLaurent`` -- integer polynomials in ``a^{+-1}`` and ``x``, the
  codomain of the solid-torus closure trace.
* ``TruncatedSeries`` -- polynomials in ``t`` of bounded degree whose
  coefficients are polynomials in ``x`` over exact rationals.  These arise
  from substituting ``a = e^t`` and truncating.

Everything is exact; no floats anywhere.  All values are immutable by
convention: operations return new objects.
"""

from __future__ import annotations

from fractions import Fraction
from math import factorial


class VariableMismatch(ValueError):
    """Raised when combining polynomials tagged with different variables."""


def _format_terms(items, var):
    """Render a list of (exponent, coefficient) pairs, exponent ascending.

    Follows the ``-x^-3 + x^-1 + x - x^3`` style: caret exponents, explicit
    signs, unit coefficients suppressed.
    """
    if not items:
        return "0"
    pieces = []
    for exp, coeff in items:
        neg = coeff < 0
        mag = -coeff if neg else coeff
        if exp == 0:
            body = str(mag)
        else:
            if isinstance(mag, Fraction) and mag.denominator != 1:
                cpart = f"({mag})"
            elif mag == 1:
                cpart = ""
            else:
                cpart = str(mag)
            vpart = var if exp == 1 else f"{var}^{exp}"
            body = cpart + vpart
        if not pieces:
            pieces.append(("-" if neg else "") + body)
        else:
            pieces.append(("- " if neg else "+ ") + body)
    return " ".join(pieces)


class LaurentPoly:
    """Sparse Laurent polynomial: map exponent -> integer coefficient.

    Zero coefficients are never stored, so structural equality of the term
    maps is equality of polynomials.  The ``var`` tag ("x", "a", ...) guards
    against mixing incompatible scalars.
    """

    __slots__ = ("terms", "var")

    def __init__(self, terms=None, var="x"):
        clean: dict[int, int] = {}
        if terms:
            items = terms.items() if isinstance(terms, dict) else terms
            for e, c in items:
                if c:
                    e = int(e)
                    clean[e] = clean.get(e, 0) + c
        self.terms = {e: c for e, c in clean.items() if c}
        self.var = var

    @classmethod
    def zero(cls, var="x"):
        return cls({}, var)

    @classmethod
    def one(cls, var="x"):
        return cls({0: 1}, var)

    @classmethod
    def monomial(cls, exponent, coeff=1, var="x"):
        return cls({exponent: coeff}, var)

    def _check(self, other):
        if self.var != other.var:
            raise VariableMismatch(
                f"cannot combine polynomial in {self.var!r} with polynomial in {other.var!r}"
            )

    def __bool__(self):
        return bool(self.terms)

    @property
    def is_zero(self):
        return not self.terms

    def coefficient(self, exponent):
        return self.terms.get(exponent, 0)

    def __add__(self, other):
        if isinstance(other, int):
            other = LaurentPoly({0: other}, self.var)
        self._check(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            s = out.get(e, 0) + c
            if s:
                out[e] = s
            else:
                out.pop(e, None)
        return LaurentPoly(out, self.var)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly({e: -c for e, c in self.terms.items()}, self.var)

    def __sub__(self, other):
        if isinstance(other, int):
            other = LaurentPoly({0: other}, self.var)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            return LaurentPoly({e: c * other for e, c in self.terms.items()}, self.var)
        self._check(other)
        out: dict[int, int] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = e1 + e2
                s = out.get(e, 0) + c1 * c2
                if s:
                    out[e] = s
                else:
                    out.pop(e, None)
        return LaurentPoly(out, self.var)

    __rmul__ = __mul__

    def __pow__(self, k):
        if k < 0:
            raise ValueError("negative powers of general polynomials are not defined")
        acc = LaurentPoly.one(self.var)
        base = self
        while k:
            if k & 1:
                acc = acc * base
            base = base * base
            k >>= 1
        return acc

    def __eq__(self, other):
        if isinstance(other, int):
            return self.terms == ({0: other} if other else {})
        return (
            isinstance(other, LaurentPoly)
            and self.var == other.var
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash((self.var, tuple(sorted(self.terms.items()))))

    def substitute_inverse(self):
        """The image under var -> var^-1 (negate every exponent)."""
        return LaurentPoly({-e: c for e, c in self.terms.items()}, self.var)

    def evaluate_at_one(self):
        return sum(self.terms.values())

    def min_exponent(self):
        return min(self.terms) if self.terms else 0

    def max_exponent(self):
        return max(self.terms) if self.terms else 0

    def sorted_terms(self):
        return sorted(self.terms.items())

    def to_json(self):
        return {str(e): c for e, c in self.sorted_terms()}

    def __str__(self):
        return _format_terms(self.sorted_terms(), self.var)

    def __repr__(self):
        return f"LaurentPoly({self.terms!r}, var={self.var!r})"


class BiLaurent:
    """Integer polynomial in two variables: map (a-exponent, x-exponent) -> coeff.

    The first variable is Laurent (negative exponents allowed); trace outputs
    only ever carry x-exponents >= 0.
    """

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        clean: dict[tuple[int, int], int] = {}
        if terms:
            items = terms.items() if isinstance(terms, dict) else terms
            for key, c in items:
                if c:
                    key = (int(key[0]), int(key[1]))
                    clean[key] = clean.get(key, 0) + c
        self.terms = {k: c for k, c in clean.items() if c}

    @classmethod
    def zero(cls):
        return cls({})

    @classmethod
    def one(cls):
        return cls({(0, 0): 1})

    @classmethod
    def monomial(cls, a_exp, x_exp, coeff=1):
        return cls({(a_exp, x_exp): coeff})

    @classmethod
    def from_a_poly(cls, p, x_exp=0):
        """Embed a Laurent polynomial in ``a`` as the coefficient of x^x_exp."""
        if p.var != "a":
            raise VariableMismatch(f"expected a polynomial in 'a', got {p.var!r}")
        return cls({(e, x_exp): c for e, c in p.terms.items()})

    def __bool__(self):
        return bool(self.terms)

    @property
    def is_zero(self):
        return not self.terms

    def coefficient(self, a_exp, x_exp):
        return self.terms.get((a_exp, x_exp), 0)

    def __add__(self, other):
        out = dict(self.terms)
        for k, c in other.terms.items():
            s = out.get(k, 0) + c
            if s:
                out[k] = s
            else:
                out.pop(k, None)
        return BiLaurent(out)

    def __neg__(self):
        return BiLaurent({k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return BiLaurent({k: c * other for k, c in self.terms.items()})
        out: dict[tuple[int, int], int] = {}
        for (a1, x1), c1 in self.terms.items():
            for (a2, x2), c2 in other.terms.items():
                k = (a1 + a2, x1 + x2)
                s = out.get(k, 0) + c1 * c2
                if s:
                    out[k] = s
                else:
                    out.pop(k, None)
        return BiLaurent(out)

    __rmul__ = __mul__

    def __eq__(self, other):
        return isinstance(other, BiLaurent) and self.terms == other.terms

    def __hash__(self):
        return hash(tuple(sorted(self.terms.items())))

    def x_coefficient(self, x_exp):
        """The coefficient of x^x_exp, as a Laurent polynomial in a."""
        return LaurentPoly(
            {a: c for (a, x), c in self.terms.items() if x == x_exp}, var="a"
        )

    def x_exponents(self):
        return sorted({x for (_, x) in self.terms})

    def to_json(self):
        return {f"{a},{x}": c for (a, x), c in sorted(self.terms.items(), key=lambda t: (t[0][1], t[0][0]))}

    def __str__(self):
        if not self.terms:
            return "0"
        chunks = []
        for x in self.x_exponents():
            p = self.x_coefficient(x)
            if x == 0:
                chunks.append(f"({p})")
            elif x == 1:
                chunks.append(f"({p})*x")
            else:
                chunks.append(f"({p})*x^{x}")
        return " + ".join(chunks)

    def __repr__(self):
        return f"BiLaurent({self.terms!r})"


class RationalPoly:
    """Polynomial in x with exact rational coefficients (Fraction values)."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        clean: dict[int, Fraction] = {}
        if terms:
            items = terms.items() if isinstance(terms, dict) else terms
            for e, c in items:
                c = Fraction(c)
                if c:
                    e = int(e)
                    clean[e] = clean.get(e, Fraction(0)) + c
        self.terms = {e: c for e, c in clean.items() if c}

    @classmethod
    def zero(cls):
        return cls({})

    def __bool__(self):
        return bool(self.terms)

    @property
    def is_zero(self):
        return not self.terms

    def coefficient(self, exponent):
        return self.terms.get(exponent, Fraction(0))

    def __add__(self, other):
        out = dict(self.terms)
        for e, c in other.terms.items():
            s = out.get(e, Fraction(0)) + c
            if s:
                out[e] = s
            else:
                out.pop(e, None)
        return RationalPoly(out)

    def __neg__(self):
        return RationalPoly({e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return RationalPoly({e: c * other for e, c in self.terms.items()})
        out: dict[int, Fraction] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = e1 + e2
                s = out.get(e, Fraction(0)) + c1 * c2
                if s:
                    out[e] = s
                else:
                    out.pop(e, None)
        return RationalPoly(out)

    __rmul__ = __mul__

    def __eq__(self, other):
        if isinstance(other, LaurentPoly):
            other = RationalPoly(other.terms)
        return isinstance(other, RationalPoly) and self.terms == other.terms

    def __hash__(self):
        return hash(tuple(sorted(self.terms.items())))

    def sorted_terms(self):
        return sorted(self.terms.items())

    def to_json(self):
        return {str(e): (int(c) if c.denominator == 1 else str(c)) for e, c in self.sorted_terms()}

    def __str__(self):
        items = [
            (e, int(c) if c.denominator == 1 else c) for e, c in self.sorted_terms()
        ]
        return _format_terms(items, "x")

    def __repr__(self):
        return f"RationalPoly({self.terms!r})"


class TruncatedSeries:
    """Polynomial in t of degree <= order, coefficients RationalPoly in x.

    Arithmetic silently discards every term of t-degree above ``order``.
    An order-K series keeps t^0 .. t^K.
    """

    __slots__ = ("order", "coeffs")

    def __init__(self, order, coeffs=None):
        if order < 0:
            raise ValueError("series order must be >= 0")
        self.order = order
        cs = list(coeffs) if coeffs is not None else []
        cs = [c if isinstance(c, RationalPoly) else RationalPoly(c) for c in cs]
        cs = cs[: order + 1]
        while len(cs) < order + 1:
            cs.append(RationalPoly.zero())
        self.coeffs = tuple(cs)

    @classmethod
    def zero(cls, order):
        return cls(order)

    def coefficient(self, k):
        """The coefficient of t^k (zero polynomial beyond the order)."""
        if k < 0:
            raise ValueError("negative t-degree")
        if k > self.order:
            return RationalPoly.zero()
        return self.coeffs[k]

    def __add__(self, other):
        order = min(self.order, other.order)
        return TruncatedSeries(
            order, [self.coeffs[k] + other.coeffs[k] for k in range(order + 1)]
        )

    def __neg__(self):
        return TruncatedSeries(self.order, [-c for c in self.coeffs])

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        order = min(self.order, other.order)
        out = [RationalPoly.zero() for _ in range(order + 1)]
        for i, ci in enumerate(self.coeffs):
            if i > order or ci.is_zero:
                continue
            for j, cj in enumerate(other.coeffs):
                if i + j > order:
                    break
                if cj.is_zero:
                    continue
                out[i + j] = out[i + j] + ci * cj
        return TruncatedSeries(order, out)

    def __eq__(self, other):
        return (
            isinstance(other, TruncatedSeries)
            and self.order == other.order
            and self.coeffs == other.coeffs
        )

    def __str__(self):
        pieces = []
        for k, c in enumerate(self.coeffs):
            if c.is_zero:
                continue
            if k == 0:
                pieces.append(f"({c})")
            elif k == 1:
                pieces.append(f"({c})*t")
            else:
                pieces.append(f"({c})*t^{k}")
        return " + ".join(pieces) if pieces else "0"

    def __repr__(self):
        return f"TruncatedSeries(order={self.order}, coeffs={list(self.coeffs)!r})"


def exp_substitute(p, order):
    """Substitute a = e^t in a BiLaurent and truncate at t^order.

    Each monomial c * a^m * x^q contributes c * x^q * sum_{j<=order} m^j t^j / j!.
    The x variable passes through untouched; coefficients become exact
    rationals.
    """
    if order < 0:
        raise ValueError("truncation order must be >= 0")
    facts = [factorial(j) for j in range(order + 1)]
    out = [dict() for _ in range(order + 1)]
    for (m, q), c in p.terms.items():
        mj = 1
        for j in range(order + 1):
            contrib = Fraction(c * mj, facts[j])
            bucket = out[j]
            s = bucket.get(q, Fraction(0)) + contrib
            if s:
                bucket[q] = s
            else:
                bucket.pop(q, None)
            mj *= m
    return TruncatedSeries(order, [RationalPoly(b) for b in out])


def symmetric_pair(m, strands):
    """The symmetric exponent pair x^(2m-n) + x^(n-2m) for braid index n.

    This is the value of a single positive-vs-negative crossing resolution
    difference; it degenerates to the constant 2 when 2m = n.
    """
    if not 1 <= m <= strands - 1:
        raise ValueError(f"winding number {m} out of range 1..{strands - 1}")
    return LaurentPoly({2 * m - strands: 1}, "x") + LaurentPoly(
        {strands - 2 * m: 1}, "x"
    )


def laurent_mul(p, q):
    """Exact product of two Laurent polynomials with matching variable tags."""
    return p * q
