"""Cyclotomic arithmetic in the quotient ring Q[x]/(x^N - 1).

Elements represent complex numbers via x -> exp(2*pi*i/N).  Only ring
operations and conjugation are needed; rationality of a value is decided by
reducing modulo the minimal relation of x, obtained as the polynomial gcd of
the sparse relations 1 + x^(N/d) + x^(2N/d) + ... for the primes d | N
(no factoring of x^N - 1 into irreducibles is ever performed).
"""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from .errors import NonRationalResult


def _poly_trim(c):
    while c and c[-1] == 0:
        c.pop()
    return c


def _poly_divmod(a, b):
    """Divide polynomials over Q (coefficient lists, low degree first)."""
    a = list(a)
    q = [Fraction(0)] * max(0, len(a) - len(b) + 1)
    inv_lead = 1 / b[-1]
    for k in range(len(a) - len(b), -1, -1):
        f = a[k + len(b) - 1] * inv_lead
        if f:
            q[k] = f
            for i, bc in enumerate(b):
                a[k + i] -= f * bc
    return _poly_trim(q), _poly_trim(a[: len(b) - 1])


def _poly_gcd(a, b):
    a, b = list(a), list(b)
    while b:
        _, r = _poly_divmod(a, b)
        a, b = b, r
    lead = a[-1]
    return [c / lead for c in a]


_ZERO = Fraction(0)


def _prime_factors(n):
    out, d = [], 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


@lru_cache(maxsize=None)
def _min_relation(order: int):
    """gcd over primes d | N of the relations sum_i x^(i*N/d); N=1 gives x-1."""
    if order == 1:
        return (Fraction(-1), Fraction(1))
    g = None
    for d in _prime_factors(order):
        step = order // d
        rel = [Fraction(0)] * order
        for i in range(d):
            rel[i * step] = Fraction(1)
        rel = _poly_trim(rel)
        g = rel if g is None else _poly_gcd(g, rel)
    return tuple(g)


class Cyclo:
    """An element of Q[x]/(x^N - 1); immutable."""

    __slots__ = ("order", "coeffs")

    def __init__(self, order, coeffs):
        self.order = order
        c = tuple(Fraction(v) for v in coeffs)
        if len(c) != order:
            raise ValueError("coefficient vector must have length %d" % order)
        self.coeffs = c

    @classmethod
    def _raw(cls, order, coeffs):
        """Trusted constructor: coeffs is already a tuple of Fractions."""
        out = object.__new__(cls)
        out.order = order
        out.coeffs = coeffs
        return out

    @classmethod
    def integer(cls, n, order):
        c = [Fraction(0)] * order
        c[0] = Fraction(n)
        return cls(order, c)

    @classmethod
    def root_power(cls, k, order):
        """x^k, i.e. the root of unity exp(2*pi*i*k/N)."""
        c = [Fraction(0)] * order
        c[k % order] = Fraction(1)
        return cls(order, c)

    def _check(self, other):
        if self.order != other.order:
            raise ValueError("mixed cyclotomic orders %d, %d" % (self.order, other.order))

    def __add__(self, other):
        self._check(other)
        return Cyclo._raw(self.order, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other):
        self._check(other)
        return Cyclo._raw(self.order, tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self):
        return Cyclo._raw(self.order, tuple(-a for a in self.coeffs))

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return Cyclo._raw(self.order, tuple(a * other for a in self.coeffs))
        self._check(other)
        n = self.order
        left = [(i, a) for i, a in enumerate(self.coeffs) if a]
        right = [(j, b) for j, b in enumerate(other.coeffs) if b]
        out = [_ZERO] * n
        for i, a in left:
            for j, b in right:
                out[(i + j) % n] += a * b
        return Cyclo._raw(n, tuple(out))

    __rmul__ = __mul__

    def conj(self):
        """Complex conjugation: basis index k -> N - k mod N."""
        n = self.order
        out = [_ZERO] * n
        for k, a in enumerate(self.coeffs):
            out[(n - k) % n] = a
        return Cyclo._raw(n, tuple(out))

    def is_zero(self):
        return all(a == 0 for a in self.coeffs)

    def reduced(self):
        """Canonical representative modulo the minimal relation of x."""
        rel = _min_relation(self.order)
        _, r = _poly_divmod(list(self.coeffs), list(rel))
        out = tuple(r) + (_ZERO,) * (self.order - len(r))
        return Cyclo._raw(self.order, out)

    def rational_value(self):
        """The value as a Fraction, or None when the value is irrational."""
        red = self.reduced()
        if any(red.coeffs[1:]):
            return None
        return red.coeffs[0]

    def rational_part(self):
        """Projection onto the rational span; idempotent on rational elements."""
        v = self.rational_value()
        return Cyclo.integer(v if v is not None else 0, self.order)

    def __eq__(self, other):
        return (
            isinstance(other, Cyclo)
            and other.order == self.order
            and (self - other).reduced().is_zero()
        )

    def __hash__(self):
        return hash((self.order, self.reduced().coeffs))

    def __repr__(self):
        terms = []
        for k, a in enumerate(self.coeffs):
            if a == 0:
                continue
            if k == 0:
                terms.append(str(a))
            else:
                terms.append("%s*z%d^%d" % (a, self.order, k))
        return " + ".join(terms) if terms else "0"


def cyclo_inner(chi, psi, class_sizes, group_order):
    """Hermitian character pairing (1/|G|) sum_c |c| chi(c) conj(psi(c)).

    Raises NonRationalResult when the reduction leaves a nonrational value.
    """
    if not (len(chi) == len(psi) == len(class_sizes)):
        raise ValueError("class value lists must have equal length")
    if sum(class_sizes) != group_order:
        raise ValueError("class sizes do not sum to the group order")
    order = chi[0].order
    acc = [_ZERO] * order
    for a, b, size in zip(chi, psi, class_sizes):
        left = [(i, x) for i, x in enumerate(a.coeffs) if x]
        if not left:
            continue
        for j, y in enumerate(b.coeffs):
            if not y:
                continue
            w = size * y
            jj = (order - j) % order  # conjugation of the second argument
            for i, x in left:
                acc[(i + jj) % order] += x * w
    total = Cyclo._raw(order, tuple(acc))
    val = total.rational_value()
    if val is None:
        raise NonRationalResult("inner product is not rational: %r" % (total,))
    return val / group_order
