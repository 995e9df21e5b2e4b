"""Exact elements of the cyclotomic fields Q(zeta_n).

An element is stored in the power basis of zeta_n modulo the cyclotomic
polynomial Phi_n, so equality is a comparison of coefficient vectors.
"""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

import flint


class ScalarError(ValueError):
    pass


@lru_cache(maxsize=None)
def cyclotomic(n: int) -> flint.fmpq_poly:
    if n < 1:
        raise ScalarError(f"cyclotomic order must be positive, got {n}")
    return flint.fmpq_poly([int(c) for c in flint.fmpz_poly.cyclotomic(n).coeffs()])


@lru_cache(maxsize=None)
def phi(n: int) -> int:
    return cyclotomic(n).degree()


@lru_cache(maxsize=None)
def power_table(n: int) -> tuple[tuple[flint.fmpq, ...], ...]:
    """Coefficient vectors of zeta_n^m for 0 <= m < 2*phi(n) - 1."""
    d = phi(n)
    out = []
    for m in range(max(2 * d - 1, 1)):
        p = flint.fmpq_poly([0] * m + [1]) % cyclotomic(n)
        c = p.coeffs()
        out.append(tuple(flint.fmpq(c[i]) if i < len(c) else flint.fmpq(0) for i in range(d)))
    return tuple(out)


def _q(x) -> flint.fmpq:
    if isinstance(x, flint.fmpq):
        return x
    if isinstance(x, Fraction):
        return flint.fmpq(x.numerator, x.denominator)
    if isinstance(x, int):
        return flint.fmpq(x)
    if isinstance(x, str):
        return parse_rational(x)
    raise TypeError(f"cannot read {x!r} as a rational")


def parse_rational(text: str) -> flint.fmpq:
    text = text.strip()
    if "/" in text:
        p, q = text.split("/")
        if int(q) == 0:
            raise ScalarError(f"zero denominator in {text!r}")
        return flint.fmpq(int(p), int(q))
    return flint.fmpq(int(text))


def format_rational(q: flint.fmpq) -> str:
    return f"{int(q.p)}/{int(q.q)}"


class Scalar:
    """Immutable element of Q(zeta_n)."""

    __slots__ = ("order", "_poly")

    def __init__(self, order: int, coeffs=None, *, poly: flint.fmpq_poly | None = None):
        self.order = order
        if poly is None:
            coeffs = list(coeffs or [])
            if coeffs and len(coeffs) != phi(order):
                raise ScalarError(f"expected {phi(order)} coefficients for order {order}, got {len(coeffs)}")
            poly = flint.fmpq_poly([_q(c) for c in coeffs])
        elif poly.degree() >= phi(order):
            poly = poly % cyclotomic(order)
        self._poly = poly

    @classmethod
    def rational(cls, x, order: int = 1) -> "Scalar":
        return cls(order, poly=flint.fmpq_poly([_q(x)]))

    @classmethod
    def zeta(cls, n: int, k: int = 1) -> "Scalar":
        k %= n
        return cls(n, poly=flint.fmpq_poly([0] * k + [1]) % cyclotomic(n))

    @property
    def coeffs(self) -> tuple[Fraction, ...]:
        c = self._poly.coeffs()
        d = phi(self.order)
        return tuple(Fraction(int(c[i].p), int(c[i].q)) if i < len(c) else Fraction(0) for i in range(d))

    def fmpq_coeffs(self) -> list[flint.fmpq]:
        c = self._poly.coeffs()
        return [flint.fmpq(c[i]) if i < len(c) else flint.fmpq(0) for i in range(phi(self.order))]

    def is_zero(self) -> bool:
        return self._poly.is_zero()

    def is_rational(self) -> bool:
        return self._poly.degree() <= 0

    def to_fraction(self) -> Fraction:
        if not self.is_rational():
            raise ScalarError(f"{self} is not rational")
        return self.coeffs[0] if self.coeffs else Fraction(0)

    def _check(self, other) -> "Scalar":
        if not isinstance(other, Scalar):
            other = Scalar.rational(other, self.order)
        if other.order != self.order:
            raise ScalarError(f"order mismatch: {self.order} vs {other.order}")
        return other

    def __add__(self, other):
        other = self._check(other)
        return Scalar(self.order, poly=self._poly + other._poly)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._check(other)
        return Scalar(self.order, poly=self._poly - other._poly)

    def __rsub__(self, other):
        return self._check(other) - self

    def __neg__(self):
        return Scalar(self.order, poly=-self._poly)

    def __mul__(self, other):
        other = self._check(other)
        return Scalar(self.order, poly=(self._poly * other._poly) % cyclotomic(self.order))

    __rmul__ = __mul__

    def inverse(self) -> "Scalar":
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero scalar")
        g, s, _ = self._poly.xgcd(cyclotomic(self.order))
        return Scalar(self.order, poly=(s / g.coeffs()[0]) % cyclotomic(self.order))

    def __truediv__(self, other):
        other = self._check(other)
        return self * other.inverse()

    def __rtruediv__(self, other):
        return self._check(other) * self.inverse()

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        out = Scalar.rational(1, self.order)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Scalar.rational(other, self.order)
        if not isinstance(other, Scalar):
            return NotImplemented
        if other.order != self.order:
            n = _lcm(self.order, other.order)
            return embed(self, n)._poly == embed(other, n)._poly
        return self._poly == other._poly

    def __hash__(self):
        return hash((self.order, tuple(self.coeffs)))

    def __repr__(self):
        if self.is_rational():
            return f"Scalar({self.to_fraction()})"
        return f"Scalar(order={self.order}, {[str(c) for c in self.coeffs]})"

    def __str__(self):
        if self.is_rational():
            return str(self.to_fraction())
        terms = []
        for i, c in enumerate(self.coeffs):
            if c:
                terms.append(f"{c}" if i == 0 else f"({c})*z{self.order}^{i}")
        return " + ".join(terms)


def _lcm(a: int, b: int) -> int:
    from math import gcd
    return a * b // gcd(a, b)


def scalar_arith(a: Scalar, b: Scalar, op: str) -> Scalar:
    if a.order != b.order:
        raise ScalarError(f"order mismatch: {a.order} vs {b.order}")
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        if b.is_zero():
            raise ZeroDivisionError("division by zero scalar")
        return a / b
    raise ValueError(f"unknown op {op!r}")


def embed_poly(p: flint.fmpq_poly, m: int, n: int) -> flint.fmpq_poly:
    """Rewrite a polynomial in zeta_m as one in zeta_n (m | n)."""
    if m == n:
        return p
    step = n // m
    c = p.coeffs()
    out = [0] * (step * (len(c) - 1) + 1) if c else []
    for i, x in enumerate(c):
        out[i * step] = x
    return flint.fmpq_poly(out) % cyclotomic(n)


def embed(a: Scalar, n: int) -> Scalar:
    if n % a.order:
        raise ScalarError(f"order {a.order} does not divide {n}")
    return Scalar(n, poly=embed_poly(a._poly, a.order, n))


def project(a: Scalar, m: int) -> Scalar:
    """Inverse of embed: express a in Q(zeta_m) when it lies there."""
    if a.order % m:
        raise ScalarError(f"{m} does not divide {a.order}")
    step = a.order // m
    c = a.fmpq_coeffs()
    if any(c[i] != 0 for i in range(len(c)) if i % step):
        # not already in reduced sub-basis form; solve by comparing embeddings
        return _project_solve(a, m)
    cand = Scalar(m, poly=flint.fmpq_poly([c[i * step] for i in range((len(c) - 1) // step + 1)]))
    if embed(cand, a.order) != a:
        return _project_solve(a, m)
    return cand


def _project_solve(a: Scalar, m: int) -> Scalar:
    n = a.order
    d = phi(m)
    cols = [embed(Scalar(m, poly=flint.fmpq_poly([0] * i + [1])), n).fmpq_coeffs() for i in range(d)]
    rhs = a.fmpq_coeffs()
    aug = flint.fmpq_mat(phi(n), d + 1, [x for i in range(phi(n)) for x in [cols[j][i] for j in range(d)] + [rhs[i]]])
    r, rank = aug.rref()
    for i in range(rank):
        row = [r[i, j] for j in range(d + 1)]
        if all(x == 0 for x in row[:d]) and row[d] != 0:
            raise ScalarError(f"{a} does not lie in Q(zeta_{m})")
    sol = [flint.fmpq(0)] * d
    for i in range(rank):
        piv = next(j for j in range(d) if r[i, j] != 0)
        sol[piv] = r[i, d]
    return Scalar(m, poly=flint.fmpq_poly(sol))


def encode(a: Scalar):
    if a.is_rational():
        return format_rational(a.fmpq_coeffs()[0])
    return {"order": a.order, "coeffs": [format_rational(c) for c in a.fmpq_coeffs()]}


def decode(obj, order: int | None = None) -> Scalar:
    if isinstance(obj, str):
        s = Scalar.rational(parse_rational(obj), 1)
    elif isinstance(obj, int) and not isinstance(obj, bool):
        s = Scalar.rational(obj, 1)
    elif isinstance(obj, dict) and set(obj) == {"order", "coeffs"}:
        s = Scalar(int(obj["order"]), [parse_rational(c) for c in obj["coeffs"]])
    else:
        raise ScalarError(f"bad scalar encoding {obj!r}")
    return embed(s, order) if order is not None else s
