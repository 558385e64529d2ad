"""Exact arithmetic in Z[A, A^-1] and Z[zeta_N].

All invariant values in this package are computed exactly.  Bracket state
sums are accumulated as integer Laurent polynomials in the variable A; the
final value is reduced modulo A^N = 1 to a cyclotomic integer with a unique
canonical coefficient vector, so equality tests are exact.
"""

from __future__ import annotations

from typing import Iterable


class LaurentZ:
    """Integer Laurent polynomial in one variable A.

    Stored as a dict exponent -> nonzero integer coefficient.  Immutable by
    convention (no method mutates self).
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: dict[int, int] | None = None):
        c = {e: v for e, v in (coeffs or {}).items() if v != 0}
        object.__setattr__(self, "coeffs", c)

    def __setattr__(self, name, value):  # pragma: no cover - immutability guard
        raise AttributeError("LaurentZ is immutable")

    @staticmethod
    def zero() -> "LaurentZ":
        return LaurentZ({})

    @staticmethod
    def one() -> "LaurentZ":
        return LaurentZ({0: 1})

    @staticmethod
    def monomial(exponent: int, coefficient: int = 1) -> "LaurentZ":
        return LaurentZ({exponent: coefficient})

    def is_zero(self) -> bool:
        return not self.coeffs

    def __add__(self, other: "LaurentZ") -> "LaurentZ":
        c = dict(self.coeffs)
        for e, v in other.coeffs.items():
            c[e] = c.get(e, 0) + v
        return LaurentZ(c)

    def __sub__(self, other: "LaurentZ") -> "LaurentZ":
        c = dict(self.coeffs)
        for e, v in other.coeffs.items():
            c[e] = c.get(e, 0) - v
        return LaurentZ(c)

    def __neg__(self) -> "LaurentZ":
        return LaurentZ({e: -v for e, v in self.coeffs.items()})

    def __mul__(self, other: "LaurentZ") -> "LaurentZ":
        c: dict[int, int] = {}
        for e1, v1 in self.coeffs.items():
            for e2, v2 in other.coeffs.items():
                e = e1 + e2
                c[e] = c.get(e, 0) + v1 * v2
        return LaurentZ(c)

    def __eq__(self, other) -> bool:
        return isinstance(other, LaurentZ) and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(frozenset(self.coeffs.items()))

    def __pow__(self, k: int) -> "LaurentZ":
        if k < 0:
            raise ValueError("negative powers only defined for monomials")
        out = LaurentZ.one()
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def exact_divide(self, divisor: "LaurentZ") -> "LaurentZ":
        """Exact polynomial division; raises if the division leaves a remainder."""
        if divisor.is_zero():
            raise ZeroDivisionError("division by zero Laurent polynomial")
        rem = dict(self.coeffs)
        dtop = max(divisor.coeffs)
        dlead = divisor.coeffs[dtop]
        out: dict[int, int] = {}
        while rem:
            top = max(rem)
            lead = rem[top]
            if lead % dlead != 0:
                raise ArithmeticError("inexact Laurent division")
            q = lead // dlead
            e = top - dtop
            out[e] = out.get(e, 0) + q
            for de, dv in divisor.coeffs.items():
                k = de + e
                nv = rem.get(k, 0) - dv * q
                if nv:
                    rem[k] = nv
                elif k in rem:
                    del rem[k]
        return LaurentZ(out)

    def reduce_mod(self, N: int) -> "CyclotomicInt":
        """Reduce modulo A^N = 1, yielding a canonical cyclotomic integer."""
        vec = [0] * N
        for e, v in self.coeffs.items():
            vec[e % N] += v
        return CyclotomicInt(N, vec)

    def __repr__(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for e in sorted(self.coeffs):
            v = self.coeffs[e]
            if e == 0:
                parts.append(str(v))
            else:
                parts.append(f"{v}*A^{e}" if v != 1 else f"A^{e}")
        return " + ".join(parts)


def loop_value_laurent() -> LaurentZ:
    """The Kauffman loop value delta = -A^2 - A^-2 as a Laurent polynomial."""
    return LaurentZ({2: -1, -2: -1})


def twist_value_laurent() -> LaurentZ:
    """The positive-kink twist factor theta = -A^3."""
    return LaurentZ({3: -1})


class CyclotomicInt:
    """Element of Z[x]/(x^N - 1), with x playing the role of A = zeta_N.

    The coefficient vector of length N is the canonical form, so equality is
    coefficientwise.  This is a slightly larger ring than Z[zeta_N] proper
    (no cyclotomic-polynomial reduction); equality in it implies equality of
    all complex evaluations at Nth roots of unity, which is what the exact
    invariance tests need, and it keeps arithmetic elementary.
    """

    __slots__ = ("N", "vec")

    def __init__(self, N: int, vec: Iterable[int]):
        v = tuple(vec)
        if len(v) != N:
            raise ValueError("coefficient vector length must equal N")
        object.__setattr__(self, "N", N)
        object.__setattr__(self, "vec", v)

    def __setattr__(self, name, value):  # pragma: no cover - immutability guard
        raise AttributeError("CyclotomicInt is immutable")

    @staticmethod
    def zero(N: int) -> "CyclotomicInt":
        return CyclotomicInt(N, [0] * N)

    @staticmethod
    def one(N: int) -> "CyclotomicInt":
        return CyclotomicInt(N, [1] + [0] * (N - 1))

    @staticmethod
    def root_power(N: int, exponent: int, coefficient: int = 1) -> "CyclotomicInt":
        """coefficient * A^exponent with A = zeta_N (exponent may be negative)."""
        vec = [0] * N
        vec[exponent % N] = coefficient
        return CyclotomicInt(N, vec)

    def _check(self, other: "CyclotomicInt") -> None:
        if self.N != other.N:
            raise ValueError("mixed root orders")

    def __add__(self, other: "CyclotomicInt") -> "CyclotomicInt":
        self._check(other)
        return CyclotomicInt(self.N, [a + b for a, b in zip(self.vec, other.vec)])

    def __sub__(self, other: "CyclotomicInt") -> "CyclotomicInt":
        self._check(other)
        return CyclotomicInt(self.N, [a - b for a, b in zip(self.vec, other.vec)])

    def __neg__(self) -> "CyclotomicInt":
        return CyclotomicInt(self.N, [-a for a in self.vec])

    def __mul__(self, other: "CyclotomicInt") -> "CyclotomicInt":
        self._check(other)
        N = self.N
        out = [0] * N
        for i, a in enumerate(self.vec):
            if a == 0:
                continue
            for j, b in enumerate(other.vec):
                if b:
                    k = i + j
                    if k >= N:
                        k -= N
                    out[k] += a * b
        return CyclotomicInt(N, out)

    def shifted(self, exponent: int) -> "CyclotomicInt":
        """Multiplication by the monomial A^exponent (a cyclic shift)."""
        N = self.N
        s = exponent % N
        if s == 0:
            return self
        return CyclotomicInt(N, self.vec[N - s :] + self.vec[: N - s])

    def scaled(self, k: int) -> "CyclotomicInt":
        return CyclotomicInt(self.N, [k * a for a in self.vec])

    def __pow__(self, k: int) -> "CyclotomicInt":
        if k < 0:
            raise ValueError("use root_power for monomial inverses")
        out = CyclotomicInt.one(self.N)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def is_zero(self) -> bool:
        return all(a == 0 for a in self.vec)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, CyclotomicInt)
            and self.N == other.N
            and self.vec == other.vec
        )

    def __hash__(self) -> int:
        return hash((self.N, self.vec))

    def __repr__(self) -> str:
        terms = [f"{v}*A^{e}" for e, v in enumerate(self.vec) if v]
        return f"Cyc{self.N}({' + '.join(terms) or '0'})"


def loop_value(N: int) -> CyclotomicInt:
    """delta = -A^2 - A^-2 in Z[x]/(x^N - 1)."""
    return loop_value_laurent().reduce_mod(N)


def twist_value(N: int) -> CyclotomicInt:
    """theta = -A^3 in Z[x]/(x^N - 1)."""
    return twist_value_laurent().reduce_mod(N)


def twist_power(N: int, r: int) -> CyclotomicInt:
    """theta^r for any integer r (theta is a unit monomial)."""
    return CyclotomicInt.root_power(N, 3 * r, 1 if r % 2 == 0 else -1)


def multiplicative_order(N: int, exponent: int) -> int:
    """Order of zeta_N^exponent in the unit circle group: N / gcd(N, exponent)."""
    from math import gcd

    return N // gcd(N, exponent % N if exponent % N else N)
