"""Laurent polynomials in one variable A with integer coefficients.

Just enough exact ring arithmetic for bracket polynomials: addition,
multiplication, integer powers, and unit comparison.  Coefficients are
Python ints, exponents may be negative, and zero coefficients are never
stored.
"""

from __future__ import annotations

from dataclasses import dataclass, field


@dataclass(frozen=True)
class Laurent:
    coeffs: tuple[tuple[int, int], ...] = field(default=())
    """Sorted (exponent, coefficient) pairs with nonzero coefficients."""

    @classmethod
    def from_dict(cls, d: dict[int, int]) -> "Laurent":
        return cls(tuple(sorted((e, c) for e, c in d.items() if c != 0)))

    @classmethod
    def zero(cls) -> "Laurent":
        return cls(())

    @classmethod
    def one(cls) -> "Laurent":
        return cls(((0, 1),))

    @classmethod
    def unit(cls, exponent: int, sign: int = 1) -> "Laurent":
        """The monomial sign * A^exponent."""
        return cls(((exponent, sign),))

    def is_zero(self) -> bool:
        return not self.coeffs

    def __add__(self, other: "Laurent") -> "Laurent":
        d = dict(self.coeffs)
        for e, c in other.coeffs:
            d[e] = d.get(e, 0) + c
        return Laurent.from_dict(d)

    def __neg__(self) -> "Laurent":
        return Laurent(tuple((e, -c) for e, c in self.coeffs))

    def __sub__(self, other: "Laurent") -> "Laurent":
        return self + (-other)

    def __mul__(self, other: "Laurent") -> "Laurent":
        d: dict[int, int] = {}
        for e1, c1 in self.coeffs:
            for e2, c2 in other.coeffs:
                e = e1 + e2
                d[e] = d.get(e, 0) + c1 * c2
        return Laurent.from_dict(d)

    def __pow__(self, k: int) -> "Laurent":
        if k < 0:
            raise ValueError("negative powers are not defined here")
        out = Laurent.one()
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def shift(self, k: int) -> "Laurent":
        """Multiply by A^k."""
        return Laurent(tuple((e + k, c) for e, c in self.coeffs))

    def min_degree(self) -> int:
        if self.is_zero():
            raise ValueError("zero polynomial has no degree")
        return self.coeffs[0][0]

    def max_degree(self) -> int:
        if self.is_zero():
            raise ValueError("zero polynomial has no degree")
        return self.coeffs[-1][0]

    def as_unit(self) -> tuple[int, int] | None:
        """(k, sign) when the polynomial is exactly sign * A^k, else None."""
        if len(self.coeffs) == 1 and self.coeffs[0][1] in (1, -1):
            return self.coeffs[0][0], self.coeffs[0][1]
        return None

    def __str__(self) -> str:
        if self.is_zero():
            return "0"
        parts = []
        for e, c in reversed(self.coeffs):
            if e == 0:
                term = str(abs(c))
            else:
                mag = "" if abs(c) == 1 else f"{abs(c)}*"
                term = f"{mag}A^{e}" if e != 1 else f"{mag}A"
            if not parts:
                parts.append(term if c > 0 else f"-{term}")
            else:
                parts.append(f"+ {term}" if c > 0 else f"- {term}")
        return " ".join(parts)


A = Laurent.unit(1)
A_INV = Laurent.unit(-1)

#: the value of a closed loop relative to the empty diagram: -A^2 - A^-2
LOOP = Laurent(((-2, -1), (2, -1)))


def equal_up_to_unit(p: Laurent, q: Laurent) -> bool:
    """True when p = ±A^k q for some integer k."""
    if p.is_zero() or q.is_zero():
        return p.is_zero() and q.is_zero()
    k = p.max_degree() - q.max_degree()
    shifted = q.shift(k)
    return p == shifted or p == -shifted
