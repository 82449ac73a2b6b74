from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from sympy import isprime

from src.errors import InvalidParams

Rational = Union[int, Fraction]

# Valuation reported for zero; larger than any exponent that occurs in practice
INFINITE_VALUATION = 1 << 62


def valuation(x: Rational, p: int) -> int:
    """p-adic valuation of a rational number (``INFINITE_VALUATION`` for zero)."""
    x = Fraction(x)
    if x == 0:
        return INFINITE_VALUATION
    v = 0
    num, den = x.numerator, x.denominator
    while num % p == 0:
        num //= p
        v += 1
    while den % p == 0:
        den //= p
        v -= 1
    return v


def is_integral(x: Rational, p: int) -> bool:
    """Whether ``x`` lies in the local ring Z_(p)."""
    return Fraction(x).denominator % p != 0


@dataclass(frozen=True)
class BeamParams:
    """Coefficient data of a coordinatized beam: R = Z localized at ``p``, rank ``delta``.

    Attributes:
        p: The prime (uniformizer of R).
        delta: Rank of the ambient module R^delta.
    """

    p: int
    delta: int

    def __post_init__(self) -> None:
        if not isinstance(self.p, int) or not isprime(self.p):
            raise InvalidParams(f"p must be a prime, got {self.p!r}")
        if not isinstance(self.delta, int) or self.delta < 1:
            raise InvalidParams(f"delta must be a positive integer, got {self.delta!r}")

    def __str__(self) -> str:
        return f"(p={self.p}, delta={self.delta})"
