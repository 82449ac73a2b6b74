"""Left fractions ``den⁻¹·num`` over the cone of a germ."""

from dataclasses import dataclass
from typing import Dict, Sequence

from pydantic import BaseModel, ConfigDict

from src.germ.cone import Germ, Word, format_word


@dataclass(frozen=True)
class GermFraction:
    """The group element ``den⁻¹·num``; both parts are right normal words."""

    den: Word = ()
    num: Word = ()

    def to_dict(self) -> Dict[str, list]:
        return {"den": list(self.den), "num": list(self.num)}

    def __str__(self) -> str:
        if not self.den:
            return format_word(self.num)
        inverse = f"({format_word(self.den)})⁻¹"
        return inverse if not self.num else f"{inverse}·{format_word(self.num)}"


def reduce_fraction(germ: Germ, den: Sequence[str], num: Sequence[str]) -> GermFraction:
    """Cancel the largest common left divisor of ``den`` and ``num``.

    Left divisors are right divisors in the opposite germ, where the words are
    read backwards.
    """
    op = germ.opposite
    _, den_rest, num_rest = op.join_with_cofactors(tuple(reversed(den)), tuple(reversed(num)))
    return GermFraction(
        den=germ.right_normal_form(tuple(reversed(den_rest))),
        num=germ.right_normal_form(tuple(reversed(num_rest))),
    )


def embed(germ: Germ, g: Sequence[str]) -> GermFraction:
    return GermFraction(den=(), num=germ.right_normal_form(g))


def s_power(germ: Germ, n: int) -> GermFraction:
    """``s^n``; ``s = Δ⁻¹`` is the strong order unit."""
    if n >= 0:
        return GermFraction(den=germ.delta_power(n), num=())
    return GermFraction(den=(), num=germ.delta_power(-n))


def fraction_mul(germ: Germ, f1: GermFraction, f2: GermFraction) -> GermFraction:
    """``(a⁻¹b)(c⁻¹d) = ((b → c)a)⁻¹((c → b)d)``."""
    a, b = f1.den, f1.num
    c, d = f2.den, f2.num
    den = germ.mul(germ.arrow(b, c), a)
    num = germ.mul(germ.arrow(c, b), d)
    return reduce_fraction(germ, den, num)


def fraction_inverse(f: GermFraction) -> GermFraction:
    return GermFraction(den=f.num, num=f.den)


def fraction_deg(germ: Germ, f: GermFraction) -> int:
    return germ.deg(f.num) - germ.deg(f.den)


def in_cone(f: GermFraction) -> bool:
    return not f.den


def fraction_leq(germ: Germ, f1: GermFraction, f2: GermFraction) -> bool:
    """``f1 ≤ f2`` iff ``f1·f2⁻¹`` lies in the cone."""
    return in_cone(fraction_mul(germ, f1, fraction_inverse(f2)))


def _shift_into_cone(germ: Germ, *fs: GermFraction) -> int:
    return max(len(f.den) for f in fs)


def fraction_meet(germ: Germ, f1: GermFraction, f2: GermFraction) -> GermFraction:
    """Meet in the group: shift both into the cone by ``Δ^n``, meet, shift back."""
    n = _shift_into_cone(germ, f1, f2)
    shift = s_power(germ, -n)
    g1 = fraction_mul(germ, f1, shift)
    g2 = fraction_mul(germ, f2, shift)
    return fraction_mul(germ, embed(germ, germ.meet(g1.num, g2.num)), s_power(germ, n))


def fraction_join(germ: Germ, f1: GermFraction, f2: GermFraction) -> GermFraction:
    n = _shift_into_cone(germ, f1, f2)
    shift = s_power(germ, -n)
    g1 = fraction_mul(germ, f1, shift)
    g2 = fraction_mul(germ, f2, shift)
    return fraction_mul(germ, embed(germ, germ.join(g1.num, g2.num)), s_power(germ, n))


class FractionOps(BaseModel):
    """Result of :func:`fraction_ops`."""

    model_config = ConfigDict(arbitrary_types_allowed=True)

    product: GermFraction
    inverse: GermFraction
    leq: bool
    deg: int


def fraction_ops(germ: Germ, f1: GermFraction, f2: GermFraction) -> FractionOps:
    """Product ``f1·f2``, the inverse of ``f1``, ``f1 ≤ f2`` and ``deg(f1)``."""
    f1 = reduce_fraction(germ, f1.den, f1.num)
    f2 = reduce_fraction(germ, f2.den, f2.num)
    return FractionOps(
        product=fraction_mul(germ, f1, f2),
        inverse=fraction_inverse(f1),
        leq=fraction_leq(germ, f1, f2),
        deg=fraction_deg(germ, f1),
    )
