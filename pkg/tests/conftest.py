from fractions import Fraction

from sigma_lab import BoundedReal


def assert_encloses(value: BoundedReal, decimal: str, slack_digits: int = 25):
    """The enclosure must be consistent with a frozen reference decimal.

    The reference is accurate to its printed digits; the enclosure must
    reach within 10^-slack_digits of it on both sides.
    """
    ref = Fraction(decimal)
    eps = Fraction(1, 10**slack_digits)
    assert value.lo <= ref + eps, f"lower bound {value.lo} above reference {decimal}"
    assert value.hi >= ref - eps, f"upper bound {value.hi} below reference {decimal}"


def assert_tight(value: BoundedReal, width_bound: Fraction = Fraction(1, 10**20)):
    assert value.width <= width_bound, f"enclosure too wide: {value.width}"


def overlap(a: BoundedReal, b: BoundedReal) -> bool:
    return not (a.hi < b.lo or b.hi < a.lo)
