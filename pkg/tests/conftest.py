from fractions import Fraction

from pointline import PointSet, point


def pset(*coords) -> PointSet:
    """Build a PointSet from (x, y) tuples of ints/Fractions/strings."""
    return PointSet.of(point(Fraction(x), Fraction(y)) for x, y in coords)
