"""Exact rational plane primitives shared by the construction modules."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .numerics import Interval


@dataclass(frozen=True)
class Point2:
    """A plane point with exact rational coordinates."""

    x: Fraction
    y: Fraction

    def __post_init__(self) -> None:
        object.__setattr__(self, "x", Fraction(self.x))
        object.__setattr__(self, "y", Fraction(self.y))


@dataclass(frozen=True)
class PointBounds:
    """A plane point whose coordinates are certified intervals."""

    x: Interval
    y: Interval

    @classmethod
    def exact(cls, p: Point2) -> "PointBounds":
        return cls(Interval.point(p.x), Interval.point(p.y))


def dist_sq(p: Point2, q: Point2) -> Fraction:
    dx, dy = p.x - q.x, p.y - q.y
    return dx * dx + dy * dy


def orient(o: Point2, a: Point2, b: Point2) -> Fraction:
    """Twice the signed area of triangle (o, a, b); zero iff collinear."""
    return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x)


def collinear(o: Point2, a: Point2, b: Point2) -> bool:
    return orient(o, a, b) == 0


def line_intersection(p1: Point2, p2: Point2, q1: Point2, q2: Point2) -> Point2:
    """Exact intersection of lines (p1,p2) and (q1,q2); raises for parallels."""
    dxp, dyp = p2.x - p1.x, p2.y - p1.y
    dxq, dyq = q2.x - q1.x, q2.y - q1.y
    den = dxp * dyq - dyp * dxq
    if den == 0:
        raise ValueError("lines are parallel or coincident")
    t = ((q1.x - p1.x) * dyq - (q1.y - p1.y) * dxq) / den
    return Point2(p1.x + t * dxp, p1.y + t * dyp)
