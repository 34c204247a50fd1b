"""Two mean proportionals between given lines, by four classical routes.

Each construction is realized as exact rational geometry plus bracketed
one-dimensional root finding: a coarse scan locates a sign change of
the construction's defect function, bisection narrows it, and the
answers are returned as certified intervals together with residuals of
the two continued-proportion equations AB*y - x**2 and x*BC - y**2.
The defect signs are evaluated as exact rational comparisons (square
roots are eliminated by squaring before comparing), so bisection never
accumulates rounding error; enclosures enter only when the final
bracket is converted to coordinate intervals.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable

from .geometry import Point2, PointBounds, orient
from .numerics import (
    DEFAULT_PRECISION,
    Interval,
    Precision,
    PrecisionError,
    int_nth_root_floor,
    interval_sqrt,
    pow10,
    rat_sqrt_bounds,
)

DEFAULT_TOL = Fraction(1, 10 ** 12)

HERON_APOLLONIUS = "heron_apollonius"
PHILO = "philo"
DIOCLES = "diocles"
NICOMEDES = "nicomedes"


class BracketNotFoundError(RuntimeError):
    """The defect function showed no sign change over the scanned range."""


class NeusisNoSolutionError(BracketNotFoundError):
    """No direction with the requested intercept length was found."""


@dataclass(frozen=True)
class MeanPropProblem:
    """Find x, y with ab : x :: x : y :: y : bc.

    Arguments are swap-normalized so that ab >= bc; ``swapped`` records
    whether the caller's order was reversed (the two means are the same
    numbers either way, read in the opposite order).
    """

    ab: Fraction
    bc: Fraction
    tol: Fraction = DEFAULT_TOL
    p: Precision = DEFAULT_PRECISION
    swapped: bool = field(init=False, default=False)

    def __post_init__(self) -> None:
        ab, bc = Fraction(self.ab), Fraction(self.bc)
        if ab <= 0 or bc <= 0:
            raise ValueError("line lengths must be positive")
        tol = Fraction(self.tol)
        if tol <= 0:
            raise ValueError("tol must be positive")
        if bc > ab:
            ab, bc = bc, ab
            object.__setattr__(self, "swapped", True)
        object.__setattr__(self, "ab", ab)
        object.__setattr__(self, "bc", bc)
        object.__setattr__(self, "tol", tol)


@dataclass(frozen=True)
class MeanPropResult:
    """Certified means and continued-proportion residuals."""

    method: str
    x: Interval
    y: Interval
    residual1: Interval  # ab * y - x**2
    residual2: Interval  # x * bc - y**2
    problem: MeanPropProblem


@dataclass(frozen=True)
class NeusisProblem:
    """Place a line through ``pole`` so the segment cut between the two
    given lines has the prescribed length."""

    line1: tuple[Point2, Point2]
    line2: tuple[Point2, Point2]
    pole: Point2
    intercept_len: Fraction
    allow_parallel: bool = False

    def __post_init__(self) -> None:
        object.__setattr__(self, "intercept_len", Fraction(self.intercept_len))
        if self.intercept_len <= 0:
            raise ValueError("intercept length must be positive")
        for name, (p, q) in (("line1", self.line1), ("line2", self.line2)):
            if p == q:
                raise ValueError(f"{name} needs two distinct points")
            if orient(p, q, self.pole) == 0:
                raise ValueError(f"pole lies on {name}")
        (p1, q1), (p2, q2) = self.line1, self.line2
        d1 = (q1.x - p1.x, q1.y - p1.y)
        d2 = (q2.x - p2.x, q2.y - p2.y)
        if d1[0] * d2[1] - d1[1] * d2[0] == 0 and not self.allow_parallel:
            raise ValueError("given lines are parallel (pass allow_parallel to accept)")


@dataclass(frozen=True)
class NeusisSolution:
    """A certified direction bracket and the resulting intercept."""

    t_bracket: Interval  # parameter of the direction (1 - t**2, 2t)
    q1: PointBounds  # intersection with line1
    q2: PointBounds  # intersection with line2
    intercept: Interval

    @property
    def direction(self) -> tuple[Interval, Interval]:
        t = self.t_bracket
        return (Interval.point(1) - t.square(), 2 * t)


# ----------------------------------------------------------------------
# shared root-finding machinery


def _digits_for(x: Fraction) -> int:
    """Smallest d >= 1 with 10**-d <= x."""
    if x <= 0:
        raise ValueError("width target must be positive")
    d = 1
    while pow10(-d) > x and d < 500:
        d += 1
    return d


def _width_target(prob: MeanPropProblem) -> Fraction:
    # Tight enough that midpoints beat both the relative agreement with
    # the cube-root oracle and the cross-multiplied residual bounds.
    return prob.tol * min(prob.bc, max(Fraction(1), prob.ab) / 8)


def _scan_then_bisect(
    sign_at: Callable[[Fraction], int],
    lo: Fraction,
    hi: Fraction,
    evaluate: Callable[[Fraction, Fraction], tuple[Interval, Interval]],
    target: Fraction,
    samples: int = 64,
    max_iter: int = 500,
) -> tuple[Interval, Interval]:
    """Scan for a sign change, bisect on exact signs, return (x, y) intervals
    once both widths reach the target."""
    xs = [lo + (hi - lo) * Fraction(j, samples) for j in range(samples + 1)]
    bracket = None
    prev_x, prev_s = xs[0], sign_at(xs[0])
    if prev_s == 0:
        bracket = (xs[0], xs[0])
    else:
        for x in xs[1:]:
            s = sign_at(x)
            if s == 0:
                bracket = (x, x)
                break
            if s * prev_s < 0:
                bracket = (prev_x, x)
                break
            prev_x, prev_s = x, s
    if bracket is None:
        raise BracketNotFoundError("defect function has no sign change in range")

    bl, bh = bracket
    s_lo = sign_at(bl)
    for _ in range(max_iter):
        x_iv, y_iv = evaluate(bl, bh)
        if x_iv.width <= target and y_iv.width <= target:
            return x_iv, y_iv
        if bl == bh:
            raise PrecisionError("enclosure too wide at an exact root")
        mid = (bl + bh) / 2
        s_mid = sign_at(mid)
        if s_mid == 0:
            bl = bh = mid
            s_lo = 0
        elif s_lo != 0 and s_mid * s_lo < 0:
            bh = mid
        else:
            bl, s_lo = mid, s_mid
    raise PrecisionError("bisection failed to reach the requested widths")


def _sign(v: Fraction) -> int:
    return (v > 0) - (v < 0)


def _result(method: str, prob: MeanPropProblem, x: Interval, y: Interval) -> MeanPropResult:
    return MeanPropResult(
        method=method,
        x=x,
        y=y,
        residual1=prob.ab * y - x.square(),
        residual2=x * prob.bc - y.square(),
        problem=prob,
    )


def _trivial(method: str, prob: MeanPropProblem) -> MeanPropResult:
    point = Interval.point(prob.ab)
    return _result(method, prob, point, point)


# ----------------------------------------------------------------------
# rectangle methods (shared figure: B=(0,0), A=(0,ab), C=(bc,0), D=(bc,ab))


def solve_heron_apollonius(
    prob: MeanPropProblem, variant: str = "heron"
) -> MeanPropResult:
    """Rotate a line through the rectangle corner B until the two cut
    segments seen from the diagonal midpoint E are equal.

    ``variant="heron"`` drives the defect EF - EG directly (F and G are
    the cuts on the extended sides through D).  ``variant="apollonius"``
    grows a circle about E instead, parametrized by where it crosses
    the horizontal through A, and drives the collinearity of F, B, G;
    both land on the same line and read off x = AF, y = CG.
    """
    a, c = prob.ab, prob.bc
    if a == c:
        return _trivial(HERON_APOLLONIUS, prob)
    target = _width_target(prob)
    wp = Precision(_digits_for(target) + 8)
    e = Point2(c / 2, a / 2)

    if variant == "heron":
        u_lo = Fraction(1, 2)
        u_hi = Fraction(int_nth_root_floor(math.ceil(a / c), 3) + 1)

        def sign_at(u: Fraction) -> int:
            f = Point2(-a / u, a)
            g = Point2(c, -u * c)
            ef_sq = (e.x - f.x) ** 2 + (e.y - f.y) ** 2
            eg_sq = (e.x - g.x) ** 2 + (e.y - g.y) ** 2
            return _sign(ef_sq - eg_sq)

        def evaluate(ul: Fraction, uh: Fraction) -> tuple[Interval, Interval]:
            return Interval(a / uh, a / ul), Interval(ul * c, uh * c)

        x_iv, y_iv = _scan_then_bisect(sign_at, u_lo, u_hi, evaluate, target)
        return _result(HERON_APOLLONIUS, prob, x_iv, y_iv)

    if variant != "apollonius":
        raise ValueError(f"unknown variant {variant!r}")

    # sigma is the (signed) distance from E's abscissa to the circle's
    # cut F on the horizontal through A; the matching vertical cut is
    # s_c = sqrt(sigma**2 + (a**2 - c**2)/4) below C.
    base = (a * a - c * c) / 4
    s_lo_b, s_hi_b = Fraction(c), c / 2 + a

    def sign_at_sigma(sigma: Fraction) -> int:
        q = a / 2 + a * c / (sigma - c / 2)
        return _sign(sigma * sigma + base - q * q)

    def evaluate_sigma(sl: Fraction, sh: Fraction) -> tuple[Interval, Interval]:
        x_iv = Interval(sl - c / 2, sh - c / 2)
        root_lo = rat_sqrt_bounds(sl * sl + base, wp).lo
        root_hi = rat_sqrt_bounds(sh * sh + base, wp).hi
        return x_iv, Interval(root_lo - a / 2, root_hi - a / 2)

    x_iv, y_iv = _scan_then_bisect(sign_at_sigma, s_lo_b, s_hi_b, evaluate_sigma, target)
    return _result(HERON_APOLLONIUS, prob, x_iv, y_iv)


def solve_philo(prob: MeanPropProblem) -> MeanPropResult:
    """Philo's condition on the circle through the rectangle's corners.

    The line through B meets the horizontal through A at F, the vertical
    through C at G, and the circumscribed circle again at O; the sought
    position makes BG = OF.  Both segments carry the common factor
    sqrt(1 + u**2), so the defect sign reduces to an exact rational
    comparison of abscissa differences along the line.
    """
    a, c = prob.ab, prob.bc
    if a == c:
        return _trivial(PHILO, prob)
    target = _width_target(prob)
    u_lo = Fraction(1, 2)
    u_hi = Fraction(int_nth_root_floor(math.ceil(a / c), 3) + 1)

    def sign_at(u: Fraction) -> int:
        t_o = (c - u * a) / (1 + u * u)  # second circle crossing
        t_f = -a / u  # the cut F on y = a
        return _sign(c - (t_o - t_f))  # sign of BG - OF

    def evaluate(ul: Fraction, uh: Fraction) -> tuple[Interval, Interval]:
        return Interval(a / uh, a / ul), Interval(ul * c, uh * c)

    x_iv, y_iv = _scan_then_bisect(sign_at, u_lo, u_hi, evaluate, target)
    return _result(PHILO, prob, x_iv, y_iv)


# ----------------------------------------------------------------------
# cissoid


def cissoid_points(
    radius: Fraction,
    samples: int,
    p: Precision = DEFAULT_PRECISION,
    span: tuple[Fraction, Fraction] = (Fraction(0), Fraction(1)),
) -> list[PointBounds]:
    """Sample the cuspidal curve generated from equal arcs on a circle.

    The circle has center at the origin and the given radius r; the
    cusp diameter runs vertically from A = (0, r) down to the cusp
    D = (0, -r), and E = (r, 0) caps the perpendicular diameter.  For a
    chord at height -m, take H on the circle at that height on E's side
    and its mirror M across the vertical diameter (equal arcs either
    side of E); the emitted point is the intersection of line DM with
    the horizontal through the chord's foot K = (0, -m), namely
    (h*(r-m)/(r+m), -m) with h the half-chord sqrt(r**2 - m**2).

    The sample parameter s runs over ``span`` inside [-1, 1]: |s| scales
    the foot height (s = 0 gives E, |s| = 1 the cusp D) and its sign
    selects the side, so mirrored parameters give points mirrored
    across the vertical diameter.
    """
    r = Fraction(radius)
    if r <= 0:
        raise ValueError("radius must be positive")
    if samples < 2:
        raise ValueError("need at least 2 samples")
    s0, s1 = Fraction(span[0]), Fraction(span[1])
    if not (-1 <= s0 < s1 <= 1):
        raise ValueError("span must be an ordered pair inside [-1, 1]")
    points = []
    for j in range(samples):
        s = s0 + (s1 - s0) * Fraction(j, samples - 1)
        m = r * abs(s)
        chord = rat_sqrt_bounds(r * r - m * m, p)  # the half-chord KH
        x = chord * ((r - m) / (r + m))
        if s < 0:
            x = -x
        points.append(PointBounds(x, Interval.point(-m)))
    return points


def cissoid_arc_defect(
    point: PointBounds, radius: Fraction, p: Precision = DEFAULT_PRECISION
) -> Interval:
    """Re-check a sampled point against the defining mean-proportion
    property DK**2 = KH * KL; the enclosure must contain zero."""
    r = Fraction(radius)
    x, y = point.x, point.y
    dk = y + r  # cusp D = (0, -r) up to the foot K = (0, y)
    kh = interval_sqrt(Interval.point(r * r) - y.square(), p)
    kl = x.magnitude()
    return dk.square() - kh * kl


def solve_diocles(prob: MeanPropProblem) -> MeanPropResult:
    """Intersect the cissoid with the line joining the diameter endpoint
    A = (-r, 0) to the point (0, bc) on the vertical radius (r = ab).

    At the crossing, the half-chord KH and the segment DK are the two
    mean proportionals between AK and KL; rescaling all four lines by
    ab : AK turns them into (ab, x, y, bc).
    """
    r, k = prob.ab, prob.bc
    if r == k:
        return _trivial(DIOCLES, prob)
    target = _width_target(prob)
    wp = Precision(_digits_for(target) + 8)

    def sign_at(m: Fraction) -> int:
        # cissoid height against the secant height, squared exactly
        return _sign(r * r * (r - m) ** 3 - k * k * (r + m) ** 3)

    def evaluate(ml: Fraction, mh: Fraction) -> tuple[Interval, Interval]:
        q_lo = (r - mh) / (r + mh)
        q_hi = (r - ml) / (r + ml)
        y_iv = Interval(r * q_lo, r * q_hi)
        x_iv = Interval(
            r * rat_sqrt_bounds(q_lo, wp).lo, r * rat_sqrt_bounds(q_hi, wp).hi
        )
        return x_iv, y_iv

    x_iv, y_iv = _scan_then_bisect(sign_at, Fraction(0), r, evaluate, target)
    return _result(DIOCLES, prob, x_iv, y_iv)


# ----------------------------------------------------------------------
# conchoid and neusis


def conchoid_points(
    pole_distance: Fraction,
    offset: Fraction,
    samples: int,
    x_range: tuple[Fraction, Fraction],
    p: Precision = DEFAULT_PRECISION,
) -> list[PointBounds]:
    """Upper-branch points of the fixed-offset locus over a base line.

    The base line is y = 0 and the pole sits below it at (0, -d); each
    sampled base point S = (s, 0) is pushed away from the pole by the
    offset e along the ray pole -> S, landing on the upper branch."""
    d, e = Fraction(pole_distance), Fraction(offset)
    if d <= 0 or e <= 0:
        raise ValueError("pole distance and offset must be positive")
    if samples < 2:
        raise ValueError("need at least 2 samples")
    x0, x1 = Fraction(x_range[0]), Fraction(x_range[1])
    if not x0 < x1:
        raise ValueError("x_range must be an ordered pair")
    points = []
    for j in range(samples):
        s = x0 + (x1 - x0) * Fraction(j, samples - 1)
        hyp = rat_sqrt_bounds(s * s + d * d, p)  # |S - pole|
        stretch = e / hyp
        points.append(
            PointBounds(Interval.point(s) + s * stretch, d * stretch)
        )
    return points


def conchoid_quartic_residual(point: PointBounds) -> Interval:
    """Residual of (x**2 + (y+1)**2) * y**2 - (y+1)**2 for the normalized
    curve (pole distance = offset = 1); contains zero for true points."""
    x, y = point.x, point.y
    y1 = y + 1
    return (x.square() + y1.square()) * y.square() - y1.square()


def solve_neusis(
    npb: NeusisProblem,
    p: Precision = DEFAULT_PRECISION,
    select: Callable[[NeusisSolution], bool] | None = None,
    samples: int = 64,
) -> NeusisSolution:
    """Find a line through the pole cutting a segment of the given length
    between the two lines.

    Directions are parametrized as (1 - t**2, 2t) for t in [-1, 1],
    which covers every line direction with rational arithmetic.  A
    coarse scan locates sign changes of |cut|**2 - L**2 (an exact
    rational), bisection narrows each candidate, and a candidate is
    accepted only when interval evaluation over the final bracket
    certifies the intercept within tolerance 10**-digits * max(1, L).
    Sign changes caused by crossing a direction parallel to one of the
    lines fail certification and are discarded.
    """
    L = npb.intercept_len
    tol = pow10(-p.decimal_digits) * max(Fraction(1), L)
    lo_target = (L - tol) ** 2 if L > tol else Fraction(0)
    target_sq = Interval(lo_target, (L + tol) ** 2)
    z = npb.pole
    lines = (npb.line1, npb.line2)

    def cut_points(t: Fraction) -> tuple[Point2, Point2] | None:
        dx, dy = 1 - t * t, 2 * t
        result = []
        for p0, p1 in lines:
            vx, vy = p1.x - p0.x, p1.y - p0.y
            den = dx * vy - dy * vx
            if den == 0:
                return None
            lam = ((p0.x - z.x) * vy - (p0.y - z.y) * vx) / den
            result.append(Point2(z.x + lam * dx, z.y + lam * dy))
        return result[0], result[1]

    def g_sign(t: Fraction) -> int | None:
        pts = cut_points(t)
        if pts is None:
            return None
        q1, q2 = pts
        g = (q1.x - q2.x) ** 2 + (q1.y - q2.y) ** 2 - L * L
        return _sign(g)

    def try_certify(tl: Fraction, th: Fraction) -> NeusisSolution | None:
        t_iv = Interval(tl, th)
        dx = Interval.point(1) - t_iv.square()
        dy = 2 * t_iv
        cuts = []
        for p0, p1 in lines:
            vx, vy = p1.x - p0.x, p1.y - p0.y
            den = dx * vy - dy * vx
            if den.contains(0):
                return None
            lam = ((p0.x - z.x) * vy - (p0.y - z.y) * vx) / den
            cuts.append(PointBounds(z.x + lam * dx, z.y + lam * dy))
        q1, q2 = cuts
        cut_sq = (q1.x - q2.x).square() + (q1.y - q2.y).square()
        if not target_sq.contains_interval(cut_sq):
            return None
        intercept = interval_sqrt(cut_sq, p)
        return NeusisSolution(t_bracket=t_iv, q1=q1, q2=q2, intercept=intercept)

    ts = [Fraction(-1) + Fraction(2 * j, samples) for j in range(samples + 1)]
    signs = [g_sign(t) for t in ts]
    candidates: list[tuple[Fraction, Fraction]] = []
    for j, (t, s) in enumerate(zip(ts, signs)):
        if s == 0:
            candidates.append((t, t))
        if j + 1 <= samples:
            s2 = signs[j + 1] if j + 1 < len(signs) else None
            if s is not None and s2 is not None and s * s2 < 0:
                candidates.append((t, ts[j + 1]))

    for tl, th in candidates:
        s_lo = g_sign(tl)
        for _ in range(300):
            sol = try_certify(tl, th)
            if sol is not None:
                if select is None or select(sol):
                    return sol
                break  # certified but not the wanted branch
            if tl == th:
                break
            mid = (tl + th) / 2
            s_mid = g_sign(mid)
            if s_mid is None:
                break  # bracket straddles a parallel direction only
            if s_mid == 0:
                tl = th = mid
            elif s_lo is not None and s_mid * s_lo < 0:
                th = mid
            else:
                tl, s_lo = mid, s_mid
    raise NeusisNoSolutionError(
        f"no direction with intercept {L} certified over {samples} scanned samples"
    )


def solve_nicomedes(prob: MeanPropProblem) -> MeanPropResult:
    """The conchoid-compass route, reduced to its neusis kernel.

    With the given lines at right angles (B at the corner, A above, C
    beside), the classical auxiliary points are D and E (midpoints of
    the sides), G on CB extended with the side-line through the far
    rectangle corner, and a point Z below E with CZ equal to half of
    AB.  The neusis then slides a line through Z cutting the line
    through C parallel to GZ and the base line so that the cut segment
    equals half of AB; where it meets the base line (K) and where KL
    meets the vertical axis (M) read off the means x = CK, y = MA.
    """
    a, c = prob.ab, prob.bc
    if a == c:
        return _trivial(NICOMEDES, prob)
    target = _width_target(prob)
    base_digits = _digits_for(target)

    corner_far = Point2(c, a)  # L, opposite the right angle at B
    c_pt = Point2(c, Fraction(0))
    z_sq = (a * a - c * c) / 4
    rn, rd = math.isqrt(z_sq.numerator), math.isqrt(z_sq.denominator)
    if rn * rn == z_sq.numerator and rd * rd == z_sq.denominator:
        z_len = Fraction(rn, rd)
    else:
        z_len = rat_sqrt_bounds(z_sq, Precision(2 * base_digits + 12)).mid
    pole = Point2(c / 2, -z_len)
    # G = (-c, 0) always: the line through the far corner and the midpoint
    # of AB meets the base line there.  The neusis line1 runs through C
    # parallel to G -> pole.
    theta_line = (c_pt, Point2(c_pt.x + 3 * c / 2, -z_len))
    base_line = (Point2(Fraction(0), Fraction(0)), c_pt)
    npb = NeusisProblem(
        line1=theta_line, line2=base_line, pole=pole, intercept_len=a / 2
    )

    def beyond_c(sol: NeusisSolution) -> bool:
        return sol.q2.x.lo > c

    for extra in (4, 10, 18, 30):
        sol = solve_neusis(npb, Precision(base_digits + extra), select=beyond_c)
        x_k = sol.q2.x
        x_iv = x_k - c
        m_height = (x_k * a) / (x_k - c)
        y_iv = m_height - a
        if x_iv.width <= target and y_iv.width <= target:
            return _result(NICOMEDES, prob, x_iv, y_iv)
    raise PrecisionError("neusis enclosure failed to reach the requested widths")


METHODS: dict[str, Callable[[MeanPropProblem], MeanPropResult]] = {
    HERON_APOLLONIUS: solve_heron_apollonius,
    PHILO: solve_philo,
    DIOCLES: solve_diocles,
    NICOMEDES: solve_nicomedes,
}


def scale_solid_ratio(
    edge: Fraction,
    ratio: Fraction,
    method: str = HERON_APOLLONIUS,
    tol: Fraction = DEFAULT_TOL,
    p: Precision = DEFAULT_PRECISION,
) -> Interval:
    """Edge of the solid scaled in volume by ``ratio``: edge times the
    cube root of the ratio, read off the second mean proportional."""
    edge, ratio = Fraction(edge), Fraction(ratio)
    if edge <= 0 or ratio <= 0:
        raise ValueError("edge and ratio must be positive")
    if method not in METHODS:
        raise ValueError(f"unknown method {method!r}")
    if ratio == 1:
        return Interval.point(edge)
    prob = MeanPropProblem(ab=ratio * edge, bc=edge, tol=tol, p=p)
    res = METHODS[method](prob)
    return res.x if prob.swapped else res.y


@dataclass(frozen=True)
class CurveSampler:
    """Configuration for emitting certified curve points."""

    kind: str
    sample_count: int
    radius: Fraction | None = None
    pole_distance: Fraction | None = None
    offset: Fraction | None = None
    x_range: tuple[Fraction, Fraction] | None = None
    span: tuple[Fraction, Fraction] | None = None

    def __post_init__(self) -> None:
        if self.sample_count < 2:
            raise ValueError("need at least 2 samples")
        if self.kind == "cissoid":
            radius = Fraction(self.radius if self.radius is not None else 1)
            if radius <= 0:
                raise ValueError("radius must be positive")
            object.__setattr__(self, "radius", radius)
        elif self.kind == "conchoid":
            d = Fraction(self.pole_distance if self.pole_distance is not None else 1)
            e = Fraction(self.offset if self.offset is not None else 1)
            if d <= 0 or e <= 0:
                raise ValueError("pole distance and offset must be positive")
            object.__setattr__(self, "pole_distance", d)
            object.__setattr__(self, "offset", e)
            if self.x_range is None:
                object.__setattr__(self, "x_range", (Fraction(0), Fraction(21)))
        else:
            raise ValueError(f"unknown curve kind {self.kind!r}")

    def sample(self, p: Precision = DEFAULT_PRECISION) -> list[PointBounds]:
        if self.kind == "cissoid":
            span = self.span if self.span is not None else (Fraction(0), Fraction(1))
            return cissoid_points(self.radius, self.sample_count, p, span)
        return conchoid_points(
            self.pole_distance, self.offset, self.sample_count, self.x_range, p
        )
