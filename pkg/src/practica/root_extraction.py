"""Digit-by-digit extraction of nth roots with full working traces.

The algorithm is the classical longhand scheme: mark off the radicand
into "points" of n digits from the right (each point yields one digit
of the root), take the first digit from a table of nth powers, then for
every further point divide by a divisor assembled from the binomial
"special numbers" C(n,k) * 10**(n-k) to guess the next digit, correct
the guess downward until the subtrahend (10r + d)**n - (10r)**n fits,
and carry the remainder into the next point.  Fractional digits come
from appending n zeros per requested digit before grouping.
"""

from __future__ import annotations

from dataclasses import dataclass

from .numerics import binomial_table

FULL = "full"
SIMPLIFIED = "simplified"


@dataclass(frozen=True)
class SpecialNumbers:
    """The divisor coefficients C(n,k) * 10**(n-k) for k = 1 .. n-1."""

    degree: int
    values: tuple[int, ...]

    @classmethod
    def for_degree(cls, degree: int) -> "SpecialNumbers":
        if degree < 2:
            raise ValueError(f"degree must be at least 2, got {degree}")
        row = binomial_table(degree)[degree]
        values = tuple(row[k] * 10 ** (degree - k) for k in range(1, degree))
        return cls(degree, values)


@dataclass(frozen=True)
class TraceStep:
    """One point of the extraction, with every intermediate quantity.

    ``divisor`` is 0 on steps where the root so far is zero (the first
    digit comes straight from the power table, not from a division).
    """

    point_value: int
    divisor: int
    trial_digit: int
    corrected_digit: int
    subtrahend: int
    remainder_after: int


@dataclass(frozen=True)
class RootExtraction:
    """The result and complete trace of one longhand root extraction.

    With R the concatenation of ``digits`` read as an integer:
    R**degree <= radicand * 10**(degree*frac_digits) < (R+1)**degree
    and ``remainder`` is the exact difference on the left.
    """

    radicand: int
    degree: int
    frac_digits: int
    digits: tuple[int, ...]
    remainder: int
    steps: tuple[TraceStep, ...]

    @property
    def integer_digits(self) -> tuple[int, ...]:
        return self.digits[: len(self.digits) - self.frac_digits]

    @property
    def fractional_digits(self) -> tuple[int, ...]:
        return self.digits[len(self.digits) - self.frac_digits :]

    @property
    def root_scaled(self) -> int:
        """The digits as one integer (root * 10**frac_digits)."""
        value = 0
        for d in self.digits:
            value = value * 10 + d
        return value

    def root_string(self) -> str:
        ipart = "".join(str(d) for d in self.integer_digits)
        if not self.frac_digits:
            return ipart
        fpart = "".join(str(d) for d in self.fractional_digits)
        return f"{ipart}.{fpart}"


def digit_power_table(n: int) -> list[int]:
    """d**n for d = 1 .. 9, the table used to pick the first digit."""
    if n < 2:
        raise ValueError(f"degree must be at least 2, got {n}")
    return [d ** n for d in range(1, 10)]


def group_points(N: int, n: int) -> list[int]:
    """Groups of n decimal digits of N from the right.

    The leftmost group carries 1..n digits; concatenating all groups
    (with zero padding on the inner ones) reproduces N.
    """
    if n < 2:
        raise ValueError(f"degree must be at least 2, got {n}")
    if N < 0:
        raise ValueError(f"radicand must be nonnegative, got {N}")
    s = str(N)
    first = len(s) % n or n
    return [int(s[:first])] + [int(s[i : i + n]) for i in range(first, len(s), n)]


def form_divisor(root_so_far: int, sp: SpecialNumbers, mode: str = FULL) -> int:
    """Divisor for the next digit trial.

    Full mode sums every special number weighted by the matching power
    of the root so far; simplified mode keeps only the leading term
    n * 10**(n-1) * r**(n-1), which underestimates the full divisor but
    is cheap enough to carry in one's head.
    """
    if root_so_far < 1:
        raise ValueError("divisor is only defined once a leading digit exists")
    n = sp.degree
    if mode == SIMPLIFIED:
        return sp.values[0] * root_so_far ** (n - 1)
    if mode != FULL:
        raise ValueError(f"unknown divisor mode {mode!r}")
    return sum(
        sp.values[k - 1] * root_so_far ** (n - k) for k in range(1, n)
    )


def extract_root(
    N: int,
    n: int,
    frac_digits: int = 0,
    divisor_mode: str = FULL,
) -> RootExtraction:
    """Run the longhand algorithm and record every step.

    The first digit of each extraction is the largest d with
    d**n <= leading point.  Every later digit starts from the trial
    min(9, point // divisor) and is decremented until the subtrahend
    (10r + d)**n - (10r)**n no longer exceeds the point.
    """
    if not isinstance(N, int) or isinstance(N, bool):
        raise TypeError("radicand must be an integer")
    if N < 0:
        raise ValueError(f"radicand must be nonnegative, got {N}")
    if n < 2:
        raise ValueError(f"degree must be at least 2, got {n}")
    if frac_digits < 0:
        raise ValueError(f"frac_digits must be nonnegative, got {frac_digits}")
    if divisor_mode not in (FULL, SIMPLIFIED):
        raise ValueError(f"unknown divisor mode {divisor_mode!r}")

    sp = SpecialNumbers.for_degree(n)
    groups = group_points(N, n) + [0] * frac_digits

    steps: list[TraceStep] = []
    root = 0
    remainder = 0
    for group in groups:
        point = remainder * 10 ** n + group
        if root == 0:
            # Power-table rule: no divisor exists yet.
            digit = 0
            for d in range(9, 0, -1):
                if d ** n <= point:
                    digit = d
                    break
            divisor = 0
            trial = digit
        else:
            divisor = form_divisor(root, sp, divisor_mode)
            trial = min(9, point // divisor)
            digit = trial
            while (10 * root + digit) ** n - (10 * root) ** n > point:
                digit -= 1
        subtrahend = (10 * root + digit) ** n - (10 * root) ** n
        remainder = point - subtrahend
        steps.append(TraceStep(point, divisor, trial, digit, subtrahend, remainder))
        root = 10 * root + digit

    return RootExtraction(
        radicand=N,
        degree=n,
        frac_digits=frac_digits,
        digits=tuple(s.corrected_digit for s in steps),
        remainder=remainder,
        steps=tuple(steps),
    )


def render_trace(rx: RootExtraction) -> str:
    """Deterministic plain-text table of the extraction, one row per step."""
    header = ("step", "point", "divisor", "trial", "digit", "subtrahend", "remainder")
    rows = [
        (
            str(i + 1),
            str(s.point_value),
            str(s.divisor),
            str(s.trial_digit),
            str(s.corrected_digit),
            str(s.subtrahend),
            str(s.remainder_after),
        )
        for i, s in enumerate(rx.steps)
    ]
    widths = [
        max(len(header[c]), max(len(r[c]) for r in rows)) for c in range(len(header))
    ]
    lines = [
        "  ".join(h.rjust(w) for h, w in zip(header, widths)),
        "  ".join("-" * w for w in widths),
    ]
    lines += ["  ".join(f.rjust(w) for f, w in zip(row, widths)) for row in rows]
    lines.append(f"root {rx.root_string()}  remainder {rx.remainder}  (degree {rx.degree})")
    return "\n".join(lines)
