"""Print the polygon-doubling convergence table.

Each doubling of the side count roughly quarters the gap between the
inscribed and circumscribed perimeter bounds; the table makes the
quartic-ish march visible and ends with the sides needed for a
20-decimal enclosure.

Usage: python scripts/pi_convergence.py [max_doublings]
"""

import sys
import time
from fractions import Fraction

from practica import Precision, pi_bounds
from practica.cli import format_decimal, format_magnitude_bound


def main() -> None:
    max_doublings = int(sys.argv[1]) if len(sys.argv) > 1 else 12
    p = Precision(30)
    print(f"{'sides':>12}  {'lower':<25} {'upper':<25} width")
    for k in range(max_doublings + 1):
        b = pi_bounds(target_sides=6 * 2 ** k, p=p)
        print(
            f"{b.sides:>12}  {format_decimal(b.lower, 23):<25} "
            f"{format_decimal(b.upper, 23):<25} {format_magnitude_bound(b.width)}"
        )
    t0 = time.perf_counter()
    b = pi_bounds(target_width=Fraction(1, 10 ** 21), p=p)
    dt = time.perf_counter() - t0
    print()
    print(f"width 1e-21 reached at {b.sides} sides in {dt:.3f}s")
    print(f"  lower ~ {format_decimal(b.lower, 25)}")
    print(f"  upper ~ {format_decimal(b.upper, 25)}")


if __name__ == "__main__":
    main()
