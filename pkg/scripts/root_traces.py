"""Render digit-by-digit root extraction working tables.

Shows the cube root of 239483190 with the full divisor, the same radicand
with the simplified divisor for contrast, an exact cube root, and the
square root of 2 carried to five decimal places.

Usage: python scripts/root_traces.py
"""

from practica import FULL, SIMPLIFIED, extract_root, render_trace

CASES = [
    (239483190, 3, 0, FULL),
    (239483190, 3, 0, SIMPLIFIED),
    (80621568000, 3, 0, SIMPLIFIED),
    (2, 2, 5, FULL),
]


def main() -> None:
    for radicand, degree, frac_digits, mode in CASES:
        rx = extract_root(radicand, degree, frac_digits=frac_digits, divisor_mode=mode)
        title = f"{radicand} ^ (1/{degree}), {mode} divisor"
        if frac_digits:
            title += f", {frac_digits} decimal places"
        print(title)
        print("=" * len(title))
        print(render_trace(rx))
        print()


if __name__ == "__main__":
    main()
