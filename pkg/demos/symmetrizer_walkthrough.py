"""Walk through the scale-5 example with value cycle (1/62, 25/62, 5/62).

Run:  python3 demos/symmetrizer_walkthrough.py
"""

from fractions import Fraction

from ncsolenoid import (
    AngleSequence,
    NadicInteger,
    QnRational,
    brute_symmetrizer,
    is_simple,
    symmetrizer,
    theta_phase,
)

alpha = AngleSequence(5, Fraction(1, 62), NadicInteger.from_value(Fraction(-1, 62), 5))

print("terms:", [str(alpha.value(n)) for n in range(7)])
print("digits:", [alpha.digit(n) for n in range(7)])
print("period:", alpha.period())
print("simple:", is_simple(alpha))

described = symmetrizer(alpha)
print("symmetrizer:", described.to_json())

g = (QnRational(62, 2, 5), QnRational(-124, 0, 5))
h = (QnRational(7, 1, 5), QnRational(3, 3, 5))
print("Theta at a 62-multiple:", theta_phase(alpha, g, h))
g2 = (QnRational(1, 1, 5), QnRational(0, 0, 5))
print("Theta off the lattice:", theta_phase(alpha, g2, h))

points = brute_symmetrizer(alpha, window_num=130, window_exp=4)
print("brute window points:", len(points))
print("all inside the described lattice:", all(described.contains(p) for p in points))
nums = sorted({abs(x.num) for x, _ in points})
print("numerators that appear:", nums)
