"""Modified q-Bessel functions evaluated on the lattice z = 2 q^{-n/2}.

Shows the closed S_n-evaluation at lattice points, the order generating
function, the pole (partial-fraction) expansion that continues kind 1 past
|z| = 2, and the large-argument main term closing in as r grows.
"""

from fractions import Fraction

import mpmath as mp

from qrr import QContext
from qrr.qbessel import (asymptotic_main_term, bessel_i, gen_func_sides,
                         i1_continued, mittag_leffler_rhs,
                         special_value_sides)

ctx = QContext.numeric("0.3", precision=50)

print("== lattice special values, nu = 0.7 ==")
with ctx.workdps():
    for n in (0, 2, 5):
        lhs, rhs = special_value_sides(4, Fraction(7, 10), n, ctx)
        print(f"  n={n}: I = {mp.nstr(lhs, 20)}   "
              f"closed form = {mp.nstr(rhs, 20)}")

print("\n== order generating function at (z, t) = (1, 1) ==")
with ctx.workdps():
    lhs, rhs = gen_func_sides(mp.mpf(1), mp.mpf(1), ctx)
    print("  bilateral order sum:", mp.nstr(lhs, 25))
    print("  two-factor product: ", mp.nstr(rhs, 25))

print("\n== pole expansion continues kind 1 to z = 3 (outside |z| < 2) ==")
ctx25 = QContext.numeric("0.25", precision=50)
with ctx25.workdps():
    ml = mittag_leffler_rhs(1, mp.mpf(3), ctx25)
    ic = i1_continued(1, mp.mpf(3), ctx25)
    print("  pole expansion:", mp.nstr(ml, 25))
    print("  quotient form: ", mp.nstr(ic, 25))

print("\n== main term at q = 0.5: relative deviation along r = 2^j ==")
ctx5 = QContext.numeric("0.5", precision=50)
with ctx5.workdps():
    for j in range(4, 11):
        r = mp.mpf(2) ** j
        dev = abs(bessel_i(2, 0, r, ctx5) / asymptotic_main_term(0, r, ctx5) - 1)
        print(f"  j={j:2d}  |I/main - 1| = {mp.nstr(dev, 4)}")
