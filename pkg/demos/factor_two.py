"""
The factor of two in the standard exponentially small term
==========================================================

At a = 1/2 the even solution is exactly exp(-x^2/2) and has no algebraic part.
The textbook connection formula doubles it; the refined one does not.
"""

from fractions import Fraction

from stokesweber import PrecisionContext, compare

ctx = PrecisionContext(50)
for x in (3, 4, 6, 8):
    rep = compare("even", Fraction(1, 2), x, 6, ctx)
    print(
        f"x = {x}:  W = {float(rep.residual_W):.6e}"
        f"  refined = {float(rep.refined_E.value):.6e}"
        f"  standard/W = {float(rep.ratio_standard_over_W):.12f}"
    )

# the odd solution behaves the same way at a = 3/2, where w2 = x exp(-x^2/2)
rep = compare("odd", Fraction(3, 2), 6, 6, ctx)
print("odd, a = 3/2, x = 6: standard/W =", float(rep.ratio_standard_over_W))
