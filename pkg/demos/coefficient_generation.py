"""
Generating the late-term coefficients exactly
=============================================

Inverts the phase map, builds the G polynomials and the A_j, B_j that feed
the exponentially small part.
"""

from fractions import Fraction

from stokesweber import (
    KummerParams,
    TruncationSpec,
    a_coefficients,
    b_coefficients,
    ghat_polynomial,
    invert_phase_map,
    verify_phase_identity,
)

# t(w) solving t - log t - 1 = w^2/2, with t = 1 + w + ...
t = invert_phase_map(8)
print("t(w) coefficients:", [str(c) for c in t.coeffs])
print("identity holds:", verify_phase_identity(t))

# the even-order polynomials, scaled by 6^k to clear the worst denominators
for k in range(4):
    print(f"Ghat_{2 * k}(gamma) =", [str(c) for c in ghat_polynomial(k).coeffs])

# coefficients for a = 1/4 with alpha = 1/4 (the optimal choice at x = 6)
p = KummerParams.from_weber("even", Fraction(1, 4))
A = a_coefficients(p, 6)
B = b_coefficients(p, TruncationSpec(18, Fraction(1, 4)), 6)
for j, (av, bv) in enumerate(zip(A, B)):
    print(f"{j}  A = {float(av):+.10f}  B = {float(bv):+.10f}")
