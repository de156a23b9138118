"""
How the refined term approaches the true remainder
==================================================

W is the remainder after optimally truncating the algebraic series.  Adding
terms (M) or moving out in x should shrink |W - E|.
"""

from fractions import Fraction

from stokesweber.harness import RunConfig, sweep

config = RunConfig(a=Fraction(1, 4), x=6)
print("M    |W - E|       estimate")
for row in sweep("M", range(1, 7), config):
    print(f"{row['M']:>2}   {row['abs_diff']:>12}  {row['error_estimate']:>12}")

config = RunConfig(a=Fraction(1), M=6, kind="odd")
print()
print("x    relative |W - E|")
for row in sweep("x", [2, 3, 4, 5, 6, 8], config):
    print(f"{row['x']:>2}   {row['rel_diff']}")
