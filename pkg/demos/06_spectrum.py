"""Quasi-homogeneous spectrum and graded orthogonality.

A quasi-homogeneous f grades its Milnor algebra by the level
l(b) = sum((b_i + 1) w_i).  Levels are symmetric about (n+1)/2, the
residue pairing vanishes off complementary levels, and the twist
operator acts by (-1)^p on the graded pieces.
"""

from fractions import Fraction

from theta_lab import (Poly, ctilde_twisted_pairing,
                       graded_orthogonality_check, parse_poly, spectrum)

V = ["x", "y"]
f = parse_poly("x^3 + y^3", V)
w = [Fraction(1, 3), Fraction(1, 3)]

print("== spectrum of the cusp x^3 + y^3 ==")
for e in spectrum(f, w):
    print(f"  b = {Poly.monomial(e.monomial).to_string(V):4s} "
          f"level {e.level}  unipotent={e.unipotent}  p={e.p}  "
          f"sign={e.ctilde_sign}")

rep = graded_orthogonality_check(f, w)
print("orthogonality holds:", rep.ok)
print("complementary block determinants:",
      {str(k): str(v) for k, v in rep.block_dets.items()})

print("\ntwisted pairing (column signs -1,-1,-1,+1):")
for row in ctilde_twisted_pairing(f, w):
    print("  ", [str(v) for v in row])
