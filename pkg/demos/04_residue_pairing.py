"""The Milnor algebra and the Grothendieck residue pairing.

For an isolated singularity the Jacobian quotient A_f is finite
dimensional; its dimension is the Milnor number.  The residue gives a
canonical functional on A_f whose induced pairing is nondegenerate.
"""

from theta_lab import Poly, parse_poly
from theta_lab.milnor import (milnor_algebra, rational_det,
                              residue_functional, residue_pairing_matrix)

V = ["x", "y"]
p = lambda t: parse_poly(t, V)

for text in ("x*y", "x^2 + y^3", "x^3 + y^3"):
    f = p(text)
    alg = milnor_algebra(f)
    data = residue_functional(alg)
    mat = residue_pairing_matrix(alg, data)
    print(f"f = {text}")
    print("  mu =", alg.mu, " basis:",
          [Poly.monomial(m).to_string(V) for m in alg.basis])
    print("  certificate exponents a =", data.a)
    print("  pairing matrix:", [[str(v) for v in row] for row in mat])
    print("  det =", rational_det(mat), "(nonzero: nondegenerate)")
    print()
