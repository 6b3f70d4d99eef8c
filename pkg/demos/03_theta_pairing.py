"""The Theta pairing: stable even minus odd Tor lengths.

Theta detects how two branches of a singular hypersurface meet.  On the
node f = xy the two coordinate axes pair to +1 (they meet transversely)
while each axis pairs with itself to -1.  The signed Gram matrix is
positive semidefinite, certified by an exact LDL^T.
"""

from theta_lab import (gram, homogeneous_theta_formula,
                       intersection_multiplicity, parse_poly, psd_rank,
                       theta)

V = ["x", "y"]
p = lambda t: parse_poly(t, V)
f = p("x*y")

print("== node f = xy ==")
for a, b in (("x", "y"), ("x", "x")):
    rep = theta([p(a)], [p(b)], f)
    print(f"Theta(R/({a}), R/({b})) = {rep.theta} "
          f"(lengths {rep.l_even}, {rep.l_odd})")

g = gram([[p("x")], [p("y")]], f)
print("Gram:", g.matrix, " signed:", g.signed,
      " PSD:", g.psd, " rank:", psd_rank(g.certificate))

print("\n== Theta vs intersection multiplicity ==")
print("Theta =", theta([p("x")], [p("y")], f).theta,
      " i(0; X, Y) =", intersection_multiplicity([p("x")], [p("y")]))

print("\n== the quadric threefold f = xy + zw ==")
W = ["x", "y", "z", "w"]
q = lambda t: parse_poly(t, W)
fq = q("x*y + z*w")
xz, xw = [q("x"), q("z")], [q("x"), q("w")]
print("Theta(R/(x,z), R/(x,w)) =", theta(xz, xw, fq).theta,
      " degree formula:", homogeneous_theta_formula(2, 1, 1, 1))
