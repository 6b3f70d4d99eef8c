"""Standard bases over the local ring at the origin.

The engine works with a local order (1 is the largest monomial), so
membership questions are answered in the localized polynomial ring:
x lies in the ideal (x - x^2) because 1 - x is invertible near 0.
"""

from theta_lab import (length_of_quotient, lift, normal_form, parse_poly,
                       std_basis, syzygies)

V = ["x", "y"]
p = lambda t: parse_poly(t, V)

print("== membership in the local ring ==")
print("x in (x - x^2)?", not normal_form(p("x"), [p("x - x^2")]))
print("y in (x)?      ", not normal_form(p("y"), [p("x")]))

print("\n== lift with unit denominators ==")
(num, den), = lift(p("x"), [p("x - x^2")])
print(f"x = ({num.to_string(V)}) / ({den.to_string(V)}) * (x - x^2)")

print("\n== lengths of Artinian quotients ==")
res = length_of_quotient([p("x"), p("y^3")], rank=1)
print("dim Q[[x,y]]/(x, y^3) =", res.value,
      "with basis", [m for (_, m) in res.std_monomials])

print("\n== syzygies ==")
for s in syzygies([p("x^2"), p("x*y"), p("y^2")]):
    print("relation:", [c.to_string(V) for c in s.components])
