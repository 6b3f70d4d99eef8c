"""Chern-character forms of matrix factorizations.

From a pair (A, B) one builds omega^i = tr((dA ^ dB)^i) and
eta^i = tr(A dB (dA ^ dB)^i) with d(eta^{i-1}) = omega^i.  When the
variable count is even the top omega reduces to a class in the Milnor
algebra, and its residue pairing reproduces Theta up to one scalar.
"""

from theta_lab import mf_validate, parse_poly, theta_vs_residue

V = ["x", "y"]
p = lambda t: parse_poly(t, V)
f = p("x*y")

mx = mf_validate([[p("x")]], [[p("y")]], f)   # R/(x)
my = mf_validate([[p("y")]], [[p("x")]], f)   # R/(y)

from theta_lab import chern_forms, chern_top_class

cf = chern_forms(mx)
print("omega^1 =", {k: v.to_string(V) for k, v in cf.omega[0].parts.items()})
print("eta^0   =", {k: v.to_string(V) for k, v in cf.eta[0].parts.items()})
print("d(eta^0) == omega^1:", cf.eta[0].d() == cf.omega[0])
print("top classes:", chern_top_class(mx).to_string(V),
      "and", chern_top_class(my).to_string(V))

print("\n== Theta against the residue pairing of Chern classes ==")
rep = theta_vs_residue([mx, my], f)
print("T =", rep.t_matrix)
print("R =", rep.r_matrix)
print("T = c*R with c =", rep.scalar, " consistent:", rep.consistent)
