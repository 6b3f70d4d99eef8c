"""Matrix factorizations from module presentations.

Over the hypersurface ring R = P/(f), every module eventually resolves
2-periodically; the periodic part is a pair of square matrices with
A*B = B*A = f*I.  The extractor finds that pair by iterated syzygies.
"""

from theta_lab import (ModulePresentation, mf_from_module, mf_validate,
                       parse_poly)

V = ["x", "y", "z"]
p = lambda t: parse_poly(t, V)
f = p("x*y - z^2")


def show(m, label):
    print(label)
    for name, mat in (("A", m.a), ("B", m.b)):
        rows = ["[" + ", ".join(e.to_string(V) for e in row) + "]"
                for row in mat]
        print(f"  {name} = [" + "; ".join(rows) + "]")


print("== a ruling line on the quadric cone ==")
pres = ModulePresentation.from_ideal([p("x"), p("z")], f)
show(mf_from_module(pres), "M = R/(x, z):")

print("\n== an Artinian module needs syzygy steps first ==")
pres2 = ModulePresentation.from_ideal([p("x"), p("y"), p("z")], f)
m2 = mf_from_module(pres2)
print(f"R/(x, y, z) stabilizes to a size-{m2.size} factorization")

print("\n== validation rejects wrong pairs ==")
try:
    mf_validate([[p("x")]], [[p("x")]], f)
except Exception as e:
    print("rejected:", e)
