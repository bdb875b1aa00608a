"""
Finite rings from a spec string
===============================

Residue rings, monomial quotients and products, all with elements
encoded as small integers and arithmetic done through lookup tables.
"""

from zdlab import nilradical, pow_trajectory, ring_from_spec, zero_divisor_set

# a residue ring: elements are 0..n-1
z8 = ring_from_spec("Z8")
print(z8, "has", z8.size, "elements")
print("2 * 4 =", z8.mul(2, 4))
print("Z(Z8) =", sorted(zero_divisor_set(z8)))
print("Nil(Z8) =", nilradical(z8).elements)

# nilpotency index: the first power that vanishes
for x in (2, 6):
    traj = pow_trajectory(z8, x)
    print(f"powers of {x}: {traj.powers}, index {traj.index}")

# a monomial quotient; the basis is the set of standard monomials
quot = ring_from_spec("Z2[X,Y]/(X^3, X^2*Y, Y^2)")
print(quot.size, "elements, basis", quot.basis)
x, y = quot.variable("X"), quot.variable("Y")
xy = quot.mul(x, y)
print(quot.label(x), "*", quot.label(xy), "=", quot.label(quot.mul(x, xy)))

# products are componentwise
prod = ring_from_spec("Z2 x Z3")
a = prod.encode((1, 2))
print(prod.label(a), "squared is", prod.label(prod.mul(a, a)))
