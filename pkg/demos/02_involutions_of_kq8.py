"""Enumerate the involutions of V(KQ8) and compare them with 1 + I(Omega(Q8)).

Run: python3 demos/02_involutions_of_kq8.py
"""

from goodgroups.algebra import GF2, GF4, AlgebraElement, augmentation_ideal, format_element
from goodgroups.groups import omega_subgroup, todd_coxeter
from goodgroups.presentation import builtin
from goodgroups.units import enumerate_involutions, omega_v_equals_ideal, quadratic_data

q8 = todd_coxeter(builtin("Q8"))
invs = list(enumerate_involutions(q8, GF2))
print(f"{len(invs)} involutions in V(GF(2)Q8); a few of them:")
for x in invs[:5]:
    print("  ", format_element(x))

# Every z with z^2 = 0 lies in the linear space W; the search only walks W
# modulo the radical of z*u + u*z, where squaring is additive.
qd = quadratic_data(q8, GF2)
print(f"dim W = {qd.kernel_dim}, radical dim = {len(qd.radical)}, coordinates walked = {qd.enum_dim}")

ideal = augmentation_ideal(q8, omega_subgroup(q8))
one = AlgebraElement.one(q8).to_int()
inside = all((x.to_int() ^ one) in ideal for x in invs)
print(f"dim I(Omega(Q8)) = {ideal.rank}; every involution is 1 + (element of the ideal): {inside}")
print("check:", omega_v_equals_ideal(q8))

# Over GF(4) the count grows but the answer to 'do they commute' does not.
n4 = sum(1 for _ in enumerate_involutions(q8, GF4))
print(f"{n4} involutions over GF(4) = 4^{ideal.rank} - 1: {n4 == 4**ideal.rank - 1}")
