"""Turn presentations into multiplication tables and look at their structure.

Run: python3 demos/01_groups_from_presentations.py
"""

from goodgroups.groups import isomorphism_test, semidirect_product, cyclic_group, structural_report, todd_coxeter
from goodgroups.presentation import builtin, parse_presentation

# A presentation typed by hand: C4 acted on by C4 through inversion.
p = parse_presentation("gens: a, b; rels: a^4 = b^4 = 1, a^b = a^3")
print("parsed:", p)
g = todd_coxeter(p)
print("order", g.order, "exponent", g.exponent)

# The same group from the metacyclic family S(n, m).
s22 = todd_coxeter(builtin("S", (2, 2)))
print("isomorphic to S(2,2):", isomorphism_test(g, s22) is not None)

# And once more as an explicit semidirect product of tables.
c4 = cyclic_group(4, "a")
inversion = [c4.power(x, 3) for x in range(4)]
sd = semidirect_product(c4, cyclic_group(4, "b"), [inversion])
print("semidirect product isomorphic too:", isomorphism_test(sd, s22) is not None)

# Structural flags for a few of the groups that matter below.
for name, params in [("Q8", ()), ("DihedralPow", (3,)), ("H32", ()), ("H245", ())]:
    r = structural_report(todd_coxeter(builtin(name, params)))
    print(f"{name:12} |G|={r.order:3} |Z|={r.center_order} |Phi|={r.frattini_order} |Omega|={r.omega_order}"
          f" Phi=Omega:{r.frattini_equals_omega} involutions central:{r.involutions_central}")
