"""Explicit noncommuting involutions in V(KG) for groups that fail the property.

Run: python3 demos/03_noncommuting_witnesses.py
"""

from goodgroups.algebra import GF2, format_element, parse_element
from goodgroups.classifier import catalog_entry
from goodgroups.groups import todd_coxeter
from goodgroups.presentation import builtin
from goodgroups.units import KNOWN_WITNESSES, verify_witness_pair, witness_search

# The three order-64 groups come with hand-made pairs.
for key, kw in KNOWN_WITNESSES.items():
    host = todd_coxeter(builtin(*kw.host))
    ok = verify_witness_pair(host, GF2, kw.z1, kw.z2)
    x, y = parse_element(kw.z1, host), parse_element(kw.z2, host)
    print(f"{key:7} x^2 = y^2 = 1 and xy != yx: {ok}")
    print(f"        xy + yx = {format_element(x * y + y * x)}")

# Smaller bad groups: the search tries the constructive shapes in turn.
for name in ["D8", "GenQuaternion(4)", "ModularS(3,1)", "Q8xC2xC2", "Q8"]:
    g = catalog_entry(name).build()
    w = witness_search(g)
    if w is None:
        print(f"{name:17} no witness (this proves nothing on its own)")
    else:
        print(f"{name:17} shape {w.shape}: {format_element(w.x)}  |  {format_element(w.y)}")
