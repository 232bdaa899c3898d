"""Layered sums of monomials, and what happens when the layering is wrong.

Run: python demos/schmitt_vogel.py
"""

from srara import SVPartition, schmitt_vogel, validate_sv, verify_up_to_radical
from srara.polyring import Polynomial
from srara.witness import cycle5_partition, find_sv_partition
from srara.simplicial import cycle_complex, stanley_reisner_ideal

P = Polynomial.parse

good = SVPartition([[P("x3*x6")], [P("x3*x5"), P("x4*x6")]])
ws = schmitt_vogel(good)
print("valid layering ->", [str(q) for q in ws], "|", verify_up_to_radical(ws).summary())

diag = validate_sv(cycle5_partition())
print("5-cycle layering:", diag.condition, diag.message)

# a search over layerings of the 6-cycle generators into 4 levels
gens = stanley_reisner_ideal(cycle_complex(6)).sorted_generators()
part = find_sv_partition(gens, 4)
print("6-cycle into 4 levels:", "none found" if part is None else [[str(p) for p in lev] for lev in part.levels])
