"""Re-run a verification over small prime fields and flag any change of verdict.

Run: python demos/characteristic.py
"""

from srara import WitnessSet, example4_witness
from srara.groebner import compare_characteristics
from srara.monomial import MonomialIdeal
from srara.polyring import Polynomial

ws, C = example4_witness()
print("det C =", C.determinant())
print("six-variable witness:", compare_characteristics(ws))

# x1 + x2 and x1 - x2 span (x1, x2) only when 2 is invertible
toy = WitnessSet([Polynomial.parse("x1 + x2"), Polynomial.parse("x1 - x2")], MonomialIdeal(["x1", "x2"]))
print("toy witness:", compare_characteristics(toy))
