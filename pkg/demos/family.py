"""The determinant witnesses for the ideals I_n, n = 6..8.

Run: python demos/family.py
"""

from srara import certify_ara, family_witness
from srara.witness import lemma21_checks

for n in (6, 7, 8):
    ws = family_witness(n)
    print(f"I_{n}: {len(ws.target)} generators, witness of size {len(ws)}")
    print("  D =", ws.elements[0])
    checks = lemma21_checks(n)
    print(f"  D in I_{n}: {checks['a']}; tail terms divisible by x2 and some x_j: {checks['b']}")
    print("  " + certify_ara(ws).summary())
