"""Lift three polynomials cutting out the 5-cycle ideal to four for its cone.

Run: python demos/cone_lift.py
"""

from srara import cone_lift, verify_up_to_radical
from srara.simplicial import cycle_complex, minimal_primes
from srara.witness import cycle5_witness

c5 = cycle_complex(5)
base = cycle5_witness()
print("base witness for I(C5):")
for q in base:
    print("  ", q)

lifted, trace = cone_lift(c5, [1, 2], base, apex=0)
print("\ncoefficient matrix A (columns x3, x4, x5):")
for row in trace.A.to_lists():
    print("  ", row)
print("\nlifted witness:")
for f in lifted:
    print("  ", f)

print("\nminimal primes of the cone:", "  ".join(str(p) for p in minimal_primes(lifted.complex())))
print(verify_up_to_radical(lifted, ara=True).summary())
