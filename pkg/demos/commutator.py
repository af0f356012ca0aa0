"""Walk through the four-strand commutator whose trace certifies infinite order.

Builds the (4, 2) space generically, prints the generators, then the
characteristic polynomial of [tau_2, tau_2 tau_3^3 tau_2 tau_1^-1], and
finally the eigenvalue angle at two specializations.
"""

import math
from fractions import Fraction

from flint import fmpq_poly

from jonesrep import build
from jonesrep.analysis import char_poly, elliptic_witness, format_factored
from jonesrep.arith import ParameterSpec, cos_minpoly
from jonesrep.linalg import to_strings
from jonesrep.skein import parse_braid_word

word = parse_braid_word("[2, 2 3 3 3 2 -1]")
h = build(4, 2)
print("basis:", [m.describe() for m in h.basis])
for i in (1, 2, 3):
    print(f"tau_{i}:", to_strings(h.generator(i)))

print("\ncharacteristic polynomial (s = t^(1/4)):")
print(" ", format_factored(char_poly(h.word_matrix(word), h.field), h.field))

fifth = ParameterSpec.unit_circle(Fraction(1, 5))
u = cos_minpoly(7)(fmpq_poly([-1, 1]))
seventh = ParameterSpec.from_trace([Fraction(int(c.p), int(c.q)) for c in u.coeffs()], 1 + 2 * math.cos(2 * math.pi / 7))
for spec in (fifth, seventh):
    w = elliptic_witness(build(4, 2, spec), word)
    print(f"\n{spec.describe()}: {w.verdict}, angle {w.angle_degrees:.6f} deg, totient bound {w.degree_bound}")
