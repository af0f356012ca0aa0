"""At t = exp(2 pi i / 10) the three-strand image collapses to a finite group.

Enumerates the projective image, then checks its class equation against
the icosahedral group A5.
"""

from jonesrep import ParameterSpec, build
from jonesrep.analysis import GroupTable, classify_discreteness, projective_image

h = build(3, 1, ParameterSpec.root_of_unity(10))
image = projective_image(h, cap=500)
table = GroupTable.from_image(image, h.field)
print("order:", image.order)
print("class sizes:", sorted(len(c) for c in table.conjugacy_classes()))
print("simple:", table.is_simple())

v = classify_discreteness(ParameterSpec.root_of_unity(10))
print("classifier:", v.regime, "->", "discrete" if v.discrete else "indiscrete", "|", v.evidence)
