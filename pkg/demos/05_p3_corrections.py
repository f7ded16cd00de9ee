# Enumerative corrections in P^3, where -K . beta = 4d for degree d curves.
#
# N^gD_d = sum_{g <= gD} C_g(gD - g, P^3, d) E^g_d with
# C_g(h, P^3, d) the t^(2h) coefficient of S(t)^(2g - 2 + 4d).

from fractions import Fraction

from multicover.tables import ETable
from multicover.transforms import enumerative_coefficient, enumerative_forward, enumerative_solve

for d in range(1, 6):
    c01 = enumerative_coefficient(0, 1, 4 * d)
    c02 = enumerative_coefficient(0, 2, 4 * d)
    c12 = enumerative_coefficient(1, 2, 4 * d)
    print(f"d={d}: N^1 = {c01} E^0 + E^1;  N^2 = {c02} E^0 + ({c12}) E^1 + E^2")

# Round trip on an arbitrary enumerative table
e = ETable(1, 2, (4,), {(0, (d,)): Fraction(d * d) for d in range(1, 5)}, canonical=(4,))
gw = enumerative_forward(e)
for (g, beta), v in gw.sorted_items():
    print(f"  N^{g}_{beta[0]} = {v}")
print("solve recovers E:", enumerative_solve(gw).same_support(e))
