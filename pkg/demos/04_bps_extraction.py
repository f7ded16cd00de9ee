# Gopakumar-Vafa extraction: from rational Gromov-Witten invariants to BPS numbers.
#
# Input BPS numbers below are the low-degree genus 0 and 1 values commonly
# quoted for local P^2; they only serve as sample data.

from fractions import Fraction

from multicover.tables import BPSTable, table_to_json
from multicover.transforms import gv_forward, gv_invert

genus0 = {1: 3, 2: -6, 3: 27, 4: -192, 5: 1695}
genus1 = {3: -10, 4: 231, 5: -4452}
entries = {(0, (d,)): Fraction(n) for d, n in genus0.items()}
entries.update({(1, (d,)): Fraction(n) for d, n in genus1.items()})
bps = BPSTable(rank=1, max_genus=1, degree_cutoffs=(5,), entries=entries)

gw = gv_forward(bps)
print("Gromov-Witten invariants (rational):")
for (g, beta), v in gw.sorted_items():
    print(f"  N^{g}_{beta[0]} = {v}")

back = gv_invert(gw)
print("recovered:", back.same_support(bps), "non-integral:", back.integrality_report)

# One elliptic BPS state in degree 1. The M-theory model spreads it as 1/d
# over multiples; reading the same GW data with the geometric corrections
# (sigma(d)/d) extracts a different genus-1 tower.
elliptic = BPSTable(1, 1, (6,), {(1, (1,)): Fraction(1)})
gw1 = gv_forward(elliptic)
geo = gv_invert(gw1, model="geometric")
for d in range(1, 7):
    print(f"  d={d}: N^1 = {gw1[1, (d,)]}, geometric n^1 = {geo[1, (d,)]}")
print("geometric non-integral entries:", table_to_json(geo)["integrality_report"])
