# Degree-1 degenerate contributions C_g(h, X, beta), computed two ways.
#
# Series route: the t^(2h) coefficient of S(t)^(2g - 2 + k), k = -K_X . beta.
# Partition route: sum over partitions tau of h of
#     (2 - 2g - k)^len(tau) / |Aut tau| * prod alpha(h_i).

from multicover.contributions import (
    GeometrySignature,
    contribution_degree,
    contribution_partition_sum,
    contribution_series,
)

H = 4
print(f"{'g':>2} {'k':>2}  " + "  ".join(f"h={h:<12}" for h in range(H + 1)))
for g in range(4):
    for k in (0, 4):
        sig = GeometrySignature(g, k)
        ser = contribution_series(sig, H)
        assert all(contribution_partition_sum(sig, h) == ser[h] for h in range(H + 1))
        print(f"{g:>2} {k:>2}  " + "  ".join(f"{str(c):<14}" for c in ser))

# Multiple covers in a Calabi-Yau. Elliptic curves separate the two models.
print()
for d in range(1, 7):
    geo = contribution_degree(1, 0, d, "geometric").value
    mth = contribution_degree(1, 0, d, "mtheory").value
    print(f"d={d}: C_1(0,d) geometric = {geo}, M-theory = {mth}")

# Genus >= 2 multiple covers are unknown in the geometric model.
print(contribution_degree(2, 1, 2, "geometric"))
