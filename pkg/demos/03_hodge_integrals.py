# Hodge integral values: alpha_q, Faber's kappa integral, and psi-lambda integrals.

from multicover.hodge import (
    alpha,
    alpha_via_log,
    faber_expected,
    faber_ratio_check,
    kappa_integral,
    psi_lambda_table,
)
from multicover.series import int_pow, sine_ratio

# alpha_q two ways: Bernoulli closed form and the formal log of (t/2)/sin(t/2)
Q = alpha_via_log(8)
for q in range(1, 9):
    print(f"alpha_{q} = {alpha(q)}  (log route agrees: {alpha(q) == Q[q]})")

# alpha_q / kappa integral = 2^(q-1)/q!
print()
for q in range(2, 9):
    print(f"q={q}: kappa integral = {kappa_integral(q)}, "
          f"ratio = {faber_ratio_check(q)} (expected {faber_expected(q)})")

# Psi-lambda integrals assemble into S^(-k-1) as polynomials in k
print()
table = psi_lambda_table(4)
for (h, i), v in sorted(table.items()):
    print(f"int psi^{2 * h - 2 + i} lambda_{h - i} over M_({h},1) = {v}")
k = 2
target = int_pow(sine_ratio(4), -k - 1)
print("k=2 check:", all(sum(k**i * table[(h, i)] for i in range(h + 1)) == target[h]
                        for h in range(1, 5)))
