# Truncated even series over Q: the sine ratio S(t) = sin(t/2)/(t/2) and its powers.
#
# Every generating series in this package is an integer power of S(t).
# Coefficients are exact Fractions; index h holds the t^(2h) coefficient.

from multicover.series import exp, int_pow, inverse, log, scale_variable, sine_ratio

S = sine_ratio(5)
print("S(t)      =", list(map(str, S)))

# Genus-0 degree-1 contributions: S^(-2)
print("S(t)^-2   =", list(map(str, int_pow(S, -2))))

# Q(t) = log(1/S(t)); exp(2Q) gives S^(-2) back
Q = log(inverse(S))
print("Q(t)      =", list(map(str, Q)))
print("exp(2Q) == S^-2:", exp(Q * 2) == int_pow(S, -2))

# t -> 2t turns S into sin(t)/t
print("sin(t)/t  =", list(map(str, scale_variable(S, 2))))
