"""Random-graph baselines: expected Hamilton-cycle counts and the trend
toward the n! (d/n)^n estimate.

The closed-form expectation E[X] = ((n-1)!/2) p^n for G(n,p) is compared
against a seeded Monte Carlo mean, and the trend table tracks
h(G)^(1/n) / ((n!)^(1/n) d/n) over random regular graphs -- the ratio
creeps upward with n, as the estimate predicts.
"""

import math

import ndlham as nh

n, p = 10, 0.5
mc = nh.monte_carlo_gnp(n, p, trials=400, seed=5)
print(f"G({n},{p}): expectation {mc['expectation']:.2f}, "
      f"empirical mean {mc['empirical_mean']:.2f}, ratio {mc['ratio']:.3f}")

value, is_zero = nh.janson_expectation_gnm(10, 20)
print(f"G(10,20): log E[X] = {value:.4f}  (E[X] = {math.exp(value):.4f})")

print("\ntrend of h(G)^(1/n) against (n!)^(1/n) d/n:")
for row in nh.theorem_trend(ns=range(10, 19, 2), ds=(4, 6), seed=0):
    print(f"  n={row['n']:>2} d={row['d']} h={row['h']:>9} "
          f"gap={row['gap']:.4f}")
