"""Default size limits for enumerative and search operations.

All of these can be overridden per call; the CLI exposes ``--cap`` for the
enumeration/brute limits.
"""

# Max number of elements enumerated per ring/field sweep.
ENUM_CAP = 10**6

# Max number of trial divisors the brute-force factorizer may consider.
BRUTE_CAP = 10**6

# Largest supported root degree m for ring elements.
M_CAP = 12

# Largest ring (element count) swept by the axiom/census suites.
AXIOM_CAP = 3125

# factorize() refuses inputs above this (trial division would be too slow).
TRIAL_FACTOR_LIMIT = 1 << 48
