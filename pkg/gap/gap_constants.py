# Constants shared by the gap-principle, omega-bound and chain computations.
# They are echoed into every report so a reader can see which values a certificate used.

from fractions import Fraction

# Base of K = base ** 20 in |d| < K |c|^50. The proof derives 4728; the statement prints 4278.
K_PROOF_BASE = 4728
K_STATEMENT_BASE = 4278
K_EXPONENTS = 20
K_BASES = (K_PROOF_BASE, K_STATEMENT_BASE)

# exponent of |c| in the gap-principle bound
GAP_C_EXPONENT = 50

APPROXIMATION_FACTOR = Fraction(21, 16)
LAMBDA_CEILING = Fraction(19, 10)

# 64 * abs_sq(d) >= abs_sq(a) * abs_sq(b) is |d| >= |ab| / 8 squared
OMEGA_DIVISOR_SQ = 64
# |d| >= 4 |ab| squared
CONJECTURE_FACTOR_SQ = 16
OMEGA_MIN_ABS_SQ = 4

INTERVAL_START_BITS = 128
INTERVAL_MAX_BITS = 4096
ENCLOSURE_DIGITS = 30

# Chain of lower bounds: abs_sq(a4) >= 4 and abs_sq(a5) >= 256 follow from the quintuple search at |z| <= 16.
CHAIN_SEED_BOUNDS = {4: 4, 5: 256}
CHAIN_FIRST_STEP = 7
CHAIN_PIVOT = 25
CHAIN_STRIDE = 3
CHAIN_TARGET = 43
# |a25| > 1.784e9 as quoted for the final comparison
QUOTED_A25_THRESHOLD = 1_784_000_000
