# Constants for the bounded searches and the quintuple sweep.

# |z| <= 16 for every element, so abs_sq(z) <= 256
DEFAULT_SWEEP_BOUND = 16
DEFAULT_SWEEP_SIZE = 5

# |D| beyond which the quoted completeness argument claims every element with |z| <= 16 is real
QUOTED_REAL_CUTOFF = 32

DEFAULT_STRATEGY = "pivot"

# extend: the fourth-element enumeration stays complete up to this abs_sq; beyond it only orbit extensions are reported
DEFAULT_ENUMERATION_CAP = 10**6
