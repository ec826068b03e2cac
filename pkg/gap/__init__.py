from .approximation import ApproximationReport, approx_check
from .certified import Enclosure, decide, enclose
from .chain import ChainCertificate, a25_threshold, chain_certificate, chain_lower_bounds
from .gap_errors import DegenerateInput, NoContradiction, PreconditionViolated, TheoremInapplicable, Undecidable
from .gap_principle import GapPrincipleResult, ProofStep, gap_hypotheses, gap_principle, k_constant, proof_constants
from .jz_theorem import GapReport, Quantity, jz_quantities
from .omega import ConjectureReport, OmegaReport, extension_conjecture_check, omega_lower_bound

__all__ = [
    "ApproximationReport",
    "ChainCertificate",
    "ConjectureReport",
    "DegenerateInput",
    "Enclosure",
    "GapPrincipleResult",
    "GapReport",
    "NoContradiction",
    "OmegaReport",
    "PreconditionViolated",
    "ProofStep",
    "Quantity",
    "TheoremInapplicable",
    "Undecidable",
    "a25_threshold",
    "approx_check",
    "chain_certificate",
    "chain_lower_bounds",
    "decide",
    "enclose",
    "extension_conjecture_check",
    "gap_hypotheses",
    "gap_principle",
    "jz_quantities",
    "k_constant",
    "omega_lower_bound",
    "proof_constants",
]
