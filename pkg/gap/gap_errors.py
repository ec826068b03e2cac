from typing import List


class PreconditionViolated(ValueError):
    def __init__(self, failed: List[str]):
        super().__init__(f"Hypotheses not satisfied: {', '.join(failed)}")
        self.failed = failed


class TheoremInapplicable(ValueError):
    def __init__(self, reason: str, report=None):
        super().__init__(f"Approximation theorem does not apply: {reason}")
        self.reason = reason
        self.report = report


class DegenerateInput(ValueError):
    pass


class Undecidable(ValueError):
    def __init__(self, description: str, bits: int):
        super().__init__(f"Could not certify '{description}' within {bits} bits of interval precision")
        self.description = description
        self.bits = bits


class NoContradiction(ValueError):
    def __init__(self, certificate):
        super().__init__(f"Lower-bound chain up to index {certificate.m} does not contradict the gap principle")
        self.certificate = certificate
