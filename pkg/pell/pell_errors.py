# Errors raised while building and walking the Pell-type system of a Diophantine triple.


class NotASolution(ValueError):
    pass


class OrbitNotDiverging(ValueError):
    def __init__(self, steps: int):
        super().__init__(f"Orbit failed to grow for {steps} consecutive steps")
        self.steps = steps
