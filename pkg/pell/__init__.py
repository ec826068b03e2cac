from .orbit import (
    ORBIT_STALL_LIMIT,
    Direction,
    compose_step,
    extensions_from_orbit,
    first_equation_seeds,
    orbit,
    reduce_to_seed,
)
from .pell_errors import NotASolution, OrbitNotDiverging
from .pell_system import PellSolution, PellSystem, build_system, solution_from_extension

__all__ = [
    "ORBIT_STALL_LIMIT",
    "Direction",
    "NotASolution",
    "OrbitNotDiverging",
    "PellSolution",
    "PellSystem",
    "build_system",
    "compose_step",
    "extensions_from_orbit",
    "first_equation_seeds",
    "orbit",
    "reduce_to_seed",
    "solution_from_extension",
]
