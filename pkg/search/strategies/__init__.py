from .base_strategy import CliqueStrategy
from .nested_loop_strategy import NestedLoopStrategy
from .pivot_strategy import PivotStrategy


def get_available_strategies():
    return [PivotStrategy.name, NestedLoopStrategy.name]


def get_strategy(strategy_name: str) -> CliqueStrategy:
    if strategy_name.lower() == PivotStrategy.name:
        return PivotStrategy()
    elif strategy_name.lower() == NestedLoopStrategy.name:
        return NestedLoopStrategy()
    else:
        raise ValueError(f"Unknown strategy: {strategy_name}")


__all__ = ["CliqueStrategy", "NestedLoopStrategy", "PivotStrategy", "get_available_strategies", "get_strategy"]
