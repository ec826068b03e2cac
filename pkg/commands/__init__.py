from commands import (
    census_command,
    chain_command,
    constants_command,
    extend_command,
    gap_command,
    search_command,
    verify_command,
)


def register_commands(subparsers, parents):
    search_command.register(subparsers, parents)
    verify_command.register(subparsers, parents)
    gap_command.register(subparsers, parents)
    chain_command.register(subparsers, parents)
    extend_command.register(subparsers, parents)
    census_command.register(subparsers, parents)
    constants_command.register(subparsers, parents)
