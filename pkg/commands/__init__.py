"""
Commands module for the application.
Contains all the subcommands of the command line.
"""


def register_commands(cli):
    """
    Register all subcommands with the click group.

    Args:
        cli: The click group
    """
    from commands.min_commands import min_command
    from commands.canonical_commands import canonical_command
    from commands.check_commands import check_command
    from commands.bench_commands import bench_command, strategies_command

    cli.add_command(min_command)
    cli.add_command(canonical_command)
    cli.add_command(check_command)
    cli.add_command(bench_command)
    cli.add_command(strategies_command)
