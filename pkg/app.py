"""
Main application module for the canimages command line
"""
import logging
import os
import sys

import click
from dotenv import load_dotenv

from services.errors import BudgetExceededError, CanImageError

__version__ = "1.0.0"
COMPOSITION = "left-to-right"

EXIT_OK = 0
EXIT_INPUT_ERROR = 1
EXIT_BUDGET_EXCEEDED = 2

_log_handler = None


def _configure_logging(level_name):
    """Send every logger to one stderr handler so stdout carries results only."""
    global _log_handler
    root = logging.getLogger()
    level = getattr(logging, str(level_name).upper(), logging.WARNING)
    root.setLevel(level)
    if _log_handler is None:
        # Create a stream handler for terminal output
        _log_handler = logging.StreamHandler(sys.stderr)
        formatter = logging.Formatter('%(asctime)s - %(name)s - %(levelname)s: %(message)s')
        _log_handler.setFormatter(formatter)
        root.addHandler(_log_handler)
    _log_handler.setLevel(level)


def create_cli(test_config=None):
    """Create and configure the click command group."""
    # Load environment variables
    load_dotenv()

    # Load configuration
    config = {
        'LOG_LEVEL': os.getenv("CANIMAGES_LOG_LEVEL", "WARNING"),
        'NODE_BUDGET': int(os.getenv("CANIMAGES_NODE_BUDGET", "1000000")),
        'ORACLE_MAX_ORDER': int(os.getenv("CANIMAGES_ORACLE_MAX_ORDER", "10000")),
        'ORACLE_MAX_SET_ORBIT': int(os.getenv("CANIMAGES_ORACLE_MAX_SET_ORBIT", "10000")),
        'BENCH_WORKERS': int(os.getenv("CANIMAGES_BENCH_WORKERS", "1")),
        'GROUPS_DIR': os.getenv("CANIMAGES_GROUPS_DIR", "groups"),
    }

    # Override config with test config if provided
    if test_config:
        config.update(test_config)

    _configure_logging(config['LOG_LEVEL'])

    @click.group()
    @click.version_option(__version__, prog_name="canimages",
                          message=f"%(prog)s %(version)s (composition: {COMPOSITION})")
    @click.pass_context
    def cli(ctx):
        """Minimal and canonical images of point sets under permutation groups."""
        ctx.ensure_object(dict)
        ctx.obj.update(config)

    # Register all subcommands using the centralized registration function
    from commands import register_commands
    register_commands(cli)

    return cli


def main(argv=None):
    """
    Console entry point.

    Returns:
        int: 0 on success, 1 for bad input, 2 when a node or oracle budget ran out
    """
    cli = create_cli()
    try:
        result = cli.main(args=argv, prog_name="canimages", standalone_mode=False)
    except click.ClickException as e:
        click.echo(f"Error: {e.format_message()}", err=True)
        return EXIT_INPUT_ERROR
    except click.Abort:
        click.echo("Aborted!", err=True)
        return EXIT_INPUT_ERROR
    except BudgetExceededError as e:
        click.echo(f"Error: {str(e)}", err=True)
        return EXIT_BUDGET_EXCEEDED
    except (CanImageError, OSError) as e:
        click.echo(f"Error: {str(e)}", err=True)
        return EXIT_INPUT_ERROR
    return result if isinstance(result, int) else EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
