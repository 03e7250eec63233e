"""
The bench command and the strategies listing
"""
import click

from commands.command_utils import budget_from, node_budget_option, parse_int_list, parse_name_list
from services.bench import (
    ExperimentConfig,
    format_summary,
    rows_as_csv,
    run_suite,
    summarize,
    write_results,
)
from services.bench.runner import FAMILIES
from services.errors import CanImageError
from services.search_service import labeller_names
from services.storage_service import list_group_files


@click.command('bench')
@click.option('--family', type=click.Choice(FAMILIES), required=True)
@click.option('--sizes', default=None, help='Grid sides or m-set n values, e.g. 3..12 or 3,5,7.')
@click.option('--mset-m', type=click.IntRange(min=2), default=2, show_default=True)
@click.option('--groups', 'group_files', multiple=True, type=click.Path(exists=True, dir_okay=False),
              help='Group files for the file family (default: every file in CANIMAGES_GROUPS_DIR).')
@click.option('--fractions', default='2', show_default=True, help='Set size denominators from 2,4,8.')
@click.option('--strategies', default='minimage-natural,fixedminorbit,rareorbitplusmin', show_default=True)
@click.option('--seed', type=int, default=0, show_default=True)
@node_budget_option
@click.option('--repeats', type=click.IntRange(min=1), default=1, show_default=True)
@click.option('--workers', type=click.IntRange(min=1), default=None,
              help='Worker processes (default from CANIMAGES_BENCH_WORKERS).')
@click.option('--conjugate', is_flag=True, help='Use a random conjugate of every group.')
@click.option('--out', 'out_path', type=click.Path(dir_okay=False), default=None,
              help='CSV destination; without it the CSV goes to stdout.')
@click.pass_context
def bench_command(ctx, family, sizes, mset_m, group_files, fractions, strategies, seed, node_budget,
                  repeats, workers, conjugate, out_path):
    """Run a seeded benchmark and write one CSV row per cell."""
    try:
        if family == 'file' and not group_files:
            group_files = list_group_files(ctx.obj['GROUPS_DIR'])
        config = ExperimentConfig(
            family=family,
            strategies=tuple(parse_name_list(strategies)),
            sizes=tuple(parse_int_list(sizes, '--sizes')) if sizes else (),
            fractions=tuple(parse_int_list(fractions, '--fractions')),
            seed=seed,
            node_budget=budget_from(ctx, node_budget),
            repeats=repeats,
            mset_m=mset_m,
            group_files=tuple(group_files),
            conjugate=conjugate,
            workers=workers or ctx.obj['BENCH_WORKERS'],
        )
    except CanImageError as e:
        raise click.UsageError(str(e))
    rows = run_suite(config)
    if out_path is None:
        click.echo(rows_as_csv(rows), nl=False)
        return
    write_results(rows, out_path)
    click.echo(format_summary(summarize(rows)))


@click.command('strategies')
def strategies_command():
    """List every labelling strategy name."""
    for name in labeller_names():
        click.echo(name)
