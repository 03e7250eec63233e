"""
The check command: verify the canonical labelling contract with the brute-force oracle
"""
import click

from commands.command_utils import emit_json, group_options, load_group, load_set
from services.search_service import ElementBudget, check_canonical_contract, labeller_names


@click.command('check')
@group_options
@click.option('--set', 'set_text', required=True, help='Orbit representative, e.g. "2,3,5".')
@click.option('--strategy', 'strategy_name', required=True,
              type=click.Choice(labeller_names(), case_sensitive=False))
@click.option('--samples', type=click.IntRange(min=1), default=100, show_default=True,
              help='Random orbit members to check when the orbit is too large to enumerate.')
@click.option('--seed', type=int, default=0, show_default=True)
@click.pass_context
def check_command(ctx, group_path, generators_text, degree, set_text, strategy_name, samples, seed):
    """Print a JSON report of orbit membership and invariance violations."""
    group = load_group(group_path, generators_text, degree)
    point_set = load_set(set_text, group)
    budget = ElementBudget(ctx.obj['ORACLE_MAX_ORDER'], ctx.obj['ORACLE_MAX_SET_ORBIT'])
    report = check_canonical_contract(group, point_set, strategy_name.lower(), samples=samples,
                                      budget=budget, seed=seed)
    emit_json(report.to_dict())
