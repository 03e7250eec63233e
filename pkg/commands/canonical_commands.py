"""
The canonical command: canonical image with a selector/refiner strategy
"""
import click

from commands.command_utils import (
    budget_from,
    emit_json,
    group_options,
    load_group,
    load_order,
    load_set,
    node_budget_option,
)
from services.search.canimage import SINGLE_MAX_ORBIT, STRATEGIES
from services.search_service import canonical_image, get_strategy

STRATEGY_NAMES = list(STRATEGIES) + [SINGLE_MAX_ORBIT.name]


@click.command('canonical')
@group_options
@click.option('--set', 'set_text', required=True, help='Set literal such as "2,3,5".')
@click.option('--strategy', 'strategy_name', required=True,
              type=click.Choice(STRATEGY_NAMES, case_sensitive=False))
@click.option('--order', 'order_spec', default='natural', show_default=True,
              help='Base ordering; it is part of the canonical function.')
@node_budget_option
@click.pass_context
def canonical_command(ctx, group_path, generators_text, degree, set_text, strategy_name, order_spec,
                      node_budget):
    """Print the canonical image of a set as JSON."""
    group = load_group(group_path, generators_text, degree)
    point_set = load_set(set_text, group)
    ordering = load_order(order_spec, group)
    result = canonical_image(group, point_set, get_strategy(strategy_name), ordering,
                             node_budget=budget_from(ctx, node_budget))
    emit_json(result.to_dict())
