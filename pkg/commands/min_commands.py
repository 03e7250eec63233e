"""
The min command: minimal image under a base ordering
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
from services.search_service import minimal_image


@click.command('min')
@group_options
@click.option('--set', 'set_text', required=True, help='Set literal such as "2,3,5" or "{2,3,5}".')
@click.option('--order', 'order_spec', default='natural', show_default=True,
              help='natural, reverse, fixedminorbit, fixedmaxorbit or perm:<cycles>.')
@node_budget_option
@click.pass_context
def min_command(ctx, group_path, generators_text, degree, set_text, order_spec, node_budget):
    """Print the minimal image of a set as JSON."""
    group = load_group(group_path, generators_text, degree)
    point_set = load_set(set_text, group)
    ordering = load_order(order_spec, group)
    result = minimal_image(group, point_set, ordering, node_budget=budget_from(ctx, node_budget))
    emit_json(result.to_dict())
