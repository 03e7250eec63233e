"""
Shared helpers for the command modules
"""
import json

import click

from services.errors import CanImageError
from services.group_service import parse_point_set, resolve_group
from services.search_service import parse_order_spec


def group_options(command):
    """Add the group source options: a group file or inline generators with a degree."""
    command = click.option('--degree', type=click.IntRange(min=1), default=None,
                           help='Degree for inline generators.')(command)
    command = click.option('--generators', 'generators_text', default=None,
                           help='Inline generators separated by ";", e.g. "(1,2);(1,2,3)".')(command)
    command = click.option('--group', 'group_path', type=click.Path(exists=True, dir_okay=False),
                           help='Group file with a "degree <n>" header and one generator per line.')(command)
    return command


def node_budget_option(command):
    return click.option('--node-budget', type=click.IntRange(min=1), default=None,
                        help='Abort after this many search nodes (default from CANIMAGES_NODE_BUDGET).')(command)


def load_group(group_path, generators_text, degree):
    """Resolve the group options, reporting bad input against the flag that carried it."""
    try:
        return resolve_group(group_path, generators_text, degree)
    except CanImageError as e:
        hint = "'--group'" if group_path is not None else "'--generators'"
        raise click.BadParameter(str(e), param_hint=hint)


def load_set(text, group):
    try:
        return parse_point_set(text, group.degree)
    except CanImageError as e:
        raise click.BadParameter(str(e), param_hint="'--set'")


def load_order(spec, group):
    try:
        return parse_order_spec(spec, group)
    except CanImageError as e:
        raise click.BadParameter(str(e), param_hint="'--order'")


def budget_from(ctx, node_budget):
    """The explicit --node-budget, or the configured default."""
    if node_budget is not None:
        return node_budget
    return ctx.obj['NODE_BUDGET']


def parse_int_list(text, flag):
    """
    Parse "3..12" (inclusive) or "2,4,8" into a list of ints.

    Args:
        text (str): the option value
        flag (str): option name for error messages
    """
    try:
        if '..' in text:
            low, high = text.split('..', 1)
            values = list(range(int(low), int(high) + 1))
        else:
            values = [int(part) for part in text.split(',') if part.strip()]
    except ValueError:
        raise click.BadParameter(f"expected a range like 3..12 or a list like 2,4,8, got {text!r}",
                                 param_hint=f"'{flag}'")
    if not values:
        raise click.BadParameter("no values given", param_hint=f"'{flag}'")
    return values


def parse_name_list(text):
    return [part.strip() for part in text.split(',') if part.strip()]


def emit_json(data):
    """Print one JSON document on stdout; key order is fixed by the caller."""
    click.echo(json.dumps(data))
