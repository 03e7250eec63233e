"""
Storage service for group files and benchmark results

A group file holds a `degree <n>` header followed by one generator per line in
cycle notation. Blank lines and lines starting with '#' are ignored.
"""
import csv
import io
import logging
import os

from services.errors import CanImageError, GroupFileError
from services.group.perm_group import PermGroup
from services.group.permutation import format_cycles, parse_cycles

logger = logging.getLogger("Storage")

GROUP_FILE_SUFFIX = ".grp"


def parse_group_text(text, path=None):
    """
    Parse the contents of a group file.

    Args:
        text (str): file contents
        path (str, optional): used in error messages

    Returns:
        PermGroup: the generated group
    """
    degree = None
    generators = []
    for line_number, raw in enumerate(text.splitlines(), start=1):
        line = raw.split('#', 1)[0].strip()
        if not line:
            continue
        if degree is None:
            parts = line.split()
            if len(parts) != 2 or parts[0].lower() != 'degree':
                raise GroupFileError("expected a 'degree <n>' header", line_number, path)
            try:
                degree = int(parts[1])
            except ValueError:
                raise GroupFileError(f"degree must be an integer, got {parts[1]!r}", line_number, path)
            if degree < 1:
                raise GroupFileError(f"degree must be positive, got {degree}", line_number, path)
            continue
        try:
            generators.append(parse_cycles(line, degree))
        except CanImageError as e:
            raise GroupFileError(str(e), line_number, path)
    if degree is None:
        raise GroupFileError("missing 'degree <n>' header", None, path)
    return PermGroup(generators, degree)


def load_group_file(path):
    """Read a group file from disk."""
    try:
        with open(path, 'r', encoding='utf-8') as f:
            text = f.read()
    except OSError as e:
        logger.error(f"Error reading group file {path}: {str(e)}")
        raise
    group = parse_group_text(text, path)
    logger.info(f"Loaded {path}: degree {group.degree}, {len(group.generators)} generators")
    return group


def format_group(group, comment=None):
    lines = []
    if comment:
        lines.append(f"# {comment}")
    lines.append(f"degree {group.degree}")
    lines.extend(format_cycles(g) for g in group.generators)
    return "\n".join(lines) + "\n"


def save_group_file(group, path, comment=None):
    """Write a group in the group-file format."""
    directory = os.path.dirname(path)
    if directory:
        os.makedirs(directory, exist_ok=True)
    with open(path, 'w', encoding='utf-8') as f:
        f.write(format_group(group, comment))
    logger.info(f"Saved group of degree {group.degree} to {path}")


def list_group_files(directory):
    """Sorted paths of the group files in a directory."""
    if not os.path.isdir(directory):
        raise CanImageError(f"groups directory not found: {directory}")
    return sorted(
        os.path.join(directory, name)
        for name in os.listdir(directory)
        if name.endswith(GROUP_FILE_SUFFIX)
    )


def rows_to_csv(header, rows):
    """Render rows as CSV text with '\\n' line endings."""
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator='\n')
    writer.writerow(header)
    writer.writerows(rows)
    return buffer.getvalue()


def write_csv(path, header, rows):
    """Write rows to a CSV file, creating parent directories as needed."""
    directory = os.path.dirname(path)
    if directory:
        os.makedirs(directory, exist_ok=True)
    try:
        with open(path, 'w', encoding='utf-8', newline='') as f:
            f.write(rows_to_csv(header, rows))
    except OSError as e:
        logger.error(f"Error writing results to {path}: {str(e)}")
        raise
    logger.info(f"Wrote {len(rows)} rows to {path}")
