import pytest

from services.bench.collection import load_collection
from services.errors import CanImageError, GroupFileError
from services.group_service import group_from_text, resolve_group
from services.storage_service import (
    load_group_file,
    parse_group_text,
    rows_to_csv,
    save_group_file,
    write_csv,
)


def test_parse_group_text_ignores_comments_and_blank_lines():
    group = parse_group_text("# two swaps\n\ndegree 4\n(1,2)  # first\n(3,4)\n")
    assert group.degree == 4
    assert group.order() == 4


def test_parse_group_text_reports_line_number():
    with pytest.raises(GroupFileError) as info:
        parse_group_text("degree 4\n(1,2)\n(1,9)\n", "bad.grp")
    assert info.value.line_number == 3
    assert "bad.grp:3" in str(info.value)


@pytest.mark.parametrize("text", ["(1,2)\n", "", "degree four\n", "degree 0\n"])
def test_parse_group_text_needs_valid_header(text):
    with pytest.raises(GroupFileError):
        parse_group_text(text)


def test_header_without_generators_is_trivial():
    group = parse_group_text("degree 5\n")
    assert group.is_trivial()
    assert group.degree == 5


def test_save_and_load(tmp_path, ex26):
    path = tmp_path / "nested" / "ex26.grp"
    save_group_file(ex26, str(path), comment="worked example")
    assert path.read_text().startswith("# worked example\ndegree 6\n")
    loaded = load_group_file(str(path))
    assert loaded.order() == 18
    assert all(loaded.contains(g) for g in ex26.generators)


def test_missing_file_raises_os_error(tmp_path):
    with pytest.raises(OSError):
        load_group_file(str(tmp_path / "absent.grp"))


def test_checked_in_collection(groups_dir):
    groups = load_collection(str(groups_dir))
    assert list(groups) == sorted(groups)
    assert groups['ex26'].order() == 18
    assert groups['cyclic7'].order() == 7
    assert groups['dihedral8'].order() == 16


def test_missing_collection_directory(tmp_path):
    with pytest.raises(CanImageError):
        load_collection(str(tmp_path / "nowhere"))


def test_inline_generators():
    group = group_from_text("(1,4)(2,3)(5,6); (1,2,6)", 6)
    assert group.order() == 18
    with pytest.raises(CanImageError):
        resolve_group(None, None, None)


def test_rows_to_csv():
    text = rows_to_csv(('a', 'b'), [(1, 'x'), (2, 'y,z')])
    assert text == 'a,b\n1,x\n2,"y,z"\n'


def test_write_csv_creates_directories(tmp_path):
    path = tmp_path / "results" / "run.csv"
    write_csv(str(path), ('a',), [(1,), (2,)])
    assert path.read_text() == "a\n1\n2\n"
