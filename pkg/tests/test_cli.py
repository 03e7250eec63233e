import csv
import io
import json

from app import EXIT_BUDGET_EXCEEDED, EXIT_INPUT_ERROR, EXIT_OK, create_cli, main
from services.group.permutation import parse_cycles, parse_point_set


def _ex26(groups_dir):
    return str(groups_dir / "ex26.grp")


def test_min_natural(cli, runner, groups_dir):
    result = runner.invoke(cli, ['min', '--group', _ex26(groups_dir), '--set', '2,3,5'])
    assert result.exit_code == 0, result.output
    data = json.loads(result.output)
    assert list(data) == ['image', 'witness', 'nodes', 'depth']
    assert data['image'] == [1, 2, 3]
    witness = parse_cycles(data['witness'], 6)
    assert witness.act_set(parse_point_set("2,3,5", 6)).members == (1, 2, 3)


def test_min_reverse(cli, runner, groups_dir):
    result = runner.invoke(cli, ['min', '--group', _ex26(groups_dir), '--set', '{2,3,5}', '--order', 'reverse'])
    assert result.exit_code == 0, result.output
    assert json.loads(result.output)['image'] == [4, 5, 6]


def test_min_with_inline_generators(cli, runner):
    result = runner.invoke(cli, ['min', '--generators', '(1,4)(2,3)(5,6);(1,2,6)', '--degree', '6',
                                 '--set', '2,3,5'])
    assert result.exit_code == 0, result.output
    assert json.loads(result.output)['image'] == [1, 2, 3]


def test_canonical_is_repeatable(cli, runner, groups_dir):
    args = ['canonical', '--group', _ex26(groups_dir), '--set', '2,3,5', '--strategy', 'RareOrbitPlusMin']
    first = runner.invoke(cli, args)
    second = runner.invoke(cli, args)
    assert first.exit_code == 0, first.output
    assert first.output == second.output
    moved = runner.invoke(cli, ['canonical', '--group', _ex26(groups_dir), '--set', '1,4,6',
                                '--strategy', 'rareorbitplusmin'])
    assert json.loads(moved.output)['image'] == json.loads(first.output)['image']


def test_check_reports_passed(cli, runner, groups_dir):
    result = runner.invoke(cli, ['check', '--group', _ex26(groups_dir), '--set', '2,3,5',
                                 '--strategy', 'minorbit'])
    assert result.exit_code == 0, result.output
    report = json.loads(result.output)
    assert report['passed'] is True
    assert report['checked'] == report['orbit_size']


def test_bench_writes_csv(cli, runner, tmp_path):
    out = tmp_path / "bench.csv"
    result = runner.invoke(cli, ['bench', '--family', 'grid', '--sizes', '2..3', '--strategies',
                                 'minimage-natural,rareorbitplusmin', '--out', str(out)])
    assert result.exit_code == 0, result.output
    rows = list(csv.DictReader(io.StringIO(out.read_text())))
    assert len(rows) == 4
    assert {row['solved'] for row in rows} == {'true'}
    assert 'rareorbitplusmin' in result.output


def test_bench_csv_on_stdout(cli, runner):
    result = runner.invoke(cli, ['bench', '--family', 'grid', '--sizes', '2', '--strategies', 'minorbit'])
    assert result.exit_code == 0, result.output
    assert result.output.splitlines()[0].startswith('family,instance,degree')


def test_bench_rejects_bad_fraction(cli, runner):
    result = runner.invoke(cli, ['bench', '--family', 'grid', '--sizes', '3', '--fractions', '3'])
    assert result.exit_code != 0


def test_strategies_listing(cli, runner):
    result = runner.invoke(cli, ['strategies'])
    names = result.output.split()
    assert 'rareorbitplusmin' in names
    assert 'minimage-natural' in names
    assert 'singlemaxorbit' in names


def test_main_bad_set_exit_code(groups_dir):
    assert main(['min', '--group', _ex26(groups_dir), '--set', '2,9']) == EXIT_INPUT_ERROR


def test_main_missing_group_source():
    assert main(['min', '--set', '1']) == EXIT_INPUT_ERROR


def test_main_budget_exit_code(groups_dir, capsys):
    code = main(['min', '--group', _ex26(groups_dir), '--set', '2,3,5', '--node-budget', '1'])
    assert code == EXIT_BUDGET_EXCEEDED
    assert 'node budget' in capsys.readouterr().err


def test_main_success_and_version(groups_dir, capsys):
    assert main(['min', '--group', _ex26(groups_dir), '--set', '2,3,5']) == EXIT_OK
    assert json.loads(capsys.readouterr().out)['image'] == [1, 2, 3]
    assert main(['--version']) == EXIT_OK
    out = capsys.readouterr().out
    assert 'canimages 1.0.0' in out
    assert 'left-to-right' in out


def test_bench_file_family_defaults_to_collection(runner, groups_dir):
    cli = create_cli({'LOG_LEVEL': 'WARNING', 'GROUPS_DIR': str(groups_dir)})
    result = runner.invoke(cli, ['bench', '--family', 'file', '--strategies', 'minorbit'])
    assert result.exit_code == 0, result.output
    instances = [line.split(',')[1] for line in result.output.splitlines()[1:]]
    assert instances == ['agl1_5', 'agl1_7', 'cyclic7', 'dihedral8', 'ex26']
