import io
import json
import os

import numpy
import pytest

from toricfill import PlumbingGraph, edge_lengths, cyclic_closure
from toricfill.cli import SCHEMA_PATH, parse_spec, unparse, render_svg, run_command, svg_scene
from toricfill.src._helper.helper import exact
from toricfill.src._helper.exceptions import ParseError

GOLDEN = os.path.join(os.path.dirname(__file__), 'golden')


def _run(*argv):
    out, err = io.StringIO(), io.StringIO()
    status = run_command(list(argv), out, err)
    return status, out.getvalue(), err.getvalue()


def _check_golden(name, document):
    """Compare a JSON document with the committed tests/golden/<name>."""
    path = os.path.join(GOLDEN, name)
    assert os.path.exists(path), 'missing golden file %s' % name
    with open(path) as f:
        expected = json.load(f)
    if isinstance(document, str):
        document = json.loads(document)
    assert document == expected


def test_parse_spec():
    assert parse_spec('linear: 1, 0, -1') == PlumbingGraph.linear(1, 0, -1)
    assert parse_spec('cyclic:0,0,0,0') == PlumbingGraph.cyclic(0, 0, 0, 0)
    assert parse_spec('  linear :\n 7 ').weights == (7, )
    assert parse_spec('linear: %d' % 10 ** 30).weights == (10 ** 30, )


def test_parse_errors():
    with pytest.raises(ParseError) as err:
        parse_spec('linear: 1,, 2')
    assert (err.value.line, err.value.column) == (1, 11)
    assert err.value.expected == 'an integer'
    with pytest.raises(ParseError) as err:
        parse_spec('planar: 1')
    assert err.value.column == 1
    with pytest.raises(ParseError) as err:
        parse_spec('linear:\n 1,\n x')
    assert (err.value.line, err.value.column) == (3, 2)
    for bad in ('cyclic: 1, 2', 'linear', 'linear:', 'linear: 1 2', 'linear: 1,'):
        with pytest.raises(ParseError):
            parse_spec(bad)


def test_unparse_round_trip():
    rng = numpy.random.RandomState(18)
    for trial in range(500):
        if rng.randint(2):
            g = PlumbingGraph.cyclic(*rng.randint(-100, 101, size=rng.randint(3, 10)))
        else:
            g = PlumbingGraph.linear(*rng.randint(-100, 101, size=rng.randint(1, 10)))
        assert parse_spec(unparse(g)) == g


def test_classify_command():
    status, out, err = _run('classify', '--spec', 'linear: 0,0,0,0,0')
    assert status == 0
    doc = json.loads(out)
    assert doc['classification']['underlying'] == {'type': 's1xs2'}
    assert doc['classification']['half_lutz'] == 1
    assert doc['classification']['contact_structure'] == 'xi_ot1'
    assert doc['descriptor'] == 's1xs2 --lutz 1'


def test_fill_command():
    status, out, err = _run('fill', '--target', 'lens:3,1', '--count', '3')
    assert status == 0
    members = json.loads(out)['family']['members']
    assert len(members) == 3
    assert [0, -2, -2, -2] in [m['plumbing']['weights'] for m in members]


def test_cyclic_close_failure():
    status, out, err = _run('cyclic-close', '--spec', 'linear: 1,1,0,0')
    assert status == 1
    assert 'end edges not parallel' in err
    doc = json.loads(out)
    assert doc['error']['type'] == 'EndEdgesNotParallel'


def test_domain_errors():
    status, out, err = _run('cf', '4', '6')
    assert status == 1
    assert json.loads(out)['error']['type'] == 'NotCoprime'
    status, out, err = _run('blowdown', '--spec', 'linear: 1,0,-1', '--vertex', '2')
    assert status == 1
    status, out, err = _run('info', '--spec', 'linear: 1,, 2')
    assert status == 1
    assert json.loads(out)['error']['column'] == 11


def test_usage_errors():
    assert _run()[0] == 2
    assert _run('frobnicate')[0] == 2
    assert _run('classify')[0] == 2
    status, out, err = _run('rays', '--spec', 'cyclic: 0,0,0')
    assert status == 2
    assert out == ''
    assert _run('blowup', '--spec', 'linear: 1,0,-1')[0] == 2
    assert _run('congruent', '--spec', 'linear: 0')[0] == 2
    assert _run('--help')[0] == 0


def test_numeric_flags_are_checked():
    status, out, err = _run('fill', '--target', 's1xs2', '--count', '0')
    assert status == 2
    assert out == ''
    assert 'count' in err
    status, out, err = _run('congruent', '--spec', 'linear: -2,-2',
                            '--spec', 'linear: -2,-2', '--bound', '-1')
    assert status == 2
    assert out == ''
    assert _run('fill', '--target', 's1xs2', '--count', 'many')[0] == 2
    assert _run('congruent', '--spec', 'linear: -2,-2',
                '--spec', 'linear: -2,-2', '--bound', '0')[0] == 0


def test_other_commands():
    doc = json.loads(_run('cf', '3', '4')[1])
    assert doc['continued_fraction']['coefficients'] == [0, -2, -2, -2]
    assert doc['continued_fraction']['value'] == {'num': 3, 'den': 4}

    doc = json.loads(_run('congruent', '--spec', 'linear: 0,0,0',
                          '--spec', 'linear: 1,0,-1', '--bound', '2')[1])
    assert doc['congruent'] is False
    assert doc['separating_invariant'] == 'parity'
    assert doc['proved'] is True

    doc = json.loads(_run('blowup', '--spec', 'linear: 1,0,-1', '--all')[1])
    assert [b['site'] for b in doc['blow_ups']] == [1, 2, 'left_end', 'right_end']

    doc = json.loads(_run('blowdown', '--spec', 'linear: 0,-1,-1,-1', '--vertex', '2')[1])
    assert doc['result']['weights'] == [1, 0, -1]

    doc = json.loads(_run('rays', '--spec', 'linear: 1,1,0,0')[1])
    assert doc['agree'] is True
    assert doc['chain'] == {'R1': [-1, 1], 'R2': [-1, 1]}
    assert doc['cone_angle']['interval'] == '2pi'


def test_documents_follow_schema(tmp_path):
    jsonschema = pytest.importorskip('jsonschema')
    with open(SCHEMA_PATH) as f:
        schema = json.load(f)
    runs = [('info', '--spec', 'linear: 1, 0, -1'),
            ('info', '--spec', 'linear: -2, -2'),
            ('info', '--spec', 'cyclic: 0, 0, 0, 0'),
            ('info', '--spec', 'cyclic: -2, -2, -2'),
            ('rays', '--spec', 'linear: 2, -2'),
            ('classify', '--spec', 'cyclic: 1, 0, -1, 0'),
            ('fill', '--target', 'lens:3,1', '--count', '3', '--lutz', '1'),
            ('fill', '--target', 't3:1', '--count', '2'),
            ('cyclic-close', '--spec', 'linear: 0,0,0,0,0'),
            ('cyclic-close', '--spec', 'linear: 1,1,0,0'),
            ('cf', '5', '7'),
            ('congruent', '--spec', 'linear: -2,-2', '--spec', 'linear: -2,-2'),
            ('blowup', '--spec', 'cyclic: 0,0,0,0', '--site', '4'),
            ('blowdown', '--spec', 'linear: -1, 3', '--vertex', '1'),
            ('render', '--spec', 'linear: 0,0,0,0,0', '-o', str(tmp_path / 'a.svg')),
            ('render', '--spec', 'linear: 0,0,0,0,0', '-o', str(tmp_path / 'b.svg'),
             '--lengths', '1,1,1,1,1')]
    for argv in runs:
        status, out, err = _run(*argv)
        assert status in (0, 1)
        jsonschema.validate(json.loads(out), schema)


def test_output_is_deterministic():
    for argv in (('info', '--spec', 'linear: 0,0,0,0,0'),
                 ('info', '--spec', 'linear: 1, 0, -1'),
                 ('fill', '--target', 'lens:3,1', '--count', '2'),
                 ('cyclic-close', '--spec', 'linear: 1,1,0,0'),
                 ('fill', '--target', 'lens:5,2', '--count', '4')):
        assert _run(*argv) == _run(*argv)


def test_golden_files_are_present():
    assert sorted(os.listdir(GOLDEN)) == [
        'classify_xi_ot1.json', 'cyclic_close_1_1_0_0.json', 'fill_lens_3_1.json',
        'info_case1_member.json', 'moment_cyclic_0_0_0_0.json',
        'moment_linear_0_0_0_0_0.json']
    with pytest.raises(AssertionError):
        _check_golden('absent.json', {})
    assert not os.path.exists(os.path.join(GOLDEN, 'absent.json'))


def test_golden_case1_member():
    _check_golden('info_case1_member.json', _run('info', '--spec', 'linear: 1, 0, -1')[1])


def test_golden_overtwisted_example():
    _check_golden('classify_xi_ot1.json', _run('classify', '--spec', 'linear: 0,0,0,0,0')[1])


def test_golden_lens_family():
    _check_golden('fill_lens_3_1.json',
                  _run('fill', '--target', 'lens:3,1', '--count', '2')[1])


def test_golden_closure_failure():
    _check_golden('cyclic_close_1_1_0_0.json',
                  _run('cyclic-close', '--spec', 'linear: 1,1,0,0')[1])


def _render(image, path):
    render_svg(image, str(path))
    with open(str(path), 'rb') as f:
        return f.read()


def test_render_linear(tmp_path):
    image = edge_lengths([0, 0, 0, 0, 0])
    data = _render(image, tmp_path / 'linear.svg')
    assert data == _render(image, tmp_path / 'again.svg')
    assert data.count(b'</text>') == 5
    assert b'stroke-dasharray' in data
    _check_golden('moment_linear_0_0_0_0_0.json', exact(svg_scene(image)))


def test_render_cyclic(tmp_path):
    image = cyclic_closure([0, 0, 0, 0, 0]).image
    data = _render(image, tmp_path / 'cyclic.svg')
    assert data.count(b'</text>') == 4
    assert b'stroke-dasharray' not in data
    _check_golden('moment_cyclic_0_0_0_0.json', exact(svg_scene(image)))


def test_render_errors(tmp_path):
    image = edge_lengths([1, 0, -1])
    with pytest.raises(OSError):
        render_svg(image, '')
    status, out, err = _run('render', '--spec', 'linear: 0,0,0,0,0', '-o',
                            str(tmp_path / 'c.svg'), '--lengths', '1,1,1,1,1')
    assert status == 1
    assert json.loads(out)['error']['type'] == 'NoRealization'


if __name__ == '__main__':
    test_parse_spec()
    test_classify_command()
    test_fill_command()
