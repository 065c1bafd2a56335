"""
Command line front end
=======================================

``toricfill <command> ...`` prints one JSON document per run. Exit status is
0 on success, 1 when the mathematics says no (the document then carries an
``error`` member) and 2 on usage errors.

Plumbings are given as text, e.g. ``--spec "linear: 1, 0, -1"``.
"""

from __future__ import absolute_import

import argparse
import json
import logging
import os
import sys
from fractions import Fraction

import matplotlib
from matplotlib.figure import Figure

from .geometry import classify, families, moment, plumbing
from .geometry.plumbing import (CYCLIC, LEFT_END, LINEAR, RIGHT_END,
                                PlumbingGraph)
from .linalg import forms
from .src._helper.helper import configure_logging, exact
from .src._helper.exceptions import (DegenerateCone, NoRealization, NotToric,
                                     ParseError, ToricFillError, TooShort)

logger = logging.getLogger(__name__)

#: Extra room around the drawing, as a fraction of the bounding box.
SVG_MARGIN = Fraction(1, 20)
#: Figure size in inches.
SVG_SIZE = (6, 6)

SCHEMA_PATH = os.path.join(os.path.dirname(__file__), 'src', 'data',
                           'result_schema.json')

COMMANDS = ('info', 'rays', 'classify', 'fill', 'cyclic-close', 'cf',
            'congruent', 'blowup', 'blowdown', 'render')


class _SpecParser:
    """Recursive descent over: shape ':' int (',' int)*"""

    def __init__(self, text):
        self.text = text
        self.pos = 0

    def error(self, message, expected):
        before = self.text[:self.pos]
        line = before.count('\n') + 1
        column = self.pos - (before.rfind('\n') + 1) + 1
        raise ParseError(message, line, column, expected)

    def skip_space(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def shape(self):
        self.skip_space()
        for word in (LINEAR, CYCLIC):
            if self.text.startswith(word, self.pos):
                self.pos += len(word)
                return word
        self.error('unknown plumbing shape', "'linear' or 'cyclic'")

    def literal(self, char):
        self.skip_space()
        if self.text[self.pos:self.pos + 1] != char:
            self.error('unexpected %s' % self.describe_here(), repr(char))
        self.pos += 1

    def integer(self):
        self.skip_space()
        start = self.pos
        if self.text[self.pos:self.pos + 1] == '-':
            self.pos += 1
        digits = self.pos
        while self.pos < len(self.text) and self.text[self.pos] in '0123456789':
            self.pos += 1
        if self.pos == digits:
            self.pos = start
            self.error('unexpected %s' % self.describe_here(), 'an integer')
        return int(self.text[start:self.pos])

    def describe_here(self):
        if self.pos >= len(self.text):
            return 'end of input'
        return repr(self.text[self.pos])

    def parse(self):
        shape = self.shape()
        self.literal(':')
        weights = [self.integer()]
        while True:
            self.skip_space()
            if self.pos >= len(self.text):
                break
            self.literal(',')
            weights.append(self.integer())
        if shape == CYCLIC and len(weights) < 3:
            self.error('a cyclic plumbing has at least three vertices',
                       "',' and another integer")
        return PlumbingGraph(shape, tuple(weights))


def parse_spec(text):
    """
    Parse "linear: s_1, ..., s_n" or "cyclic: s_1, ..., s_n".

    :param text: the plumbing spec; whitespace is free
    :type text: string
    :rtype: PlumbingGraph
    :raises ParseError: with line, column and the expected token

    :Example:

    >>> from toricfill.cli import parse_spec
    >>> parse_spec('cyclic:0,0,0,0').weights
    (0, 0, 0, 0)
    """
    return _SpecParser(text).parse()


def unparse(g):
    """Inverse of parse_spec."""
    return g.unparse()


def _float_point(p):
    return float(p[0]), float(p[1])


def _outward(v):
    return (-v.x, -v.y)


def _pushed(p, a, b, offset):
    return (p[0] + offset * (a[0] + b[0]), p[1] + offset * (a[1] + b[1]))


def svg_scene(image, margin=SVG_MARGIN):
    """
    Exact drawing plan of a moment image, in image coordinates.

    Every coordinate is a Fraction; render_svg converts to float only when
    it hands the plan to matplotlib.

    :param image: linear or closed moment image
    :param margin: relative margin around the bounding box
    :type image: MomentImage
    :return: dict with rays, curve, edges, fixed_points, gluing_points,
             xlim and ylim
    """
    margin = Fraction(margin)
    vertices = [(Fraction(p[0]), Fraction(p[1])) for p in image.vertices]
    xs = [p[0] for p in vertices]
    ys = [p[1] for p in vertices]
    extent = max(max(xs) - min(xs), max(ys) - min(ys), Fraction(1))
    offset = extent / 10

    rays = []
    if image.rays is not None:
        for point, ray in zip(image.gluing_points, image.rays):
            reach = extent / max(abs(ray.x), abs(ray.y))
            end = (point[0] + reach * ray.x, point[1] + reach * ray.y)
            rays.append((tuple(point), end))
            xs.append(end[0])
            ys.append(end[1])

    # boundary curve: vertices pushed off the image along the outer normals
    curve = []
    if image.closed:
        edge_normals = [e.normal for e in image.edges]
        for j, p in enumerate(vertices):
            curve.append(_pushed(p, _outward(edge_normals[j - 1]),
                                 _outward(edge_normals[j]), offset))
        curve.append(curve[0])
    else:
        normals = image.chain.normals
        curve.extend(end for start, end in rays[:1])
        for j, p in enumerate(vertices):
            curve.append(_pushed(p, _outward(normals[j]),
                                 _outward(normals[j + 1]), offset))
        curve.extend(end for start, end in rays[1:])
    xs.extend(p[0] for p in curve)
    ys.extend(p[1] for p in curve)

    edges = []
    for edge in image.edges:
        a, b = edge.start, edge.end
        label_at = ((a[0] + b[0]) / 2 + offset * edge.normal.x,
                    (a[1] + b[1]) / 2 + offset * edge.normal.y)
        edges.append({'start': tuple(a), 'end': tuple(b),
                      'label': str(edge.weight), 'label_at': label_at})

    pad = margin * max(max(xs) - min(xs), max(ys) - min(ys), Fraction(1))
    return {'rays': rays,
            'curve': curve,
            'edges': edges,
            'fixed_points': [tuple(p) for p in image.fixed_points],
            'gluing_points': [tuple(p) for p in image.gluing_points],
            'xlim': (min(xs) - pad, max(xs) + pad),
            'ylim': (min(ys) - pad, max(ys) + pad)}


def render_svg(image, path, size=SVG_SIZE, margin=SVG_MARGIN):
    """
    Draw a moment image as SVG.

    Edges are black and labelled with their weights, rays dashed, the
    boundary curve green, fixed points black and the solid-torus gluing
    points blue. Output is byte-identical for identical input.

    :param image: linear or closed moment image
    :param path: output file name
    :param size: figure size in inches
    :param margin: relative margin around the bounding box
    :type image: MomentImage
    :raises OSError: for an empty path or an unwritable file
    """
    if not path:
        raise OSError('no output path given')
    scene = svg_scene(image, margin)
    with matplotlib.rc_context({'svg.hashsalt': 'toricfill',
                                'svg.fonttype': 'none'}):
        fig = Figure(figsize=size)
        ax = fig.add_subplot(1, 1, 1)
        for start, end in scene['rays']:
            ax.plot([float(start[0]), float(end[0])],
                    [float(start[1]), float(end[1])], color='black',
                    linestyle='--', linewidth=1)
        curve = [_float_point(p) for p in scene['curve']]
        ax.plot([p[0] for p in curve], [p[1] for p in curve], color='green',
                linewidth=1.5)
        for edge in scene['edges']:
            a, b = _float_point(edge['start']), _float_point(edge['end'])
            ax.plot([a[0], b[0]], [a[1], b[1]], color='black', linewidth=2)
            mid = _float_point(edge['label_at'])
            ax.text(mid[0], mid[1], edge['label'], ha='center',
                    va='center', fontsize=10)
        fixed = [_float_point(p) for p in scene['fixed_points']]
        ax.plot([p[0] for p in fixed], [p[1] for p in fixed], 'o',
                color='black', markersize=5)
        glue = [_float_point(p) for p in scene['gluing_points']]
        if glue:
            ax.plot([p[0] for p in glue], [p[1] for p in glue], 'o',
                    color='blue', markersize=6)
        ax.set_xlim(*[float(v) for v in scene['xlim']])
        ax.set_ylim(*[float(v) for v in scene['ylim']])
        ax.set_aspect('equal')
        ax.set_axis_off()
        fig.savefig(path, format='svg', metadata={'Date': None})
    logger.info('wrote %s', path)
    return path


def moment_image_of(g, verbosity=0):
    """Default moment image of a plumbing: solver lengths for a linear
    plumbing, the first closing rotation for a cyclic one."""
    if g.is_linear:
        return moment.edge_lengths(moment.normal_chain(g), verbosity)
    r, closure = classify.closing_rotation(g, verbosity)
    return closure.image


def info_document(g, verbosity=0):
    """Everything known about one plumbing, in a fixed field order."""
    form = plumbing.intersection_form(g)
    check = plumbing.concavity_certificate(form, verbosity)
    doc = {'input': g,
           'intersection_form': form,
           'form_invariants': forms.form_invariants(form),
           'negative_definite': plumbing.is_negative_definite(form),
           'concavity': check,
           'toric_minimal': plumbing.is_toric_minimal(g),
           'canonical_form': list(plumbing.canonical_form(g))}
    notes = []
    if g.is_linear:
        chain = moment.normal_chain(g)
        doc['normals'] = chain
        doc['rays'] = _rays_document(g, chain)
        try:
            angle = moment.cone_angle(chain)
            doc['cone_angle'] = _angle_document(angle)
            doc['classification'] = classify.classify_linear_boundary(g)
        except DegenerateCone as e:
            doc['cone_angle'] = None
            doc['classification'] = None
            notes.append(str(e))
    else:
        try:
            doc['classification'] = classify.classify_cyclic_boundary(
                g, verbosity)
        except NotToric as e:
            doc['classification'] = None
            notes.extend('rotation %d: %s' % r for r in e.reasons)
    doc['notes'] = notes
    return doc


def _rays_document(g, chain):
    r1, r2 = moment.rays_from_chain(chain)
    try:
        e1, e2 = moment.rays_eq1(g)
        eq1 = {'R1': e1, 'R2': e2}
        agree = (e1, e2) == (r1, r2)
    except TooShort:
        eq1, agree = None, None
    return {'gluing': eq1, 'chain': {'R1': r1, 'R2': r2}, 'agree': agree}


def _angle_document(angle):
    return {'half_turns': angle.half_turns,
            'exact': angle.exact,
            'interval': classify.angle_interval(angle)}


def _linear_only(g, command):
    if not g.is_linear:
        raise _UsageError('%s needs a linear plumbing' % command)
    return g


def _site(text):
    if text in (LEFT_END, RIGHT_END):
        return text
    try:
        return int(text)
    except ValueError:
        raise _UsageError("site must be an integer, 'left_end' or 'right_end'")


def _lengths(text):
    try:
        return [Fraction(item.strip()) for item in text.split(',')]
    except ValueError:
        raise _UsageError('lengths are comma separated rationals like 1/2')


def _cmd_info(args):
    return info_document(parse_spec(args.spec), args.verbose)


def _cmd_rays(args):
    g = _linear_only(parse_spec(args.spec), 'rays')
    chain = moment.normal_chain(g)
    doc = {'input': g}
    doc.update(_rays_document(g, chain))
    doc['cone_angle'] = _angle_document(moment.cone_angle(chain))
    return doc


def _cmd_classify(args):
    g = parse_spec(args.spec)
    if g.is_linear:
        found = classify.classify_linear_boundary(g)
    else:
        found = classify.classify_cyclic_boundary(g, args.verbose)
    return {'input': g, 'classification': found,
            'descriptor': found.describe()}


def _cmd_fill(args):
    target = classify.parse_target(args.target, args.lutz)
    request = families.FamilyRequest(target, args.count, args.start)
    family = families.generate_fillings(request, args.verbose)
    return {'family': family}


def _cmd_cyclic_close(args):
    g = _linear_only(parse_spec(args.spec), 'cyclic-close')
    closure = moment.cyclic_closure(g, args.verbose)
    return {'input': g, 'closure': closure,
            'classification': classify.Free(closure.N)}


def _cmd_cf(args):
    cf = families.continued_fraction(args.k, args.l)
    return {'k': args.k, 'l': args.l, 'continued_fraction': cf,
            'plumbing': cf.as_plumbing()}


def _cmd_congruent(args):
    if len(args.spec) != 2:
        raise _UsageError('congruent needs exactly two --spec options')
    g1, g2 = [parse_spec(text) for text in args.spec]
    q1 = plumbing.intersection_form(g1)
    q2 = plumbing.intersection_form(g2)
    if q1.dimension != q2.dimension:
        separated = 'dimension'
        witness = None
    else:
        separated = forms.separating_invariant(q1, q2)
        witness = forms.congruent_within_bound(q1, q2, args.bound,
                                               args.verbose)
    return {'inputs': [g1, g2],
            'bound': args.bound,
            'invariants': [forms.form_invariants(q1),
                           forms.form_invariants(q2)],
            'congruent': witness is not None,
            'witness': witness,
            'separating_invariant': separated,
            'proved': witness is not None or separated is not None}


def _cmd_blowup(args):
    g = parse_spec(args.spec)
    if args.all:
        sites = plumbing.blow_up_sites(g)
    elif args.site is not None:
        sites = [_site(args.site)]
    else:
        raise _UsageError('blowup needs --site or --all')
    results = [{'site': site, 'result': plumbing.blow_up(g, site)}
               for site in sites]
    return {'input': g, 'blow_ups': results}


def _cmd_blowdown(args):
    g = parse_spec(args.spec)
    return {'input': g, 'vertex': args.vertex,
            'result': plumbing.blow_down(g, args.vertex)}


def _cmd_render(args):
    g = parse_spec(args.spec)
    image = moment_image_of(g, args.verbose)
    if args.lengths is not None:
        rho = _lengths(args.rho) if args.rho is not None else None
        image = image.with_lengths(_lengths(args.lengths), rho)
    render_svg(image, args.output)
    return {'input': g, 'image': image, 'output': args.output}


_HANDLERS = {'info': _cmd_info,
             'rays': _cmd_rays,
             'classify': _cmd_classify,
             'fill': _cmd_fill,
             'cyclic-close': _cmd_cyclic_close,
             'cf': _cmd_cf,
             'congruent': _cmd_congruent,
             'blowup': _cmd_blowup,
             'blowdown': _cmd_blowdown,
             'render': _cmd_render}


class _UsageError(Exception):
    pass


class _Exit(Exception):
    def __init__(self, status):
        Exception.__init__(self, status)
        self.status = status


class _ArgumentParser(argparse.ArgumentParser):
    """argparse writing to the given streams and raising instead of exiting."""

    streams = (None, None)

    def _print_message(self, message, file=None):
        if not message:
            return
        out, err = self.streams
        (out if file is sys.stdout else err).write(message)

    def exit(self, status=0, message=None):
        if message:
            self._print_message(message, sys.stderr)
        raise _Exit(status)

    def error(self, message):
        raise _UsageError(message)


def _int_at_least(lowest):
    def convert(text):
        try:
            value = int(text)
        except ValueError:
            raise argparse.ArgumentTypeError('invalid int value: %r' % text)
        if value < lowest:
            raise argparse.ArgumentTypeError('must be at least %d, got %d'
                                             % (lowest, value))
        return value
    return convert


def build_parser(stdout, stderr):
    """The argparse parser of every subcommand."""
    _ArgumentParser.streams = (stdout, stderr)
    parser = _ArgumentParser(prog='toricfill', description=__doc__.strip()
                             .splitlines()[0])
    parser.add_argument('-v', '--verbose', action='count', default=0,
                        help='log progress to stderr (repeat for debug)')
    sub = parser.add_subparsers(dest='command', metavar='command')

    p = sub.add_parser('info', help='full report on a plumbing')
    p.add_argument('--spec', required=True, help='plumbing, e.g. "linear: 1,0,-1"')
    p = sub.add_parser('rays', help='rays and angle of the moment cone')
    p.add_argument('--spec', required=True)
    p = sub.add_parser('classify', help='contact toric boundary of a plumbing')
    p.add_argument('--spec', required=True)
    p = sub.add_parser('fill', help='verified family of concave fillings of a target')
    p.add_argument('--target', required=True,
                   help='lens:k,l | s1xs2 | t3:N')
    p.add_argument('--count', type=_int_at_least(1), default=3)
    p.add_argument('--lutz', type=int, default=0,
                   help='number of half-Lutz twists')
    p.add_argument('--start', type=int, default=0,
                   help='first family index (n or m)')
    p = sub.add_parser('cyclic-close', help='close a linear plumbing ending in 0')
    p.add_argument('--spec', required=True)
    p = sub.add_parser('cf', help='continued fraction of k/l')
    p.add_argument('k', type=int)
    p.add_argument('l', type=int)
    p = sub.add_parser('congruent', help='bounded congruence search of two forms')
    p.add_argument('--spec', action='append', required=True,
                   help='given twice')
    p.add_argument('--bound', type=_int_at_least(0),
                   default=forms.DEFAULT_BOUND)
    p = sub.add_parser('blowup', help='toric blow-up')
    p.add_argument('--spec', required=True)
    p.add_argument('--site', help="corner j, 'left_end' or 'right_end'")
    p.add_argument('--all', action='store_true', help='every valid site')
    p = sub.add_parser('blowdown', help='toric blow-down of a -1 sphere')
    p.add_argument('--spec', required=True)
    p.add_argument('--vertex', type=int, required=True)
    p = sub.add_parser('render', help='draw the moment image as SVG')
    p.add_argument('--spec', required=True)
    p.add_argument('-o', '--output', required=True)
    p.add_argument('--lengths', help='override edge lengths, e.g. 1,1,2,1,1')
    p.add_argument('--rho', help='ray parameters rho_1,rho_2 with --lengths')
    return parser


def _error_document(command, error):
    doc = {'type': type(error).__name__, 'message': str(error)}
    if isinstance(error, NoRealization) and error.refutation is not None:
        doc['refutation'] = error.refutation
    if isinstance(error, NotToric):
        doc['reasons'] = [{'rotation': r, 'reason': why}
                          for r, why in error.reasons]
    if isinstance(error, ParseError):
        doc['line'] = error.line
        doc['column'] = error.column
        doc['expected'] = error.expected
    return {'command': command, 'error': doc}


def _emit(stream, doc):
    stream.write(json.dumps(exact(doc), indent=2) + '\n')


def run_command(argv=None, stdout=None, stderr=None):
    """
    Run one command line.

    :param argv: arguments without the program name (default sys.argv[1:])
    :param stdout: stream for the JSON document (default sys.stdout)
    :param stderr: stream for diagnostics (default sys.stderr)
    :return: exit status 0, 1 or 2
    :rtype: int
    """
    stdout = sys.stdout if stdout is None else stdout
    stderr = sys.stderr if stderr is None else stderr
    parser = build_parser(stdout, stderr)
    try:
        args = parser.parse_args(sys.argv[1:] if argv is None else argv)
    except _UsageError as e:
        parser.print_usage(stderr)
        stderr.write('toricfill: error: %s\n' % e)
        return 2
    except _Exit as e:
        return e.status
    if args.command is None:
        parser.print_usage(stderr)
        stderr.write('toricfill: error: a command is required\n')
        return 2
    configure_logging(args.verbose, stderr)
    try:
        body = _HANDLERS[args.command](args)
    except _UsageError as e:
        stderr.write('toricfill %s: error: %s\n' % (args.command, e))
        return 2
    except (ToricFillError, OSError) as e:
        stderr.write('toricfill %s: %s\n' % (args.command, e))
        _emit(stdout, _error_document(args.command, e))
        return 1
    doc = {'command': args.command}
    doc.update(body)
    _emit(stdout, doc)
    return 0


def main():
    sys.exit(run_command())
