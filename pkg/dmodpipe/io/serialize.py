"""
JSON codecs for the exact objects and the report containers.

Rationals are written as ``"p/q"`` strings (integers as ``"p"``), series
as ``{"ram": r, "trunc": "p/q" | null, "exp": [[e_num, e_den, c_num, c_den], ...]}``
and slope multisets as ``[["p", "q", multiplicity], ...]``.

Decoding errors are reported as `InvalidInput`.
"""
import json
import logging
from collections import Counter
from collections.abc import Mapping
from fractions import Fraction

from sympy import MatrixBase
from sympy.polys.rings import PolyElement

from ..core import Container
from ..core.errors import InvalidInput
from ..exact import TruncatedPuiseuxSeries, as_rational, format_rational
from ..exact.bipoly import bipoly_to_json
from ..formal import DifferentialOperator, ElementaryModule, FormalModule
from ..quiver import DiskQuad, MonodromyPair, QuadMorphism

log = logging.getLogger(__name__)

__all__ = [
    'encode',
    'encode_series',
    'encode_component',
    'encode_module',
    'encode_operator',
    'encode_matrix',
    'encode_slopes',
    'decode_rational',
    'decode_series',
    'decode_component',
    'decode_module',
    'decode_matrix',
    'decode_pair',
    'decode_quad',
    'decode_formal_type',
    'load_json',
    'dump_json',
]


def encode_series(series):
    return {
        'ram': series.ram,
        'trunc': None if series.trunc is None else format_rational(series.trunc),
        'exp': series.to_quadruples(),
    }


def encode_component(component):
    return {
        'ram': component.r,
        'exp': component.f.to_quadruples(),
        'residue': format_rational(component.residue),
        'unip': component.unip,
    }


def encode_module(module):
    return {'components': [encode_component(c) for c in module]}


def encode_operator(operator):
    return {
        'order': operator.order,
        'coefficients': [encode_series(a) for a in operator.coefficients],
    }


def encode_matrix(matrix):
    return [[format_rational(Fraction(int(v.p), int(v.q))) for v in matrix.row(i)]
            for i in range(matrix.rows)]


def encode_slopes(slopes):
    """ Counter or [[slope, mult], ...] -> [["p", "q", mult], ...] """
    if isinstance(slopes, Mapping):
        slopes = sorted(slopes.items())
    result = []
    for s, mult in slopes:
        s = as_rational(s)
        result.append([str(s.numerator), str(s.denominator), int(mult)])
    return result


def _encode_container(container):
    result = {}
    for name, value in container.items():
        if name.startswith('slopes'):
            result[name] = encode_slopes(value)
        else:
            result[name] = encode(value)
    return result


def encode(obj):
    """
    Turn `obj` into plain JSON data, recursing into containers, mappings
    and sequences.
    """
    if obj is None or isinstance(obj, (bool, str)):
        return obj
    if isinstance(obj, int):
        return int(obj)
    if isinstance(obj, Fraction):
        return format_rational(obj)
    if isinstance(obj, TruncatedPuiseuxSeries):
        return encode_series(obj)
    if isinstance(obj, ElementaryModule):
        return encode_component(obj)
    if isinstance(obj, FormalModule):
        return encode_module(obj)
    if isinstance(obj, DifferentialOperator):
        return encode_operator(obj)
    if isinstance(obj, MatrixBase):
        return encode_matrix(obj)
    if isinstance(obj, PolyElement):
        return bipoly_to_json(obj)
    if isinstance(obj, MonodromyPair):
        return {'dim': obj.dim, 'rho': encode_matrix(obj.rho)}
    if isinstance(obj, DiskQuad):
        return {'dim_v': obj.dim_v, 'dim_vp': obj.dim_vp,
                'can': encode_matrix(obj.can), 'var': encode_matrix(obj.var)}
    if isinstance(obj, QuadMorphism):
        return {'phi_v': encode_matrix(obj.phi_v),
                'phi_vp': encode_matrix(obj.phi_vp)}
    if isinstance(obj, Container):
        return _encode_container(obj)
    if isinstance(obj, Counter):
        return encode_slopes(obj)
    if isinstance(obj, Mapping):
        return {_encode_key(k): encode(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [encode(v) for v in obj]
    if hasattr(obj, 'to_dict'):
        return encode(obj.to_dict())
    raise TypeError("cannot encode {} as JSON".format(type(obj).__name__))


def _encode_key(key):
    if isinstance(key, Fraction):
        return format_rational(key)
    return str(key)


# decoding

def decode_rational(value, what='value'):
    if isinstance(value, bool) or value is None:
        raise InvalidInput("{} must be a rational, got {!r}".format(what, value))
    try:
        return as_rational(value)
    except (ValueError, TypeError, ZeroDivisionError):
        raise InvalidInput("{} must be a rational, got {!r}".format(what, value))


def _require(doc, kind):
    if not isinstance(doc, Mapping):
        raise InvalidInput("{} must be a JSON object, got {}".format(
            kind, type(doc).__name__))


def _quadruples(exp, what):
    if not isinstance(exp, list):
        raise InvalidInput("{} must be a list of quadruples".format(what))
    terms = {}
    for entry in exp:
        if (not isinstance(entry, list) or len(entry) != 4
                or not all(isinstance(x, int) and not isinstance(x, bool)
                           for x in entry)):
            raise InvalidInput(
                "{} entries must be [e_num, e_den, c_num, c_den], got {!r}"
                .format(what, entry))
        en, ed, cn, cd = entry
        if ed == 0 or cd == 0:
            raise InvalidInput("zero denominator in {}: {!r}".format(what, entry))
        e = Fraction(en, ed)
        terms[e] = terms.get(e, 0) + Fraction(cn, cd)
    return terms


def _positive_int(doc, key, default, what):
    value = doc.get(key, default)
    if isinstance(value, bool) or not isinstance(value, int) or value < 1:
        raise InvalidInput("{} '{}' must be a positive integer, got {!r}"
                           .format(what, key, value))
    return value


def decode_series(doc):
    _require(doc, 'series')
    ram = _positive_int(doc, 'ram', 1, 'series')
    trunc = doc.get('trunc')
    if trunc is not None:
        trunc = decode_rational(trunc, 'series truncation')
    terms = _quadruples(doc.get('exp', []), 'series exponents')
    try:
        return TruncatedPuiseuxSeries(terms, ram=ram, trunc=trunc)
    except ValueError as err:
        raise InvalidInput(str(err))


def decode_component(doc):
    _require(doc, 'component')
    ram = _positive_int(doc, 'ram', 1, 'component')
    unip = _positive_int(doc, 'unip', 1, 'component')
    residue = decode_rational(doc.get('residue', 0), 'residue')
    terms = _quadruples(doc.get('exp', []), 'component exponents')
    try:
        f = TruncatedPuiseuxSeries(terms, ram=ram)
    except ValueError as err:
        raise InvalidInput(str(err))
    return ElementaryModule(f, residue, ram, unip)


def decode_module(doc):
    """ FormalModule from ``{"components": [...]}`` """
    _require(doc, 'module')
    components = doc.get('components')
    if not isinstance(components, list):
        raise InvalidInput("module document needs a 'components' list")
    return FormalModule(decode_component(c) for c in components)


def decode_matrix(rows, shape=None):
    from ..utils.linalg import as_matrix

    if not isinstance(rows, list) or not all(isinstance(r, list) for r in rows):
        raise InvalidInput("matrix must be a list of rows")
    if len({len(r) for r in rows}) > 1:
        raise InvalidInput("matrix rows have different lengths")
    entries = [[decode_rational(v, 'matrix entry') for v in r] for r in rows]
    return as_matrix(entries, shape=shape)


def decode_pair(doc):
    _require(doc, 'monodromy pair')
    dim = doc.get('dim')
    return MonodromyPair(decode_matrix(doc.get('rho', []),
                                       shape=None if dim is None else (dim, dim)),
                         dim=dim)


def decode_quad(doc):
    _require(doc, 'quad')
    dim_v = doc.get('dim_v')
    dim_vp = doc.get('dim_vp')
    known = dim_v is not None and dim_vp is not None
    can = decode_matrix(doc.get('can', []),
                        shape=(dim_vp, dim_v) if known else None)
    var = decode_matrix(doc.get('var', []),
                        shape=(dim_v, dim_vp) if known else None)
    return DiskQuad(can, var, dim_v=dim_v, dim_vp=dim_vp)


def decode_formal_type(doc):
    """
    FormalType from
    ``{"genus": g, "rank": n, "points": [{"label": ..., "weight": w, "psi": module}]}``
    """
    from ..globalcalc import FormalPoint, FormalType

    _require(doc, 'formal type')
    points = doc.get('points', [])
    if not isinstance(points, list):
        raise InvalidInput("formal type needs a 'points' list")
    decoded = []
    for point in points:
        _require(point, 'point')
        if 'psi' not in point:
            raise InvalidInput("point {!r} has no 'psi' module".format(
                point.get('label')))
        decoded.append(FormalPoint(
            str(point.get('label', len(decoded))),
            decode_module(point['psi']),
            weight=_positive_int(point, 'weight', 1, 'point'),
        ))
    genus = doc.get('genus', 0)
    if isinstance(genus, bool) or not isinstance(genus, int) or genus < 0:
        raise InvalidInput("genus must be a nonnegative integer, got {!r}"
                           .format(genus))
    rank = doc.get('rank')
    if rank is None and decoded:
        rank = decoded[0].psi.rank
    if isinstance(rank, bool) or not isinstance(rank, int) or rank < 1:
        raise InvalidInput("rank must be a positive integer, got {!r}".format(rank))
    return FormalType(rank=rank, points=decoded, genus=genus)


def load_json(path):
    """ parsed content of a JSON file """
    try:
        with open(path) as f:
            return json.load(f)
    except json.JSONDecodeError as err:
        raise InvalidInput("{} is not valid JSON: {}".format(path, err))


def dump_json(obj, path=None, **kwargs):
    """
    Encode `obj` and write it to `path` (if given).

    Returns
    -------
    str
        the JSON text
    """
    kwargs.setdefault('indent', 2)
    text = json.dumps(encode(obj), **kwargs)
    if path is not None:
        with open(path, 'w') as f:
            f.write(text + '\n')
        log.debug("wrote %s", path)
    return text
