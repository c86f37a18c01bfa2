"""
Fixed-layout result records. Every report a tool writes (invariants, identity
checks, transformed formal types) is a `Container`, converted to JSON by
`dmodpipe.io.serialize`.
"""
from collections import defaultdict
from copy import deepcopy
from pprint import pformat
from textwrap import wrap

__all__ = ['Field', 'Container', 'Map']


class Field:
    """
    One declared entry of a `Container`.

    Parameters
    ----------
    default:
        value set on construction and by `Container.reset`
    description: str
        help text
    exact: bool
        False when the value comes from a truncated computation and only
        holds up to the precision reported next to it
    """

    def __init__(self, default, description="", exact=True):
        self.default = default
        self.description = description
        self.exact = exact

    def __repr__(self):
        if self.exact:
            return str(self.description)
        return '{} [truncated]'.format(self.description)


class ContainerMeta(type):
    """
    Moves the `Field` class attributes into ``fields`` and turns them into
    ``__slots__``, so that instances cannot grow undeclared entries.
    Fields of base containers are inherited and may be redeclared.
    """

    def __new__(mcs, name, bases, dct):
        declared = [k for k, v in dct.items() if isinstance(v, Field)]
        fields = {}
        for base in bases:
            fields.update(getattr(base, 'fields', {}))
        for key in declared:
            fields[key] = dct.pop(key)
        dct['fields'] = fields
        dct['__slots__'] = tuple(declared) + ('meta',)
        return type.__new__(mcs, name, bases, dct)


def _convert(value, flatten):
    if isinstance(value, (Container, Map)):
        return value.as_dict(recursive=True, flatten=flatten)
    if isinstance(value, list):
        return [v.as_dict(recursive=True) if isinstance(v, Container) else v
                for v in value]
    return value


def _as_dict(pairs, recursive, flatten):
    if not recursive:
        return dict(pairs)
    out = {}
    for key, value in pairs:
        if isinstance(value, (Container, Map)) and flatten:
            for sub, item in value.as_dict(recursive=True).items():
                out["{}_{}".format(key, sub)] = item
        else:
            out[key] = _convert(value, flatten)
    return out


class Container(metaclass=ContainerMeta):
    """
    A record with a fixed set of named entries, each with a default and a
    description. Entries can be read as attributes or by key; assigning an
    undeclared name raises `AttributeError`.

    >>> class CheckReport(Container):
    ...     passed = Field(False, "True if the identity holds")
    ...     precision = Field(None, "truncation in effect", exact=False)
    >>> report = CheckReport(passed=True)
    >>> report.meta['flavor'] = '0-infty'

    Entries may hold other containers, lists of containers, or a `Map` of
    containers keyed by e.g. a point label. ``meta`` is a free-form dict
    that survives `reset`.
    """

    def __init__(self, **values):
        self.meta = {}
        for key, field in self.fields.items():
            setattr(self, key, deepcopy(field.default))
        self.update(**values)

    def __getitem__(self, key):
        return getattr(self, key)

    def __setitem__(self, key, value):
        setattr(self, key, value)

    def keys(self):
        return self.fields.keys()

    def values(self):
        return (getattr(self, k) for k in self.fields)

    def items(self):
        return ((k, getattr(self, k)) for k in self.fields)

    def as_dict(self, recursive=False, flatten=False):
        """
        Convert to a `dict`.

        Parameters
        ----------
        recursive: bool
            also convert nested containers, including those inside lists
        flatten: bool
            merge nested containers into the top level, under the key
            ``<entry>_<subentry>``
        """
        pairs = [(k, v) for k, v in self.items()
                 if not (recursive and k.startswith('_'))]
        return _as_dict(pairs, recursive, flatten)

    def reset(self, recursive=True):
        """ restore every entry to its default """
        for key, field in self.fields.items():
            if isinstance(field.default, Container):
                if recursive:
                    getattr(self, key).reset()
            else:
                setattr(self, key, deepcopy(field.default))

    def update(self, **values):
        for key, value in values.items():
            self[key] = value

    def __str__(self):
        return pformat(self.as_dict(recursive=True))

    def __repr__(self):
        lines = ["{}.{}:".format(type(self).__module__, type(self).__name__)]
        for key, field in self.fields.items():
            value = getattr(self, key)
            suffix = ""
            if isinstance(value, Container):
                suffix = ".*"
            elif isinstance(value, Map):
                suffix = "[*]"
            lines.extend(wrap("{:>30s}: {}".format(key + suffix, repr(field)),
                              80, subsequent_indent=' ' * 32))
        return "\n".join(lines)


class Map(defaultdict):
    """
    Sub-containers indexed by a key such as a point label; missing keys are
    created from the default factory.
    """

    def as_dict(self, recursive=False, flatten=False):
        return _as_dict(list(self.items()), recursive, flatten)

    def reset(self, recursive=True):
        for value in self.values():
            if isinstance(value, Container):
                value.reset(recursive=recursive)
