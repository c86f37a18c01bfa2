"""
Factories choose one concrete `Component` among the subclasses of a base
class, by class name or by a short alias, from the configuration.
"""
from copy import copy, deepcopy
from inspect import isabstract

from traitlets import CaselessStrEnum
from traitlets.config.loader import Config

from .component import Component

__all__ = ['Factory']


def _concrete_subclasses(base):
    """ all non-abstract classes below ``base``, depth first """
    found = []
    for sub in base.__subclasses__():
        if not isabstract(sub):
            found.append(sub)
        found.extend(_concrete_subclasses(sub))
    return found


class FactoryMeta(type(Component), type):
    """
    Fills in the product registry of a `Factory` subclass and copies the
    configurable traits of every product onto it, so that a single
    ``--help`` lists everything a product could be configured with.
    """

    def __new__(mcs, name, bases, dct):
        base = dct.get('base')
        dct['subclasses'] = None
        dct['subclass_names'] = None
        if base is not None:
            if not (isinstance(base, type) and issubclass(base, Component)):
                raise AttributeError("Factory.base must be set to a Component")

            subclasses = _concrete_subclasses(base)
            aliases = dct.get('product_aliases') or {}
            dct['subclasses'] = subclasses
            dct['subclass_names'] = [c.__name__ for c in subclasses]
            dct['product'] = CaselessStrEnum(
                dct['subclass_names'] + list(aliases),
                dct.get('default'),
                allow_none=True,
                help=dct.get('custom_product_help') or
                'Product class to obtain from the Factory.'
            ).tag(config=True)

            owners = {}
            for sub in subclasses:
                for key, trait in sub.class_traits(config=True).items():
                    if key not in owners:
                        owners[key] = (deepcopy(trait), [])
                    owners[key][1].append(sub.__name__)
            for key, (trait, names) in owners.items():
                trait.help += "\n\nCompatible Components: {}".format(names)
                dct[key] = trait

        return type.__new__(mcs, name, bases, dct)


class Factory(Component, metaclass=FactoryMeta):
    """
    Base class of the component factories.

    A subclass sets `base`; every concrete subclass of `base` becomes a
    product, and the product traits are exposed on the factory. Keyword
    arguments that are traits of the chosen product are handed on to it,
    the others are dropped.

    >>> flavor = FourierFlavorFactory.produce(config=self.config, tool=self,
    ...                                       product='0-infty')

    Attributes
    ----------
    base : type
        Common base class of the products.
    product : traitlets.CaselessStrEnum
        Name or alias of the product, built by `FactoryMeta`.
    product_aliases : dict
        Short names mapped to product class names.
    default : str
        Product used when none is configured, or None.
    custom_product_help : str
        Help text of the ``product`` trait.
    """
    base = None
    product = None
    product_aliases = None
    subclasses = None
    subclass_names = None
    default = None
    custom_product_help = None

    def __init__(self, config=None, tool=None, **kwargs):
        if not self.base:
            raise AttributeError("Factory.base must be set to a Component")
        product = kwargs.pop('product', None)
        super().__init__(config=config, parent=tool)
        if product is not None:
            self.product = product
        self.kwargs = copy(kwargs)

    def _product_class(self):
        if not self.product:
            raise AttributeError("no product configured for {}"
                                 .format(self.__class__.__name__))
        registry = {cls.__name__.lower(): cls for cls in self.subclasses}
        for alias, target in (self.product_aliases or {}).items():
            registry[alias.lower()] = registry[target.lower()]
        self.log.debug("{} produces {}".format(self.__class__.__name__,
                                               self.product))
        try:
            return registry[self.product.lower()]
        except KeyError:
            self.log.exception('no product "{}"'.format(self.product))
            raise

    def _instance(self):
        product = self._product_class()
        accepted = product.class_trait_names()
        config = Config(deepcopy(self.config))

        # settings given to the factory apply to the product
        for key, value in config[self.__class__.__name__].items():
            if key in accepted:
                config[product.__name__][key] = value

        kwargs = {k: v for k, v in self.kwargs.items() if k in accepted}
        return product(parent=self.parent, config=config, **kwargs)

    @classmethod
    def produce(cls, config=None, tool=None, **kwargs):
        """
        Build the configured product.

        Parameters
        ----------
        config : traitlets.config.Config
            Configuration from a file or from the command line, or None.
        tool : dmodpipe.core.Tool
            Tool the product belongs to; it becomes the product's parent.
        kwargs
            ``product`` to choose it directly, and traits of the product.

        Returns
        -------
        Component
            Instance of the chosen product.
        """
        return cls(config=config, tool=tool, **kwargs)._instance()
