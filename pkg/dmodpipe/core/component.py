""" Configurable building blocks: oracles, engines, classifiers """

from abc import ABCMeta
from logging import getLogger

from traitlets.config import Configurable

__all__ = ['Component']


class AbstractConfigurableMeta(type(Configurable), ABCMeta):
    """ lets a `Component` declare abstract methods """


class Component(Configurable, metaclass=AbstractConfigurableMeta):
    """
    Base class of everything that computes with user-tunable parameters
    (truncation windows, search depths, iteration counts).

    Parameters are `traitlets` tagged with ``config=True``; they are then
    settable from a configuration file or from the command line of the
    `dmodpipe.core.Tool` owning the component:

    .. code:: python

        from dmodpipe.core import Component
        from dmodpipe.core.traits import Int

        class WindowedOracle(Component):
            truncation = Int(40, help='exponent steps kept').tag(config=True)

        oracle = WindowedOracle(truncation=60)

    Output goes through ``self.log``, a child of the parent tool's logger
    when there is a parent.
    """

    def __init__(self, parent=None, config=None, **kwargs):
        """
        Parameters
        ----------
        parent: Tool or Component
            owner, whose configuration and logger are inherited
        config: traitlets.config.Config
            configuration used when there is no parent
        kwargs
            trait values
        """
        super().__init__(parent=parent, config=config, **kwargs)
        if self.parent:
            self.log = self.parent.log.getChild(self.__class__.__name__)
        else:
            self.log = getLogger('{}.{}'.format(self.__class__.__module__,
                                                self.__class__.__name__))

    def get_current_config(self):
        """ values of all configurable traits, set or defaulted """
        return {self.__class__.__name__: {name: getattr(self, name)
                                          for name in
                                          self.trait_names(config=True)}}
