import json
import logging
import sys
from abc import abstractmethod

from traitlets import TraitError, Unicode
from traitlets.config import Application

from dmodpipe import __version__ as version
from .errors import DModError
from .logging import ColoredFormatter
from .provenance import Provenance

logging.basicConfig(level=logging.WARNING)

__all__ = ['Tool', 'ToolConfigurationError']

#: process exit codes returned by `Tool.run`
EXIT_SUCCESS = 0
EXIT_INTERNAL_ERROR = 1
EXIT_DOMAIN_ERROR = 2


class ToolConfigurationError(Exception):

    def __init__(self, message):
        super().__init__(message)
        self.message = message


class Tool(Application):
    """
    Base class of the ``dmod`` subcommands, built on
    `traitlets.config.Application`: command-line and configuration file
    handling, logging, JSON output and provenance.

    A subclass sets `name` and `description`, lists the `Component`
    classes it configures in `classes`, maps short command-line options
    onto component traits with `aliases`, and implements `setup`,
    `start` and `finish`. `run` never raises; it returns the exit code:
    0 on success, 2 when a configuration error or a typed `DModError`
    stopped the tool, 1 on anything else.

    .. code:: python

        from dmodpipe.core import Tool
        from dmodpipe.core.traits import Dict, List

        class SlopesTool(Tool):
            name = "slopes"
            description = "slopes of a module"
            aliases = Dict({'trunc': 'LocalFourierOracle.truncation'})
            classes = List([LocalFourierOracle])

            def setup(self):
                self.oracle = LocalFourierOracle(parent=self)

            def start(self):
                self.result = self.oracle.realize(f, residue)

            def finish(self):
                self.write_result({'slopes': self.result.slopes})

        def main():
            sys.exit(SlopesTool().run())
    """

    config_file = Unicode('', help=("name of a configuration file with "
                                    "parameters to load in addition to "
                                    "command-line parameters")).tag(config=True)

    output = Unicode('', help=("write the JSON result to this file instead "
                               "of standard output")).tag(config=True)

    _log_formatter_cls = ColoredFormatter

    def __init__(self, **kwargs):
        # every tool gets the same basic aliases
        aliases = dict(self.aliases)
        aliases.setdefault('log-level', 'Application.log_level')
        aliases.setdefault('config', 'Tool.config_file')
        aliases.setdefault('output', 'Tool.output')
        self.aliases = aliases

        super().__init__(**kwargs)
        self.log_format = ('%(levelname)8s [%(name)s] '
                           '(%(module)s/%(funcName)s): %(message)s')
        self.log_level = logging.INFO
        self.is_setup = False

    def get_default_logging_config(self):
        """ the library loggers under ``dmodpipe`` share the tool's console """
        config = super().get_default_logging_config()
        if 'loggers' in config:
            level = self.log_level
            if isinstance(level, int):
                level = logging.getLevelName(level)
            config['loggers']['dmodpipe'] = {
                'level': level,
                'handlers': ['console'],
                'propagate': False,
            }
        return config

    def initialize(self, argv=None):
        """ handle config and any other low-level setup """
        self.parse_command_line(argv)
        if self.config_file != '':
            self.log.debug("Loading config from '{}'".format(self.config_file))
            self.load_config_file(self.config_file)
            # command-line values win over the file
            self.update_config(self.cli_config)
        self.log.info("dmodpipe version {}".format(self.version_string))

    @abstractmethod
    def setup(self):
        """set up the tool (override in subclass). Here the user should
        construct all `Components` and read input files."""
        pass

    @abstractmethod
    def start(self):
        """main body of tool (override in subclass). This is automatically
        called after `initialize()` when the `run()` is called.
        """
        pass

    @abstractmethod
    def finish(self):
        """finish up (override in subclass). This is called automatically
        after `start()` when `run()` is called."""
        self.log.info("Goodbye")

    def write_result(self, document):
        """
        Write a JSON-compatible result document to `output` (or stdout)

        Parameters
        ----------
        document: dict
            result, already reduced to JSON types
        """
        text = json.dumps(document, indent=2)
        if self.output:
            with open(self.output, 'w') as outfile:
                outfile.write(text + '\n')
            Provenance().add_output_file(self.output, role='result')
        else:
            sys.stdout.write(text + '\n')

    def run(self, argv=None):
        """Run the tool. This automatically calls `initialize()`,
        `setup()`, `start()` and `finish()`

        Parameters
        ----------

        argv: list(str)
            command-line arguments, or None to get them
            from sys.argv automatically

        Returns
        -------
        int:
            the exit code
        """
        exit_code = EXIT_SUCCESS
        try:
            try:
                self.initialize(argv)
            except SystemExit as err:
                # traitlets exits on bad command lines and after --help
                if err.code in (None, 0):
                    return EXIT_SUCCESS
                raise ToolConfigurationError(
                    "invalid command line: {}".format(argv))
            self.log.info("Starting: {}".format(self.name))
            self.log.debug("CONFIG: {}".format(self.config))
            Provenance().start_activity(self.name)
            Provenance().add_config(self.config)
            self.setup()
            self.is_setup = True
            self.start()
            self.finish()
            self.log.info("Finished: {}".format(self.name))
            Provenance().finish_activity(activity_name=self.name)
        except (ToolConfigurationError, TraitError) as err:
            self.log.error('{}.  Use --help for more info'.format(err))
            self._close_activity('error')
            exit_code = EXIT_DOMAIN_ERROR
        except DModError as err:
            self.log.error('{}: {}'.format(err.__class__.__name__, err))
            self._close_activity('error')
            exit_code = EXIT_DOMAIN_ERROR
        except KeyboardInterrupt:
            self.log.warning("WAS INTERRUPTED BY CTRL-C")
            self._close_activity('interrupted')
            exit_code = EXIT_INTERNAL_ERROR
        except Exception as err:
            self.log.exception('Caught unexpected exception: {}'.format(err))
            self._close_activity('error')
            exit_code = EXIT_INTERNAL_ERROR
        finally:
            for activity in Provenance().finished_activities:
                output_str = ' '.join([x['url'] for x in activity.output])
                self.log.debug("Output: %s", output_str)

            self.log.debug("PROVENANCE: '%s'", Provenance().as_json(indent=3))

        return exit_code

    def _close_activity(self, status):
        if self.name in Provenance().active_activity_names:
            Provenance().finish_activity(activity_name=self.name,
                                         status=status)

    @property
    def version_string(self):
        """ a formatted version string with version, release, and git hash"""
        return "{}".format(version)
