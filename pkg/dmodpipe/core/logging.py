import logging
import sys

__all__ = ['ColoredFormatter']

_RESET_SEQ = "\033[0m"
_COLOR_SEQ = "\033[1;%dm"
_BLACK, _RED, _GREEN, _YELLOW, _BLUE, _MAGENTA, _CYAN, _WHITE = range(8)

_LEVEL_COLORS = {
    'WARNING': _YELLOW,
    'INFO': _GREEN,
    'DEBUG': _BLUE,
    'CRITICAL': _MAGENTA,
    'ERROR': _RED,
}


class ColoredFormatter(logging.Formatter):
    """
    logging.Formatter used by all `dmodpipe.core.Tool` instances.

    Adds the ``highlevel`` record attribute expected by the traitlets
    Application log format and colors the level name. Colors are only
    emitted when stderr is a terminal, so redirected logs stay plain text
    next to the JSON results written on stdout.
    """
    highlevel_limit = logging.WARN
    highlevel_format = " %(levelname)s |"

    def __init__(self, fmt=None, datefmt=None, style='%', use_color=None):
        super().__init__(fmt=fmt, datefmt=datefmt, style=style)
        if use_color is None:
            use_color = hasattr(sys.stderr, 'isatty') and sys.stderr.isatty()
        self.use_color = use_color

    def format(self, record):
        levelname = record.levelname
        if record.levelno >= self.highlevel_limit:
            record.highlevel = self.highlevel_format % record.__dict__
        else:
            record.highlevel = ""

        if self.use_color and levelname in _LEVEL_COLORS:
            record.levelname = (_COLOR_SEQ % (30 + _LEVEL_COLORS[levelname])
                                + levelname + _RESET_SEQ)
        try:
            return super().format(record)
        finally:
            # records are shared between handlers
            record.levelname = levelname
