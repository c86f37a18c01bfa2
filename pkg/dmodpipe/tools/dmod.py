"""
The ``dmod`` command: dispatches ``dmod <subcommand> [options]`` to the
tool of the subcommand.
"""
import sys
from textwrap import TextWrapper

from .utils import SUBCOMMANDS, get_all_descriptions, get_subcommand

__all__ = ['main', 'usage']

#: exit code of a malformed command line
EXIT_USAGE = 2


def usage():
    """ the usage text listing every subcommand """
    wrapper = TextWrapper(width=80, subsequent_indent=' ' * 18)
    lines = ['usage: dmod <subcommand> [options] [input.json]', '',
             'subcommands:']
    for name, text in get_all_descriptions().items():
        lines.append(wrapper.fill('  {:<14s}  {}'.format(name, text)))
    lines += ['', "'dmod <subcommand> --help' lists the options of a subcommand"]
    return '\n'.join(lines)


def main(argv=None):
    if argv is None:
        argv = sys.argv[1:]
    if not argv or argv[0] in ('-h', '--help', 'help'):
        sys.stderr.write(usage() + '\n')
        sys.exit(EXIT_USAGE)

    name = argv[0]
    tool_class = get_subcommand(name)
    if tool_class is None:
        sys.stderr.write("dmod: unknown subcommand '{}', choose from {}\n"
                         .format(name, ', '.join(SUBCOMMANDS)))
        sys.exit(EXIT_USAGE)
    sys.exit(tool_class().run(argv[1:]))


if __name__ == '__main__':
    main()
