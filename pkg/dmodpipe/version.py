"""
Version identification.

Inside a git checkout the version is derived from ``git describe`` (tags
look like ``v0.3.0``; a checkout 12 commits past it reports
``0.3.0.post12+git1a2b3c4``). Outside of git, the version cached at
packaging time in ``_version_cache.py`` is used, and ``FALLBACK_VERSION``
when neither is available.
"""
from os import devnull, path
from subprocess import CalledProcessError, check_output

__all__ = ('get_version', 'update_release_version')

CURRENT_DIRECTORY = path.dirname(path.abspath(__file__))
VERSION_FILE = path.join(CURRENT_DIRECTORY, '_version_cache.py')
FALLBACK_VERSION = '0.1.0'


def get_git_describe_version(abbrev=7):
    """output of ``git describe`` for this package, None if unavailable"""
    arguments = ['git', 'describe', '--tags', '--abbrev={}'.format(abbrev)]
    try:
        with open(devnull, 'w') as fnull:
            described = check_output(arguments, cwd=CURRENT_DIRECTORY,
                                     stderr=fnull)
    except (OSError, CalledProcessError):
        return None
    return described.decode('ascii').strip() or None


def format_git_describe(git_str, pep440=False):
    """
    turn ``v0.3.0-12-g1a2b3c4`` into ``0.3.0.post12+git1a2b3c4``
    (or ``0.3.0.post12`` if `pep440` is set)
    """
    tag, _, rest = git_str.partition('-')
    if rest:
        n_commits, _, githash = rest.partition('-')
        formatted = '{}.post{}'.format(tag, n_commits)
        if not pep440 and githash:
            formatted += '+git' + githash.lstrip('g')
    else:
        formatted = tag
    return formatted[1:] if formatted.startswith('v') else formatted


def read_release_version():
    try:
        from ._version_cache import version
    except ImportError:
        return FALLBACK_VERSION
    return version or FALLBACK_VERSION


def update_release_version(pep440=False):
    """store the current version in the version cache (called by setup.py)"""
    version = get_version(pep440=pep440)
    with open(VERSION_FILE, 'w') as outfile:
        outfile.write("version='{}'\n".format(version))


def get_version(pep440=False):
    """
    Parameters
    ----------
    pep440: bool
        if True, leave the git hash off so the string is a valid release
        version
    """
    raw_git_version = get_git_describe_version()
    if raw_git_version is None:
        return read_release_version()
    return format_git_describe(raw_git_version, pep440=pep440)


if __name__ == '__main__':
    print(get_version())
