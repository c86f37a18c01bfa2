"""
Run records. Every tool run is an *activity*: its configuration, the files
it read and wrote, the truncation its results were computed at, the
machine it ran on and how long it took.
"""

import json
import logging
import platform
import sys
import uuid
from contextlib import contextmanager
from os.path import abspath

import numpy as np
import psutil
import sympy
import traitlets

import dmodpipe
from .support import Singleton

log = logging.getLogger(__name__)

__all__ = ['Provenance']


def _now_utc():
    return np.datetime64('now', 'ms')


class Provenance(metaclass=Singleton):
    """
    Stack of running activities plus the list of finished ones.

    `start_activity` pushes, `finish_activity` pops. Files, configuration
    and precision are always attached to the innermost running activity;
    if none runs, a default one named after the interpreter is started.
    """

    def __init__(self):
        self._activities = []
        self._finished_activities = []

    def start_activity(self, activity_name=sys.executable):
        activity = _ActivityProvenance(activity_name)
        activity.start()
        self._activities.append(activity)
        log.debug("started activity: {}".format(activity_name))

    def add_input_file(self, filename, role=None):
        """
        Register a file read by the current activity.

        Parameters
        ----------
        filename: str
            path of the file
        role: str
            what the file is used as, e.g. 'module' or 'formal type'
        """
        self.current_activity.register_input(abspath(filename), role=role)
        log.debug("{}: input {} ({})".format(self.current_activity.name,
                                             filename, role))

    def add_output_file(self, filename, role=None):
        self.current_activity.register_output(abspath(filename), role=role)
        log.debug("{}: output {} ({})".format(self.current_activity.name,
                                              filename, role))

    def add_config(self, config):
        self.current_activity.register_config(config)

    def add_precision(self, precision):
        """
        Record the truncation the current activity's results are valid up
        to; None for results that are exact.
        """
        self.current_activity.register_precision(precision)

    def finish_activity(self, status='completed', activity_name=None):
        activity = self._activities.pop()
        if activity_name is not None and activity_name != activity.name:
            raise ValueError("cannot finish activity '{}' while '{}' is running"
                             .format(activity_name, activity.name))
        activity.finish(status)
        self._finished_activities.append(activity)
        log.debug("finished activity: {} ({})".format(activity.name, status))

    @contextmanager
    def activity(self, name):
        """ run the body as activity ``name``; errors mark it 'error' """
        self.start_activity(name)
        try:
            yield
        except BaseException:
            self.finish_activity(status='error', activity_name=name)
            raise
        self.finish_activity(activity_name=name)

    @property
    def current_activity(self):
        if not self._activities:
            log.debug("no running activity, starting a default one")
            self.start_activity()
        return self._activities[-1]

    @property
    def finished_activities(self):
        return self._finished_activities

    @property
    def provenance(self):
        return [a.provenance for a in self._finished_activities]

    def as_json(self, **kwargs):
        """ finished activities as JSON, kwargs go to `json.dumps` """
        return json.dumps(self.provenance, default=str, **kwargs)

    @property
    def active_activity_names(self):
        return [a.name for a in self._activities]

    @property
    def finished_activity_names(self):
        return [a.name for a in self._finished_activities]

    def clear(self):
        self._activities = []
        self._finished_activities = []


class _ActivityProvenance:
    """ the record of one activity; use it through `Provenance` """

    def __init__(self, activity_name=sys.executable):
        self.name = activity_name
        self._t_start = None
        self._prov = {
            'activity_name': activity_name,
            'activity_uuid': str(uuid.uuid4()),
            'start': {},
            'stop': {},
            'system': {},
            'input': [],
            'output': [],
            'precision': None,
        }

    def start(self):
        self._t_start = _now_utc()
        self._prov['start'].update(_sample_cpu_and_memory(self._t_start))
        self._prov['system'].update(_get_system_provenance())

    def register_input(self, url, role=None):
        self._prov['input'].append(dict(url=url, role=role))

    def register_output(self, url, role=None):
        self._prov['output'].append(dict(url=url, role=role))

    def register_config(self, config):
        self._prov['config'] = config

    def register_precision(self, precision):
        self._prov['precision'] = precision

    def finish(self, status='completed'):
        t_stop = _now_utc()
        self._prov['stop'].update(_sample_cpu_and_memory(t_stop))
        self._prov['status'] = status
        seconds = (t_stop - self._t_start) / np.timedelta64(1, 's')
        self._prov['duration_min'] = float(seconds) / 60.0

    @property
    def input(self):
        return self._prov['input']

    @property
    def output(self):
        return self._prov['output']

    @property
    def provenance(self):
        return self._prov


def _get_system_provenance():
    """ everything about the run that does not change while it lasts """
    bits, linkage = platform.architecture()
    return dict(
        dmodpipe_version=dmodpipe.__version__,
        arithmetic=dict(
            sympy=sympy.__version__,
            numpy=np.__version__,
            traitlets=traitlets.__version__,
        ),
        executable=sys.executable,
        platform=dict(
            architecture_bits=bits,
            architecture_linkage=linkage,
            machine=platform.machine(),
            node=platform.node(),
            system=platform.system(),
            release=platform.release(),
            num_cpus=psutil.cpu_count(),
            boot_time=str(np.datetime64(int(psutil.boot_time()), 's')),
        ),
        python=dict(
            version=platform.python_version(),
            implementation=platform.python_implementation(),
        ),
        arguments=sys.argv,
        start_time_utc=str(_now_utc()),
    )


def _sample_cpu_and_memory(time_utc):
    return dict(
        time_utc=str(time_utc),
        memory_rss=psutil.Process().memory_info().rss,
        cpu_percent=psutil.cpu_percent(interval=None),
    )
