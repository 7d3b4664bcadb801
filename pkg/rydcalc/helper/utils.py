"""
@author: rydcalc contributors

Errors, configuration and small shared utilities.
"""
import os
import json
import warnings

from multiprocessing import Pool

############################################################################################
### Errors
############################################################################################

class ShapeError(ValueError):
    """
    Raised for shape text that does not parse, or for shapes that are not valid for their family.
    """
    pass

class FamilyMismatch(ValueError):
    """
    Raised when shapes of different families are combined.
    """
    pass

############################################################################################
### Configuration
############################################################################################

SETUP_DIR = os.path.join(os.path.dirname(os.path.abspath(__file__)), '..', '..', 'data', 'setups')

def load_setup(setup_id = '', setup_dir = None):
    """
    Loads a verification setup from ``data/setups/<setup_id>.json``.

    A setup maps suite names to a list of runs, each run being a dict with keys ``family`` and ``n``
    (``n`` may be a list).
    """
    if setup_dir is None:
        setup_dir = SETUP_DIR

    file = os.path.join(setup_dir, setup_id + '.json')
    with open(file) as f:
        setup = json.load(f)

    return setup

def get_threads(default = 1):
    """
    Number of worker processes, read from ``RYD_THREADS``.
    """
    raw = os.environ.get('RYD_THREADS')
    if raw is None or raw == '':
        return default

    try:
        threads = int(raw)
    except ValueError:
        raise ValueError(f"RYD_THREADS must be a positive integer, got {raw!r}")

    if threads < 1:
        raise ValueError(f"RYD_THREADS must be a positive integer, got {raw!r}")

    cpus = os.cpu_count() or 1
    if threads > cpus:
        warnings.warn(f"RYD_THREADS={threads} exceeds the number of available cpus ({cpus}).")

    return threads

def parallel_map(func, args, threads = None):
    """
    Maps ``func`` over ``args``, in a process pool if more than one thread is configured.
    Results keep the order of ``args``.
    """
    if threads is None:
        threads = get_threads()

    args = list(args)
    if threads == 1 or len(args) <= 1:
        return [func(a) for a in args]

    with Pool(threads) as pool:
        res = pool.map(func, args)

    return res
