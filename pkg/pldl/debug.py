"""
Debug output of the compilation pipeline. Nothing is printed unless a debug
function is installed with :func:`pldl.set_debug_function`.

The pipeline reports three kinds of messages: notices (``dbg`` and the
automaton sizes of :func:`size`), warnings and timings (:func:`speed`, the
seconds since the last :func:`reset_time`). Stages opened with
:func:`increase_indent_cm` indent everything reported inside them.
"""
import os
import time
from contextlib import contextmanager
from typing import Callable, Optional

try:
    if os.name == 'nt':
        # colorama and the Windows console do not agree on the stream.
        raise ImportError
    import colorama  # type: ignore[import]
    from colorama import Fore  # type: ignore[import]
except ImportError:
    colorama = None  # type: ignore[assignment]
    Fore = None  # type: ignore[assignment,misc]

enable_speed = False
enable_warning = False
enable_notice = False

# callback, interface: color, str
debug_function: Optional[Callable[[str, str], None]] = None

_colorama_ready = False
_indent = 0
_start_time = time.time()


def _init_colorama():
    """Only touches stdout once something is actually printed."""
    global _colorama_ready
    if _colorama_ready or colorama is None:
        return
    # pytest replaces the stream, colorama must not restore it at exit.
    colorama.initialise.atexit_done = True
    try:
        colorama.init(strip=False)
    except Exception:
        pass
    _colorama_ready = True


def _emit(enabled, color, text):
    if debug_function is not None and enabled:
        debug_function(color, ' ' * _indent + text)


def reset_time():
    """Starts a new run: timings are relative to now, the indent is cleared."""
    global _start_time, _indent
    _start_time = time.time()
    _indent = 0


@contextmanager
def increase_indent_cm(title=None, color='MAGENTA'):
    global _indent
    if title:
        dbg('Start: ' + title, color=color)
    _indent += 1
    try:
        yield
    finally:
        _indent -= 1
        if title:
            dbg('End: ' + title, color=color)


def dbg(message, *args, color='GREEN'):
    """Prints a notice if notices are enabled. Arguments are ``repr``-ed."""
    _emit(enable_notice, color, 'dbg: ' + message % tuple(repr(a) for a in args))


def warning(message, *args):
    _emit(enable_warning, 'RED', 'warning: ' + message % tuple(repr(a) for a in args))


def speed(stage):
    _emit(enable_speed, 'YELLOW', 'speed: %s %.3fs' % (stage, time.time() - _start_time))


def size(stage, count, unit='states'):
    """
    Reports the size of an intermediate automaton or graph, e.g.
    ``size('nba', 12)`` prints ``nba: 12 states``.
    """
    _emit(enable_notice, 'CYAN', '%s: %s %s' % (stage, count, unit))


def print_to_stdout(color, str_out):
    """Prints a message, colored by the ``colorama.Fore`` name ``color``."""
    _init_colorama()
    if Fore is None:
        print(str_out)
    else:
        print(getattr(Fore, color) + str_out + Fore.RESET)
