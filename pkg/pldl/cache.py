"""
Caching for automata. Most automata in |pldl| are explored lazily: successor
sets are computed on demand and stored on the automaton instance, so an
automaton that is dropped takes its cache with it.
"""
from functools import wraps

_ATTRIBUTE = '_memoized_results'


def memoize_method(method):
    """Caches the results of ``method`` per instance and per arguments."""
    @wraps(method)
    def wrapper(self, *args, **kwargs):
        results = self.__dict__.setdefault(_ATTRIBUTE, {}).setdefault(method, {})
        key = args if not kwargs else (args, tuple(sorted(kwargs.items())))
        if key not in results:
            results[key] = method(self, *args, **kwargs)
        return results[key]
    return wrapper


def clear_memoized(obj):
    """Drops everything :func:`memoize_method` stored on ``obj``."""
    obj.__dict__.pop(_ATTRIBUTE, None)
