from collections.abc import Mapping


class LazyMap(Mapping):
    """A read-only mapping whose values are computed (and cached) on first access.

    ``keys`` is optional; without it the mapping cannot be iterated, which is
    the point for families indexed by an unbounded collection of objects.
    With ``cache=False`` keys are never hashed (hashing a lazy set map
    tabulates it).
    """

    def __init__(self, fn, keys=None, cache=True):
        self._fn = fn
        self._keys = None if keys is None else tuple(keys)
        self._cache = {} if cache else None

    def __getitem__(self, key):
        if self._cache is None:
            return self._fn(key)
        try:
            return self._cache[key]
        except KeyError:
            pass
        except TypeError:
            return self._fn(key)
        value = self._fn(key)
        self._cache[key] = value
        return value

    def __iter__(self):
        if self._keys is None:
            raise TypeError("LazyMap over an open key space is not iterable")
        return iter(self._keys)

    def __len__(self):
        if self._keys is None:
            raise TypeError("LazyMap over an open key space has no length")
        return len(self._keys)

    def __contains__(self, key):
        if self._keys is not None:
            return key in self._keys
        try:
            self[key]
        except KeyError:
            return False
        return True

    def materialize(self):
        return {k: self[k] for k in self}


def short(x, width=60):
    s = repr(x)
    return s if len(s) <= width else s[: width - 3] + "..."
