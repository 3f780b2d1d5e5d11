"""Small LRU caches for canonical-form-keyed memoization."""

from __future__ import annotations

from collections import OrderedDict


class LruCache:
    def __init__(self, capacity):
        self.capacity = capacity
        self._data = OrderedDict()
        self.hits = 0
        self.misses = 0

    def get(self, key):
        try:
            value = self._data[key]
        except KeyError:
            self.misses += 1
            return None
        self._data.move_to_end(key)
        self.hits += 1
        return value

    def put(self, key, value):
        self._data[key] = value
        self._data.move_to_end(key)
        while len(self._data) > self.capacity:
            self._data.popitem(last=False)

    def clear(self):
        self._data.clear()
        self.hits = 0
        self.misses = 0

    def __len__(self):
        return len(self._data)


_REGISTRY = []


def register_cache(capacity):
    cache = LruCache(capacity)
    _REGISTRY.append(cache)
    return cache


def clear_all_caches():
    for cache in _REGISTRY:
        cache.clear()
