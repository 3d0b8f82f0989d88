# vim:tabstop=4:softtabstop=4:shiftwidth=4:textwidth=79:expandtab:autoindent:smartindent:fileformat=unix:

import logging
import numpy as np
from typing             import Dict, Tuple
from ..utils.constants  import LOGGER_NAME
from ..utils.exceptions import ConfigError

logger = logging.getLogger(LOGGER_NAME)

FNV_OFFSET_BASIS = 0xcbf29ce484222325
FNV_PRIME = 0x100000001b3
MASK_64 = 0xFFFFFFFFFFFFFFFF

def fnv1a64(coords: Tuple[int, ...]) -> int:
    """64-bit FNV-1a over the little-endian int64 serialization of coords"""
    h = FNV_OFFSET_BASIS
    for byte in np.asarray(coords, dtype='<i8').tobytes():
        h ^= byte
        h = (h * FNV_PRIME) & MASK_64
    return h

class IndexHashTable:
    """
    Maps tile coordinate tuples to feature indices

    Unseen tuples get consecutive indices until the table is full; after
    that they fall back to a hash modulo the capacity.
    """

    def __init__(self, capacity: int):
        if capacity < 1:
            raise ConfigError(f"Index hash table capacity must be positive, got {capacity}")
        self.capacity = capacity
        self.overfull_count = 0
        self._table: Dict[Tuple[int, ...], int] = {}

    def __len__(self) -> int:
        return len(self._table)

    @property
    def full(self) -> bool:
        return len(self._table) >= self.capacity

    def index_allocate(self, coords: Tuple[int, ...]) -> int:
        """Return the index for coords, allocating one on first sight"""
        index = self._table.get(coords)
        if index is not None:
            return index

        if self.full:
            if self.overfull_count == 0:
                logger.warning(f"Index hash table full at {self.capacity} entries, allowing collisions")
            self.overfull_count += 1
            return fnv1a64(coords) % self.capacity

        index = len(self._table)
        self._table[coords] = index
        return index
