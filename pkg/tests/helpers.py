import numpy as np

def same_features(a, b):
    """Two feature vectors encode the same dense vector"""
    return a.length == b.length and np.array_equal(a.to_dense(), b.to_dense())

def buffer_contents(buffer):
    """Stored transitions of a ReplayBuffer, oldest first"""
    if buffer.inserted <= buffer.capacity:
        return list(buffer._items[:buffer.inserted])
    start = buffer.inserted % buffer.capacity
    return buffer._items[start:] + buffer._items[:start]
