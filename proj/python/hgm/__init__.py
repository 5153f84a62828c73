"""Hamming graph metrics: exact-k reachability tensors, per-scale Hamming
distance distributions, spectral summaries, graph-to-graph tensor metrics,
MinHash sketches and a temporal extension."""

try:
    from ._hgm import *  # noqa: F401,F403  (installed wheel layout)
except ImportError:  # in-tree CMake build puts _hgm next to the package
    from _hgm import *  # noqa: F401,F403

from ._version import __version__  # noqa: F401
