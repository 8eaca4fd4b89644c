try:
    from ._knotpairs import *  # noqa: F401,F403
except ImportError:  # pragma: no cover - build-tree layout
    from _knotpairs import *  # noqa: F401,F403
