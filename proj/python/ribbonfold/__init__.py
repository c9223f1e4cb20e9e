try:
    from ._ribbonfold import *  # noqa: F401,F403
except ImportError:  # build-tree layout, module next to the tests
    from _ribbonfold import *  # noqa: F401,F403
