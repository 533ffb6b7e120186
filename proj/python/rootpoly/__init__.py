from ._rootpoly import *  # noqa: F401,F403
