"""Exact verification of Capelli-type determinant identities."""

try:
    from . import _capelli as _impl
    from ._capelli import *  # noqa: F401,F403
except ImportError:  # flat build tree: the extension sits next to the package
    import _capelli as _impl
    from _capelli import *  # noqa: F401,F403

__version__ = "1.0.0"
__all__ = [name for name in dir(_impl) if not name.startswith("_")]
