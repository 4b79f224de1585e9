"""Python bindings for the AgriOnt knowledge-graph toolkit."""

import os
import sys

# In-tree test runs point AGRIONT_EXT_DIR at the CMake build directory that
# holds the compiled extension; installed wheels ship _core next to this file.
_ext_dir = os.environ.get("AGRIONT_EXT_DIR")
if _ext_dir and _ext_dir not in sys.path:
    sys.path.insert(0, _ext_dir)

try:
    from _core import *  # type: ignore[import-not-found]  # noqa: F401,F403
    from _core import DEFAULT_NAMESPACE, Graph  # noqa: F401
except ImportError:
    from ._core import *  # noqa: F401,F403
    from ._core import DEFAULT_NAMESPACE, Graph  # noqa: F401

__version__ = "0.1.0"
