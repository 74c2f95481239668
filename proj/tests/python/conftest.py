import os
import sys

# Build-tree layout: the compiled extension lives in the CMake build dir and
# the package source in python/. An installed wheel needs neither path.
_module_dir = os.environ.get("KDELTA_MODULE_DIR")
_pkg_dir = os.environ.get("KDELTA_PKG_DIR")
for _p in (_module_dir, _pkg_dir):
    if _p and _p not in sys.path:
        sys.path.insert(0, _p)
