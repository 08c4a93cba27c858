import os
import sys

module_dir = os.environ.get("SPHLIE_MODULE_DIR")
if module_dir and module_dir not in sys.path:
    sys.path.insert(0, module_dir)
source_dir = os.environ.get("SPHLIE_SOURCE_DIR")
if source_dir:
    pkg_dir = os.path.join(source_dir, "python")
    if pkg_dir not in sys.path:
        sys.path.insert(0, pkg_dir)
