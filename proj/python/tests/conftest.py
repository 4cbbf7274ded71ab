import os
import sys

# Under ctest, import the freshly built module rather than an installed copy.
tree = os.environ.get("PADICFROB_BUILD_TREE")
if tree:
    sys.meta_path[:] = [f for f in sys.meta_path if "padicfrob" not in type(f).__module__]
    sys.path.insert(0, tree)
