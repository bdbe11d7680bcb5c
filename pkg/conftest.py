import os
import sys

from hypothesis import settings

# root-level packages (utils, geometry, counting, ...) are imported by name
sys.path.insert(0, os.path.dirname(os.path.abspath(__file__)))

settings.register_profile("cevian", deadline=None, max_examples=50)
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "cevian"))
