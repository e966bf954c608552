import sys
from pathlib import Path

from hypothesis import settings

# Exact-arithmetic examples can be individually slow (big-integer growth),
# and reproducibility matters more than fresh randomness here.
settings.register_profile("exact", deadline=None, derandomize=True)
settings.load_profile("exact")

sys.path.insert(0, str(Path(__file__).parent))
