__author__ = "causets contributors"
__credits__ = ['causets contributors']
__license__ = "MIT"
__version__ = "0.1.0dev"
__maintainer__ = "causets contributors"
__email__ = None
__status__ = "Development"
__source__ = "https://en.wikipedia.org/wiki/Causal_sets"

import datetime

__created__ = datetime.datetime(2026, 9, 28)
__updated__ = datetime.datetime(2026, 10, 17)

from causets.families import FAMILIES, TREES, EXHAUSTIONS
from causets.measures import MEASURES
