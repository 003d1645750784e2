from ._classes import *
from .config_utility import settings
from .corpus_utility import best_match
from .print_utility import *
