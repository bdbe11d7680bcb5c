# init for utils folder containing app_exceptions.py, decorators.py, environment.py, globals.py, logger_config.py, and orchestrators.py
from .app_exceptions import *
from .decorators import *
from .orchestrators import ordered_map, resolve_workers
from .environment import *
from .globals import *

from .logger_config import logger, log_list, set_log_level
