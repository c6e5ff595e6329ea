from .numbers import *
from .families import *
from .verify import *
