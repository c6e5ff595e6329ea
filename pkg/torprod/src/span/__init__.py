from .euler import *
from .span import *
