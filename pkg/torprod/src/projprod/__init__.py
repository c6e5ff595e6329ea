from .algebra import *
from .tensor import *
from .betti import *
