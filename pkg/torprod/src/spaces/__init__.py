from .spaces import *
