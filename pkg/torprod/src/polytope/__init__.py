from .polytope import *
from .generators import point, simplex, cube, square, prism, product
