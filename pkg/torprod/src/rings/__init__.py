from .rings import *
