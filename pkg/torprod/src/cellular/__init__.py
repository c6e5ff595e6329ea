from .cellular import *
