from .char_func import *
from .standard import simplex_char, product_char, hirzebruch_char, connected_sum_char, prism_char
