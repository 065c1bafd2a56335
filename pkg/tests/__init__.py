from .test_lattice import test_sl2_sending_to_e1
from .test_moment import test_normal_chain
