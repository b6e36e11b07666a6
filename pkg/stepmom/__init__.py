"""Step momentum spectra

Bound states of a quantum particle whose momentum operator carries a Hermitian
or PT-symmetric step, trapped in an infinite square well.

"""

from .core import *
from .characteristic import hermitian_char, pt_char, determinant_char
from .spectrum import solve_spectrum, critical_mu0, table_rows
from .wavefunction import eigenfunction, probability_density
from .zmap import mu0_from_znojil, znojil_from_mu0

__author__ = "The stepmom developers"
__license__ = "GPLv3"
__status__ = "Beta"
__version__ = '0.3.0'
