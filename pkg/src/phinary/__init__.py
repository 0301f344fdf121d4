"""Exact arithmetic, sequences, trees and figures for the phinary numbers."""
from .codec import PhiDigits, RawDigits, decode, encode_natural, encode_standard, normalize
from .core import PHI, PSI, PhiInt, QuadRat, fib, parse_phi, phi_pow
from .diatomic import fib_diatomic_nat, fib_diatomic_phi, fib_mult, hyperbinary, phi_circ
from .errors import DomainError, NotPhinary, PhinaryError
from .ordinal import Parity, dagger, hook, parity, predecessor, rank, star, successor, unrank

__version__ = "0.1.0"
