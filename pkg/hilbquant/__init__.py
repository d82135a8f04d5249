"""Exact quantum multiplication by divisors on Hilbert schemes of points of A_n surfaces."""
from .divisors import Divisor, DivisorOperators
from .errors import HilbQuantError
from .pipeline import QuantumPipeline

__all__ = ['Divisor', 'DivisorOperators', 'HilbQuantError', 'QuantumPipeline']
