"""kwall: exact-arithmetic K-stability wall computations for log Fano surface pairs."""

__version__ = "0.1.0"
