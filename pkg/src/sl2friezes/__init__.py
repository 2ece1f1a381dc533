"""Exact SL2-tilings, friezes of quivers, linear recursions and Dynkin classification."""

__version__ = "0.1.0"
