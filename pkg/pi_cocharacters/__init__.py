"""
Cocharacter sequences of E, E0, G, UT2(F) and UT2(E) computed from truncated Schur series.
"""

__version__ = "1.0.0"
