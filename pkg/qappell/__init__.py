"""
Exact-arithmetic toolkit for deformed q-Appell polynomial families.
"""
__version__ = "0.1.0"
