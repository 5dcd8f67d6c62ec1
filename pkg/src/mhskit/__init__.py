"""
MHSKit - exact computations with graded-polarized mixed Hodge structures
"""

__version__ = '0.1.0'
