"""
Super Catalan Verifier - Application Package
"""
__version__ = "1.0.0"
