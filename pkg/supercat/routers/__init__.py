"""
Super Catalan Verifier - Routers Package
"""
