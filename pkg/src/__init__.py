"""
Dualidad de Fenchel discreta para funciones integralmente convexas
"""
__version__ = "0.1.0"
