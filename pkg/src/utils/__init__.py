"""
Programación lineal exacta y álgebra lineal sobre racionales
"""
