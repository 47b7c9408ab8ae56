"""
Módulos de la librería: funciones, convexidad integral, subdiferenciales,
dualidad de Fenchel y funciones bisubmodulares
"""
