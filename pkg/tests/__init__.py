"""
Pruebas unitarias, de integración (CLI) y de aceptación con semillas
"""
