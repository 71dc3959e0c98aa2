"""
Dyck words, Dyck matrices and ordered Eulerian digraphs - Source Package
"""

__version__ = "1.0.0"
