"""
Tests package for the Dyck word / Dyck matrix bijection
"""
