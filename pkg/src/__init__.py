"""
SSVE-PY - Small-Set Vertex Expansion Toolkit
"""
__version__ = "1.0.0"
