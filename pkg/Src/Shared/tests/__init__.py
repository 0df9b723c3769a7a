"""
Tests for shared library components.
"""

