"""
Tests for the workbench command-line front end.
"""
