"""
Shared library for workbench components.

Provides the error hierarchy, logging setup and the run-history database.
"""
