"""
Project-wide tests for the workbench.

This package contains cross-package pipelines: instances generated by one
component, kernelized and decided by others.
"""
