"""
Workbench feature files.

This directory contains Gherkin (.feature) files for the CLI exit status contract.
"""
