"""
Scripts package.

Holds the command-line front end.
"""
