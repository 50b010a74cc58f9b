"""
This submodule contains the statement classes.

Each class checks one result over a catalog;
they are registered by id in the top level package.
"""
