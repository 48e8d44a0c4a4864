"""Shared tools used across the nodegames package: the exception
hierarchy, seed derivation for reproducible ensembles and logging setup
for the command line front end.

"""
