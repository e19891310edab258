"""Shared pytest configuration.

Hypothesis runs derandomized so that the suite is bit-for-bit repeatable:
this repository's whole point is reproducible verification, and a test run
that can shrink to a different example on every invocation would undercut
that.  The deadline is disabled because the exact-rational lattice laws do
honest Fraction arithmetic and occasionally blow past the default 200 ms on
slow machines.
"""
from hypothesis import settings

settings.register_profile("repeatable", deadline=None, derandomize=True)
settings.load_profile("repeatable")
