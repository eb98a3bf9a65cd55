"""Hypothesis profile: deterministic runs, no per-example deadline."""

from hypothesis import settings

settings.register_profile("suite", deadline=None, derandomize=True)
settings.load_profile("suite")
