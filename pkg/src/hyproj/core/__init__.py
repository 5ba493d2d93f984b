"""Numerical core: geometry, curves, projection and dynamics."""
