"""hyproj - hyperbolic projections of holomorphic orbits in the right half-plane."""

__version__ = "0.1.0"
