"""Exact computations with generic cocycles of finite-dimensional Hopf algebras."""

__version__ = "0.1.0"
