"""Exact verification engine for characteristic-number computations on
positive quaternion Kähler manifolds."""

__version__ = "0.1.0"
