"""Interactive beam-alignment design under feedback delay."""

__version__ = "0.1.0"
