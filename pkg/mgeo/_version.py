"""Version of the mgeo package."""

__version__ = "0.1.0"
