"""Translation quivers, mesh categories and their checkable invariants."""

__version__ = "0.1.0"
