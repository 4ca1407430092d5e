"""colorforge: exact verification and construction engine for graded color
algebras twisted by two commuting maps."""

__version__ = "0.1.0"
