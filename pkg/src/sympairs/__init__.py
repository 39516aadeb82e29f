"""Decision procedures for proper SL(2,R)-actions on semisimple symmetric spaces."""

__version__ = "0.1.0"
