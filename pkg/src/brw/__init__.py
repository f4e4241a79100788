"""brw: exact computations with unit groups of split basic algebras over prime fields."""

__version__ = "0.1.0"
