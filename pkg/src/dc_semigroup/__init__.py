"""dc-semigroup - smallest multiplicative semigroups closed under digit count."""

__version__ = "0.1.0"
