"""Test package for dc-semigroup."""
