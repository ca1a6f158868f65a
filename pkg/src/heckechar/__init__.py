"""Exact character values of type-A Iwahori-Hecke algebras."""
