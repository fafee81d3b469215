"""Finite abelian group arithmetic for the multiplicative groups (Z/nZ)^x."""
