"""Main terms of the counting functions and their comparison with census data."""
