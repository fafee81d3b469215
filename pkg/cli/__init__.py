"""Command-line front end: census, constants, mnc and verify."""
