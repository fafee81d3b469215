"""Leading constants of the asymptotic formulas, with error bounds."""
