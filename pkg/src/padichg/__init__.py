"""p-adic special functions and hypergeometric series with logarithmic terms."""
