"""Hard bounds of the exhaustive enumerations."""

# Binary computation trees over eight leaves number 13!! = 135135 unordered
# shapes; one more leaf multiplies that by fifteen.
SPECTRUM_MAX_LEAVES = 8

# Spectrum totals that agree to this many decimal places are one total.
TOTAL_DECIMALS = 9

# Decimal places of every Bits value the command line prints.
BITS_DECIMALS = 6
