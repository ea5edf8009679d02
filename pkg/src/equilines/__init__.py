"""54 equiangular lines in R^18 from the extended binary Golay code,
with exact integer certificates for every claim."""

__version__ = "0.1.0"
