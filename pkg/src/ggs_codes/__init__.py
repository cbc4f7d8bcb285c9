"""One-point AG codes on the GGS maximal curve."""
