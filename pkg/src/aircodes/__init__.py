"""Index codes from AIR matrices for ring-shaped interference patterns."""
