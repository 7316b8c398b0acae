"""Self-dual binary codes, cyclic 2-group module structure and automorphism search."""

__version__ = "0.1.0"
