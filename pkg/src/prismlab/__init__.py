"""prismlab: exact-arithmetic verification of truncated Witt-vector,
formal-group and q-deformation identities, with a CLI harness."""

__version__ = "0.1.0"
