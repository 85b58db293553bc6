"""
Tests package.

One module per layer: partitions, Schur ring, special pairs, characters,
decompositions, verifications and the command line.
"""
