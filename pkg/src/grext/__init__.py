"""grext: exact-arithmetic calculator for automorphism groups of dense
finitely generated translation subgroups and classification of the
associated groupoid extensions over finite nerves."""

__version__ = "0.1.0"
